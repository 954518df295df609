"""
Module des automates finis
==========================
Alphabets, NFA avec transitions vides (ε-NFA) et les parcours de graphes
dont les autres modules ont besoin.

Fonctions principales :
- trim : ne garde que les états utiles (accessibles et co-accessibles)
- remove_epsilon / prepare : normalisation avant les constructions produit
- accepts_at_least_two_words : test « au moins deux mots »
- shortest_two_words : les deux premiers mots en ordre longueur-lexicographique
- augment_with_identity_loops : ajoute une boucle ε sur chaque état (A^ε)
- intersect : produit de deux automates (intersection des langages)
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from constants import DEFAULT_SETTINGS, EPSILON, LIMITS
from exceptions import TwoWordsRequiredError
from utils import Deadline, PeriodicCheck, check_deadline

logger = logging.getLogger(__name__)

Word = Union[str, Tuple[str, ...]]
Transition = Tuple[int, str, int]


@dataclass(frozen=True)
class Alphabet:
    """
    Alphabet ordonné (ordre d'insertion)

    Args:
        symbols: Symboles atomiques; une chaîne "ab" donne les symboles 'a' et 'b'
    """
    symbols: Tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, 'symbols', symbols)
        if not symbols:
            raise ValueError("l'alphabet doit contenir au moins un symbole")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"symboles en double dans l'alphabet: {symbols}")
        if EPSILON in symbols:
            raise ValueError("le symbole vide est réservé aux transitions ε")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self.order

    @cached_property
    def order(self) -> Dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def index(self, symbol: str) -> int:
        return self.order[symbol]

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def word(self, symbols: Iterable[str]) -> Word:
        """Construit un mot: chaîne si tous les symboles font un caractère, tuple sinon"""
        symbols = tuple(symbols)
        return ''.join(symbols) if self.single_char else symbols

    def sort_key(self, word: Sequence[str]) -> Tuple[int, Tuple[int, ...]]:
        """Clé longueur-lexicographique selon l'ordre de l'alphabet"""
        return len(word), tuple(self.order[s] for s in word)


@dataclass(frozen=True)
class Nfa:
    """
    Automate fini non déterministe, transitions ε autorisées

    Args:
        num_states: Nombre d'états (identifiants 0..num_states-1)
        alphabet: Alphabet de l'automate
        transitions: Triplets (source, étiquette, cible); étiquette EPSILON pour ε
        start: État initial
        finals: États finaux
    """
    num_states: int
    alphabet: Alphabet
    transitions: Tuple[Transition, ...]
    start: int = 0
    finals: FrozenSet[int] = frozenset()

    def __post_init__(self):
        transitions = tuple(dict.fromkeys(tuple(t) for t in self.transitions))
        object.__setattr__(self, 'transitions', transitions)
        object.__setattr__(self, 'finals', frozenset(self.finals))
        if self.num_states < 1:
            raise ValueError("un NFA a au moins un état")
        if not 0 <= self.start < self.num_states:
            raise ValueError(f"état initial inconnu: {self.start}")
        for f in self.finals:
            if not 0 <= f < self.num_states:
                raise ValueError(f"état final inconnu: {f}")
        for p, x, q in transitions:
            if not (0 <= p < self.num_states and 0 <= q < self.num_states):
                raise ValueError(f"transition hors des états: {(p, x, q)}")
            if x != EPSILON and x not in self.alphabet:
                raise ValueError(f"symbole {x!r} absent de l'alphabet")

    @classmethod
    def from_words(cls, words: Iterable[Sequence[str]], alphabet: Optional[Alphabet] = None) -> 'Nfa':
        """
        Automate acyclique (arbre préfixe) acceptant exactement les mots donnés

        Args:
            words: Mots (chaînes ou suites de symboles)
            alphabet: Alphabet; par défaut les symboles dans leur ordre d'apparition
        """
        words = [tuple(w) for w in words]
        if alphabet is None:
            seen = dict.fromkeys(s for w in words for s in w)
            alphabet = Alphabet(tuple(seen) or ('a',))
        children: List[Dict[str, int]] = [{}]
        finals = set()
        for w in words:
            node = 0
            for s in w:
                if s not in children[node]:
                    children.append({})
                    children[node][s] = len(children) - 1
                node = children[node][s]
            finals.add(node)
        transitions = tuple((p, s, q) for p, edges in enumerate(children) for s, q in edges.items())
        return cls(len(children), alphabet, transitions, 0, frozenset(finals))

    @cached_property
    def epsilon_free(self) -> bool:
        return all(x != EPSILON for _, x, _ in self.transitions)

    @property
    def size(self) -> int:
        """‖A‖ = nombre d'états + nombre de transitions"""
        return self.num_states + len(self.transitions)

    @cached_property
    def successors(self) -> List[Dict[str, Tuple[int, ...]]]:
        """successors[q][x] = cibles des transitions q --x--> ."""
        table: List[Dict[str, List[int]]] = [{} for _ in range(self.num_states)]
        for p, x, q in self.transitions:
            table[p].setdefault(x, []).append(q)
        return [{x: tuple(qs) for x, qs in row.items()} for row in table]

    @cached_property
    def out_edges(self) -> List[Tuple[Tuple[str, int], ...]]:
        table: List[List[Tuple[str, int]]] = [[] for _ in range(self.num_states)]
        for p, x, q in self.transitions:
            table[p].append((x, q))
        return [tuple(row) for row in table]

    def epsilon_closure(self, states: Iterable[int]) -> FrozenSet[int]:
        closure = set(states)
        stack = list(closure)
        while stack:
            p = stack.pop()
            for q in self.successors[p].get(EPSILON, ()):
                if q not in closure:
                    closure.add(q)
                    stack.append(q)
        return frozenset(closure)

    def step(self, states: Iterable[int], symbol: str) -> FrozenSet[int]:
        """États atteints en lisant un symbole, fermeture ε comprise"""
        moved = {q for p in states for q in self.successors[p].get(symbol, ())}
        return self.epsilon_closure(moved)

    def accepts(self, word: Sequence[str]) -> bool:
        current = self.epsilon_closure([self.start])
        for symbol in word:
            current = self.step(current, symbol)
            if not current:
                return False
        return bool(current & self.finals)


def _adjacency(num_nodes: int, edges: Sequence[Tuple[int, int]]) -> csr_matrix:
    """Matrice d'adjacence creuse (étiquettes ignorées)"""
    if not edges:
        return csr_matrix((num_nodes, num_nodes), dtype=np.int8)
    rows, cols = zip(*edges)
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(num_nodes, num_nodes))


def graph_reachable(num_nodes: int, edges: Sequence[Tuple[int, int]], start: int) -> Set[int]:
    """Nœuds accessibles depuis start"""
    graph = _adjacency(num_nodes, edges)
    order = breadth_first_order(graph, start, directed=True, return_predecessors=False)
    return set(int(q) for q in order)


def graph_coreachable(num_nodes: int, edges: Sequence[Tuple[int, int]], targets: Iterable[int]) -> Set[int]:
    """Nœuds depuis lesquels une cible est accessible (puits virtuel relié aux cibles)"""
    targets = list(targets)
    if not targets:
        return set()
    sink = num_nodes
    reverse = [(q, p) for p, q in edges] + [(sink, t) for t in targets]
    graph = _adjacency(num_nodes + 1, reverse)
    order = breadth_first_order(graph, sink, directed=True, return_predecessors=False)
    return set(int(q) for q in order if q != sink)


def reachable_states(a: Nfa) -> Set[int]:
    """États accessibles depuis l'état initial (toutes étiquettes confondues)"""
    return graph_reachable(a.num_states, [(p, q) for p, _, q in a.transitions], a.start)


def coreachable_states(a: Nfa) -> Set[int]:
    """États depuis lesquels un état final est accessible"""
    return graph_coreachable(a.num_states, [(p, q) for p, _, q in a.transitions], a.finals)


def has_accepting_path(a: Nfa) -> bool:
    """Vrai si un état final est accessible (test du vide, étiquettes ignorées)"""
    if not a.finals:
        return False
    return bool(reachable_states(a) & a.finals)


def empty_nfa(alphabet: Alphabet) -> Nfa:
    """Automate du langage vide: l'état initial seul, sans état final"""
    return Nfa(1, alphabet, (), 0, frozenset())


def trim(a: Nfa) -> Nfa:
    """
    Supprime les états inutiles et renumérote les états restants

    Args:
        a: Automate d'entrée

    Returns:
        Nfa: Automate émondé de même langage
    """
    useful = reachable_states(a) & coreachable_states(a)
    if a.start not in useful:
        return empty_nfa(a.alphabet)
    keep = sorted(useful)
    remap = {old: new for new, old in enumerate(keep)}
    transitions = tuple(
        (remap[p], x, remap[q]) for p, x, q in a.transitions if p in remap and q in remap
    )
    finals = frozenset(remap[f] for f in a.finals if f in remap)
    return Nfa(len(keep), a.alphabet, transitions, remap[a.start], finals)


def remove_epsilon(a: Nfa) -> Nfa:
    """
    Élimine les transitions ε (mêmes états, même langage)

    Args:
        a: ε-NFA

    Returns:
        Nfa: Automate sans transition vide
    """
    if a.epsilon_free:
        return a
    transitions = []
    finals = set()
    for p in range(a.num_states):
        closure = a.epsilon_closure([p])
        if closure & a.finals:
            finals.add(p)
        for q in closure:
            for x, r in a.out_edges[q]:
                if x != EPSILON:
                    transitions.append((p, x, r))
    return Nfa(a.num_states, a.alphabet, tuple(transitions), a.start, frozenset(finals))


def prepare(a: Nfa) -> Nfa:
    """Normalisation utilisée par tous les algorithmes: sans ε puis émondé"""
    return trim(remove_epsilon(a))


def augment_with_identity_loops(a: Nfa) -> Nfa:
    """Ajoute la boucle (q, ε, q) sur chaque état: l'automate A^ε des produits"""
    loops = tuple((q, EPSILON, q) for q in range(a.num_states))
    return Nfa(a.num_states, a.alphabet, a.transitions + loops, a.start, a.finals)


def intersect(a: Nfa, b: Nfa, deadline: Optional[Deadline] = None) -> Nfa:
    """
    Produit de deux NFA: L(a) ∩ L(b)

    Seules les paires accessibles depuis (départ de a, départ de b) sont
    construites. Une transition ε avance un seul côté.

    Args:
        a: Premier automate
        b: Second automate, même alphabet
        deadline: Échéance coopérative

    Returns:
        Nfa: Automate produit, états numérotés dans l'ordre de découverte
    """
    if a.alphabet != b.alphabet:
        raise ValueError("intersect attend deux automates de même alphabet")
    check = PeriodicCheck(deadline, DEFAULT_SETTINGS['deadline_check_every'], "intersect")
    index = {(a.start, b.start): 0}
    pairs = [(a.start, b.start)]
    transitions: List[Transition] = []
    queue = deque([0])
    while queue:
        check.tick()
        source = queue.popleft()
        p, q = pairs[source]
        moves = [
            (x, p2, q2)
            for x, p2 in a.out_edges[p] if x != EPSILON
            for q2 in b.successors[q].get(x, ())
        ]
        moves.extend((EPSILON, p2, q) for p2 in a.successors[p].get(EPSILON, ()))
        moves.extend((EPSILON, p, q2) for q2 in b.successors[q].get(EPSILON, ()))
        for x, p2, q2 in moves:
            target = index.get((p2, q2))
            if target is None:
                target = len(pairs)
                index[(p2, q2)] = target
                pairs.append((p2, q2))
                queue.append(target)
            transitions.append((source, x, target))
    finals = frozenset(n for n, (p, q) in enumerate(pairs) if p in a.finals and q in b.finals)
    return Nfa(len(pairs), a.alphabet, tuple(transitions), 0, finals)


def _topological_order(a: Nfa) -> List[int]:
    indegree = [0] * a.num_states
    for _, _, q in a.transitions:
        indegree[q] += 1
    queue = deque(q for q in range(a.num_states) if indegree[q] == 0)
    order = []
    while queue:
        p = queue.popleft()
        order.append(p)
        for _, q in a.out_edges[p]:
            indegree[q] -= 1
            if indegree[q] == 0:
                queue.append(q)
    return order


def accepts_at_least_two_words(a: Nfa) -> bool:
    """
    Teste si |L(a)| >= 2

    Un automate émondé sans ε qui contient un cycle accepte une infinité de mots.
    Sinon on propage, dans l'ordre topologique, au plus deux mots distincts par état.

    Args:
        a: Automate

    Returns:
        bool: True si au moins deux mots sont acceptés
    """
    b = prepare(a)
    if not b.finals:
        return False
    if any(p == q for p, _, q in b.transitions):
        return True
    graph = _adjacency(b.num_states, [(p, q) for p, _, q in b.transitions])
    n_components, _ = connected_components(graph, directed=True, connection='strong')
    if n_components < b.num_states:
        return True

    words: List[Set[Tuple[str, ...]]] = [set() for _ in range(b.num_states)]
    words[b.start].add(())
    for p in _topological_order(b):
        for x, q in b.out_edges[p]:
            for w in words[p]:
                if len(words[q]) >= 2:
                    break
                words[q].add(w + (x,))
    accepted: Set[Tuple[str, ...]] = set()
    for f in b.finals:
        accepted |= words[f]
        if len(accepted) >= 2:
            return True
    return False


def _final_reach_layers(a: Nfa) -> Iterator[np.ndarray]:
    """Couche m: vrai en q si un état final est accessible depuis q en exactement m transitions"""
    graph = _adjacency(a.num_states, [(p, q) for p, _, q in a.transitions]).astype(np.int32)
    layer = np.zeros(a.num_states, dtype=bool)
    layer[list(a.finals)] = True
    while True:
        yield layer
        layer = (graph @ layer.astype(np.int32)) > 0


def _words_of_length(a: Nfa, length: int, table: List[np.ndarray]) -> Iterator[Tuple[str, ...]]:
    """Mots acceptés de longueur donnée, en ordre lexicographique (a sans ε)"""

    def walk(states: FrozenSet[int], prefix: Tuple[str, ...], remaining: int):
        if remaining == 0:
            yield prefix
            return
        for symbol in a.alphabet:
            following = frozenset(
                r for q in states for r in a.successors[q].get(symbol, ()) if table[remaining - 1][r]
            )
            if following:
                yield from walk(following, prefix + (symbol,), remaining - 1)

    if table[length][a.start]:
        yield from walk(frozenset([a.start]), (), length)


def iter_words_length_lex(a: Nfa, max_len: Optional[int] = None,
                          deadline: Optional[Deadline] = None) -> Iterator[Tuple[str, ...]]:
    """
    Énumère L(a) en ordre longueur-lexicographique

    La table d'accessibilité est calculée une couche par longueur, au fil de
    l'énumération: s'arrêter tôt ne coûte que les couches déjà parcourues.

    Args:
        a: Automate
        max_len: Longueur maximale (par défaut 2·|Q|+1 de l'automate normalisé)
        deadline: Échéance coopérative (vérifiée à chaque longueur)
    """
    b = prepare(a)
    if not b.finals:
        return
    if max_len is None:
        max_len = LIMITS['shortest_words_factor'] * b.num_states + 1
    layers = _final_reach_layers(b)
    table: List[np.ndarray] = []
    for length in range(max_len + 1):
        check_deadline(deadline, "iter_words_length_lex")
        table.append(next(layers))
        if not table[-1].any():
            return
        yield from _words_of_length(b, length, table)


def shortest_two_words(a: Nfa, deadline: Optional[Deadline] = None) -> Tuple[Word, Word]:
    """
    Les deux premiers mots distincts de L(a) en ordre longueur-lexicographique

    Args:
        a: Automate acceptant au moins deux mots
        deadline: Échéance coopérative

    Returns:
        Tuple: (u, v) avec u avant v
    """
    found = []
    for w in iter_words_length_lex(a, deadline=deadline):
        found.append(w)
        if len(found) == 2:
            logger.debug(f"🔍 Deux mots les plus courts: {found[0]} / {found[1]}")
            return a.alphabet.word(found[0]), a.alphabet.word(found[1])
    raise TwoWordsRequiredError()
