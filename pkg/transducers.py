"""
Module des transducteurs
========================
Transducteurs en forme standard (chaque étiquette d'entrée et de sortie est un
symbole ou vide), le transducteur du canal sid(k), le transducteur
input-altering t̂_k et les produits avec un NFA.

Fonctions principales :
- build_channel_transducer : canal substitutions/insertions/suppressions, k erreurs au plus
- build_iat_transducer : transducteur input-altering t̂_k (compteurs d'erreurs [i] et [i,a])
- iat_edges : transitions sortantes d'un état de t̂_k, utilisées aussi par l'extension incrémentale
- invert : relation inverse
- detect_product : (t ↓ A ↑ A), relation t ∩ (L×Σ*) ∩ (Σ*×L)
- correct_product : (t⁻¹ ↑ A), relation t⁻¹ ∩ (Σ*×L)
- image_nfa : NFA de t(L), première étape du test t(L) ∩ L = ∅
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, FrozenSet, Hashable, Iterator, List, Mapping, Optional, Tuple

from automata import Alphabet, Nfa, graph_coreachable, graph_reachable, prepare
from constants import DEFAULT_SETTINGS, EPSILON
from utils import Deadline, PeriodicCheck

logger = logging.getLogger(__name__)

TransducerEdge = Tuple[int, str, str, int]


@dataclass(frozen=True)
class Transducer:
    """
    Transducteur fini en forme standard

    Args:
        num_states: Nombre d'états (identifiants 0..num_states-1)
        input_alphabet: Alphabet d'entrée
        output_alphabet: Alphabet de sortie
        transitions: Quadruplets (source, entrée, sortie, cible), EPSILON pour un côté vide
        start: État initial
        finals: États finaux
        state_info: Métadonnées par état (CounterState pour t̂_k, compteur pour le canal,
            triplets ou paires pour les produits)
        params: Paramètres de construction ('kind', 'k', 'prune_diagonals', ...)
    """
    num_states: int
    input_alphabet: Alphabet
    output_alphabet: Alphabet
    transitions: Tuple[TransducerEdge, ...]
    start: int = 0
    finals: FrozenSet[int] = frozenset()
    state_info: Optional[Tuple[Any, ...]] = field(default=None, compare=False)
    params: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        transitions = tuple(dict.fromkeys(tuple(t) for t in self.transitions))
        object.__setattr__(self, 'transitions', transitions)
        object.__setattr__(self, 'finals', frozenset(self.finals))
        if self.num_states < 1:
            raise ValueError("un transducteur a au moins un état")
        if not 0 <= self.start < self.num_states:
            raise ValueError(f"état initial inconnu: {self.start}")
        if any(not 0 <= f < self.num_states for f in self.finals):
            raise ValueError("état final inconnu")
        for p, x, y, q in transitions:
            if not (0 <= p < self.num_states and 0 <= q < self.num_states):
                raise ValueError(f"transition hors des états: {(p, x, y, q)}")
            if x != EPSILON and x not in self.input_alphabet:
                raise ValueError(f"symbole d'entrée {x!r} inconnu")
            if y != EPSILON and y not in self.output_alphabet:
                raise ValueError(f"symbole de sortie {y!r} inconnu")
        if self.state_info is not None and len(self.state_info) != self.num_states:
            raise ValueError("state_info doit décrire chaque état")

    @property
    def size(self) -> int:
        """‖t‖ = nombre d'états + nombre de transitions"""
        return self.num_states + len(self.transitions)

    @cached_property
    def out_edges(self) -> List[Tuple[Tuple[str, str, int], ...]]:
        table: List[List[Tuple[str, str, int]]] = [[] for _ in range(self.num_states)]
        for p, x, y, q in self.transitions:
            table[p].append((x, y, q))
        return [tuple(row) for row in table]

    @cached_property
    def by_input(self) -> List[Dict[str, Tuple[Tuple[str, int], ...]]]:
        """by_input[p][x] = paires (sortie, cible) des transitions p --x/.--> ."""
        table: List[Dict[str, List[Tuple[str, int]]]] = [{} for _ in range(self.num_states)]
        for p, x, y, q in self.transitions:
            table[p].setdefault(x, []).append((y, q))
        return [{x: tuple(edges) for x, edges in row.items()} for row in table]


@dataclass(frozen=True, order=True)
class CounterState:
    """
    État [i] ou [i,a] de t̂_k

    Args:
        counter: Compteur d'erreurs i (0 <= i <= k)
        pending: Symbole a mémorisé après une suppression initiale, None pour [i]
    """
    counter: int
    pending: Optional[str] = None

    def __post_init__(self):
        if self.counter < 0:
            raise ValueError("compteur négatif")
        if self.pending is not None and self.counter < 1:
            raise ValueError("un état [i,a] a un compteur >= 1")

    def __str__(self) -> str:
        if self.pending is None:
            return f"[{self.counter}]"
        return f"[{self.counter},{self.pending}]"


def identity_transducer(sigma: Alphabet) -> Transducer:
    """Transducteur identité: un état final, boucles σ/σ"""
    transitions = tuple((0, s, s, 0) for s in sigma)
    return Transducer(1, sigma, sigma, transitions, 0, frozenset([0]), params={'kind': 'identity'})


def build_channel_transducer(k: int, sigma: Alphabet) -> Transducer:
    """
    Transducteur input-preserving du canal sid(k)

    États [0..k] tous finaux; boucles σ/σ sur chaque état; de [i] vers [i+1]
    les substitutions σ/τ, suppressions σ/ε et insertions ε/σ.

    Args:
        k: Nombre maximal d'erreurs (k >= 1)
        sigma: Alphabet

    Returns:
        Transducer: Taille O(r²k)
    """
    if k < 1:
        raise ValueError(f"k doit être >= 1 (reçu {k})")
    transitions: List[TransducerEdge] = []
    for i in range(k + 1):
        transitions.extend((i, s, s, i) for s in sigma)
        if i < k:
            transitions.extend((i, s, t, i + 1) for s in sigma for t in sigma if s != t)
            transitions.extend((i, s, EPSILON, i + 1) for s in sigma)
            transitions.extend((i, EPSILON, s, i + 1) for s in sigma)
    return Transducer(
        k + 1, sigma, sigma, tuple(transitions), 0, frozenset(range(k + 1)),
        state_info=tuple(range(k + 1)), params={'kind': 'channel', 'k': k}
    )


def iat_edges(state: CounterState, k: int, sigma: Alphabet,
              prune_diagonals: bool = False) -> Iterator[Tuple[str, str, CounterState]]:
    """
    Transitions sortantes d'un état de t̂_k

    Args:
        state: État [i] ou [i,a]
        k: Compteur maximal
        sigma: Alphabet
        prune_diagonals: Omet les substitutions et insertions [i,a] -> [i+1]

    Yields:
        Tuple: (entrée, sortie, état cible)
    """
    i, a = state.counter, state.pending
    same = CounterState(i)
    up = CounterState(i + 1)
    if a is None:
        # E_0
        for s in sigma:
            yield s, s, same
        if i < k:
            # E_s
            for s in sigma:
                for t in sigma:
                    if s != t:
                        yield s, t, up
            if i == 0:
                # E_d depuis [0]: mémorise le symbole supprimé
                for s in sigma:
                    yield s, EPSILON, CounterState(1, s)
            else:
                # E_i et E_d
                for s in sigma:
                    yield EPSILON, s, up
                for s in sigma:
                    yield s, EPSILON, up
        return

    for s in sigma:
        if s != a:
            yield s, s, same
    if i < k:
        if not prune_diagonals:
            for s in sigma:
                for t in sigma:
                    if s != t and t != a:
                        yield s, t, up
            for s in sigma:
                if s != a:
                    yield EPSILON, s, up
        for s in sigma:
            yield s, EPSILON, CounterState(i + 1, a)


def iat_states(k: int, sigma: Alphabet) -> List[CounterState]:
    """[0], [1..k], puis [i,a] pour 1 <= i <= k et a dans l'alphabet"""
    states = [CounterState(i) for i in range(k + 1)]
    states.extend(CounterState(i, a) for i in range(1, k + 1) for a in sigma)
    return states


def build_iat_transducer(k: int, sigma: Alphabet, prune_diagonals: bool = False) -> Transducer:
    """
    Transducteur input-altering t̂_k

    Tous les états sauf [0] sont finaux. Le compteur d'un état est le poids de
    toute étiquette de chemin depuis [0].

    Args:
        k: Compteur maximal (k >= 1)
        sigma: Alphabet
        prune_diagonals: Omet les transitions diagonales [i,a] -> [i+1]

    Returns:
        Transducer: 1 + k + k·r états, state_info = CounterState de chaque état
    """
    if k < 1:
        raise ValueError(f"k doit être >= 1 (reçu {k})")
    states = iat_states(k, sigma)
    index = {state: n for n, state in enumerate(states)}
    transitions = tuple(
        (index[state], x, y, index[target])
        for state in states
        for x, y, target in iat_edges(state, k, sigma, prune_diagonals)
    )
    finals = frozenset(range(1, len(states)))
    return Transducer(
        len(states), sigma, sigma, transitions, 0, finals,
        state_info=tuple(states),
        params={'kind': 'iat', 'k': k, 'prune_diagonals': prune_diagonals}
    )


def invert(t: Transducer) -> Transducer:
    """Transducteur de la relation inverse (étiquettes et alphabets échangés)"""
    params = dict(t.params)
    params['inverted'] = not params.get('inverted', False)
    return Transducer(
        t.num_states, t.output_alphabet, t.input_alphabet,
        tuple((p, y, x, q) for p, x, y, q in t.transitions),
        t.start, t.finals, state_info=t.state_info, params=params
    )


def trim_transducer(t: Transducer) -> Transducer:
    """Ne garde que les états accessibles et co-accessibles"""
    edges = [(p, q) for p, _, _, q in t.transitions]
    useful = graph_reachable(t.num_states, edges, t.start) & graph_coreachable(t.num_states, edges, t.finals)
    if t.start not in useful:
        info = (t.state_info[t.start],) if t.state_info is not None else None
        return Transducer(1, t.input_alphabet, t.output_alphabet, (), 0, frozenset(),
                          state_info=info, params=t.params)
    keep = sorted(useful)
    if len(keep) == t.num_states:
        return t
    remap = {old: new for new, old in enumerate(keep)}
    transitions = tuple(
        (remap[p], x, y, remap[q]) for p, x, y, q in t.transitions if p in remap and q in remap
    )
    info = tuple(t.state_info[old] for old in keep) if t.state_info is not None else None
    return Transducer(len(keep), t.input_alphabet, t.output_alphabet, transitions, remap[t.start],
                      frozenset(remap[f] for f in t.finals if f in remap),
                      state_info=info, params=t.params)


def nfa_moves(a: Nfa, q: int, label: str) -> Tuple[int, ...]:
    """Transitions de A^ε: sur ε on reste sur place (boucle virtuelle)"""
    if label == EPSILON:
        return (q,)
    return a.successors[q].get(label, ())


def explore(start: Hashable,
            expand: Callable[[Hashable], Iterator[Tuple[str, str, Hashable]]],
            deadline: Optional[Deadline] = None,
            where: str = "") -> Tuple[List[Hashable], List[TransducerEdge]]:
    """
    Construction paresseuse d'un produit depuis son état initial

    Args:
        start: État composite initial
        expand: Transitions sortantes (entrée, sortie, cible) d'un état composite
        deadline: Échéance coopérative
        where: Nom de la construction (messages)

    Returns:
        Tuple: (états composites dans l'ordre de découverte, transitions numérotées)
    """
    check = PeriodicCheck(deadline, DEFAULT_SETTINGS['deadline_check_every'], where)
    index = {start: 0}
    states = [start]
    edges: List[TransducerEdge] = []
    queue = deque([start])
    while queue:
        check.tick()
        state = queue.popleft()
        source = index[state]
        for x, y, target in expand(state):
            target_id = index.get(target)
            if target_id is None:
                target_id = len(states)
                index[target] = target_id
                states.append(target)
                queue.append(target)
            edges.append((source, x, y, target_id))
    return states, edges


def detect_product(t: Transducer, a: Nfa, deadline: Optional[Deadline] = None) -> Transducer:
    """
    Transducteur (t ↓ A ↑ A) réalisant R(t) ∩ (L(A)×Σ*) ∩ (Σ*×L(A))

    États (p, q, q'): p dans t, q suit l'entrée et q' la sortie dans A^ε.

    Args:
        t: Transducteur (typiquement le canal sid(k))
        a: Automate du langage
        deadline: Échéance coopérative

    Returns:
        Transducer: Produit émondé
    """
    a = prepare(a)

    def expand(triple):
        p, q, q2 = triple
        for x, y, p2 in t.out_edges[p]:
            for r in nfa_moves(a, q, x):
                for r2 in nfa_moves(a, q2, y):
                    yield x, y, (p2, r, r2)

    states, edges = explore((t.start, a.start, a.start), expand, deadline, "detect_product")
    finals = frozenset(
        n for n, (p, q, q2) in enumerate(states)
        if p in t.finals and q in a.finals and q2 in a.finals
    )
    product = Transducer(len(states), t.input_alphabet, t.output_alphabet, tuple(edges), 0, finals,
                         state_info=tuple(states), params={'kind': 'detect_product'})
    logger.debug(f"🔍 Produit de détection: {product.num_states} états, taille {product.size}")
    return trim_transducer(product)


def correct_product(t: Transducer, a: Nfa, deadline: Optional[Deadline] = None) -> Transducer:
    """
    Transducteur (t⁻¹ ↑ A) réalisant R(t)⁻¹ ∩ (Σ*×L(A))

    Args:
        t: Transducteur (typiquement le canal sid(k))
        a: Automate du langage
        deadline: Échéance coopérative

    Returns:
        Transducer: Produit émondé, états (p, q)
    """
    a = prepare(a)
    inverse = invert(t)

    def expand(pair):
        p, q = pair
        for x, y, p2 in inverse.out_edges[p]:
            for r in nfa_moves(a, q, y):
                yield x, y, (p2, r)

    states, edges = explore((inverse.start, a.start), expand, deadline, "correct_product")
    finals = frozenset(
        n for n, (p, q) in enumerate(states) if p in inverse.finals and q in a.finals
    )
    product = Transducer(len(states), inverse.input_alphabet, inverse.output_alphabet, tuple(edges), 0,
                         finals, state_info=tuple(states), params={'kind': 'correct_product'})
    logger.debug(f"🔍 Produit de correction: {product.num_states} états, taille {product.size}")
    return trim_transducer(product)


def image_nfa(t: Transducer, a: Nfa, deadline: Optional[Deadline] = None) -> Nfa:
    """
    ε-NFA acceptant t(L(a)) sur l'alphabet de sortie

    États (p, q): p dans t, q suit l'entrée dans A^ε. Une transition x/y
    donne une transition étiquetée y (ε pour une suppression).

    Args:
        t: Transducteur
        a: Automate du langage d'entrée
        deadline: Échéance coopérative

    Returns:
        Nfa: Image, états accessibles seulement
    """
    a = prepare(a)

    def expand(pair):
        p, q = pair
        for x, y, p2 in t.out_edges[p]:
            for r in nfa_moves(a, q, x):
                yield x, y, (p2, r)

    states, edges = explore((t.start, a.start), expand, deadline, "image_nfa")
    finals = frozenset(n for n, (p, q) in enumerate(states) if p in t.finals and q in a.finals)
    image = Nfa(len(states), t.output_alphabet, tuple((s, y, d) for s, _, y, d in edges), 0, finals)
    logger.debug(f"🔍 Image: {image.num_states} états, {len(image.transitions)} transitions")
    return image
