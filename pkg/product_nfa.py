"""
Module du NFA produit t̂_k(L) ∩ L
================================
Les états sont des triplets (φ, q, q') où φ est un état [i] ou [i,a] de t̂_k
et q, q' des états de A. Une transition (φ,q,q') --y--> (ψ,r,r') existe si
φ --x/y--> ψ dans t̂_k, q --x--> r et q' --y--> r' dans A^ε.

Le produit n'est construit qu'à partir de l'état initial: tous ses états sont
accessibles. L'extension d'un niveau k au niveau k+1 ajoute uniquement des
transitions sortant des états de compteur k.
"""
import logging
from collections import deque
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from automata import Alphabet, Nfa, prepare
from constants import DEFAULT_SETTINGS
from transducers import CounterState, Transducer, iat_edges, nfa_moves
from utils import Deadline, PeriodicCheck

logger = logging.getLogger(__name__)

ProductState = Tuple[CounterState, int, int]
EdgeSource = Callable[[CounterState], Iterable[Tuple[str, str, CounterState]]]


class ProductNfa:
    """
    NFA produit sur les étiquettes de sortie, avec un compteur d'erreurs par état

    Args:
        source: Automate A (sans ε, émondé)
        sigma: Alphabet de t̂_k
        prune_diagonals: Extensions sans transitions diagonales [i,a] -> [i+1]
    """

    def __init__(self, source: Nfa, sigma: Alphabet, prune_diagonals: bool = False):
        self.source = source
        self.sigma = sigma
        self.prune_diagonals = prune_diagonals
        self.level = 0
        self.levelled_finals = False
        self.states: List[ProductState] = []
        self.index: Dict[ProductState, int] = {}
        self.out: List[List[Tuple[str, int]]] = []
        self.by_counter: List[List[int]] = []
        self.num_transitions = 0

    def __len__(self) -> int:
        return len(self.states)

    def counter(self, state_id: int) -> int:
        return self.states[state_id][0].counter

    def components(self, state_id: int) -> Tuple[int, int]:
        """La paire (q, q') d'états de A"""
        _, q, q2 = self.states[state_id]
        return q, q2

    @property
    def frontier(self) -> List[int]:
        """États de compteur égal au niveau courant"""
        if self.level < len(self.by_counter):
            return list(self.by_counter[self.level])
        return []

    def is_final(self, state_id: int) -> bool:
        q, q2 = self.components(state_id)
        if q not in self.source.finals or q2 not in self.source.finals:
            return False
        if self.levelled_finals:
            return self.counter(state_id) == self.level
        return self.counter(state_id) >= 1

    @property
    def finals(self) -> List[int]:
        return [n for n in range(len(self.states)) if self.is_final(n)]

    def has_accepting_path(self) -> bool:
        """Tous les états sont accessibles par construction: il suffit d'un état final"""
        return any(self.is_final(n) for n in range(len(self.states)))

    def min_final_counter(self) -> Optional[int]:
        counters = [self.counter(n) for n in range(len(self.states)) if self.is_final(n)]
        return min(counters) if counters else None

    def to_nfa(self) -> Nfa:
        """NFA sur les étiquettes de sortie (EPSILON pour les suppressions)"""
        transitions = tuple((p, y, q) for p, edges in enumerate(self.out) for y, q in edges)
        return Nfa(max(len(self.states), 1), self.sigma, transitions, 0, frozenset(self.finals))

    def _add_state(self, state: ProductState) -> Tuple[int, bool]:
        known = self.index.get(state)
        if known is not None:
            return known, False
        state_id = len(self.states)
        self.index[state] = state_id
        self.states.append(state)
        self.out.append([])
        counter = state[0].counter
        while len(self.by_counter) <= counter:
            self.by_counter.append([])
        self.by_counter[counter].append(state_id)
        return state_id, True

    def _connect(self, source_id: int, x: str, y: str, psi: CounterState, queue: deque) -> None:
        _, q, q2 = self.states[source_id]
        for r in nfa_moves(self.source, q, x):
            for r2 in nfa_moves(self.source, q2, y):
                target_id, created = self._add_state((psi, r, r2))
                self.out[source_id].append((y, target_id))
                self.num_transitions += 1
                if created:
                    queue.append(target_id)

    def _explore(self, queue: deque, edge_source: EdgeSource, deadline: Optional[Deadline]) -> None:
        check = PeriodicCheck(deadline, DEFAULT_SETTINGS['deadline_check_every'], "ProductNfa")
        while queue:
            check.tick()
            state_id = queue.popleft()
            phi = self.states[state_id][0]
            for x, y, psi in edge_source(phi):
                self._connect(state_id, x, y, psi, queue)

    def extend(self, deadline: Optional[Deadline] = None) -> 'ProductNfa':
        """
        Passe du niveau k au niveau k+1

        Les transitions d'erreur de t̂_{k+1} partent des états de compteur k;
        les nouveaux états de compteur k+1 sont ensuite fermés par les
        transitions sans erreur. Les états finaux deviennent les triplets de
        compteur k+1.

        Returns:
            ProductNfa: self, étendu
        """
        k = self.level
        limit = k + 1
        queue: deque = deque()
        for state_id in self.frontier:
            phi = self.states[state_id][0]
            for x, y, psi in iat_edges(phi, limit, self.sigma, self.prune_diagonals):
                if psi.counter == limit:
                    self._connect(state_id, x, y, psi, queue)
        self.level = limit
        self.levelled_finals = True
        self._explore(queue, lambda phi: iat_edges(phi, limit, self.sigma, self.prune_diagonals), deadline)
        logger.debug(f"🔍 Niveau {limit}: {len(self.states)} états, {self.num_transitions} transitions")
        return self


def range_intersection_nfa(t: Transducer, a: Nfa, levelled: bool = False,
                           deadline: Optional[Deadline] = None) -> ProductNfa:
    """
    NFA acceptant t(L(a)) ∩ L(a) pour t = t̂_k

    Args:
        t: Transducteur construit par build_iat_transducer
        a: Automate du langage
        levelled: Si True, seuls les triplets de compteur k sont finaux
        deadline: Échéance coopérative

    Returns:
        ProductNfa: Produit de niveau k
    """
    if t.params.get('kind') != 'iat' or t.params.get('inverted'):
        raise ValueError("range_intersection_nfa attend un transducteur t̂_k")
    a = prepare(a)
    edges_of: Dict[CounterState, List[Tuple[str, str, CounterState]]] = {
        info: [] for info in t.state_info
    }
    for p, x, y, q in t.transitions:
        edges_of[t.state_info[p]].append((x, y, t.state_info[q]))

    product = ProductNfa(a, t.input_alphabet, t.params.get('prune_diagonals', False))
    product.level = t.params['k']
    product.levelled_finals = levelled
    start_id, _ = product._add_state((t.state_info[t.start], a.start, a.start))
    product._explore(deque([start_id]), lambda phi: edges_of[phi], deadline)
    logger.debug(f"🔍 Produit t̂_{product.level}: {len(product)} états, {product.num_transitions} transitions")
    return product


def extend(p: ProductNfa, k: int, deadline: Optional[Deadline] = None) -> ProductNfa:
    """Étend un produit de niveau k au niveau k+1"""
    if p.level != k:
        raise ValueError(f"le produit est au niveau {p.level}, pas {k}")
    return p.extend(deadline)
