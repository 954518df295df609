"""
Module de test de fonctionnalité des transducteurs
==================================================
Un transducteur est fonctionnel si chaque entrée a au plus une sortie.

Méthode du carré: on apparie deux chemins de même entrée (lecture commune
d'un symbole, ou mouvement ε d'un seul côté) et on propage le retard de
sortie, c'est-à-dire le suffixe dont une branche devance l'autre.
Sur le carré émondé, le transducteur est fonctionnel si et seulement si
chaque état reçoit un unique retard et les états finaux un retard nul.
"""
import logging
from collections import deque
from typing import Iterator, List, Optional, Tuple

from automata import graph_coreachable, graph_reachable
from constants import DEFAULT_SETTINGS, EPSILON
from transducers import Transducer, explore, trim_transducer
from utils import Deadline, PeriodicCheck

logger = logging.getLogger(__name__)

# (avance de la branche gauche, avance de la branche droite); l'une des deux est vide
Delay = Tuple[Tuple[str, ...], Tuple[str, ...]]

NO_DELAY: Delay = ((), ())


def advance_delay(delay: Delay, left_output: str, right_output: str) -> Optional[Delay]:
    """
    Ajoute une sortie à chaque branche et retire le préfixe commun

    Returns:
        Delay: Nouveau retard, None si les sorties divergent
    """
    left, right = delay
    if left_output != EPSILON:
        left = left + (left_output,)
    if right_output != EPSILON:
        right = right + (right_output,)
    common = 0
    while common < len(left) and common < len(right) and left[common] == right[common]:
        common += 1
    left, right = left[common:], right[common:]
    if left and right:
        return None
    return left, right


def square_edges(t: Transducer, pair: Tuple[int, int]) -> Iterator[Tuple[str, str, Tuple[int, int]]]:
    """Transitions du carré depuis (p, q): (sortie gauche, sortie droite, cible)"""
    p, q = pair
    left, right = t.by_input[p], t.by_input[q]
    for x, left_edges in left.items():
        if x == EPSILON:
            continue
        right_edges = right.get(x, ())
        for u, p2 in left_edges:
            for v, q2 in right_edges:
                yield u, v, (p2, q2)
    for u, p2 in left.get(EPSILON, ()):
        yield u, EPSILON, (p2, q)
    for v, q2 in right.get(EPSILON, ()):
        yield EPSILON, v, (p, q2)


def _useful_square(t: Transducer, deadline: Optional[Deadline]):
    """Carré de t émondé: (paires, transitions, paires finales, paires utiles)"""
    pairs, edges = explore((t.start, t.start), lambda pair: square_edges(t, pair), deadline, "is_functional")
    links = [(p, q) for p, _, _, q in edges]
    final_pairs = [n for n, (p, q) in enumerate(pairs) if p in t.finals and q in t.finals]
    useful = graph_reachable(len(pairs), links, 0) & graph_coreachable(len(pairs), links, final_pairs)
    return pairs, edges, final_pairs, useful


def square_size(t: Transducer, deadline: Optional[Deadline] = None) -> int:
    """Nombre de paires utiles du carré de t (0 si R(t) est vide)"""
    t = trim_transducer(t)
    if not t.finals:
        return 0
    return len(_useful_square(t, deadline)[3])


def is_functional(t: Transducer, deadline: Optional[Deadline] = None) -> bool:
    """
    Décide si le transducteur réalise une fonction

    Args:
        t: Transducteur en forme standard
        deadline: Échéance coopérative

    Returns:
        bool: True si |t(x)| <= 1 pour toute entrée x
    """
    t = trim_transducer(t)
    if not t.finals:
        return True

    pairs, edges, final_pairs, useful = _useful_square(t, deadline)

    adjacency: List[List[Tuple[str, str, int]]] = [[] for _ in pairs]
    for source, u, v, target in edges:
        if source in useful and target in useful:
            adjacency[source].append((u, v, target))

    bound = len(pairs)
    delays = {0: NO_DELAY}
    queue = deque([0])
    check = PeriodicCheck(deadline, DEFAULT_SETTINGS['deadline_check_every'], "is_functional")
    while queue:
        check.tick()
        source = queue.popleft()
        for u, v, target in adjacency[source]:
            delay = advance_delay(delays[source], u, v)
            if delay is None:
                logger.debug(f"⚠️ Sorties divergentes vers {pairs[target]}")
                return False
            if len(delay[0]) + len(delay[1]) > bound:
                return False
            known = delays.get(target)
            if known is None:
                delays[target] = delay
                queue.append(target)
            elif known != delay:
                logger.debug(f"⚠️ Deux retards pour l'état {pairs[target]}: {known} / {delay}")
                return False

    for n in final_pairs:
        if n in useful and delays.get(n, NO_DELAY) != NO_DELAY:
            return False
    return True
