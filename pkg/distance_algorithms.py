"""
Module des algorithmes de distance d'édition d'un langage
=========================================================
La distance d'un langage L (au moins deux mots) est la plus petite distance
de Levenshtein entre deux mots différents de L.

Fonctions principales :
- dist_err_detect : recherche dichotomique, canal sid(k) + test de fonctionnalité du produit (t ↓ A ↑ A)
- dist_err_correct : idem avec (t⁻¹ ↑ A); renvoie la paire {2m-1, 2m}
- dist_first_inp_alter : recherche dichotomique, t̂_k + test du vide de t̂_k(L) ∩ L
- dist_next_inp_alter : un seul produit avec t̂_{D-1}, plus petit compteur final accessible
- dist_best_inp_alter : produit incrémental niveau par niveau (Extend)
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

from automata import Nfa, accepts_at_least_two_words, has_accepting_path, intersect, prepare, shortest_two_words
from constants import ALGORITHMS
from edit_strings import edit_distance_words
from exceptions import InvariantViolation, TwoWordsRequiredError
from functionality import is_functional
from product_nfa import ProductNfa, range_intersection_nfa
from transducers import build_channel_transducer, build_iat_transducer, correct_product, detect_product, image_nfa
from utils import Deadline, check_deadline

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistanceResult:
    """
    Résultat d'un algorithme: distance exacte, ou paire {2m-1, 2m} (correction d'erreurs)

    Args:
        kind: 'exact' ou 'pair'
        value: d (exact) ou (2m-1, 2m) (pair)
    """
    kind: str
    value: Union[int, Tuple[int, int]]

    def __post_init__(self):
        if self.kind == 'exact':
            if not isinstance(self.value, int) or self.value < 1:
                raise ValueError(f"distance exacte invalide: {self.value}")
        elif self.kind == 'pair':
            low, high = self.value
            if high - low != 1 or low < 1:
                raise ValueError(f"paire invalide: {self.value}")
        else:
            raise ValueError(f"type de résultat inconnu: {self.kind}")

    @classmethod
    def exact(cls, d: int) -> 'DistanceResult':
        return cls('exact', d)

    @classmethod
    def pair(cls, m: int) -> 'DistanceResult':
        return cls('pair', (2 * m - 1, 2 * m))

    @property
    def values(self) -> Tuple[int, ...]:
        return (self.value,) if self.kind == 'exact' else tuple(self.value)

    def __contains__(self, d: int) -> bool:
        return d in self.values

    def __str__(self) -> str:
        return ' '.join(str(v) for v in self.values)


def _prepared_language(a: Nfa) -> Nfa:
    if not accepts_at_least_two_words(a):
        raise TwoWordsRequiredError()
    return prepare(a)


def working_bound(a: Nfa, deadline: Optional[Deadline] = None) -> int:
    """D_A: distance d'édition des deux mots les plus courts de L(a)"""
    u, v = shortest_two_words(a, deadline)
    return edit_distance_words(u, v)


def _largest_holding(low: int, high: int, holds: Callable[[int], bool],
                     deadline: Optional[Deadline], name: str) -> int:
    """
    Recherche dichotomique du plus grand k de [low, high] vérifiant la propriété

    Invariant: la propriété est vraie pour low-1. Renvoie low en fin de boucle.
    """
    while low <= high:
        check_deadline(deadline, name)
        k = (low + high) // 2
        if holds(k):
            logger.debug(f"🔍 {name}: k={k} vérifié")
            low = k + 1
        else:
            logger.debug(f"🔍 {name}: k={k} rejeté")
            high = k - 1
    return low


def dist_err_detect(a: Nfa, deadline: Optional[Deadline] = None) -> int:
    """
    Distance par détection d'erreurs

    L est error-detecting pour sid(k) si et seulement si (t ↓ A ↑ A) est fonctionnel.

    Args:
        a: NFA acceptant au moins deux mots
        deadline: Échéance coopérative

    Returns:
        int: Distance d'édition de L(a)
    """
    a = _prepared_language(a)
    bound = working_bound(a, deadline)

    def detecting(k: int) -> bool:
        channel = build_channel_transducer(k, a.alphabet)
        return is_functional(detect_product(channel, a, deadline), deadline)

    d = _largest_holding(1, bound - 1, detecting, deadline, "dist_err_detect")
    logger.info(f"✅ dist_err_detect = {d} (borne D_A = {bound})")
    return d


def dist_err_correct(a: Nfa, deadline: Optional[Deadline] = None) -> DistanceResult:
    """
    Estimation par correction d'erreurs

    L est error-correcting pour sid(k) si et seulement si (t⁻¹ ↑ A) est fonctionnel.

    Args:
        a: NFA acceptant au moins deux mots
        deadline: Échéance coopérative

    Returns:
        DistanceResult: Paire {2m-1, 2m} contenant la distance
    """
    a = _prepared_language(a)
    bound = working_bound(a, deadline)

    def correcting(k: int) -> bool:
        channel = build_channel_transducer(k, a.alphabet)
        return is_functional(correct_product(channel, a, deadline), deadline)

    m = _largest_holding(1, (bound - 1) // 2, correcting, deadline, "dist_err_correct")
    result = DistanceResult.pair(m)
    logger.info(f"✅ dist_err_correct = {result} (borne D_A = {bound})")
    return result


def dist_first_inp_alter(a: Nfa, prune_diagonals: bool = False,
                         deadline: Optional[Deadline] = None) -> int:
    """
    Distance par recherche dichotomique sur t̂_k: L est error-detecting pour
    sid(k) si et seulement si t̂_k(L) ∩ L est vide

    À chaque étape on construit l'automate image t̂_k(L), normalisé, puis son
    produit avec A. Le produit paresseux de product_nfa fait les deux d'un coup
    et sert à dist_next_inp_alter et dist_best_inp_alter.

    Args:
        a: NFA acceptant au moins deux mots
        prune_diagonals: Variante sans transitions diagonales
        deadline: Échéance coopérative

    Returns:
        int: Distance d'édition de L(a)
    """
    a = _prepared_language(a)
    bound = working_bound(a, deadline)

    def empty(k: int) -> bool:
        t = build_iat_transducer(k, a.alphabet, prune_diagonals)
        image = prepare(image_nfa(t, a, deadline))
        return not has_accepting_path(intersect(image, a, deadline))

    d = _largest_holding(1, bound - 1, empty, deadline, "dist_first_inp_alter")
    logger.info(f"✅ dist_first_inp_alter = {d} (borne D_A = {bound})")
    return d


def dist_next_inp_alter(a: Nfa, prune_diagonals: bool = False,
                        deadline: Optional[Deadline] = None) -> int:
    """
    Distance par un seul produit t̂_{D-1}(L) ∩ L: plus petit compteur parmi
    les états finaux accessibles; D si aucun n'est accessible

    Args:
        a: NFA acceptant au moins deux mots
        prune_diagonals: Variante sans transitions diagonales
        deadline: Échéance coopérative

    Returns:
        int: Distance d'édition de L(a)
    """
    a = _prepared_language(a)
    bound = working_bound(a, deadline)
    if bound == 1:
        logger.info("✅ dist_next_inp_alter = 1 (D_A = 1)")
        return 1
    t = build_iat_transducer(bound - 1, a.alphabet, prune_diagonals)
    product = range_intersection_nfa(t, a, deadline=deadline)
    smallest = product.min_final_counter()
    d = bound if smallest is None else smallest
    logger.info(f"✅ dist_next_inp_alter = {d} (borne D_A = {bound}, {len(product)} états)")
    return d


def dist_best_inp_alter(a: Nfa, prune_diagonals: bool = False,
                        deadline: Optional[Deadline] = None,
                        on_level: Optional[Callable[[ProductNfa], None]] = None) -> int:
    """
    Distance par extension incrémentale de t̂_k(L) ∩ L, k = 1, 2, ...

    Au niveau k seuls les triplets de compteur k sont finaux; le premier
    niveau qui a un chemin acceptant est la distance.

    Args:
        a: NFA acceptant au moins deux mots
        prune_diagonals: Variante sans transitions diagonales
        deadline: Échéance coopérative (vérifiée à chaque niveau)
        on_level: Appelé avec le produit à chaque niveau (instrumentation)

    Returns:
        int: Distance d'édition de L(a)
    """
    a = _prepared_language(a)
    t = build_iat_transducer(1, a.alphabet, prune_diagonals)
    product = range_intersection_nfa(t, a, levelled=True, deadline=deadline)
    k = 1
    bound = None
    while True:
        if on_level is not None:
            on_level(product)
        if product.has_accepting_path():
            break
        check_deadline(deadline, "dist_best_inp_alter")
        if k >= a.num_states:
            if bound is None:
                bound = working_bound(a, deadline)
            if k >= bound:
                raise InvariantViolation(f"aucun chemin acceptant au niveau {k} >= D_A = {bound}")
        product.extend(deadline)
        k += 1
    logger.info(f"✅ dist_best_inp_alter = {k} ({len(product)} états, {product.num_transitions} transitions)")
    return k


def compute_distance(a: Nfa, algorithm: str = 'best', prune_diagonals: bool = False,
                     deadline: Optional[Deadline] = None) -> DistanceResult:
    """
    Lance l'algorithme demandé et emballe le résultat

    Args:
        a: NFA acceptant au moins deux mots
        algorithm: 'detect', 'correct', 'first', 'next' ou 'best'
        prune_diagonals: Pour first, next et best
        deadline: Échéance coopérative

    Returns:
        DistanceResult: Résultat exact, ou paire pour 'correct'
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"algorithme inconnu: {algorithm} (choix: {', '.join(ALGORITHMS)})")
    if algorithm == 'detect':
        return DistanceResult.exact(dist_err_detect(a, deadline))
    if algorithm == 'correct':
        return dist_err_correct(a, deadline)
    if algorithm == 'first':
        return DistanceResult.exact(dist_first_inp_alter(a, prune_diagonals, deadline))
    if algorithm == 'next':
        return DistanceResult.exact(dist_next_inp_alter(a, prune_diagonals, deadline))
    return DistanceResult.exact(dist_best_inp_alter(a, prune_diagonals, deadline))
