"""
Familles d'automates de test
============================
- A_n : n états, langage 0^(n-1)(10^(n-1))*, distance n
- B_n : n²+n+1 états, code de Levenshtein (mots b_1..b_n avec Σ i·b_i ≡ 0 mod n+1), distance 2
"""
import logging

from automata import Alphabet, Nfa
from constants import LIMITS

logger = logging.getLogger(__name__)

BINARY = Alphabet(('0', '1'))


def _check_size(n: int) -> None:
    if n < LIMITS['family_min_n']:
        raise ValueError(f"n doit être >= {LIMITS['family_min_n']} (reçu {n})")


def gen_family_a(n: int) -> Nfa:
    """
    Automate A_n: chaîne de transitions 0 de l'état 0 à l'état n-1 (final),
    puis retour vers 0 par une transition 1

    Args:
        n: Nombre d'états (>= 2)

    Returns:
        Nfa: n états, n transitions
    """
    _check_size(n)
    transitions = tuple((i, '0', i + 1) for i in range(n - 1)) + ((n - 1, '1', 0),)
    return Nfa(n, BINARY, transitions, 0, frozenset([n - 1]))


def gen_family_b(n: int) -> Nfa:
    """
    Automate B_n du code de Levenshtein

    L'état [i,s] (0 <= i <= n-1, 0 <= s <= n) a l'identifiant i·(n+1)+s et
    mémorise s = Σ j·b_j mod (n+1) après i symboles; [n,0] est le seul état
    final. Au dernier niveau seules les transitions vers [n,0] existent.

    Args:
        n: Longueur des mots (>= 2)

    Returns:
        Nfa: n²+n+1 états, départ [0,0]
    """
    _check_size(n)
    width = n + 1
    final = n * width
    transitions = []
    for i in range(n):
        for s in range(width):
            source = i * width + s
            for symbol, shift in (('0', 0), ('1', i + 1)):
                target = (s + shift) % width
                if i < n - 1:
                    transitions.append((source, symbol, (i + 1) * width + target))
                elif target == 0:
                    transitions.append((source, symbol, final))
    logger.debug(f"🔍 B_{n}: {final + 1} états, {len(transitions)} transitions")
    return Nfa(final + 1, BINARY, tuple(transitions), 0, frozenset([final]))


def gen_family(family: str, n: int) -> Nfa:
    """Générateur par nom de famille ('a' ou 'b')"""
    generators = {'a': gen_family_a, 'b': gen_family_b}
    key = family.lower()
    if key not in generators:
        raise ValueError(f"famille inconnue: {family}")
    return generators[key](n)
