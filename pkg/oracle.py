"""
Module des oracles par force brute
==================================
Vérités de terrain indépendantes des algorithmes: énumération d'un langage,
distance intérieure exacte d'un langage fini, sorties d'un transducteur et
fonctionnalité par énumération. Exponentiels: réservés aux petites instances.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from automata import Alphabet, Nfa, Word, coreachable_states
from edit_strings import edit_distance_words
from exceptions import TwoWordsRequiredError
from transducers import Transducer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WordSet:
    """
    Ensemble fini de mots en ordre longueur-lexicographique

    Args:
        words: Mots sans doublon, triés
        truncation_bound: Longueur maximale énumérée
    """
    words: Tuple[Word, ...]
    truncation_bound: int

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, word) -> bool:
        return word in self.as_set()

    def as_set(self) -> FrozenSet[Word]:
        return frozenset(self.words)


def _word_set(words: Iterable[Sequence[str]], alphabet: Alphabet, bound: int) -> WordSet:
    unique = {tuple(w) for w in words}
    ordered = sorted(unique, key=alphabet.sort_key)
    return WordSet(tuple(alphabet.word(w) for w in ordered), bound)


def enumerate_language(a: Nfa, max_len: int) -> WordSet:
    """
    Tous les mots de L(a) de longueur <= max_len

    Parcours en largeur des ensembles d'états fermés par ε; les symboles sont
    essayés dans l'ordre de l'alphabet, chaque couche sort donc triée.

    Args:
        a: Automate (transitions ε autorisées)
        max_len: Longueur maximale

    Returns:
        WordSet: Mots acceptés en ordre longueur-lexicographique
    """
    useful = coreachable_states(a)
    start = a.epsilon_closure([a.start]) & useful
    layer: List[Tuple[Tuple[str, ...], FrozenSet[int]]] = [((), start)] if start else []
    accepted: List[Tuple[str, ...]] = []
    for length in range(max_len + 1):
        accepted.extend(w for w, states in layer if states & a.finals)
        if length == max_len:
            break
        following = []
        for w, states in layer:
            for symbol in a.alphabet:
                moved = a.step(states, symbol) & useful
                if moved:
                    following.append((w + (symbol,), moved))
        layer = following
    return WordSet(tuple(a.alphabet.word(w) for w in accepted), max_len)


def brute_inner_distance(a: Nfa, max_len: int) -> int:
    """
    Plus petite distance d'édition entre deux mots distincts énumérés

    Exacte si L(a) est fini et max_len couvre le plus long mot; sinon un
    majorant de la distance du langage.

    Args:
        a: Automate
        max_len: Longueur maximale de l'énumération

    Returns:
        int: Distance minimale sur les paires énumérées
    """
    words = enumerate_language(a, max_len).words
    if len(words) < 2:
        raise TwoWordsRequiredError()
    best = None
    for u, v in itertools.combinations(words, 2):
        # minorant |u|-|v| pour éviter la table quand elle ne peut pas gagner
        if best is not None and abs(len(u) - len(v)) >= best:
            continue
        d = edit_distance_words(u, v)
        if best is None or d < best:
            best = d
            if best == 1:
                break
    logger.debug(f"🔍 Oracle: {len(words)} mots, distance {best}")
    return best


def brute_outputs(t: Transducer, x: Sequence[str], max_out_len: Optional[int] = None) -> WordSet:
    """
    Sorties y avec (x, y) dans R(t) et |y| <= max_out_len

    Recherche exhaustive des chemins; un triplet (état, position d'entrée,
    sortie) n'est visité qu'une fois, ce qui borne les cycles à entrée vide.

    Args:
        t: Transducteur
        x: Mot d'entrée
        max_out_len: Longueur maximale des sorties (par défaut |x| + nombre d'états)

    Returns:
        WordSet: Sorties triées
    """
    x = tuple(x)
    if max_out_len is None:
        max_out_len = len(x) + t.num_states
    seen: Set[Tuple[int, int, Tuple[str, ...]]] = set()
    outputs: Set[Tuple[str, ...]] = set()
    stack = [(t.start, 0, ())]
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        p, pos, out = state
        if pos == len(x) and p in t.finals:
            outputs.add(out)
        for x_label, y_label, q in t.out_edges[p]:
            if x_label:
                if pos == len(x) or x[pos] != x_label:
                    continue
                next_pos = pos + 1
            else:
                next_pos = pos
            next_out = out + (y_label,) if y_label else out
            if len(next_out) > max_out_len:
                continue
            stack.append((q, next_pos, next_out))
    return _word_set(outputs, t.output_alphabet, max_out_len)


def _inputs_up_to(alphabet: Alphabet, max_len: int) -> Iterator[Tuple[str, ...]]:
    for length in range(max_len + 1):
        yield from itertools.product(alphabet.symbols, repeat=length)


def functionality_witness(t: Transducer, max_in_len: int) -> Optional[Word]:
    """Première entrée (ordre longueur-lexicographique) ayant deux sorties, None sinon"""
    for x in _inputs_up_to(t.input_alphabet, max_in_len):
        if len(brute_outputs(t, x, max_in_len + t.num_states)) > 1:
            return t.input_alphabet.word(x)
    return None


def brute_is_functional(t: Transducer, max_in_len: int) -> bool:
    """
    Semi-décision de la fonctionnalité: False est définitif, True signifie
    « pas de contre-exemple d'entrée de longueur <= max_in_len »
    """
    return functionality_witness(t, max_in_len) is None


def is_input_altering(t: Transducer, words: Iterable[Sequence[str]]) -> bool:
    """Vrai si aucun mot de l'échantillon n'est dans sa propre image"""
    for w in words:
        w = tuple(w)
        if t.output_alphabet.word(w) in brute_outputs(t, w, len(w)):
            logger.debug(f"⚠️ {w} appartient à son image")
            return False
    return True
