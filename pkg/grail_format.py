"""
Module du format texte Grail
============================
Une entrée par ligne:

    (START) |- q
    p x q          (x un symbole, ou @epsilon pour une transition vide)
    q -| (FINAL)

Les noms d'états sont des jetons quelconques, numérotés dans leur ordre
d'apparition. Lignes vides et commentaires '#' ignorés.
"""
import logging
from typing import Dict, List, Optional, Tuple

from automata import Alphabet, Nfa
from constants import EPSILON, GRAIL_FORMAT
from exceptions import GrailParseError

logger = logging.getLogger(__name__)

_MARKERS = {
    GRAIL_FORMAT['start_marker'], GRAIL_FORMAT['start_arrow'],
    GRAIL_FORMAT['final_marker'], GRAIL_FORMAT['final_arrow'],
}


def _is_start_line(tokens: List[str]) -> bool:
    return tokens[0] == GRAIL_FORMAT['start_marker'] and tokens[1] == GRAIL_FORMAT['start_arrow']


def _is_final_line(tokens: List[str]) -> bool:
    return tokens[1] == GRAIL_FORMAT['final_arrow'] and tokens[2] == GRAIL_FORMAT['final_marker']


def parse_nfa(text: str, format: str = 'grail', alphabet: Optional[Alphabet] = None) -> Nfa:
    """
    Lit un NFA au format Grail

    Args:
        text: Contenu du fichier
        format: Seul 'grail' est reconnu
        alphabet: Alphabet imposé; par défaut les symboles dans leur ordre d'apparition

    Returns:
        Nfa: Automate lu

    Raises:
        GrailParseError: Ligne mal formée, aucun ou plusieurs états initiaux
    """
    if format != 'grail':
        raise ValueError(f"format inconnu: {format}")

    states: Dict[str, int] = {}
    symbols: Dict[str, None] = {}
    transitions: List[Tuple[int, str, int]] = []
    finals = set()
    start: Optional[int] = None

    def state_id(name: str) -> int:
        if name not in states:
            states[name] = len(states)
        return states[name]

    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith(GRAIL_FORMAT['comment_prefix']):
            continue
        tokens = stripped.split()
        if len(tokens) != 3:
            raise GrailParseError(number, line, f"3 jetons attendus, {len(tokens)} trouvés")

        if _is_start_line(tokens):
            if start is not None:
                raise GrailParseError(number, line, "second état initial")
            start = state_id(tokens[2])
        elif _is_final_line(tokens):
            finals.add(state_id(tokens[0]))
        else:
            if _MARKERS.intersection(tokens):
                raise GrailParseError(number, line, "marqueur START/FINAL mal placé")
            source, label, target = tokens
            if label == GRAIL_FORMAT['epsilon_token']:
                label = EPSILON
            elif alphabet is not None and label not in alphabet:
                raise GrailParseError(number, line, f"symbole {label!r} absent de l'alphabet")
            else:
                symbols[label] = None
            transitions.append((state_id(source), label, state_id(target)))

    if start is None:
        raise GrailParseError(0, "", "aucune ligne (START)")
    if alphabet is None:
        if not symbols:
            raise GrailParseError(0, "", "aucun symbole: alphabet à fournir")
        alphabet = Alphabet(tuple(symbols))

    a = Nfa(len(states), alphabet, tuple(transitions), start, frozenset(finals))
    logger.debug(f"🔍 NFA lu: {a.num_states} états, {len(a.transitions)} transitions")
    return a


def serialize_nfa(a: Nfa) -> str:
    """
    Écrit un NFA au format Grail, ordre déterministe: ligne initiale,
    transitions triées par (source, symbole, cible) selon l'ordre de
    l'alphabet, puis états finaux triés

    Args:
        a: Automate

    Returns:
        str: Texte terminé par un saut de ligne
    """
    for symbol in a.alphabet:
        if len(symbol.split()) != 1 or symbol in _MARKERS or symbol == GRAIL_FORMAT['epsilon_token']:
            raise ValueError(f"symbole non représentable au format Grail: {symbol!r}")

    def label_rank(label: str) -> int:
        return -1 if label == EPSILON else a.alphabet.index(label)

    lines = [f"{GRAIL_FORMAT['start_marker']} {GRAIL_FORMAT['start_arrow']} {a.start}"]
    for p, x, q in sorted(a.transitions, key=lambda t: (t[0], label_rank(t[1]), t[2])):
        label = GRAIL_FORMAT['epsilon_token'] if x == EPSILON else x
        lines.append(f"{p} {label} {q}")
    lines.extend(f"{f} {GRAIL_FORMAT['final_arrow']} {GRAIL_FORMAT['final_marker']}" for f in sorted(a.finals))
    return '\n'.join(lines) + '\n'
