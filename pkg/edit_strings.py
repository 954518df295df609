"""
Module des chaînes d'édition
============================
Opérations d'édition (x/y), poids, projections, inverse, forme réduite
et distance d'édition (Levenshtein) entre deux mots.

Les algorithmes de distance ne construisent jamais de chaînes d'édition:
ce module sert aux bornes, aux oracles et aux tests.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from constants import EPSILON, LIMITS
from exceptions import InvariantViolation

logger = logging.getLogger(__name__)

Word = Union[str, Tuple[str, ...]]


def _as_word(symbols: Sequence[str]) -> Word:
    symbols = tuple(symbols)
    return ''.join(symbols) if all(len(s) == 1 for s in symbols) else symbols


@dataclass(frozen=True)
class EditOp:
    """
    Opération d'édition (input/output); EPSILON représente le côté vide

    Args:
        input: Symbole lu ou EPSILON
        output: Symbole écrit ou EPSILON
    """
    input: str
    output: str

    def __post_init__(self):
        if self.input == EPSILON and self.output == EPSILON:
            raise ValueError("une opération d'édition a au moins un côté non vide")

    @property
    def is_error(self) -> bool:
        return self.input != self.output

    @property
    def kind(self) -> str:
        if not self.is_error:
            return 'match'
        if self.input == EPSILON:
            return 'insertion'
        if self.output == EPSILON:
            return 'deletion'
        return 'substitution'

    def inverted(self) -> 'EditOp':
        return EditOp(self.output, self.input)

    def __str__(self) -> str:
        return f"({self.input or 'ε'}/{self.output or 'ε'})"


@dataclass(frozen=True)
class EditString:
    """Suite finie d'opérations d'édition"""
    ops: Tuple[EditOp, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'ops', tuple(self.ops))

    @classmethod
    def of(cls, pairs: Iterable[Tuple[str, str]]) -> 'EditString':
        """EditString.of([('a', 'a'), ('a', '')]) pour (a/a)(a/ε)"""
        return cls(tuple(EditOp(x, y) for x, y in pairs))

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __str__(self) -> str:
        return ''.join(str(op) for op in self.ops) or 'λ'


def weight(h: EditString) -> int:
    """Nombre d'erreurs de h"""
    return sum(1 for op in h.ops if op.is_error)


def projections(h: EditString) -> Tuple[Word, Word]:
    """(inp(h), out(h))"""
    inp = [op.input for op in h.ops if op.input != EPSILON]
    out = [op.output for op in h.ops if op.output != EPSILON]
    return _as_word(inp), _as_word(out)


def inverse(h: EditString) -> EditString:
    """Échange entrée et sortie de chaque opération"""
    return EditString(tuple(op.inverted() for op in h.ops))


def _first_error(ops: Sequence[EditOp]) -> int:
    for i, op in enumerate(ops):
        if op.is_error:
            return i
    return -1


def _next_non_deletion(ops: Sequence[EditOp], start: int) -> int:
    j = start
    while j < len(ops) and ops[j].kind == 'deletion':
        j += 1
    return j


def is_reduced(h: EditString) -> bool:
    """
    Forme réduite: la première erreur n'est pas une insertion et, si c'est
    une suppression (a/ε), la première opération suivante qui n'est pas une
    suppression n'écrit pas a

    Args:
        h: Chaîne d'édition de poids non nul

    Returns:
        bool: True si h est réduite
    """
    i = _first_error(h.ops)
    if i < 0:
        raise ValueError("la forme réduite n'est définie que pour un poids non nul")
    first = h.ops[i]
    if first.kind == 'insertion':
        return False
    if first.kind == 'substitution':
        return True
    j = _next_non_deletion(h.ops, i + 1)
    return j == len(h.ops) or h.ops[j].output != first.input


def reduce(h: EditString) -> EditString:
    """
    Réécrit h en forme réduite (inversion si la première erreur est une
    insertion, puis échange suppression / opération qui écrit le même symbole)

    Les projections sont conservées, échangées si une inversion a eu lieu.
    Le poids est conservé quand h réalise la distance entre ses projections;
    sinon il ne peut que diminuer.

    Args:
        h: Chaîne d'édition avec inp(h) != out(h)

    Returns:
        EditString: Chaîne réduite
    """
    inp, out = projections(h)
    if inp == out:
        raise ValueError("reduce exige inp(h) != out(h)")
    ops: List[EditOp] = list(h.ops)
    cap = max(len(ops), 1) ** LIMITS['reduce_iterations_power'] + 2
    for _ in range(cap):
        i = _first_error(ops)
        first = ops[i]
        if first.kind == 'substitution':
            return EditString(tuple(ops))
        if first.kind == 'insertion':
            ops = [op.inverted() for op in ops]
            continue
        a = first.input
        j = _next_non_deletion(ops, i + 1)
        if j == len(ops) or ops[j].output != a:
            return EditString(tuple(ops))
        x = ops[j].input
        rewritten = ops[:i] + [EditOp(a, a)] + ops[i + 1:j]
        if x != EPSILON:
            rewritten.append(EditOp(x, EPSILON))
        ops = rewritten + ops[j + 1:]
    raise InvariantViolation(f"reduce n'a pas convergé en {cap} étapes pour {h}")


def _distance_table(u: Sequence[str], v: Sequence[str]) -> np.ndarray:
    """Table de programmation dynamique (|u|+1) x (|v|+1), coûts unitaires"""
    m, n = len(u), len(v)
    table = np.zeros((m + 1, n + 1), dtype=np.int64)
    table[0, :] = np.arange(n + 1)
    table[:, 0] = np.arange(m + 1)
    if m == 0 or n == 0:
        return table
    v_symbols = np.array(list(v), dtype=object)
    columns = np.arange(n + 1)
    for i in range(1, m + 1):
        previous = table[i - 1]
        mismatch = (v_symbols != u[i - 1]).astype(np.int64)
        candidates = np.empty(n + 1, dtype=np.int64)
        candidates[0] = i
        candidates[1:] = np.minimum(previous[:-1] + mismatch, previous[1:] + 1)
        # insertions: row[j] = min_{k<=j} candidates[k] + (j - k)
        table[i] = np.minimum.accumulate(candidates - columns) + columns
    return table


def edit_distance_words(u: Sequence[str], v: Sequence[str]) -> int:
    """Distance de Levenshtein entre deux mots"""
    return int(_distance_table(tuple(u), tuple(v))[len(u), len(v)])


def optimal_edit_string(u: Sequence[str], v: Sequence[str]) -> EditString:
    """
    Chaîne d'édition de poids minimal avec inp = u et out = v

    Remontée de la table: correspondance/substitution d'abord, puis
    suppression, puis insertion.
    """
    u, v = tuple(u), tuple(v)
    table = _distance_table(u, v)
    i, j = len(u), len(v)
    ops: List[EditOp] = []
    while i > 0 or j > 0:
        if i > 0 and j > 0 and table[i, j] == table[i - 1, j - 1] + (u[i - 1] != v[j - 1]):
            ops.append(EditOp(u[i - 1], v[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and table[i, j] == table[i - 1, j] + 1:
            ops.append(EditOp(u[i - 1], EPSILON))
            i -= 1
        else:
            ops.append(EditOp(EPSILON, v[j - 1]))
            j -= 1
    return EditString(tuple(reversed(ops)))
