"""
Module de mesure des temps de calcul
====================================
Chaque cellule (automate, algorithme) est lancée une fois pour chauffer,
puis une fois chronométrée, avec une échéance coopérative.
"""
import csv
import logging
import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from automata import Nfa
from constants import ALGORITHMS, BENCH_CSV_HEADER, DEFAULT_SETTINGS, FAMILIES
from distance_algorithms import DistanceResult, compute_distance
from exceptions import DeadlineExceeded
from families import gen_family
from utils import Deadline, format_duration

logger = logging.getLogger(__name__)


@dataclass
class BenchRecord:
    """
    Une cellule du tableau de temps

    Args:
        family: 'A', 'B' ou 'file'
        n: Paramètre de la famille (0 pour un fichier)
        nfa_states: Nombre d'états de l'automate
        algorithm: Nom de l'algorithme ('detect', 'correct', ...)
        result: Résultat, None si le temps limite est dépassé
        wall_time: Durée mesurée, au plus le temps limite
        timed_out: True si le temps limite est dépassé
    """
    family: str
    n: int
    nfa_states: int
    algorithm: str
    result: Optional[DistanceResult]
    wall_time: float
    timed_out: bool

    def csv_row(self) -> List[str]:
        return [
            self.family, str(self.n), str(self.nfa_states), self.algorithm,
            '' if self.result is None else str(self.result),
            f"{self.wall_time:.6f}", 'true' if self.timed_out else 'false',
        ]


def _timed_run(a: Nfa, algorithm: str, timeout: float, prune: bool) -> Tuple[Optional[DistanceResult], float]:
    deadline = Deadline(timeout)
    started = time.perf_counter()
    try:
        result = compute_distance(a, algorithm, prune, deadline)
    except DeadlineExceeded:
        result = None
    return result, time.perf_counter() - started


def bench_cell(a: Nfa, family: str, n: int, algorithm: str, timeout: float,
               prune: bool = False, warmup: bool = DEFAULT_SETTINGS['bench_warmup']) -> BenchRecord:
    """
    Mesure un algorithme sur un automate

    Args:
        a: Automate
        family: Libellé de la famille
        n: Paramètre de la famille
        algorithm: Nom de l'algorithme
        timeout: Temps limite en secondes (chauffe et mesure)
        prune: Variante sans transitions diagonales
        warmup: Lance une exécution non mesurée avant la mesure

    Returns:
        BenchRecord: Cellule mesurée
    """
    if warmup:
        result, _ = _timed_run(a, algorithm, timeout, prune)
        if result is None:
            logger.info(f"⏱️ {family}_{n} {algorithm}: temps limite dépassé à la chauffe")
            return BenchRecord(family, n, a.num_states, algorithm, None, timeout, True)
    result, elapsed = _timed_run(a, algorithm, timeout, prune)
    timed_out = result is None
    record = BenchRecord(family, n, a.num_states, algorithm, result, min(elapsed, timeout), timed_out)
    logger.info(f"⏱️ {family}_{n} {algorithm}: {format_duration(record.wall_time)}")
    return record


def run_cells(cells: Iterable[Tuple[str, int, Nfa]], algos: Sequence[str], timeout: float,
              csv_path: Optional[str] = None, prune: bool = False) -> List[BenchRecord]:
    """
    Mesure chaque algorithme sur chaque automate, séquentiellement

    Args:
        cells: Triplets (famille, n, automate)
        algos: Algorithmes à mesurer
        timeout: Temps limite par cellule
        csv_path: Fichier CSV de sortie (optionnel)
        prune: Variante sans transitions diagonales

    Returns:
        List[BenchRecord]: Cellules dans l'ordre (automate, algorithme)
    """
    for algorithm in algos:
        if algorithm not in ALGORITHMS:
            raise ValueError(f"algorithme inconnu: {algorithm}")
    records = [
        bench_cell(a, family, n, algorithm, timeout, prune)
        for family, n, a in cells
        for algorithm in algos
    ]
    if csv_path:
        write_csv(records, csv_path)
    return records


def run_bench(family: str, n_list: Sequence[int], algos: Sequence[str],
              timeout: float = DEFAULT_SETTINGS['bench_timeout'],
              csv_path: Optional[str] = None, prune: bool = False) -> List[BenchRecord]:
    """Mesure les algorithmes sur A_n ou B_n pour chaque n de la liste"""
    label = FAMILIES[family.lower()]
    cells = ((label, n, gen_family(family, n)) for n in n_list)
    return run_cells(cells, algos, timeout, csv_path, prune)


def write_csv(records: Iterable[BenchRecord], csv_path: str) -> None:
    with open(csv_path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(BENCH_CSV_HEADER)
        for record in records:
            writer.writerow(record.csv_row())


def format_summary(records: Sequence[BenchRecord]) -> str:
    """
    Tableau aligné: une ligne par automate « A_5 (5) », une colonne par algorithme

    Les cellules hors délai affichent >timeout.
    """
    algos = list(dict.fromkeys(r.algorithm for r in records))
    rows = list(dict.fromkeys((r.family, r.n, r.nfa_states) for r in records))
    cells = {(r.family, r.n, r.nfa_states, r.algorithm): r for r in records}

    table = [[''] + [ALGORITHMS[a] for a in algos]]
    for family, n, states in rows:
        line = [f"{family}_{n} ({states})"]
        for algorithm in algos:
            record = cells.get((family, n, states, algorithm))
            if record is None:
                line.append('-')
            elif record.timed_out:
                line.append('>timeout')
            else:
                line.append(format_duration(record.wall_time))
        table.append(line)

    widths = [max(len(row[c]) for row in table) for c in range(len(table[0]))]
    return '\n'.join(
        '  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in table
    )
