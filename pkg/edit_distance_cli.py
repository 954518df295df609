"""
Interface en ligne de commande
==============================
    compute --algo {detect,correct,first,next,best} [--prune-diagonals] [--timeout S] FILE
    oracle --max-len N FILE
    gen --family {a,b} --n N
    bench --family {a,b} --n-list 5,8,13 --algos best,first --timeout S --csv PATH
    info FILE

Les résultats vont sur la sortie standard, les messages et journaux sur la
sortie d'erreur. Codes de sortie: 0 succès, 2 usage ou fichier invalide,
3 moins de deux mots, 4 temps limite dépassé.
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence

from automata import Nfa, prepare, shortest_two_words
from bench import format_summary, run_bench, run_cells
from constants import ALGORITHMS, CLI_MESSAGES, DEFAULT_SETTINGS, EXIT_CODES, FAMILIES, LOG_FORMAT
from distance_algorithms import compute_distance
from edit_strings import edit_distance_words
from exceptions import DeadlineExceeded, GrailParseError, TwoWordsRequiredError
from families import gen_family
from grail_format import parse_nfa, serialize_nfa
from oracle import brute_inner_distance
from utils import Deadline, format_word, read_text_file

logger = logging.getLogger(__name__)


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"liste d'entiers attendue: {text!r}")


def _algo_list(text: str) -> List[str]:
    algos = [item.strip() for item in text.split(',') if item.strip()]
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown or not algos:
        raise argparse.ArgumentTypeError(f"algorithmes inconnus: {', '.join(unknown) or text!r}")
    return algos


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='edit_distance_cli',
        description="Distance d'édition intérieure d'un langage régulier donné par un NFA"
    )
    parser.add_argument('--verbose', '-v', action='store_true', help="journaux détaillés (DEBUG)")
    commands = parser.add_subparsers(dest='command', required=True)

    compute = commands.add_parser('compute', help="calcule la distance d'un NFA au format Grail")
    compute.add_argument('--algo', choices=list(ALGORITHMS), default=DEFAULT_SETTINGS['algorithm'])
    compute.add_argument('--prune-diagonals', action='store_true', default=DEFAULT_SETTINGS['prune_diagonals'])
    compute.add_argument('--timeout', type=float, default=None, help="secondes")
    compute.add_argument('file')

    oracle = commands.add_parser('oracle', help="distance par énumération (langages finis)")
    oracle.add_argument('--max-len', type=int, default=DEFAULT_SETTINGS['oracle_max_len'])
    oracle.add_argument('file')

    gen = commands.add_parser('gen', help="écrit A_n ou B_n au format Grail")
    gen.add_argument('--family', choices=list(FAMILIES), required=True)
    gen.add_argument('--n', type=int, required=True)

    bench = commands.add_parser('bench', help="mesure les algorithmes sur une famille")
    source = bench.add_mutually_exclusive_group(required=True)
    source.add_argument('--family', choices=list(FAMILIES))
    source.add_argument('--file')
    bench.add_argument('--n-list', type=_int_list, default=[])
    bench.add_argument('--algos', type=_algo_list, default=list(ALGORITHMS))
    bench.add_argument('--timeout', type=float, default=DEFAULT_SETTINGS['bench_timeout'])
    bench.add_argument('--csv', dest='csv_path')
    bench.add_argument('--prune-diagonals', action='store_true', default=DEFAULT_SETTINGS['prune_diagonals'])

    info = commands.add_parser('info', help="taille, alphabet et borne D_A")
    info.add_argument('file')
    return parser


def _load(path: str) -> Nfa:
    return parse_nfa(read_text_file(path))


def _cmd_compute(args) -> int:
    a = _load(args.file)
    deadline = Deadline(args.timeout) if args.timeout is not None else None
    result = compute_distance(a, args.algo, args.prune_diagonals, deadline)
    print(result)
    return EXIT_CODES['ok']


def _cmd_oracle(args) -> int:
    print(brute_inner_distance(_load(args.file), args.max_len))
    return EXIT_CODES['ok']


def _cmd_gen(args) -> int:
    sys.stdout.write(serialize_nfa(gen_family(args.family, args.n)))
    return EXIT_CODES['ok']


def _cmd_bench(args) -> int:
    if args.file:
        records = run_cells([('file', 0, _load(args.file))], args.algos, args.timeout,
                            args.csv_path, args.prune_diagonals)
    else:
        if not args.n_list:
            print("❌ --n-list est requis avec --family", file=sys.stderr)
            return EXIT_CODES['usage']
        records = run_bench(args.family, args.n_list, args.algos, args.timeout,
                            args.csv_path, args.prune_diagonals)
    print(format_summary(records))
    if args.csv_path:
        print(f"{CLI_MESSAGES['bench_written']} {args.csv_path}", file=sys.stderr)
    return EXIT_CODES['ok']


def _cmd_info(args) -> int:
    a = _load(args.file)
    trimmed = prepare(a)
    print(f"états: {a.num_states}")
    print(f"transitions: {len(a.transitions)}")
    print(f"taille: {a.size}")
    print(f"alphabet: {' '.join(a.alphabet)}")
    print(f"états utiles: {trimmed.num_states}")
    u, v = shortest_two_words(a)
    print(f"D_A: {edit_distance_words(u, v)} ({format_word(u)} / {format_word(v)})")
    return EXIT_CODES['ok']


COMMANDS = {
    'compute': _cmd_compute,
    'oracle': _cmd_oracle,
    'gen': _cmd_gen,
    'bench': _cmd_bench,
    'info': _cmd_info,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Point d'entrée

    Args:
        argv: Arguments (sys.argv[1:] par défaut)

    Returns:
        int: Code de sortie
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CODES['ok'] if exc.code in (0, None) else EXIT_CODES['usage']

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )

    try:
        return COMMANDS[args.command](args)
    except TwoWordsRequiredError:
        print(CLI_MESSAGES['too_few_words'], file=sys.stderr)
        return EXIT_CODES['too_few_words']
    except DeadlineExceeded as exc:
        print(f"{CLI_MESSAGES['timeout']}: {exc}", file=sys.stderr)
        return EXIT_CODES['timeout']
    except GrailParseError as exc:
        print(f"{CLI_MESSAGES['parse_error']}: {exc}", file=sys.stderr)
        return EXIT_CODES['usage']
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"{CLI_MESSAGES['file_error']}: {exc}", file=sys.stderr)
        return EXIT_CODES['usage']
    except ValueError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_CODES['usage']


if __name__ == '__main__':
    sys.exit(main())
