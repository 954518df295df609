import csv

import pytest

from edit_distance_cli import main
from families import gen_family_a, gen_family_b
from grail_format import serialize_nfa
from automata import Nfa


@pytest.fixture
def write_nfa(tmp_path):
    def write(a, name='a.grail'):
        path = tmp_path / name
        path.write_text(serialize_nfa(a), encoding='utf-8')
        return str(path)
    return write


def test_compute_best_on_family_a(write_nfa, capsys):
    assert main(['compute', '--algo', 'best', write_nfa(gen_family_a(8))]) == 0
    assert capsys.readouterr().out.strip() == '8'


def test_compute_correct_on_family_b(write_nfa, capsys):
    assert main(['compute', '--algo', 'correct', write_nfa(gen_family_b(3))]) == 0
    assert capsys.readouterr().out.strip() == '1 2'


@pytest.mark.parametrize('algo', ['detect', 'first', 'next', 'best'])
def test_compute_matches_library(algo, write_nfa, capsys):
    path = write_nfa(gen_family_a(4))
    assert main(['compute', '--algo', algo, '--prune-diagonals', path]) == 0
    assert capsys.readouterr().out.strip() == '4'


def test_oracle(write_nfa, capsys):
    assert main(['oracle', '--max-len', '8', write_nfa(Nfa.from_words(['aa', 'ab']))]) == 0
    assert capsys.readouterr().out.strip() == '1'


def test_gen_prints_grail(capsys):
    assert main(['gen', '--family', 'a', '--n', '3']) == 0
    assert capsys.readouterr().out == serialize_nfa(gen_family_a(3))


def test_single_word_exits_with_3(write_nfa, capsys):
    assert main(['compute', write_nfa(Nfa.from_words(['ab']))]) == 3
    assert "language must contain at least two words" in capsys.readouterr().err


def test_parse_error_exits_with_2(tmp_path, capsys):
    path = tmp_path / 'bad.grail'
    path.write_text("(START) |- 0\n0 a\n", encoding='utf-8')
    assert main(['compute', str(path)]) == 2
    assert 'ligne 2' in capsys.readouterr().err


def test_missing_file_exits_with_2(tmp_path):
    assert main(['compute', str(tmp_path / 'absent.grail')]) == 2


def test_usage_error_exits_with_2():
    assert main(['compute', '--algo', 'fastest', 'x.grail']) == 2
    assert main([]) == 2


def test_timeout_exits_with_4(write_nfa, capsys):
    assert main(['compute', '--algo', 'first', '--timeout', '1e-9', write_nfa(gen_family_a(12))]) == 4
    assert capsys.readouterr().out == ''


def test_bench_writes_csv(tmp_path, capsys):
    path = tmp_path / 'out.csv'
    code = main(['bench', '--family', 'a', '--n-list', '3,5', '--algos', 'best,first',
                 '--timeout', '30', '--csv', str(path)])
    assert code == 0
    with open(path, newline='', encoding='utf-8') as f:
        rows = list(csv.DictReader(f))
    assert [(row['n'], row['algorithm'], row['result']) for row in rows] == [
        ('3', 'best', '3'), ('3', 'first', '3'), ('5', 'best', '5'), ('5', 'first', '5'),
    ]
    assert 'A_5 (5)' in capsys.readouterr().out


def test_info(write_nfa, capsys):
    assert main(['info', write_nfa(gen_family_a(5))]) == 0
    out = capsys.readouterr().out
    assert 'états: 5' in out
    assert 'D_A: 5 (0000 / 000010000)' in out


def test_zero_timeout_is_a_deadline(write_nfa, capsys):
    assert main(['compute', '--algo', 'best', '--timeout', '0', write_nfa(gen_family_a(8))]) == 4
    assert capsys.readouterr().out == ''
