import pytest
from hypothesis import given, settings

from automata import Alphabet, Nfa, empty_nfa
from exceptions import GrailParseError
from families import gen_family_a, gen_family_b
from grail_format import parse_nfa, serialize_nfa
from oracle import enumerate_language
from strategies import acyclic_nfas


def test_parse_single_transition():
    a = parse_nfa("(START) |- 0\n0 a 1\n1 -| (FINAL)")
    assert a.num_states == 2
    assert a.alphabet.symbols == ('a',)
    assert enumerate_language(a, 3).as_set() == {'a'}


def test_parse_ignores_comments_and_blank_lines():
    text = "# automate {ab}\n\n(START) |- p\np a q\n  # commentaire\nq b r\nr -| (FINAL)\n"
    a = parse_nfa(text)
    assert a.num_states == 3
    assert enumerate_language(a, 3).as_set() == {'ab'}


def test_parse_epsilon_token():
    a = parse_nfa("(START) |- 0\n0 @epsilon 1\n1 x 2\n2 -| (FINAL)")
    assert a.alphabet.symbols == ('x',)
    assert (0, '', 1) in a.transitions
    assert a.accepts(['x'])


def test_parse_multi_character_symbols():
    a = parse_nfa("(START) |- s\ns sym1 t\nt sym2 t\nt -| (FINAL)")
    assert a.alphabet.symbols == ('sym1', 'sym2')
    assert a.accepts(['sym1', 'sym2', 'sym2'])


@pytest.mark.parametrize('text, line_number', [
    ("(START) |- 0\n(START) |- 1\n0 a 1\n1 -| (FINAL)", 2),
    ("(START) |- 0\n0 a\n", 2),
    ("(START) |- 0\n0 a 1 2\n", 2),
    ("(START) |- 0\n0 (FINAL) 1\n", 2),
])
def test_parse_errors_carry_the_line_number(text, line_number):
    with pytest.raises(GrailParseError) as error:
        parse_nfa(text)
    assert error.value.line_number == line_number
    assert f"ligne {line_number}" in str(error.value)


def test_parse_requires_a_start_line():
    with pytest.raises(GrailParseError):
        parse_nfa("0 a 1\n1 -| (FINAL)")


def test_parse_rejects_symbols_outside_the_given_alphabet():
    with pytest.raises(GrailParseError):
        parse_nfa("(START) |- 0\n0 c 1\n1 -| (FINAL)", alphabet=Alphabet(('a', 'b')))


def test_parse_rejects_unknown_format():
    with pytest.raises(ValueError):
        parse_nfa("(START) |- 0\n0 a 1", format='fado')


def test_serialize_is_deterministic():
    a = Nfa(2, Alphabet(('a', 'b')), ((1, 'a', 0), (0, 'b', 1), (0, 'a', 1), (0, '', 0)), 0, frozenset([1, 0]))
    assert serialize_nfa(a) == (
        "(START) |- 0\n"
        "0 @epsilon 0\n"
        "0 a 1\n"
        "0 b 1\n"
        "1 a 0\n"
        "0 -| (FINAL)\n"
        "1 -| (FINAL)\n"
    )


def test_serialize_family_a():
    assert serialize_nfa(gen_family_a(2)) == "(START) |- 0\n0 0 1\n1 1 0\n1 -| (FINAL)\n"


def test_empty_finals_round_trip():
    sigma = Alphabet(('a', 'b'))
    a = empty_nfa(sigma)
    b = parse_nfa(serialize_nfa(a), alphabet=sigma)
    assert b.num_states == 1
    assert not b.finals


def test_round_trip_of_family_a_is_identical():
    a = gen_family_a(5)
    assert parse_nfa(serialize_nfa(a), alphabet=a.alphabet) == a


def test_round_trip_of_family_b_renumbers_states():
    a = gen_family_b(3)
    b = parse_nfa(serialize_nfa(a), alphabet=a.alphabet)
    assert b.num_states == 13
    assert len(b.transitions) == len(a.transitions)
    assert enumerate_language(b, 3).words == ('000', '101')


@settings(max_examples=100, deadline=None)
@given(acyclic_nfas())
def test_round_trip_keeps_counts_and_language(a):
    b = parse_nfa(serialize_nfa(a), alphabet=a.alphabet)
    assert b.num_states == a.num_states
    assert len(b.transitions) == len(a.transitions)
    assert len(b.finals) == len(a.finals)
    assert enumerate_language(b, 8).as_set() == enumerate_language(a, 8).as_set()
