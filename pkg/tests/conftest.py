import pytest

from automata import Alphabet, Nfa
from families import gen_family_a, gen_family_b


@pytest.fixture
def ab():
    return Alphabet(('a', 'b'))


@pytest.fixture
def nfa_aa_ab():
    return Nfa.from_words(['aa', 'ab'])


@pytest.fixture
def nfa_ab(ab):
    return Nfa.from_words(['ab'], ab)


@pytest.fixture
def nfa_a_b(ab):
    return Nfa.from_words(['a', 'b'], ab)


@pytest.fixture
def empty_language(ab):
    return Nfa(2, ab, ((0, 'a', 1),), 0, frozenset())


@pytest.fixture
def family_a():
    return gen_family_a


@pytest.fixture
def family_b():
    return gen_family_b
