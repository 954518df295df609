"""
Stratégies hypothesis partagées
"""
from hypothesis import strategies as st

from automata import Alphabet, Nfa
from edit_strings import EditString
from transducers import Transducer

AB = Alphabet(('a', 'b'))
ABC = Alphabet(('a', 'b', 'c'))

EDIT_PAIRS = [
    ('a', 'a'), ('b', 'b'), ('a', 'b'), ('b', 'a'),
    ('a', ''), ('b', ''), ('', 'a'), ('', 'b'),
]

words_ab = st.text(alphabet='ab', max_size=6)

edit_strings = st.lists(st.sampled_from(EDIT_PAIRS), max_size=8).map(EditString.of)


@st.composite
def acyclic_nfas(draw, max_states: int = 8):
    """
    NFA acyclique émondé: une chaîne 0 -> 1 -> ... -> n-1 plus des
    transitions avant aléatoires; n-1 est toujours final
    """
    alphabet = draw(st.sampled_from([AB, ABC]))
    n = draw(st.integers(min_value=2, max_value=max_states))
    symbol = st.sampled_from(alphabet.symbols)
    transitions = [(i, draw(symbol), i + 1) for i in range(n - 1)]
    forward = st.tuples(st.integers(0, n - 2), symbol, st.integers(1, n - 1)).filter(lambda e: e[0] < e[2])
    transitions += draw(st.lists(forward, min_size=1, max_size=2 * n))
    finals = draw(st.sets(st.integers(0, n - 1), max_size=3)) | {n - 1}
    return Nfa(n, alphabet, tuple(transitions), 0, frozenset(finals))


@st.composite
def realtime_transducers(draw, num_states: int = 2):
    """Petits transducteurs sur {a,b}: chaque transition lit un symbole"""
    state = st.integers(0, num_states - 1)
    edge = st.tuples(state, st.sampled_from('ab'), st.sampled_from(['', 'a', 'b']), state)
    transitions = draw(st.lists(edge, min_size=1, max_size=6))
    finals = draw(st.sets(state, min_size=1))
    return Transducer(num_states, AB, AB, tuple(transitions), 0, frozenset(finals))


UNARY = Alphabet(('a',))


@st.composite
def epsilon_transducers(draw, num_states: int = 4):
    """
    Transducteurs unaires avec transitions à entrée vide; l'alphabet unaire
    garde l'énumération exhaustive des sorties praticable
    """
    state = st.integers(0, num_states - 1)
    edge = st.tuples(state, st.sampled_from(['', 'a']), st.sampled_from(['', 'a']), state)
    transitions = draw(st.lists(edge.filter(lambda e: e[1] or e[2]), min_size=1, max_size=8))
    finals = draw(st.sets(state, min_size=1, max_size=2))
    return Transducer(num_states, UNARY, UNARY, tuple(transitions), 0, frozenset(finals))
