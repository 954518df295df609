import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from automata import Alphabet, Nfa
from families import gen_family_a, gen_family_b
from functionality import NO_DELAY, advance_delay, is_functional, square_size
from oracle import brute_is_functional, functionality_witness
from strategies import UNARY, acyclic_nfas, epsilon_transducers, realtime_transducers
from transducers import (
    Transducer, build_channel_transducer, build_iat_transducer, correct_product,
    detect_product, identity_transducer,
)

AB = Alphabet(('a', 'b'))


def test_advance_delay_strips_common_prefix():
    assert advance_delay(NO_DELAY, 'a', 'a') == NO_DELAY
    assert advance_delay(NO_DELAY, 'a', '') == (('a',), ())
    assert advance_delay((('a',), ()), '', 'a') == NO_DELAY
    assert advance_delay(NO_DELAY, 'a', 'b') is None


def test_identity_is_functional():
    t = identity_transducer(AB)
    assert is_functional(t)
    assert brute_is_functional(t, 6)


def test_channel_is_not_functional():
    t = build_channel_transducer(1, AB)
    assert not is_functional(t)
    assert not brute_is_functional(t, 2)
    assert functionality_witness(t, 2) == ''


def test_detect_product_of_single_word_is_functional():
    t = detect_product(build_channel_transducer(1, AB), Nfa.from_words(['ab'], AB))
    assert is_functional(t)
    assert brute_is_functional(t, 4)


def test_correct_product_of_two_letters_is_not_functional():
    t = correct_product(build_channel_transducer(1, AB), Nfa.from_words(['a', 'b'], AB))
    assert not is_functional(t)
    assert functionality_witness(t, 1) is not None


def test_empty_transducer_is_functional():
    t = Transducer(1, AB, AB, ((0, 'a', 'b', 0),), 0, frozenset())
    assert is_functional(t)


def test_epsilon_input_loop_with_output_is_not_functional():
    t = Transducer(1, AB, AB, ((0, '', 'a', 0),), 0, frozenset([0]))
    assert not is_functional(t)
    assert functionality_witness(t, 0) == ''


def test_delayed_outputs_that_meet_again_are_functional():
    # a/ab puis b/ε d'un côté, a/a puis b/b de l'autre: même sortie "ab"
    t = Transducer(
        5, AB, AB,
        ((0, 'a', 'a', 1), (1, '', 'b', 2), (2, 'b', '', 3),
         (0, 'a', 'a', 4), (4, 'b', 'b', 3)),
        0, frozenset([3]),
    )
    assert is_functional(t)
    assert brute_is_functional(t, 4)


def test_delayed_outputs_that_disagree_are_not_functional():
    t = Transducer(
        5, AB, AB,
        ((0, 'a', 'a', 1), (1, '', 'b', 2), (2, 'b', '', 3),
         (0, 'a', 'a', 4), (4, 'b', 'a', 3)),
        0, frozenset([3]),
    )
    assert not is_functional(t)
    assert functionality_witness(t, 2) == 'ab'


@pytest.mark.parametrize('k', [1, 2])
def test_iat_transducer_is_not_functional(k):
    assert not is_functional(build_iat_transducer(k, AB))


@settings(max_examples=100, deadline=None)
@given(realtime_transducers())
def test_agrees_with_brute_force(t):
    # sur 2 états le carré a au plus 4 paires: un témoin a une longueur <= 7
    functional = is_functional(t)
    assert functional == brute_is_functional(t, 7)
    if functional:
        assert brute_is_functional(t, 6)


@pytest.mark.parametrize('make, n', [
    (gen_family_a, 2), (gen_family_a, 3), (gen_family_a, 4), (gen_family_a, 5),
    (gen_family_b, 3),
])
def test_error_detection_and_correction_characterizations(make, n):
    a = make(n)
    d = n if make is gen_family_a else 2
    for k in range(1, min(d + 1, 4) + 1):
        channel = build_channel_transducer(k, a.alphabet)
        assert is_functional(detect_product(channel, a)) == (k < d)
        assert is_functional(correct_product(channel, a)) == (2 * k < d)


@pytest.mark.slow
@pytest.mark.parametrize('make, n', [(gen_family_a, 6), (gen_family_b, 4)])
def test_error_detection_and_correction_characterizations_larger(make, n):
    a = make(n)
    d = n if make is gen_family_a else 2
    for k in range(1, min(d + 1, 4) + 1):
        channel = build_channel_transducer(k, a.alphabet)
        assert is_functional(detect_product(channel, a)) == (k < d)
        assert is_functional(correct_product(channel, a)) == (2 * k < d)


def test_square_size_of_empty_transducer_is_zero():
    t = Transducer(2, AB, AB, ((0, 'a', 'a', 1),), 0, frozenset())
    assert square_size(t) == 0


def _three_or_four():
    # depuis 0: un tour lit aaa et écrit a, ou lit aaaa et n'écrit rien
    transitions = (
        (0, '', 'a', 1), (0, 'a', '', 1), (1, 'a', '', 2), (2, 'a', '', 3), (3, 'a', '', 0),
    )
    return Transducer(4, UNARY, UNARY, transitions, 0, frozenset([0]))


def test_late_witness_with_epsilon_inputs():
    t = _three_or_four()
    assert not is_functional(t)
    assert brute_is_functional(t, 6)
    assert functionality_witness(t, 2 * square_size(t)) == 'a' * 12


@settings(max_examples=100, deadline=None)
@given(epsilon_transducers())
def test_agrees_with_brute_force_on_epsilon_inputs(t):
    # un témoin suit au plus deux fois le nombre de paires utiles du carré
    if is_functional(t):
        assert brute_is_functional(t, 6)
    else:
        assert functionality_witness(t, 2 * square_size(t)) is not None


@pytest.mark.slow
@settings(max_examples=40, deadline=None)
@given(acyclic_nfas(max_states=4), st.integers(min_value=1, max_value=2))
def test_products_agree_with_brute_force(a, k):
    # les entrées du produit de détection sont les mots de L, celles du
    # produit de correction en sont à distance <= k
    channel = build_channel_transducer(k, a.alphabet)
    longest = a.num_states - 1
    detect = detect_product(channel, a)
    assert is_functional(detect) == brute_is_functional(detect, longest)
    correct = correct_product(channel, a)
    assert is_functional(correct) == brute_is_functional(correct, longest + k)
