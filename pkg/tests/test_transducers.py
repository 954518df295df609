import itertools

import pytest

from automata import Alphabet, Nfa
from edit_strings import EditString, edit_distance_words, is_reduced, weight
from oracle import brute_outputs, enumerate_language, is_input_altering
from transducers import (
    CounterState, build_channel_transducer, build_iat_transducer, correct_product,
    detect_product, identity_transducer, iat_edges, image_nfa, invert,
)

AB = Alphabet(('a', 'b'))
WORDS_UP_TO_5 = [''.join(w) for n in range(6) for w in itertools.product('ab', repeat=n)]


def relation(t, max_len):
    """Paires (u, v) de R(t) avec |u|, |v| <= max_len"""
    return {
        (u, v)
        for n in range(max_len + 1)
        for u in (''.join(w) for w in itertools.product('ab', repeat=n))
        for v in brute_outputs(t, u, max_len)
    }


def test_counter_state_pending_needs_positive_counter():
    with pytest.raises(ValueError):
        CounterState(0, 'a')
    assert str(CounterState(2, 'a')) == '[2,a]'
    assert str(CounterState(1)) == '[1]'


def test_channel_transducer_size():
    t = build_channel_transducer(1, AB)
    assert t.num_states == 2
    assert len(t.transitions) == 10
    assert t.size == 12
    assert t.finals == {0, 1}


def test_channel_transducer_rejects_zero():
    with pytest.raises(ValueError):
        build_channel_transducer(0, AB)


def test_channel_outputs_of_a():
    outputs = brute_outputs(build_channel_transducer(1, AB), 'a', 2)
    assert outputs.as_set() == {'', 'a', 'b', 'aa', 'ab', 'ba'}
    assert outputs.words == ('', 'a', 'b', 'aa', 'ab', 'ba')


@pytest.mark.parametrize('k', [1, 2, 3])
def test_channel_is_input_preserving(k):
    t = build_channel_transducer(k, AB)
    for w in WORDS_UP_TO_5:
        assert w in brute_outputs(t, w, len(w))


@pytest.mark.parametrize('k', [1, 2, 3])
def test_channel_realizes_edit_distance_ball(k):
    t = build_channel_transducer(k, AB)
    for u in WORDS_UP_TO_5:
        outputs = brute_outputs(t, u, 5).as_set()
        for v in WORDS_UP_TO_5:
            assert (v in outputs) == (edit_distance_words(u, v) <= k)


def test_iat_transducer_states():
    t = build_iat_transducer(1, AB)
    assert t.num_states == 4
    assert set(t.state_info) == {CounterState(0), CounterState(1), CounterState(1, 'a'), CounterState(1, 'b')}
    assert t.finals == {1, 2, 3}
    assert build_iat_transducer(3, AB).num_states == 1 + 3 + 3 * 2


def test_iat_transducer_outputs_of_a():
    assert brute_outputs(build_iat_transducer(1, AB), 'a').as_set() == {'', 'b'}


def test_iat_transducer_rejects_zero():
    with pytest.raises(ValueError):
        build_iat_transducer(0, AB)


def test_no_insertion_leaves_the_start_state():
    for x, _, _ in iat_edges(CounterState(0), 3, AB):
        assert x != ''


def test_pruned_iat_transducer_drops_diagonals():
    full = build_iat_transducer(2, AB)
    pruned = build_iat_transducer(2, AB, prune_diagonals=True)
    assert pruned.num_states == full.num_states
    assert len(pruned.transitions) < len(full.transitions)
    for p, x, y, q in pruned.transitions:
        source, target = pruned.state_info[p], pruned.state_info[q]
        if source.pending is not None and target.pending is None:
            assert target.counter == source.counter


@pytest.mark.parametrize('k', [1, 2, 3])
def test_iat_transducer_semantics_exhaustive(k):
    t = build_iat_transducer(k, AB)
    images = {u: brute_outputs(t, u, 5).as_set() for u in WORDS_UP_TO_5}
    for u in WORDS_UP_TO_5:
        # input-altering
        assert u not in images[u]
        for v in images[u]:
            assert 1 <= edit_distance_words(u, v) <= k
    for u, v in itertools.combinations(WORDS_UP_TO_5, 2):
        if edit_distance_words(u, v) <= k:
            assert v in images[u] or u in images[v]


@pytest.mark.parametrize('k', [1, 2, 3])
def test_iat_transducer_is_input_altering(k):
    assert is_input_altering(build_iat_transducer(k, AB), WORDS_UP_TO_5)


def test_channel_is_not_input_altering():
    assert not is_input_altering(build_channel_transducer(1, AB), ['ab'])


def test_accepting_paths_carry_reduced_labels_of_counter_weight():
    t = build_iat_transducer(2, AB)
    stack = [(t.start, ())]
    checked = 0
    while stack:
        p, labels = stack.pop()
        if p in t.finals:
            h = EditString.of(labels)
            assert is_reduced(h)
            assert weight(h) == t.state_info[p].counter
            checked += 1
        if len(labels) == 5:
            continue
        for x, y, q in t.out_edges[p]:
            stack.append((q, labels + ((x, y),)))
    assert checked > 0


def _reaches(k, start, u, v, target):
    """Chemin start --u/v--> target dans t̂_k (recherche sur (état, position u, position v))"""
    seen = set()
    stack = [(start, 0, 0)]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        state, i, j = node
        if state == target and i == len(u) and j == len(v):
            return True
        for x, y, nxt in iat_edges(state, k, AB):
            if x and (i == len(u) or u[i] != x):
                continue
            if y and (j == len(v) or v[j] != y):
                continue
            stack.append((nxt, i + (1 if x else 0), j + (1 if y else 0)))
    return False


def test_free_counter_states_reach_the_distance_level():
    k = 3
    words = [w for w in WORDS_UP_TO_5 if len(w) <= 3]
    for u, v in itertools.product(words, repeat=2):
        d = edit_distance_words(u, v)
        for i in range(1, k + 1):
            if i + d <= k:
                assert _reaches(k, CounterState(i), u, v, CounterState(i + d))


def test_deleting_a_suffix_ends_on_a_pending_state():
    k = 3
    for u in WORDS_UP_TO_5:
        for cut in range(max(0, len(u) - k), len(u)):
            v, a = u[:cut], u[cut]
            d = edit_distance_words(u, v)
            assert _reaches(k, CounterState(0), u, v, CounterState(d, a))


def test_invert_is_an_involution():
    t = build_iat_transducer(2, AB)
    assert invert(invert(t)) == t
    sigma = identity_transducer(AB)
    assert invert(sigma) == sigma


def test_invert_swaps_the_relation():
    t = build_channel_transducer(1, AB)
    assert relation(invert(t), 2) == {(v, u) for u, v in relation(t, 2)}


def test_detect_product_of_single_word():
    product = detect_product(build_channel_transducer(1, AB), Nfa.from_words(['ab'], AB))
    assert relation(product, 3) == {('ab', 'ab')}


def test_detect_product_of_two_letters():
    product = detect_product(build_channel_transducer(1, AB), Nfa.from_words(['a', 'b'], AB))
    assert relation(product, 3) == {(u, v) for u in 'ab' for v in 'ab'}


def test_products_of_empty_language(empty_language):
    channel = build_channel_transducer(1, AB)
    assert relation(detect_product(channel, empty_language), 3) == set()
    assert relation(correct_product(channel, empty_language), 3) == set()


def test_correct_product_maps_the_ball_onto_the_word():
    product = correct_product(build_channel_transducer(1, AB), Nfa.from_words(['ab'], AB))
    pairs = relation(product, 3)
    assert {v for _, v in pairs} == {'ab'}
    expected = {u for u in WORDS_UP_TO_5 if len(u) <= 3 and edit_distance_words(u, 'ab') <= 1}
    assert {u for u, _ in pairs} == expected


def test_products_keep_language_after_enumeration(nfa_aa_ab):
    # l'automate n'est pas modifié par la construction
    detect_product(build_channel_transducer(1, AB), nfa_aa_ab)
    assert enumerate_language(nfa_aa_ab, 3).as_set() == {'aa', 'ab'}


@pytest.mark.parametrize('k', [1, 2])
def test_image_nfa_accepts_the_outputs(k, nfa_aa_ab):
    t = build_iat_transducer(k, AB)
    expected = set()
    for x in ('aa', 'ab'):
        expected |= brute_outputs(t, x, 2 + k).as_set()
    assert enumerate_language(image_nfa(t, nfa_aa_ab), 2 + k).as_set() == expected


def test_image_nfa_of_identity_is_the_language(nfa_aa_ab):
    image = image_nfa(identity_transducer(AB), nfa_aa_ab)
    assert enumerate_language(image, 4).as_set() == {'aa', 'ab'}


def test_image_nfa_of_empty_language_is_empty(empty_language):
    image = image_nfa(build_iat_transducer(1, AB), empty_language)
    assert not image.finals
