import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rscells.crystal import (
    component,
    crystal_edges,
    decompose,
    djm_violations,
    e_op,
    eps,
    f_op,
    highest_weight_rep,
    is_highest_weight,
    phi,
    signature_counts,
    signature_rule,
    tableau_reading_embedding,
    word_p_symbol,
    word_q_symbol,
)
from rscells.tableaux import (
    Tableau,
    partitions,
    reading_word_to_tableau,
    semistandard_tableaux,
)

words = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.integers(1, 3), min_size=n, max_size=n).map(tuple)
)


def all_words(n, r):
    return itertools.product(range(1, r + 1), repeat=n)


def test_single_letter_operators():
    assert f_op(1, (1,)) == (2,)
    assert f_op(1, (2,)) is None
    assert e_op(1, (2,)) == (1,)
    assert e_op(1, (1,)) is None
    assert phi(1, (1,)) == 1 and eps(1, (1,)) == 0


def test_two_letter_examples():
    assert f_op(1, (1, 1)) == (1, 2)
    assert phi(1, (1, 1)) == 2
    assert f_op(1, (2, 1)) is None
    assert e_op(1, (2, 1)) is None
    # the f-string through (1,1): 1x1 -> 1x2 -> 2x2 -> null
    assert f_op(1, (1, 2)) == (2, 2)
    assert f_op(1, (2, 2)) is None


def test_operator_index_validation():
    with pytest.raises(ValueError):
        f_op(0, (1, 2))
    with pytest.raises(ValueError):
        eps(-1, (1,))


def test_partial_inverse_exhaustive():
    for n in range(1, 6):
        for b in all_words(n, 3):
            for i in (1, 2):
                fb = f_op(i, b)
                if fb is not None:
                    assert e_op(i, fb) == b
                eb = e_op(i, b)
                if eb is not None:
                    assert f_op(i, eb) == b


@given(words, st.integers(1, 2))
def test_partial_inverse_random(b, i):
    fb = f_op(i, b)
    if fb is not None:
        assert e_op(i, fb) == b


def test_signature_rule_examples():
    assert signature_rule(1, (1, 1)) == (None, 1)
    assert signature_rule(1, (2, 1)) == (None, None)
    assert signature_rule(1, (1, 2)) == (1, 0)


def test_signature_rule_matches_recursive_operators():
    for n in range(1, 6):
        for b in all_words(n, 3):
            for i in (1, 2):
                e_pos, f_pos = signature_rule(i, b)
                fb = f_op(i, b)
                if f_pos is None:
                    assert fb is None
                else:
                    expected = b[:f_pos] + (i + 1,) + b[f_pos + 1 :]
                    assert fb == expected
                eb = e_op(i, b)
                if e_pos is None:
                    assert eb is None
                else:
                    expected = b[:e_pos] + (i,) + b[e_pos + 1 :]
                    assert eb == expected
                assert signature_counts(i, b) == (eps(i, b), phi(i, b))


def test_sl2_string_bookkeeping():
    # phi - eps drops by 2 along an f_i-step
    for n in range(1, 5):
        for b in all_words(n, 3):
            for i in (1, 2):
                fb = f_op(i, b)
                if fb is not None:
                    before = phi(i, b) - eps(i, b)
                    after = phi(i, fb) - eps(i, fb)
                    assert after == before - 2


def test_component_examples():
    assert component((2, 1), 2) == frozenset({(2, 1)})
    assert component((1, 1), 2) == frozenset({(1, 1), (1, 2), (2, 2)})
    with pytest.raises(ValueError):
        component((3, 1), 2)


def test_components_have_unique_highest_weight():
    n = r = 4
    seen = set()
    for b in all_words(n, r):
        if b in seen:
            continue
        comp = component(b, r)
        seen.update(comp)
        hw = [x for x in comp if is_highest_weight(x, r)]
        assert len(hw) == 1
        assert highest_weight_rep(b, r) == hw[0]


def test_decompose_examples():
    # B itself is connected: one component holding every letter, Q = [[1]]
    comps = decompose(1, 3)
    assert len(comps) == 1
    assert comps[0].words == frozenset({(1,), (2,), (3,)})
    assert comps[0].q_symbol == Tableau([[1]])
    comps = decompose(2, 2)
    by_label = {c.label: c for c in comps}
    assert set(by_label) == {(1, 1), (2, 1)}
    assert by_label[(1, 1)].words == frozenset({(1, 1), (1, 2), (2, 2)})
    assert by_label[(1, 1)].q_symbol == Tableau([[1, 2]])
    assert by_label[(2, 1)].words == frozenset({(2, 1)})
    assert by_label[(2, 1)].q_symbol == Tableau([[1], [2]])


def test_decompose_q_constancy():
    for n in range(1, 6):
        for comp in decompose(n, n, check=True):
            pass  # check=True raises on a violation


def test_decompose_bounds():
    with pytest.raises(ValueError):
        decompose(12, 12)


def test_reading_embedding_example():
    t = Tableau([[1, 1, 2, 4], [2, 3], [4]])
    assert tableau_reading_embedding(t, 4) == (4, 2, 3, 1, 1, 2, 4)
    with pytest.raises(ValueError):
        tableau_reading_embedding(t, 3)
    row = Tableau([[1, 2]])
    assert tableau_reading_embedding(row, 2) == (1, 2)
    assert word_p_symbol((1, 2)) == row


def test_reading_round_trip_small_tableaux():
    for size in range(1, 6):
        for shape in partitions(size):
            for t in semistandard_tableaux(shape, 3):
                word = tableau_reading_embedding(t, 3)
                assert word_p_symbol(word) == t


def test_reading_words_stable_under_operators():
    # image of B(lambda) is closed under e_i and f_i, preserving the shape
    for size in range(1, 6):
        for shape in partitions(size):
            for t in semistandard_tableaux(shape, 3):
                word = tableau_reading_embedding(t, 3)
                for i in (1, 2):
                    for op in (e_op, f_op):
                        nxt = op(i, word)
                        if nxt is None:
                            continue
                        t2 = reading_word_to_tableau(nxt, shape)
                        assert t2 is not None and t2.is_column_strict()


def test_djm_small():
    cases, violations = djm_violations(3, 3)
    assert cases == 27 and violations == []


def test_word_symbols():
    p = word_p_symbol((2, 1, 2, 2))
    q = word_q_symbol((2, 1, 2, 2))
    assert p.is_column_strict() and q.is_standard()
    assert p.outer == q.outer


def test_crystal_edges_export():
    edges = crystal_edges(2, 2)
    assert ((1, 1), 1, (1, 2)) in edges
    assert all(f_op(i, a) == b for a, i, b in edges)
