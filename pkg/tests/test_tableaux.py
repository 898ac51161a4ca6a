from collections import Counter

import pytest

from grassquot import g37
from grassquot.tableaux import (Tableau, column_census,
                                columns_form_chain, deglex_compare, deglex_key,
                                enumerate_invariants, first_column_class,
                                is_zero_weight)
from grassquot.weyl import gamma_tableau, minimal_richardson_v, minimal_schubert


def test_tableau_validation():
    with pytest.raises(ValueError):
        Tableau(((2, 1),), 3)          # row decreasing
    with pytest.raises(ValueError):
        Tableau(((1, 2), (1, 3)), 3)   # column not strict
    with pytest.raises(ValueError):
        Tableau(((1, 4),), 3)          # out of range


def test_zero_weight():
    assert is_zero_weight(gamma_tableau(3, 7))
    assert is_zero_weight(g37.Y[2])
    assert not is_zero_weight(Tableau(((1, 1), (2, 3)), 4))


def test_degree_one_family_is_exactly_the_generators():
    inv = enumerate_invariants(3, 7, 1, (3, 5, 7), (1, 2, 3))
    assert len(inv) == 7
    assert {t.rows for t in inv} == {g37.Y[i].rows for i in range(1, 8)}


def test_narrow_bound_gives_unique_tableau():
    inv = enumerate_invariants(3, 7, 1, (3, 5, 7), (1, 3, 5))
    assert inv == [g37.GAMMA37]


def test_degree_two_contains_z20():
    inv = enumerate_invariants(3, 7, 2, (3, 5, 7), (1, 2, 3))
    assert g37.Z20 in inv
    assert len(inv) == len({t.rows for t in inv})  # duplicate-free


def test_enumeration_postconditions():
    for m in (1, 2):
        for t in enumerate_invariants(3, 7, m, (3, 5, 7), (1, 2, 3)):
            assert is_zero_weight(t)
            assert all(x >= y for x, y in zip(t.column(0), (1, 2, 3)))
            assert all(x <= y for x, y in zip(t.column(t.d - 1), (3, 5, 7)))


def test_incomparable_bounds_give_empty_list():
    assert enumerate_invariants(3, 7, 1, (3, 5, 7), (1, 2, 7)) == []


def _slow_enumerate(r, n, m, w, v):
    """Cell-by-cell backtracking with only the defining constraints; an
    independent oracle for the column-chain enumerator."""
    d = m * n
    target = r * m
    grid = [[0] * d for _ in range(r)]
    remaining = {i: target for i in range(1, n + 1)}
    out = []

    def rec(pos):
        if pos == r * d:
            first = tuple(grid[i][0] for i in range(r))
            last = tuple(grid[i][d - 1] for i in range(r))
            if all(a >= b for a, b in zip(first, v)) and all(a <= b for a, b in zip(last, w)):
                out.append(tuple(tuple(row) for row in grid))
            return
        i, j = divmod(pos, d)
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for val in range(lo, n + 1):
            if remaining[val] == 0:
                continue
            grid[i][j] = val
            remaining[val] -= 1
            rec(pos + 1)
            remaining[val] += 1
            grid[i][j] = 0

    rec(0)
    return {rows for rows in out}


def test_enumeration_against_slow_oracle_3_7_1():
    fast = {t.rows for t in enumerate_invariants(3, 7, 1, (3, 5, 7), (1, 2, 3))}
    slow = _slow_enumerate(3, 7, 1, (3, 5, 7), (1, 2, 3))
    assert fast == slow


def test_enumeration_against_slow_oracle_2_5_2():
    fast = {t.rows for t in enumerate_invariants(2, 5, 2, (4, 5), (1, 2))}
    slow = _slow_enumerate(2, 5, 2, (4, 5), (1, 2))
    assert fast == slow


def test_minimal_pair_unique_invariant_two_rows():
    for n in (3, 5, 7, 9):
        w, v = minimal_schubert(2, n), minimal_richardson_v(2, n)
        inv = enumerate_invariants(2, n, 1, w, v)
        assert inv == [gamma_tableau(2, n)]


def test_first_column_class_and_census_examples():
    assert first_column_class(g37.Y[7]).entries == (1, 2, 3)
    assert first_column_class(g37.Y[5]).entries == (1, 2, 5)
    assert first_column_class(g37.Y[1]).entries == (1, 3, 5)
    assert column_census(g37.Z20)[(2, 4, 6)] == 2
    assert column_census(g37.Y[6])[(2, 4, 6)] == 1
    census1 = column_census(g37.Y[1])
    assert census1[(2, 5, 7)] + census1[(3, 5, 7)] == 2


def test_observations_hold_in_degrees_one_and_two():
    for m in (1, 2):
        for t in enumerate_invariants(3, 7, m, (3, 5, 7), (1, 2, 3)):
            rep = g37.observation_report(t, m)
            assert rep["ok"], (t.rows, rep["checks"])


def test_deglex_basics():
    a = Tableau(((1, 1), (2, 2)), 4)
    long = Tableau(((1, 1, 1, 1), (2, 2, 2, 2)), 4)
    assert deglex_compare(a, a) == 0
    assert deglex_compare(long, a) == 1
    s = Tableau.from_columns([(1, 2), (3, 4)], 4)
    t = Tableau.from_columns([(1, 3), (2, 4)], 4)
    assert deglex_compare(s, t) == -1


def test_deglex_total_order_on_degree_two_family():
    tabs = enumerate_invariants(3, 7, 2, (3, 5, 7), (1, 2, 3))
    keys = [deglex_key(t) for t in tabs]
    assert len(set(keys)) == len(keys)
    ordered = sorted(tabs, key=deglex_key)
    for a, b, c in zip(ordered, ordered[1:], ordered[2:]):
        assert deglex_compare(a, b) == -1
        assert deglex_compare(b, c) == -1
        assert deglex_compare(a, c) == -1


def test_factor_witness_z20_has_empty_complement():
    tag, comp = g37.factor_lemma_witness(g37.Z20)
    assert tag == "z20"
    assert comp.d == 0


def test_factor_witness_on_constructed_product():
    cols = g37.Y[1].columns() + g37.Y[2].columns()
    t = Tableau.from_columns(cols, 7)
    tag, comp = g37.factor_lemma_witness(t)
    assert tag in {"y1", "y2"}
    other = g37.Y[2] if tag == "y1" else g37.Y[1]
    assert Counter(comp.columns()) == Counter(other.columns())


def test_factor_witness_exhaustive_degrees_two_and_three():
    for m in (2, 3):
        for t in enumerate_invariants(3, 7, m, (3, 5, 7), (1, 2, 3)):
            tag, comp = g37.factor_lemma_witness(t)
            expected = t.d - (14 if tag == "z20" else 7)
            assert comp.d == expected
            if comp.d:
                assert is_zero_weight(comp)


def test_from_columns_rejects_incomparable():
    assert not columns_form_chain([(1, 4), (2, 3)])
    with pytest.raises(ValueError):
        Tableau.from_columns([(1, 4), (2, 3)], 4)


def test_tableau_json_roundtrip():
    t = g37.Y[3]
    assert Tableau.from_json(t.to_json()) == t


def test_enumerate_rejects_bad_parameters():
    with pytest.raises(ValueError):
        enumerate_invariants(0, 5, 1, (4, 5), (1, 2))
    with pytest.raises(ValueError):
        enumerate_invariants(2, 5, 0, (4, 5), (1, 2))
    with pytest.raises(ValueError):
        enumerate_invariants(2, 5, 1, (4, 5, 6), (1, 2))
