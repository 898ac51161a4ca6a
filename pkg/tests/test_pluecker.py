import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from grassquot import g37
from grassquot.pluecker import (PlueckerPoly, evaluate, is_standard, minor,
                                random_point_matrix, restrict_schubert,
                                straighten, tableau_to_poly, verify_relation)
from grassquot.tableaux import Tableau, enumerate_invariants, is_zero_weight


def test_two_column_exchange_matches_known_expansion():
    got = straighten(PlueckerPoly.monomial([(2, 5, 7), (3, 4, 7)], 7))
    want = (PlueckerPoly.monomial([(2, 4, 7), (3, 5, 7)], 7)
            - PlueckerPoly.monomial([(2, 3, 7), (4, 5, 7)], 7))
    assert got == want


def test_straighten_fixes_standard_monomials():
    p = PlueckerPoly.monomial([(1, 3), (2, 4)], 4)  # already a chain
    assert straighten(p) == p
    q = tableau_to_poly(g37.GAMMA37)
    assert straighten(q) == q


def test_small_grassmannian_signs():
    # p14*p23 is the non-standard quadratic on G(2,4)
    got = straighten(PlueckerPoly.monomial([(1, 4), (2, 3)], 4))
    want = (PlueckerPoly.monomial([(1, 3), (2, 4)], 4)
            - PlueckerPoly.monomial([(1, 2), (3, 4)], 4))
    assert got == want
    # and the three-term identity holds as an evaluation statement
    rng = random.Random(0)
    lhs = PlueckerPoly.monomial([(1, 3), (2, 4)], 4)
    rhs = (PlueckerPoly.monomial([(1, 2), (3, 4)], 4)
           + PlueckerPoly.monomial([(1, 4), (2, 3)], 4))
    for _ in range(50):
        M = random_point_matrix(rng, 4, 2)
        assert evaluate(lhs, M) == evaluate(rhs, M)


def test_unit_minor():
    M = tuple(tuple(Fraction(1 if i == j else 0) for j in range(2)) for i in range(4))
    assert evaluate(PlueckerPoly.monomial([(1, 2)], 4), M) == 1
    assert minor(M, (3, 4)) == 0


def test_evaluate_dimension_check():
    M = random_point_matrix(random.Random(1), 5, 2)
    with pytest.raises(ValueError):
        evaluate(PlueckerPoly.monomial([(1, 2, 3)], 7), M)


def test_straighten_agrees_with_evaluation_oracle():
    rng = random.Random(1729)
    for r, n in [(2, 4), (2, 5), (3, 6), (3, 7)]:
        cols = list(combinations(range(1, n + 1), r))
        for _ in range(25):
            a, b = rng.choice(cols), rng.choice(cols)
            p = PlueckerPoly.monomial([a, b], n, rng.randint(1, 5))
            s = straighten(p)
            assert is_standard(s)
            for _ in range(4):
                M = random_point_matrix(rng, n, r)
                assert evaluate(p, M) == evaluate(s, M)


def test_straighten_idempotent_and_degree_preserving():
    rng = random.Random(7)
    cols = list(combinations(range(1, 8), 3))
    for _ in range(20):
        mono = [rng.choice(cols) for _ in range(3)]
        s = straighten(PlueckerPoly.monomial(mono, 7))
        assert straighten(s) == s
        assert all(len(m) == 3 for m in s.terms)


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.data())
def test_straighten_oracle_property(data):
    n = data.draw(st.integers(min_value=3, max_value=6))
    r = data.draw(st.integers(min_value=2, max_value=min(3, n - 1)))
    cols = list(combinations(range(1, n + 1), r))
    a = data.draw(st.sampled_from(cols))
    b = data.draw(st.sampled_from(cols))
    p = PlueckerPoly.monomial([a, b], n)
    s = straighten(p)
    assert is_standard(s)
    rng = random.Random(data.draw(st.integers(min_value=0, max_value=10 ** 6)))
    M = random_point_matrix(rng, n, r)
    assert evaluate(p, M) == evaluate(s, M)


def test_restrict_schubert():
    p = (PlueckerPoly.monomial([(2, 4, 7), (3, 5, 7)], 7)
         - PlueckerPoly.monomial([(2, 3, 7), (4, 5, 7)], 7))
    got = restrict_schubert(p, (3, 5, 7), (1, 2, 3))
    assert got == PlueckerPoly.monomial([(2, 4, 7), (3, 5, 7)], 7)
    unchanged = PlueckerPoly.monomial([(1, 2, 3), (3, 5, 7)], 7)
    assert restrict_schubert(unchanged, (3, 5, 7), (1, 2, 3)) == unchanged
    # v = w keeps only powers of that single coordinate
    mixed = unchanged + PlueckerPoly.monomial([(3, 5, 7), (3, 5, 7)], 7)
    only_w = restrict_schubert(mixed, (3, 5, 7), (3, 5, 7))
    assert only_w == PlueckerPoly.monomial([(3, 5, 7), (3, 5, 7)], 7)


def test_tableau_to_poly_degrees():
    assert len(next(iter(tableau_to_poly(g37.GAMMA37).terms))) == 7
    assert len(next(iter(tableau_to_poly(g37.Z20).terms))) == 14
    single = Tableau(((1,), (2,), (3,)), 7)
    assert tableau_to_poly(single) == PlueckerPoly.monomial([(1, 2, 3)], 7)


def test_all_relations_hold_restricted_and_fail_raw():
    raw_failures = 0
    for name, (i, j), rhs in g37.RELATIONS:
        signed = [(s, [g37.Y[a], g37.Y[b]]) for s, (a, b) in rhs]
        ok, residue = verify_relation([g37.Y[i], g37.Y[j]], signed,
                                      g37.W37, (1, 2, 3))
        assert ok and residue.is_zero(), name
        raw_ok, raw_residue = verify_relation([g37.Y[i], g37.Y[j]], signed,
                                              g37.W37, (1, 2, 3), restricted=False)
        if not raw_ok:
            raw_failures += 1
            assert not raw_residue.is_zero()
            # the obstruction lives outside the Schubert bound
            assert any(not all(x <= y for x, y in zip(col, g37.W37))
                       for mono in raw_residue.terms for col in mono)
    assert raw_failures >= 1


def test_y5_y7_equals_z20_on_schubert():
    ok, _ = verify_relation([g37.Y[5], g37.Y[7]], [(1, [g37.Z20])],
                            g37.W37, (1, 2, 3))
    assert ok


def test_invariant_products_stay_invariant():
    tabs = enumerate_invariants(3, 7, 1, (3, 5, 7), (1, 2, 3))
    degree2 = {tuple(t.columns()) for t in
               enumerate_invariants(3, 7, 2, (3, 5, 7), (1, 2, 3))}
    for i in range(len(tabs)):
        for j in range(i, len(tabs)):
            prod = straighten(tableau_to_poly(tabs[i]) * tableau_to_poly(tabs[j]))
            for mono in prod.terms:
                t = Tableau.from_columns(mono, 7)
                assert is_zero_weight(t)
            restricted = restrict_schubert(prod, (3, 5, 7), (1, 2, 3))
            for mono in restricted.terms:
                assert mono in degree2


def test_schubert_point_kills_relation_difference():
    """Points built from the all-skip cell matrix lie on the Schubert
    variety, so the unrestricted residue of a relation vanishes there."""
    from grassquot.deodhar import SubexpressionMask, W37_WORD, cell_matrix

    mask = SubexpressionMask(W37_WORD, (False,) * 9, 7)
    cell = cell_matrix(mask)
    rng = random.Random(99)
    name, (i, j), rhs = g37.RELATIONS[5]  # the two-term relation
    signed = [(s, [g37.Y[a], g37.Y[b]]) for s, (a, b) in rhs]
    _, raw_residue = verify_relation([g37.Y[i], g37.Y[j]], signed,
                                     g37.W37, (1, 2, 3), restricted=False)
    for _ in range(5):
        values = [Fraction(rng.randint(-5, 5)) for _ in range(cell.nvars)]
        full = cell.substitute(values)
        M = tuple(row[:3] for row in full)
        for col in combinations(range(1, 8), 3):
            if not all(x <= y for x, y in zip(col, g37.W37)):
                assert minor(M, col) == 0
        assert evaluate(raw_residue, M) == 0
