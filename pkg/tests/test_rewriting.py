from fractions import Fraction

import pytest

from grassquot.rewriting import (ambiguities, check_confluence, format_mono,
                                 format_rules, g37_rules, grlex_key,
                                 make_system, normal_form_count, parse_rules,
                                 reduce_monomial, reduce_poly,
                                 scroll_matrix_check, y_mono)
from grassquot.tableaux import enumerate_invariants

SYSTEM = g37_rules()


def test_rules_oriented_downhill():
    for lhs, rhs in SYSTEM.rules:
        for m, _ in rhs:
            assert grlex_key(m) < grlex_key(lhs)


def test_misoriented_rule_rejected():
    with pytest.raises(ValueError):
        make_system(2, [((1, 0), {(0, 2): Fraction(1)})])  # Y1 -> Y2^2 grows


def test_reduce_examples():
    assert reduce_monomial(y_mono(7, 1, 5), SYSTEM) == {
        y_mono(7, 3, 3): Fraction(1), y_mono(7, 3, 7): Fraction(-1)}
    assert reduce_monomial(y_mono(7, 1, 2, 5), SYSTEM) == {
        y_mono(7, 2, 3, 3): Fraction(1), y_mono(7, 2, 3, 7): Fraction(-1)}
    for k in (1, 2, 5):
        m = tuple(0 if i != 6 else k for i in range(7))
        assert reduce_monomial(m, SYSTEM) == {m: Fraction(1)}


def test_ambiguities_include_the_documented_four():
    names = {format_mono(a[0]) for a in ambiguities(SYSTEM)}
    assert {"Y1*Y2*Y5", "Y1*Y2*Y6", "Y1*Y3*Y6", "Y2*Y3*Y6"} <= names
    assert len(names) == 8


def test_coprime_pairs_not_reported():
    system = make_system(3, [
        ((2, 0, 0), {(0, 1, 0): Fraction(1)}),
        ((0, 2, 0), {(0, 0, 1): Fraction(1)}),
    ])
    assert ambiguities(system) == []


def test_confluence_with_documented_joins():
    rep = check_confluence(SYSTEM, through_degree=4)
    assert rep["ok"]
    assert rep["exhaustive_ok"]
    joins = {format_mono(a["monomial"]): a for a in rep["ambiguities"]}
    assert joins["Y1*Y2*Y5"]["normal_form"] == {
        y_mono(7, 2, 3, 3): Fraction(1), y_mono(7, 2, 3, 7): Fraction(-1)}
    assert joins["Y1*Y2*Y6"]["normal_form"] == {
        y_mono(7, 2, 3, 4): Fraction(1), y_mono(7, 2, 4, 7): Fraction(-1)}
    assert joins["Y2*Y5*Y6"]["normal_form"] == {
        y_mono(7, 4, 4, 5): Fraction(1), y_mono(7, 4, 5, 7): Fraction(-1)}
    # the degree-homogeneous join of the remaining documented ambiguity
    assert joins["Y2*Y3*Y6"]["normal_form"] == {
        y_mono(7, 3, 4, 4): Fraction(1), y_mono(7, 3, 4, 7): Fraction(-1)}


def test_empty_system_trivially_confluent():
    rep = check_confluence(make_system(3, []), through_degree=3)
    assert rep["ok"] and rep["ambiguities"] == []


def test_normal_form_counts():
    assert normal_form_count(SYSTEM, 1) == 7
    assert normal_form_count(SYSTEM, 2) == 22


def test_normal_form_counts_match_invariant_dimensions():
    for m in (1, 2, 3):
        dim = len(enumerate_invariants(3, 7, m, (3, 5, 7), (1, 2, 3)))
        assert normal_form_count(SYSTEM, m) == dim


def test_scroll_minors():
    rep = scroll_matrix_check(SYSTEM)
    assert rep["ok"]
    assert set(rep["minors"]) == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}
    assert all(rep["minors"].values())


def test_scroll_minor_12_is_the_y1y5_rule():
    # expanding columns 1,2 by hand: Y1*Y5 - Y3*(Y3 - Y7)
    diff = {y_mono(7, 1, 5): Fraction(1), y_mono(7, 3, 3): Fraction(-1),
            y_mono(7, 3, 7): Fraction(1)}
    assert reduce_poly(diff, SYSTEM) == {}


def test_rule_text_roundtrip():
    text = format_rules(SYSTEM)
    again = parse_rules(text, 7)
    assert again == SYSTEM
    small = parse_rules("Y1*Y5 -> Y3^2 - Y3*Y7\n# comment\n", 7)
    assert small.rules[0][0] == y_mono(7, 1, 5)
    assert dict(small.rules[0][1]) == {y_mono(7, 3, 3): Fraction(1),
                                       y_mono(7, 3, 7): Fraction(-1)}


def test_parse_rejects_non_monic_lhs():
    with pytest.raises(ValueError):
        parse_rules("2 Y1*Y5 -> Y3^2", 7)


def test_reduction_strategy_independence_spot_check():
    from grassquot.rewriting import all_normal_forms

    forms = all_normal_forms({y_mono(7, 1, 2, 5, 6): Fraction(1)}, SYSTEM)
    assert len(forms) == 1
