"""Applicability domains and their capability order."""

import pytest
from hypothesis import given, strategies as st

from lamrt import (
    EMPTY,
    OMEGA,
    PRESETS,
    FinSet,
    domain_leq,
    exists_geq,
    fin_set,
    format_domain,
    least_geq,
    member,
    parse_domain,
)


def test_membership():
    assert member(OMEGA, 0) and member(OMEGA, 41)
    assert not member(EMPTY, 0)
    assert member(fin_set([0, 2]), 2)
    assert not member(fin_set([0, 2]), 1)


def test_exists_geq():
    assert exists_geq(OMEGA, 100)
    assert not exists_geq(EMPTY, 0)
    assert exists_geq(fin_set([0, 1]), 1)
    assert not exists_geq(fin_set([0, 1]), 2)


def test_least_geq():
    assert least_geq(OMEGA, 3) == 3
    assert least_geq(EMPTY, 0) is None
    assert least_geq(fin_set([0, 2]), 1) == 2
    assert least_geq(fin_set([0, 2]), 3) is None


@given(st.sets(st.integers(0, 6), min_size=1), st.integers(0, 8))
def test_least_geq_is_least_member(values, n0):
    d = fin_set(values)
    got = least_geq(d, n0)
    above = [v for v in sorted(values) if v >= n0]
    assert got == (above[0] if above else None)
    assert exists_geq(d, n0) == (got is not None)


def test_order_extremes():
    for d in PRESETS:
        assert domain_leq(EMPTY, d)
        assert domain_leq(d, OMEGA)
    assert not domain_leq(OMEGA, EMPTY)
    assert not domain_leq(OMEGA, fin_set([5]))
    assert not domain_leq(fin_set([0]), EMPTY)


def test_finite_sets_compare_by_maximum():
    assert domain_leq(fin_set([1]), fin_set([0, 1]))
    assert domain_leq(fin_set([0, 1]), fin_set([1]))
    assert domain_leq(fin_set([0]), fin_set([1]))
    assert not domain_leq(fin_set([1]), fin_set([0]))


@given(st.sets(st.integers(0, 5), min_size=1), st.sets(st.integers(0, 5), min_size=1))
def test_order_is_capability_containment(a_vals, b_vals):
    """a <= b exactly when everything exists_geq grants under a it also
    grants under b."""
    a, b = fin_set(a_vals), fin_set(b_vals)
    pointwise = all(
        exists_geq(b, n) for n in range(8) if exists_geq(a, n)
    )
    assert domain_leq(a, b) == pointwise


def test_presets_form_a_chain():
    for lo, hi in zip(PRESETS, PRESETS[1:]):
        assert domain_leq(lo, hi)


def test_fin_set_normalizes_input():
    assert fin_set([2, 0, 2]) == FinSet((0, 2))


def test_fin_set_rejects_bad_degrees():
    with pytest.raises(ValueError):
        FinSet(())
    with pytest.raises(ValueError):
        FinSet((1, 1))
    with pytest.raises(ValueError):
        FinSet((-1,))


def test_parse_and_format_round_trip():
    for d in (OMEGA, EMPTY, fin_set([0]), fin_set([0, 1, 4])):
        assert parse_domain(format_domain(d)) == d
    assert parse_domain("set:1,0") == fin_set([0, 1])


def test_parse_rejects_garbage():
    for bad in ("", "all", "set:", "set:a", "set:-1"):
        with pytest.raises(ValueError):
            parse_domain(bad)
