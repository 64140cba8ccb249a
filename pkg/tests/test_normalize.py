"""Full r-normalization, canonical rt-normal forms, and weak head forms."""

import random

import pytest

from lamrt import (
    VOID,
    Abbr,
    Abst,
    Appl,
    Cast,
    Closure,
    Decl,
    Defn,
    FuelExhausted,
    OpenHead,
    Ref,
    Sort,
    StuckApplication,
    default_fuel,
    is_r_normal,
    r_normalize,
    reachable_rt,
    rt_normal_form,
    whnf_equivalent,
    whnf_rt,
)
from lamrt.corpus import arity_bearing_closures, valid_closures
from lamrt.terms import SUCCESSOR
from oracles import oracle_reachable

NXT = SUCCESSOR.next_sort

BETA_CHAIN = Appl(Sort(0), Abst(Sort(1), Ref(0)))


def test_r_normalize_beta_chain():
    assert r_normalize((), BETA_CHAIN) == Sort(0)


def test_r_normalize_leaves_normal_terms_alone():
    assert r_normalize((), Sort(3)) == Sort(3)
    t = Abst(Sort(0), Ref(0))
    assert r_normalize((), t) == t


def test_is_r_normal():
    assert is_r_normal((), Sort(0))
    assert not is_r_normal((), BETA_CHAIN)
    assert not is_r_normal((Defn(Sort(0)),), Ref(0))
    assert is_r_normal((Decl(Sort(0)),), Ref(0))


def test_r_normalize_output_is_normal_and_idempotent():
    for c in arity_bearing_closures(7, 200):
        nf = r_normalize(c.env, c.subject)
        assert is_r_normal(c.env, nf)
        assert r_normalize(c.env, nf) == nf


def test_r_normalize_order_invariance():
    rngs = [random.Random(s) for s in (1, 2, 3)]
    for c in arity_bearing_closures(13, 150):
        reference = r_normalize(c.env, c.subject)
        for rng in rngs:
            assert r_normalize(c.env, c.subject, rng=rng) == reference


def test_r_normalize_fuel_exhaustion():
    with pytest.raises(FuelExhausted):
        r_normalize((), BETA_CHAIN, fuel=1)


def test_default_fuel_is_quadratic():
    c = Closure((Decl(Sort(0)),), Ref(0))
    assert default_fuel(c.env, c.subject) == 10 * 2 * 2


def test_rt_normal_form_examples():
    assert rt_normal_form((), Sort(0), 1) == Sort(1)
    assert rt_normal_form((), Abst(Sort(0), Ref(0)), 1) == Abst(Sort(0), Sort(0))
    assert rt_normal_form((), BETA_CHAIN, 0) == Sort(0)


def test_rt_normal_form_is_zero_step_normal():
    for c in arity_bearing_closures(23, 100):
        for n in (0, 1, 2):
            nf = rt_normal_form(c.env, c.subject, n)
            assert is_r_normal(c.env, nf)


# -- weak head normalization ---------------------------------------------------


def test_whnf_substitutes_used_definitions():
    t = Abbr(Sort(0), Abst(Sort(0), Ref(1)))  # [x=*0].[y:*0].x
    res = whnf_rt((), t)
    assert (res.bound, res.term) == (0, Abst(Sort(0), Sort(0)))


def test_whnf_forced_type_step():
    env = (Decl(Abst(Sort(0), Sort(0))),)
    res = whnf_rt(env, Ref(0))
    assert (res.bound, res.term) == (1, Abst(Sort(0), Sort(0)))


def test_whnf_of_sort_is_free():
    res = whnf_rt((), Sort(0))
    assert (res.bound, res.term) == (0, Sort(0))


def test_whnf_beta_and_theta():
    res = whnf_rt((), BETA_CHAIN)
    assert res.bound == 0
    assert res.term == Sort(0)
    theta = Appl(Sort(0), Abbr(Abst(Sort(1), Ref(0)), Ref(0)))
    res = whnf_rt((), theta)
    assert res.bound == 0
    assert isinstance(res.term, (Sort, Abst))


def test_whnf_open_head():
    with pytest.raises(OpenHead):
        whnf_rt((VOID,), Ref(0))
    with pytest.raises(OpenHead):
        whnf_rt((), Ref(0))


def test_whnf_stuck_application():
    with pytest.raises(StuckApplication):
        whnf_rt((), Appl(Sort(0), Sort(1)))


def test_whnf_cast_prefers_the_free_step():
    res = whnf_rt((), Cast(Sort(5), Abst(Sort(0), Ref(0))))
    assert (res.bound, res.term) == (0, Abst(Sort(0), Ref(0)))


def test_whnf_bounded_stability():
    """The result is reachable at its reported bound and every short reduct
    of it stays whnf-equivalent."""
    for c in valid_closures(31, 120):
        res = whnf_rt(c.env, c.subject)
        for depth in range(1, 9):
            if (res.bound, res.term) in reachable_rt(c.env, c.subject, depth):
                break
        else:
            raise AssertionError(f"whnf not reachable: {c}")
        for _, x in reachable_rt(c.env, res.term, 3):
            assert whnf_equivalent(res.term, x), (c, res, x)


def test_whnf_agrees_with_graph_oracle_membership():
    for c in valid_closures(57, 80):
        res = whnf_rt(c.env, c.subject)
        states = oracle_reachable(c.env, c.subject, NXT, 8, cap=50_000)
        assert (res.bound, res.term) in states


def test_whnf_fuel_variations_agree_up_to_equivalence():
    for c in valid_closures(71, 80):
        lo = whnf_rt(c.env, c.subject)
        hi = whnf_rt(c.env, c.subject, fuel=100_000)
        assert whnf_equivalent(lo.term, hi.term)


def test_corpus_normalizes_within_default_fuel():
    for c in arity_bearing_closures(3, 300):
        r_normalize(c.env, c.subject)  # must not raise
