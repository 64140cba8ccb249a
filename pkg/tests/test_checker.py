"""Parametric validity, type checking, and conversion."""

import pytest

from lamrt import (
    EMPTY,
    OMEGA,
    PRESETS,
    Abbr,
    Abst,
    Appl,
    Cast,
    Decl,
    Defn,
    Invalid,
    NoArity,
    Ref,
    Sort,
    canonical_type,
    check_valid,
    domain_leq,
    fin_set,
    infer_type,
    iterated_typecheck,
    rt_convertible,
    step_rt,
    typecheck,
)
from lamrt.corpus import valid_closures

BETA_CHAIN = Appl(Sort(0), Abst(Sort(1), Ref(0)))
WEAK_WITNESS = Appl(
    Sort(1),
    Abst(Sort(2), Appl(Sort(0), Abst(Ref(0), Sort(5)))),
)  # @(*1).[y:*2].@(*0).[x:y].*5


# -- conversion ----------------------------------------------------------------


def test_rt_convertible_examples():
    assert rt_convertible((Defn(Sort(0)),), Ref(0), 0, Sort(0), 0)
    assert rt_convertible((), Sort(0), 1, Sort(1), 0)
    assert not rt_convertible((), Sort(0), 0, Sort(1), 0)


def test_rt_convertible_requires_arities():
    with pytest.raises(NoArity):
        rt_convertible((), Appl(Sort(0), Sort(0)), 0, Sort(0), 0)
    with pytest.raises(NoArity):
        rt_convertible((), Sort(0), 0, Appl(Sort(0), Sort(0)), 0)


# -- validity ------------------------------------------------------------------


def test_check_valid_application_across_domains():
    assert check_valid(OMEGA, (), BETA_CHAIN).is_valid
    assert check_valid(fin_set([0]), (), BETA_CHAIN).is_valid
    assert check_valid(fin_set([1]), (), BETA_CHAIN).is_valid
    report = check_valid(EMPTY, (), BETA_CHAIN)
    assert not report.is_valid
    assert report.tag == "bound-not-in-domain"


def test_check_valid_cast_mismatch():
    report = check_valid(OMEGA, (), Cast(Sort(0), Sort(0)))
    assert not report.is_valid
    assert report.tag == "cast-mismatch"


def test_check_valid_weak_validity_witness():
    report = check_valid(OMEGA, (), WEAK_WITNESS)
    assert not report.is_valid
    assert report.tag == "subterm-invalid"
    assert report.path == ("fun", "body")
    assert report.cause == "argument-type-mismatch"


def test_check_valid_sorts_and_refs():
    assert check_valid(OMEGA, (), Sort(4)).is_valid
    assert check_valid(OMEGA, (Decl(Sort(0)),), Ref(0)).is_valid
    report = check_valid(OMEGA, (), Ref(0))
    assert not report.is_valid and report.tag == "not-closed"


def test_check_valid_no_lambda_form():
    report = check_valid(OMEGA, (), Appl(Sort(0), Sort(1)))
    assert not report.is_valid
    assert report.tag == "no-lambda-form"


def test_invalid_entry_is_reported_with_its_position():
    env = (Decl(Cast(Sort(0), Sort(0))),)
    report = check_valid(OMEGA, env, Ref(0))
    assert not report.is_valid
    assert report.tag == "subterm-invalid"
    assert report.path[0].startswith("env")
    assert report.cause == "cast-mismatch"


def test_describe_readable():
    report = check_valid(OMEGA, (), WEAK_WITNESS)
    text = report.describe()
    assert "argument-type-mismatch" in text


# -- typecheck / infer ------------------------------------------------------------


def test_typecheck_examples():
    assert typecheck(OMEGA, (), Sort(0), Sort(1))
    assert typecheck(OMEGA, (), Abst(Sort(0), Ref(0)), Abst(Sort(0), Sort(0)))


def test_universal_abstraction_is_predicative():
    for env, w, t in [
        ((), Sort(0), Ref(0)),
        ((), Sort(1), Sort(0)),
        ((Decl(Sort(0)),), Ref(0), Ref(1)),
    ]:
        pair = Abst(w, t)
        if not check_valid(OMEGA, env, pair).is_valid:
            continue
        assert not typecheck(OMEGA, env, pair, w)


def test_predicativity_on_corpus_abstractions():
    hits = 0
    for c in valid_closures(61, 300):
        if isinstance(c.subject, Abst):
            hits += 1
            assert not typecheck(OMEGA, c.env, c.subject, c.subject.ty)
    assert hits > 20


def test_infer_type_examples():
    assert infer_type(OMEGA, (), Sort(0)) == Sort(1)
    assert infer_type(OMEGA, (), Abst(Sort(0), Ref(0))) == Abst(Sort(0), Sort(0))
    env = (Defn(Sort(0)),)
    assert infer_type(OMEGA, env, Ref(0)) == Sort(1)


def test_infer_type_rejects_invalid_terms():
    with pytest.raises(Invalid):
        infer_type(OMEGA, (), Cast(Sort(0), Sort(0)))


def test_iterated_typecheck_examples():
    assert iterated_typecheck(OMEGA, 0, (Defn(Sort(0)),), Ref(0), Sort(0))
    assert iterated_typecheck(OMEGA, 2, (), Sort(0), Sort(2))
    assert not iterated_typecheck(OMEGA, 1, (), Sort(0), Sort(0))


def test_iterated_at_one_is_typecheck():
    for c in valid_closures(67, 150):
        u = infer_type(OMEGA, c.env, c.subject)
        assert iterated_typecheck(OMEGA, 1, c.env, c.subject, u) == typecheck(
            OMEGA, c.env, c.subject, u
        )


# -- metatheoretic properties -----------------------------------------------------


def test_subject_reduction():
    for c in valid_closures(73, 200):
        u = infer_type(OMEGA, c.env, c.subject)
        for s in step_rt(c.env, c.subject):
            if s.bound == 0:
                assert typecheck(OMEGA, c.env, s.term, u), (c, s)


def test_validity_preserved_by_every_bound_step():
    for c in valid_closures(79, 200):
        for s in step_rt(c.env, c.subject):
            assert check_valid(OMEGA, c.env, s.term).is_valid, (c, s)


def test_valid_iff_typed():
    for c in valid_closures(83, 150):
        u = infer_type(OMEGA, c.env, c.subject)
        assert typecheck(OMEGA, c.env, c.subject, u)
    for bad in (Cast(Sort(0), Sort(0)), Appl(Sort(0), Sort(1)), Ref(0)):
        assert not check_valid(OMEGA, (), bad).is_valid
        with pytest.raises(Invalid):
            infer_type(OMEGA, (), bad)


def test_correctness_of_types():
    for c in valid_closures(89, 200):
        u = infer_type(OMEGA, c.env, c.subject)
        assert check_valid(OMEGA, c.env, u).is_valid, (c, u)


def test_type_uniqueness_up_to_conversion():
    for c in valid_closures(97, 150):
        u1 = canonical_type(c.env, c.subject, 1)
        u2 = rt_convertible(c.env, c.subject, 1, u1, 0)
        assert u2


def test_domain_monotonicity_on_corpus():
    for c in valid_closures(101, 120):
        verdicts = [check_valid(d, c.env, c.subject).is_valid for d in PRESETS]
        for i, lo in enumerate(PRESETS):
            for j, hi in enumerate(PRESETS):
                if domain_leq(lo, hi) and verdicts[i]:
                    assert verdicts[j], (c, lo, hi)


def test_preset_equivalence_one_vs_zero_one():
    one, both = fin_set([1]), fin_set([0, 1])
    for c in valid_closures(103, 200):
        assert (
            check_valid(one, c.env, c.subject).is_valid
            == check_valid(both, c.env, c.subject).is_valid
        )
