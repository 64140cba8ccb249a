"""Validity and type checking, parametric in an applicability domain.

check_valid walks the closure once. Applications are the only place the
domain matters: the function's weak head form must be an abstraction, the
number of t-steps the head machine needed must be admissible in the domain,
and the argument's type must r-convert to the expected one.

A failed check names exactly one premise. When the offending premise sits
inside a component, the report's tag is subterm-invalid, the path walks from
the root to the failing position, and cause keeps the leaf premise tag.

The fuel argument bounds every internal reduction loop separately; None lets
each loop pick its own default (10 * size^2 of its input).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arity import infer_arity
from .domains import ApplicabilityDomain, exists_geq
from .errors import Invalid, NoArity, OpenHead, StuckApplication
from .normalize import rt_normal_form, whnf_rt
from .steps import canonical_type
from .terms import (
    PAIRS,
    Abst,
    Appl,
    Cast,
    Env,
    Ref,
    Sort,
    SortPolicy,
    SUCCESSOR,
    Term,
    entry_term,
    pair_entry,
    parts,
    resolve,
)


@dataclass(frozen=True)
class ValidityReport:
    is_valid: bool
    path: tuple = ()
    tag: Optional[str] = None
    cause: Optional[str] = None

    def describe(self) -> str:
        if self.is_valid:
            return "valid"
        text = f"invalid ({self.tag})"
        if self.path:
            text += " at " + ".".join(self.path)
        if self.cause:
            text += f": {self.cause}"
        return text


VALID = ValidityReport(True)


def _fail(tag: str) -> ValidityReport:
    return ValidityReport(False, (), tag)

def _wrap(label: str, child: ValidityReport) -> ValidityReport:
    leaf = child.cause if child.tag == "subterm-invalid" else child.tag
    return ValidityReport(
        False, (label,) + child.path, "subterm-invalid", leaf
    )


def rt_convertible(
    env: Env,
    t1: Term,
    n1: int,
    t2: Term,
    n2: int,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> bool:
    """Do the bound-n1 and bound-n2 rt-normal forms coincide syntactically?
    Both operands must have an arity; that is what guarantees the
    normalizations terminate."""
    if infer_arity(env, t1) is None:
        raise NoArity("left operand of conversion has no arity")
    if infer_arity(env, t2) is None:
        raise NoArity("right operand of conversion has no arity")
    return rt_normal_form(env, t1, n1, policy, fuel) == rt_normal_form(
        env, t2, n2, policy, fuel
    )


def check_valid(
    domain: ApplicabilityDomain,
    env: Env,
    t: Term,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> ValidityReport:
    if isinstance(t, Sort):
        return VALID
    if isinstance(t, Ref):
        e = resolve(env, t.i)
        inner = None if e is None else entry_term(e)
        if inner is None:
            return _fail("not-closed")
        p = len(env) - 1 - t.i
        sub = check_valid(domain, env[:p], inner, policy, fuel)
        return VALID if sub.is_valid else _wrap(f"env{p}", sub)
    if isinstance(t, PAIRS):
        left_label = "type" if isinstance(t, Abst) else "defn"
        left, right = parts(t)
        sub = check_valid(domain, env, left, policy, fuel)
        if not sub.is_valid:
            return _wrap(left_label, sub)
        sub = check_valid(
            domain, env + (pair_entry(t),), right, policy, fuel
        )
        return VALID if sub.is_valid else _wrap("body", sub)
    if isinstance(t, Cast):
        sub = check_valid(domain, env, t.ty, policy, fuel)
        if not sub.is_valid:
            return _wrap("type", sub)
        sub = check_valid(domain, env, t.body, policy, fuel)
        if not sub.is_valid:
            return _wrap("body", sub)
        if not rt_convertible(env, t.ty, 0, t.body, 1, policy, fuel):
            return _fail("cast-mismatch")
        return VALID
    # Appl
    sub = check_valid(domain, env, t.arg, policy, fuel)
    if not sub.is_valid:
        return _wrap("arg", sub)
    sub = check_valid(domain, env, t.fun, policy, fuel)
    if not sub.is_valid:
        return _wrap("fun", sub)
    try:
        head = whnf_rt(env, t.fun, policy, fuel)
    except (OpenHead, StuckApplication):
        return _fail("no-lambda-form")
    if not isinstance(head.term, Abst):
        return _fail("no-lambda-form")
    if not exists_geq(domain, head.bound):
        return _fail("bound-not-in-domain")
    if not rt_convertible(env, t.arg, 1, head.term.ty, 0, policy, fuel):
        return _fail("argument-type-mismatch")
    return VALID


def typecheck(
    domain: ApplicabilityDomain,
    env: Env,
    t: Term,
    ty: Term,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> bool:
    """Type checking is validity of the cast."""
    return check_valid(domain, env, Cast(ty, t), policy, fuel).is_valid


def infer_type(
    domain: ApplicabilityDomain,
    env: Env,
    t: Term,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> Term:
    """The canonical expected type of a valid term; raises Invalid when the
    term does not pass check_valid."""
    report = check_valid(domain, env, t, policy, fuel)
    if not report.is_valid:
        raise Invalid(report.describe())
    return canonical_type(env, t, 1, policy, fuel)


def iterated_typecheck(
    domain: ApplicabilityDomain,
    n: int,
    env: Env,
    t: Term,
    ty: Term,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> bool:
    """Does ty match the n-fold expected type of t? Both terms must be valid
    and the bound-(n,0) normal forms must agree."""
    if not check_valid(domain, env, t, policy, fuel).is_valid:
        return False
    if not check_valid(domain, env, ty, policy, fuel).is_valid:
        return False
    return rt_convertible(env, t, n, ty, 0, policy, fuel)
