"""Normalization: full r-normal forms, bounded rt-normal forms, and the weak
head machine.

Every loop here is fuel-guarded. The default allowance of 10 * size^2 steps
is far beyond what any valid closure in the test corpus needs, but untyped
inputs can diverge, so running dry raises FuelExhausted instead of spinning.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import OpenHead, StuckApplication
from .steps import Budget, canonical_type, step_rt
from .terms import (
    Abbr,
    Abst,
    Appl,
    Cast,
    Closure,
    Decl,
    Defn,
    Env,
    Ref,
    Sort,
    SortPolicy,
    SUCCESSOR,
    Term,
    closure_size,
    free_in,
    lift,
    lower,
    resolve,
    subst,
)


def default_fuel(env: Env, t: Term) -> int:
    n = closure_size(Closure(env, t))
    return 10 * n * n


@dataclass(frozen=True)
class WhnfResult:
    bound: int
    term: Term


def is_r_normal(env: Env, t: Term, policy: SortPolicy = SUCCESSOR) -> bool:
    return not any(st.bound == 0 for st in step_rt(env, t, policy))


def r_normalize(
    env: Env,
    t: Term,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> Term:
    """Repeatedly fire bound-0 steps until none remain. Deterministic
    (leftmost enumerated step) unless an rng is supplied to pick among the
    candidates."""
    budget = Budget(default_fuel(env, t) if fuel is None else fuel)
    while True:
        candidates = [st for st in step_rt(env, t, policy) if st.bound == 0]
        if not candidates:
            return t
        budget.spend()
        chosen = candidates[0] if rng is None else rng.choice(candidates)
        t = chosen.term


def rt_normal_form(
    env: Env,
    t: Term,
    n: int,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> Term:
    """The canonical bound-n rt-normal form: n canonical type-steps followed
    by full r-normalization."""
    if fuel is None:
        fuel = default_fuel(env, t)
    typed = canonical_type(env, t, n, policy, fuel)
    return r_normalize(env, typed, policy, fuel)


def whnf_rt(
    env: Env,
    t: Term,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> WhnfResult:
    """Weak head normalization, counting the t-steps it is forced to take.

    The returned form is always sort-headed or abstraction-headed, in the
    same environment as the input. An abbreviation around a weak head form
    is eliminated: its definition is substituted into the form when used
    (definition unfolding is free at bound 0), dropped otherwise. References
    into Void entries or past the outer end raise OpenHead; an application
    whose head turns out to be a sort raises StuckApplication."""
    budget = Budget(default_fuel(env, t) if fuel is None else fuel)
    return _whnf(env, t, policy, budget)


def _whnf(env: Env, t: Term, policy: SortPolicy, budget: Budget) -> WhnfResult:
    bound = 0
    while True:
        budget.spend()
        if isinstance(t, (Sort, Abst)):
            return WhnfResult(bound, t)
        if isinstance(t, Ref):
            e = resolve(env, t.i)
            if isinstance(e, Defn):
                t = lift(e.body, 0, t.i + 1)
            elif isinstance(e, Decl):
                t = lift(e.ty, 0, t.i + 1)
                bound += 1
            else:
                raise OpenHead(f"head reference {t.i} is unbound")
            continue
        if isinstance(t, Cast):
            t = t.body
            continue
        if isinstance(t, Appl):
            if isinstance(t.fun, Abst):
                t = Abbr(Cast(t.fun.ty, t.arg), t.fun.body)
                continue
            if isinstance(t.fun, Abbr):
                t = Abbr(
                    t.fun.defn, Appl(lift(t.arg, 0, 1), t.fun.body)
                )
                continue
            inner = _whnf(env, t.fun, policy, budget)
            bound += inner.bound
            if isinstance(inner.term, Sort):
                raise StuckApplication("application of a sort")
            t = Appl(t.arg, inner.term)
            continue
        # Abbr
        inner = _whnf(env + (Defn(t.defn),), t.body, policy, budget)
        bound += inner.bound
        if free_in(inner.term, 0):
            return WhnfResult(bound, subst(inner.term, t.defn))
        return WhnfResult(bound, lower(inner.term))
