"""Single-step enumerators for the three reduction relations, environment
steps, and the canonical type-step iterator.

The bounded relation mixes r-steps (bound 0: beta, delta, zeta, theta,
upsilon-free cast drop) with t-steps (bound 1: sort tick, declared-variable
typing, cast projection). The bound of a step records how many t-transitions
it performs. Context rules are asymmetric: left components of applications
and binders, and both cast components taken alone, only pass bound-0 steps;
a bound-1 step crosses a cast only by stepping both components at once.

The extended relation drops the bookkeeping: every context passes every step,
references unfold through declarations as well as definitions, and a sort may
step to any sort (the enumerator emits the canonical successor witness).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import FuelExhausted, NoTypeStep
from .terms import (
    PAIRS,
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
    direct_subclosures,
    entry_term,
    free_in,
    lift,
    lower,
    parts,
    pair_entry,
    rebuild,
    resolve,
    with_entry_term,
)


class Budget:
    """Countdown shared across one kernel call; None means unlimited."""

    def __init__(self, fuel: Optional[int] = None):
        self.remaining = fuel

    def spend(self, amount: int = 1):
        if self.remaining is None:
            return
        self.remaining -= amount
        if self.remaining < 0:
            raise FuelExhausted("fuel exhausted")


@dataclass(frozen=True)
class RtStep:
    bound: int
    term: Term
    rule: str


@dataclass(frozen=True)
class QrstStep:
    kind: str  # "ex" | "lx" | "lq" | "cs"
    closure: Closure


def _dedup_steps(steps: list) -> list:
    seen = set()
    out = []
    for st in steps:
        key = (st.bound, st.term)
        if key not in seen:
            seen.add(key)
            out.append(st)
    return out


def _dedup_terms(terms: list) -> list:
    seen = set()
    out = []
    for t in terms:
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def step_rt(env: Env, t: Term, policy: SortPolicy = SUCCESSOR) -> list:
    """All single bounded rt-steps of t in env, each tagged with its bound
    and the name of the rule fired at the redex. Duplicate results (same
    bound and term through different rules) are listed once."""
    return _dedup_steps(_step_rt(env, t, policy))


def _step_rt(env: Env, t: Term, policy: SortPolicy) -> list:
    out = []
    if isinstance(t, Sort):
        out.append(RtStep(1, Sort(policy.next_sort(t.s)), "sort"))
    elif isinstance(t, Ref):
        e = resolve(env, t.i)
        if isinstance(e, Defn):
            out.append(RtStep(0, lift(e.body, 0, t.i + 1), "delta"))
        elif isinstance(e, Decl):
            out.append(RtStep(1, lift(e.ty, 0, t.i + 1), "decl-type"))
    elif isinstance(t, Appl):
        if isinstance(t.fun, Abst):
            out.append(
                RtStep(0, Abbr(Cast(t.fun.ty, t.arg), t.fun.body), "beta")
            )
        if isinstance(t.fun, Abbr):
            swapped = Abbr(t.fun.defn, Appl(lift(t.arg, 0, 1), t.fun.body))
            out.append(RtStep(0, swapped, "theta"))
        for st in step_rt(env, t.arg, policy):
            if st.bound == 0:
                out.append(RtStep(0, Appl(st.term, t.fun), st.rule))
        for st in step_rt(env, t.fun, policy):
            out.append(RtStep(st.bound, Appl(t.arg, st.term), st.rule))
    elif isinstance(t, PAIRS):
        if isinstance(t, Abbr) and not free_in(t.body, 0):
            out.append(RtStep(0, lower(t.body), "zeta"))
        left, right = parts(t)
        for st in step_rt(env, left, policy):
            if st.bound == 0:
                out.append(RtStep(0, rebuild(t, st.term, right), st.rule))
        for st in step_rt(env + (pair_entry(t),), right, policy):
            out.append(RtStep(st.bound, rebuild(t, left, st.term), st.rule))
    elif isinstance(t, Cast):
        out.append(RtStep(0, t.body, "cast-drop"))
        out.append(RtStep(1, t.ty, "cast-type"))
        lsteps = step_rt(env, t.ty, policy)
        rsteps = step_rt(env, t.body, policy)
        for st in lsteps:
            if st.bound == 0:
                out.append(RtStep(0, Cast(st.term, t.body), st.rule))
        for st in rsteps:
            if st.bound == 0:
                out.append(RtStep(0, Cast(t.ty, st.term), st.rule))
        for sl in lsteps:
            if sl.bound != 1:
                continue
            for sr in rsteps:
                if sr.bound == 1:
                    out.append(
                        RtStep(1, Cast(sl.term, sr.term), "cast-both")
                    )
    return out


def step_x(env: Env, t: Term, policy: SortPolicy = SUCCESSOR) -> list:
    """All single extended steps; no bounds, every context passes. The sort
    rule admits any target sort; only the canonical successor witness is
    listed."""
    return _dedup_terms(_step_x(env, t, policy))


def _step_x(env: Env, t: Term, policy: SortPolicy) -> list:
    out = []
    if isinstance(t, Sort):
        out.append(Sort(policy.next_sort(t.s)))
    elif isinstance(t, Ref):
        e = resolve(env, t.i)
        inner = None if e is None else entry_term(e)
        if inner is not None:
            out.append(lift(inner, 0, t.i + 1))
    elif isinstance(t, Appl):
        if isinstance(t.fun, Abst):
            out.append(Abbr(Cast(t.fun.ty, t.arg), t.fun.body))
        if isinstance(t.fun, Abbr):
            out.append(Abbr(t.fun.defn, Appl(lift(t.arg, 0, 1), t.fun.body)))
        out.extend(Appl(u, t.fun) for u in step_x(env, t.arg, policy))
        out.extend(Appl(t.arg, u) for u in step_x(env, t.fun, policy))
    elif isinstance(t, PAIRS):
        if isinstance(t, Abbr) and not free_in(t.body, 0):
            out.append(lower(t.body))
        left, right = parts(t)
        out.extend(rebuild(t, u, right) for u in step_x(env, left, policy))
        out.extend(
            rebuild(t, left, u)
            for u in step_x(env + (pair_entry(t),), right, policy)
        )
    elif isinstance(t, Cast):
        out.append(t.body)
        out.append(t.ty)
        out.extend(Cast(u, t.body) for u in step_x(env, t.ty, policy))
        out.extend(Cast(t.ty, u) for u in step_x(env, t.body, policy))
    return out


def step_t(env: Env, t: Term, policy: SortPolicy = SUCCESSOR) -> list:
    """All single bounded t-steps: the typing fragment alone (sort tick,
    declared-variable typing, cast projection, definition unfolding), under
    the same context discipline as step_rt."""
    return _dedup_steps(_step_t(env, t, policy))


def _step_t(env: Env, t: Term, policy: SortPolicy) -> list:
    out = []
    if isinstance(t, Sort):
        out.append(RtStep(1, Sort(policy.next_sort(t.s)), "sort"))
    elif isinstance(t, Ref):
        e = resolve(env, t.i)
        if isinstance(e, Defn):
            out.append(RtStep(0, lift(e.body, 0, t.i + 1), "delta"))
        elif isinstance(e, Decl):
            out.append(RtStep(1, lift(e.ty, 0, t.i + 1), "decl-type"))
    elif isinstance(t, Appl):
        for st in step_t(env, t.arg, policy):
            if st.bound == 0:
                out.append(RtStep(0, Appl(st.term, t.fun), st.rule))
        for st in step_t(env, t.fun, policy):
            out.append(RtStep(st.bound, Appl(t.arg, st.term), st.rule))
    elif isinstance(t, PAIRS):
        left, right = parts(t)
        for st in step_t(env, left, policy):
            if st.bound == 0:
                out.append(RtStep(0, rebuild(t, st.term, right), st.rule))
        for st in step_t(env + (pair_entry(t),), right, policy):
            out.append(RtStep(st.bound, rebuild(t, left, st.term), st.rule))
    elif isinstance(t, Cast):
        out.append(RtStep(1, t.ty, "cast-type"))
        lsteps = step_t(env, t.ty, policy)
        rsteps = step_t(env, t.body, policy)
        for st in lsteps:
            if st.bound == 0:
                out.append(RtStep(0, Cast(st.term, t.body), st.rule))
        for st in rsteps:
            if st.bound == 0:
                out.append(RtStep(0, Cast(t.ty, st.term), st.rule))
        for sl in lsteps:
            if sl.bound != 1:
                continue
            for sr in rsteps:
                if sr.bound == 1:
                    out.append(
                        RtStep(1, Cast(sl.term, sr.term), "cast-both")
                    )
    return out


def _env_steps(env: Env, stepper) -> list:
    """One entry takes one step in its own prefix; Void entries never step.
    Positions are visited outermost first."""
    out = []
    for p in range(len(env)):
        inner = entry_term(env[p])
        if inner is None:
            continue
        for u in stepper(env[:p], inner):
            out.append(
                env[:p] + (with_entry_term(env[p], u),) + env[p + 1:]
            )
    return out


def step_env_r(env: Env, policy: SortPolicy = SUCCESSOR) -> list:
    """Environments one r-step away: a single entry fires a single bound-0
    step in its prefix."""
    return _env_steps(
        env,
        lambda prefix, t: [
            st.term for st in step_rt(prefix, t, policy) if st.bound == 0
        ],
    )


def step_env_x(env: Env, policy: SortPolicy = SUCCESSOR) -> list:
    """Environments one extended step away."""
    return _env_steps(env, lambda prefix, t: step_x(prefix, t, policy))


def _type_step(env: Env, t: Term, policy: SortPolicy, budget: Budget) -> Term:
    """The canonical type-step: one t-transition chosen deterministically.
    Definition references chase the definition (a bound-0 move) and take the
    step inside it; this terminates because entries live in shorter
    environments."""
    budget.spend()
    if isinstance(t, Sort):
        return Sort(policy.next_sort(t.s))
    if isinstance(t, Ref):
        e = resolve(env, t.i)
        if isinstance(e, Decl):
            return lift(e.ty, 0, t.i + 1)
        if isinstance(e, Defn):
            prefix = env[: len(env) - 1 - t.i]
            return lift(_type_step(prefix, e.body, policy, budget), 0, t.i + 1)
        raise NoTypeStep(f"reference {t.i} has no typed entry")
    if isinstance(t, Appl):
        return Appl(t.arg, _type_step(env, t.fun, policy, budget))
    if isinstance(t, PAIRS):
        left, right = parts(t)
        stepped = _type_step(env + (pair_entry(t),), right, policy, budget)
        return rebuild(t, left, stepped)
    return t.ty  # Cast


def canonical_type(
    env: Env,
    t: Term,
    n: int,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> Term:
    """Iterate the canonical type-step n times."""
    budget = Budget(fuel)
    for _ in range(n):
        t = _type_step(env, t, policy, budget)
    return t


def reachable_rt(
    env: Env,
    t: Term,
    max_depth: int,
    policy: SortPolicy = SUCCESSOR,
    limit: Optional[int] = 200000,
) -> set:
    """All (bound, term) pairs with a bounded rt-derivation of at most
    max_depth single steps from t, including (0, t). Breadth-first; limit
    caps the number of distinct states explored."""
    seen = {(0, t)}
    frontier = [(0, t)]
    for _ in range(max_depth):
        if not frontier:
            break
        fresh = []
        for used, u in frontier:
            for st in step_rt(env, u, policy):
                state = (used + st.bound, st.term)
                if state in seen:
                    continue
                if limit is not None and len(seen) >= limit:
                    raise FuelExhausted("reachability exploration limit hit")
                seen.add(state)
                fresh.append(state)
        frontier = fresh
    return seen


def qrst_steps(c: Closure, policy: SortPolicy = SUCCESSOR) -> list:
    """The union relation driving the big-tree induction: extended steps on
    the subject, extended steps on the environment, the reflexive refinement
    witness, and the direct subclosures."""
    out = [
        QrstStep("ex", Closure(c.env, u))
        for u in step_x(c.env, c.subject, policy)
    ]
    out.extend(
        QrstStep("lx", Closure(e, c.subject))
        for e in step_env_x(c.env, policy)
    )
    out.append(QrstStep("lq", c))
    out.extend(
        QrstStep("cs", s) for s in direct_subclosures(c.env, c.subject)
    )
    return out
