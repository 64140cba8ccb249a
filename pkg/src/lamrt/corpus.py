"""Seeded generation of closures that are valid at the full domain.

Every recipe here produces validity by construction, so the suites built on
top of the corpus (subject reduction, uniqueness, the eta report) start from
closures the checker accepts at Omega. Two recipes matter most:

* casts and simple applications take their ascribed/expected type from
  canonical_type, which makes the conversion premises hold definitionally;
* the "declared application" recipe builds [x:W].[f:[y:W].U].@(x).f, whose
  inner application needs one t-step to expose the abstraction. These are
  the closures that separate the {0} domain from {1}.

Void entries appear occasionally but are never referenced.
"""

from __future__ import annotations

import random

from .steps import canonical_type
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
    VOID,
    Void,
    closure_size,
    lift,
    size,
)


def _referable(env: Env) -> list:
    """Indices (as de Bruijn distances from the inner end) of non-Void
    entries."""
    k = len(env)
    return [k - 1 - p for p in range(k) if not isinstance(env[p], Void)]


def _leaf(rng: random.Random, env: Env) -> Term:
    refs = _referable(env)
    if refs and rng.random() < 0.5:
        return Ref(rng.choice(refs))
    return Sort(rng.randint(0, 2))


def _valid_term(
    rng: random.Random, env: Env, budget: int, policy: SortPolicy
) -> Term:
    if budget <= 1:
        return _leaf(rng, env)
    roll = rng.random()
    if roll < 0.18:
        return _leaf(rng, env)
    if roll < 0.36:
        ty = _valid_term(rng, env, budget // 2, policy)
        body = _valid_term(rng, env + (Decl(ty),), budget - size(ty) - 1, policy)
        return Abst(ty, body)
    if roll < 0.52:
        defn = _valid_term(rng, env, budget // 2, policy)
        body = _valid_term(
            rng, env + (Defn(defn),), budget - size(defn) - 1, policy
        )
        return Abbr(defn, body)
    if roll < 0.68:
        body = _valid_term(rng, env, budget // 2, policy)
        ty = canonical_type(env, body, 1, policy)
        return Cast(ty, body)
    if roll < 0.86:
        # immediate redex: the function is an abstraction over the
        # argument's own canonical type
        arg = _valid_term(rng, env, budget // 3, policy)
        ty = canonical_type(env, arg, 1, policy)
        body = _valid_term(
            rng, env + (Decl(ty),), budget - size(arg) - size(ty) - 2, policy
        )
        return Appl(arg, Abst(ty, body))
    # declared application: the function is a declared variable, so the
    # checker needs one t-step to reach an abstraction
    w = _valid_term(rng, env, max(budget // 4, 1), policy)
    ext1 = env + (Decl(w),)
    lifted = lift(w, 0, 1)
    u = _valid_term(
        rng, ext1 + (Decl(lifted),), max(budget // 4, 1), policy
    )
    fun_ty = Abst(lifted, u)
    return Abst(w, Abst(fun_ty, Appl(Ref(1), Ref(0))))


def _valid_env(rng: random.Random, policy: SortPolicy) -> Env:
    env: Env = ()
    for _ in range(rng.randint(0, 3)):
        roll = rng.random()
        if roll < 0.4:
            env += (Decl(_valid_term(rng, env, 3, policy)),)
        elif roll < 0.8:
            env += (Defn(_valid_term(rng, env, 3, policy)),)
        elif roll < 0.9:
            env += (VOID,)
        else:
            # a declared function: what the eta pass looks for
            ty = _valid_term(rng, env, 2, policy)
            body = _valid_term(rng, env + (Decl(ty),), 2, policy)
            env += (Decl(Abst(ty, body)),)
    return env


def valid_closures(
    seed: int,
    count: int,
    max_size: int = 12,
    policy: SortPolicy = SUCCESSOR,
) -> list:
    """Deterministic list of closures valid at Omega."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        env = _valid_env(rng, policy)
        subject = _valid_term(rng, env, rng.randint(1, max_size), policy)
        c = Closure(env, subject)
        if closure_size(c) <= max_size:
            out.append(c)
    return out


def arity_bearing_closures(
    seed: int, count: int, max_size: int = 12, policy: SortPolicy = SUCCESSOR
) -> list:
    """Valid closures double as the arity-bearing corpus (validity implies
    an arity), with the seed offset so suites do not shadow one another."""
    return valid_closures(seed + 7919, count, max_size, policy)
