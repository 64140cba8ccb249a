"""One parallel step of eta-expansion on declared-variable occurrences.

A reference to a declaration whose type weak-head-reduces to an abstraction
[y:W].U is replaced by [y:W'].@(y).x, where W' is the abstraction's domain
lifted into scope; the new application guards the variable, so a second pass
leaves the output alone. A variable already sitting in the function position
of an application counts as guarded and stays put for the same reason.
References whose declared type heads at a sort stay fixed, as do defined
variables. Whether the negative case holds is decided
by the weak head machine; on closures where that machine cannot commit (open
heads, stuck applications) the reference is conservatively left unchanged.
"""

from __future__ import annotations

from typing import Optional

from .errors import OpenHead, StuckApplication
from .normalize import whnf_rt
from .terms import (
    PAIRS,
    Abst,
    Appl,
    Closure,
    Decl,
    Env,
    Ref,
    Sort,
    SortPolicy,
    SUCCESSOR,
    Term,
    entry_term,
    inherited_free_vars,
    lift,
    pair_entry,
    parts,
    rebuild,
    resolve,
    with_entry_term,
)


def eta_expand_term(
    env: Env,
    t: Term,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> Term:
    if isinstance(t, Sort):
        return t
    if isinstance(t, Ref):
        e = resolve(env, t.i)
        if not isinstance(e, Decl):
            return t  # defined, Void, or escaping: never expanded
        prefix = env[: len(env) - 1 - t.i]
        try:
            head = whnf_rt(prefix, e.ty, policy, fuel)
        except (OpenHead, StuckApplication):
            return t
        if not isinstance(head.term, Abst):
            return t
        domain_ty = lift(head.term.ty, 0, t.i + 1)
        return Abst(domain_ty, Appl(Ref(0), Ref(t.i + 1)))
    left, right = parts(t)
    if isinstance(t, PAIRS):
        expanded_left = eta_expand_term(env, left, policy, fuel)
        expanded_right = eta_expand_term(
            env + (pair_entry(t),), right, policy, fuel
        )
        return rebuild(t, expanded_left, expanded_right)
    if isinstance(t, Appl) and isinstance(right, Ref):
        # An applied variable is already guarded; expanding it would undo
        # the guard and make the pass re-fire on its own output.
        return rebuild(t, eta_expand_term(env, left, policy, fuel), right)
    return rebuild(
        t,
        eta_expand_term(env, left, policy, fuel),
        eta_expand_term(env, right, policy, fuel),
    )


def eta_expand_env(
    selected,
    env: Env,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> Env:
    """Expand the entries at the selected absolute positions, each against
    its original prefix (the pass is parallel); everything else, including
    Void entries, goes through unchanged."""
    out = []
    for p, e in enumerate(env):
        inner = entry_term(e)
        if p in selected and inner is not None:
            expanded = eta_expand_term(env[:p], inner, policy, fuel)
            out.append(with_entry_term(e, expanded))
        else:
            out.append(e)
    return tuple(out)


def eta_expand_closure(
    c: Closure,
    policy: SortPolicy = SUCCESSOR,
    fuel: Optional[int] = None,
) -> Closure:
    """Expand the subject and the entries it depends on, all against the
    original environment."""
    selected = inherited_free_vars(c.env, c.subject)
    new_env = eta_expand_env(selected, c.env, policy, fuel)
    new_subject = eta_expand_term(c.env, c.subject, policy, fuel)
    return Closure(new_env, new_subject)
