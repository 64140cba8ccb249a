"""Syntactic equivalences on terms, environments, and closures.

Three term equivalences of decreasing strength, each an equivalence relation:

* sort_irrelevant: equal up to the degrees of sorts.
* same_top_constructor: agree on the outermost shape only (sorts match any
  sorts, references must coincide, binding items match binding items, flat
  items match flat items).
* whnf_equivalent: identifies terms with the same weak head behaviour.

Environment comparisons are relative to a set of selected positions; entries
outside the set carry no constraint at all.
"""

from __future__ import annotations

from .terms import (
    FLATS,
    PAIRS,
    Abbr,
    Abst,
    Appl,
    Cast,
    Closure,
    Ref,
    Sort,
    Void,
    entry_term,
    inherited_free_vars,
    parts,
)


def sort_irrelevant(t1, t2) -> bool:
    if isinstance(t1, Sort):
        return isinstance(t2, Sort)
    if isinstance(t1, Ref):
        return isinstance(t2, Ref) and t1.i == t2.i
    if type(t1) is not type(t2):
        return False
    l1, r1 = parts(t1)
    l2, r2 = parts(t2)
    return sort_irrelevant(l1, l2) and sort_irrelevant(r1, r2)


def same_top_constructor(t1, t2) -> bool:
    """Outer equivalence: no recursion into components. A binding item of one
    kind matches a binding item of the other kind, and likewise for flat
    items; only references must agree exactly."""
    if isinstance(t1, Sort):
        return isinstance(t2, Sort)
    if isinstance(t1, Ref):
        return isinstance(t2, Ref) and t1.i == t2.i
    if isinstance(t1, PAIRS):
        return isinstance(t2, PAIRS)
    return isinstance(t1, FLATS) and isinstance(t2, FLATS)


def whnf_equivalent(t1, t2) -> bool:
    """Equivalence preserved by weak head normalization: abstractions are
    opaque, definition bodies and cast components are compared, and an
    application must carry the identical argument."""
    if isinstance(t1, Sort):
        return isinstance(t2, Sort)
    if isinstance(t1, Ref):
        return isinstance(t2, Ref) and t1.i == t2.i
    if isinstance(t1, Abst):
        return isinstance(t2, Abst)
    if isinstance(t1, Abbr):
        return isinstance(t2, Abbr) and whnf_equivalent(t1.body, t2.body)
    if isinstance(t1, Appl):
        return (
            isinstance(t2, Appl)
            and t1.arg == t2.arg
            and whnf_equivalent(t1.fun, t2.fun)
        )
    if isinstance(t1, Cast):
        return (
            isinstance(t2, Cast)
            and whnf_equivalent(t1.ty, t2.ty)
            and whnf_equivalent(t1.body, t2.body)
        )
    return False


def _positions(selected, length: int):
    """Selected absolute positions that actually fall inside environments of
    the given length. Negative members encode references escaping past the
    outer end; they constrain nothing here."""
    return [p for p in selected if 0 <= p < length]


def env_eq_on(selected, env1, env2, term_eq=None) -> bool:
    """Same length, and the selected positions hold entries of the same kind
    whose terms agree under term_eq (syntactic equality when omitted), or are
    both Void."""
    if term_eq is None:
        term_eq = lambda a, b: a == b
    if len(env1) != len(env2):
        return False
    for p in _positions(selected, len(env1)):
        e1, e2 = env1[p], env2[p]
        if isinstance(e1, Void) and isinstance(e2, Void):
            continue
        if type(e1) is not type(e2):
            return False
        if not term_eq(entry_term(e1), entry_term(e2)):
            return False
    return True


def referred_env_eq(selected, env1, env2) -> bool:
    """env_eq_on with entry terms compared up to sort degrees."""
    return env_eq_on(selected, env1, env2, term_eq=sort_irrelevant)


def closure_sort_irrelevant(c1: Closure, c2: Closure) -> bool:
    """Subjects equal up to sorts, environments agreeing (up to sorts) on the
    entries the first subject actually depends on."""
    selected = inherited_free_vars(c1.env, c1.subject)
    return referred_env_eq(selected, c1.env, c2.env) and sort_irrelevant(
        c1.subject, c2.subject
    )
