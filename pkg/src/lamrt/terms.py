"""Syntax trees for terms, environments, and closures.

Terms are six-constructor trees over de Bruijn depth indices: Ref(0) is the
innermost binder in scope (or the innermost environment entry when no binder
intervenes). Environments are tuples with the innermost entry last. All values
are immutable and hashable; every operation here is a pure function.

Variable sets (as returned by inherited_free_vars) identify an environment
entry by its absolute position, 0 = outermost. A reference that escapes the
whole environment is encoded as a negative number: -j escapes by j levels
beyond the outermost end. This encoding is stable under extending the
environment at the inner end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union


@dataclass(frozen=True, slots=True)
class Sort:
    s: int


@dataclass(frozen=True, slots=True)
class Ref:
    i: int


@dataclass(frozen=True, slots=True)
class Appl:
    arg: "Term"
    fun: "Term"


@dataclass(frozen=True, slots=True)
class Abst:
    ty: "Term"
    body: "Term"


@dataclass(frozen=True, slots=True)
class Abbr:
    defn: "Term"
    body: "Term"


@dataclass(frozen=True, slots=True)
class Cast:
    ty: "Term"
    body: "Term"


Term = Union[Sort, Ref, Appl, Abst, Abbr, Cast]

# Pair items bind a variable in their right component; Flat items bind nothing.
PAIRS = (Abst, Abbr)
FLATS = (Cast, Appl)


@dataclass(frozen=True, slots=True)
class Decl:
    ty: Term


@dataclass(frozen=True, slots=True)
class Defn:
    body: Term


@dataclass(frozen=True, slots=True)
class Void:
    pass


VOID = Void()

Entry = Union[Decl, Defn, Void]
Env = tuple  # tuple[Entry, ...]


@dataclass(frozen=True, slots=True)
class Closure:
    env: Env
    subject: Term


@dataclass(frozen=True)
class SortPolicy:
    """The sort alphabet is the naturals; next_sort must be total on them."""

    next_sort: Callable[[int], int]


SUCCESSOR = SortPolicy(lambda s: s + 1)


def table_policy(table: dict) -> SortPolicy:
    """Finite next-sort table; sorts not listed fall back to the successor."""
    return SortPolicy(lambda s: table.get(s, s + 1))


def parts(t: Term):
    """(left, right) components of a compound term; left is the component
    outside the binder (argument, type annotation, or definition)."""
    if isinstance(t, Appl):
        return t.arg, t.fun
    if isinstance(t, (Abst, Cast)):
        return t.ty, t.body
    if isinstance(t, Abbr):
        return t.defn, t.body
    raise ValueError(f"not a compound term: {t!r}")


def rebuild(t: Term, left: Term, right: Term) -> Term:
    return type(t)(left, right)


def pair_entry(t: Term) -> Entry:
    """The environment entry created by pushing under a Pair binder."""
    if isinstance(t, Abst):
        return Decl(t.ty)
    if isinstance(t, Abbr):
        return Defn(t.defn)
    raise ValueError(f"not a pair: {t!r}")


def entry_term(e: Entry) -> Optional[Term]:
    if isinstance(e, Decl):
        return e.ty
    if isinstance(e, Defn):
        return e.body
    return None


def with_entry_term(e: Entry, t: Term) -> Entry:
    return type(e)(t)


def resolve(env: Env, i: int) -> Optional[Entry]:
    """Entry referred to by Ref(i) at the top of env, or None if it escapes."""
    if 0 <= i < len(env):
        return env[len(env) - 1 - i]
    return None


def monus(a: int, b: int) -> int:
    """Truncated subtraction on step bounds: max(a - b, 0)."""
    return a - b if a > b else 0


def size(t: Term) -> int:
    if isinstance(t, (Sort, Ref)):
        return 1
    left, right = parts(t)
    return 1 + size(left) + size(right)


def closure_size(c: Closure) -> int:
    """Constructor count of a closure; Void entries count 1 so every
    subclosure step strictly decreases this measure."""
    total = size(c.subject)
    for e in c.env:
        t = entry_term(e)
        total += 1 if t is None else size(t)
    return total


def lift(t: Term, depth: int, amount: int) -> Term:
    """Increase every Ref with index >= depth by amount."""
    if amount == 0:
        return t
    if isinstance(t, Sort):
        return t
    if isinstance(t, Ref):
        return Ref(t.i + amount) if t.i >= depth else t
    left, right = parts(t)
    inner = depth + 1 if isinstance(t, PAIRS) else depth
    return rebuild(t, lift(left, depth, amount), lift(right, inner, amount))


def subst(t: Term, value: Term) -> Term:
    """Replace free Ref(0) in t by value (lifted as needed) and lower every
    deeper free reference by one: the usual de Bruijn substitution."""

    def go(u: Term, depth: int) -> Term:
        if isinstance(u, Sort):
            return u
        if isinstance(u, Ref):
            if u.i == depth:
                return lift(value, 0, depth)
            return Ref(u.i - 1) if u.i > depth else u
        left, right = parts(u)
        inner = depth + 1 if isinstance(u, PAIRS) else depth
        return rebuild(u, go(left, depth), go(right, inner))

    return go(t, 0)


def free_in(t: Term, index: int) -> bool:
    """Does Ref(index) occur free in t?"""
    if isinstance(t, Sort):
        return False
    if isinstance(t, Ref):
        return t.i == index
    left, right = parts(t)
    inner = index + 1 if isinstance(t, PAIRS) else index
    return free_in(left, index) or free_in(right, inner)


def lower(t: Term) -> Term:
    """Remove one binder level: lower every free reference by one.
    Ref(0) must not occur free (checked)."""
    if free_in(t, 0):
        raise ValueError("lower: Ref(0) occurs free")
    return subst(t, Sort(0))  # the value is never reached


def free_indices(t: Term):
    """Free de Bruijn indices of t, as seen from the top of t."""
    out = set()

    def go(u: Term, depth: int):
        if isinstance(u, Sort):
            return
        if isinstance(u, Ref):
            if u.i >= depth:
                out.add(u.i - depth)
            return
        left, right = parts(u)
        go(left, depth)
        go(right, depth + 1 if isinstance(u, PAIRS) else depth)

    go(t, 0)
    return out


def is_closed_in(env: Env, t: Term) -> bool:
    """True iff every free reference of t resolves to a Decl or Defn entry
    of env. Void entries occupy a position without binding."""
    k = len(env)
    return all(
        i < k and not isinstance(env[k - 1 - i], Void) for i in free_indices(t)
    )


def inherited_free_vars(env: Env, t: Term) -> frozenset:
    """Free variables of (env |- t), closed under the entries they refer to.

    A reference contributes its own position plus, when it resolves to a
    declaration or definition, the inherited free variables of the entry's
    term in its prefix. References to Void entries and references escaping
    the environment contribute only themselves (negative encoding for
    escapes, see the module docstring)."""
    k = len(env)
    if isinstance(t, Sort):
        return frozenset()
    if isinstance(t, Ref):
        p = k - 1 - t.i
        if p < 0:
            return frozenset({p})
        inner = entry_term(env[p])
        if inner is None:  # Void
            return frozenset({p})
        return inherited_free_vars(env[:p], inner) | {p}
    left, right = parts(t)
    if isinstance(t, PAIRS):
        below = inherited_free_vars(env + (pair_entry(t),), right)
        return inherited_free_vars(env, left) | (below - {k})
    return inherited_free_vars(env, left) | inherited_free_vars(env, right)


def is_neutral(t: Term) -> bool:
    """Neutral (or simple) terms: sorts, references, and Flat items."""
    return isinstance(t, (Sort, Ref) + FLATS)


def direct_subclosures(env: Env, t: Term):
    """All closures one s-step away, in a fixed order: entry unfolding for a
    head reference first, then left/right components, then the
    environment-drop step last."""
    out = []
    if isinstance(t, Ref) and t.i == 0 and env:
        inner = entry_term(env[-1])
        if inner is not None:
            out.append(Closure(env[:-1], inner))
    if isinstance(t, FLATS):
        left, right = parts(t)
        out.append(Closure(env, left))
        out.append(Closure(env, right))
    elif isinstance(t, PAIRS):
        left, right = parts(t)
        out.append(Closure(env, left))
        out.append(Closure(env + (pair_entry(t),), right))
    if env and not free_in(t, 0):
        out.append(Closure(env[:-1], lower(t)))
    return out
