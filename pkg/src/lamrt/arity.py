"""Arity inference: the simple functional skeleton of a term.

Arities form the free algebra over a single atom; a term either has exactly
one arity or none, so inference is a total function returning an optional
result rather than a relation. References into Void entries and references
escaping the environment have no arity (there is no rule to give them one).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .terms import (
    Abbr,
    Abst,
    Appl,
    Cast,
    Decl,
    Defn,
    Env,
    Ref,
    Sort,
    Term,
    resolve,
)


@dataclass(frozen=True)
class Atom:
    pass


@dataclass(frozen=True)
class Fun:
    src: "Arity"
    dst: "Arity"


ATOM = Atom()
Arity = Union[Atom, Fun]


def infer_arity(env: Env, t: Term) -> Optional[Arity]:
    if isinstance(t, Sort):
        return ATOM
    if isinstance(t, Ref):
        e = resolve(env, t.i)
        if e is None:
            return None
        prefix = env[: len(env) - 1 - t.i]
        if isinstance(e, Decl):
            return infer_arity(prefix, e.ty)
        if isinstance(e, Defn):
            return infer_arity(prefix, e.body)
        return None  # Void
    if isinstance(t, Abst):
        src = infer_arity(env, t.ty)
        if src is None:
            return None
        dst = infer_arity(env + (Decl(t.ty),), t.body)
        if dst is None:
            return None
        return Fun(src, dst)
    if isinstance(t, Abbr):
        if infer_arity(env, t.defn) is None:
            return None
        return infer_arity(env + (Defn(t.defn),), t.body)
    if isinstance(t, Appl):
        src = infer_arity(env, t.arg)
        fun = infer_arity(env, t.fun)
        if src is None or not isinstance(fun, Fun) or fun.src != src:
            return None
        return fun.dst
    # Cast: both components must agree
    ty = infer_arity(env, t.ty)
    body = infer_arity(env, t.body)
    if ty is None or body is None or ty != body:
        return None
    return body


def format_arity(a: Arity) -> str:
    if isinstance(a, Atom):
        return "*"
    return f"({format_arity(a.src)}->{format_arity(a.dst)})"
