"""Applicability domains: which t-bounds an application may use.

A domain is all of the naturals (Omega), a finite set, or empty. The checker
only ever asks exists_geq: is there a member at least as large as the bound
the weak head machine needed? The order domain_leq compares domains by that
same capability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class FinSet:
    degrees: tuple  # strictly increasing non-negative ints, nonempty

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("empty finite domain; use EMPTY")
        if list(self.degrees) != sorted(set(self.degrees)):
            raise ValueError("degrees must be strictly increasing")
        if self.degrees[0] < 0:
            raise ValueError("degrees must be non-negative")


OMEGA = Omega()
EMPTY = Empty()

ApplicabilityDomain = Union[Omega, Empty, FinSet]


def fin_set(values) -> FinSet:
    return FinSet(tuple(sorted(set(values))))


def member(domain: ApplicabilityDomain, n: int) -> bool:
    if isinstance(domain, Omega):
        return n >= 0
    if isinstance(domain, Empty):
        return False
    return n in domain.degrees


def exists_geq(domain: ApplicabilityDomain, n0: int) -> bool:
    """Is there a member n of the domain with n0 <= n?"""
    if isinstance(domain, Omega):
        return True
    if isinstance(domain, Empty):
        return False
    return n0 <= domain.degrees[-1]


def least_geq(domain: ApplicabilityDomain, n0: int) -> Optional[int]:
    """The least member at least n0, if any."""
    if isinstance(domain, Omega):
        return max(n0, 0)
    if isinstance(domain, Empty):
        return None
    for n in domain.degrees:
        if n >= n0:
            return n
    return None


def domain_leq(a1: ApplicabilityDomain, a2: ApplicabilityDomain) -> bool:
    """True iff every member of a1 has a member of a2 above it. Finite sets
    therefore compare by maximum alone: {1} and {0,1} sit at the same level."""
    if isinstance(a1, Empty):
        return True
    if isinstance(a2, Omega):
        return True
    if isinstance(a1, Omega) or isinstance(a2, Empty):
        return False
    return a1.degrees[-1] <= a2.degrees[-1]


#: The ladder of domains used by well-known systems, weakest first: no
#: applications, plain beta only, one-step typed application, both, anything.
PRESETS = (EMPTY, FinSet((0,)), FinSet((1,)), FinSet((0, 1)), OMEGA)


def parse_domain(text: str) -> ApplicabilityDomain:
    spec = text.strip().lower()
    if spec == "omega":
        return OMEGA
    if spec == "empty":
        return EMPTY
    if spec.startswith("set:"):
        body = spec[len("set:"):]
        try:
            values = [int(part) for part in body.split(",") if part.strip()]
        except ValueError:
            raise ValueError(f"bad domain spec: {text!r}") from None
        if not values or any(v < 0 for v in values):
            raise ValueError(f"bad domain spec: {text!r}")
        return fin_set(values)
    raise ValueError(f"bad domain spec: {text!r}")


def format_domain(domain: ApplicabilityDomain) -> str:
    if isinstance(domain, Omega):
        return "omega"
    if isinstance(domain, Empty):
        return "empty"
    return "set:" + ",".join(str(n) for n in domain.degrees)
