"""Complete a list of legs to a Pythagorean n-tuple.

Given legs ``a_1 .. a_{n-2}`` with ``k = sum(a_i**2)``, a completion is a pair
``(c, d)`` with ``k + c**2 == d**2``.  Writing ``d = c + delta`` gives
``c = (k - delta**2) / (2*delta)``: ``delta`` divides ``k``, ``delta**2 < k``
and ``delta`` matches ``k // delta`` in parity.  Quadruples are two legs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import DomainError, InvalidDelta, OracleCapExceeded, show
from .numeric import divisors_below, factorize, gcd_all, is_perfect_square
from .triples import ClassFilter, Kind, classify

__all__ = [
    "FeasibilityReport",
    "Reason",
    "TUPLE_ORACLE_CAP",
    "TupleSolution",
    "all_completions",
    "complete_tuple",
    "feasibility",
    "oracle_completions",
    "predict_primitive_deltas_tuple",
    "sum_of_squares",
    "valid_deltas_for",
]

TUPLE_ORACLE_CAP = 10**6


class Reason(str, enum.Enum):
    K_CONGRUENT_TWO_MOD_FOUR = "k=2 (mod 4)"


@dataclass(frozen=True)
class TupleSolution:
    legs: tuple[int, ...]
    k: int
    completion: int
    hypotenuse: int
    delta: int
    kind: Kind

    @property
    def primitive(self) -> bool:
        return self.kind is Kind.PRIMITIVE

    def as_tuple(self) -> tuple[int, ...]:
        return (*self.legs, self.completion, self.hypotenuse)

    def check(self) -> bool:
        return (
            self.k == sum(x * x for x in self.legs)
            and self.k + self.completion**2 == self.hypotenuse**2
            and self.hypotenuse == self.completion + self.delta
            and self.delta**2 < self.k
            and self.completion >= 1
            and self.kind is classify(self.as_tuple())
        )


@dataclass(frozen=True)
class FeasibilityReport:
    k: int
    odd_leg_count: int
    feasible: bool
    reason: Reason | None


def _legs(legs: Sequence[int]) -> tuple[int, ...]:
    legs = tuple(legs)
    if not legs:
        raise DomainError("at least one leg is required")
    for x in legs:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"legs must be integers, got {x!r}")
        if x < 1:
            raise DomainError(f"legs must be positive, got {x}")
    return legs


def sum_of_squares(legs: Sequence[int]) -> int:
    return sum(x * x for x in _legs(legs))


def feasibility(legs: Sequence[int]) -> FeasibilityReport:
    """Report whether any completion can exist.

    A sum of squares that is twice an odd number never extends; this
    happens exactly when the number of odd legs is 2 mod 4.
    """
    legs = _legs(legs)
    k = sum(x * x for x in legs)
    odd = sum(x & 1 for x in legs)
    if k % 4 == 2:
        return FeasibilityReport(k, odd, False, Reason.K_CONGRUENT_TWO_MOD_FOUR)
    return FeasibilityReport(k, odd, True, None)


def valid_deltas_for(legs: Sequence[int]) -> list[int]:
    """Admissible gaps ``hypotenuse - completion``, ascending."""
    report = feasibility(legs)
    if not report.feasible:
        return []
    k = report.k
    return divisors_below(factorize(k), math.isqrt(k - 1) + 1, "same-parity-as-cofactor")


def complete_tuple(legs: Sequence[int], delta: int) -> TupleSolution:
    legs = _legs(legs)
    k = sum(x * x for x in legs)
    if delta < 1:
        raise InvalidDelta(delta, "not-positive")
    if k % delta:
        raise InvalidDelta(delta, "not-divisor", f"{show(delta)} does not divide k={show(k)}")
    if delta * delta >= k:
        raise InvalidDelta(delta, "too-large", f"need delta^2 < k={show(k)}")
    if (k // delta - delta) % 2:
        raise InvalidDelta(delta, "parity", "delta and its cofactor differ in parity")
    c = (k - delta * delta) // (2 * delta)
    d = c + delta
    return TupleSolution(legs, k, c, d, delta, classify((*legs, c, d)))


def all_completions(
    legs: Sequence[int], filter: ClassFilter | str = ClassFilter.ALL
) -> list[TupleSolution]:
    """One solution per admissible gap, ascending; empty when infeasible."""
    filter = ClassFilter(filter)
    out = []
    for delta in valid_deltas_for(legs):
        sol = complete_tuple(legs, delta)
        if filter.admits(sol.kind):
            out.append(sol)
    return out


def predict_primitive_deltas_tuple(legs: Sequence[int]) -> set[int]:
    """Gaps giving primitive completions, from the factorization of ``k``.

    An odd prime shared by every leg must appear in the gap with exponent 0
    or its full exponent in ``k``; any other odd prime is free.  For the
    power of two ``2**w`` in ``k``: odd ``k`` takes none; when all legs are
    even only ``2`` and ``2**(w-1)`` work (none if ``w == 2``); when some leg
    is odd every exponent from 1 to ``w - 1`` works.
    """
    legs = _legs(legs)
    report = feasibility(legs)
    if not report.feasible:
        return set()
    k = report.k
    g = gcd_all(legs)
    f = factorize(k)
    w = f.exponent(2)
    if w == 0:
        twos = [1]
    elif g % 2 == 0:
        twos = sorted({2, 2 ** (w - 1)}) if w >= 3 else []
    else:
        twos = [2**r for r in range(1, w)]
    choices = []
    for p, e in f.factors:
        if p == 2:
            continue
        if g % p == 0:
            choices.append((1, p**e))
        else:
            choices.append([p**t for t in range(e + 1)])
    out = set()
    for two in twos:
        for picks in product(*choices):
            delta = two * math.prod(picks)
            if delta * delta < k:
                out.add(delta)
    return out


def oracle_completions(
    legs: Sequence[int], cap: int = TUPLE_ORACLE_CAP
) -> list[TupleSolution]:
    """Brute-force scan over the completion; no gap reasoning involved."""
    legs = _legs(legs)
    k = sum(x * x for x in legs)
    if k > cap:
        raise OracleCapExceeded(f"oracle scan capped at k <= {cap}, got {k}")
    out = []
    for c in range(1, (k - 1) // 2 + 1):
        ok, d = is_perfect_square(k + c * c)
        if ok:
            out.append(TupleSolution(legs, k, c, d, d - c, classify((*legs, c, d))))
    out.sort(key=lambda s: s.delta)
    return out
