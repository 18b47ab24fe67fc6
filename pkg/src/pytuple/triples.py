"""Pythagorean triples with a given leg, enumerated by the hypotenuse gap.

For a leg ``a`` and any other triple ``(a, b, c)`` write ``delta = c - b``.
Then ``a**2 = delta * (2*b + delta)``, so ``delta`` divides ``a**2``, is
smaller than ``a``, and has the same parity as ``a**2 // delta``.  Every such
divisor gives exactly one triple, which makes the enumeration complete.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import product

from .errors import DomainError, InvalidDelta, OracleCapExceeded, show
from .numeric import divisors_below, factorize, gcd_all, is_perfect_square

__all__ = [
    "ClassFilter",
    "Kind",
    "ORACLE_CAP",
    "Triple",
    "TripleForecast",
    "all_triples",
    "euclid_generate",
    "forecast_counts",
    "oracle_triples",
    "predict_primitive_deltas",
    "triple_from_delta",
    "valid_deltas",
]

ORACLE_CAP = 2000


class Kind(str, enum.Enum):
    PRIMITIVE = "primitive"
    NON_PRIMITIVE = "non-primitive"


class ClassFilter(str, enum.Enum):
    ALL = "all"
    PRIMITIVE = "primitive"
    NON_PRIMITIVE = "non-primitive"

    def admits(self, kind: Kind) -> bool:
        return self is ClassFilter.ALL or self.value == kind.value


def classify(values) -> Kind:
    return Kind.PRIMITIVE if gcd_all(values) == 1 else Kind.NON_PRIMITIVE


@dataclass(frozen=True)
class Triple:
    a: int
    b: int
    c: int
    delta: int
    kind: Kind

    @property
    def primitive(self) -> bool:
        return self.kind is Kind.PRIMITIVE

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def check(self) -> bool:
        """Recompute every invariant from scratch."""
        return (
            self.a * self.a + self.b * self.b == self.c * self.c
            and self.c == self.b + self.delta
            and self.b >= 1
            and 1 <= self.delta < self.a
            and self.kind is classify((self.a, self.b, self.c))
        )


@dataclass(frozen=True)
class TripleForecast:
    leg: int
    total: int
    primitive: int
    non_primitive: int
    primitive_deltas: frozenset[int]


def _check_leg(a):
    if isinstance(a, bool) or not isinstance(a, int) or a < 1:
        raise DomainError(f"leg must be a positive integer, got {a!r}")


def valid_deltas(a: int) -> list[int]:
    """Every admissible gap ``c - b`` for leg ``a``, ascending."""
    _check_leg(a)
    if a < 3:
        return []
    return divisors_below(factorize(a) ** 2, a, "same-parity-as-cofactor")


def triple_from_delta(a: int, delta: int) -> Triple:
    _check_leg(a)
    square = a * a
    if delta < 1:
        raise InvalidDelta(delta, "not-positive")
    if square % delta:
        raise InvalidDelta(delta, "not-divisor", f"{show(delta)} does not divide {show(a)}^2")
    if delta >= a:
        raise InvalidDelta(delta, "too-large", f"need delta < {show(a)}")
    if (square // delta - delta) % 2:
        raise InvalidDelta(delta, "parity", "delta and its cofactor differ in parity")
    b = (square - delta * delta) // (2 * delta)
    c = b + delta
    return Triple(a, b, c, delta, classify((a, b, c)))


def all_triples(a: int, filter: ClassFilter | str = ClassFilter.ALL) -> list[Triple]:
    """Every triple ``(a, b, c)`` with the given leg, ascending by delta."""
    filter = ClassFilter(filter)
    out = []
    for delta in valid_deltas(a):
        t = triple_from_delta(a, delta)
        if filter.admits(t.kind):
            out.append(t)
    return out


def predict_primitive_deltas(a: int) -> set[int]:
    """Gaps that give primitive triples, read off the factorization of ``a``.

    With ``a = 2**m * prod(p**s)`` the primitive gaps are
    ``2**r * prod(p**t)`` where each ``t`` is 0 or ``2*s`` and ``r`` is 0 for
    odd ``a``, 1 or ``2*m - 1`` when ``m >= 2``; ``a = 2 (mod 4)`` has none.
    """
    _check_leg(a)
    f = factorize(a)
    m = f.exponent(2)
    if m == 0:
        twos = [1]
    elif m == 1:
        return set()
    else:
        twos = sorted({2, 2 ** (2 * m - 1)})
    choices = [(1, p ** (2 * s)) for p, s in f.factors if p != 2]
    out = set()
    for two in twos:
        for picks in product(*choices):
            delta = two * math.prod(picks)
            if delta < a:
                out.add(delta)
    return out


def forecast_counts(a: int) -> TripleForecast:
    """Count triples for leg ``a`` without computing any ``b`` or ``c``."""
    total = len(valid_deltas(a))
    primitive = predict_primitive_deltas(a)
    return TripleForecast(a, total, len(primitive), total - len(primitive), frozenset(primitive))


def euclid_generate(m: int, n: int) -> Triple:
    """Euclid's triple ``(m*m - n*n, 2*m*n, m*m + n*n)``."""
    if n < 1 or m <= n:
        raise DomainError(f"need m > n >= 1, got m={m}, n={n}")
    a, b, c = m * m - n * n, 2 * m * n, m * m + n * n
    return Triple(a, b, c, c - b, classify((a, b, c)))


def oracle_triples(a: int, cap: int = ORACLE_CAP) -> list[Triple]:
    """Brute-force scan over ``b``; independent of any gap reasoning."""
    _check_leg(a)
    if a > cap:
        raise OracleCapExceeded(f"oracle scan capped at a <= {cap}, got {a}")
    square = a * a
    out = []
    for b in range(1, (square - 1) // 2 + 1):
        ok, c = is_perfect_square(square + b * b)
        if ok:
            out.append(Triple(a, b, c, c - b, classify((a, b, c))))
    out.sort(key=lambda t: t.delta)
    return out
