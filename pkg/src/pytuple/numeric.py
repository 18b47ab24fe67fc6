"""Exact integer helpers: factorization, divisor enumeration, gcd, squares.

All quantities are Python ``int`` (unbounded). Nothing here ever rounds.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import reduce
from itertools import count
from typing import Iterable, Sequence

from .errors import BudgetExceeded, DomainError

__all__ = [
    "DEFAULT_FACTOR_BUDGET",
    "Factorization",
    "default_budget",
    "divisors_below",
    "factorize",
    "gcd_all",
    "is_perfect_square",
    "is_prime",
    "num_divisors",
    "valuation",
]

DEFAULT_FACTOR_BUDGET = 10_000_000
BUDGET_ENV = "PYTUPLE_FACTOR_BUDGET"

_TRIAL_LIMIT = 1000


def _sieve(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit - 1) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = tuple(_sieve(_TRIAL_LIMIT))
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)

# Miller-Rabin with the first 13 primes as bases is exact below this bound.
_MR_EXACT_BOUND = 3317044064679887385961981
_MR_BASES = _SMALL_PRIMES[:13]


def default_budget() -> int:
    """Factorization budget, honouring ``PYTUPLE_FACTOR_BUDGET`` when set."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_FACTOR_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise DomainError(f"{BUDGET_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of ``value`` as ascending ``(prime, exponent)`` pairs."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise DomainError(f"cannot factor {self.value}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise DomainError(f"malformed factor list {self.factors!r}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise DomainError(f"factors {self.factors!r} do not multiply to {self.value}")

    @classmethod
    def from_dict(cls, mapping: dict[int, int]) -> Factorization:
        factors = tuple(sorted((p, e) for p, e in mapping.items() if e))
        return cls(math.prod(p**e for p, e in factors), factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def exponent(self, p: int) -> int:
        return self.as_dict().get(p, 0)

    def __mul__(self, other: Factorization) -> Factorization:
        merged = self.as_dict()
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return Factorization.from_dict(merged)

    def __pow__(self, k: int) -> Factorization:
        if k < 0:
            raise DomainError("negative power of a factorization")
        return Factorization.from_dict({p: e * k for p, e in self.factors})

    def num_divisors(self) -> int:
        return math.prod(e + 1 for _, e in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic Miller-Rabin below 3.3e24, Baillie-PSW above (no known
    counterexample exists).
    """
    if n < 2:
        return False
    if n < _TRIAL_LIMIT:
        return n in _SMALL_PRIME_SET
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return False
    if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
        return True
    if n < _MR_EXACT_BOUND:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def _strong_probable_prime(n, a):
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a, n):
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n):
    # Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if is_perfect_square(n)[0]:
        return False
    for k in count():
        D = (5 + 2 * k) * (-1) ** k
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
    P, Q = 1, (1 - D) // 4

    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    inv2 = pow(2, -1, n)
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


class _Budget:
    __slots__ = ("n", "limit", "used")

    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        self.used = 0

    def spend(self, k=1):
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(self.n, self.limit)


def _brent_split(n, budget):
    """Return a nontrivial factor of the odd composite ``n`` (Brent's rho)."""
    root = math.isqrt(n)
    if root * root == n:
        return root
    for c in count(1):
        y, r, q = 2, 1, 1
        g = 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            budget.spend(r)
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                budget.spend(steps)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Backtrack one step at a time over the last block.
            while True:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                if g > 1:
                    break
        if g != n:
            return g


def factorize(n: int, budget: int | None = None) -> Factorization:
    """Complete prime factorization of ``n``.

    Trial division by primes below 1000, then Brent's rho on what remains.
    ``budget`` caps the total number of rho iterations; when it is spent
    :class:`BudgetExceeded` is raised rather than returning a partial result.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"expected an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    tally = _Budget(n, default_budget() if budget is None else budget)
    found: dict[int, int] = {}
    rest = n
    for p in _SMALL_PRIMES:
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _brent_split(m, tally)
        stack.append(d)
        stack.append(m // d)
    return Factorization.from_dict(found)


def num_divisors(n: int) -> int:
    """Number of positive divisors of ``n``."""
    return factorize(n).num_divisors()


def valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in ``n`` (``n`` nonzero)."""
    if n == 0:
        raise DomainError("valuation of zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def divisors_below(
    f: Factorization, bound: int, parity_rule: str = "any"
) -> list[int]:
    """Ascending divisors ``d`` of ``f.value`` with ``d < bound``.

    With ``parity_rule="same-parity-as-cofactor"`` only divisors with
    ``d`` and ``f.value // d`` of equal parity are kept.
    """
    if parity_rule not in ("any", "same-parity-as-cofactor"):
        raise DomainError(f"unknown parity rule {parity_rule!r}")
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    value = f.value
    out = [1]
    for p, e in f.factors:
        grown = []
        for d in out:
            x = d
            for _ in range(e):
                x *= p
                if x >= bound:
                    break
                grown.append(x)
        out.extend(grown)
    out = [d for d in out if d < bound]
    if parity_rule == "same-parity-as-cofactor":
        out = [d for d in out if (d - value // d) % 2 == 0]
    out.sort()
    return out


def gcd_all(values: Iterable[int]) -> int:
    """Greatest common divisor of every entry."""
    values = list(values)
    if not values:
        raise DomainError("gcd_all needs at least one value")
    g = reduce(math.gcd, values)
    if g == 0:
        raise DomainError("gcd of all-zero input is undefined")
    return g


def is_perfect_square(n: int) -> tuple[bool, int | None]:
    """Return ``(True, root)`` when ``n == root**2``, else ``(False, None)``."""
    if n < 0:
        return False, None
    root = math.isqrt(n)
    if root * root == n:
        return True, root
    return False, None


def sum_of_squares(values: Sequence[int]) -> int:
    return sum(v * v for v in values)
