"""Differential checks of the gap enumeration against independent routes.

Each ``check_*`` function sweeps a range of inputs and returns a list of
:class:`Discrepancy`; an empty list means every input agreed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .numeric import factorize, gcd_all, valuation
from .triples import (
    Kind,
    all_triples,
    euclid_generate,
    forecast_counts,
    oracle_triples,
    predict_primitive_deltas,
    valid_deltas,
)
from .tuples import (
    TUPLE_ORACLE_CAP,
    all_completions,
    feasibility,
    oracle_completions,
    predict_primitive_deltas_tuple,
)

__all__ = [
    "Discrepancy",
    "MODES",
    "check_counts",
    "check_euclid_coverage",
    "check_predictor",
    "check_triples_oracle",
    "check_tuple_predictor",
    "check_tuples_oracle",
    "expected_delta_count",
    "tuple_corpus",
]

MODES = ("triples-oracle", "tuples-oracle", "predictor", "euclid-coverage", "counts")


@dataclass(frozen=True)
class Discrepancy:
    check: str
    inputs: tuple
    detail: str
    extra: dict = field(default_factory=dict, compare=False)


def check_triples_oracle(max_leg: int = 300) -> list[Discrepancy]:
    """Gap enumeration versus the brute-force scan over ``b``, legs 1..max_leg."""
    out = []
    for a in range(1, max_leg + 1):
        fast = {(t.b, t.c) for t in all_triples(a)}
        slow = {(t.b, t.c) for t in oracle_triples(a, cap=max(max_leg, 1))}
        if fast != slow:
            out.append(Discrepancy(
                "triples-oracle", (a,),
                f"missing={sorted(slow - fast)} extra={sorted(fast - slow)}",
            ))
    return out


def check_predictor(max_leg: int = 2000) -> list[Discrepancy]:
    """Factorization-only primitive gaps versus gcd of the generated triple."""
    out = []
    for a in range(1, max_leg + 1):
        truth = {t.delta for t in all_triples(a) if gcd_all(t.as_tuple()) == 1}
        predicted = predict_primitive_deltas(a)
        if truth != predicted:
            out.append(Discrepancy(
                "predictor", (a,),
                f"predicted={sorted(predicted)} gcd-truth={sorted(truth)}",
            ))
    return out


def expected_delta_count(a: int) -> int:
    """Closed-form number of admissible gaps for leg ``a``.

    Odd ``a``: ``(tau(a^2) - 1) / 2``.  Even ``a = 2^m u``:
    ``((2m - 1) tau(u^2) - 1) / 2``.
    """
    if a < 3:
        return 0
    m = valuation(a, 2)
    tau_u2 = (factorize(a >> m) ** 2).num_divisors()
    if m == 0:
        return (tau_u2 - 1) // 2
    return ((2 * m - 1) * tau_u2 - 1) // 2


def check_counts(max_leg: int = 2000) -> list[Discrepancy]:
    out = []
    for a in range(1, max_leg + 1):
        listed = len(valid_deltas(a))
        closed = expected_delta_count(a)
        fc = forecast_counts(a)
        if not (listed == closed == fc.total and fc.primitive + fc.non_primitive == fc.total):
            out.append(Discrepancy(
                "counts", (a,),
                f"enumerated={listed} formula={closed} forecast={fc.total}",
            ))
    return out


def check_euclid_coverage(max_m: int = 50, gap_max_m: int = 200) -> list[Discrepancy]:
    """Every primitive Euclid triple shows up under both of its legs.

    Also confirms the gap method yields ``(15, 36, 39)`` while no Euclid pair
    with ``m <= gap_max_m`` produces it in either leg order.
    """
    out = []
    cache: dict[int, set] = {}

    def found(leg):
        if leg not in cache:
            cache[leg] = {(t.b, t.c) for t in all_triples(leg)}
        return cache[leg]

    for m in range(2, max_m + 1):
        for n in range(1, m):
            if (m - n) % 2 == 0 or math.gcd(m, n) != 1:
                continue
            t = euclid_generate(m, n)
            if t.kind is not Kind.PRIMITIVE:
                out.append(Discrepancy("euclid-coverage", (m, n), f"{t.as_tuple()} not primitive"))
            if (t.b, t.c) not in found(t.a):
                out.append(Discrepancy("euclid-coverage", (m, n), f"{t.as_tuple()} missing under leg {t.a}"))
            if (t.a, t.c) not in found(t.b):
                out.append(Discrepancy("euclid-coverage", (m, n), f"{t.as_tuple()} missing under leg {t.b}"))

    if (36, 39) not in found(15):
        out.append(Discrepancy("euclid-coverage", (15,), "(15, 36, 39) not produced by gap method"))
    target = {15, 36}
    for m in range(2, gap_max_m + 1):
        for n in range(1, m):
            t = euclid_generate(m, n)
            if t.c == 39 and {t.a, t.b} == target:
                out.append(Discrepancy("euclid-coverage", (m, n), "Euclid produced (15, 36, 39)"))
    return out


def tuple_corpus(cases: int = 1000, max_k: int = TUPLE_ORACLE_CAP, seed: int = 20240101) -> list[tuple[int, ...]]:
    """Deterministic pseudo-random leg lists with ``sum(x**2) <= max_k``.

    Mixes unrestricted draws, all-even lists and lists with a common odd
    factor so every branch of the primitivity rule is exercised.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < cases:
        n = rng.randint(1, 8)
        style = rng.random()
        scale = 1
        if style < 0.3:
            scale = 2 ** rng.randint(1, 3)
        elif style < 0.5:
            scale = rng.choice((3, 5, 7, 9, 15))
        limit = math.isqrt(max_k // n) // scale
        if limit < 1:
            continue
        top = rng.choice((limit, max(1, limit // 10), max(1, limit // 100)))
        legs = tuple(scale * rng.randint(1, top) for _ in range(n))
        if sum(x * x for x in legs) <= max_k:
            out.append(legs)
    return out


def check_tuple_predictor(corpus) -> list[Discrepancy]:
    out = []
    for legs in corpus:
        truth = {s.delta for s in all_completions(legs) if s.kind is Kind.PRIMITIVE}
        predicted = predict_primitive_deltas_tuple(legs)
        if truth != predicted:
            out.append(Discrepancy(
                "tuple-predictor", tuple(legs),
                f"predicted={sorted(predicted)} gcd-truth={sorted(truth)}",
            ))
    return out


def check_tuples_oracle(corpus, cap: int = TUPLE_ORACLE_CAP) -> list[Discrepancy]:
    out = []
    for legs in corpus:
        fast = {(s.completion, s.hypotenuse) for s in all_completions(legs)}
        slow = {(s.completion, s.hypotenuse) for s in oracle_completions(legs, cap=cap)}
        if fast != slow:
            out.append(Discrepancy(
                "tuples-oracle", tuple(legs),
                f"missing={sorted(slow - fast)} extra={sorted(fast - slow)}",
            ))
        elif not feasibility(legs).feasible and fast:
            out.append(Discrepancy("tuples-oracle", tuple(legs), "solutions for infeasible k"))
    return out
