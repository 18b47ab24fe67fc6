"""Grow arbitrarily long Pythagorean tuples from one seed.

Form a triple on the seed, then a triple on its hypotenuse, and so on.  After
``depth`` steps the legs ``seed, a_2, ..., a_{depth+1}`` satisfy
``sum(leg**2) == hypotenuse**2``.  Each admissible gap at each step opens a
separate branch, so the full expansion is a tree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .errors import DomainError, MagnitudeExceeded
from .triples import Kind, Triple, classify, triple_from_delta, valid_deltas

__all__ = [
    "BranchKind",
    "Chain",
    "ChainStrategy",
    "Mode",
    "build_chains",
    "classify_chain",
    "extend",
    "min_delta",
]


class Mode(str, enum.Enum):
    ALL_BRANCHES = "all"
    PRIMITIVE_TRIPLES_ONLY = "primitive"
    MIN_DELTA = "min-delta"
    FIXED_DELTA_LIST = "fixed"


class BranchKind(str, enum.Enum):
    PRIMITIVE = "primitive"
    NON_PRIMITIVE = "non-primitive"


@dataclass(frozen=True)
class ChainStrategy:
    """How many children each node gets and when growth stops.

    ``deltas`` is only read in ``FIXED_DELTA_LIST`` mode and supplies the gap
    for each level in turn.
    """

    mode: Mode = Mode.ALL_BRANCHES
    max_branches: int = 256
    max_magnitude: int = 10**100
    deltas: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.max_branches < 1:
            raise DomainError(f"max_branches must be >= 1, got {self.max_branches}")
        if self.max_magnitude < 1:
            raise DomainError(f"max_magnitude must be >= 1, got {self.max_magnitude}")
        object.__setattr__(self, "deltas", tuple(self.deltas))


@dataclass(frozen=True)
class Chain:
    """Legs ``(seed, a_2, ...)`` whose squares sum to ``hypotenuse**2``.

    ``truncated`` is set when an ancestor had more admissible children than
    the strategy allowed; ``halted`` names why growth stopped early
    (``"magnitude"`` or ``"dead-end"``), or is ``None``.
    """

    legs: tuple[int, ...]
    hypotenuse: int
    deltas: tuple[int, ...] = ()
    truncated: bool = False
    halted: str | None = field(default=None)

    @classmethod
    def seed(cls, a: int) -> Chain:
        if isinstance(a, bool) or not isinstance(a, int) or a < 1:
            raise DomainError(f"seed must be a positive integer, got {a!r}")
        return cls((a,), a)

    @property
    def depth(self) -> int:
        return len(self.deltas)

    def hypotenuses(self) -> list[int]:
        """Running hypotenuses; entry 0 is the seed itself."""
        return [self.legs[0]] + [leg + d for leg, d in zip(self.legs[1:], self.deltas)]

    def triples(self) -> list[Triple]:
        hyps = self.hypotenuses()
        return [
            Triple(hyps[i], self.legs[i + 1], hyps[i + 1], self.deltas[i],
                   classify((hyps[i], self.legs[i + 1], hyps[i + 1])))
            for i in range(self.depth)
        ]

    def check(self) -> bool:
        hyps = self.hypotenuses()
        return (
            len(self.legs) == self.depth + 1
            and hyps[-1] == self.hypotenuse
            and sum(x * x for x in self.legs) == self.hypotenuse**2
        )


def extend(chain: Chain, delta: int) -> Chain:
    """Append the leg of the triple formed on ``chain.hypotenuse`` with ``delta``."""
    t = triple_from_delta(chain.hypotenuse, delta)
    out = Chain(chain.legs + (t.b,), t.c, chain.deltas + (delta,), chain.truncated)
    if not out.check():
        raise ArithmeticError(f"chain identity broken extending {chain} by {delta}")
    return out


def min_delta(h: int) -> int:
    """Smallest admissible gap for hypotenuse ``h >= 3``; needs no factoring."""
    if h < 3:
        raise DomainError(f"no triple has leg {h}")
    return 1 if h % 2 else 2


def _children(h, level, strategy):
    mode = strategy.mode
    if mode is Mode.MIN_DELTA:
        return [min_delta(h)]
    if mode is Mode.FIXED_DELTA_LIST:
        if level >= len(strategy.deltas):
            raise DomainError(f"no fixed delta supplied for level {level + 1}")
        return [strategy.deltas[level]]
    deltas = valid_deltas(h)
    if mode is Mode.PRIMITIVE_TRIPLES_ONLY:
        deltas = [d for d in deltas if triple_from_delta(h, d).kind is Kind.PRIMITIVE]
    return deltas


def build_chains(
    seed: int,
    depth: int,
    strategy: ChainStrategy | None = None,
    raise_on_magnitude: bool = True,
) -> list[Chain]:
    """Expand the branch tree from ``seed`` down ``depth`` levels.

    Branches come back in lexicographic order of their gap sequences.  A node
    with more admissible gaps than ``strategy.max_branches`` keeps the
    smallest ones and marks its descendants truncated.  A hypotenuse above
    ``strategy.max_magnitude`` raises :class:`MagnitudeExceeded`, or with
    ``raise_on_magnitude=False`` ends that branch with ``halted="magnitude"``.
    """
    if strategy is None:
        strategy = ChainStrategy()
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 3:
        raise DomainError(f"seed must be an integer >= 3, got {seed!r}")
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")

    frontier = [Chain.seed(seed)]
    for level in range(depth):
        grown = []
        for chain in frontier:
            if chain.halted:
                grown.append(chain)
                continue
            deltas = _children(chain.hypotenuse, level, strategy)
            if not deltas:
                grown.append(replace(chain, halted="dead-end"))
                continue
            cut = len(deltas) > strategy.max_branches
            for d in deltas[: strategy.max_branches]:
                child = extend(chain, d)
                if cut:
                    child = replace(child, truncated=True)
                if child.hypotenuse > strategy.max_magnitude:
                    if raise_on_magnitude:
                        raise MagnitudeExceeded(
                            f"hypotenuse of {child.hypotenuse.bit_length()} bits exceeds "
                            f"max_magnitude ({strategy.max_magnitude.bit_length()} bits) "
                            f"on branch {child.deltas}"
                        )
                    child = replace(child, halted="magnitude")
                grown.append(child)
        frontier = grown
    return frontier


def classify_chain(chain: Chain) -> BranchKind:
    """Primitive iff every triple formed along the chain is primitive."""
    if chain.depth < 1:
        raise DomainError("a chain needs at least one extension to be classified")
    if all(t.kind is Kind.PRIMITIVE for t in chain.triples()):
        return BranchKind.PRIMITIVE
    return BranchKind.NON_PRIMITIVE
