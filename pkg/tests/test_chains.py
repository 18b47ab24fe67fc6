import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pytuple import chains as C
from pytuple.chains import (
    BranchKind,
    Chain,
    ChainStrategy,
    Mode,
    build_chains,
    classify_chain,
    extend,
    min_delta,
)
from pytuple.errors import DomainError, InvalidDelta, MagnitudeExceeded
from pytuple.triples import triple_from_delta, valid_deltas

BRANCH_ONE = ((15, 36, 760, 289560), 289561)
BRANCH_TWO = ((15, 20, 60, 2112, 2232384), 2232385)
BRANCH_THREE = ((15, 8, 144, 348, 71064), 71065)


def grow(seed, deltas):
    ch = Chain.seed(seed)
    for d in deltas:
        ch = extend(ch, d)
    return ch


def test_extend_first_branch():
    ch = extend(Chain.seed(15), 3)
    assert (ch.legs, ch.hypotenuse) == ((15, 36), 39)
    ch = extend(ch, 1)
    assert (ch.legs, ch.hypotenuse) == ((15, 36, 760), 761)
    ch = extend(ch, 1)
    assert (ch.legs, ch.hypotenuse) == BRANCH_ONE
    assert 15**2 + 36**2 + 760**2 + 289560**2 == 289561**2


def test_extend_third_branch():
    ch = grow(15, [9, 1, 29, 1])
    assert (ch.legs, ch.hypotenuse) == BRANCH_THREE
    assert [t.as_tuple() for t in ch.triples()] == [
        (15, 8, 17), (17, 144, 145), (145, 348, 377), (377, 71064, 71065)
    ]


def test_min_delta_from_three():
    ch = build_chains(3, 2, ChainStrategy(mode=Mode.MIN_DELTA))
    assert len(ch) == 1
    assert (ch[0].legs, ch[0].hypotenuse) == ((3, 4, 12), 13)
    assert 3**2 + 4**2 + 12**2 == 13**2


def test_extend_rejects_invalid_delta():
    with pytest.raises(InvalidDelta):
        extend(Chain.seed(15), 2)


def test_reference_branches_are_reachable():
    depth3 = build_chains(15, 3)
    assert BRANCH_ONE in {(c.legs, c.hypotenuse) for c in depth3}
    depth4 = {(c.legs, c.hypotenuse) for c in build_chains(15, 4)}
    assert BRANCH_TWO in depth4
    assert BRANCH_THREE in depth4


def test_seed_three_depth_one():
    out = build_chains(3, 1)
    assert [(c.legs, c.hypotenuse, c.deltas) for c in out] == [((3, 4), 5, (1,))]


def test_every_chain_balances_and_is_ordered():
    out = build_chains(15, 4)
    assert len(out) == 167
    for c in out:
        assert c.check()
        assert sum(x * x for x in c.legs) == c.hypotenuse**2
        assert c.depth == 4 and not c.truncated
    assert [c.deltas for c in out] == sorted(c.deltas for c in out)


def test_each_step_is_a_triple():
    for c in build_chains(12, 3):
        for t in c.triples():
            assert t == triple_from_delta(t.a, t.delta)


def test_determinism():
    s = ChainStrategy(max_branches=3)
    assert build_chains(60, 3, s) == build_chains(60, 3, s)


def test_max_branches_truncates_and_flags():
    full = build_chains(60, 1)
    assert len(full) == 13
    cut = build_chains(60, 1, ChainStrategy(max_branches=4))
    assert [c.deltas for c in cut] == [(2,), (4,), (6,), (8,)]
    assert all(c.truncated for c in cut)
    deeper = build_chains(60, 2, ChainStrategy(max_branches=4))
    assert all(c.truncated for c in deeper)


def test_magnitude_limit():
    with pytest.raises(MagnitudeExceeded):
        build_chains(15, 3, ChainStrategy(max_magnitude=10**4))
    out = build_chains(15, 3, ChainStrategy(max_magnitude=10**4), raise_on_magnitude=False)
    halted = [c for c in out if c.halted == "magnitude"]
    assert halted and all(c.check() for c in out)
    assert all(c.hypotenuse <= 10**4 for c in out if not c.halted)


def test_primitive_mode_keeps_primitive_triples():
    out = build_chains(15, 3, ChainStrategy(mode="primitive"))
    assert out
    for c in out:
        assert classify_chain(c) is BranchKind.PRIMITIVE
    dead = build_chains(6, 1, ChainStrategy(mode="primitive"))
    assert [c.halted for c in dead] == ["dead-end"]


def test_fixed_delta_list():
    out = build_chains(15, 4, ChainStrategy(mode=Mode.FIXED_DELTA_LIST, deltas=(5, 5, 1, 1)))
    assert [(c.legs, c.hypotenuse) for c in out] == [BRANCH_TWO]
    with pytest.raises(DomainError):
        build_chains(15, 2, ChainStrategy(mode=Mode.FIXED_DELTA_LIST, deltas=(5,)))


def test_classify_examples():
    assert classify_chain(grow(15, [3, 1, 1])) is BranchKind.NON_PRIMITIVE
    assert classify_chain(grow(3, [1])) is BranchKind.PRIMITIVE
    assert classify_chain(grow(3, [1, 1])) is BranchKind.PRIMITIVE
    with pytest.raises(DomainError):
        classify_chain(Chain.seed(3))


def test_bad_arguments():
    with pytest.raises(DomainError):
        build_chains(2, 1)
    with pytest.raises(DomainError):
        build_chains(15, 0)
    with pytest.raises(DomainError):
        ChainStrategy(max_branches=0)


@given(st.integers(min_value=3, max_value=10**40))
def test_min_delta_is_always_valid(h):
    d = min_delta(h)
    sq = h * h
    assert sq % d == 0 and d < h and (sq // d - d) % 2 == 0
    if h < 10**6:
        assert d == valid_deltas(h)[0]


@settings(deadline=None)
@given(st.integers(min_value=3, max_value=10**12), st.integers(min_value=1, max_value=10))
def test_min_delta_chain_needs_no_factoring(seed, depth):
    def refuse(*args, **kwargs):
        raise AssertionError("min-delta mode must not factorize")

    original = C.valid_deltas
    C.valid_deltas = refuse
    try:
        (c,) = build_chains(seed, depth, ChainStrategy(mode="min-delta", max_magnitude=1 << 100_000))
    finally:
        C.valid_deltas = original
    assert c.depth == depth and c.check()


def test_magnitude_error_on_huge_values_is_printable():
    with pytest.raises(MagnitudeExceeded) as err:
        build_chains(553, 12, ChainStrategy(mode="min-delta", max_magnitude=10**50))
    assert "bits" in str(err.value)
