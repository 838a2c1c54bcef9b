import math
import random

import pytest

from primewheel.enumeration import (
    MAX_BLOCK_RESIDUES,
    BlockCount,
    IntervalSpec,
    count_block,
    count_interval,
    enumerate_interval,
    sorted_block_residues,
)
from primewheel.errors import BudgetExceeded
from primewheel.wheel import PrimeBasis, build_canonical, build_coprime_wheel


def test_interval_spec_validation():
    spec = IntervalSpec(7, 49)
    assert spec.width == 42
    with pytest.raises(ValueError):
        IntervalSpec(5, 5)
    with pytest.raises(ValueError):
        IntervalSpec(9, 3)
    with pytest.raises(ValueError):
        IntervalSpec(-1, 3)


def test_enumerate_frozen_windows():
    form3 = build_canonical(PrimeBasis.first(3))
    assert list(enumerate_interval(form3, IntervalSpec(7, 49))) == [
        7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    ]
    assert list(enumerate_interval(form3, IntervalSpec(1, 31))) == [
        1, 7, 11, 13, 17, 19, 23, 29,
    ]
    form2 = build_canonical(PrimeBasis.first(2))
    assert list(enumerate_interval(form2, IntervalSpec(25, 35))) == [25, 29, 31]


def test_enumerate_output_is_sorted_and_coprime():
    rng = random.Random(577215)
    for _ in range(200):
        r = rng.randrange(1, 7)
        basis = PrimeBasis.first(r)
        form = build_canonical(basis)
        lo = rng.randrange(0, 10**7)
        hi = lo + rng.randrange(1, 5000)
        values = list(enumerate_interval(form, IntervalSpec(lo, hi)))
        assert values == sorted(values)
        for z in values:
            assert lo <= z < hi
            assert all(z % p for p in basis.primes)


def test_count_block_frozen():
    assert count_block(PrimeBasis.first(3)) == BlockCount(phi=8, interior=7)
    assert count_block(PrimeBasis.first(1)) == BlockCount(phi=1, interior=0)
    assert count_block(PrimeBasis.first(6)) == BlockCount(phi=5760, interior=5759)
    assert count_block([2, 3, 5, 7]) == BlockCount(phi=48, interior=47)


def test_count_block_against_full_scan():
    for r in range(1, 6):
        basis = PrimeBasis.first(r)
        period = basis.primorial
        phi = sum(
            1 for n in range(period) if all(math.gcd(n, p) == 1 for p in basis.primes)
        )
        assert count_block(basis).phi == phi


def test_count_interval_frozen():
    form = build_canonical(PrimeBasis.first(3))
    assert count_interval(form, IntervalSpec(0, 30)) == 8
    assert count_interval(form, IntervalSpec(1, 31)) == 8
    assert count_interval(form, IntervalSpec(29, 31)) == 1


def test_count_matches_stream_random():
    """count_interval and the generator agree on random windows."""
    rng = random.Random(1618033)
    for _ in range(1000):
        r = rng.randrange(2, 9)
        form = build_canonical(PrimeBasis.first(r))
        lo = rng.randrange(0, 10**9)
        hi = lo + rng.randrange(1, 3000)
        spec = IntervalSpec(lo, hi)
        assert count_interval(form, spec) == sum(1 for _ in enumerate_interval(form, spec))


def test_block_translation_invariance():
    rng = random.Random(41421)
    form = build_canonical(PrimeBasis.first(5))
    period = form.period
    base = count_interval(form, IntervalSpec(0, period))
    for _ in range(100):
        start = rng.randrange(0, 10**12)
        assert count_interval(form, IntervalSpec(start, start + period)) == base


def test_residue_table_is_sorted_and_distinct():
    for r in range(1, 9):
        form = build_canonical(PrimeBasis.first(r))
        table = sorted_block_residues(form)
        assert len(table) == count_block(PrimeBasis.first(r)).phi
        assert list(table) == sorted(set(table))
        assert all(0 <= v < form.period for v in table)


def test_budget_refuses_oversized_tables():
    form = build_canonical(PrimeBasis.first(9))
    with pytest.raises(BudgetExceeded) as info:
        sorted_block_residues(form)
    err = info.value
    assert err.required == 36495360
    assert err.budget == MAX_BLOCK_RESIDUES
    assert str(err.required) in str(err)


def test_enumerate_agrees_with_direct_scan():
    for r in range(2, 7):
        basis = PrimeBasis.first(r)
        form = build_canonical(basis)
        spec = IntervalSpec(1, 2 * basis.primorial + 11)
        mine = list(enumerate_interval(form, spec))
        naive = [
            n
            for n in range(spec.lo, spec.hi)
            if all(math.gcd(n, p) == 1 for p in basis.primes)
        ]
        assert mine == naive, f"r={r}"


def test_enumerate_wide_window_r6():
    basis = PrimeBasis.first(6)
    form = build_canonical(basis)
    spec = IntervalSpec(10**6, 2 * 10**6)
    values = list(enumerate_interval(form, spec))
    assert len(values) == count_interval(form, spec)
    assert len(values) == 191809
    assert values[0] == 1000001
    assert values[-1] == 1999999
    step = basis.primorial
    assert count_interval(form, spec) == (10**6 // step) * 5760 + count_interval(
        form, IntervalSpec(10**6, 10**6 + (10**6 % step))
    )


def test_enumeration_works_for_coprime_wheels():
    wheel = build_coprime_wheel([4, 9, 5, 7], h1=None)
    spec = IntervalSpec(0, wheel.period)
    values = list(enumerate_interval(wheel, spec))
    assert len(values) == 576
    naive = [
        n
        for n in range(wheel.period)
        if n % 4 and n % 9 and n % 5 and n % 7
    ]
    assert values == naive
