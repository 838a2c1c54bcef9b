"""Brute-force ground truth: trial division, divisibility scans, a segmented sieve.

Everything here is deliberately elementary so it can be audited at a
glance, and it shares no machinery with the wheel construction it is used
to check. Scans are guarded by a width budget (default ten million) so a
typo in an interval cannot wedge a test run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .enumeration import IntervalSpec
from .errors import BudgetExceeded

DEFAULT_SCAN_BUDGET = 10_000_000
_SEGMENT = 1 << 20


@dataclass(frozen=True)
class FactorProfile:
    """Trial-division factorization of n: factor count with multiplicity,
    smallest prime factor (0 for n = 1), and the full factor multiset."""

    n: int
    omega: int
    spf: int
    factors: tuple[int, ...]


def factor_profile(n: int) -> FactorProfile:
    if n < 1:
        raise ValueError("n must be a positive integer")
    factors = []
    m = n
    while m % 2 == 0:
        factors.append(2)
        m //= 2
    f = 3
    while f * f <= m:
        while m % f == 0:
            factors.append(f)
            m //= f
        f += 2
    if m > 1:
        factors.append(m)
    return FactorProfile(
        n=n, omega=len(factors), spf=factors[0] if factors else 0, factors=tuple(factors)
    )


def omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity; omega(1) = 0."""
    return factor_profile(n).omega


def spf(n: int) -> int:
    """Smallest prime factor of n >= 2."""
    if n < 2:
        raise ValueError("spf is defined for n >= 2")
    return factor_profile(n).spf


def is_k_almost(n: int, k: int) -> bool:
    """True when n has exactly k prime factors counted with multiplicity."""
    return omega(n) == k


def _moduli_of(basis) -> tuple[int, ...]:
    return tuple(getattr(basis, "primes", basis))


def coprime_scan(interval: IntervalSpec, basis, budget: int | None = None) -> list[int]:
    """Integers in [lo, hi) divisible by no basis modulus, by direct testing.

    `basis` may be a PrimeBasis or any sequence of moduli.
    """
    limit = DEFAULT_SCAN_BUDGET if budget is None else budget
    if interval.width > limit:
        raise BudgetExceeded(required=interval.width, budget=limit, what="coprime scan")
    moduli = _moduli_of(basis)
    return [m for m in range(interval.lo, interval.hi) if all(m % q for q in moduli)]


def rough_sieve(interval: IntervalSpec, basis, budget: int | None = None) -> list[int]:
    """Same set as coprime_scan, but by striking multiples segment-wise.

    This is the conventional competitor the wheel enumeration is
    benchmarked against.
    """
    limit = DEFAULT_SCAN_BUDGET if budget is None else budget
    if interval.width > limit:
        raise BudgetExceeded(required=interval.width, budget=limit, what="rough sieve")
    moduli = _moduli_of(basis)
    out = []
    for seg_lo in range(interval.lo, interval.hi, _SEGMENT):
        seg_hi = min(seg_lo + _SEGMENT, interval.hi)
        flags = bytearray(b"\x01") * (seg_hi - seg_lo)
        for q in moduli:
            start = ((seg_lo + q - 1) // q) * q
            if start < seg_hi:
                flags[start - seg_lo :: q] = bytes(len(range(start, seg_hi, q)))
        out.extend(seg_lo + i for i, flag in enumerate(flags) if flag)
    return out


def _simple_sieve(limit: int) -> list[int]:
    """Primes <= limit by plain Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(flags) if flag]


def primes_in(interval: IntervalSpec, budget: int | None = None) -> list[int]:
    """Exact primes in [lo, hi) by a segmented sieve of Eratosthenes."""
    limit = DEFAULT_SCAN_BUDGET if budget is None else budget
    if interval.hi > limit:
        raise BudgetExceeded(required=interval.hi, budget=limit, what="prime sieve")
    lo, hi = max(interval.lo, 2), interval.hi
    if lo >= hi:
        return []
    base = _simple_sieve(math.isqrt(hi - 1))
    out = []
    for seg_lo in range(lo, hi, _SEGMENT):
        seg_hi = min(seg_lo + _SEGMENT, hi)
        flags = bytearray(b"\x01") * (seg_hi - seg_lo)
        for p in base:
            start = max(p * p, ((seg_lo + p - 1) // p) * p)
            if start < seg_hi:
                flags[start - seg_lo :: p] = bytes(len(range(start, seg_hi, p)))
        out.extend(seg_lo + i for i, flag in enumerate(flags) if flag)
    return out
