"""Sorted streaming and counting of wheel-form values over intervals.

One primorial block contains every residue the form can take; the sorted
table of those residues is computed once per form (and cached), after
which streaming is a merge across blocks and counting is two bisects.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import BudgetExceeded

MAX_BLOCK_RESIDUES = 4_000_000


@dataclass(frozen=True)
class IntervalSpec:
    """Half-open interval [lo, hi) of naturals; must be non-empty."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise ValueError("lo must be a natural number")
        if self.lo >= self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}): lo must be < hi")

    @property
    def width(self) -> int:
        return self.hi - self.lo


class BlockCount(NamedTuple):
    """Residue counts for one period: phi per block, phi - 1 strictly inside the first."""

    phi: int
    interior: int


@lru_cache(maxsize=8)
def sorted_block_residues(form) -> tuple[int, ...]:
    """Every residue of the form's value set in [0, period), ascending.

    Built by walking the admissible residue assignments of the form
    itself, not by scanning; the table size is the product of
    (modulus - 1) over the free variables and is budget-guarded.
    """
    axes = form.residue_axes()
    size = math.prod(m - 1 for _, m, _ in axes)
    if size > MAX_BLOCK_RESIDUES:
        raise BudgetExceeded(required=size, budget=MAX_BLOCK_RESIDUES, what="residue table")
    period = form.period
    residues = [form.constant % period]
    for _, modulus, coeff in axes:
        steps = [(coeff * h) % period for h in range(1, modulus)]
        residues = [(base + step) % period for base in residues for step in steps]
    residues.sort()
    return tuple(residues)


def enumerate_interval(form, interval: IntervalSpec) -> Iterator[int]:
    """Yield exactly the form's values in [lo, hi), in ascending order."""
    period = form.period
    table = sorted_block_residues(form)
    for t in range(interval.lo // period, (interval.hi - 1) // period + 1):
        base = t * period
        start = bisect_left(table, interval.lo - base) if base < interval.lo else 0
        for idx in range(start, len(table)):
            value = base + table[idx]
            if value >= interval.hi:
                return
            yield value


def _values_below(form, limit: int, table: tuple[int, ...]) -> int:
    blocks, rem = divmod(limit, form.period)
    return blocks * len(table) + bisect_left(table, rem)


def count_interval(form, interval: IntervalSpec) -> int:
    """len(list(enumerate_interval(form, interval))), without materializing values."""
    table = sorted_block_residues(form)
    return _values_below(form, interval.hi, table) - _values_below(form, interval.lo, table)


def count_block(basis) -> BlockCount:
    """Value counts for one period of the prime wheel.

    phi = prod(p - 1) values land in any window of one period length;
    the open interval (1, P) misses the value 1 and holds phi - 1.
    """
    phi = math.prod(p - 1 for p in tuple(getattr(basis, "primes", basis)))
    return BlockCount(phi=phi, interior=phi - 1)
