"""Linear wheel forms over prime (and pairwise coprime) moduli.

A form with period P carries one coefficient per residue variable plus a
constant, and its value at (t, h) is t*P + sum(A_j * h_j) + C. Two
constructions produce the same value set, which is exactly the integers
divisible by no basis modulus:

* the raw form, assembled from unit-equation solutions, whose values
  satisfy value = -h_j (mod p_j), and
* the canonical form, built from CRT idempotents, whose values satisfy
  value = +h_j (mod p_j); its constant is always half the period.

canonicalize() maps the first onto the second through the substitution
h_j -> p_j - h_j, and the result does not depend on which unit-equation
solution the raw form was built from. All form types are frozen
dataclasses and every operation is pure, so concurrent use is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .diophantine import nth_solution, solve_unit

__all__ = [
    "PrimeBasis",
    "RawWheelForm",
    "CanonicalWheelForm",
    "CoprimeWheelForm",
    "build_raw",
    "build_canonical",
    "canonicalize",
    "evaluate",
    "evaluate_raw",
    "decompose",
    "build_coprime_wheel",
    "form_to_json",
    "form_from_json",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class PrimeBasis:
    """The first r primes, in order. Construction re-proves each by trial division."""

    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "primes", tuple(int(p) for p in self.primes))
        if not self.primes:
            raise ValueError("a basis needs at least one prime")
        expect = 2
        for p in self.primes:
            while not _is_prime(expect):
                expect += 1
            if p != expect:
                raise ValueError(
                    f"basis must be the first primes in order; expected {expect}, got {p}"
                )
            expect += 1

    @classmethod
    def first(cls, r: int) -> "PrimeBasis":
        """Basis of the first r primes."""
        if r < 1:
            raise ValueError("r must be at least 1")
        primes = []
        n = 2
        while len(primes) < r:
            if _is_prime(n):
                primes.append(n)
            n += 1
        return cls(tuple(primes))

    @property
    def r(self) -> int:
        return len(self.primes)

    @cached_property
    def primorial(self) -> int:
        return math.prod(self.primes)


@dataclass(frozen=True)
class RawWheelForm:
    """A wheel form as first assembled: coefficients B_j, constant -1.

    B_r = p_r*x'_r - 1 and, going down, B_j = (p_j*x'_j - 1) * prod(p_q*x'_q
    for q > j), where each x'_j is a stored solution of the unit equation
    p_j*x - (p_1*...*p_{j-1})*y = 1. Values satisfy value = -h_j (mod p_j).
    Construction re-derives the coefficients from the stored solutions, so
    an inconsistent instance cannot exist.
    """

    basis: PrimeBasis
    solutions: tuple[tuple[int, int], ...]  # (x'_j, t'_j) for j = 2..r
    coeffs: tuple[int, ...]  # B_j for j = 2..r
    constant: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "solutions", tuple((int(x), int(y)) for x, y in self.solutions)
        )
        object.__setattr__(self, "coeffs", tuple(int(b) for b in self.coeffs))
        r = self.basis.r
        if r < 2:
            raise ValueError("raw forms need at least two basis primes")
        if len(self.solutions) != r - 1 or len(self.coeffs) != r - 1:
            raise ValueError("need one solution and one coefficient per index 2..r")
        if self.constant != -1:
            raise ValueError("raw forms carry the constant -1")
        primes = self.basis.primes
        lead = 1
        for j in range(2, r + 1):
            x, y = self.solutions[j - 2]
            lead *= primes[j - 2]
            if primes[j - 1] * x - lead * y != 1:
                raise ValueError(f"stored solution for index {j} fails its unit equation")
        tail = 1
        for j in range(r, 1, -1):
            x, _ = self.solutions[j - 2]
            if self.coeffs[j - 2] != (primes[j - 1] * x - 1) * tail:
                raise ValueError(f"coefficient for index {j} inconsistent with solutions")
            tail *= primes[j - 1] * x

    @property
    def period(self) -> int:
        return self.basis.primorial

    def coeff(self, j: int) -> int:
        """B_j for 2 <= j <= r."""
        return self.coeffs[j - 2]

    def representative(self, j: int) -> tuple[int, int]:
        """The stored (x'_j, t'_j) pair."""
        return self.solutions[j - 2]


@dataclass(frozen=True)
class CanonicalWheelForm:
    """The reduced wheel form: CRT-idempotent coefficients, constant P/2.

    Each A_j is the unique value in (0, P) with A_j = 1 (mod p_j) and
    A_j = 0 (mod p_i) for i != j; values of the form satisfy
    value = +h_j (mod p_j). Validated on construction.
    """

    basis: PrimeBasis
    coeffs: tuple[int, ...]  # A_j for j = 2..r
    constant: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        primes = self.basis.primes
        period = self.basis.primorial
        if len(self.coeffs) != self.basis.r - 1:
            raise ValueError("need one coefficient per index 2..r")
        if self.constant != period // 2:
            raise ValueError("canonical constant must be half the period")
        for j, a in zip(range(2, self.basis.r + 1), self.coeffs):
            if not 0 < a < period:
                raise ValueError(f"coefficient for h{j} outside (0, {period})")
            for i, p in enumerate(primes, start=1):
                if a % p != (1 if i == j else 0):
                    raise ValueError(f"coefficient for h{j} is not idempotent mod {p}")

    @property
    def r(self) -> int:
        return self.basis.r

    @property
    def period(self) -> int:
        return self.basis.primorial

    @property
    def divisors(self) -> tuple[int, ...]:
        """Moduli that never divide a value of the form."""
        return self.basis.primes

    def coeff(self, j: int) -> int:
        """A_j for 2 <= j <= r."""
        return self.coeffs[j - 2]

    @property
    def coeff_map(self) -> dict[int, int]:
        return {j: a for j, a in zip(range(2, self.r + 1), self.coeffs)}

    def residue_axes(self) -> tuple[tuple[int, int, int], ...]:
        """(index, modulus, coefficient) per residue variable, ascending index."""
        primes = self.basis.primes
        return tuple(
            (j, primes[j - 1], a) for j, a in zip(range(2, self.r + 1), self.coeffs)
        )


@dataclass(frozen=True)
class CoprimeWheelForm:
    """Idempotent wheel form over arbitrary pairwise coprime moduli.

    With pinned_h1 set, the idempotent of the first modulus is folded into
    the constant and the value set is the slice = h1 (mod moduli[0]);
    with pinned_h1 None the first residue stays a free variable and the
    value set is every integer divisible by none of the moduli.
    """

    moduli: tuple[int, ...]
    free_indices: tuple[int, ...]  # 1-based positions carrying a residue variable
    coeffs: tuple[int, ...]  # parallel to free_indices
    constant: int
    pinned_h1: int | None

    def __post_init__(self) -> None:
        object.__setattr__(self, "moduli", tuple(int(q) for q in self.moduli))
        object.__setattr__(self, "free_indices", tuple(int(j) for j in self.free_indices))
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if not self.moduli:
            raise ValueError("need at least one modulus")
        period = self.period
        expected_free = (
            tuple(range(1, len(self.moduli) + 1))
            if self.pinned_h1 is None
            else tuple(range(2, len(self.moduli) + 1))
        )
        if self.free_indices != expected_free:
            raise ValueError("free indices inconsistent with the pinned residue")
        if len(self.coeffs) != len(self.free_indices):
            raise ValueError("need one coefficient per free index")
        for j, a in zip(self.free_indices, self.coeffs):
            if not 0 < a < period:
                raise ValueError(f"coefficient for h{j} outside (0, {period})")
            for i, q in enumerate(self.moduli, start=1):
                if a % q != (1 if i == j else 0):
                    raise ValueError(f"coefficient for h{j} is not idempotent mod {q}")
        if self.pinned_h1 is None:
            if self.constant != 0:
                raise ValueError("a fully free form has constant 0")
        else:
            q1 = self.moduli[0]
            if not 1 <= self.pinned_h1 < q1:
                raise ValueError(f"pinned residue must lie in 1..{q1 - 1}")
            if not 0 <= self.constant < period:
                raise ValueError("constant outside [0, period)")
            for i, q in enumerate(self.moduli, start=1):
                want = self.pinned_h1 % q if i == 1 else 0
                if self.constant % q != want:
                    raise ValueError(f"constant inconsistent with pinned residue mod {q}")

    @cached_property
    def period(self) -> int:
        return math.prod(self.moduli)

    @property
    def divisors(self) -> tuple[int, ...]:
        return self.moduli

    def coeff(self, j: int) -> int:
        return self.coeffs[self.free_indices.index(j)]

    def residue_axes(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            (j, self.moduli[j - 1], a) for j, a in zip(self.free_indices, self.coeffs)
        )


def build_raw(basis: PrimeBasis, representatives: int | Mapping[int, int] = 0) -> RawWheelForm:
    """Assemble the raw form for a basis of r >= 3 primes.

    `representatives` picks which member of each unit-equation solution
    family to use: a single index applied everywhere, or a mapping
    index -> family member. The default 0 is the least-positive solution.
    Smaller bases have fixed closed forms; use build_canonical for those.
    """
    if basis.r < 3:
        raise ValueError("closed forms cover r < 3; use build_canonical")
    picks = {}
    for j in range(2, basis.r + 1):
        if isinstance(representatives, Mapping):
            k = representatives.get(j, 0)
        else:
            k = representatives
        picks[j] = nth_solution(solve_unit(j, basis), k)
    return _raw_from_solutions(basis, picks)


def _raw_from_solutions(basis: PrimeBasis, picks: dict[int, tuple[int, int]]) -> RawWheelForm:
    primes = basis.primes
    coeffs = {}
    tail = 1
    for j in range(basis.r, 1, -1):
        x = picks[j][0]
        coeffs[j] = (primes[j - 1] * x - 1) * tail
        tail *= primes[j - 1] * x
    return RawWheelForm(
        basis=basis,
        solutions=tuple(picks[j] for j in range(2, basis.r + 1)),
        coeffs=tuple(coeffs[j] for j in range(2, basis.r + 1)),
        constant=-1,
    )


def build_canonical(basis: PrimeBasis) -> CanonicalWheelForm:
    """The canonical form for any r >= 1: A_j = (P/p_j) * ((P/p_j)^-1 mod p_j), C = P/2.

    For r = 1 there are no residue variables and the form is 2t + 1.
    """
    period = basis.primorial
    coeffs = []
    for p in basis.primes[1:]:
        m = period // p
        coeffs.append(m * pow(m, -1, p))
    return CanonicalWheelForm(basis=basis, coeffs=tuple(coeffs), constant=period // 2)


def canonicalize(raw: RawWheelForm) -> CanonicalWheelForm:
    """Reduce a raw form to the canonical one.

    The substitution h_j -> p_j - h_j turns value = -h_j into value = +h_j
    (mod p_j) and gives A_j = (-B_j) mod P and
    C = (sum(B_j * (p_j - 1)) - 1) mod P. Every choice of unit-equation
    representative lands on the same canonical form.
    """
    period = raw.period
    primes = raw.basis.primes
    coeffs = tuple((-b) % period for b in raw.coeffs)
    constant = (
        sum(b * (p - 1) for b, p in zip(raw.coeffs, primes[1:])) + raw.constant
    ) % period
    return CanonicalWheelForm(basis=raw.basis, coeffs=coeffs, constant=constant)


def _check_assignment(axes, h: Mapping[int, int]) -> None:
    expected = tuple(j for j, _, _ in axes)
    if tuple(sorted(h)) != expected:
        raise ValueError(f"assignment must cover exactly indices {expected}")
    for j, modulus, _ in axes:
        if not 1 <= h[j] < modulus:
            raise ValueError(f"h{j} = {h[j]} outside 1..{modulus - 1}")


def evaluate(form, t: int, h: Mapping[int, int]) -> int:
    """Value of a canonical or coprime form at (t, h).

    `h` maps each free index j to a residue in 1..modulus_j - 1.
    """
    axes = form.residue_axes()
    _check_assignment(axes, h)
    return t * form.period + sum(a * h[j] for j, _, a in axes) + form.constant


def evaluate_raw(raw: RawWheelForm, t: int, h: Mapping[int, int]) -> int:
    """Value of a raw form at (t, h): t*P + sum(B_j * (h_j - 1)) - 1."""
    primes = raw.basis.primes
    axes = tuple(
        (j, primes[j - 1], b) for j, b in zip(range(2, raw.basis.r + 1), raw.coeffs)
    )
    _check_assignment(axes, h)
    return t * raw.period + sum(b * (h[j] - 1) for j, _, b in axes) + raw.constant


def decompose(form, z: int) -> tuple[int, dict[int, int]]:
    """Recover the unique (t, h) with evaluate(form, t, h) == z.

    Rejects z divisible by any basis modulus (naming the offender) and,
    for a pinned coprime form, z outside the pinned residue slice.
    """
    for q in form.divisors:
        if z % q == 0:
            raise ValueError(f"{z} is divisible by {q}, so it is not a value of this form")
    pinned = getattr(form, "pinned_h1", None)
    if pinned is not None and z % form.moduli[0] != pinned:
        raise ValueError(
            f"{z} = {z % form.moduli[0]} (mod {form.moduli[0]}) but the form pins h1 = {pinned}"
        )
    axes = form.residue_axes()
    h = {j: z % modulus for j, modulus, _ in axes}
    body = z - form.constant - sum(a * h[j] for j, _, a in axes)
    t, rem = divmod(body, form.period)
    assert rem == 0, "idempotent congruences guarantee exact division"
    return t, h


def build_coprime_wheel(moduli: Iterable[int], h1: int | None = None) -> CoprimeWheelForm:
    """Idempotent form whose values are the integers divisible by none of `moduli`.

    The moduli must be pairwise coprime and at least 2, but need not be
    prime. With h1 None the first residue stays free; passing h1 pins it,
    folding its idempotent into the constant so the value set becomes the
    slice = h1 (mod moduli[0]). On the first r primes with h1 = 1 this
    reproduces the canonical prime form coefficient for coefficient.
    """
    mods = tuple(int(q) for q in moduli)
    if not mods:
        raise ValueError("need at least one modulus")
    if any(q < 2 for q in mods):
        raise ValueError("every modulus must be at least 2")
    for i in range(len(mods)):
        for j in range(i + 1, len(mods)):
            g = math.gcd(mods[i], mods[j])
            if g > 1:
                raise ValueError(
                    f"moduli {mods[i]} and {mods[j]} are not coprime (gcd {g})"
                )
    period = math.prod(mods)
    idems = [(period // q) * pow(period // q, -1, q) for q in mods]
    if h1 is None:
        return CoprimeWheelForm(
            moduli=mods,
            free_indices=tuple(range(1, len(mods) + 1)),
            coeffs=tuple(idems),
            constant=0,
            pinned_h1=None,
        )
    if not 1 <= h1 < mods[0]:
        raise ValueError(f"h1 must lie in 1..{mods[0] - 1}, got {h1}")
    return CoprimeWheelForm(
        moduli=mods,
        free_indices=tuple(range(2, len(mods) + 1)),
        coeffs=tuple(idems[1:]),
        constant=(idems[0] * h1) % period,
        pinned_h1=h1,
    )


def form_to_json(form) -> dict:
    """Stable JSON shape for any form type; integers as decimal strings."""
    if isinstance(form, CanonicalWheelForm):
        return {
            "r": form.r,
            "primorial": str(form.period),
            "coeffs": {str(j): str(a) for j, a in form.coeff_map.items()},
            "constant": str(form.constant),
            "convention": "plus-h",
        }
    if isinstance(form, RawWheelForm):
        return {
            "r": form.basis.r,
            "primorial": str(form.period),
            "coeffs": {
                str(j): str(b)
                for j, b in zip(range(2, form.basis.r + 1), form.coeffs)
            },
            "constant": str(form.constant),
            "convention": "minus-h",
            "representatives": {
                str(j): [str(x), str(y)]
                for j, (x, y) in zip(range(2, form.basis.r + 1), form.solutions)
            },
        }
    if isinstance(form, CoprimeWheelForm):
        return {
            "moduli": [str(q) for q in form.moduli],
            "period": str(form.period),
            "coeffs": {str(j): str(a) for j, a in zip(form.free_indices, form.coeffs)},
            "constant": str(form.constant),
            "pinned_h1": form.pinned_h1,
            "convention": "plus-h",
        }
    raise TypeError(f"not a wheel form: {type(form).__name__}")


def form_from_json(data: Mapping) -> RawWheelForm | CanonicalWheelForm | CoprimeWheelForm:
    """Inverse of form_to_json; reconstruction re-runs all construction checks."""
    if "moduli" in data:
        mods = tuple(int(q) for q in data["moduli"])
        pinned = data.get("pinned_h1")
        free = (
            tuple(range(1, len(mods) + 1))
            if pinned is None
            else tuple(range(2, len(mods) + 1))
        )
        return CoprimeWheelForm(
            moduli=mods,
            free_indices=free,
            coeffs=tuple(int(data["coeffs"][str(j)]) for j in free),
            constant=int(data["constant"]),
            pinned_h1=None if pinned is None else int(pinned),
        )
    basis = PrimeBasis.first(int(data["r"]))
    indices = range(2, basis.r + 1)
    coeffs = tuple(int(data["coeffs"][str(j)]) for j in indices)
    if data.get("convention") == "minus-h":
        return RawWheelForm(
            basis=basis,
            solutions=tuple(
                (int(data["representatives"][str(j)][0]), int(data["representatives"][str(j)][1]))
                for j in indices
            ),
            coeffs=coeffs,
            constant=int(data["constant"]),
        )
    return CanonicalWheelForm(basis=basis, coeffs=coeffs, constant=int(data["constant"]))
