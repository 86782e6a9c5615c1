"""Valuation towers over Rees data and the semilocal Dedekind ideal model.

Given the Rees integers e_1, ..., e_n of an ideal, adjoining a k-th
root of the distinguished degree-(-1) element produces one valuation
per Rees valuation; its invariants are pure gcd arithmetic in (e_j, k),
and the extended principal ideal is the exponent vector (h_1, ..., h_n)
over the maximal ideals of a semilocal Dedekind domain.  Radicality,
products, radicals, projective equivalence and projective fullness of
such ideals are all decided by exponent arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadKError,
    EquivalenceViolation,
    IndexMismatchError,
    NonPositiveError,
    UnitIdealError,
)
from .numcore import lcm_list
from .puiseux import PuiseuxModel, oracle_ramification


@dataclass(frozen=True)
class ReesData:
    """The multiset of Rees integers of an ideal, in a fixed order."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise NonPositiveError("Rees data must be nonempty")
        if any(e < 1 for e in entries):
            raise NonPositiveError("Rees integers must be >= 1")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def lcm(self) -> int:
        return lcm_list(self.entries)


def rees_data(entries: Iterable[int] | ReesData) -> ReesData:
    return entries if isinstance(entries, ReesData) else ReesData(tuple(entries))


@dataclass(frozen=True)
class ItohValuationRecord:
    """Tower invariants at one valuation for a fixed root order k.

    d = gcd(e, k) is the residue degree, c = k/d the ramification,
    h = e/d the value of the adjoined root (the exponent of the
    extended principal ideal at this valuation); the tower degree is k.
    """

    rees_integer: int
    residue_degree: int
    ramification: int
    u_exponent: int

    @property
    def degree(self) -> int:
        return self.ramification * self.residue_degree


@dataclass(frozen=True)
class ItohReport:
    k: int
    per_valuation: tuple[ItohValuationRecord, ...]
    is_radical: bool
    least_radical_k: int

    @property
    def u_exponents(self) -> tuple[int, ...]:
        return tuple(r.u_exponent for r in self.per_valuation)


@dataclass(frozen=True)
class SemilocalIdeal:
    """A nonzero ideal of a semilocal Dedekind domain as an exponent vector.

    Entry i is the multiplicity of the i-th maximal ideal; the all-zero
    vector is the unit ideal.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise NonPositiveError("exponent vector must be nonempty")
        if any(e < 0 for e in exps):
            raise NonPositiveError("exponents must be >= 0")
        object.__setattr__(self, "exponents", exps)

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)


def itoh_structure(rees: ReesData | Sequence[int], k: int) -> ItohReport:
    """Per-valuation tower invariants for root order k >= 2.

    The extended principal ideal is radical exactly when every exponent
    h_j is one, i.e. when k is a common multiple of the Rees integers;
    the least such k is their lcm.
    """
    rd = rees_data(rees)
    if k < 2:
        raise BadKError(f"root order must be >= 2, got {k}")
    records = []
    for e in rd.entries:
        d = math.gcd(e, k)
        records.append(
            ItohValuationRecord(
                rees_integer=e,
                residue_degree=d,
                ramification=k // d,
                u_exponent=e // d,
            )
        )
    return ItohReport(
        k=k,
        per_valuation=tuple(records),
        is_radical=all(r.u_exponent == 1 for r in records),
        least_radical_k=rd.lcm,
    )


@dataclass(frozen=True)
class EquivalenceReport:
    """Four independently computed radicality verdicts; all must agree."""

    k: int
    via_tower: bool
    via_exponent_vector: bool
    via_unextended: bool
    via_divisibility: bool

    @property
    def verdict(self) -> bool:
        return self.via_tower

    @property
    def agreed(self) -> bool:
        return (
            self.via_tower
            == self.via_exponent_vector
            == self.via_unextended
            == self.via_divisibility
        )


def radicality_equivalence(rees: ReesData | Sequence[int], k: int) -> EquivalenceReport:
    """Check the four equivalent radicality statements against each other.

    (1) every tower exponent h_j equals one; (2) the exponent vector of
    the extended ideal is fixed by the radical; (3) the same test on the
    unextended-level vector, recomputed through the value-group oracle
    rather than gcd; (4) k is divisible by every Rees integer.  The four
    booleans are computed independently and an ``EquivalenceViolation``
    is raised if they ever disagree.
    """
    rd = rees_data(rees)
    report = itoh_structure(rd, k)
    via_tower = all(r.u_exponent == 1 for r in report.per_valuation)

    vec = SemilocalIdeal(report.u_exponents)
    via_exponent_vector = semilocal_radical(vec) == vec

    oracle_exponents = []
    for e in rd.entries:
        c = oracle_ramification(PuiseuxModel(e, k))
        if (e * c) % k != 0:
            raise EquivalenceViolation(f"non-integral exponent for e={e}, k={k}")
        oracle_exponents.append(e * c // k)
    oracle_vec = SemilocalIdeal(tuple(oracle_exponents))
    via_unextended = semilocal_radical(oracle_vec) == oracle_vec

    via_divisibility = all(k % e == 0 for e in rd.entries)

    result = EquivalenceReport(
        k=k,
        via_tower=via_tower,
        via_exponent_vector=via_exponent_vector,
        via_unextended=via_unextended,
        via_divisibility=via_divisibility,
    )
    if not result.agreed:
        raise EquivalenceViolation(
            f"radicality statements disagree for rees={rd.entries}, k={k}: {result}"
        )
    return result


def semilocal_product(a: SemilocalIdeal, b: SemilocalIdeal) -> SemilocalIdeal:
    """Ideal product: exponents add componentwise."""
    if len(a) != len(b):
        raise IndexMismatchError(f"index sets differ: {len(a)} vs {len(b)}")
    return SemilocalIdeal(tuple(x + y for x, y in zip(a.exponents, b.exponents)))


def semilocal_radical(a: SemilocalIdeal) -> SemilocalIdeal:
    """Radical of an ideal: every positive exponent clamps to one."""
    return SemilocalIdeal(tuple(min(e, 1) for e in a.exponents))


def jacobson_radical(n: int) -> SemilocalIdeal:
    """Jacobson radical of a semilocal Dedekind domain with n maximal ideals."""
    if n < 1:
        raise NonPositiveError(f"need at least one maximal ideal, got {n}")
    return SemilocalIdeal((1,) * n)


def _require_nonunit(a: SemilocalIdeal) -> None:
    if a.is_unit:
        raise UnitIdealError("operation is undefined for the unit ideal")


def is_projectively_equivalent(a: SemilocalIdeal, b: SemilocalIdeal) -> bool:
    """Whether some powers of a and b have equal integral closures.

    In a Dedekind domain all ideals are integrally closed, so this
    holds exactly when the exponent vectors are positive rational
    multiples of each other.
    """
    if len(a) != len(b):
        raise IndexMismatchError(f"index sets differ: {len(a)} vs {len(b)}")
    _require_nonunit(a)
    _require_nonunit(b)
    pivot = next(i for i, e in enumerate(a.exponents) if e > 0)
    if b.exponents[pivot] == 0:
        return False
    ap, bp = a.exponents[pivot], b.exponents[pivot]
    return all(x * bp == y * ap for x, y in zip(a.exponents, b.exponents))


def is_projectively_full(a: SemilocalIdeal) -> bool:
    """Whether every ideal projectively equivalent to a is a power of a.

    Equivalent to the exponent vector being primitive: the gcd of its
    entries is one.
    """
    _require_nonunit(a)
    return math.gcd(*a.exponents) == 1
