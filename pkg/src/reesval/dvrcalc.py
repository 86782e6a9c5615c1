"""Symbolic calculus of discrete valuation ring extensions.

A DVR enters only through numeric invariants: the value of the
distinguished element u (uniformizer exponent), and a descriptor of how
its residue field was assembled (transcendental generators, Kummer
generators).  An extension of DVRs is a record of (degree, ramification
index, residue degree) with a no-splitting flag; towers multiply these
componentwise.  The two building blocks are the unramified extension
generated by a root of X^e - w for a residue-transcendental unit w
(degree e, residue degree e) and the totally ramified extension by a
root of the uniformizer (degree f, ramification f).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable

from .errors import (
    LabelMismatchError,
    NonPositiveError,
    NoTranscendentalError,
    NotMultipleError,
)

UNRAMIFIED_KUMMER = "unramified-kummer"
TOTALLY_RAMIFIED_ROOT = "totally-ramified-root"
COMPOSITE = "composite"


@dataclass(frozen=True)
class ResidueDescriptor:
    """How a residue field was built from a base field.

    ``transcendentals`` counts adjoined transcendental generators (such
    as the residue of t*b), ``kummer_degrees`` the degrees of
    successively adjoined Kummer roots.
    """

    base_label: str = "k"
    transcendentals: int = 0
    kummer_degrees: tuple[int, ...] = ()

    def __post_init__(self):
        if self.transcendentals < 0:
            raise NonPositiveError("transcendental count must be >= 0")
        if any(d < 1 for d in self.kummer_degrees):
            raise NonPositiveError("Kummer degrees must be >= 1")


@dataclass(frozen=True)
class DVRSpec:
    """A DVR with u-value e (u generates the e-th power of the maximal ideal)."""

    label: str
    uniformizer_exponent: int
    residue: ResidueDescriptor = ResidueDescriptor()

    def __post_init__(self):
        if self.uniformizer_exponent < 1:
            raise NonPositiveError("uniformizer exponent must be >= 1")


@dataclass(frozen=True)
class ExtensionStep:
    """One extension of DVRs with its three invariants.

    The no-splitting flag asserts that the top ring is the unique
    extension of the bottom one and that ramification times residue
    degree equals the degree; it is set by the constructing operation
    and validated by :func:`check_fundamental`.
    """

    from_label: str
    to_label: str
    degree: int
    ramification: int
    residue_degree: int
    kind: str = COMPOSITE
    no_splitting: bool = True

    def __post_init__(self):
        for name in ("degree", "ramification", "residue_degree"):
            if getattr(self, name) < 1:
                raise NonPositiveError(f"{name} must be >= 1")

    @property
    def invariants(self) -> tuple[int, int, int]:
        """(degree, ramification, residue_degree)."""
        return (self.degree, self.ramification, self.residue_degree)


@dataclass(frozen=True)
class Tower:
    """A chain of extension steps over a base DVR."""

    base: DVRSpec
    steps: tuple[ExtensionStep, ...]

    def __post_init__(self):
        prev = self.base.label
        for step in self.steps:
            if step.from_label != prev:
                raise LabelMismatchError(
                    f"step starts at {step.from_label!r}, expected {prev!r}"
                )
            prev = step.to_label

    def composite(self) -> ExtensionStep:
        """Componentwise product of all steps."""
        degree = ramification = residue_degree = 1
        no_splitting = True
        for step in self.steps:
            degree *= step.degree
            ramification *= step.ramification
            residue_degree *= step.residue_degree
            no_splitting = no_splitting and step.no_splitting
        return ExtensionStep(
            from_label=self.base.label,
            to_label=self.steps[-1].to_label if self.steps else self.base.label,
            degree=degree,
            ramification=ramification,
            residue_degree=residue_degree,
            kind=COMPOSITE,
            no_splitting=no_splitting,
        )


def lift_to_rees_w(v: DVRSpec, label: str = "W") -> DVRSpec:
    """Lift a Rees valuation ring of an ideal to one of the extended Rees ring.

    The lift keeps the uniformizer exponent (its ramification is one)
    and enlarges the residue field by one transcendental generator.
    """
    residue = replace(v.residue, transcendentals=v.residue.transcendentals + 1)
    return DVRSpec(label=label, uniformizer_exponent=v.uniformizer_exponent, residue=residue)


def unramified_kummer_step(w: DVRSpec, to_label: str = "U") -> ExtensionStep:
    """Adjoin a root of X^e - w for the residue-transcendental unit w = v/(t*b).

    The residue image of the unit is transcendental over the base
    residue field, so the reduced polynomial is irreducible and the
    extension has degree e, ramification one, residue degree e.  Without
    a transcendental residue generator the irreducibility argument is
    unavailable.
    """
    if w.residue.transcendentals < 1:
        raise NoTranscendentalError(
            "unramified Kummer step needs a transcendental residue generator"
        )
    e = w.uniformizer_exponent
    return ExtensionStep(
        from_label=w.label,
        to_label=to_label,
        degree=e,
        ramification=1,
        residue_degree=e,
        kind=UNRAMIFIED_KUMMER,
    )


def totally_ramified_root_step(
    level: DVRSpec | str, f: int, to_label: str = "V*"
) -> ExtensionStep:
    """Adjoin an f-th root of the uniformizer: degree f, ramification f."""
    if f < 1:
        raise NonPositiveError(f"root order must be >= 1, got {f}")
    from_label = level.label if isinstance(level, DVRSpec) else level
    return ExtensionStep(
        from_label=from_label,
        to_label=to_label,
        degree=f,
        ramification=f,
        residue_degree=1,
        kind=TOTALLY_RAMIFIED_ROOT,
    )


def itoh_tower(e_j: int, e: int) -> Tower:
    """The two-step tower W <= U <= V* for a common multiple e of e_j.

    First the unramified Kummer step of degree e_j, then a totally
    ramified root step of order e/e_j.  The composite has degree e,
    ramification e/e_j, residue degree e_j, with no splitting.
    """
    if e_j < 1 or e < 1:
        raise NonPositiveError("both exponents must be >= 1")
    if e % e_j != 0:
        raise NotMultipleError(f"{e} is not a multiple of {e_j}")
    base = DVRSpec(label="W", uniformizer_exponent=e_j, residue=ResidueDescriptor(transcendentals=1))
    kummer = unramified_kummer_step(base, to_label="U")
    root = totally_ramified_root_step("U", e // e_j, to_label="V*")
    return Tower(base=base, steps=(kummer, root))


def general_k_extension(
    e: int, k: int, from_label: str = "W", to_label: str = "U"
) -> ExtensionStep:
    """Invariants of adjoining a k-th root of u when u has value e.

    With d = gcd(e, k): degree k, ramification k/d, residue degree d,
    and the Fundamental Equality holds with no splitting.
    """
    if e < 1 or k < 1:
        raise NonPositiveError("both e and k must be >= 1")
    d = math.gcd(e, k)
    return ExtensionStep(
        from_label=from_label,
        to_label=to_label,
        degree=k,
        ramification=k // d,
        residue_degree=d,
        kind=COMPOSITE,
    )


def compose(t1: ExtensionStep, t2: ExtensionStep) -> ExtensionStep:
    """Stack two extension steps; all three invariants multiply."""
    if t1.to_label != t2.from_label:
        raise LabelMismatchError(
            f"cannot compose: {t1.to_label!r} != {t2.from_label!r}"
        )
    return ExtensionStep(
        from_label=t1.from_label,
        to_label=t2.to_label,
        degree=t1.degree * t2.degree,
        ramification=t1.ramification * t2.ramification,
        residue_degree=t1.residue_degree * t2.residue_degree,
        kind=COMPOSITE,
        no_splitting=t1.no_splitting and t2.no_splitting,
    )


@dataclass(frozen=True)
class StepCheck:
    """Fundamental-inequality verdict for one extension step."""

    step: ExtensionStep
    product: int
    inequality_holds: bool
    equality: bool
    flag_consistent: bool

    @property
    def ok(self) -> bool:
        return self.inequality_holds and self.flag_consistent


@dataclass(frozen=True)
class FundamentalReport:
    checks: tuple[StepCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def check_fundamental(
    steps: ExtensionStep | Tower | Iterable[ExtensionStep],
) -> FundamentalReport:
    """Check ramification * residue degree <= degree for each step.

    For a single-extension record, equality must hold exactly when the
    no-splitting flag is set.
    """
    if isinstance(steps, ExtensionStep):
        seq: tuple[ExtensionStep, ...] = (steps,)
    elif isinstance(steps, Tower):
        seq = steps.steps + (steps.composite(),)
    else:
        seq = tuple(steps)
    checks = []
    for step in seq:
        product = step.ramification * step.residue_degree
        equality = product == step.degree
        checks.append(
            StepCheck(
                step=step,
                product=product,
                inequality_holds=product <= step.degree,
                equality=equality,
                flag_consistent=equality == step.no_splitting,
            )
        )
    return FundamentalReport(tuple(checks))
