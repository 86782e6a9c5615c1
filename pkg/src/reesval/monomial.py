"""Monomial ideals in up to three variables.

The Newton polyhedron of a monomial ideal is the convex hull of its
generator exponents plus the nonnegative orthant.  Each facet whose
supporting hyperplane has positive offset carries one of the ideal's
Rees valuations: the primitive inward normal is the weight vector of a
monomial valuation and the offset is its Rees integer.  Integral
closures of powers are cut out by those facet inequalities, and an
independent membership oracle decides the same question as rational
cone membership via exact Fourier-Motzkin elimination, touching no
facet data at all.

All geometry is exact: integers and Fractions only.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatchError,
    EmptyGeneratorsError,
    ImproperIdealError,
    InconsistentDimensionError,
    NonPositiveError,
    NonPositivePowerError,
    ParseError,
    ZeroExponentError,
)

Vec = tuple[int, ...]

_VAR_NAMES = ("x", "y", "z")


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _dominates(a: Vec, b: Vec) -> bool:
    """a >= b componentwise."""
    return all(x >= y for x, y in zip(a, b))


def _primitive(v: Vec) -> Vec:
    g = math.gcd(*(abs(x) for x in v))
    return tuple(x // g for x in v) if g > 1 else v


def monomial_str(m: Vec) -> str:
    """Render an exponent vector as a monomial in x, y, z."""
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(_VAR_NAMES[i])
        elif e > 1:
            parts.append(f"{_VAR_NAMES[i]}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper nonzero monomial ideal given by its minimal generators.

    Generators are stored as a lexicographically sorted antichain of
    exponent vectors; use :func:`minimalize` to build one from an
    arbitrary generating set.
    """

    dim: int
    generators: tuple[Vec, ...]

    def __post_init__(self):
        if not 1 <= self.dim <= 3:
            raise InconsistentDimensionError(f"dimension must be 1..3, got {self.dim}")
        if not self.generators:
            raise EmptyGeneratorsError("a monomial ideal needs at least one generator")
        gens = tuple(sorted(tuple(int(e) for e in g) for g in self.generators))
        for g in gens:
            if len(g) != self.dim:
                raise InconsistentDimensionError(
                    f"generator {g} has length {len(g)}, expected {self.dim}"
                )
            if any(e < 0 for e in g):
                raise ImproperIdealError(f"negative exponent in generator {g}")
            if all(e == 0 for e in g):
                raise ImproperIdealError("the unit monomial cannot generate a proper ideal")
        for a, b in itertools.permutations(gens, 2):
            if _dominates(a, b):
                raise ImproperIdealError(
                    f"generators are not an antichain: {a} is a multiple of {b}"
                )
        object.__setattr__(self, "generators", gens)

    @property
    def max_coordinate(self) -> int:
        return max(max(g) for g in self.generators)


def minimalize(gens: Iterable[Sequence[int]], dim: int | None = None) -> MonomialIdeal:
    """Drop every generator that is a monomial multiple of another.

    The surviving antichain generates the same ideal.
    """
    vecs = sorted({tuple(int(e) for e in g) for g in gens})
    if not vecs:
        raise EmptyGeneratorsError("empty generating set")
    d = dim if dim is not None else len(vecs[0])
    for v in vecs:
        if len(v) != d:
            raise InconsistentDimensionError(f"generator {v} has length {len(v)}, expected {d}")
    kept = [
        v
        for v in vecs
        if not any(w != v and _dominates(v, w) for w in vecs)
    ]
    return MonomialIdeal(d, tuple(kept))


@dataclass(frozen=True)
class ReesValuationSpec:
    """One Rees valuation: a primitive monomial weight and its Rees integer."""

    normal: Vec
    rees_integer: int

    def __post_init__(self):
        normal = tuple(int(e) for e in self.normal)
        object.__setattr__(self, "normal", normal)
        if all(e == 0 for e in normal):
            raise ZeroExponentError("valuation normal cannot be zero")
        if any(e < 0 for e in normal):
            raise ImproperIdealError("valuation normal must be nonnegative")
        if _primitive(normal) != normal:
            raise ImproperIdealError(f"normal {normal} is not primitive")
        if self.rees_integer < 1:
            raise NonPositiveError("Rees integer must be >= 1")

    def value(self, m: Sequence[int]) -> int:
        return _dot(self.normal, m)


@dataclass(frozen=True)
class ReesPackage:
    """A monomial ideal together with all of its Rees valuations."""

    ideal: MonomialIdeal
    valuations: tuple[ReesValuationSpec, ...]

    def __post_init__(self):
        normals = [v.normal for v in self.valuations]
        if len(set(normals)) != len(normals):
            raise ImproperIdealError("duplicate valuation normals")
        object.__setattr__(
            self, "valuations", tuple(sorted(self.valuations, key=lambda v: v.normal))
        )

    @property
    def rees_integers(self) -> tuple[int, ...]:
        return tuple(v.rees_integer for v in self.valuations)


def _unit(i: int, d: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(d))


def _facets_2d(gens: Sequence[Vec]) -> list[tuple[Vec, int]]:
    """All facets of conv(gens) + orthant in the plane, as (normal, offset).

    The bounded facets form the staircase between the extreme
    generators; they are found by a monotone-chain sweep.  The two
    recession facets have the unit normals.
    """
    facets = [(_unit(i, 2), min(g[i] for g in gens)) for i in range(2)]
    pts = sorted(gens)  # antichain: x strictly increasing, y strictly decreasing
    chain: list[Vec] = []
    for p in pts:
        while len(chain) >= 2:
            b, a = chain[-1], chain[-2]
            cross = (b[0] - a[0]) * (p[1] - b[1]) - (b[1] - a[1]) * (p[0] - b[0])
            if cross <= 0:  # p makes the middle point redundant (or collinear)
                chain.pop()
            else:
                break
        chain.append(p)
    for a, b in zip(chain, chain[1:]):
        normal = _primitive((a[1] - b[1], b[0] - a[0]))
        facets.append((normal, _dot(normal, a)))
    return facets


def _rank(vectors: Sequence[Vec]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors if any(v)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / prow[col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], prow)]
        rank += 1
    return rank


def _sign_normalize(v: Vec) -> Vec | None:
    """Scale a candidate normal to be nonnegative, or reject it."""
    if all(e == 0 for e in v):
        return None
    if all(e <= 0 for e in v):
        v = tuple(-e for e in v)
    if any(e < 0 for e in v):
        return None
    return _primitive(v)


def _cross3(a: Vec, b: Vec) -> Vec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _facets_3d(gens: Sequence[Vec]) -> list[tuple[Vec, int]]:
    """All facets of conv(gens) + orthant in 3-space.

    Candidate normals come from every plane spanned by generator
    differences and coordinate rays; a candidate survives when its
    supporting face is genuinely 2-dimensional.
    """
    units = [_unit(i, 3) for i in range(3)]
    candidates: set[Vec] = set(units)
    for p, q in itertools.combinations(gens, 2):
        pq = _sub(q, p)
        for u in units:
            n = _sign_normalize(_cross3(pq, u))
            if n is not None:
                candidates.add(n)
    for p, q, r in itertools.combinations(gens, 3):
        n = _sign_normalize(_cross3(_sub(q, p), _sub(r, p)))
        if n is not None:
            candidates.add(n)
    facets = []
    for a in sorted(candidates):
        offset = min(_dot(a, g) for g in gens)
        touching = [g for g in gens if _dot(a, g) == offset]
        spans = [_sub(g, touching[0]) for g in touching[1:]]
        spans.extend(units[i] for i in range(3) if a[i] == 0)
        if spans and _rank(spans) == 2:
            facets.append((a, offset))
    return facets


def rees_valuations(ideal: MonomialIdeal) -> ReesPackage:
    """Rees valuations of a monomial ideal from its Newton polyhedron.

    Facets whose offset is zero are the coordinate recession walls on
    which the ideal's valuation vanishes; only the positive-offset
    facets define Rees valuations.
    """
    gens = ideal.generators
    if ideal.dim == 1:
        facets = [((1,), min(g[0] for g in gens))]
    elif ideal.dim == 2:
        facets = _facets_2d(gens)
    else:
        facets = _facets_3d(gens)
    specs = [
        ReesValuationSpec(normal, offset) for normal, offset in facets if offset > 0
    ]
    return ReesPackage(ideal, tuple(specs))


def integral_closure_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of the integral closure of the k-th power.

    A monomial lies in the closure exactly when every Rees valuation
    gives it value at least k times its Rees integer.  Minimal
    generators live in the box [0, k*maxcoord]^d.
    """
    if k < 1:
        raise NonPositivePowerError(f"power must be >= 1, got {k}")
    facets = rees_valuations(ideal).valuations
    bound = k * ideal.max_coordinate

    def member(m: Vec) -> bool:
        return all(v.value(m) >= k * v.rees_integer for v in facets)

    gens = []
    for m in itertools.product(range(bound + 1), repeat=ideal.dim):
        if not member(m):
            continue
        lower = (
            tuple(e - (1 if i == j else 0) for j, e in enumerate(m))
            for i in range(ideal.dim)
            if m[i] > 0
        )
        if not any(member(lo) for lo in lower):
            gens.append(m)
    return MonomialIdeal(ideal.dim, tuple(sorted(gens)))


def _fm_feasible(constraints: list[tuple[list[int], int]], nvars: int) -> bool:
    """Decide feasibility of a system of integer inequalities sum(c*x) <= b.

    Classic Fourier-Motzkin elimination; rows are gcd-reduced to keep
    coefficients small.  Exact for any input.
    """

    def reduce_row(coeffs: list[int], rhs: int) -> tuple[list[int], int]:
        g = math.gcd(*(abs(c) for c in coeffs), abs(rhs))
        if g > 1:
            return [c // g for c in coeffs], rhs // g
        return coeffs, rhs

    rows = [reduce_row(list(c), b) for c, b in constraints]
    for var in range(nvars - 1, -1, -1):
        pos, neg, rest = [], [], []
        for coeffs, rhs in rows:
            cv = coeffs[var]
            if cv > 0:
                pos.append((coeffs, rhs))
            elif cv < 0:
                neg.append((coeffs, rhs))
            else:
                rest.append((coeffs, rhs))
        for (pc, pb), (nc, nb) in itertools.product(pos, neg):
            scale_p, scale_n = -nc[var], pc[var]
            coeffs = [scale_p * p + scale_n * n for p, n in zip(pc, nc)]
            rhs = scale_p * pb + scale_n * nb
            if not any(coeffs) and rhs < 0:
                return False
            rest.append(reduce_row(coeffs, rhs))
        rows = rest
    return all(rhs >= 0 for _, rhs in rows)


def oracle_is_integral(ideal: MonomialIdeal, k: int, m: Sequence[int]) -> bool:
    """Decide membership of x^m in the closure of the k-th power, facet-free.

    Equivalent formulation: m lies in the convex hull of the k-scaled
    generators plus the orthant.  Decided as exact rational feasibility
    of the convex-combination system, independently of
    :func:`rees_valuations`.
    """
    if k < 1:
        raise NonPositivePowerError(f"power must be >= 1, got {k}")
    m = tuple(int(e) for e in m)
    if len(m) != ideal.dim:
        raise DimensionMismatchError(
            f"monomial {m} has length {len(m)}, ideal has dimension {ideal.dim}"
        )
    if any(e < 0 for e in m):
        raise DimensionMismatchError(f"negative exponent in {m}")
    kgens = [tuple(k * e for e in g) for g in ideal.generators]
    if any(_dominates(m, g) for g in kgens):
        return True
    n = len(kgens)
    if n == 1:
        return False
    # lambda_n is eliminated as 1 - sum of the others; remaining system:
    #   -lambda_i <= 0,  sum lambda_i <= 1,
    #   sum lambda_i * (g_i - g_n)[j] <= m[j] - g_n[j]
    last = kgens[-1]
    cons: list[tuple[list[int], int]] = []
    for i in range(n - 1):
        cons.append(([-1 if j == i else 0 for j in range(n - 1)], 0))
    cons.append(([1] * (n - 1), 1))
    for j in range(ideal.dim):
        cons.append(([kgens[i][j] - last[j] for i in range(n - 1)], m[j] - last[j]))
    return _fm_feasible(cons, n - 1)


def principal_rees(b: Sequence[int], dim: int) -> ReesPackage:
    """Rees valuations of a principal monomial ideal.

    The Newton polyhedron of (x^b) is the orthant shifted to b, so the
    facets are the coordinate walls through b: one valuation per
    nonzero coordinate, with the coordinate as Rees integer.
    """
    b = tuple(int(e) for e in b)
    if len(b) != dim:
        raise InconsistentDimensionError(f"exponent {b} has length {len(b)}, expected {dim}")
    if all(e == 0 for e in b):
        raise ZeroExponentError("principal ideal needs a nonzero exponent vector")
    if any(e < 0 for e in b):
        raise ZeroExponentError(f"negative exponent in {b}")
    specs = [ReesValuationSpec(_unit(i, dim), e) for i, e in enumerate(b) if e > 0]
    return ReesPackage(MonomialIdeal(dim, (b,)), tuple(specs))


def ideal_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """The k-th power as an ideal: k-fold sums of generators, minimalized."""
    if k < 1:
        raise NonPositivePowerError(f"power must be >= 1, got {k}")
    sums = {
        tuple(sum(col) for col in zip(*combo))
        for combo in itertools.combinations_with_replacement(ideal.generators, k)
    }
    return minimalize(sums, ideal.dim)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ideal text format.

    First significant line is ``dim d``; every following line lists one
    generator as d space-separated nonnegative integers.  ``#`` starts
    a comment.
    """
    dim: int | None = None
    gens: list[Vec] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if dim is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim":
                raise ParseError("expected 'dim d' header", lineno)
            try:
                dim = int(parts[1])
            except ValueError:
                raise ParseError(f"bad dimension {parts[1]!r}", lineno) from None
            if not 1 <= dim <= 3:
                raise ParseError(f"dimension must be 1..3, got {dim}", lineno)
            continue
        parts = line.split()
        if len(parts) != dim:
            raise ParseError(f"expected {dim} exponents, got {len(parts)}", lineno)
        try:
            vec = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"bad exponent in {line!r}", lineno) from None
        if any(e < 0 for e in vec):
            raise ParseError("exponents must be nonnegative", lineno)
        gens.append(vec)
    if dim is None:
        raise ParseError("missing 'dim d' header")
    if not gens:
        raise ParseError("no generators given")
    return minimalize(gens, dim)
