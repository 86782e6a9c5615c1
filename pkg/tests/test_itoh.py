import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reesval.errors import (
    BadKError,
    IndexMismatchError,
    NonPositiveError,
    UnitIdealError,
)
from reesval.itoh import (
    ReesData,
    SemilocalIdeal,
    is_projectively_equivalent,
    is_projectively_full,
    itoh_structure,
    jacobson_radical,
    radicality_equivalence,
    semilocal_product,
    semilocal_radical,
)


def rees_multisets(max_n, max_entry):
    for n in range(1, max_n + 1):
        yield from itertools.combinations_with_replacement(range(1, max_entry + 1), n)


def brute_equivalent(a, b, bound=12):
    """Projective equivalence by searching the scaling pair directly."""
    return any(
        tuple(i * x for x in a) == tuple(j * y for y in b)
        for i in range(1, bound + 1)
        for j in range(1, bound + 1)
    )


class TestItohStructure:
    def test_common_multiple_is_radical(self):
        report = itoh_structure((2, 3), 6)
        assert report.u_exponents == (1, 1)
        assert report.is_radical
        assert report.least_radical_k == 6

    def test_non_common_multiple(self):
        report = itoh_structure((2, 3), 4)
        assert report.u_exponents == (1, 3)
        assert not report.is_radical

    def test_all_ones(self):
        report = itoh_structure((1, 1), 2)
        assert report.u_exponents == (1, 1)
        assert report.is_radical

    def test_rejects_small_k(self):
        with pytest.raises(BadKError):
            itoh_structure((2, 3), 1)

    def test_record_relations(self):
        for entries in rees_multisets(3, 8):
            for k in (2, 3, 4, 6, 12):
                report = itoh_structure(entries, k)
                for record in report.per_valuation:
                    d, c, h = (
                        record.residue_degree,
                        record.ramification,
                        record.u_exponent,
                    )
                    assert d * c == k
                    assert d * h == record.rees_integer
                    assert record.degree == k

    def test_any_multiple_of_lcm_is_radical(self):
        for entries in [(2, 3), (4, 6), (2, 2, 5), (3,)]:
            m = ReesData(entries).lcm
            for q in range(1, 6):
                assert itoh_structure(entries, q * m).is_radical

    def test_radical_for_all_k_iff_all_ones(self):
        for entries in [(1,), (1, 1, 1), (1, 2), (3, 1), (2, 2)]:
            always = all(
                itoh_structure(entries, k).is_radical for k in range(2, 61)
            )
            assert always == all(e == 1 for e in entries)


class TestRadicalityEquivalence:
    def test_common_multiple(self):
        report = radicality_equivalence((2, 3), 6)
        assert report.agreed and report.verdict

    def test_four_divides(self):
        report = radicality_equivalence((2, 4), 4)
        assert report.agreed and report.verdict

    def test_six_fails(self):
        report = radicality_equivalence((2, 4), 6)
        assert report.agreed and not report.verdict

    def test_exhaustive_small(self):
        for entries in rees_multisets(3, 6):
            for k in range(2, 25):
                report = radicality_equivalence(entries, k)
                assert report.agreed
                assert report.verdict == all(k % e == 0 for e in entries)


class TestSemilocalArithmetic:
    def test_product_examples(self):
        one = SemilocalIdeal((1, 0))
        other = SemilocalIdeal((0, 1))
        assert semilocal_product(one, other) == SemilocalIdeal((1, 1))
        sq = SemilocalIdeal((2, 3))
        assert semilocal_product(sq, sq) == SemilocalIdeal((4, 6))
        unit = SemilocalIdeal((0, 0))
        assert semilocal_product(unit, sq) == sq

    def test_product_index_mismatch(self):
        with pytest.raises(IndexMismatchError):
            semilocal_product(SemilocalIdeal((1,)), SemilocalIdeal((1, 2)))

    def test_radical_examples(self):
        assert semilocal_radical(SemilocalIdeal((3, 1))) == SemilocalIdeal((1, 1))
        assert semilocal_radical(SemilocalIdeal((1, 1))) == SemilocalIdeal((1, 1))
        assert semilocal_radical(SemilocalIdeal((0, 2))) == SemilocalIdeal((0, 1))

    def test_jacobson_examples(self):
        assert jacobson_radical(2) == SemilocalIdeal((1, 1))
        assert jacobson_radical(1) == SemilocalIdeal((1,))
        assert jacobson_radical(5) == SemilocalIdeal((1,) * 5)
        with pytest.raises(NonPositiveError):
            jacobson_radical(0)

    def test_jacobson_is_radical_and_full(self):
        for n in range(1, 9):
            j = jacobson_radical(n)
            assert semilocal_radical(j) == j
            assert is_projectively_full(j)

    @given(
        st.lists(st.integers(0, 9), min_size=1, max_size=5),
        st.lists(st.integers(0, 9), min_size=1, max_size=5),
        st.lists(st.integers(0, 9), min_size=1, max_size=5),
    )
    def test_product_monoid_laws(self, xs, ys, zs):
        n = min(len(xs), len(ys), len(zs))
        a, b, c = (SemilocalIdeal(tuple(v[:n])) for v in (xs, ys, zs))
        assert semilocal_product(a, b) == semilocal_product(b, a)
        assert semilocal_product(semilocal_product(a, b), c) == semilocal_product(
            a, semilocal_product(b, c)
        )
        unit = SemilocalIdeal((0,) * n)
        assert semilocal_product(a, unit) == a

    @given(st.lists(st.integers(0, 9), min_size=1, max_size=5))
    def test_radical_idempotent(self, xs):
        a = SemilocalIdeal(tuple(xs))
        assert semilocal_radical(semilocal_radical(a)) == semilocal_radical(a)


class TestProjectiveEquivalence:
    def test_jacobson_power(self):
        assert is_projectively_equivalent(SemilocalIdeal((6, 6)), SemilocalIdeal((1, 1)))

    def test_doubling(self):
        assert is_projectively_equivalent(SemilocalIdeal((2, 3)), SemilocalIdeal((4, 6)))

    def test_swap_is_not_equivalent(self):
        assert not brute_equivalent((2, 3), (3, 2))
        assert not is_projectively_equivalent(
            SemilocalIdeal((2, 3)), SemilocalIdeal((3, 2))
        )

    def test_matches_brute_force(self):
        vectors = [(1, 0), (0, 2), (2, 3), (3, 2), (4, 6), (1, 1), (2, 2), (5, 1)]
        for a in vectors:
            for b in vectors:
                assert is_projectively_equivalent(
                    SemilocalIdeal(a), SemilocalIdeal(b)
                ) == brute_equivalent(a, b)

    def test_unit_rejected(self):
        with pytest.raises(UnitIdealError):
            is_projectively_equivalent(SemilocalIdeal((0, 0)), SemilocalIdeal((1, 1)))

    def test_index_mismatch(self):
        with pytest.raises(IndexMismatchError):
            is_projectively_equivalent(SemilocalIdeal((1,)), SemilocalIdeal((1, 1)))


class TestProjectiveFullness:
    def test_examples(self):
        assert is_projectively_full(SemilocalIdeal((1, 1)))
        assert not is_projectively_full(SemilocalIdeal((2, 4)))
        assert is_projectively_full(SemilocalIdeal((2, 3)))

    def test_witness_for_non_full(self):
        # (1, 2) is equivalent to (2, 4) but not one of its powers
        smaller = SemilocalIdeal((1, 2))
        assert is_projectively_equivalent(smaller, SemilocalIdeal((2, 4)))
        assert all(
            tuple(k * x for x in (2, 4)) != (1, 2) for k in range(1, 13)
        )

    def test_brute_force_confirmation(self):
        # full iff every equivalent integral vector is an integer multiple
        for a in [(2, 3), (1, 1), (2, 4), (3, 6, 9), (4, 2), (5, 7)]:
            ideal = SemilocalIdeal(a)
            full = is_projectively_full(ideal)
            equivalents = [
                b
                for b in itertools.product(range(0, 13), repeat=len(a))
                if any(b) and brute_equivalent(a, b)
            ]
            all_powers = all(
                any(tuple(k * x for x in a) == b for k in range(1, 13))
                for b in equivalents
            )
            assert full == all_powers

    def test_unit_rejected(self):
        with pytest.raises(UnitIdealError):
            is_projectively_full(SemilocalIdeal((0, 0, 0)))


def test_rees_data_validation():
    with pytest.raises(NonPositiveError):
        ReesData(())
    with pytest.raises(NonPositiveError):
        ReesData((1, 0))
    assert ReesData((4, 6)).lcm == 12
    assert math.gcd(*ReesData((4, 6)).entries) == 2


def test_large_inputs_stay_exact():
    # CLI-scale bounds: entries and k up to a million never wrap
    report = itoh_structure((999_983, 2), 1_000_000)
    assert report.least_radical_k == 1_999_966
    record = report.per_valuation[0]
    assert record.residue_degree * record.ramification == 1_000_000
    assert record.residue_degree * record.u_exponent == 999_983
    big = radicality_equivalence((2, 5), 1_000_000)
    assert big.agreed and big.verdict
