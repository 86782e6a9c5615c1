import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reesval.dvrcalc import (
    COMPOSITE,
    TOTALLY_RAMIFIED_ROOT,
    UNRAMIFIED_KUMMER,
    DVRSpec,
    ExtensionStep,
    ResidueDescriptor,
    check_fundamental,
    compose,
    general_k_extension,
    itoh_tower,
    lift_to_rees_w,
    totally_ramified_root_step,
    unramified_kummer_step,
)
from reesval.errors import (
    LabelMismatchError,
    NonPositiveError,
    NoTranscendentalError,
    NotMultipleError,
)
from reesval.puiseux import PuiseuxModel, oracle_extension


def step(degree, ramification, residue_degree, frm="A", to="B", no_splitting=True):
    return ExtensionStep(frm, to, degree, ramification, residue_degree,
                         no_splitting=no_splitting)


class TestLift:
    def test_adds_transcendental(self):
        v = DVRSpec("V", 2)
        w = lift_to_rees_w(v)
        assert w.uniformizer_exponent == 2
        assert w.residue.transcendentals == 1

    def test_exponent_preserved(self):
        assert lift_to_rees_w(DVRSpec("V", 1)).uniformizer_exponent == 1

    def test_composes(self):
        v = DVRSpec("V", 3)
        ww = lift_to_rees_w(lift_to_rees_w(v), label="W2")
        assert ww.residue.transcendentals == 2


class TestKummerStep:
    @pytest.mark.parametrize("e,expected", [(3, (3, 1, 3)), (1, (1, 1, 1)), (6, (6, 1, 6))])
    def test_invariants(self, e, expected):
        w = DVRSpec("W", e, ResidueDescriptor(transcendentals=1))
        s = unramified_kummer_step(w)
        assert s.invariants == expected
        assert s.kind == UNRAMIFIED_KUMMER

    def test_requires_transcendental(self):
        with pytest.raises(NoTranscendentalError):
            unramified_kummer_step(DVRSpec("W", 3))


class TestRootStep:
    @pytest.mark.parametrize("f,expected", [(2, (2, 2, 1)), (1, (1, 1, 1)), (5, (5, 5, 1))])
    def test_invariants(self, f, expected):
        s = totally_ramified_root_step("U", f)
        assert s.invariants == expected
        assert s.kind == TOTALLY_RAMIFIED_ROOT

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveError):
            totally_ramified_root_step("U", 0)


class TestItohTower:
    def test_mixed(self):
        tower = itoh_tower(2, 6)
        assert tower.composite().invariants == (6, 3, 2)
        assert [s.invariants for s in tower.steps] == [(2, 1, 2), (3, 3, 1)]

    def test_equal(self):
        assert itoh_tower(4, 4).composite().invariants == (4, 1, 4)

    def test_trivial(self):
        assert itoh_tower(1, 1).composite().invariants == (1, 1, 1)

    def test_not_multiple(self):
        with pytest.raises(NotMultipleError):
            itoh_tower(4, 6)

    def test_structure_sweep(self):
        for e_j in range(1, 13):
            for q in range(1, 9):
                e = q * e_j
                tower = itoh_tower(e_j, e)
                assert tower.composite().invariants == (e, e // e_j, e_j)
                kummer, root = tower.steps
                assert kummer.invariants == (e_j, 1, e_j)
                assert root.invariants == (e // e_j, e // e_j, 1)
                assert check_fundamental(tower).ok
                # the same extension through the gcd calculus
                assert tower.composite().invariants == general_k_extension(
                    e_j, e
                ).invariants


class TestGeneralKExtension:
    @pytest.mark.parametrize(
        "e,k,expected",
        [(4, 2, (2, 1, 2)), (2, 3, (3, 3, 1)), (4, 6, (6, 3, 2))],
    )
    def test_examples(self, e, k, expected):
        assert general_k_extension(e, k).invariants == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveError):
            general_k_extension(0, 2)

    def test_closed_form_sweep(self):
        for e in range(1, 41):
            for k in range(1, 41):
                s = general_k_extension(e, k)
                d = math.gcd(e, k)
                assert s.degree == k
                assert s.ramification == k // d
                assert s.residue_degree == d
                assert s.ramification * s.residue_degree == k


class TestCompose:
    def test_unramified_then_ramified(self):
        a = step(6, 1, 6, "W", "U")
        b = step(2, 2, 1, "U", "D")
        assert compose(a, b).invariants == (12, 2, 6)

    def test_identity(self):
        for s in [step(6, 3, 2, "U", "D"), step(5, 1, 5, "U", "D")]:
            assert compose(step(1, 1, 1, "W", "U"), s).invariants == s.invariants

    def test_factorization_matches_gcd_calculus(self):
        a = step(2, 1, 2, "W", "Ud")
        b = step(3, 3, 1, "Ud", "Uk")
        assert compose(a, b).invariants == general_k_extension(4, 6).invariants

    def test_label_mismatch(self):
        with pytest.raises(LabelMismatchError):
            compose(step(2, 1, 2, "W", "U"), step(3, 3, 1, "X", "D"))

    @given(
        st.lists(
            st.tuples(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6)),
            min_size=3,
            max_size=4,
        )
    )
    def test_associative(self, triples):
        steps = [
            ExtensionStep(f"L{i}", f"L{i + 1}", d, r, f)
            for i, (d, r, f) in enumerate(triples)
        ]
        left = steps[0]
        for s in steps[1:]:
            left = compose(left, s)
        right = steps[-1]
        for s in reversed(steps[:-1]):
            right = compose(s, right)
        assert left.invariants == right.invariants

    def test_chain_unramified_then_root(self):
        # W <= U <= D with [U:W] = k unramified and D totally ramified of order h
        for k in range(1, 9):
            for h in range(1, 9):
                w = DVRSpec("W", k, ResidueDescriptor(transcendentals=1))
                u_step = unramified_kummer_step(w)
                d_step = totally_ramified_root_step("U", h, to_label="D")
                total = compose(u_step, d_step)
                assert total.invariants == (h * k, h, k)
                assert check_fundamental([u_step, d_step, total]).ok


class TestCheckFundamental:
    def test_equality(self):
        report = check_fundamental(step(6, 3, 2))
        assert report.ok and report.checks[0].equality

    def test_strict_inequality_with_flag_off(self):
        report = check_fundamental(step(4, 1, 2, no_splitting=False))
        assert report.ok and not report.checks[0].equality

    def test_totally_ramified(self):
        assert check_fundamental(step(3, 3, 1)).ok

    def test_flag_inconsistency_detected(self):
        report = check_fundamental(step(4, 1, 2, no_splitting=True))
        assert not report.ok

    def test_inequality_violation_detected(self):
        report = check_fundamental(step(4, 3, 2))
        assert not report.checks[0].inequality_holds


def test_agrees_with_value_group_oracle():
    for e in range(1, 41):
        for k in range(1, 41):
            calculus = general_k_extension(e, k)
            ram, res, deg = oracle_extension(PuiseuxModel(e, k))
            assert (calculus.ramification, calculus.residue_degree, calculus.degree) == (
                ram,
                res,
                deg,
            )
