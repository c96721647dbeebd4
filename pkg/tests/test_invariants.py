"""Unit tests for closed-form tau, family formulas, and obstructions."""

import math

import pytest

from conftest import family_pairs
from lsat import (
    Companion,
    classify_operator,
    eps_not_minus_one,
    cable_profile,
    tau_bridge_braid,
    tau_cable,
    tau_closed_form,
    tau_inequality_check,
    twobridge_profile,
    unlink_profile,
)
from lsat.errors import InvalidInputError, UnsupportedRegimeError


WHITEHEAD = twobridge_profile(3, 3)
MAZUR = twobridge_profile(5, 3)


class TestClosedForm:
    def test_whitehead_eps1(self):
        res = tau_closed_form(WHITEHEAD, Companion(tau=1, eps=1), 0)
        assert res.value == 1
        assert res.case_tag == "eps=1,n<2tau"

    def test_mazur_eps1_split(self):
        K = Companion(tau=2, eps=1)
        assert tau_closed_form(MAZUR, K, 0).value == 3
        assert tau_closed_form(MAZUR, K, 5).value == 2

    def test_eps0_zero_framing_is_g3(self):
        for prof in (WHITEHEAD, MAZUR, unlink_profile(), cable_profile(3, 2)):
            res = tau_closed_form(prof, Companion(tau=0, eps=0), 0)
            assert res.value == prof.g3

    def test_mazur_epsm1(self):
        res = tau_closed_form(MAZUR, Companion(tau=-1, eps=-1), 0)
        assert res.value == 0
        assert res.case_tag == "eps=-1,n>2tau+1"

    def test_branch_continuity_eps1(self):
        # Evaluated at the boundary n = 2 tau, the two eps=1 branches
        # differ by R_center - l/2 - g3, which must be nonnegative.
        from lsat import HalfInt

        for r, q in family_pairs():
            prof = twobridge_profile(r, q)
            gap = prof.r_center - HalfInt(prof.l) - HalfInt.whole(prof.g3)
            assert gap >= HalfInt.whole(0)

    def test_cable_needs_family_formula_for_negative_eps(self):
        prof = cable_profile(2, 1)
        with pytest.raises(UnsupportedRegimeError):
            tau_closed_form(prof, Companion(tau=1, eps=-1), 0)

    def test_integer_result_tag(self):
        res = tau_closed_form(MAZUR, Companion(tau=0, eps=0), -2)
        assert res.method == "closed-form"
        assert isinstance(res.value, int)


class TestCableFormula:
    def test_examples(self):
        assert tau_cable(2, 3, Companion(tau=1, eps=1)).value == 3
        assert tau_cable(3, 2, Companion(tau=0, eps=-1)).value == 3
        assert tau_cable(2, -3, Companion(tau=0, eps=0)).value == -1

    def test_mirror_consistency(self):
        for p in range(2, 8):
            for q in range(-7, 8):
                if q == 0 or math.gcd(p, abs(q)) != 1:
                    continue
                for tau in range(-3, 4):
                    left = tau_cable(p, q, Companion(tau=tau, eps=-1)).value
                    right = tau_cable(p, -q, Companion(tau=-tau, eps=1)).value
                    assert left == -right

    def test_rejects_non_coprime(self):
        with pytest.raises(InvalidInputError):
            tau_cable(4, 2, Companion(tau=0, eps=1))


class TestBridgeBraidFormula:
    def test_examples(self):
        assert tau_bridge_braid(4, 5, 2, Companion(tau=0, eps=1)).value == 7
        assert tau_bridge_braid(4, 5, 2, Companion(tau=0, eps=-1)).value == 10
        assert tau_bridge_braid(4, 5, 2, Companion(tau=0, eps=0)).value == 7

    def test_rejects_parity(self):
        with pytest.raises(InvalidInputError):
            tau_bridge_braid(3, 4, 1, Companion(tau=0, eps=1))


class TestEpsPredicate:
    def test_eps1_always_guaranteed(self):
        for prof in (WHITEHEAD, MAZUR, cable_profile(2, 1)):
            assert eps_not_minus_one(prof, Companion(tau=2, eps=1), -3) == (
                "guaranteed"
            )

    def test_whitehead_epsm1_guaranteed(self):
        for n in (-4, 0, 4):
            assert eps_not_minus_one(
                WHITEHEAD, Companion(tau=0, eps=-1), n
            ) == "guaranteed"

    def test_cable_eps0_negative_framing_inconclusive(self):
        assert eps_not_minus_one(
            cable_profile(2, 1), Companion(tau=0, eps=0), -1
        ) == "inconclusive"

    def test_eps0_nonnegative_framing_guaranteed(self):
        assert eps_not_minus_one(
            cable_profile(2, 1), Companion(tau=0, eps=0), 0
        ) == "guaranteed"


class TestClassifier:
    def test_identity(self):
        prof = twobridge_profile(3, 1)
        assert classify_operator(prof.hfunction(), prof.g3) == (
            "identity",
            None,
        )

    def test_trivial(self):
        prof = unlink_profile()
        assert classify_operator(prof.hfunction(), prof.g3) == (
            "trivial",
            None,
        )

    def test_whitehead_obstructed_at_r_center(self):
        verdict, claim = classify_operator(WHITEHEAD.hfunction(), 0)
        assert verdict == "obstructed"
        assert "R at winding/2" in claim

    def test_mazur_obstructed(self):
        verdict, _ = classify_operator(MAZUR.hfunction(), 0)
        assert verdict == "obstructed"

    def test_nonzero_g3_obstructed(self):
        verdict, claim = classify_operator(WHITEHEAD.hfunction(), 1)
        assert verdict == "obstructed" and "g3" in claim


class TestInequality:
    def test_winding_zero(self):
        for tau in (-2, 0, 2):
            for eps in (-1, 0, 1):
                K = Companion(tau=tau if eps else 0, eps=eps)
                for n in (-3, 0, 3):
                    result = tau_inequality_check(WHITEHEAD, K, n)
                    assert result in (None, True)

    def test_mazur_example(self):
        assert tau_inequality_check(MAZUR, Companion(tau=1, eps=1), 0) is True

    def test_cable_compared_with_itself(self):
        prof = cable_profile(2, 1)
        assert tau_inequality_check(prof, Companion(tau=1, eps=1), 0) is True

    def test_none_when_undefined(self):
        prof = cable_profile(2, 1)
        assert tau_inequality_check(prof, Companion(tau=1, eps=-1), 0) is None
