"""Unit tests for the F2[Z] chain-complex oracle and staircases."""

import pytest

from conftest import hi
from lsat import (
    Companion,
    HFunction,
    HalfInt,
    ZComplex,
    build_summand,
    staircase_from_column,
    tau_closed_form,
    tau_oracle,
    tower_alexander,
    twobridge_data,
    twobridge_profile,
    unlink_data,
    unlink_profile,
)
from lsat.errors import UnsupportedRegimeError, VerificationError


WHITEHEAD = twobridge_profile(3, 3)
MAZUR = twobridge_profile(5, 3)


class TestZComplexInvariants:
    def test_d_squared_enforced(self):
        # b -> a and c -> b and c -> a with inconsistent weights break
        # homogeneity; a genuine d^2 != 0 needs a longer zig-zag, so
        # build one: two composable arrows with an odd composite count.
        gens = [("a", 0, 0), ("b", 1, -1), ("c", 2, -2)]
        arrows = [("c", "b", 1), ("b", "a", 1)]
        with pytest.raises(VerificationError):
            ZComplex.build(gens, arrows).check()

    def test_homogeneity_enforced(self):
        gens = [("a", 0, 0), ("b", 1, -1)]
        # A(b) - A(a) = 1 but the arrow claims Z-exponent 2.
        with pytest.raises(VerificationError):
            ZComplex.build(gens, [("b", "a", 2)]).check()

    def test_arrows_mod_two(self):
        gens = [("a", 0, 0), ("b", 1, -1)]
        c = ZComplex.build(gens, [("b", "a", 1), ("b", "a", 1)])
        assert c.arrows == ()


class TestTowerAlexander:
    def test_single_generator(self):
        c = ZComplex.build([("x", 0, 0)], [])
        assert tower_alexander(c) == HalfInt.whole(0)

    def test_hand_smith_reduction(self):
        # d(s) = Z b0 + b1 with A(b0)=0, A(b1)=1, A(s)=1:
        # homology is F2[Z] generated by b0, so tau = 0.
        gens = [("b0", 0, 0), ("b1", 0, -2), ("s", 1, -1)]
        c = ZComplex.build(gens, [("s", "b0", 1), ("s", "b1", 0)])
        assert tower_alexander(c) == HalfInt.whole(0)

    def test_free_rank_must_be_one(self):
        c = ZComplex.build([("x", 0, 0), ("y", 0, 0)], [])
        with pytest.raises(VerificationError):
            tower_alexander(c)

    def test_whitehead_summand(self):
        c = build_summand("eps1", WHITEHEAD, Companion(tau=1, eps=1), 0)
        assert tower_alexander(c) == HalfInt.whole(1)


class TestBuildSummand:
    def test_whitehead_eps1_shape(self):
        c = build_summand("eps1", WHITEHEAD, Companion(tau=1, eps=1), 0)
        # 2 tau - n = 2 zig-zag sources over 3 sinks, plus the two
        # identity-weight end generators.
        assert len(c.generators) == 7
        weights = sorted(k for _, _, k in c.arrows)
        assert weights == [0, 0, 1, 1, 1, 1]  # L_sigma = L_tau = Z^1 here

    def test_mazur_eps0_positive(self):
        c = build_summand("eps0_pos", MAZUR, Companion(tau=0, eps=0), 2)
        # 2 sources over 3 sinks; weights Z^1 (L_sigma) and Z^2 (L_tau).
        names = [g[0] for g in c.generators]
        assert len(names) == 5
        ks = sorted(k for _, _, k in c.arrows)
        assert ks == [1, 1, 2, 2]
        assert tower_alexander(c) == HalfInt.whole(MAZUR.g3)

    def test_mazur_epsm1_cone(self):
        c = build_summand("epsm1", MAZUR, Companion(tau=0, eps=-1), 1)
        assert len(c.generators) == 3
        ks = sorted(k for _, _, k in c.arrows)
        assert ks == [1, 1]  # L_W and L_Z both weigh Z^1

    def test_unsupported_regime_refused(self):
        from lsat import cable_profile

        prof = cable_profile(2, 1)
        with pytest.raises(UnsupportedRegimeError):
            build_summand("epsm1", prof, Companion(tau=0, eps=-1), 0)

    def test_every_summand_checks(self):
        for n in (-3, 0, 2, 4):
            for K in (
                Companion(tau=1, eps=1),
                Companion(tau=0, eps=0),
                Companion(tau=-1, eps=-1),
            ):
                res = tau_oracle(MAZUR, K, n)
                assert isinstance(res.value, int)

    def test_json_dump(self):
        c = build_summand("eps1", WHITEHEAD, Companion(tau=1, eps=1), 0)
        obj = c.to_json_obj()
        assert set(obj) >= {"generators", "arrows"}


class TestStaircase:
    def test_whitehead_t0(self, whitehead_h):
        st = staircase_from_column(whitehead_h, 0)
        gradings = [(g[1], g[2]) for g in st.generators]
        assert gradings == [(0, -2), (-1, -1), (-2, 0)]
        assert all(a > 0 for a in st.alpha)
        assert all(b > 0 for b in st.beta)

    def test_whitehead_t2_single(self, whitehead_h):
        st = staircase_from_column(whitehead_h, 2)
        assert len(st.generators) == 1

    def test_unlink_t1_single(self):
        h = HFunction(unlink_data())
        st = staircase_from_column(h, 1)
        assert [(g[1], g[2]) for g in st.generators] == [(0, -2)]

    def test_top_generator_at_center(self, mazur_h):
        st = staircase_from_column(mazur_h, hi(1))
        assert st.top_a2() == mazur_h.r_of_t(hi(1))
        assert st.generators[0][1] == 0  # gr_w of the top generator


class TestTauOracle:
    def test_matches_closed_form_examples(self):
        cases = [
            (twobridge_profile(5, 3), Companion(tau=-1, eps=1), -3),
            (twobridge_profile(7, 3), Companion(tau=1, eps=-1), 2),
            (twobridge_profile(5, 3), Companion(tau=0, eps=-1), 5),
        ]
        for prof, K, n in cases:
            assert (
                tau_oracle(prof, K, n).value
                == tau_closed_form(prof, K, n).value
            )

    def test_unlink_operator(self):
        prof = unlink_profile()
        for K in (Companion(tau=2, eps=1), Companion(tau=0, eps=0)):
            for n in (-2, 0, 3):
                try:
                    res = tau_oracle(prof, K, n)
                except UnsupportedRegimeError:
                    continue
                assert res.value == 0

    def test_method_tag(self):
        res = tau_oracle(MAZUR, Companion(tau=1, eps=1), 0)
        assert res.method == "oracle"
