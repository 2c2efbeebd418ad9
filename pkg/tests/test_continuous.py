import random
from fractions import Fraction as F

import pytest

from conftest import random_bfunc
from preproj.continuous import (
    Certificate,
    PermutonIdeal,
    d_sub,
    discretize,
    finite_vs_continuous,
    hom_vanishing_cert,
    ideal_leq,
    ideal_summand,
    is_full,
    is_zero_sub,
    left_act,
    member,
    member_quot,
    staircase,
    tau_rigidity_cert,
    u_quot,
)
from preproj.errors import DomainError, NotGridAligned
from preproj.finite import hom_dim, ideal_of, projective, tau_sub, to_rep
from preproj.permuton import boundary_function, from_perm, uniform
from preproj.plfunc import (
    BFunc,
    PLFunc,
    bottom_at,
    bottom_curve,
    pointwise_leq,
    top_at,
    top_curve,
)
from preproj.symgroup import Perm, all_perms, bruhat_leq

W = Perm((2, 5, 3, 4, 1))
HALF = F(1, 2)
TOP_HALF = BFunc(HALF, top_curve(HALF))
BOTTOM_HALF = BFunc(HALF, bottom_curve(HALF))
CHORD_HALF = BFunc(HALF, PLFunc.constant(HALF))


class TestMembership:
    def test_full_projective_contains_generator(self):
        d = d_sub(TOP_HALF)
        assert is_full(d)
        assert member(d, HALF, 0)

    def test_lengths_stop_at_bottom(self):
        d = d_sub(TOP_HALF)
        assert bottom_at(HALF, HALF) == 1
        assert not member(d, HALF, 1)

    def test_bottom_half_membership(self):
        d = d_sub(CHORD_HALF)
        assert not member(d, HALF, F(1, 4))
        assert member(d, HALF, HALF)

    def test_zero_submodule(self):
        d = d_sub(BOTTOM_HALF)
        assert is_zero_sub(d)
        assert not member(d, HALF, F(3, 4))

    def test_quotient_membership(self):
        u = u_quot(CHORD_HALF)
        assert member_quot(u, HALF, F(1, 4))
        assert not member_quot(u, HALF, HALF)

    def test_domain(self):
        with pytest.raises(DomainError):
            member(d_sub(TOP_HALF), F(0), F(1, 2))

    def test_ses_complementarity(self):
        rng = random.Random(21)
        for _ in range(300):
            b = random_bfunc(rng)
            x = F(rng.randint(1, 23), 24)
            lo, hi = top_at(b.k, x), bottom_at(b.k, x)
            span = hi - lo
            length = lo + span * F(rng.randint(0, 11), 12)
            assert member(d_sub(b), x, length) != member_quot(u_quot(b), x, length)

    def test_downward_closure(self):
        rng = random.Random(22)
        for _ in range(300):
            b = random_bfunc(rng)
            x = F(rng.randint(1, 23), 24)
            length = b.f.at(x)
            if member(d_sub(b), x, length):
                deeper = length + (bottom_at(b.k, x) - length) * F(1, 3)
                if deeper < bottom_at(b.k, x):
                    assert member(d_sub(b), x, deeper)


class TestIdealSummands:
    def test_identity_permuton_gives_whole_algebra(self):
        # grid apexes of the grid identity permuton; an arbitrary rational
        # apex is covered by choosing a grid that contains it
        ideal = PermutonIdeal(from_perm(Perm.identity(5)))
        for a in (F(1, 5), F(2, 5), F(4, 5)):
            assert is_full(ideal_summand(ideal, a))
        assert is_full(ideal_summand(PermutonIdeal(from_perm(Perm.identity(4))), F(3, 4)))

    def test_reversal_gives_zero_ideal(self):
        ideal = PermutonIdeal(from_perm(Perm((5, 4, 3, 2, 1))))
        for a in (F(1, 5), F(3, 5), F(4, 5)):
            assert is_zero_sub(ideal_summand(ideal, a))
        rev3 = PermutonIdeal(from_perm(Perm((3, 2, 1))))
        assert is_zero_sub(ideal_summand(rev3, F(1, 3)))

    def test_uniform_gives_corner_chords(self):
        ideal = PermutonIdeal(uniform(4))
        for a in (F(1, 4), F(1, 2), F(3, 4)):
            assert ideal_summand(ideal, a).b.f == PLFunc([(0, a), (1, 1 - a)])

    def test_25341_summand_at_three_fifths(self):
        # the drawn path (0,2/5)..(1,3/5) read in y-down coordinates
        d = ideal_summand(PermutonIdeal(from_perm(W)), F(3, 5))
        assert d.b.f == PLFunc(
            [
                (0, F(3, 5)),
                (F(1, 5), F(2, 5)),
                (F(2, 5), F(3, 5)),
                (F(3, 5), F(2, 5)),
                (F(4, 5), F(3, 5)),
                (1, F(2, 5)),
            ]
        )

    def test_apex_domain(self):
        with pytest.raises(DomainError):
            ideal_summand(PermutonIdeal(uniform(2)), F(0))


class TestLeftAct:
    def test_push_top_down(self):
        g = left_act(TOP_HALF, F(1, 4))
        assert g.k == F(1, 4)
        assert g.at(F(1, 4)) == F(1, 2)

    def test_zero_stays_zero(self):
        g = left_act(BOTTOM_HALF, F(1, 4))
        assert g.f == bottom_curve(F(1, 4))

    def test_same_apex_rejected(self):
        with pytest.raises(DomainError):
            left_act(TOP_HALF, HALF)

    def test_two_sided_witness_25341(self):
        mu = from_perm(W)
        pushed = left_act(boundary_function(mu, F(3, 5)), F(2, 5))
        assert pointwise_leq(boundary_function(mu, F(2, 5)).f, pushed.f)

    def test_two_sided_on_s4_and_uniforms(self):
        mus = [from_perm(w) for w in all_perms(4)] + [uniform(2), uniform(4)]
        for mu in mus:
            apexes = [F(r, mu.m) for r in range(1, mu.m)]
            for q in apexes:
                f_q = boundary_function(mu, q)
                for p in apexes:
                    if p == q:
                        continue
                    assert pointwise_leq(
                        boundary_function(mu, p).f, left_act(f_q, p).f
                    )


class TestIdealOrder:
    def test_everything_inside_identity_ideal(self):
        gid = PermutonIdeal(from_perm(Perm.identity(3)))
        for v in all_perms(3):
            assert ideal_leq(PermutonIdeal(from_perm(v)), gid)

    def test_321_vs_231(self):
        i321 = PermutonIdeal(from_perm(Perm((3, 2, 1))))
        i231 = PermutonIdeal(from_perm(Perm((2, 3, 1))))
        assert ideal_leq(i321, i231)
        assert not ideal_leq(i231, i321)

    def test_matches_reversed_bruhat_on_s4(self):
        perms = list(all_perms(4))
        ideals = {w.one_line: PermutonIdeal(from_perm(w)) for w in perms}
        for u in perms:
            for v in perms:
                assert ideal_leq(ideals[u.one_line], ideals[v.one_line]) == bruhat_leq(
                    v, u
                )


class TestBridge:
    def test_25341(self):
        assert finite_vs_continuous(W, 2)
        assert finite_vs_continuous(W, 1)

    def test_identity(self):
        for i in range(1, 5):
            assert finite_vs_continuous(Perm.identity(5), i)

    def test_exhaustive_s4(self):
        for w in all_perms(4):
            for i in range(1, 4):
                assert finite_vs_continuous(w, i)


class TestCertificates:
    def test_equal_curves_constant(self):
        assert hom_vanishing_cert(TOP_HALF, TOP_HALF) is Certificate.CONSTANT

    def test_permuton_pair_increasing(self):
        mu = from_perm(W)
        cert = hom_vanishing_cert(
            boundary_function(mu, F(1, 5)), boundary_function(mu, F(3, 5))
        )
        assert cert is Certificate.INCREASING

    def test_tent_vs_constant_no_certificate(self):
        assert hom_vanishing_cert(TOP_HALF, CHORD_HALF) is Certificate.NO_CERTIFICATE

    def test_rigidity_cert_uniform(self):
        assert tau_rigidity_cert(uniform(2), F(1, 4), F(3, 4)) is Certificate.INCREASING

    def test_rigidity_cert_equal_apexes(self):
        assert tau_rigidity_cert(from_perm(W), F(2, 5), F(2, 5)) is Certificate.CONSTANT

    def test_rigidity_cert_decreasing(self):
        assert tau_rigidity_cert(from_perm(W), F(4, 5), F(1, 5)) is Certificate.DECREASING

    def test_grid_sweep_never_fails(self):
        mus = [from_perm(W), uniform(2), uniform(4), from_perm(Perm((2, 4, 1, 3)))]
        grid = [F(t, 21) for t in range(1, 21)]
        for mu in mus:
            for a in grid:
                for b in grid:
                    cert = tau_rigidity_cert(mu, a, b)
                    if a < b:
                        assert cert is Certificate.INCREASING
                    elif a > b:
                        assert cert is Certificate.DECREASING
                    else:
                        assert cert is Certificate.CONSTANT


class TestDiscretize:
    def test_full_projective(self):
        d = d_sub(BFunc(F(2, 5), top_curve(F(2, 5))))
        assert discretize(d, 5) == projective(2, 5)

    def test_ideal_summand_matches_discrete_ideal(self):
        d = ideal_summand(PermutonIdeal(from_perm(W)), F(2, 5))
        assert discretize(d, 5) == ideal_of(W)[1]

    def test_flat_curve_needs_refinement(self):
        with pytest.raises(NotGridAligned):
            discretize(d_sub(CHORD_HALF), 4)

    def test_off_grid_apex(self):
        with pytest.raises(NotGridAligned):
            discretize(d_sub(BFunc(F(1, 3), top_curve(F(1, 3)))), 4)

    def test_staircase_of_flat_chord(self):
        cm = staircase(d_sub(CHORD_HALF), 8)
        assert cm.curve.units() == (4, 3, 4, 3, 4, 3, 4, 3, 4)

    def test_staircase_fixes_grid_curves(self):
        d = ideal_summand(PermutonIdeal(from_perm(W)), F(2, 5))
        assert staircase(d, 5) == discretize(d, 5)

    def test_staircase_sits_weakly_above(self):
        for a in (F(1, 4), F(1, 2), F(3, 4)):
            d = ideal_summand(PermutonIdeal(uniform(4)), a)
            cm = staircase(d, 8)
            for j, v in enumerate(cm.curve.values):
                assert 0 <= d.b.f.at(F(j, 8)) - v < F(2, 8)


class TestDiscreteCorroboration:
    def test_staircase_hom_vanishing(self):
        cases = [(uniform(2), 8), (uniform(4), 8)]
        cases += [(from_perm(w), 8) for w in all_perms(4)]
        for mu, n in cases:
            ideal = PermutonIdeal(mu)
            apexes = [
                F(r, mu.m)
                for r in range(1, mu.m)
                if (F(r, mu.m) * n).denominator == 1
            ]
            subs = {a: staircase(ideal_summand(ideal, a), n) for a in apexes}
            for a in apexes:
                rep = to_rep(subs[a])
                for b in apexes:
                    quot = to_rep(tau_sub(subs[b]))
                    assert hom_dim(rep, quot) == 0
