"""Decorous sub/quotient modules of continuous projectives and permuton ideals.

A decorous submodule of the continuous projective P_k is determined by a
boundary curve in the class of P_k (a BFunc at apex k): the pathlike element
of length l in column x belongs to the submodule iff f(x) <= l < bottom(x),
where bottom is the lower boundary of the diamond.  The quotient by it keeps
the lengths with top(x) <= l < f(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from .errors import CertificateFailure, DomainError, NotGridAligned
from .finite import CurveModule, DiamondCurve, Kind, ideal_of
from .permuton import GridPermuton, boundary_function, from_perm, permuton_bruhat_leq
from .plfunc import (
    BFunc,
    MonotoneClass,
    bottom_at,
    bottom_curve,
    monotone_class,
    pointwise_leq,
    pointwise_min,
    pointwise_sub,
    top_at,
    top_curve,
    vshift,
)
from .rat import frac
from .symgroup import Perm


@dataclass(frozen=True)
class DecorousSub:
    """Decorous submodule of P_k, boundary from above (deeper lengths kept)."""

    b: BFunc


@dataclass(frozen=True)
class DecorousQuot:
    """Decorous quotient of P_k, boundary from below (shallower lengths kept)."""

    b: BFunc


def d_sub(f: BFunc) -> DecorousSub:
    return DecorousSub(f)


def u_quot(f: BFunc) -> DecorousQuot:
    return DecorousQuot(f)


def is_full(d: DecorousSub) -> bool:
    """All of P_k: the boundary is the diamond's top curve."""
    return d.b.f == top_curve(d.b.k)


def is_zero_sub(d: DecorousSub) -> bool:
    """The zero submodule: the boundary is the diamond's bottom curve."""
    return d.b.f == bottom_curve(d.b.k)


def member(d: DecorousSub, x, length) -> bool:
    """Does the pathlike of the given length at column x lie in the submodule?"""
    x, length = frac(x), frac(length)
    if not 0 < x < 1:
        raise DomainError(f"column {x} outside (0,1)")
    if length < 0:
        raise DomainError("lengths are nonnegative")
    return d.b.f.at(x) <= length < bottom_at(d.b.k, x)


def member_quot(u: DecorousQuot, x, length) -> bool:
    """Does the pathlike of the given length at column x survive in the quotient?"""
    x, length = frac(x), frac(length)
    if not 0 < x < 1:
        raise DomainError(f"column {x} outside (0,1)")
    if length < 0:
        raise DomainError("lengths are nonnegative")
    return top_at(u.b.k, x) <= length < u.b.f.at(x)


@dataclass(frozen=True)
class PermutonIdeal:
    """The two-sided ideal of a permuton; summands materialised per query."""

    mu: GridPermuton


def ideal_summand(ideal: PermutonIdeal, a) -> DecorousSub:
    """The summand of the ideal inside P_a."""
    a = frac(a)
    if not 0 < a < 1:
        raise DomainError(f"apex {a} outside (0,1)")
    return d_sub(boundary_function(ideal.mu, a))


def left_act(f: BFunc, p) -> BFunc:
    """Push the submodule bounded by f (inside P_q) into P_p by the leftward
    or rightward arrow of length |q - p|: shift the curve down by |q - p| and
    clamp to the diamond of P_p."""
    p = frac(p)
    q = f.k
    if not 0 < p < 1:
        raise DomainError(f"target apex {p} outside (0,1)")
    if p == q:
        raise DomainError("left action moves between distinct apexes")
    g = pointwise_min(bottom_curve(p), vshift(f.f, abs(q - p)))
    return BFunc(p, g)


def _comparison_apexes(mu: GridPermuton, nu: GridPermuton) -> list[Fraction]:
    common = lcm(mu.m, nu.m)
    apexes = [Fraction(r, common) for r in range(1, common)]
    apexes += [Fraction(2 * r + 1, 2 * common) for r in range(common)]
    return sorted(apexes)


def ideal_leq(a: PermutonIdeal, b: PermutonIdeal) -> bool:
    """Ideal inclusion I_mu <= I_nu, decided two ways and cross-checked:
    summand curves of mu dominate those of nu at every apex of the common
    grid (and cell midpoints), equivalently cdf(mu) <= cdf(nu) everywhere."""
    mu, nu = a.mu, b.mu
    by_curves = all(
        pointwise_leq(boundary_function(nu, y).f, boundary_function(mu, y).f)
        for y in _comparison_apexes(mu, nu)
    )
    by_cdf = permuton_bruhat_leq(nu, mu)
    if by_curves != by_cdf:
        raise CertificateFailure(
            "curve and CDF routes disagree on ideal inclusion"
        )
    return by_curves


def finite_vs_continuous(w: Perm, i: int) -> bool:
    """Does the ideal curve of w at vertex i equal the boundary function of
    the permuton of w at apex i/n?  Exact structural comparison."""
    n = w.n
    if not 1 <= i <= n - 1:
        raise DomainError(f"vertex {i} outside 1..{n - 1}")
    discrete = ideal_of(w)[i - 1].curve.as_plfunc()
    continuous = boundary_function(from_perm(w), Fraction(i, n)).f
    return discrete == continuous


class Certificate(Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    CONSTANT = "constant"
    NO_CERTIFICATE = "none"


_CLASS_TO_CERT = {
    MonotoneClass.WEAKLY_INCREASING: Certificate.INCREASING,
    MonotoneClass.WEAKLY_DECREASING: Certificate.DECREASING,
    MonotoneClass.CONSTANT: Certificate.CONSTANT,
    MonotoneClass.NEITHER: Certificate.NO_CERTIFICATE,
}


def hom_vanishing_cert(f: BFunc, g: BFunc) -> Certificate:
    """Monotonicity certificate for Hom(D_f, U_g) = 0: a weakly monotone
    difference f - g forces vanishing.  NO_CERTIFICATE only means the
    criterion does not apply."""
    return _CLASS_TO_CERT[monotone_class(pointwise_sub(f.f, g.f))]


def tau_rigidity_cert(mu: GridPermuton, a, b) -> Certificate:
    """Certificate that Hom(D_mu^a, U_mu^b) = 0; always exists, increasing
    for a <= b and decreasing for a >= b."""
    a, b = frac(a), frac(b)
    if not (0 < a < 1 and 0 < b < 1):
        raise DomainError("apexes must lie in (0,1)")
    cert = hom_vanishing_cert(boundary_function(mu, a), boundary_function(mu, b))
    if cert is Certificate.NO_CERTIFICATE:
        raise CertificateFailure(
            f"no monotone certificate for apexes ({a},{b}); this contradicts "
            "the rigidity of permuton ideals and indicates a library bug"
        )
    return cert


def discretize(d: DecorousSub, n: int) -> CurveModule:
    """Read an already grid-aligned boundary as a diamond curve: apex i/n,
    breakpoints on the 1/n grid, +-1 slopes between samples."""
    n = int(n)
    k = d.b.k
    if (k * n).denominator != 1:
        raise NotGridAligned(f"apex {k} not on the 1/{n} grid")
    i = int(k * n)
    for x, _ in d.b.f.breakpoints:
        if (x * n).denominator != 1:
            raise NotGridAligned(f"breakpoint at {x} off the 1/{n} grid")
    samples = [d.b.f.at(Fraction(j, n)) for j in range(n + 1)]
    step = Fraction(1, n)
    for s0, s1 in zip(samples, samples[1:]):
        if abs(s1 - s0) != step:
            raise NotGridAligned("curve slopes are not +-1 on the grid")
    return CurveModule(Kind.SUB, DiamondCurve(i, n, samples))


def staircase(d: DecorousSub, n: int) -> CurveModule:
    """Discretise with refinement: replace the boundary by the finest +-1
    staircase above it on the 1/n grid (largest lattice value <= f at each
    column, on the parity lattice of the diamond)."""
    n = int(n)
    k = d.b.k
    if (k * n).denominator != 1:
        raise NotGridAligned(f"apex {k} not on the 1/{n} grid")
    i = int(k * n)
    units = []
    for j in range(n + 1):
        t = d.b.f.at(Fraction(j, n)) * n
        fl = t.numerator // t.denominator
        if (fl - i - j) % 2:
            fl -= 1
        units.append(fl)
    return CurveModule(Kind.SUB, DiamondCurve(i, n, (Fraction(u, n) for u in units)))
