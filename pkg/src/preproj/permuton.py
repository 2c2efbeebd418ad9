"""Grid permutons: doubly stochastic measures on the unit square.

A GridPermuton carries an m x m matrix of cell masses, uniform within each
cell, with every row and column summing to 1/m.  Rows index the vertical
coordinate y (increasing downwards) and columns the horizontal coordinate x,
so ``mass[r][c]`` is the measure of ((c/m, (c+1)/m] x (r/m, (r+1)/m]).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DomainError
from .plfunc import BFunc, PLFunc
from .rat import frac
from .symgroup import Perm

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class GridPermuton:
    m: int
    mass: tuple[tuple[Fraction, ...], ...]

    def __init__(self, m: int, mass: Sequence[Sequence]) -> None:
        m = int(m)
        if m < 1:
            raise DomainError("grid size must be positive")
        rows = tuple(tuple(frac(v) for v in row) for row in mass)
        if len(rows) != m or any(len(row) != m for row in rows):
            raise DomainError(f"mass matrix must be {m}x{m}")
        if any(v < 0 for row in rows for v in row):
            raise DomainError("cell masses must be nonnegative")
        target = Fraction(1, m)
        for r, row in enumerate(rows):
            if sum(row) != target:
                raise DomainError(f"row {r} does not sum to 1/{m}")
        for c in range(m):
            if sum(rows[r][c] for r in range(m)) != target:
                raise DomainError(f"column {c} does not sum to 1/{m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "mass", rows)


def from_perm(w: Perm) -> GridPermuton:
    """Mass 1/n on the cell in row w(i), column i, for each i."""
    n = w.n
    cell = Fraction(1, n)
    mass = [[ZERO] * n for _ in range(n)]
    for i in range(1, n + 1):
        mass[w(i) - 1][i - 1] = cell
    return GridPermuton(n, mass)


def uniform(m: int) -> GridPermuton:
    """Lebesgue measure on the square, carried on an m x m grid."""
    cell = Fraction(1, m * m)
    return GridPermuton(m, [[cell] * m for _ in range(m)])


def _clamp01(v: Fraction) -> Fraction:
    return ZERO if v < 0 else ONE if v > 1 else v


def cdf(mu: GridPermuton, a, b) -> Fraction:
    """Measure of [0,a] x [0,b], bilinear within each cell."""
    a, b = frac(a), frac(b)
    if not (0 <= a <= 1 and 0 <= b <= 1):
        raise DomainError(f"({a},{b}) outside the unit square")
    m = mu.m
    total = ZERO
    for r in range(m):
        fy = _clamp01(b * m - r)
        if fy == 0:
            continue
        for c in range(m):
            cell = mu.mass[r][c]
            if cell == 0:
                continue
            fx = _clamp01(a * m - c)
            if fx:
                total += cell * fx * fy
    return total


def boundary_function(mu: GridPermuton, y) -> BFunc:
    """The curve f(x) = -2 mu([0,x] x [0,y]) + y + x bounding the ideal
    summand of mu at apex y; breaks only at column boundaries."""
    y = frac(y)
    if not 0 < y < 1:
        raise DomainError(f"apex {y} outside (0,1)")
    m = mu.m
    samples = []
    for c in range(m + 1):
        x = Fraction(c, m)
        samples.append(-2 * cdf(mu, x, y) + y + x)
    return BFunc(y, PLFunc.from_samples(samples))


def refine(mu: GridPermuton, factor: int) -> GridPermuton:
    """Split every cell into factor x factor uniform subcells; same measure."""
    factor = int(factor)
    if factor < 1:
        raise DomainError("refinement factor must be >= 1")
    if factor == 1:
        return mu
    m2 = mu.m * factor
    scale = Fraction(1, factor * factor)
    mass = [[ZERO] * m2 for _ in range(m2)]
    for r in range(mu.m):
        for c in range(mu.m):
            v = mu.mass[r][c] * scale
            if v == 0:
                continue
            for dr in range(factor):
                for dc in range(factor):
                    mass[r * factor + dr][c * factor + dc] = v
    return GridPermuton(m2, mass)


def _corner_cdfs(mu: GridPermuton) -> list[list[Fraction]]:
    """Prefix sums: cdf at the grid corners (i/m, j/m), indexed [j][i]."""
    m = mu.m
    table = [[ZERO] * (m + 1) for _ in range(m + 1)]
    for r in range(1, m + 1):
        for c in range(1, m + 1):
            table[r][c] = (
                table[r - 1][c]
                + table[r][c - 1]
                - table[r - 1][c - 1]
                + mu.mass[r - 1][c - 1]
            )
    return table


def permuton_bruhat_leq(mu: GridPermuton, nu: GridPermuton) -> bool:
    """mu <= nu in the permuton Bruhat order, i.e. cdf(mu) >= cdf(nu)
    everywhere.  The CDF difference is bilinear on each common-grid cell, so
    checking the interior corners of the common grid decides it exactly."""
    common = lcm(mu.m, nu.m)
    a = _corner_cdfs(refine(mu, common // mu.m))
    b = _corner_cdfs(refine(nu, common // nu.m))
    return all(
        a[r][c] >= b[r][c] for r in range(1, common) for c in range(1, common)
    )


def permuton_equal(mu: GridPermuton, nu: GridPermuton) -> bool:
    """Equality as measures (mass matrices agree on the common refinement)."""
    common = lcm(mu.m, nu.m)
    return refine(mu, common // mu.m).mass == refine(nu, common // nu.m).mass
