"""Sheet modules, their morphism combinatorics, and the brick classification.

A sheet is the image of a decorous submodule of P_k inside a decorous
quotient of P_k; it is carried entirely by its two boundary curves.  Bricks
are exactly the simple modules and the sawtooth modules (alternating +-1
boundary data), and deep modules (nonzero length-two loop action) are never
bricks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    BadShift,
    DomainError,
    HypothesisFailed,
    NotDecorous,
    NotGenerator,
    NotGridAligned,
    NotInSupport,
)
from .finite import CurveModule, QuiverRep, hom_dim, loop_action, to_rep
from .plfunc import BFunc, PLFunc, pointwise_sub, to_bfunc, vshift
from .rat import frac

ZERO = Fraction(0)
ONE = Fraction(1)

Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Sheet:
    """Image of a composition D -> P_k -> U for decorous D and U.

    ``up`` bounds the submodule from above, ``down`` the quotient from below;
    the sheet is supported where up < down and is zero elsewhere.
    """

    k: Fraction
    up: BFunc
    down: BFunc


def sheet_new(k, up: BFunc, down: BFunc) -> Sheet:
    k = frac(k)
    if up.k != k or down.k != k:
        raise NotDecorous(f"boundary curves must live at apex {k}")
    return Sheet(k, up, down)


def _positive_intervals(d: PLFunc) -> list[Interval]:
    """Maximal open intervals where d > 0, with exact rational endpoints."""
    xs = [x for x, _ in d.breakpoints]
    pts: list[Fraction] = []
    for x0, x1 in zip(xs, xs[1:]):
        pts.append(x0)
        y0, y1 = d.at(x0), d.at(x1)
        if (y0 < 0 < y1) or (y1 < 0 < y0):
            pts.append(x0 + (x1 - x0) * y0 / (y0 - y1))
    pts.append(xs[-1])

    # After root insertion the sign is constant on each open subinterval;
    # a zero value at a shared endpoint splits the support there.
    out: list[Interval] = []
    open_at: Optional[Fraction] = None
    for p0, p1 in zip(pts, pts[1:]):
        positive = d.at((p0 + p1) / 2) > 0
        if positive and open_at is None:
            open_at = p0
        if open_at is not None:
            if not positive:
                out.append((open_at, p0))
                open_at = None
            elif d.at(p1) <= 0 or p1 == pts[-1]:
                out.append((open_at, p1))
                open_at = None
    return out


def sheet_support(s: Sheet) -> list[Interval]:
    """Maximal open intervals where the sheet is nonzero (up < down)."""
    return _positive_intervals(pointwise_sub(s.down.f, s.up.f))


def is_zero_sheet(s: Sheet) -> bool:
    return not sheet_support(s)


def is_deep_sheet(s: Sheet) -> bool:
    """Every nonzero sheet is deep: a short loop acts nonzero on its interior."""
    return bool(sheet_support(s))


def _in_support(s: Sheet, y: Fraction) -> bool:
    return any(lo < y < hi for lo, hi in sheet_support(s))


def generators(s: Sheet) -> tuple[Fraction, ...]:
    """Generating positions of the sheet: breakpoints of the upper boundary
    inside the support whose left slope is < 1 and right slope is > -1.

    The 1-Lipschitz bound propagates strictness along segments, so this
    breakpoint scan decides the quantified generator condition; a segment
    with slope strictly inside (-1,1) generates at all its points and is
    represented here by its endpoints.
    """
    support = sheet_support(s)
    slopes = s.up.f.slopes()
    pts = s.up.f.breakpoints
    out = []
    for t in range(1, len(pts) - 1):
        y = pts[t][0]
        if not any(lo < y < hi for lo, hi in support):
            continue
        if slopes[t - 1] < 1 and slopes[t] > -1:
            out.append(y)
    return tuple(out)


def cone_contains(s: Sheet, s_prime: Sheet, y, a, z, b) -> bool:
    """Is (z, b) in the cone C_a(y) of the target sheet: a pathlike of length
    b in the target at z, reachable from height a + up(y) at y?"""
    y, a, z, b = frac(y), frac(a), frac(z), frac(b)
    in_target = s_prime.up.f.at(z) <= b < s_prime.down.f.at(z)
    return in_target and b - (a + s.up.f.at(y)) >= abs(y - z)


def delta_fn(s: Sheet, s_prime: Sheet, a) -> PLFunc:
    """Headroom function Delta(y) = down'(y) - (a + up(y))."""
    return vshift(pointwise_sub(s_prime.down.f, s.up.f), -frac(a))


def b_interval(s: Sheet, s_prime: Sheet, y, a) -> Optional[Interval]:
    """Largest open interval around y on which Delta > 0; None if Delta(y) <= 0."""
    y = frac(y)
    if not _in_support(s, y):
        raise NotInSupport(f"{y} is outside the support of the source sheet")
    delta = delta_fn(s, s_prime, a)
    if delta.at(y) <= 0:
        return None
    for lo, hi in _positive_intervals(delta):
        if lo < y < hi:
            return (lo, hi)
    return None


def codependence_class(s: Sheet, s_prime: Sheet, y, a) -> tuple[Fraction, ...]:
    """Generators of the source sheet pinned together at shift a: those inside
    the headroom interval around y."""
    interval = b_interval(s, s_prime, y, a)
    if interval is None:
        return ()
    lo, hi = interval
    return tuple(g for g in generators(s) if lo < g < hi)


def in_range_of_codependence(s: Sheet, s_prime: Sheet, y, a, b) -> bool:
    """Is shift b still coherent with the class at shift a: all members that
    survive at shift b land in one common class."""
    a, b = frac(a), frac(b)
    if b < a:
        raise BadShift(f"shift {b} below the base shift {a}")
    base = codependence_class(s, s_prime, y, a)
    classes = []
    for z in base:
        cls = codependence_class(s, s_prime, z, b)
        if cls:
            classes.append(cls)
    return all(cls == classes[0] for cls in classes)


def elementary_exists(s: Sheet, s_prime: Sheet, y, a) -> bool:
    """Does an elementary morphism sending the generator at y to height
    a + up(y) exist?  Requires the image to land in the target sheet and the
    shifted boundaries to nest over the whole headroom interval:
    up' <= a + up < down' <= a + down on B_a(y)."""
    y, a = frac(y), frac(a)
    if y not in generators(s):
        raise NotGenerator(f"{y} is not a generator of the source sheet")
    if not (s_prime.up.f.at(y) <= a + s.up.f.at(y) < s_prime.down.f.at(y)):
        return False
    interval = b_interval(s, s_prime, y, a)
    if interval is None:
        return False
    lo, hi = interval
    up_shift = vshift(s.up.f, a)
    down_shift = vshift(s.down.f, a)
    return _leq_on(s_prime.up.f, up_shift, lo, hi) and _leq_on(
        s_prime.down.f, down_shift, lo, hi
    )


def _leq_on(f: PLFunc, g: PLFunc, lo: Fraction, hi: Fraction) -> bool:
    """f <= g on [lo, hi]: checked at lo, hi and every breakpoint between."""
    xs = {lo, hi}
    for x in set(f.xs()) | set(g.xs()):
        if lo < x < hi:
            xs.add(x)
    return all(f.at(x) <= g.at(x) for x in xs)


def is_deep(rep: QuiverRep) -> bool:
    """Does some length-two loop act nonzero on the representation?"""
    for j in range(1, rep.n - 1):
        if any(v for row in loop_action(rep, j) for v in row):
            return True
    return False


@dataclass(frozen=True)
class SawtoothDesc:
    """Alternating +-1 boundary data on [a, b].

    teeth[t] = (x, value) with slopes alternating between consecutive teeth:
    -1 out of even-indexed teeth and +1 out of odd-indexed ones, the parity
    fixed by the first slope.  endpoint_flags record whether a and b belong
    to the support of the module the data describes.
    """

    a: Fraction
    b: Fraction
    teeth: tuple[tuple[Fraction, Fraction], ...]
    endpoint_flags: tuple[bool, bool]

    def __init__(self, a, b, teeth, endpoint_flags=(True, True)) -> None:
        a, b = frac(a), frac(b)
        pts = tuple((frac(x), frac(v)) for x, v in teeth)
        if len(pts) < 2:
            raise DomainError("a sawtooth needs at least two teeth")
        if not (0 <= a < b <= 1) or pts[0][0] != a or pts[-1][0] != b:
            raise DomainError("teeth must span [a, b] inside [0, 1]")
        slopes = []
        for (x0, v0), (x1, v1) in zip(pts, pts[1:]):
            if x0 >= x1:
                raise DomainError("teeth must strictly increase")
            slope = (v1 - v0) / (x1 - x0)
            if slope != 1 and slope != -1:
                raise DomainError("sawtooth slopes must be exactly +-1")
            slopes.append(slope)
        for s0, s1 in zip(slopes, slopes[1:]):
            if s0 == s1:
                raise DomainError("sawtooth slopes must alternate")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "teeth", pts)
        object.__setattr__(self, "endpoint_flags", tuple(bool(f) for f in endpoint_flags))

    def first_slope(self) -> Fraction:
        (x0, v0), (x1, v1) = self.teeth[0], self.teeth[1]
        return (v1 - v0) / (x1 - x0)

    def min_index_odd(self) -> bool:
        # slope -1 leaves an even-indexed tooth, slope +1 an odd-indexed one
        return self.first_slope() == 1

    def max_index_odd(self) -> bool:
        flips = len(self.teeth) - 1
        return self.min_index_odd() ^ (flips % 2 == 1)


@dataclass(frozen=True)
class SimpleModule:
    """The simple module concentrated at one interior point."""

    x: Fraction

    def __init__(self, x) -> None:
        x = frac(x)
        if not 0 < x < 1:
            raise DomainError(f"support point {x} outside (0,1)")
        object.__setattr__(self, "x", x)


def is_sawtooth(f: PLFunc, a, b) -> Optional[SawtoothDesc]:
    """Extract the teeth of f restricted to [a, b] if every slope there is
    exactly +-1 (alternation is then automatic); None otherwise."""
    a, b = frac(a), frac(b)
    if not 0 <= a < b <= 1:
        raise DomainError(f"[{a},{b}] is not a subinterval of [0,1]")
    # Breakpoints of f strictly inside (a, b) are genuine slope changes, so
    # these points are the teeth once every slope is known to be +-1.
    xs = [a] + [x for x in f.xs() if a < x < b] + [b]
    pts = [(x, f.at(x)) for x in xs]
    for (x0, v0), (x1, v1) in zip(pts, pts[1:]):
        slope = (v1 - v0) / (x1 - x0)
        if slope != 1 and slope != -1:
            return None
    return SawtoothDesc(a, b, pts)


def decorous_cover(st: SawtoothDesc) -> BFunc:
    """The decorous submodule covering the sawtooth module: extend the teeth
    constantly outside [a, b] and take the canonical boundary class.

    Fails when the sawtooth starts (ends) with a rising (falling) ray pinned
    to the boundary of [0, 1]; no covering projective exists there.
    """
    if st.a == 0 and st.min_index_odd():
        raise HypothesisFailed("sawtooth starts at 0 on an odd tooth")
    if st.b == 1 and st.max_index_odd():
        raise HypothesisFailed("sawtooth ends at 1 on an odd tooth")
    pts = list(st.teeth)
    if st.a > 0:
        pts.insert(0, (ZERO, pts[0][1]))
    if st.b < 1:
        pts.append((ONE, pts[-1][1]))
    return to_bfunc(PLFunc(pts))


def sawtooth_rep(st: SawtoothDesc, n: int) -> QuiverRep:
    """The thin representation of a grid-aligned sawtooth: one basis vector
    per interior grid column of [a, b], with the rightward arrow acting on
    rising segments and the leftward arrow on falling ones."""
    n = int(n)
    for x, _ in st.teeth:
        if (x * n).denominator != 1:
            raise NotGridAligned(f"tooth at {x} off the 1/{n} grid")
    lo, hi = int(st.a * n), int(st.b * n)
    cols = [j for j in range(max(lo, 1), min(hi, n - 1) + 1)]
    if not st.endpoint_flags[0] and lo >= 1 and lo in cols:
        cols.remove(lo)
    if not st.endpoint_flags[1] and hi <= n - 1 and hi in cols:
        cols.remove(hi)
    support = set(cols)
    dims = tuple(1 if j in support else 0 for j in range(1, n))

    def slope_on(j: int) -> Fraction:
        # slope of the sawtooth on (j/n, (j+1)/n)
        mid = Fraction(2 * j + 1, 2 * n)
        for (x0, v0), (x1, v1) in zip(st.teeth, st.teeth[1:]):
            if x0 <= mid <= x1:
                return (v1 - v0) / (x1 - x0)
        raise NotGridAligned(f"column {j} outside the sawtooth domain")

    alpha = []
    alpha_star = []
    for e in range(n - 2):
        j = e + 1
        fwd = [[ZERO] * dims[e] for _ in range(dims[e + 1])]
        bwd = [[ZERO] * dims[e + 1] for _ in range(dims[e])]
        if j in support and j + 1 in support:
            if slope_on(j) == 1:
                fwd[0][0] = ONE
            else:
                bwd[0][0] = ONE
        alpha.append(tuple(tuple(r) for r in fwd))
        alpha_star.append(tuple(tuple(r) for r in bwd))
    return QuiverRep(n, dims, tuple(alpha), tuple(alpha_star))


def is_brick(module) -> bool:
    """Brick test: simples and sawtooth modules are bricks; a curve-backed
    module is tested by its endomorphism dimension."""
    if isinstance(module, SimpleModule):
        return True
    if isinstance(module, SawtoothDesc):
        return True
    if isinstance(module, CurveModule):
        rep = to_rep(module)
        return hom_dim(rep, rep) == 1
    raise DomainError(f"not a module descriptor: {module!r}")
