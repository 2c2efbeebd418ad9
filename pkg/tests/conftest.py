"""Shared independent oracles and generators for the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from preproj.plfunc import BFunc, PLFunc, to_bfunc
from preproj.symgroup import Perm, all_perms, length


def bruhat_by_covers(n: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], bool]:
    """Bruhat order computed independently: transitive closure of the cover
    relation v = u * t (t any transposition) with length(v) = length(u) + 1."""
    perms = list(all_perms(n))
    index = {w.one_line: t for t, w in enumerate(perms)}
    above = [set() for _ in perms]
    for t, u in enumerate(perms):
        lu = length(u)
        for p in range(1, n + 1):
            for q in range(p + 1, n + 1):
                ol = list(u.one_line)
                ol[p - 1], ol[q - 1] = ol[q - 1], ol[p - 1]
                v = Perm(ol)
                if length(v) == lu + 1:
                    above[t].add(index[v.one_line])
    # transitive closure by length-ordered propagation
    order = sorted(range(len(perms)), key=lambda t: length(perms[t]), reverse=True)
    for t in order:
        closure = set(above[t])
        for s in list(above[t]):
            closure |= above[s]
        above[t] = closure
    table = {}
    for t, u in enumerate(perms):
        for s, v in enumerate(perms):
            table[(u.one_line, v.one_line)] = (t == s) or (s in above[t])
    return table


def count_cdf_oracle(w: Perm, a: Fraction, b: Fraction) -> Fraction:
    """cdf of the permuton of w at grid-aligned corners, by counting pairs."""
    n = w.n
    i = int(a * n)
    j = int(b * n)
    return Fraction(sum(1 for p in range(1, i + 1) if w(p) <= j), n)


def random_lipschitz_plfunc(rng: random.Random, max_den: int = 8) -> PLFunc:
    """A random 1-Lipschitz PL function with breakpoints on a random grid."""
    den = rng.randint(2, max_den)
    xs = [Fraction(j, den) for j in range(den + 1)]
    y = Fraction(rng.randint(0, 2 * den), 2 * den)
    pts = [(xs[0], y)]
    for x0, x1 in zip(xs, xs[1:]):
        step = x1 - x0
        dy = Fraction(rng.randint(-2 * den, 2 * den), 2 * den)
        if dy > step:
            dy = step
        if dy < -step:
            dy = -step
        y = y + dy
        pts.append((x1, y))
    return PLFunc(pts)


def random_bfunc(rng: random.Random, max_den: int = 8) -> BFunc:
    """A random boundary class representative (canonical BFunc)."""
    while True:
        f = random_lipschitz_plfunc(rng, max_den)
        d = f.at(1) - f.at(0)
        if d != 1 and d != -1:
            return to_bfunc(f)


def s4_pairs():
    return list(itertools.product(all_perms(4), all_perms(4)))
