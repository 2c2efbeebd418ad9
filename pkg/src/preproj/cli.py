"""Command-line front end.

Commands::

    preproj ideal perm <w> [--svg FILE]
    preproj ideal permuton <file.json> --at <rat>
    preproj order bruhat <u> <v>
    preproj order permuton <A.json> <B.json>
    preproj order ideal <A.json> <B.json>
    preproj check <name> [--n N] [--perm W] [--sample K] [--files F ...] [--jobs J]
    preproj brick check <file.json>
    preproj sheet analyze <file.json> [--against FILE] [--cone y,a] [--codep y,a] [--multi a,...]
    preproj render <spec.json> -o out.svg

Permutations are digit strings for n <= 9 ("25341") and JSON arrays
otherwise.  Check reports are JSON lines followed by a summary record; the
exit code is 0 exactly when every case passed.  PREPROJ_MAX_N (default 6)
bounds the exhaustive sweeps.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from multiprocessing import Pool

from . import continuous, finite, jsonio, permuton, render, sheets, symgroup
from .errors import ParseError, PreprojError, TooLarge
from .limits import scale_limit
from .plfunc import pointwise_leq
from .rat import frac, rat_str
from .symgroup import Perm


def parse_perm(text: str) -> Perm:
    text = text.strip()
    try:
        if text.startswith("["):
            return Perm(json.loads(text))
        return Perm(int(ch) for ch in text)
    except (ValueError, PreprojError) as exc:
        raise ParseError(f"cannot parse permutation {text!r}") from exc


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {path}: {exc}") from exc


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


# ---------------------------------------------------------------- ideal


def cmd_ideal_perm(args) -> int:
    w = parse_perm(args.w)
    summands = finite.ideal_of(w)
    out = {
        "w": str(w),
        "n": w.n,
        "summands": [
            {**jsonio.curve_module_to_json(m), "zero": finite.is_zero(m)}
            for m in summands
        ],
    }
    _emit(out)
    if args.svg:
        spec = render.RenderSpec(1000, tuple(("curve_module", m) for m in summands))
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render.render_svg(spec))
    return 0


def cmd_ideal_permuton(args) -> int:
    mu = jsonio.permuton_from_json(_load_json(args.file))
    summand = continuous.ideal_summand(continuous.PermutonIdeal(mu), frac(args.at))
    _emit(jsonio.bfunc_to_json(summand.b))
    return 0


# ---------------------------------------------------------------- order


def _order_record(leq: bool, geq: bool) -> dict:
    return {"leq": leq, "geq": geq, "comparable": leq or geq}


def cmd_order_bruhat(args) -> int:
    u, v = parse_perm(args.u), parse_perm(args.v)
    _emit(_order_record(symgroup.bruhat_leq(u, v), symgroup.bruhat_leq(v, u)))
    return 0


def cmd_order_permuton(args) -> int:
    a = jsonio.permuton_from_json(_load_json(args.a))
    b = jsonio.permuton_from_json(_load_json(args.b))
    _emit(
        _order_record(
            permuton.permuton_bruhat_leq(a, b), permuton.permuton_bruhat_leq(b, a)
        )
    )
    return 0


def cmd_order_ideal(args) -> int:
    a = continuous.PermutonIdeal(jsonio.permuton_from_json(_load_json(args.a)))
    b = continuous.PermutonIdeal(jsonio.permuton_from_json(_load_json(args.b)))
    _emit(_order_record(continuous.ideal_leq(a, b), continuous.ideal_leq(b, a)))
    return 0


# ---------------------------------------------------------------- check


def _guard(n: int, exhaustive: bool = False) -> None:
    # exhaustive sweeps over all of S_n stop one rank earlier than targeted runs
    limit = scale_limit() - 1 if exhaustive else scale_limit()
    if n > limit:
        raise TooLarge(
            f"n={n} exceeds the guard ({limit}); set PREPROJ_MAX_N to override"
        )


def _case_mizuno(payload) -> dict:
    one_line, n = payload
    w = Perm(one_line)
    words = symgroup.all_reduced_words(w)
    reference = finite.ideal_of(w)
    ok = all(finite.ideal_via_word(word, n) == reference for word in words)
    return {"case": str(w), "ok": ok, "words": len(words)}


def _case_taurigid(payload) -> dict:
    one_line, _n = payload
    w = Perm(one_line)
    return {"case": str(w), "ok": finite.is_tau_rigid_ideal(w)}


def _case_bridge(payload) -> dict:
    one_line, i = payload
    w = Perm(one_line)
    return {"case": f"{w}@{i}", "ok": continuous.finite_vs_continuous(w, i)}


def _case_bruhat(payload) -> dict:
    u_line, v_line = payload
    u, v = Perm(u_line), Perm(v_line)
    discrete = symgroup.bruhat_leq(u, v)
    measured = permuton.permuton_bruhat_leq(
        permuton.from_perm(u), permuton.from_perm(v)
    )
    return {"case": f"{u}<={v}", "ok": discrete == measured}


_CASE_RUNNERS = {
    "mizuno": _case_mizuno,
    "taurigid": _case_taurigid,
    "bridge": _case_bridge,
    "bruhat": _case_bruhat,
}


def _run_cases(name: str, payloads: list, jobs: int) -> list[dict]:
    runner = _CASE_RUNNERS[name]
    if jobs > 1:
        with Pool(jobs) as pool:
            records = pool.map(runner, payloads)
    else:
        records = [runner(p) for p in payloads]
    return sorted(records, key=lambda r: r["case"])


def _grid_apexes(m: int) -> list[Fraction]:
    return [Fraction(r, m) for r in range(1, m)]


def _twosided_records(mus: list[tuple[str, permuton.GridPermuton]]) -> list[dict]:
    records = []
    for label, mu in mus:
        ok = True
        for q in _grid_apexes(mu.m):
            f_q = permuton.boundary_function(mu, q)
            for p in _grid_apexes(mu.m):
                if p == q:
                    continue
                pushed = continuous.left_act(f_q, p)
                if not pointwise_leq(permuton.boundary_function(mu, p).f, pushed.f):
                    ok = False
        records.append({"case": label, "ok": ok})
    return records


def _homvanish_records(mus: list[tuple[str, permuton.GridPermuton]]) -> list[dict]:
    records = []
    grid = [Fraction(t, 21) for t in range(1, 21)]
    for label, mu in mus:
        ok = True
        try:
            for a in grid:
                for b in grid:
                    continuous.tau_rigidity_cert(mu, a, b)
        except PreprojError:
            ok = False
        solver_ok = True
        if mu.m <= 4:
            n = 8
            apexes = [x for x in _grid_apexes(mu.m) if (x * n).denominator == 1]
            for a in apexes:
                sub = continuous.staircase(
                    continuous.ideal_summand(continuous.PermutonIdeal(mu), a), n
                )
                for b in apexes:
                    quot = finite.tau_sub(
                        continuous.staircase(
                            continuous.ideal_summand(continuous.PermutonIdeal(mu), b), n
                        )
                    )
                    if finite.hom_dim(finite.to_rep(sub), finite.to_rep(quot)) != 0:
                        solver_ok = False
        records.append({"case": label, "ok": ok and solver_ok})
    return records


def _check_permutons(args, n: int) -> list[tuple[str, permuton.GridPermuton]]:
    mus: list[tuple[str, permuton.GridPermuton]] = []
    if args.perm:
        w = parse_perm(args.perm)
        mus.append((f"perm:{w}", permuton.from_perm(w)))
    for path in args.files or []:
        mus.append((path, jsonio.permuton_from_json(_load_json(path))))
    if not mus:
        for w in symgroup.all_perms(n):
            mus.append((f"perm:{w}", permuton.from_perm(w)))
        mus.append(("uniform:2", permuton.uniform(2)))
        mus.append(("uniform:4", permuton.uniform(4)))
    return mus


def cmd_check(args) -> int:
    name = args.name
    jobs = max(args.jobs, 1)
    if name in ("mizuno", "taurigid"):
        if args.perm:
            w = parse_perm(args.perm)
            _guard(w.n)
            payloads = [(w.one_line, w.n)]
        else:
            n = args.n or 4
            _guard(n, exhaustive=not args.sample)
            perms = list(symgroup.all_perms(n))
            if args.sample and args.sample < len(perms):
                rng = random.Random(0)
                perms = rng.sample(perms, args.sample)
            payloads = [(w.one_line, n) for w in perms]
        records = _run_cases(name, payloads, jobs)
    elif name == "bridge":
        if args.perm:
            perms = [parse_perm(args.perm)]
            _guard(perms[0].n)
        else:
            n = args.n or 5
            _guard(n, exhaustive=True)
            perms = list(symgroup.all_perms(n))
        payloads = [(w.one_line, i) for w in perms for i in range(1, w.n)]
        records = _run_cases(name, payloads, jobs)
    elif name == "bruhat":
        n = args.n or 4
        _guard(n, exhaustive=True)
        perms = list(symgroup.all_perms(n))
        payloads = [(u.one_line, v.one_line) for u in perms for v in perms]
        records = _run_cases(name, payloads, jobs)
    elif name == "twosided":
        n = args.n or 4
        _guard(n, exhaustive=not (args.perm or args.files))
        records = _twosided_records(_check_permutons(args, n))
    elif name == "homvanish":
        n = args.n or 4
        _guard(n)
        mus = _check_permutons(args, n) if (args.perm or args.files) else [
            ("perm:25341", permuton.from_perm(parse_perm("25341"))),
            ("perm:2413", permuton.from_perm(parse_perm("2413"))),
            ("uniform:2", permuton.uniform(2)),
            ("uniform:4", permuton.uniform(4)),
        ]
        records = _homvanish_records(mus)
    else:
        raise ParseError(f"unknown check {name!r}")

    failures = 0
    for record in records:
        if not record["ok"]:
            failures += 1
        _emit({"check": name, **record})
    _emit(
        {
            "summary": True,
            "check": name,
            "cases": len(records),
            "failures": failures,
            "pass": failures == 0,
        }
    )
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------- brick / sheet


def cmd_brick_check(args) -> int:
    module = jsonio.module_from_json(_load_json(args.file))
    record = {"type": jsonio.module_to_json(module)["type"],
              "brick": sheets.is_brick(module)}
    if isinstance(module, finite.CurveModule):
        rep = finite.to_rep(module)
        record["end_dim"] = finite.hom_dim(rep, rep)
        record["deep"] = sheets.is_deep(rep)
    _emit(record)
    return 0


def _parse_pair(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected 'y,a', got {text!r}")
    return frac(parts[0]), frac(parts[1])


def cmd_sheet_analyze(args) -> int:
    sheet = jsonio.sheet_from_json(_load_json(args.file))
    against = (
        jsonio.sheet_from_json(_load_json(args.against)) if args.against else sheet
    )
    out: dict = {
        "support": [[rat_str(lo), rat_str(hi)] for lo, hi in sheets.sheet_support(sheet)],
        "generators": [rat_str(g) for g in sheets.generators(sheet)],
        "deep": sheets.is_deep_sheet(sheet),
    }
    if args.cone:
        y, a = _parse_pair(args.cone)
        interval = sheets.b_interval(sheet, against, y, a)
        out["cone"] = {
            "y": rat_str(y),
            "a": rat_str(a),
            "b_interval": None
            if interval is None
            else [rat_str(interval[0]), rat_str(interval[1])],
            "elementary": y in sheets.generators(sheet)
            and sheets.elementary_exists(sheet, against, y, a),
        }
    if args.codep:
        y, a = _parse_pair(args.codep)
        cls = sheets.codependence_class(sheet, against, y, a)
        out["codependence"] = {
            "y": rat_str(y),
            "a": rat_str(a),
            "class": [rat_str(z) for z in cls],
        }
    if args.multi:
        shifts = [frac(part) for part in args.multi.split(",")]
        out["multi_elementary"] = _multi_report(sheet, against, shifts)
    _emit(out)
    return 0


def _multi_report(s: sheets.Sheet, s_prime: sheets.Sheet, shifts) -> dict:
    """Experimental: count a maximal family of elementary morphisms with
    pairwise disjoint headroom intervals (greedy interval scheduling)."""
    candidates = []
    for a in shifts:
        for y in sheets.generators(s):
            try:
                if not sheets.elementary_exists(s, s_prime, y, a):
                    continue
            except PreprojError:
                continue
            interval = sheets.b_interval(s, s_prime, y, a)
            if interval is not None:
                candidates.append((interval[1], interval[0], rat_str(y), rat_str(a)))
    candidates.sort()
    chosen = []
    frontier = None
    for hi, lo, y, a in candidates:
        if frontier is None or lo >= frontier:
            chosen.append({"y": y, "a": a, "b_interval": [rat_str(lo), rat_str(hi)]})
            frontier = hi
    return {"candidates": len(candidates), "disjoint_family": chosen}


# ---------------------------------------------------------------- render


def cmd_render(args) -> int:
    spec = render.spec_from_json(_load_json(args.spec))
    svg = render.render_svg(spec)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preproj",
        description="Permutation ideals in preprojective algebras of type A, "
        "their permuton analogues, and the verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ideal = sub.add_parser("ideal", help="compute ideals")
    ideal_sub = ideal.add_subparsers(dest="what", required=True)
    ip = ideal_sub.add_parser("perm", help="permutation ideal curves")
    ip.add_argument("w")
    ip.add_argument("--svg", help="also render the summands to this SVG file")
    ip.set_defaults(func=cmd_ideal_perm)
    ipn = ideal_sub.add_parser("permuton", help="permuton ideal summand")
    ipn.add_argument("file")
    ipn.add_argument("--at", required=True, help="apex in (0,1), e.g. 2/5")
    ipn.set_defaults(func=cmd_ideal_permuton)

    order = sub.add_parser("order", help="order comparisons")
    order_sub = order.add_subparsers(dest="what", required=True)
    ob = order_sub.add_parser("bruhat")
    ob.add_argument("u")
    ob.add_argument("v")
    ob.set_defaults(func=cmd_order_bruhat)
    op = order_sub.add_parser("permuton")
    op.add_argument("a")
    op.add_argument("b")
    op.set_defaults(func=cmd_order_permuton)
    oi = order_sub.add_parser("ideal")
    oi.add_argument("a")
    oi.add_argument("b")
    oi.set_defaults(func=cmd_order_ideal)

    check = sub.add_parser("check", help="verification sweeps")
    check.add_argument(
        "name",
        choices=["mizuno", "taurigid", "bridge", "bruhat", "twosided", "homvanish"],
    )
    check.add_argument("--n", type=int, default=0)
    check.add_argument("--perm", help="restrict to one permutation")
    check.add_argument(
        "--all",
        action="store_true",
        help="sweep every permutation (the default when --perm is absent)",
    )
    check.add_argument("--sample", type=int, default=0, help="random sample size")
    check.add_argument("--files", nargs="*", help="extra permuton JSON files")
    check.add_argument("--jobs", type=int, default=1, help="worker processes")
    check.set_defaults(func=cmd_check)

    brick = sub.add_parser("brick", help="brick classification")
    brick_sub = brick.add_subparsers(dest="what", required=True)
    bc = brick_sub.add_parser("check")
    bc.add_argument("file")
    bc.set_defaults(func=cmd_brick_check)

    sheet = sub.add_parser("sheet", help="sheet analysis")
    sheet_sub = sheet.add_subparsers(dest="what", required=True)
    sa = sheet_sub.add_parser("analyze")
    sa.add_argument("file")
    sa.add_argument("--against", help="target sheet (defaults to the sheet itself)")
    sa.add_argument("--cone", help="y,a: headroom interval and elementary test")
    sa.add_argument("--codep", help="y,a: codependence class")
    sa.add_argument("--multi", help="comma list of shifts for the experimental report")
    sa.set_defaults(func=cmd_sheet_analyze)

    rend = sub.add_parser("render", help="render a spec to SVG")
    rend.add_argument("spec")
    rend.add_argument("-o", "--output", required=True)
    rend.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreprojError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
