"""Command line front end: set files in, canonical JSON reports out.

Subcommands map onto the library modules one to one; this file only parses
flags, reads set files, composes calls, and serializes what comes back.
Exit codes: 0 when every asserted check passed (the report's violations
list is empty exactly then), 2 for malformed input or parameters, 3 when a
certificate failed re-verification (an implementation bug, never a property
of the data), 4 when the requested parameters are infeasible, for instance
a threshold at or above the squared window density.  Negative findings on
user data, like a containment that simply does not hold, are ordinary
results and exit 0.

Conventions: rationals are written "p/q" on the command line and in
reports, ranges "lo..hi" inclusive on both ends, and shift candidate lists
accept a range, a JSON array, or a comma list.  Every subcommand except
``gen`` takes --out for the report destination (default stdout); ``gen``
uses --out for the generated set file and always reports on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .bohr import BohrSpec, bohr_contained, bohr_generate, piecewise_bohr_search
from .cover import (
    cover_density_check,
    cs_family_inequality,
    delta_cover,
    dense_shift_member,
    greedy_shift_cover,
    guaranteed_overlap,
    quotient_cover,
    verify_cover_certificate,
)
from .delta import eps_delta_banach, eps_delta_upper
from .density import (
    longest_run,
    lower_asymptotic_est,
    lower_banach_est,
    piecewise_syndetic_witness,
    schnirelmann_est,
    syndetic_gap,
    thick_witness,
    upper_asymptotic_est,
    upper_banach_est,
)
from .embed import Pattern, dense_embed_est, window_embeddable
from .errors import InfeasibleError, InputError, VerificationError
from .extract import (
    block_walk_bound,
    chain_extract,
    dense_pattern_extract,
    difference_cover,
    intersect_delta_cover,
    joint_extract,
    pigeonhole_shift,
    trace_extract,
)
from .gen import bernoulli_set, gen, residue_set, spec_from_json, spec_to_json
from .intset import (
    IntSet,
    Window,
    difference_set,
    intersect,
    read_set_file,
    restrict,
    write_set_file,
)
from .prng import Stream, stream_block, stream_value
from .report import Report, parse_fraction, render, write_csv

__all__ = ["main", "build_parser"]


# -- flag parsing helpers -----------------------------------------------------


def _parse_range(text: str, name: str) -> Window:
    parts = text.split("..")
    if len(parts) != 2:
        raise InputError(f"{name} must look like lo..hi, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"{name} ends must be integers, got {text!r}") from None
    return Window(lo, hi)


def _parse_candidates(text: str) -> list[int]:
    t = text.strip()
    if t.startswith("["):
        try:
            vals = json.loads(t)
        except json.JSONDecodeError as e:
            raise InputError(f"bad candidate JSON: {e}") from None
        if not isinstance(vals, list) or not all(isinstance(v, int) for v in vals):
            raise InputError("candidate JSON must be an array of integers")
        return vals
    if ".." in t:
        w = _parse_range(t, "candidate range")
        return list(range(w.lo, w.hi + 1))
    try:
        return [int(p) for p in t.split(",") if p.strip()]
    except ValueError:
        raise InputError(f"cannot parse candidate list {text!r}") from None


def _parse_fraction_list(text: str, name: str) -> list[Fraction]:
    vals = [parse_fraction(p, name) for p in text.split(",") if p.strip()]
    if not vals:
        raise InputError(f"{name} list is empty")
    return vals


def _load(path: str) -> IntSet:
    return read_set_file(path)


def _set_summary(path: str, a: IntSet) -> dict:
    return {"path": path, "window": a.window, "count": a.count}


def _emit(report: Report, out: str | None) -> None:
    text = render(report)
    if out:
        try:
            Path(out).write_text(text)
        except OSError as e:
            raise InputError(f"cannot write report to {out}: {e}") from e
    else:
        sys.stdout.write(text)


# -- subcommand handlers ------------------------------------------------------


def _cmd_gen(args, report: Report) -> int:
    text = args.spec
    if text.startswith("@"):
        p = Path(text[1:])
        try:
            text = p.read_text()
        except OSError as e:
            raise InputError(f"cannot read spec file {p}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"gen spec is not valid JSON: {e}") from None
    spec = spec_from_json(data)
    report.seed = spec.seed
    report.inputs["spec"] = spec_to_json(spec)
    made = gen(spec)
    if isinstance(made, tuple):
        entries = []
        for s, suffix in zip(made, (".a", ".b", ".c")):
            path = args.out + suffix
            write_set_file(s, path, args.fmt)
            entries.append(_set_summary(path, s))
        report.results["sets"] = entries
    else:
        write_set_file(made, args.out, args.fmt)
        report.results["set"] = _set_summary(args.out, made)
    return 0


def _cmd_analyze(args, report: Report) -> int:
    a = _load(args.set)
    report.inputs["set"] = _set_summary(args.set, a)
    ns = args.n if args.n else [a.window.length]
    anchored = a.window.lo == 1
    per_n = {}
    rows = []
    for n in ns:
        ub = upper_banach_est(a, n)
        lb = lower_banach_est(a, n)
        entry = {"upper_banach": ub, "lower_banach": lb}
        if anchored:
            entry["upper_asymptotic"] = upper_asymptotic_est(a, n)
            entry["lower_asymptotic"] = lower_asymptotic_est(a, n)
            entry["schnirelmann"] = schnirelmann_est(a, n)
        tw = thick_witness(a, n)
        entry["thick_witness"] = tw
        per_n[str(n)] = entry
        rows.append([n, ub.value, ub.at, lb.value, lb.at, "" if tw is None else tw])
    report.parameters["n"] = ns
    report.results["anchored"] = anchored
    report.results["per_n"] = per_n
    report.results["longest_run"] = longest_run(a)
    report.results["syndetic_gap"] = syndetic_gap(a) if a.count >= 2 else None
    if (args.gap is None) != (args.runlen is None):
        raise InputError("--gap and --runlen must be given together")
    if args.gap is not None:
        w = piecewise_syndetic_witness(a, args.gap, args.runlen)
        report.results["piecewise_syndetic"] = {
            "gap": args.gap,
            "length": args.runlen,
            "witness": w,
        }
    if args.csv:
        write_csv(
            args.csv,
            ["n", "upper_banach", "upper_at", "lower_banach", "lower_at", "thick_witness"],
            rows,
        )
    return 0


def _cmd_delta(args, report: Report) -> int:
    a = _load(args.set)
    eps = parse_fraction(args.eps, "eps")
    trange = _parse_range(args.trange, "trange")
    res = (eps_delta_upper if args.upper else eps_delta_banach)(a, eps, args.n, trange)
    report.inputs["set"] = _set_summary(args.set, a)
    report.parameters.update(
        {"eps": eps, "n": args.n, "trange": trange, "estimator": res.kind}
    )
    report.results["members"] = res.members
    report.results["count"] = res.members.count
    report.certificates["per_t"] = res.per_t
    if args.csv:
        rows = [[t, v, int(t in res.members)] for t, v in sorted(res.per_t.items())]
        write_csv(args.csv, ["t", "density", "member"], rows)
    return 0


def _distinct_traces(x: IntSet, m: int, cap: int = 4096) -> list[Pattern]:
    """Distinct nonempty length-m traces of X, rebased to [0, m)."""
    mask = (1 << m) - 1
    seen: dict[int, Pattern] = {}
    for a in range(x.window.lo, x.window.hi - m + 2):
        chunk = (x.bits >> (a - x.window.lo)) & mask
        if chunk and chunk not in seen:
            if len(seen) >= cap:
                raise InputError(f"more than {cap} distinct traces at m = {m}")
            seen[chunk] = Pattern(tuple(i for i in range(m) if (chunk >> i) & 1))
    return list(seen.values())


def _cmd_embed(args, report: Report) -> int:
    x = _load(args.x)
    y = _load(args.y)
    m = args.m
    if args.srange:
        srange = _parse_range(args.srange, "srange")
    else:
        if y.window.length < m:
            raise InputError(f"target window shorter than the trace length {m}")
        srange = Window(y.window.lo, y.window.hi - m + 1)
    report.inputs["x"] = _set_summary(args.x, x)
    report.inputs["y"] = _set_summary(args.y, y)
    report.parameters.update({"m": m, "srange": srange})
    report.results["window_embed"] = window_embeddable(x, y, m, srange)
    if args.dense:
        if args.n is None:
            raise InputError("--dense needs --n for the shift-set estimator")
        entries = []
        worst = None
        for pat in _distinct_traces(x, m):
            est = dense_embed_est(pat, y, srange, args.n)
            entries.append({"pattern": pat, "estimate": est})
            if worst is None or est.value < worst:
                worst = est.value
        report.results["dense"] = {
            "n": args.n,
            "patterns": entries,
            "min_density": worst,
        }
    return 0


def _cmd_cover(args, report: Report) -> int:
    a = _load(args.set)
    eps = parse_fraction(args.eps, "eps")
    candidates = _parse_candidates(args.x)
    if not candidates:
        raise InputError("empty candidate list")
    report.inputs["set"] = _set_summary(args.set, a)
    report.parameters.update(
        {"eps": eps, "n": args.n, "candidates": len(candidates), "mandated": args.mandate}
    )
    if args.h is not None:
        if args.upper:
            raise InputError("--upper applies to the direct cover, not the quotient mode")
        res = quotient_cover(
            a, args.h, candidates, eps, args.n,
            mandated_x=args.mandate, density_n=args.density_n,
        )
        report.parameters["h"] = args.h
        report.results["quotient"] = {
            "full_range": res.full_range,
            "offset": res.offset,
            "base_shifts": res.base_shifts,
            "cover_ok": res.cover_ok,
        }
        if res.quotient_members is not None:
            report.results["quotient_members"] = res.quotient_members
        if res.cert is not None:
            report.certificates["cover"] = res.cert
        if res.density is not None:
            report.certificates["density"] = res.density
        return 0
    res = delta_cover(a, candidates, eps, args.n, mandated_x=args.mandate, upper=args.upper)
    report.results["cover"] = {
        "offset": res.offset,
        "base_size": res.base_size,
        "heuristic": res.heuristic,
        "shifts": list(res.cert.shifts),
        "k_bound": res.cert.k_bound,
        "covered": res.cert.covered,
        "uncovered_count": len(res.cert.uncovered),
    }
    report.certificates["cover"] = res.cert
    report.certificates["shift_checks"] = res.checks
    hull = Window(min(candidates), max(candidates))
    if res.cert.covered and len(set(candidates)) == hull.length:
        # full coverage of a contiguous range: attach the density consequence
        c = restrict(a, Window(res.offset + 1, res.offset + args.n)).shift(-res.offset)
        bits = 0
        for i, t in enumerate(range(hull.lo, hull.hi + 1)):
            if dense_shift_member(c, t, eps):
                bits |= 1 << i
        s = IntSet(hull, bits)
        n_check = args.density_n if args.density_n else max(1, hull.length // 4)
        report.certificates["density"] = cover_density_check(
            s, list(res.cert.shifts), "full_cover", n_check, cover_range=hull
        )
    return 0


def _cmd_extract(args, report: Report) -> int:
    a = _load(args.set)
    slack = parse_fraction(args.slack, "slack")
    window_len = args.window if args.window else min(1024, a.window.length)
    res = dense_pattern_extract(a, args.n, slack, window_len)
    report.inputs["set"] = _set_summary(args.set, a)
    report.parameters.update({"n": args.n, "slack": slack, "window_len": window_len})
    report.results["offset"] = res.offset
    report.results["alpha"] = res.alpha
    report.results["prefix"] = res.cert.prefix
    report.certificates["extraction"] = res.cert
    report.certificates["prefix_checks"] = res.checks
    c = restrict(a, Window(res.offset + 1, res.offset + window_len)).shift(-res.offset)
    report.certificates["walk"] = block_walk_bound(c, args.n, res.cert.gamma)
    return 0


def _cmd_pipeline(args, report: Report) -> int:
    a = _load(args.a)
    b = _load(args.b)
    slack = parse_fraction(args.slack, "slack")
    report.inputs["a"] = _set_summary(args.a, a)
    report.inputs["b"] = _set_summary(args.b, b)
    if sum((bool(args.chain), args.jin, args.intersect)) > 1:
        raise InputError("--chain, --jin and --intersect are mutually exclusive")
    if args.chain:
        sets = [a, b] + [_load(p) for p in args.chain]
        for i, p in enumerate(args.chain):
            report.inputs[f"chain_{i}"] = _set_summary(p, sets[2 + i])
        res = chain_extract(sets, args.n, slack, window_len=args.N)
        report.parameters.update(
            {"n": args.n, "slack": slack, "window_len": args.N, "sets": len(sets)}
        )
        report.results["final_prefix"] = res.final_prefix
        report.results["final_gamma"] = res.final_gamma
        report.results["floor"] = res.floor
        report.certificates["chain"] = res
        return 0
    if args.N is None or args.nu is None:
        raise InputError("pipeline needs --N and --nu")
    report.parameters.update({"N": args.N, "nu": args.nu, "n": args.n, "slack": slack})
    if args.jin:
        if not args.x:
            raise InputError("--jin needs --x candidates")
        candidates = _parse_candidates(args.x)
        res = difference_cover(a, b, candidates, args.N, args.nu, args.n, slack)
        report.results["shifts"] = list(res.cert.shifts)
        report.results["expected_k"] = res.expected_k
        report.results["covered_interval"] = res.covered_interval
        report.results["baseline"] = res.baseline
        report.certificates["cover"] = res.cert
        report.certificates["pipeline"] = res.pipeline
        return 0
    if args.intersect:
        if args.eps is None:
            raise InputError("--intersect needs --eps")
        if not args.x:
            raise InputError("--intersect needs --x candidates")
        eps = parse_fraction(args.eps, "eps")
        candidates = _parse_candidates(args.x)
        res = intersect_delta_cover(
            a, b, eps, candidates, args.N, args.nu, args.n, slack,
            mandated_x=args.mandate,
        )
        report.parameters["eps"] = eps
        report.results["shifts"] = list(res.cert.shifts)
        report.results["expected_k"] = res.expected_k
        report.certificates["cover"] = res.cert
        report.certificates["checks_a"] = res.checks_a
        report.certificates["checks_b"] = res.checks_b
        report.certificates["pipeline"] = res.pipeline
        return 0
    res = joint_extract(a, b, args.N, args.nu, args.n, slack)
    report.results["alpha"] = res.alpha
    report.results["beta"] = res.beta
    report.results["gamma"] = res.gamma
    report.results["align_shift"] = res.align_shift
    report.results["prefix"] = res.cert.prefix
    report.certificates["pipeline"] = res
    # the prefix as a set on [1, n]; its counting function dominates gamma
    prefix_set = IntSet(
        Window(1, res.cert.n), sum(1 << (e - 1) for e in res.cert.prefix)
    )
    report.results["prefix_schnirelmann"] = schnirelmann_est(prefix_set, res.cert.n)
    return 0


def _cmd_bohr(args, report: Report) -> int:
    d = _load(args.d)
    report.inputs["d"] = _set_summary(args.d, d)
    if args.search:
        if args.eps_grid:
            eps_grid = _parse_fraction_list(args.eps_grid, "eps-grid")
        else:
            eps_grid = [Fraction(1, 3), Fraction(1, 4), Fraction(1, 6), Fraction(1, 8)]
        if args.shifts:
            try:
                shifts = tuple(int(p) for p in args.shifts.split(",") if p.strip())
            except ValueError:
                raise InputError(f"bad shift list {args.shifts!r}") from None
        else:
            shifts = (0,)
        report.parameters.update(
            {
                "kmax": args.kmax,
                "lmin": args.lmin,
                "qmax": args.qmax,
                "eps_grid": eps_grid,
                "shifts": list(shifts),
            }
        )
        wit = piecewise_bohr_search(
            d, args.kmax, eps_grid, args.lmin, q_max=args.qmax, shifts=shifts
        )
        if wit is None:
            report.results["witness"] = None
            return 0
        report.results["witness"] = wit
        s = bohr_generate(wit.spec, d.window)
        report.results["generated"] = s
        report.certificates["containment"] = bohr_contained(s, d, wit.interval)
        return 0
    if not args.freqs:
        raise InputError("direct mode needs --freqs (or use --search)")
    eps = parse_fraction(args.eps, "eps") if args.eps else Fraction(1, 4)
    spec = BohrSpec.of(_parse_fraction_list(args.freqs, "freqs"), eps, args.shift)
    interval = _parse_range(args.interval, "interval") if args.interval else d.window
    report.parameters.update(
        {"freqs": list(spec.freqs), "eps": eps, "shift": args.shift, "interval": interval}
    )
    s = bohr_generate(spec, d.window)
    report.results["generated"] = s
    report.results["containment"] = bohr_contained(s, d, interval)
    return 0


# -- selftest invariants ------------------------------------------------------
#
# Each check draws its own small instance from a per-trial stream and asserts
# one library invariant.  InfeasibleError counts as a skip (the instance was
# outside the operation's feasibility region), anything else as a violation.


def _st_window(rng: Stream, max_hi: int = 512) -> Window:
    return Window(1, rng.randint(16, max_hi))


def _st_set(rng: Stream, window: Window, denom: int = 4) -> IntSet:
    num = rng.randint(1, denom - 1) if denom > 2 else 1
    s = bernoulli_set(window, Fraction(num, denom), rng.subseed())
    return IntSet(window, s.bits | 1)  # pin the first point so the set is nonempty


def _st_pigeonhole(rng: Stream) -> None:
    w = _st_window(rng)
    c = _st_set(rng, w)
    nu = rng.randint(1, min(64, w.hi))
    d = _st_set(rng, Window(1, nu))
    wit = pigeonhole_shift(c, d)
    assert wit.ratio >= wit.bound


def _st_cs(rng: Stream) -> None:
    w = _st_window(rng, 256)
    k = rng.randint(2, 6)
    fam = [_st_set(rng, w) for _ in range(k)]
    ineq = cs_family_inequality(fam)
    assert ineq.holds
    bound = guaranteed_overlap(fam)
    best = max(
        Fraction(intersect(fam[i], fam[j]).count, ineq.n)
        for i in range(k)
        for j in range(i + 1, k)
    )
    assert bound <= best


def _st_difference(rng: Stream) -> None:
    a = _st_set(rng, Window(rng.randint(-20, 0), rng.randint(1, 20)))
    b = _st_set(rng, Window(rng.randint(-20, 0), rng.randint(1, 20)))
    d = difference_set(a, b)
    assert set(d.members()) == {x - y for x in a for y in b}


def _st_estimators(rng: Stream) -> None:
    w = _st_window(rng)
    a = _st_set(rng, w)
    n = rng.randint(1, w.hi)
    assert lower_banach_est(a, n).value <= upper_banach_est(a, n).value
    assert schnirelmann_est(a, n).value <= lower_asymptotic_est(a, n).value
    run = longest_run(a)
    assert run is not None
    assert thick_witness(a, run[1]) is not None
    if run[1] < a.window.length:
        assert thick_witness(a, run[1] + 1) is None


def _st_delta_symmetry(rng: Stream) -> None:
    w = _st_window(rng, 256)
    a = _st_set(rng, w)
    r = rng.randint(1, w.hi // 4)
    res = eps_delta_banach(a, Fraction(0), rng.randint(1, w.hi - r), Window(-r, r))
    for t in range(r + 1):
        assert res.per_t[t] == res.per_t[-t]
        assert (t in res.members) == (-t in res.members)


def _st_cover(rng: Stream) -> None:
    hi = rng.randint(48, 256)
    m = rng.randint(2, 8)
    cls = sorted({rng.below(m) for _ in range(rng.randint(1, m))})
    c = residue_set(Window(1, hi), m, cls)
    r = rng.randint(1, 20)
    cand = list(range(-r, r + 1))
    cert = greedy_shift_cover(c, cand, Fraction(0), 0)
    assert verify_cover_certificate(c, cand, cert)


def _st_trace(rng: Stream) -> None:
    w = _st_window(rng)
    c = _st_set(rng, w, denom=2)
    n = rng.randint(2, 6)
    cert = trace_extract(c, n, Fraction(1, 4))
    assert cert.matches.count >= cert.match_bound


def _st_embed(rng: Stream) -> None:
    w = _st_window(rng, 256)
    x = _st_set(rng, w)
    m = rng.randint(1, min(12, w.hi))
    rep = window_embeddable(x, x, m, Window(w.lo, w.hi - m + 1))
    assert rep.ok  # the identity shift embeds every trace into its own set


def _st_bohr(rng: Stream) -> None:
    q = rng.randint(2, 12)
    spec = BohrSpec.of(
        [Fraction(rng.randint(1, q - 1), q)],
        Fraction(1, 4),
        rng.randint(-25, 25),
    )
    w = Window(-50, rng.randint(26, 100))
    s = bohr_generate(spec, w)
    assert spec.shift in s
    for x in s:
        v = (spec.freqs[0] * (x - spec.shift)) % 1
        assert min(v, 1 - v) < spec.eps


def _st_prng(rng: Stream) -> None:
    seed = rng.subseed()
    w = Window(1, rng.randint(16, 256))
    assert bernoulli_set(w, Fraction(1, 3), seed).bits == bernoulli_set(w, Fraction(1, 3), seed).bits
    start = rng.below(1000)
    blk = stream_block(seed, start, 8)
    assert [int(v) for v in blk] == [stream_value(seed, start + i) for i in range(8)]


_CHECKS = [
    ("pigeonhole_bound", _st_pigeonhole),
    ("family_inequality", _st_cs),
    ("difference_brute", _st_difference),
    ("estimator_order", _st_estimators),
    ("delta_symmetry", _st_delta_symmetry),
    ("cover_roundtrip", _st_cover),
    ("trace_roundtrip", _st_trace),
    ("embed_identity", _st_embed),
    ("bohr_membership", _st_bohr),
    ("prng_agreement", _st_prng),
]


def _cmd_selftest(args, report: Report) -> int:
    report.seed = args.seed
    report.parameters["trials"] = args.trials
    passed = {name: 0 for name, _ in _CHECKS}
    skipped = {name: 0 for name, _ in _CHECKS}
    for i in range(args.trials):
        name, fn = _CHECKS[i % len(_CHECKS)]
        rng = Stream(stream_value(args.seed, i))
        try:
            fn(rng)
        except InfeasibleError:
            skipped[name] += 1
        except (AssertionError, VerificationError, InputError) as e:
            report.violations.append(f"{name} trial {i}: {e or 'assertion failed'}")
        else:
            passed[name] += 1
    report.results["passed"] = passed
    report.results["skipped"] = skipped
    return 3 if report.violations else 0


# -- parser and entry point ---------------------------------------------------


def _report_flags(p: argparse.ArgumentParser, csv: bool = False) -> None:
    p.add_argument("--out", dest="report_out", metavar="PATH",
                   help="write the report here instead of stdout")
    if csv:
        p.add_argument("--csv", metavar="PATH", help="also write per-row data as CSV")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffsets",
        description="finite-window difference set and density workbench",
    )
    parser.add_argument("--version", action="version", version=f"diffsets {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="materialize a generator spec into a set file")
    p.add_argument("--spec", required=True, help="GenSpec JSON, or @path to a JSON file")
    p.add_argument("--out", required=True,
                   help="set file to write; triple generators append .a/.b/.c")
    p.add_argument("--fmt", choices=("bits", "list"), default="bits")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("analyze", help="density estimates and structure classifiers")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, action="append", help="window length, repeatable")
    p.add_argument("--gap", type=int, help="gap bound for the piecewise syndetic check")
    p.add_argument("--runlen", type=int, help="interval length for the piecewise syndetic check")
    _report_flags(p, csv=True)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("delta", help="shifts whose self-intersection clears a density threshold")
    p.add_argument("--set", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trange", required=True, help="shift range lo..hi")
    p.add_argument("--upper", action="store_true",
                   help="use the anchored asymptotic estimator instead of the window scan")
    _report_flags(p, csv=True)
    p.set_defaults(fn=_cmd_delta)

    p = sub.add_parser("embed", help="window embeddability of X into Y")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--m", type=int, required=True, help="trace length")
    p.add_argument("--srange", help="shift search range lo..hi (default: all of Y)")
    p.add_argument("--dense", action="store_true", help="also estimate shift-set densities")
    p.add_argument("--n", type=int, help="estimator window for --dense")
    _report_flags(p)
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("cover", help="greedy shift cover with certificates")
    p.add_argument("--set", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--x", required=True, help="candidate shifts: lo..hi, JSON array, or comma list")
    p.add_argument("--n", type=int, required=True, help="base window length")
    p.add_argument("--h", type=int, help="quotient mode: cover x by {t : h*t dense} + F/h")
    p.add_argument("--mandate", type=int, default=0, help="shift the cover must use first")
    p.add_argument("--upper", action="store_true",
                   help="anchored window and asymptotic re-verification (heuristic)")
    p.add_argument("--density-n", type=int,
                   help="window length for the covering-density consequence")
    _report_flags(p)
    p.set_defaults(fn=_cmd_cover)

    p = sub.add_parser("extract", help="modal trace extraction with walk bound")
    p.add_argument("--set", required=True)
    p.add_argument("--n", type=int, required=True, help="trace length")
    p.add_argument("--slack", required=True, help="density slack below the best window")
    p.add_argument("--window", type=int, help="base window length (default min(1024, all))")
    _report_flags(p)
    p.set_defaults(fn=_cmd_extract)

    p = sub.add_parser("pipeline", help="two-set alignment and extraction pipelines")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--N", type=int, help="window length for the first set")
    p.add_argument("--nu", type=int, help="window length for the second set")
    p.add_argument("--n", type=int, required=True, help="trace length")
    p.add_argument("--slack", default="1/50")
    p.add_argument("--chain", nargs="+", metavar="PATH",
                   help="fold further sets through the pipeline")
    p.add_argument("--jin", action="store_true",
                   help="cover candidates by dense shifts of the aligned overlap")
    p.add_argument("--intersect", action="store_true",
                   help="cover candidates by shifts eps-dense for both sets")
    p.add_argument("--eps", help="threshold for --intersect")
    p.add_argument("--x", help="candidate shifts for --jin / --intersect")
    p.add_argument("--mandate", type=int, default=0)
    _report_flags(p)
    p.set_defaults(fn=_cmd_pipeline)

    p = sub.add_parser("bohr", help="rational Bohr sets: generate, contain, search")
    p.add_argument("--d", required=True, help="ambient set (usually a difference set)")
    p.add_argument("--freqs", help="comma list of rational frequencies")
    p.add_argument("--eps", help="width threshold (default 1/4)")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--interval", help="containment check range lo..hi (default: full window)")
    p.add_argument("--search", action="store_true", help="piecewise witness search")
    p.add_argument("--kmax", type=int, default=2, help="max frequencies per spec")
    p.add_argument("--Lmin", dest="lmin", type=int, default=16,
                   help="minimum violation-free interval length")
    p.add_argument("--eps-grid", help="comma list of eps values for the search")
    p.add_argument("--qmax", type=int, default=32, help="max denominator for suggested freqs")
    p.add_argument("--shifts", help="comma list of shifts for the search")
    _report_flags(p)
    p.set_defaults(fn=_cmd_bohr)

    p = sub.add_parser("selftest", help="randomized invariant suite")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    _report_flags(p)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    report = Report(command=args.cmd, version=__version__)
    t0 = time.perf_counter()
    code = 0
    try:
        code = args.fn(args, report)
    except InputError as e:
        print(f"diffsets: error: {e}", file=sys.stderr)
        return 2
    except InfeasibleError as e:
        print(f"diffsets: infeasible: {e}", file=sys.stderr)
        return 4
    except VerificationError as e:
        report.violations.append(str(e))
        code = 3
    report.timing["seconds"] = round(time.perf_counter() - t0, 6)
    try:
        _emit(report, getattr(args, "report_out", None))
    except InputError as e:
        print(f"diffsets: error: {e}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    raise SystemExit(main())
