"""Command-line front door.

Subcommands: density, quadcount, sums, pairs, verify. Data goes to stdout in
CSV or JSON with the run configuration embedded; progress and diagnostics go
to stderr. Exit codes: 0 all asserted inequalities hold, 1 a verification
failed, 2 usage or budget error.
"""

from __future__ import annotations

import argparse
import math
import sys

import mpmath

from . import arith, ledger, quadroots, repcount
from ._native import backend_name
from .config import BudgetError, RunConfig, load_config
from .reporting import emit_report

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--zero-in-n",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="whether exponent ranges include 0 (default true)",
    )
    parser.add_argument("--format", choices=("csv", "json"), default=None, dest="output_format")
    parser.add_argument("--mem-budget", type=int, default=None, metavar="BYTES")
    parser.add_argument("--work-budget", type=int, default=None, metavar="N")
    parser.add_argument("--precision", type=int, default=None, metavar="BITS")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--config", default=None, metavar="PATH", help="key = value settings file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="romanoff",
        description="Representation counts, quadratic-congruence root counts and bounding sums",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("density", help="representation statistics V(x), sum r, sum r^2")
    p.add_argument("--limit", type=int, required=True, metavar="X")
    p.add_argument("--base", type=int, default=2, metavar="G")
    p.add_argument("--terms", type=int, default=2, metavar="K")
    p.add_argument("--shape", choices=("squares", "linear"), default="squares")
    _common_flags(p)

    p = sub.add_parser("quadcount", help="roots of z^2 = a (mod m), with window counts")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--mod", type=int, required=True, metavar="M")
    p.add_argument("--y", type=int, default=None)
    _common_flags(p)

    p = sub.add_parser("sums", help="partial sums: s1, s2, mertens, product")
    p.add_argument("--kind", choices=("s1", "s2", "mertens", "product"), required=True)
    p.add_argument("--dmax", default=None, help="cutoff(s) for d, comma separated")
    p.add_argument("--y", default=None, help="cutoff(s) for y, comma separated")
    _common_flags(p)

    p = sub.add_parser("pairs", help="prime pair counts pi_2(x, h) and the singular product")
    p.add_argument("--limit", type=int, required=True, metavar="X")
    p.add_argument("--h", type=int, required=True)
    _common_flags(p)

    p = sub.add_parser("verify", help="oracle-equivalence and bound suites")
    p.add_argument(
        "--suite",
        choices=("lemma12", "prop1", "prop2", "hzero", "k2count", "all"),
        required=True,
    )
    p.add_argument("--mmax", type=int, default=None, help="modulus cutoff (lemma12, prop1, prop2)")
    p.add_argument("--pmax", type=int, default=None, help="prime power cutoff (lemma12)")
    p.add_argument("--max-exp", type=int, default=None, help="exponent cutoff (hzero)")
    p.add_argument("--samples", type=int, default=None, help="sample count (prop2, k2count)")
    p.add_argument("--dmax", type=int, default=None, help="modulus cutoff (k2count)")
    p.add_argument("--expmax", type=int, default=None, help="exponent cutoff (k2count)")
    p.add_argument("--kmax", type=int, default=None, help="k2 range cutoff (k2count)")
    _common_flags(p)

    return parser


def _resolve_config(args) -> RunConfig:
    return load_config(
        args.config,
        zero_in_n=args.zero_in_n,
        memory_budget_bytes=args.mem_budget,
        work_budget=args.work_budget,
        precision_bits=args.precision,
        output_format=args.output_format,
        seed=args.seed,
    )


def _int_list(raw, flag: str) -> list[int]:
    if raw is None:
        raise ValueError(f"{flag} is required for this kind")
    return [int(part) for part in str(raw).split(",") if part.strip()]


def cmd_density(args, cfg: RunConfig) -> int:
    stats = repcount.representation_stats(
        args.limit,
        args.base,
        args.terms,
        args.shape,
        zero_in_n=cfg.zero_in_n,
        config=cfg,
    )
    bound = repcount.cs_lower_bound(stats)
    cs_holds = stats.v_count * stats.sum_r2 >= stats.sum_r * stats.sum_r
    summary = {
        "x": stats.x,
        "base": stats.base,
        "terms": stats.terms,
        "shape": stats.exponent_shape,
        "v": stats.v_count,
        "v_over_x": stats.v_count / stats.x,
        "sum_r": stats.sum_r,
        "sum_r2": stats.sum_r2,
        "cs_bound": bound,
        "cs_bound_float": float(bound),
        "cs_holds": cs_holds,
    }
    rows = sorted(stats.histogram.items())
    emit_report(
        sys.stdout,
        config=cfg,
        kind="density",
        summary=summary,
        columns=["r", "count"],
        rows=rows,
    )
    return EXIT_OK if cs_holds else EXIT_VERIFY_FAILED


def cmd_quadcount(args, cfg: RunConfig) -> int:
    spec = quadroots.CongruenceSpec(args.a, args.mod, args.y)
    n = quadroots.count_roots(spec.a, spec.m)
    roots = quadroots.enumerate_roots(spec.a, spec.m) if n <= 1000 else None
    summary = {
        "a": spec.a,
        "m": spec.m,
        "n_roots": n,
        "root_bound": 4.0 * math.sqrt(spec.m),
    }
    if spec.y is not None:
        windowed = quadroots.count_roots_up_to(spec.a, spec.m, spec.y)
        summary["y"] = spec.y
        summary["window_count"] = windowed
        summary["window_bound"] = 4.0 * spec.y ** (2.0 / 3.0) + 1.0
    if roots is not None:
        summary["roots_listed"] = len(roots)
        rows = [(z,) for z in roots]
    else:
        summary["roots_listed"] = 0
        rows = []
    emit_report(
        sys.stdout,
        config=cfg,
        kind="quadcount",
        summary=summary,
        columns=["z"],
        rows=rows,
    )
    return EXIT_OK


def cmd_sums(args, cfg: RunConfig) -> int:
    bits = cfg.precision_bits
    reports = []
    if args.kind == "s1":
        cutoffs = _int_list(args.dmax, "--dmax")
        profile = ledger.s1_profile(cutoffs, precision_bits=bits)
        reports = [profile[c] for c in cutoffs]
    elif args.kind == "s2":
        for c in _int_list(args.dmax, "--dmax"):
            for y in _int_list(args.y, "--y"):
                reports.append(ledger.s2_partial(c, y, precision_bits=bits))
    elif args.kind == "mertens":
        reports = [ledger.mertens_partial(y, precision_bits=bits) for y in _int_list(args.y, "--y")]
    else:
        reports = [
            ledger.small_prime_product(y, precision_bits=bits) for y in _int_list(args.y, "--y")
        ]
    rows = [
        (
            rep.kind,
            rep.cutoffs.get("d_max", ""),
            rep.cutoffs.get("y", ""),
            rep.value,
            rep.exact if rep.exact is not None else "",
            rep.term_count,
        )
        for rep in reports
    ]
    emit_report(
        sys.stdout,
        config=cfg,
        kind="sums",
        summary={"kind": args.kind},
        columns=["kind", "dmax", "y", "value", "exact", "term_count"],
        rows=rows,
    )
    return EXIT_OK


def cmd_pairs(args, cfg: RunConfig) -> int:
    count = repcount.prime_pairs(args.limit, args.h)
    product = repcount.singular_product(args.h)
    with mpmath.workprec(cfg.precision_bits):
        logx = mpmath.log(args.limit)
        rhs = args.limit / (logx * logx) * mpmath.mpf(product.numerator) / product.denominator
    summary = {
        "x": args.limit,
        "h": args.h,
        "pi2": count,
        "singular_product": product,
        "singular_product_float": float(product),
        "x_over_log2x_times_product": rhs,
    }
    emit_report(
        sys.stdout,
        config=cfg,
        kind="pairs",
        summary=summary,
        columns=["x", "h", "pi2"],
        rows=[(args.limit, args.h, count)],
    )
    return EXIT_OK


def _suite_lemma12(args, cfg):
    m_max = args.mmax if args.mmax is not None else 3000
    p_max = args.pmax if args.pmax is not None else 10**5
    print(f"scanning moduli up to {m_max} ...", file=sys.stderr)
    comp = quadroots.verify_multiplicativity(m_max)
    print(f"scanning prime powers up to {p_max} ...", file=sys.stderr)
    prim = quadroots.verify_prime_power_formula(p_max)
    ok = comp.ok and prim.ok
    rows = [
        ("moduli", m_max, comp.moduli_checked, comp.residues_checked,
         len(comp.mismatches), len(comp.bound_violations), comp.max_ratio,
         comp.witness_m, comp.witness_a),
        ("prime_powers", p_max, prim.moduli_checked, prim.residues_checked,
         len(prim.mismatches), len(prim.bound_violations), prim.max_ratio,
         prim.witness_m, prim.witness_a),
    ]
    for scan in (comp, prim):
        for m, a in scan.mismatches[:10]:
            rows.append(("mismatch", "", "", "", "", "", "", m, a))
    columns = ["scan", "cutoff", "moduli", "residues", "mismatches",
               "bound_violations", "max_ratio", "witness_m", "witness_a"]
    return ok, {"suite": "lemma12", "ok": ok}, columns, rows


def _suite_prop1(args, cfg):
    m_max = args.mmax if args.mmax is not None else 2000
    scan = quadroots.verify_root_count_bound(m_max)
    rows = [(m_max, scan.moduli_checked, scan.residues_checked,
             len(scan.bound_violations), scan.max_ratio, scan.witness_m, scan.witness_a)]
    columns = ["cutoff", "moduli", "residues", "bound_violations",
               "max_ratio", "witness_m", "witness_a"]
    return scan.ok, {"suite": "prop1", "ok": scan.ok}, columns, rows


def _suite_prop2(args, cfg):
    samples = args.samples if args.samples is not None else 10**4
    m_max = args.mmax if args.mmax is not None else 10**6
    grid = quadroots.random_window_grid(samples, m_max=m_max, seed=cfg.seed)
    scan = quadroots.verify_window_bound(grid)
    rows = [(samples, m_max, cfg.seed, len(scan.violations), scan.max_ratio,
             scan.witness[0], scan.witness[1], scan.witness[2])]
    columns = ["samples", "m_max", "seed", "violations", "max_ratio",
               "witness_a", "witness_m", "witness_y"]
    return scan.ok, {"suite": "prop2", "ok": scan.ok}, columns, rows


def _suite_hzero(args, cfg):
    max_exp = args.max_exp if args.max_exp is not None else 32
    ok = repcount.verify_h_zero_iff(max_exp)
    return ok, {"suite": "hzero", "ok": ok}, ["max_exponent", "holds"], [(max_exp, ok)]


def _suite_k2count(args, cfg):
    samples = args.samples if args.samples is not None else 1000
    d_max = args.dmax if args.dmax is not None else 10**4
    exp_max = args.expmax if args.expmax is not None else 10
    k_max = args.kmax if args.kmax is not None else 100
    scan = ledger.verify_k2_counts(
        samples, d_max=d_max, exp_max=exp_max, k_max=k_max,
        seed=cfg.seed, zero_in_n=cfg.zero_in_n,
    )
    rows = [(samples, d_max, exp_max, k_max, cfg.seed,
             len(scan.mismatches), len(scan.bound_violations))]
    for rec in scan.mismatches[:10]:
        rows.append(("mismatch",) + rec[:6])
    columns = ["samples", "d_max", "exp_max", "k_max", "seed", "mismatches", "bound_violations"]
    return scan.ok, {"suite": "k2count", "ok": scan.ok}, columns, rows


_SUITES = {
    "lemma12": _suite_lemma12,
    "prop1": _suite_prop1,
    "prop2": _suite_prop2,
    "hzero": _suite_hzero,
    "k2count": _suite_k2count,
}


def cmd_verify(args, cfg: RunConfig) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    all_ok = True
    for name in names:
        ok, summary, columns, rows = _SUITES[name](args, cfg)
        all_ok = all_ok and ok
        emit_report(
            sys.stdout,
            config=cfg,
            kind=f"verify.{name}",
            summary=summary,
            columns=columns,
            rows=rows,
        )
        print(f"suite {name}: {'pass' if ok else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


_COMMANDS = {
    "density": cmd_density,
    "quadcount": cmd_quadcount,
    "sums": cmd_sums,
    "pairs": cmd_pairs,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"backend: {backend_name}", file=sys.stderr)
    try:
        return _COMMANDS[args.command](args, cfg)
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
