"""Command-line front end: ``qswitch {sweep,classify,validate,fractional}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .blocks import BlockKind, ChannelParams, block_coefficients, control_trace_value
from .classifier import ClassTable, classify, format_table, tables_to_json, verify_against_published
from .fractional import lower_frontier, scan
from .holevo import holevo
from .oracle import DEFAULT_MAX_DIM, holevo_bruteforce, output_block, switch_output, trace_target
from .output import csv_text, line_plot_svg, run_metadata, write_text
from .switch import CANONICAL_PATTERN, OrderConfiguration, control_output, equiprobable

BLOCK_TOL = 1e-10
CONTROL_TOL = 1e-10
CHI_TOL = 1e-8
VALIDATE_QS = (0.0, 0.25, 0.5, 0.75, 1.0)

PRESETS = {
    "classes": {"m": "2,3,4,5", "klass": "all", "d": "2"},
    "dimensions": {"m": "2,3,4,5", "klass": "best", "d": "2,3,4,5,6"},
}


class CliError(Exception):
    pass


def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in str(text).replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def m_list(text: str) -> list[int]:
    if str(text).strip().lower() == "all":
        return [1, 2, 3, 4, 5, 6]
    values = int_list(text)
    if not values or any(not 1 <= m <= 6 for m in values):
        raise argparse.ArgumentTypeError(f"m must be 'all' or integers in 1..6, got {text!r}")
    return values


def read_config(path: str | Path) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CliError(f"{path}:{lineno}: expected 'key = value'")
        values[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return values


# ---------------------------------------------------------------------------
# sweep

def _class_tables(ms) -> dict[int, ClassTable]:
    return {m: classify(m) for m in ms}


def _select_classes(table: ClassTable, selector: str):
    """Yield ``(label, support)`` pairs for one m."""
    sel = str(selector).strip().lower()
    if sel == "all":
        return [(c.published_label, c.representative) for c in table.classes]
    if sel == "best":
        def key(c):
            return (holevo(equiprobable(c.representative), ChannelParams(0.0, 2)).chi, c.chi_probe)
        best = max(table.classes, key=key)
        return [(best.published_label, best.representative)]
    labels = int_list(sel.strip("{}S"))
    if "," in sel or len(labels) == table.m and table.m > 1:
        support = tuple(sorted(labels))
        for c in table.classes:
            if support in c.supports:
                return [(c.published_label, support)]
        raise CliError(f"support {support} does not have m={table.m} orders")
    if len(labels) == 1:
        try:
            c = table.by_label(labels[0])
        except KeyError as exc:
            raise CliError(str(exc)) from None
        return [(c.published_label, c.representative)]
    raise CliError(f"unknown class selector {selector!r}")


def cmd_sweep(args) -> int:
    if args.preset:
        for key, value in PRESETS[args.preset].items():
            if getattr(args, key) is None:
                setattr(args, key, value)
    ms = m_list(args.m or "2,3,4,5")
    ds = int_list(args.d or "2")
    selector = args.klass or "all"
    if not 0.0 <= args.q_min <= args.q_max <= 1.0:
        raise CliError("q grid must satisfy 0 <= q-min <= q-max <= 1")
    if args.q_steps < 2:
        raise CliError("q-steps must be >= 2")
    qs = np.linspace(args.q_min, args.q_max, args.q_steps)
    tables = _class_tables(ms)

    rows, series = [], {}
    for m in ms:
        for label, support in _select_classes(tables[m], selector):
            config = equiprobable(support)
            for d in ds:
                curve = []
                for q in qs:
                    r = holevo(config, ChannelParams(float(q), d))
                    rows.append((float(q), d, m, label, r.chi, r.h_min, r.h_control))
                    curve.append(r.chi)
                series.setdefault(m, {})[f"class {label}, d={d}"] = (list(qs), curve)

    meta = run_metadata(class_selector=selector)
    text = csv_text(["q", "d", "m", "class", "chi", "h_min", "h_control"], rows, meta)
    if args.out:
        write_text(args.out, text)
    else:
        sys.stdout.write(text)
    if args.svg:
        for m, s in series.items():
            path = f"{args.svg}_m{m}.svg"
            write_text(path, line_plot_svg(s, title=f"Holevo information, m = {m}", xlabel="q",
                                           ylabel="chi (bits)", meta=meta))
    return 0


# ---------------------------------------------------------------------------
# classify

def cmd_classify(args) -> int:
    tables = [classify(m) for m in m_list(args.m or "all")]
    for t in tables:
        print(format_table(t, verify_against_published(t)))
    total = sum(sum(t.sizes()) for t in tables)
    print(f"total configurations: {total}")
    if args.out:
        write_text(args.out, tables_to_json(tables) + "\n")
    return 0


# ---------------------------------------------------------------------------
# validate

def _random_density(rng: np.random.Generator, d: int) -> np.ndarray:
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def run_validation(ds, samples: int, seed: int, *, pattern=CANONICAL_PATTERN,
                   max_dim: int = DEFAULT_MAX_DIM) -> tuple[bool, list[dict]]:
    """Oracle-versus-pipeline comparison; returns ``(passed, per-(d, q) rows)``."""
    rng = np.random.default_rng(seed)
    records = []
    for d in ds:
        configs = [OrderConfiguration.from_array(p) for p in rng.dirichlet(np.ones(6), size=samples)]
        for q in VALIDATE_QS:
            params = ChannelParams(q, d)
            coeffs = {kind: block_coefficients(kind, params) for kind in BlockKind}
            worst = {"block": 0.0, "control": 0.0, "chi": 0.0, "where": ""}
            for ci, config in enumerate(configs):
                rho = _random_density(rng, d)
                state = switch_output(config, params, rho, max_dim=max_dim)
                amp = np.sqrt(config.as_array())
                for n in range(1, 7):
                    for n2 in range(1, 7):
                        c = coeffs[pattern[n, n2]]
                        expected = amp[n - 1] * amp[n2 - 1] * (c.rho_coeff * rho + c.id_coeff * np.eye(d) / d)
                        dev = float(np.abs(output_block(state, d, n, n2) - expected).max())
                        if dev > worst["block"]:
                            worst["block"] = dev
                            worst["where"] = f"config {ci}, block ({n},{n2}) [{pattern[n, n2]}]"
                ctrl_dev = float(np.abs(trace_target(state, d) - control_output(config, params, pattern)).max())
                worst["control"] = max(worst["control"], ctrl_dev)
                chi_dev = abs(holevo_bruteforce(config, params, max_dim=max_dim).chi - holevo(config, params, pattern=pattern).chi)
                worst["chi"] = max(worst["chi"], chi_dev)
            ok = worst["block"] < BLOCK_TOL and worst["control"] < CONTROL_TOL and worst["chi"] < CHI_TOL
            records.append({"d": d, "q": q, **worst, "ok": ok})
    return all(r["ok"] for r in records), records


def cmd_validate(args) -> int:
    ds = int_list(args.d or "2,3")
    pattern = CANONICAL_PATTERN.replace(1, 6, "B") if args.corrupt_pattern else CANONICAL_PATTERN
    max_dim = max(DEFAULT_MAX_DIM, 4 if args.allow_d4 else 0)
    passed, records = run_validation(ds, args.samples, args.seed, pattern=pattern, max_dim=max_dim)
    lines = [f"validate: d={ds} samples={args.samples} seed={args.seed}"
             + (" [corrupted pattern]" if args.corrupt_pattern else "")]
    for r in records:
        status = "PASS" if r["ok"] else "FAIL"
        where = f"  worst at {r['where']}" if not r["ok"] else ""
        lines.append(f"  d={r['d']} q={r['q']:.2f}  block {r['block']:.2e}  control {r['control']:.2e}"
                     f"  chi {r['chi']:.2e}  {status}{where}")
    lines.append("RESULT: " + ("PASS" if passed else "FAIL"))
    print("\n".join(lines))
    if args.out:
        meta = run_metadata(seed=args.seed)
        rows = [(r["d"], r["q"], r["block"], r["control"], r["chi"], "PASS" if r["ok"] else "FAIL") for r in records]
        write_text(args.out, csv_text(["d", "q", "max_block_dev", "max_control_dev", "max_chi_dev", "status"],
                                      rows, meta))
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# fractional

def cmd_fractional(args) -> int:
    d = int_list(args.d or "2")
    if len(d) != 1:
        raise CliError("fractional takes a single dimension")
    result = scan(args.count, d[0], args.q, args.seed, args.bins, workers=args.workers)
    meta = run_metadata(seed=args.seed, count=args.count, d=d[0], q=args.q, bins=args.bins,
                        generator="PCG64 per 4096-sample chunk")
    out = Path(args.out or "fractional_scatter.csv")
    hist = Path(args.hist) if args.hist else out.with_name(out.stem + "_hist.csv")
    scatter_rows = (
        (float(m), float(c), *map(float, p)) for m, c, p in zip(result.m_frac, result.chi, result.probs)
    )
    write_text(out, csv_text(["m_frac", "chi", "P1", "P2", "P3", "P4", "P5", "P6"], scatter_rows, meta))
    edges, density = result.bin_edges, result.density
    hist_rows = ((float(lo), float(hi), float(v)) for lo, hi, v in zip(edges[:-1], edges[1:], density))
    write_text(hist, csv_text(["bin_lo", "bin_hi", "density"], hist_rows, meta))
    if args.frontier:
        fedges, lo = lower_frontier(result.m_frac, result.chi, args.bins)
        rows = ((float(a), float(b), float(v)) for a, b, v in zip(fedges[:-1], fedges[1:], lo))
        write_text(args.frontier, csv_text(["bin_lo", "bin_hi", "min_chi"], rows,
                                           {**meta, "note": "per-bin minimum of chi (post-processing)"}))
    if args.svg:
        centers = 0.5 * (edges[:-1] + edges[1:])
        write_text(args.svg, line_plot_svg({"sigma_m": (list(centers), list(density))},
                                           title="Fractional order density", xlabel="m",
                                           ylabel="density", meta=meta))
    print(f"fractional: {args.count} samples, d={d[0]}, q={args.q}, seed={args.seed} -> {out}, {hist}")
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qswitch", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="key = value file; flags override its values")
        p.add_argument("--out", help="output path")
        return p

    p = common(sub.add_parser("sweep", help="chi versus q for classes and dimensions"))
    p.add_argument("--preset", choices=sorted(PRESETS), help="classes: every class at d=2; dimensions: best class, d=2..6")
    p.add_argument("--m", help="'all' or comma-separated order counts (default 2,3,4,5)")
    p.add_argument("--class", dest="klass",
                   help="'all', 'best', a published class label, or a support such as 1,4,5")
    p.add_argument("--d", help="comma-separated dimensions (default 2)")
    p.add_argument("--q-min", type=float, default=0.0)
    p.add_argument("--q-max", type=float, default=1.0)
    p.add_argument("--q-steps", type=int, default=101)
    p.add_argument("--svg", help="prefix for one SVG plot per m")
    p.set_defaults(func=cmd_sweep)

    p = common(sub.add_parser("classify", help="equivalence classes of the equiprobable configurations"))
    p.add_argument("--m", default="all")
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("validate", help="compare the pipeline with the Kraus brute force"))
    p.add_argument("--d", default="2,3")
    p.add_argument("--samples", "--count", dest="samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--allow-d4", action="store_true", help="permit d=4 in the brute force")
    p.add_argument("--corrupt-pattern", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_validate)

    p = common(sub.add_parser("fractional", help="Monte-Carlo scan over the fractional order"))
    p.add_argument("--count", type=int, default=10_000)
    p.add_argument("--d", default="2")
    p.add_argument("--q", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bins", type=int, default=100)
    p.add_argument("--hist", help="histogram CSV path (default: <out>_hist.csv)")
    p.add_argument("--frontier", help="also write the per-bin minimum of chi")
    p.add_argument("--svg", help="SVG plot of the fractional-order density")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_fractional)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    values = read_config(args.config)
    subparser = parser._subparsers._group_actions[0].choices[args.command]
    known = {a.dest: a for a in subparser._actions}
    defaults = {}
    for key, raw in values.items():
        key = "klass" if key == "class" else key
        if key not in known or key in ("config", "help"):
            raise CliError(f"{args.config}: unknown key {key!r} for '{args.command}'")
        action = known[key]
        if isinstance(action, argparse._StoreTrueAction):
            defaults[key] = raw.lower() in ("1", "true", "yes", "on")
        else:
            defaults[key] = action.type(raw) if action.type else raw
    subparser.set_defaults(**defaults)
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _apply_config(parser, argv)
        return args.func(args)
    except (CliError, OSError, ValueError) as exc:
        print(f"qswitch: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
