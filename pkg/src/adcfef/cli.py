"""Command-line front end: ``verify``, ``sweep``, ``optimal`` and ``inspect``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import fidelity as fd
from .scenarios import BellKind, DampingScenario, ScenarioResult, run
from .verification import format_table, run_all

CSV_HEADER = (
    "source", "p_b", "p_a", "f_one", "f_two", "F_one", "F_two",
    "improved", "teleporting_one", "teleporting_two",
)


class UsageError(Exception):
    pass


def parse_range(text: str) -> np.ndarray:
    """Inclusive grid from ``start:stop:step``, all points inside [0, 1]."""
    try:
        start, stop, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"range must look like start:stop:step, got {text!r}") from None
    if not step > 0:
        raise UsageError(f"step must be positive, got {step}")
    if start > stop:
        raise UsageError(f"start {start} exceeds stop {stop}")
    if start < 0 or stop > 1:
        raise UsageError(f"range {text!r} leaves [0, 1]")
    n = int(np.floor((stop - start) / step + 1e-9)) + 1
    pts = np.round(start + step * np.arange(n), 12)
    return np.minimum(pts, stop)


def probability(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"{p} is outside [0, 1]")
    return p


def bell_kind(text: str) -> BellKind:
    try:
        return BellKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _g12(x: float | None) -> str:
    return "" if x is None else f"{x:.12g}"


def _b(x: bool | None) -> str:
    return "" if x is None else ("true" if x else "false")


def sweep_rows(source: BellKind, pb_values, pa_values=None):
    """Yield CSV rows in ascending grid order (``p_b`` outer, ``p_a`` inner)."""
    for pb in pb_values:
        for pa in (None,) if pa_values is None else pa_values:
            r = run(DampingScenario(source, float(pb), None if pa is None else float(pa)))
            one, two = r.report_one, r.report_two
            yield (
                source.value,
                _g12(float(pb)),
                _g12(None if pa is None else float(pa)),
                _g12(one.fef_numeric),
                _g12(two and two.fef_numeric),
                _g12(one.teleport_fidelity),
                _g12(two and two.teleport_fidelity),
                _b(r.improved),
                _b(one.is_teleporting),
                _b(two and two.is_teleporting),
            )


def write_sweep(path: str, rows) -> int:
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_HEADER)
            n = 0
            for row in rows:
                w.writerow(row)
                n += 1
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None
    return n


def cmd_verify(args) -> int:
    rows = run_all(samples=args.samples, seed=args.seed)
    print(format_table(rows))
    return 0 if all(r.passed for r in rows) else 1


def cmd_sweep(args) -> int:
    if args.pb_range is not None:
        if args.pb is not None:
            raise UsageError("give either --pb or --pb-range, not both")
        pb_values = parse_range(args.pb_range)
    elif args.pb is not None:
        if args.pa_range is None:
            raise UsageError("--pb alone needs --pa-range; use --pb-range for a p_b sweep")
        pb_values = [args.pb]
    else:
        raise UsageError("sweep needs --pb-range or --pb with --pa-range")
    pa_values = parse_range(args.pa_range) if args.pa_range is not None else None
    n = write_sweep(args.out, sweep_rows(args.source, pb_values, pa_values))
    print(f"wrote {n} rows to {args.out}")
    return 0


def cmd_optimal(args) -> int:
    pb = args.pb_pos if args.pb_pos is not None else args.pb
    if pb is None:
        raise UsageError("optimal needs p_b")
    f_one = fd.fef_one_damped(pb)
    print(f"p_b                 {pb:.6f}")
    print(f"f one-damped        {f_one:.6f}  ({fd.classify(f_one)})")
    if pb < fd.REPAIR_ONSET:
        print("no improvement possible (p_b <= 3/4)")
        return 0
    pa = fd.optimal_pa(pb)
    f_max = fd.fef_max_after_repair(pb)
    print(f"optimal p_a         {pa:.6f}")
    print(f"f_max               {f_max:.6f}  ({fd.classify(f_max)})")
    print(f"teleport fidelity   {fd.teleportation_fidelity(f_max):.6f}")
    if pb == fd.REPAIR_ONSET:
        print("marginal case: g(3/4) = 0, no p_a > 0 improves (p_b must exceed 3/4)")
    else:
        limit = fd.improvement_limit(pb)
        print("repair possible     yes")
        print(f"improving p_a       0 < p_a < {limit:.6f}" if limit < 1 else
              "improving p_a       every p_a in (0, 1]")
    return 0


def _fmt_entry(z: complex) -> str:
    if abs(z.imag) < 5e-7:
        return f"{z.real: .6f}"
    return f"{z.real: .6f}{z.imag:+.6f}j"


def format_matrix(m) -> str:
    return "\n".join("  [" + "  ".join(_fmt_entry(z) for z in row) + " ]" for row in np.asarray(m))


def _report_lines(label, rep, conc) -> list[str]:
    rows = [
        ("f numeric", f"{rep.fef_numeric:.6f}"),
        ("f closed form", f"{rep.fef_closed:.6f}"),
        ("|residual|", f"{rep.closed_residual:.6e}"),
        ("teleport fidelity", f"{rep.teleport_fidelity:.6f}"),
        ("concurrence", f"{conc:.6f}"),
        ("classification", rep.classification),
        ("directly distillable", "yes" if rep.directly_distillable else "no"),
    ]
    return ["", f"{label}:"] + [f"  {k:<22}{v}" for k, v in rows]


def format_result(r: ScenarioResult) -> str:
    s = r.scenario
    pa = "none" if s.pa is None else f"{s.pa:.6f}"
    lines = [f"source {s.source.value}   p_b {s.pb:.6f}   p_a {pa}", ""]
    lines += ["initial state:", format_matrix(r.initial.mat), ""]
    lines += ["after damping B:", format_matrix(r.after_b.mat)]
    lines += _report_lines("one-damped", r.report_one, fd.concurrence(r.after_b))
    if r.after_ab is not None:
        lines += ["", "after damping A:", format_matrix(r.after_ab.mat)]
        lines += _report_lines("two-damped", r.report_two, fd.concurrence(r.after_ab))
        lines += ["", f"improved                {'yes' if r.improved else 'no'}"]
        lines.append(
            f"transition              {r.report_one.classification}"
            f" -> {r.report_two.classification}"
        )
    return "\n".join(lines)


def cmd_inspect(args) -> int:
    source = args.source_pos or args.source
    pb = args.pb_pos if args.pb_pos is not None else args.pb
    pa = args.pa_pos if args.pa_pos is not None else args.pa
    if source is None or pb is None:
        raise UsageError("inspect needs a source and p_b")
    print(format_result(run(DampingScenario(source, pb, pa))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adcfef",
        description="Amplitude damping on Bell states: fully entangled fraction and repair.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the golden-value suite")
    p.add_argument("--samples", type=int, default=1_000_000, help="oracle sample count")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="write a parameter sweep to CSV")
    p.add_argument("--source", type=bell_kind, default=BellKind.PHI_PLUS)
    p.add_argument("--pb", type=probability)
    p.add_argument("--pb-range", metavar="START:STOP:STEP")
    p.add_argument("--pa-range", metavar="START:STOP:STEP")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("optimal", help="optimal second damping for a given p_b")
    p.add_argument("pb_pos", nargs="?", type=probability, metavar="PB")
    p.add_argument("--pb", type=probability)
    p.set_defaults(func=cmd_optimal)

    p = sub.add_parser("inspect", help="print every state and figure of one scenario")
    p.add_argument("source_pos", nargs="?", type=bell_kind, metavar="SOURCE")
    p.add_argument("pb_pos", nargs="?", type=probability, metavar="PB")
    p.add_argument("pa_pos", nargs="?", type=probability, metavar="PA")
    p.add_argument("--source", type=bell_kind)
    p.add_argument("--pb", type=probability)
    p.add_argument("--pa", type=probability)
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
