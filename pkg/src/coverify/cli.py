"""Command-line driver.

Subcommands:

* ``verify <scenario.scn>``      -- model check; exit 0 and print SAFE, or
                                    exit 1 and write the counterexample trace
* ``classify <scenario.scn> <trace>`` -- geometric verdicts for the trace's
                                    hazard instants; exit 0 when all
                                    CONFIRMED, 3 when any POSSIBLE/SPURIOUS
* ``export <scenario.scn> cnf|trace-table|timeline`` -- artifact dumps
* ``oracle <scenario.scn>``      -- dev-only exhaustive cross-check

Exit code 2 signals unreadable or invalid input everywhere.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .encode import encode
from .exhaustive import exhaustive_verify
from .logic import conjoin
from .replay import classify
from .reports import HazardReport, render_csv, render_svg, render_text, timeline_svg, trace_table
from .sat import write_dimacs
from .traceio import TraceFormatError, read_trace, write_trace
from .world import ScenarioError, Scenario, compile_scenario, load_scenario, verify

__all__ = ["RunConfig", "run_verify", "run_classify", "run_export", "run_oracle", "main"]

EXIT_SAFE = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT_ERROR = 2
EXIT_UNCONFIRMED = 3


@dataclass(frozen=True)
class RunConfig:
    scenario: str
    bound: int | None = None
    dt: float | None = None
    seed: int = 0
    samples: int = 100_000
    fmt: str = "text"
    out: str | None = None

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("sample count must be >= 1")
        if self.bound is not None and self.bound < 0:
            raise ValueError("bound must be >= 0")


def _load(cfg: RunConfig) -> Scenario:
    scenario = load_scenario(cfg.scenario)
    if cfg.bound is not None:
        scenario = replace(scenario, bound=cfg.bound)
    if cfg.dt is not None:
        scenario = replace(scenario, dt=cfg.dt)
    return scenario


def _write(path: Path, content: str) -> None:
    path.write_text(content, encoding="utf-8")


def run_verify(cfg: RunConfig) -> int:
    """SAFE -> 0; counterexample -> 1 plus a trace file; bad input -> 2."""
    try:
        scenario = _load(cfg)
        result = verify(scenario)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if result.safe:
        print("SAFE")
        return EXIT_SAFE
    out = Path(cfg.out) if cfg.out else Path(cfg.scenario).with_suffix(".trace").name
    _write(Path(out), write_trace(result.trace))
    worst = max(v.risk for v in result.violations)
    print(
        f"UNSAFE: {len(result.violations)} hazard instant(s) exceed threshold "
        f"{scenario.threshold} (worst risk {worst}); trace written to {out}"
    )
    return EXIT_COUNTEREXAMPLE


def run_classify(cfg: RunConfig, trace_path: str) -> int:
    """Write the hazard report; 0 if everything is CONFIRMED, else 3."""
    try:
        scenario = _load(cfg)
        model = compile_scenario(scenario)
        trace = read_trace(Path(trace_path).read_text(encoding="utf-8"), model.symbols)
        if trace.bound != scenario.bound:
            raise TraceFormatError(
                f"trace bound {trace.bound} differs from scenario bound {scenario.bound}"
            )
        rows = classify(trace, scenario, samples=cfg.samples, seed=cfg.seed)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    report = HazardReport(scenario.name, tuple(rows))
    if cfg.fmt == "csv":
        rendered = render_csv(report)
        default_name = f"{scenario.name}_hazards.csv"
    elif cfg.fmt == "svg":
        rendered = render_svg(report, trace)
        default_name = f"{scenario.name}_hazards.svg"
    else:
        rendered = render_text(report)
        default_name = None
    if cfg.out:
        _write(Path(cfg.out), rendered)
    elif default_name:
        _write(Path(default_name), rendered)
    else:
        print(rendered, end="")
    return EXIT_SAFE if report.all_confirmed else EXIT_UNCONFIRMED


def run_export(cfg: RunConfig, what: str, trace_path: str | None = None) -> int:
    try:
        scenario = _load(cfg)
        if what == "cnf":
            model = compile_scenario(scenario)
            cnf, _ = encode(conjoin(model.formulas), model.symbols, scenario.bound)
            content = write_dimacs(cnf)
            suffix = ".cnf"
        elif what in ("trace-table", "timeline"):
            if trace_path is None:
                raise ValueError(f"export {what} needs --trace <file>")
            model = compile_scenario(scenario)
            trace = read_trace(Path(trace_path).read_text(encoding="utf-8"), model.symbols)
            if what == "trace-table":
                content = trace_table(trace)
                suffix = ".txt"
            else:
                content = timeline_svg(trace)
                suffix = ".svg"
        else:
            raise ValueError(f"unknown export kind {what!r}")
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    out = Path(cfg.out) if cfg.out else Path(f"{scenario.name}_{what.replace('-', '_')}{suffix}")
    _write(out, content)
    print(f"wrote {out}")
    return EXIT_SAFE


def run_oracle(cfg: RunConfig) -> int:
    """Exhaustive verdict (small scenarios only); mirrors verify's exit codes."""
    try:
        scenario = _load(cfg)
        safe = exhaustive_verify(scenario)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print("SAFE" if safe else "UNSAFE")
    return EXIT_SAFE if safe else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverify",
        description="Bounded model checking of workcell scenarios with geometric trace replay.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("scenario", help="scenario file (.scn)")
        p.add_argument("--bound", type=int, default=None, help="override the trace bound")
        p.add_argument("--dt", type=float, default=None, help="override seconds per instant")
        p.add_argument("--out", default=None, help="output file path")

    p_verify = sub.add_parser("verify", help="model check a scenario")
    common(p_verify)

    p_classify = sub.add_parser("classify", help="geometrically classify a counterexample")
    common(p_classify)
    p_classify.add_argument("trace", help="trace file produced by verify")
    p_classify.add_argument("--seed", type=int, default=0, help="Monte Carlo seed")
    p_classify.add_argument("--samples", type=int, default=100_000, help="Monte Carlo samples")
    p_classify.add_argument("--format", dest="fmt", choices=("text", "csv", "svg"), default="text")

    p_export = sub.add_parser("export", help="dump derived artifacts")
    common(p_export)
    p_export.add_argument("what", choices=("cnf", "trace-table", "timeline"))
    p_export.add_argument("--trace", default=None, help="trace file for trace-table/timeline")

    p_oracle = sub.add_parser("oracle", help="dev-only exhaustive cross-check")
    common(p_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            scenario=args.scenario,
            bound=args.bound,
            dt=args.dt,
            seed=getattr(args, "seed", 0),
            samples=getattr(args, "samples", 100_000),
            fmt=getattr(args, "fmt", "text"),
            out=args.out,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.command == "verify":
        return run_verify(cfg)
    if args.command == "classify":
        return run_classify(cfg, args.trace)
    if args.command == "export":
        return run_export(cfg, args.what, args.trace)
    return run_oracle(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
