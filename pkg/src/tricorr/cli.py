"""Command-line front end.

Subcommands::

    tricorr pairwise --p P1 P2 P3 --parity {even,odd} [--oracle] ...
    tricorr global   --alpha A    --parity {even,odd} [--kind K ...] ...
    tricorr sweep    (--figure {1,2,3} | --parity ... --p-min ... --p-max ... --steps ...)
    tricorr verify   [--seed N] [--tol X]

Numbers serialize with 12 significant digits in CSV and at full float
precision in JSON; output is deterministic for a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import aggregate, catstates, checks
from .catstates import SWEEP_KINDS, SweepTable, overlap_from_alpha
from .linalg import LinalgError
from .mapping import (
    MODES,
    MixedPair,
    OverlapConfig,
    PureSplit,
    SingularNormalizationError,
)
from .measures import PairwiseReport, pairwise_report


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, normalized from the parsed arguments."""

    command: str
    p: Optional[tuple[float, float, float]] = None
    alpha: Optional[float] = None
    parity: Optional[str] = None
    kinds: tuple[str, ...] = ()
    fmt: str = "csv"
    out: Optional[str] = None
    oracle: bool = False
    normalized: bool = False
    tol: Optional[float] = None
    seed: int = checks.DEFAULT_SEED
    figure: Optional[int] = None
    p_min: float = 0.0
    p_max: float = 1.0
    steps: int = catstates.FIGURE_STEPS

    def overlap_config(self) -> OverlapConfig:
        if (self.p is None) == (self.alpha is None):
            raise ValueError("exactly one of --p and --alpha must be given")
        if self.alpha is not None:
            p = overlap_from_alpha(self.alpha)
            overlaps: tuple[float, float, float] = (p, p, p)
        else:
            overlaps = self.p
        assert self.parity is not None
        return OverlapConfig.from_parity(*overlaps, self.parity)


def fmt12(x: float) -> str:
    """12 significant digits; enough to round-trip the library's guarantees."""
    return format(float(x), ".12g")


def _csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def table_to_csv(table: SweepTable) -> str:
    return _csv(table.columns, [[fmt12(v) for v in row] for row in table.rows])


_PAIRWISE_FIELDS = (
    "concurrence",
    "eof",
    "discord_forward",
    "discord_backward",
    "geometric_discord_forward",
    "geometric_discord_backward",
)
_ORACLE_FIELDS = (
    "concurrence_oracle",
    "discord_forward_oracle",
    "discord_backward_oracle",
    "geometric_discord_forward_oracle",
    "geometric_discord_backward_oracle",
)


def _report_dict(report: PairwiseReport) -> dict:
    data: dict = {"bipartition": report.label(), "normalized": report.normalized}
    for name in _PAIRWISE_FIELDS:
        data[name] = getattr(report, name)
    for name in _ORACLE_FIELDS:
        value = getattr(report, name)
        if value is not None:
            data[name] = value
            closed = getattr(report, name.removesuffix("_oracle"))
            data[name.replace("_oracle", "_delta")] = abs(closed - value)
    return data


def pairwise_to_csv(reports: Sequence[PairwiseReport]) -> str:
    with_oracle = any(r.concurrence_oracle is not None for r in reports)
    header = ["bipartition", *_PAIRWISE_FIELDS]
    if with_oracle:
        for name in _ORACLE_FIELDS:
            header.extend([name, name.replace("_oracle", "_delta")])
    rows = []
    for report in reports:
        data = _report_dict(report)
        rows.append([data["bipartition"]] + [fmt12(data[k]) for k in header[1:]])
    return _csv(header, rows)


def global_to_csv(reports: Sequence[aggregate.GlobalReport]) -> str:
    term_labels = [label for label, _ in reports[0].terms]
    header = (
        ["kind", "value", "monogamy_pivot1", "monogamy_pivot2", "monogamy_pivot3",
         "conservation_residual", "delta_plus_residual", "delta_minus_residual"]
        + [f"term_{label}" for label in term_labels]
    )
    rows = []
    for rep in reports:
        row = [rep.kind, fmt12(rep.value)]
        row += [fmt12(v) for v in rep.monogamy_residuals]
        row += [fmt12(rep.conservation_residual), fmt12(rep.delta_plus_residual),
                fmt12(rep.delta_minus_residual)]
        row += [fmt12(v) for _, v in rep.terms]
        rows.append(row)
    return _csv(header, rows)


def _global_dict(rep: aggregate.GlobalReport) -> dict:
    return {
        "kind": rep.kind,
        "value": rep.value,
        "terms": [[label, value] for label, value in rep.terms],
        "monogamy_residuals": list(rep.monogamy_residuals),
        "conservation_residual": rep.conservation_residual,
        "delta_plus_residual": rep.delta_plus_residual,
        "delta_minus_residual": rep.delta_minus_residual,
        "normalized": rep.normalized,
    }


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_pairwise(run: RunConfig) -> int:
    cfg = run.overlap_config()
    bipartitions = [PureSplit(k) for k in MODES]
    bipartitions += [MixedPair(i, j) for i, j in ((1, 2), (1, 3), (2, 3))]
    oracle_tol = run.tol if run.tol is not None else 1e-6
    reports = [
        pairwise_report(cfg, b, include_oracle=run.oracle, oracle_tol=oracle_tol,
                        normalized=run.normalized)
        for b in bipartitions
    ]
    if run.fmt == "json":
        _emit(json.dumps([_report_dict(r) for r in reports], indent=2) + "\n", run.out)
    else:
        _emit(pairwise_to_csv(reports), run.out)
    return 0


def cmd_global(run: RunConfig) -> int:
    cfg = run.overlap_config()
    kinds = run.kinds or aggregate.KINDS
    reports = [aggregate.global_measure(cfg, kind, run.normalized) for kind in kinds]
    if run.fmt == "json":
        _emit(json.dumps([_global_dict(r) for r in reports], indent=2) + "\n", run.out)
    else:
        _emit(global_to_csv(reports), run.out)
    return 0


def cmd_sweep(run: RunConfig) -> int:
    if run.figure is not None:
        table = catstates.figure_table(run.figure, run.steps)
    else:
        if run.parity is None:
            raise ValueError("sweep needs either --figure or --parity")
        kinds = run.kinds or None
        table = catstates.sweep(run.parity, run.p_min, run.p_max, run.steps, kinds)
    _emit(table_to_csv(table), run.out)
    return 0


def cmd_verify(run: RunConfig) -> int:
    results = checks.run_checks(seed=run.seed, oracle_tol=run.tol)
    summary = {
        "seed": run.seed,
        "oracle_tolerance_override": run.tol,
        "checks": [r.to_dict() for r in results],
        "passed": all(r.passed for r in results),
    }
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    _emit(text, run.out)
    if run.out is not None:
        sys.stdout.write(text)
    return 0 if summary["passed"] else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_state_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--p", nargs=3, type=float, metavar=("P1", "P2", "P3"),
                        help="three mode overlaps in [0, 1]")
    source.add_argument("--alpha", type=float,
                        help="coherent amplitude |alpha| of a symmetric cat state")
    parser.add_argument("--parity", choices=("even", "odd"), required=True,
                        help="relative phase of the superposition")


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", metavar="PATH", help="write to a file instead of stdout")
    parser.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    parser.add_argument("--tol", type=float, default=None,
                        help="tolerance override (oracle search/equivalence)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricorr",
        description="Quantum-correlation measures for tripartite nonorthogonal states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_pair = sub.add_parser("pairwise", help="all measures for every bipartition")
    _add_state_arguments(p_pair)
    p_pair.add_argument("--oracle", action="store_true",
                        help="add independent numeric verification columns")
    p_pair.add_argument("--normalized", action="store_true",
                        help="report geometric discord on the doubled scale")
    _add_output_arguments(p_pair)

    p_glob = sub.add_parser("global", help="twelve-term global measures and residuals")
    _add_state_arguments(p_glob)
    p_glob.add_argument("--kind", action="append", choices=aggregate.KINDS, default=None,
                        help="measure kind (repeatable; default: all)")
    p_glob.add_argument("--normalized", action="store_true")
    _add_output_arguments(p_glob)

    p_sweep = sub.add_parser("sweep", help="tabulate symmetric cat-state measures")
    p_sweep.add_argument("--figure", type=int, choices=(1, 2, 3),
                         help="preset sweep matching a standard comparison plot")
    p_sweep.add_argument("--parity", choices=("even", "odd"))
    p_sweep.add_argument("--p-min", type=float, default=0.0)
    p_sweep.add_argument("--p-max", type=float, default=1.0)
    p_sweep.add_argument("--steps", type=int, default=catstates.FIGURE_STEPS)
    p_sweep.add_argument("--kind", action="append", choices=SWEEP_KINDS, default=None,
                         help="column to tabulate (repeatable; default: all)")
    p_sweep.add_argument("--out", metavar="PATH")

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override the oracle-equivalence gates")
    p_verify.add_argument("--out", metavar="PATH")

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        p=tuple(args.p) if getattr(args, "p", None) is not None else None,
        alpha=getattr(args, "alpha", None),
        parity=getattr(args, "parity", None),
        kinds=tuple(args.kind) if getattr(args, "kind", None) else (),
        fmt=getattr(args, "format", "csv"),
        out=getattr(args, "out", None),
        oracle=getattr(args, "oracle", False),
        normalized=getattr(args, "normalized", False),
        tol=getattr(args, "tol", None),
        seed=getattr(args, "seed", checks.DEFAULT_SEED),
        figure=getattr(args, "figure", None),
        p_min=getattr(args, "p_min", 0.0),
        p_max=getattr(args, "p_max", 1.0),
        steps=getattr(args, "steps", catstates.FIGURE_STEPS),
    )


_COMMANDS = {
    "pairwise": cmd_pairwise,
    "global": cmd_global,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run = _run_config(args)
    try:
        return _COMMANDS[run.command](run)
    except (SingularNormalizationError, LinalgError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
