"""Command-line front end: design pairs, evaluate schedules, compare metrics.

Pairs are persisted as JSON archives with explicit [re, im] entry lists so
they diff cleanly and round-trip losslessly; surfaces are written as CSV
tables with one row per (delay, doppler) cell.

Exit codes: 0 success, 2 usage or data error, 1 internal failure.  The
environment variable ``QOZCP_OUT_DIR`` supplies a default directory for
relative output paths.
"""

import argparse
import json
import os
import sys

import numpy as np

from .ambiguity import (
    OMEGA2_DOPPLER_MAX,
    OMEGA2_SAMPLES,
    AmbiguitySurface,
    DelayDopplerGrid,
    ambiguity_surface,
    zone_metrics,
)
from .sequences import SequencePair, WeightProfile
from .solver import SolverConfig, solve
from .waveform import golay_pair, ptm_a_schedule, siso_schedule

ARCHIVE_FORMAT_VERSION = 1


class UsageError(Exception):
    """Bad flag combination or unreadable input; maps to exit code 2."""


def _resolve_out(path: str) -> str:
    base = os.environ.get("QOZCP_OUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _seq_to_json(x: np.ndarray) -> list:
    return [[float(v.real), float(v.imag)] for v in x]


def _seq_from_json(entries) -> np.ndarray:
    return np.array([complex(re, im) for re, im in entries])


def write_archive(path: str, pair: SequencePair, config: SolverConfig,
                  metrics: dict, objective_history=None) -> None:
    doc = {
        "format_version": ARCHIVE_FORMAT_VERSION,
        "L": config.L,
        "Z": config.Z,
        "mode": config.mode,
        "config": {
            "alpha": config.alpha,
            "p_e": config.p_e,
            "p_r": config.p_r if config.mode == "papr" else 1.0,
            "max_iter": config.max_iter,
            "tol": config.tol,
            "seed": pair.meta.get("seed", config.seed),
        },
        "x": _seq_to_json(pair.x),
        "y": _seq_to_json(pair.y),
        "metrics": metrics,
    }
    if objective_history is not None:
        doc["objective_history"] = [float(v) for v in objective_history]
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def read_archive(path: str) -> tuple[SequencePair, dict]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read pair archive {path!r}: {exc}") from exc
    for key in ("format_version", "L", "Z", "mode", "x", "y"):
        if key not in doc:
            raise UsageError(f"corrupt pair archive {path!r}: missing {key!r}")
    pair = SequencePair(_seq_from_json(doc["x"]), _seq_from_json(doc["y"]),
                        meta={"source": path, "Z": doc["Z"], "mode": doc["mode"]})
    if pair.length != doc["L"]:
        raise UsageError(f"corrupt pair archive {path!r}: length mismatch")
    return pair, doc


def write_surface_table(path: str, surface: AmbiguitySurface) -> None:
    with open(path, "w") as fh:
        fh.write("k,theta,re,im,modulus\n")
        for i, k in enumerate(surface.grid.delays):
            for j, theta in enumerate(surface.grid.dopplers):
                v = complex(surface.values[i, j])
                fh.write(f"{int(k)},{float(theta)!r},{v.real!r},{v.imag!r},{abs(v)!r}\n")


def _load_pair(ref: str) -> tuple[SequencePair, int | None]:
    """A pair argument is either 'golay:L' or a path to an archive."""
    if ref.startswith("golay:"):
        try:
            L = int(ref.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"bad golay length in {ref!r}") from exc
        try:
            return golay_pair(L), None
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    pair, doc = read_archive(ref)
    return pair, int(doc["Z"])


def _pair_metrics(pair: SequencePair, Z: int) -> dict:
    wp = WeightProfile.indicator(pair.length, Z)
    report = zone_metrics(pair, wp)
    out = report.as_dict()
    if report.peak_value > 0:
        out["max_aaf_sidelobe_omega1_normalized"] = (
            report.max_aaf_sidelobe_omega1 / report.peak_value)
    return out


def cmd_design(args) -> int:
    if args.mode == "unimodular" and args.papr is not None:
        raise UsageError("--papr is meaningless with --mode unimodular")
    if args.restarts < 1:
        raise UsageError("--restarts must be at least 1")
    p_r = args.papr if args.papr is not None else 5.0

    best = None
    for i in range(args.restarts):
        config = SolverConfig(
            L=args.length, Z=args.zone, alpha=args.alpha, mode=args.mode,
            p_r=p_r, max_iter=args.max_iter, tol=args.tol,
            seed=args.seed + i,
        )
        pair, state = solve(config)
        final = state.objective_history[-1]
        if best is None or final < best[2]:
            best = (pair, state, final, config)

    pair, state, _, config = best
    metrics = _pair_metrics(pair, args.zone)
    out = _resolve_out(args.out)
    write_archive(out, pair, config, metrics,
                  objective_history=state.objective_history)
    print(f"wrote {out}")
    for key, value in metrics.items():
        print(f"  {key}: {value:.6e}")
    return 0


def _build_schedule(pair: SequencePair, kind: str, n_pri: int):
    if kind == "ptm-siso":
        return siso_schedule(pair, n_pri)
    if kind == "ptm-a":
        try:
            return ptm_a_schedule(pair, n_pri)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown schedule {kind!r}")


def cmd_evaluate(args) -> int:
    pair, archive_z = _load_pair(args.pair)
    Z = args.zone if args.zone is not None else (archive_z or pair.length)
    if not 1 < Z <= pair.length:
        raise UsageError("zone must satisfy 1 < Z <= L")
    schedule = _build_schedule(pair, args.schedule, args.pri)

    grid = DelayDopplerGrid.zone(Z, args.doppler_max, args.doppler_samples)
    aaf = ambiguity_surface(schedule, 0, 0, grid)
    outputs = {f"{args.out_prefix}_aaf.csv": aaf}
    if schedule.rows == 2:
        outputs[f"{args.out_prefix}_caf.csv"] = ambiguity_surface(schedule, 0, 1, grid)

    wp = WeightProfile.indicator(pair.length, Z)
    omega2 = DelayDopplerGrid.zone(Z, OMEGA2_DOPPLER_MAX, OMEGA2_SAMPLES)
    report = zone_metrics(
        pair, wp,
        schedule=schedule if schedule.rows == 2 else None,
        omega2=omega2,
    )
    metrics = report.as_dict()
    if report.peak_value > 0:
        metrics["max_aaf_sidelobe_omega1_normalized"] = (
            report.max_aaf_sidelobe_omega1 / report.peak_value)

    for name, surface in outputs.items():
        path = _resolve_out(name)
        write_surface_table(path, surface)
        print(f"wrote {path}")
    metrics_path = _resolve_out(f"{args.out_prefix}_metrics.json")
    with open(metrics_path, "w") as fh:
        json.dump(metrics, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {metrics_path}")
    return 0


def cmd_compare(args) -> int:
    pair_a, z_a = _load_pair(args.pair[0])
    pair_b, z_b = _load_pair(args.pair[1])
    if pair_a.length != pair_b.length:
        raise UsageError("pairs have different lengths")
    zones = [z for z in (args.zone, z_a, z_b) if z is not None]
    if not zones:
        raise UsageError("no zone available; pass --zone")
    if z_a is not None and z_b is not None and z_a != z_b:
        raise UsageError("archives disagree on Z; pass --zone to override")
    Z = zones[0]

    rows = [
        ("max complementary sidelobe (|k|<Z)", "max_complementary_sidelobe_in_zone"),
        ("max cross-correlation (|k|<Z)", "max_cross_correlation_in_zone"),
        ("max AAF sidelobe (omega1)", "max_aaf_sidelobe_omega1"),
        ("max CAF (omega2)", "max_caf_omega2"),
    ]
    metrics_a = _pair_metrics(pair_a, Z)
    metrics_b = _pair_metrics(pair_b, Z)
    name_a, name_b = args.pair
    width = max(len(r[0]) for r in rows)
    print(f"{'metric':<{width}}  {name_a:>24}  {name_b:>24}")
    for label, key in rows:
        print(f"{label:<{width}}  {metrics_a[key]:>24.6e}  {metrics_b[key]:>24.6e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qozcp",
        description="Design and evaluate quasi-orthogonal Z-complementary pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", help="run the pair-design solver")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--zone", type=int, required=True)
    p.add_argument("--mode", choices=("papr", "unimodular"), default="papr")
    p.add_argument("--papr", type=float, default=None, help="PAPR cap (papr mode)")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--max-iter", type=int, default=200_000)
    p.add_argument("--tol", type=float, default=1e-14)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("evaluate", help="evaluate a schedule's ambiguity surfaces")
    p.add_argument("--pair", required=True, help="archive path or golay:L")
    p.add_argument("--schedule", choices=("ptm-siso", "ptm-a"), default="ptm-a")
    p.add_argument("--pri", type=int, default=8)
    p.add_argument("--zone", type=int, default=None)
    p.add_argument("--doppler-max", type=float, default=OMEGA2_DOPPLER_MAX)
    p.add_argument("--doppler-samples", type=int, default=OMEGA2_SAMPLES)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", help="side-by-side zone metrics of two pairs")
    p.add_argument("--pair", action="append", required=True,
                   help="archive path or golay:L (give twice)")
    p.add_argument("--zone", type=int, default=None)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compare" and len(args.pair) != 2:
        parser.exit(2, "compare needs exactly two --pair inputs\n")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
