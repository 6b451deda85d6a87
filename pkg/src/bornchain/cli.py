"""Batch driver writing plot-ready CSV/TSV tables.

    bornchain split --n 1 --m 4 --trace
    bornchain discriminate --n 2 --exponents 1,2,3
    bornchain branches --alpha 0.05 --beta 0.1 --N 50,100,300 --mode exact

Parameters may also come from a flat ``key = value`` file passed with
``--config``; command-line flags win. Without ``--out`` the table goes to
``$BORNCHAIN_OUTPUT_DIR/<command>.<format>`` (current directory if unset).

Exit codes: 0 success, 2 invalid parameters, 3 tolerance failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .born import born_probabilities, deformation_discrimination
from .branches import (
    ConcentrationQuery,
    HistoryEnsemble,
    branch_count,
    exact_fraction_within,
    min_measurements,
    sample_histories,
)
from .chain import total_norm
from .protocol import PulseSchedule, execute, plan_equalization

EXIT_OK, EXIT_INVALID, EXIT_TOLERANCE, EXIT_IO = 0, 2, 3, 4
OUTPUT_DIR_ENV = "BORNCHAIN_OUTPUT_DIR"
EQUAL_NORM_RTOL = 1e-8

DEFAULTS = {
    "split": {"n": 1, "m": 4, "trace": False},
    "discriminate": {"n": 2, "exponents": "0.5,1,1.5,2,3,4"},
    "branches": {"alpha": 0.05, "beta": 0.1, "N": "50,100,200,400,800", "mode": "exact",
                 "seed": 0, "count": 10000},
}
COMMON = {"format": "csv", "out": None}


class InvalidParameters(ValueError):
    pass


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating, Fraction)):
        return format(float(x), ".15g")
    return "" if x is None else str(x)


def read_config(path) -> dict[str, str]:
    params = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidParameters(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        params[key.lstrip("-")] = value
    return params


def _bool(v) -> bool:
    if isinstance(v, bool):
        return v
    s = str(v).strip().lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off", ""):
        return False
    raise InvalidParameters(f"not a boolean: {v!r}")


def _int(v, name) -> int:
    try:
        return int(str(v))
    except ValueError:
        raise InvalidParameters(f"{name} must be an integer, got {v!r}") from None


def _float(v, name) -> float:
    try:
        return float(v)
    except ValueError:
        raise InvalidParameters(f"{name} must be a number, got {v!r}") from None


def _list(v, conv, name) -> list:
    if isinstance(v, (list, tuple)):
        return [conv(x, name) for x in v]
    return [conv(x.strip(), name) for x in str(v).split(",") if x.strip()]


def _write(path: Path, header: str, columns: list[str], rows, delimiter: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        fh.write(f"# {header}\n")
        writer = csv.writer(fh, delimiter=delimiter, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([fmt(x) for x in row])


def run_split(p) -> tuple[list[str], list, int]:
    n, m = _int(p["n"], "n"), _int(p["m"], "m")
    if n < 1 or m < 1:
        raise InvalidParameters("n and m must be >= 1")
    trace = _bool(p["trace"])
    plan = plan_equalization(n, m)
    regions = [plan.partition.region_of(j) for j in range(plan.site_count)]

    states = [(0, plan.start_state())]
    state = states[0][1]
    for step, pulse in enumerate(plan.schedule, 1):
        state = execute(plan, state, PulseSchedule((pulse,)))
        if trace:
            states.append((step, state))
    if not trace:
        states = [(len(plan.schedule), state)]

    rows = []
    for step, s in states:
        for j, a in enumerate(s.amplitudes):
            rows.append([step, j, a.real, a.imag, abs(a) ** 2, regions[j]] + [None] * 4)
    probs = born_probabilities(state, plan.partition)
    rows.append(["summary", None, None, None, None, None,
                 probs["L"], probs["R"], Fraction(n, n + m), Fraction(m, n + m)])

    per_dot = total_norm(state) / plan.site_count
    ok = np.allclose(state.dot_norms, per_dot, rtol=EQUAL_NORM_RTOL, atol=0)
    columns = ["step", "dot_index", "re_A", "im_A", "abs2_A", "region",
               "P_L", "P_R", "count_ratio_L", "count_ratio_R"]
    return columns, rows, EXIT_OK if ok else EXIT_TOLERANCE


def run_discriminate(p):
    n = _int(p["n"], "n")
    exponents = _list(p["exponents"], _float, "exponents")
    if n < 2:
        raise InvalidParameters("n must be >= 2")
    if any(not e > 0 for e in exponents):
        raise InvalidParameters("exponents must be positive")
    result = deformation_discrimination(n, exponents) if exponents else {}
    rows = [[e, *result[float(e)]] for e in exponents]
    return ["exponent", "P_L_before", "P_L_after", "change"], rows, EXIT_OK


def run_branches(p):
    alpha, beta = _float(p["alpha"], "alpha"), _float(p["beta"], "beta")
    grid = _list(p["N"], _int, "N")
    mode = str(p["mode"])
    seed, count = _int(p["seed"], "seed"), _int(p["count"], "count")
    if mode not in ("exact", "sampled"):
        raise InvalidParameters(f"mode must be exact or sampled, got {mode!r}")
    if any(N < 1 for N in grid):
        raise InvalidParameters("every N must be >= 1")
    if count < 1:
        raise InvalidParameters("count must be >= 1")
    query = ConcentrationQuery(beta=beta, alpha=alpha)
    estimate = min_measurements(query)
    rows = []
    for N in grid:
        ensemble = HistoryEnsemble(N)
        if mode == "exact":
            typical = exact_fraction_within(ensemble, beta, "L")
        else:
            typical = sample_histories(ensemble, count, [seed, N]).fraction_within(beta, "L")
        atypical = 1 - typical
        balanced = Fraction(branch_count(ensemble, "L", N // 2), ensemble.branch_total) if N % 2 == 0 else 0.0
        rows.append([N, typical, atypical, estimate, atypical <= Fraction(repr(alpha)), balanced])
    columns = ["N", "typical_fraction", "atypical_fraction", "estimate_N", "holds", "balanced_fraction"]
    return columns, rows, EXIT_OK


COMMANDS = {"split": run_split, "discriminate": run_discriminate, "branches": run_branches}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bornchain", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"bornchain {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="flat key = value parameter file")
        sp.add_argument("--out", help="output file path")
        sp.add_argument("--format", choices=["csv", "tsv"])

    sp = sub.add_parser("split", help="run the equalization cascade for n:m")
    sp.add_argument("--n")
    sp.add_argument("--m")
    sp.add_argument("--trace", action="store_const", const=True,
                    help="write the state after every pulse, not just the final one")
    common(sp)

    sp = sub.add_parser("discriminate", help="left probability under right-side splitting, per exponent")
    sp.add_argument("--n")
    sp.add_argument("--exponents", help="comma-separated exponents")
    common(sp)

    sp = sub.add_parser("branches", help="typical/atypical history fractions over an N grid")
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    sp.add_argument("--N", help="comma-separated history lengths")
    sp.add_argument("--mode", choices=["exact", "sampled"])
    sp.add_argument("--seed")
    sp.add_argument("--count", help="sampled histories per N")
    common(sp)
    return parser


def resolve_params(command: str, args: argparse.Namespace) -> dict:
    params = {**COMMON, **DEFAULTS[command]}
    if args.config:
        try:
            cfg = read_config(args.config)
        except OSError as exc:
            raise InvalidParameters(f"cannot read config {args.config}: {exc}") from None
        unknown = set(cfg) - set(params)
        if unknown:
            raise InvalidParameters(f"unknown config keys for {command}: {', '.join(sorted(unknown))}")
        params.update(cfg)
    for key, value in vars(args).items():
        if key in params and value is not None:
            params[key] = value
    if params["format"] not in ("csv", "tsv"):
        raise InvalidParameters(f"format must be csv or tsv, got {params['format']!r}")
    return params


def output_path(command: str, params: dict) -> Path:
    if params["out"]:
        return Path(params["out"])
    base = Path(os.environ.get(OUTPUT_DIR_ENV, "."))
    return base / f"{command}.{params['format']}"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    command = args.command
    try:
        params = resolve_params(command, args)
        columns, rows, status = COMMANDS[command](params)
    except ValueError as exc:
        print(f"bornchain {command}: {exc}", file=sys.stderr)
        return EXIT_INVALID

    shown = {k: v for k, v in params.items() if k != "out"}
    header = f"bornchain {__version__} {command} " + " ".join(
        f"{k}={fmt(v)}" for k, v in sorted(shown.items())
    )
    path = output_path(command, params)
    try:
        _write(path, header, columns, rows, "\t" if params["format"] == "tsv" else ",")
    except OSError as exc:
        print(f"bornchain {command}: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    if status == EXIT_TOLERANCE:
        print(f"bornchain {command}: dot norms not equal within {EQUAL_NORM_RTOL}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
