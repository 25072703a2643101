"""Command-line interface.

Subcommands:

* ``spectrum``     — enumerate eigenstates up to an energy cutoff.
* ``wavefunction`` — tabulate one eigenstate's radial (or angular) profile.
* ``coherent``     — tabulate a time-evolved coherent profile on a grid.
* ``verify``       — run the named self-check suites and report JSON.

Outputs are deterministic for a fixed configuration and seed: CSV carries
``# key = value`` metadata lines and 17-significant-digit values; JSON is
emitted with sorted keys.  Exit codes: 0 success, 1 failed verification
checks, 2 usage or domain errors.  The DUNKL_OSC_THREADS environment variable
caps the verify thread pool.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .basis import (
    AngularQuantum,
    RadialQuantum,
    angular_wavefunction,
    energy,
    enumerate_states,
    radial_sturmian,
)
from .coherent import CoherentParams, EvolutionParams, coherent_evolved
from .errors import DomainError
from .profiles import DeformationParams
from .verify import SUITES, run_checks

__all__ = ["RunConfig", "main"]


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _parse_state(text: str) -> tuple[int, int, Fraction, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            f"state must be 's1,s2,m,nr' (e.g. '+1,-1,1/2,0'), got {text!r}"
        )
    signs = {"+1": 1, "1": 1, "+": 1, "-1": -1, "-": -1}
    try:
        s1 = signs[parts[0].strip()]
        s2 = signs[parts[1].strip()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"parities must be +1 or -1, got {text!r}") from None
    try:
        m = Fraction(parts[2].strip())
        nr = int(parts[3].strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad m or nr in state {text!r}: {exc}") from None
    return (s1, s2, m, nr)


def _parse_m(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad m value {text!r}: {exc}") from None


def _parse_xi(text: str) -> complex:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise argparse.ArgumentTypeError(f"xi must be 're' or 're,im', got {text!r}")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad xi value {text!r}: {exc}") from None
    return complex(re, im)


def _parse_taus(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tau list {text!r}: {exc}") from None
    if not values:
        raise argparse.ArgumentTypeError("tau list must contain at least one value")
    return values


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be 'min:max:n', got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}: {exc}") from None
    if not (np.isfinite(lo) and np.isfinite(hi)) or lo < 0.0 or hi <= lo or n < 2:
        raise argparse.ArgumentTypeError(
            f"grid needs 0 <= min < max and n >= 2, got {text!r}"
        )
    return (lo, hi, n)


def _parse_tol(text: str) -> tuple[str, float]:
    name, sep, raw = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"tolerance override must be NAME=VALUE, got {text!r}")
    try:
        value = float(raw)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tolerance value {text!r}: {exc}") from None
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text!r}")
    return (name.strip(), value)


@dataclass(frozen=True)
class RunConfig:
    """Parsed run settings shared by the subcommands."""

    mu: DeformationParams
    emax: float
    grid: tuple[float, float, int]
    fmt: str
    out: str | None
    seed: int
    tol_overrides: dict[str, float]

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        pairs = getattr(args, "tol", None) or []
        return cls(
            mu=DeformationParams(args.mu1, args.mu2),
            emax=getattr(args, "emax", 10.0),
            grid=getattr(args, "grid", (0.05, 10.0, 200)),
            fmt=getattr(args, "format", "csv"),
            out=getattr(args, "out", None),
            seed=getattr(args, "seed", 0),
            tol_overrides=dict(pairs),
        )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _csv_document(meta: list[tuple[str, str]], columns: list[str], rows: list[list[str]]) -> str:
    lines = [f"# {key} = {value}" for key, value in meta]
    lines.append(",".join(columns))
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_document(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    states = enumerate_states(cfg.emax, cfg.mu)
    records = [
        {
            "s1": st.s1,
            "s2": st.s2,
            "m": float(st.m),
            "nr": st.nr,
            "k": st.k,
            "l2": st.l2,
            "energy": st.energy,
        }
        for st in states
    ]
    if cfg.fmt == "json":
        doc = _json_document(
            {
                "command": "spectrum",
                "mu1": cfg.mu.mu1,
                "mu2": cfg.mu.mu2,
                "emax": cfg.emax,
                "count": len(records),
                "states": records,
            }
        )
    else:
        meta = [
            ("command", "spectrum"),
            ("mu1", _fmt(cfg.mu.mu1)),
            ("mu2", _fmt(cfg.mu.mu2)),
            ("emax", _fmt(cfg.emax)),
            ("count", str(len(records))),
        ]
        columns = ["s1", "s2", "m", "nr", "k", "l2", "energy"]
        rows = [
            [
                f"{rec['s1']:+d}",
                f"{rec['s2']:+d}",
                _fmt(rec["m"]),
                str(rec["nr"]),
                _fmt(rec["k"]),
                _fmt(rec["l2"]),
                _fmt(rec["energy"]),
            ]
            for rec in records
        ]
        doc = _csv_document(meta, columns, rows)
    _emit(doc, cfg.out)
    return 0


def _cmd_wavefunction(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    s1, s2, m, nr = args.state
    q_ang = AngularQuantum.build(s1, s2, m, cfg.mu)
    q_rad = RadialQuantum.from_m(nr, m, cfg.mu)
    E = energy(nr, m, cfg.mu)
    lo, hi, n = cfg.grid
    grid = np.linspace(lo, hi, n)
    if args.part == "radial":
        values = radial_sturmian(q_rad, cfg.mu)(grid)
        axis_name = "r"
    else:
        values = angular_wavefunction(q_ang, cfg.mu)(grid)
        axis_name = "phi"
    meta_pairs = [
        ("command", "wavefunction"),
        ("part", args.part),
        ("mu1", _fmt(cfg.mu.mu1)),
        ("mu2", _fmt(cfg.mu.mu2)),
        ("s1", f"{s1:+d}"),
        ("s2", f"{s2:+d}"),
        ("m", _fmt(float(m))),
        ("nr", str(nr)),
        ("k", _fmt(q_rad.k)),
        ("l2", _fmt(q_ang.l2)),
        ("energy", _fmt(E)),
    ]
    if cfg.fmt == "json":
        doc = _json_document(
            {
                "command": "wavefunction",
                "part": args.part,
                "mu1": cfg.mu.mu1,
                "mu2": cfg.mu.mu2,
                "s1": s1,
                "s2": s2,
                "m": float(m),
                "nr": nr,
                "k": q_rad.k,
                "l2": q_ang.l2,
                "energy": E,
                "axis": axis_name,
                "grid": [float(v) for v in grid],
                "values": [float(v) for v in values],
            }
        )
    else:
        rows = [[_fmt(r), _fmt(v)] for r, v in zip(grid, values)]
        doc = _csv_document(meta_pairs, [axis_name, "value"], rows)
    _emit(doc, cfg.out)
    return 0


def _cmd_coherent(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    m = args.m
    k = float(m) + 0.5 * (cfg.mu.total + 1.0)
    p = CoherentParams(xi=args.xi, k=k)
    lo, hi, n = cfg.grid
    grid = np.linspace(lo, hi, n)
    meta_pairs = [
        ("command", "coherent"),
        ("mu1", _fmt(cfg.mu.mu1)),
        ("mu2", _fmt(cfg.mu.mu2)),
        ("m", _fmt(float(m))),
        ("k", _fmt(k)),
        ("xi_re", _fmt(p.xi.real)),
        ("xi_im", _fmt(p.xi.imag)),
    ]
    blocks = []
    for tau in args.tau:
        values = coherent_evolved(grid, p, EvolutionParams(tau), m, cfg.mu)
        blocks.append((tau, values))
    if cfg.fmt == "json":
        doc = _json_document(
            {
                "command": "coherent",
                "mu1": cfg.mu.mu1,
                "mu2": cfg.mu.mu2,
                "m": float(m),
                "k": k,
                "xi": [p.xi.real, p.xi.imag],
                "grid": [float(v) for v in grid],
                "profiles": [
                    {
                        "tau": tau,
                        "re": [float(v.real) for v in values],
                        "im": [float(v.imag) for v in values],
                    }
                    for tau, values in blocks
                ],
            }
        )
    else:
        rows = []
        for tau, values in blocks:
            for r, v in zip(grid, values):
                rows.append(
                    [_fmt(tau), _fmt(r), _fmt(v.real), _fmt(v.imag), _fmt(abs(v) ** 2)]
                )
        doc = _csv_document(meta_pairs, ["tau", "r", "re", "im", "abs2"], rows)
    _emit(doc, cfg.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    results = run_checks(
        suite=args.suite,
        mu=cfg.mu,
        seed=cfg.seed,
        tol_overrides=cfg.tol_overrides,
    )
    payload = [
        {
            "name": res.name,
            "suite": res.suite,
            "residual": res.residual if math.isfinite(res.residual) else None,
            "tolerance": res.tolerance,
            "passed": res.passed,
            "error": res.error,
        }
        for res in results
    ]
    doc = _json_document(payload)
    _emit(doc, cfg.out)
    failed = [res for res in results if not res.passed]
    if cfg.out is not None:
        total = len(results)
        if failed:
            sys.stdout.write(f"FAIL: {len(failed)}/{total} checks failed\n")
        else:
            sys.stdout.write(f"PASS: {total} checks\n")
    return 1 if failed else 0


def _add_common(parser: argparse.ArgumentParser, default_mu: float) -> None:
    parser.add_argument("--mu1", type=float, default=default_mu, help="deformation parameter mu1")
    parser.add_argument("--mu2", type=float, default=default_mu, help="deformation parameter mu2")
    parser.add_argument("--out", default=None, help="write output to this path instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunkl-osc",
        description="Reflection-deformed isotropic oscillator: spectra, "
        "wavefunctions, coherent states, and self-verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="enumerate eigenstates up to an energy cutoff")
    _add_common(p_spec, 0.0)
    p_spec.add_argument("--emax", type=float, default=10.0, help="energy cutoff")
    p_spec.add_argument("--format", choices=("csv", "json"), default="csv")
    p_spec.set_defaults(handler=_cmd_spectrum)

    p_wave = sub.add_parser("wavefunction", help="tabulate one eigenstate profile")
    _add_common(p_wave, 0.0)
    p_wave.add_argument("--state", type=_parse_state, required=True, help="s1,s2,m,nr")
    p_wave.add_argument("--part", choices=("radial", "angular"), default="radial")
    p_wave.add_argument(
        "--grid", type=_parse_grid, default=(0.05, 10.0, 200), help="min:max:n"
    )
    p_wave.add_argument("--format", choices=("csv", "json"), default="csv")
    p_wave.set_defaults(handler=_cmd_wavefunction)

    p_coh = sub.add_parser("coherent", help="tabulate a time-evolved coherent profile")
    _add_common(p_coh, 0.0)
    p_coh.add_argument("--xi", type=_parse_xi, required=True, help="re,im with |xi| < 1")
    p_coh.add_argument("--m", type=_parse_m, default=Fraction(0), help="sector quantum number")
    p_coh.add_argument("--tau", type=_parse_taus, default=(0.0,), help="comma list of times")
    p_coh.add_argument(
        "--grid", type=_parse_grid, default=(0.05, 10.0, 200), help="min:max:n"
    )
    p_coh.add_argument("--format", choices=("csv", "json"), default="csv")
    p_coh.set_defaults(handler=_cmd_coherent)

    p_ver = sub.add_parser("verify", help="run named self-checks and report JSON")
    _add_common(p_ver, 0.5)
    p_ver.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument(
        "--tol",
        type=_parse_tol,
        action="append",
        metavar="NAME=VAL",
        help="override a named tolerance (repeatable)",
    )
    p_ver.set_defaults(handler=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
