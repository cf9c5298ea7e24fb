"""Command-line surface: state checking, mixing, the thermal model and sweeps.

Exit codes: 0 on success, 1 on usage errors, 2 on domain or model errors.
Complex-valued flags accept ``re`` or ``re,im``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import classicality, measures, mixer, oracle, tmtss
from .covariance import (
    COMMUTATOR_SIGNATURE,
    DEFAULT_TOL,
    GaussianParams,
    build_covariance,
    is_physical,
    is_separable,
    params_from_matrix,
    partial_transpose,
)
from .errors import (
    DegenerateStateError,
    ModelValidityError,
    NonPhysicalStateError,
    NumericDomainError,
)


@dataclass(frozen=True)
class SweepConfig:
    """Grid description for the entanglement-degree surface."""

    r: float = 1.0
    n_min: float = 0.5
    n_max: float = 3.5
    n_steps: int = 141
    m_min: float = 0.0
    m_max: float = 3.0
    m_steps: int = 121
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.r <= 0.0 or not math.isfinite(self.r):
            raise ValueError("reference squeezing r must be positive")
        if self.n_steps < 2 or self.m_steps < 2:
            raise ValueError("grids need at least 2 steps per axis")
        if not (self.n_max > self.n_min and self.m_max > self.m_min):
            raise ValueError("grid maxima must exceed minima")
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")

    def n_values(self) -> np.ndarray:
        return np.linspace(self.n_min, self.n_max, self.n_steps)

    def m_values(self) -> np.ndarray:
        return np.linspace(self.m_min, self.m_max, self.m_steps)


@dataclass(frozen=True)
class SweepRecord:
    n: float
    m: float
    label: str
    degree: float | None


def sweep_grid(cfg: SweepConfig) -> list[SweepRecord]:
    """Classify and score every grid point, row-major with n as the outer axis."""
    records = []
    for n in cfg.n_values():
        for m in cfg.m_values():
            label = tmtss.classify_symmetric(float(n), float(m), cfg.tol)
            degree = None
            if label != "nonphysical":
                state = GaussianParams(n1=float(n), n2=float(n), m_c=float(m))
                report = measures.entanglement_degree(state, cfg.r, cfg.tol)
                degree = report.degree
            records.append(SweepRecord(n=float(n), m=float(m), label=label, degree=degree))
    return records


def run_check(p: GaussianParams, r: float, tol: float = DEFAULT_TOL) -> dict:
    """Full classification of one state: criteria flags plus the measure chain."""
    if not is_physical(p, tol):
        raise NonPhysicalStateError("state violates the uncertainty principle")
    report = measures.entanglement_degree(p, r, tol)
    v = build_covariance(p)
    return {
        "physical": True,
        "separable": report.separable,
        "p_representable": classicality.is_p_representable_joint(v, tol),
        "fidelity": report.fidelity,
        "bures": report.bures,
        "degree": report.degree,
        "r": float(r),
    }


def write_sweep_csv(records: list[SweepRecord], stream) -> None:
    # 9 significant digits, '\n' endings, empty E column for nonphysical rows
    stream.write("n,m,class,E\n")
    for rec in records:
        e = f"{rec.degree:.8e}" if rec.degree is not None else ""
        stream.write(f"{rec.n:.8e},{rec.m:.8e},{rec.label},{e}\n")


def write_sweep_matrix(cfg: SweepConfig, records: list[SweepRecord], stream) -> None:
    # gnuplot nonuniform-matrix block: first row holds the m coordinates,
    # each following row is n followed by the E values (nan where nonphysical)
    m_vals = cfg.m_values()
    stream.write(" ".join([str(len(m_vals))] + [f"{m:.8e}" for m in m_vals]) + "\n")
    for i in range(cfg.n_steps):
        row = records[i * cfg.m_steps : (i + 1) * cfg.m_steps]
        cells = [f"{row[0].n:.8e}"]
        for rec in row:
            cells.append(f"{rec.degree:.8e}" if rec.degree is not None else "nan")
        stream.write(" ".join(cells) + "\n")


def parse_complex(text: str) -> complex:
    parts = [chunk.strip() for chunk in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _matrix_pairs(a: np.ndarray) -> list[list[float]]:
    return [_pair(complex(x)) for x in np.asarray(a).ravel(order="C")]


def _complex_from_json(value) -> complex:
    if isinstance(value, (int, float)):
        return complex(value, 0.0)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    raise ValueError(f"cannot read complex value from {value!r}")


def load_state(path: str) -> GaussianParams:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return GaussianParams(
        n1=float(data["n1"]),
        n2=float(data["n2"]),
        m1=_complex_from_json(data.get("m1", 0.0)),
        m2=_complex_from_json(data.get("m2", 0.0)),
        m_s=_complex_from_json(data.get("ms", 0.0)),
        m_c=_complex_from_json(data.get("mc", 0.0)),
    )


def state_to_json(p: GaussianParams) -> dict:
    return {
        "n1": p.n1,
        "n2": p.n2,
        "m1": _pair(p.m1),
        "m2": _pair(p.m2),
        "ms": _pair(p.m_s),
        "mc": _pair(p.m_c),
    }


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_state_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n1", type=float, required=True)
    parser.add_argument("--n2", type=float, required=True)
    parser.add_argument("--m1", type=parse_complex, default=0j)
    parser.add_argument("--m2", type=parse_complex, default=0j)
    parser.add_argument("--ms", type=parse_complex, default=0j)
    parser.add_argument("--mc", type=parse_complex, default=0j)


def build_parser() -> _Parser:
    parser = _Parser(prog="gausspair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="classify one state and report its measures")
    _add_state_flags(check)
    check.add_argument("--r", type=float, default=1.0, help="reference squeezing")
    check.add_argument("--tol", type=float, default=DEFAULT_TOL)

    transform = sub.add_parser("transform", help="push a state file through the mixer")
    transform.add_argument("--state", required=True, help="JSON state file")
    transform.add_argument("--theta", type=float, required=True, help="mixing angle, radians")
    transform.add_argument("--phi0", type=float, default=0.0)
    transform.add_argument("--phi1", type=float, default=0.0)
    transform.add_argument("--tol", type=float, default=DEFAULT_TOL)

    sweep = sub.add_parser("sweep", help="entanglement-degree surface over the (n, m) grid")
    sweep.add_argument("--r", type=float, default=1.0)
    sweep.add_argument("--n-min", type=float, default=0.5)
    sweep.add_argument("--n-max", type=float, default=3.5)
    sweep.add_argument("--n-steps", type=int, default=141)
    sweep.add_argument("--m-min", type=float, default=0.0)
    sweep.add_argument("--m-max", type=float, default=3.0)
    sweep.add_argument("--m-steps", type=int, default=121)
    sweep.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sweep.add_argument("--format", choices=("csv", "matrix"), default="csv")
    sweep.add_argument("--out", help="output file (stdout when omitted)")

    model = sub.add_parser("tmtss", help="thermal squeezed pair parameters")
    model.add_argument("--d", type=float, required=True, help="diffusion, gamma*t")
    model.add_argument("--r", type=float, required=True, help="squeezing, kappa*t")
    model.add_argument("--nbar", type=float, default=0.0)
    model.add_argument("--tol", type=float, default=DEFAULT_TOL)

    # debugging surface, deliberately absent from the help text
    probe = sub.add_parser("oracle")
    probe_sub = probe.add_subparsers(dest="oracle_command", required=True)
    fock = probe_sub.add_parser("fock")
    fock.add_argument("--l1", type=float, required=True)
    fock.add_argument("--l2", type=float, required=True)
    eig = probe_sub.add_parser("eigmin")
    eig.add_argument("--state", required=True)
    eig.add_argument("--which", choices=("phys", "sep", "prep"), default="phys")
    quad = probe_sub.add_parser("quad")
    quad.add_argument("--state-a", required=True)
    quad.add_argument("--state-b", required=True)
    quad.add_argument("--nodes", type=int, default=32)

    return parser


def cmd_check(args) -> dict:
    p = GaussianParams(n1=args.n1, n2=args.n2, m1=args.m1, m2=args.m2,
                       m_s=args.ms, m_c=args.mc)
    return run_check(p, args.r, args.tol)


def cmd_transform(args) -> dict:
    p = load_state(args.state)
    cfg = mixer.MixerConfig(theta=args.theta, phi0=args.phi0, phi1=args.phi1)
    blocks = mixer.transform_blocks(p, cfg)
    r1, r2 = mixer.coupling_residuals(p, cfg)
    mode1 = classicality.mode_params(blocks.v1p)
    mode2 = classicality.mode_params(blocks.v2p)
    return {
        "v1p": _matrix_pairs(blocks.v1p),
        "v2p": _matrix_pairs(blocks.v2p),
        "cp": _matrix_pairs(blocks.cp),
        "mode1": {"n": mode1.n, "m": _pair(mode1.m)},
        "mode2": {"n": mode2.n, "m": _pair(mode2.m)},
        "residuals": {"anomalous": _pair(r1), "balance": _pair(r2)},
        "decoupled": bool(max(abs(r1), abs(r2)) < args.tol),
    }


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        r=args.r,
        n_min=args.n_min, n_max=args.n_max, n_steps=args.n_steps,
        m_min=args.m_min, m_max=args.m_max, m_steps=args.m_steps,
        tol=args.tol,
    )
    records = sweep_grid(cfg)
    writer = write_sweep_csv if args.format == "csv" else (
        lambda recs, stream: write_sweep_matrix(cfg, recs, stream)
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer(records, fh)
    else:
        writer(records, sys.stdout)
    return 0


def cmd_tmtss(args) -> dict:
    inputs = tmtss.TmtssInputs(d=args.d, r=args.r, nbar=args.nbar)
    p = tmtss.tmtss_params(inputs, args.tol)
    out = state_to_json(p)
    out["p1"] = inputs.p1
    out["p2"] = inputs.p2
    return out


def cmd_oracle(args) -> dict:
    if args.oracle_command == "fock":
        return {"overlap": oracle.overlap_fock_tmsv(args.l1, args.l2)}
    if args.oracle_command == "eigmin":
        v = build_covariance(load_state(args.state))
        if args.which == "phys":
            h = v + 0.5 * COMMUTATOR_SIGNATURE
        elif args.which == "sep":
            h = partial_transpose(v) + 0.5 * COMMUTATOR_SIGNATURE
        else:
            h = v - 0.5 * np.eye(4)
        return {"eig_min": oracle.eig_min_hermitian(h)}
    va = build_covariance(load_state(args.state_a))
    vb = build_covariance(load_state(args.state_b))
    value = oracle.overlap_numint(va, vb, oracle.QuadratureSpec(nodes=args.nodes))
    return {"overlap": value}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            payload = cmd_check(args)
        elif args.command == "transform":
            payload = cmd_transform(args)
        elif args.command == "sweep":
            return cmd_sweep(args)
        elif args.command == "tmtss":
            payload = cmd_tmtss(args)
        else:
            payload = cmd_oracle(args)
    except ModelValidityError as err:
        _print_error(err, n=err.n, m=err.m)
        return 2
    except (NonPhysicalStateError, DegenerateStateError, NumericDomainError, ValueError) as err:
        _print_error(err)
        return 2
    except OSError as err:
        _print_error(err)
        return 2
    print(json.dumps(payload, sort_keys=True))
    return 0


def _print_error(err: Exception, **extra) -> None:
    payload = {"error": type(err).__name__, "message": str(err)}
    payload.update(extra)
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
