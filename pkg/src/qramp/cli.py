"""Command-line front end: validate -> optimize -> build -> verify -> simulate."""
import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .access import load_input, require_self_dual
from .codes import QuantumScheme, build_scheme, reconstruct_classical, share_classical
from .errors import (
    ParseError,
    QrampError,
    SimulationDisagreement,
    SolverInternal,
    VerificationMismatch,
)
from .optimizer import brute_force_ip, build_ip, solution_to_assignment, solve_ip
from .simulate import DEFAULT_CAP, cross_check
from .verify import derive_quantum_access, verify_against_spec

STAGES = ("validate", "optimize", "build", "verify", "simulate", "full")

SOLVER_REPORT = "solver_report.json"
SCHEME_BUNDLE = "scheme_bundle.json"
VERIFICATION_REPORT = "verification_report.json"
SIMULATION_REPORT = "simulation_report.json"
ERROR_FILE = "error.json"


@dataclass
class PipelineConfig:
    input: Path
    out_dir: Path
    stage: str = "full"
    seed: int = 0
    sim_cap: int = DEFAULT_CAP
    oracle: bool = False
    q: int = None
    tolerance: float = 1e-9


def _dump(path, doc):
    path.write_text(json.dumps(doc, indent=2) + "\n")


def _reached(stage, name):
    return STAGES.index(stage) >= STAGES.index(name)


def _execute(cfg, log):
    try:
        text = Path(cfg.input).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {cfg.input}: {exc}") from exc
    access, L, q_in = load_input(text)
    require_self_dual(access)
    log(f"validated: n={access.n}, {len(access.minimal_qualified)} minimal qualified sets, L={L}")
    if not _reached(cfg.stage, "optimize"):
        return

    ip = build_ip(access, L)
    sol = solve_ip(ip)
    report = sol.to_json()
    if cfg.oracle:
        ref = brute_force_ip(ip, sol.objective)
        ok = ref is not None and ref.objective == sol.objective
        report["oracle"] = {"objective": None if ref is None else ref.objective, "agrees": ok}
        _dump(cfg.out_dir / SOLVER_REPORT, report)
        if not ok:
            raise SolverInternal("exhaustive oracle disagrees with the solver")
    _dump(cfg.out_dir / SOLVER_REPORT, report)
    log(f"optimized: t={sol.t}, m={sol.m}, objective={sol.objective}")
    if not _reached(cfg.stage, "build"):
        return

    assignment = solution_to_assignment(sol, access.n)
    q = cfg.q if cfg.q is not None else q_in
    scheme = build_scheme(assignment, sol, L, q=q, seed=cfg.seed)
    _dump(cfg.out_dir / SCHEME_BUNDLE, scheme.to_json())
    log(f"built: q={scheme.q}, m'={scheme.m_prime}")
    if not _reached(cfg.stage, "verify"):
        return

    vrep = derive_quantum_access(scheme)
    mismatches = verify_against_spec(vrep, access)
    _dump(cfg.out_dir / VERIFICATION_REPORT, vrep.to_json(mismatches))
    if mismatches:
        raise VerificationMismatch(f"{len(mismatches)} subsets disagree with the requested structure")
    log(f"verified: all {2 ** access.n} subsets match")
    if not _reached(cfg.stage, "simulate"):
        return

    dim = scheme.q ** scheme.m_prime
    if dim > cfg.sim_cap:
        note = f"simulation skipped: q^m' = {dim} exceeds sim cap {cfg.sim_cap}"
        _dump(cfg.out_dir / SIMULATION_REPORT, {"skipped": note})
        log(note)
        return
    srep = cross_check(scheme, vrep, cfg.tolerance, cap=cfg.sim_cap)
    _dump(cfg.out_dir / SIMULATION_REPORT, srep.to_json())
    if not srep.agrees:
        raise SimulationDisagreement("simulated secrecy disagrees with the rank criteria")
    log("simulated: secrecy agrees with rank criteria on every subset")


def run_pipeline(cfg, log=None):
    """Run the stages up to ``cfg.stage``; return the process exit status."""
    if log is None:
        def log(msg):
            print(msg, file=sys.stderr)
    cfg.out_dir = Path(cfg.out_dir)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    try:
        _execute(cfg, log)
    except QrampError as exc:
        _dump(cfg.out_dir / ERROR_FILE, exc.to_json())
        log(json.dumps(exc.to_json()))
        return exc.exit_code
    return 0


def _int_list(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def demo_share_roundtrip(bundle_path, secret, I, seed, out=None):
    """Share ``secret`` with the bundle's scheme and reconstruct it from participants ``I``."""
    out = out or sys.stdout
    scheme = QuantumScheme.from_json(json.loads(Path(bundle_path).read_text()))
    shares = share_classical(scheme, secret, seed)
    for i, sh in enumerate(shares, start=1):
        print(f"participant {i}: {sh.tolist()}", file=out)
    s = reconstruct_classical(scheme, I, shares)
    print(f"reconstructed from {sorted(I)}: {s.tolist()}", file=out)
    return s


def main(argv=None):
    ap = argparse.ArgumentParser(prog="qramp", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="compile and verify a scheme for an access structure")
    run.add_argument("--input", required=True, type=Path)
    run.add_argument("--out-dir", required=True, type=Path)
    run.add_argument("--stage", choices=STAGES, default="full")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--sim-cap", type=int, default=DEFAULT_CAP)
    run.add_argument("--oracle", action="store_true", help="cross-check the solver by exhaustive search")
    run.add_argument("--q", type=int, default=None, help="override the field size (prime >= m)")

    demo = sub.add_parser("demo", help="classical share/reconstruct round trip on a scheme bundle")
    demo.add_argument("--bundle", required=True, type=Path)
    demo.add_argument("--secret", required=True, type=_int_list)
    demo.add_argument("--subset", required=True, type=_int_list)
    demo.add_argument("--seed", type=int, default=0)

    args = ap.parse_args(argv)
    if args.command == "run":
        cfg = PipelineConfig(
            input=args.input,
            out_dir=args.out_dir,
            stage=args.stage,
            seed=args.seed,
            sim_cap=args.sim_cap,
            oracle=args.oracle,
            q=args.q,
        )
        return run_pipeline(cfg)
    try:
        demo_share_roundtrip(args.bundle, np.array(args.secret), args.subset, args.seed)
    except (QrampError, OSError, KeyError, json.JSONDecodeError) as exc:
        err = exc.to_json() if isinstance(exc, QrampError) else {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err), file=sys.stderr)
        return getattr(exc, "exit_code", 2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
