"""Command-line entry point.

Results go to stdout, logs to stderr.  Exit status: 0 success, 1 failed
verification, 2 usage error (bad shape, cap exceeded, unknown option).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Any, Sequence

from .sweeps import SUITES, SweepConfig, SweepReport, default_jobs, run_suite
from .young import YoungDiagram

log = logging.getLogger("capelli")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Hard limits on single computations and sweep caps; beyond these the run
# would take hours or exhaust memory.
MAX_SHAPE = 7
MAX_PAIR_TOTAL = 8
MAX_CAPELLI_N = 4
MAX_RANK = 4

# Sweep caps above these defaults are accepted with a wall-clock warning.
SOFT_CAPS = {"max_n": 5, "max_pair_n": 4, "max_pair_m": 4, "max_N": 3, "max_M": 3, "capelli_max_n": 3}
HARD_CAPS = {"max_n": 7, "max_pair_n": 5, "max_pair_m": 5, "max_N": 4, "max_M": 4, "capelli_max_n": 4}

FORMULAS = {"character": "character", "product": "product", "image": "image", "1.1": "character", "1.3": "product"}


class UsageError(Exception):
    pass


def _shape(s: str) -> YoungDiagram:
    try:
        return YoungDiagram.parse(s)
    except ValueError as exc:
        raise UsageError(f"bad shape {s!r}: {exc}") from None


def _cap(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise UsageError(f"{what} = {value} exceeds the limit {limit}")


def _emit(args, payload: Any, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


# Subcommands ------------------------------------------------------------


def cmd_fusion(args) -> int:
    from .fusion import fusion_limit

    lam = _shape(args.shape)
    _cap(lam.n, MAX_SHAPE, "shape size")
    x = fusion_limit(lam, args.order)
    _emit(args, x.to_json(), repr(x))
    return EXIT_OK


def cmd_upsilon(args) -> int:
    from .fusion import upsilon_limit

    lam = _shape(args.shape)
    _cap(lam.n, MAX_SHAPE, "shape size")
    x = upsilon_limit(lam)
    _emit(args, x.to_json(), repr(x))
    return EXIT_OK


def cmd_symmetrizer(args) -> int:
    from .young import column_antisymmetrizer, idempotent, phi_lambda, qp_product, row_symmetrizer

    lam = _shape(args.shape)
    _cap(lam.n, MAX_SHAPE, "shape size")
    x = {
        "phi": phi_lambda,
        "P": row_symmetrizer,
        "Q": column_antisymmetrizer,
        "QP": qp_product,
        "idempotent": idempotent,
    }[args.part](lam)
    _emit(args, x.to_json(), repr(x))
    return EXIT_OK


def cmd_phi_pair(args) -> int:
    from .fusion import phi_lambda_mu, pole_order_bound, pole_order_phi

    lam, mu = _shape(args.lam), _shape(args.mu)
    _cap(lam.n + mu.n, MAX_PAIR_TOTAL, "total size of the two shapes")
    if args.pole_order:
        order = pole_order_phi(lam, mu)
        bound = pole_order_bound(lam, mu) if lam else 0
        if args.format == "json":
            _emit(args, order, "")
        else:
            _emit(args, None, f"pole order {order} (bound {bound})")
        return EXIT_OK
    x = phi_lambda_mu(lam, mu)
    _emit(args, x.to_json(), repr(x))
    return EXIT_OK


def cmd_shifted_product(args) -> int:
    from .fusion import verify_shifted_product

    lam = _shape(args.shape)
    _cap(lam.n, MAX_SHAPE - 1, "shape size")
    ok = verify_shifted_product(lam)
    _emit(args, {"shape": list(lam), "holds": ok}, f"{'holds' if ok else 'FAILS'} for ({lam})")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_qdet(args) -> int:
    from .tensormat import quantum_determinant

    _cap(args.N, MAX_RANK, "N")
    if args.N < 1:
        raise UsageError("N must be at least 1")
    coeffs = quantum_determinant(args.N)
    payload = {"N": args.N, "coefficients": [c.to_json() for c in coeffs]}
    text = "\n".join(f"D_{k} = {c!r}" for k, c in enumerate(coeffs, start=1))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_elambda(args) -> int:
    from .tensormat import e_lambda, e_lambda_coefficients

    lam = _shape(args.shape)
    _cap(lam.n, MAX_CAPELLI_N, "shape size")
    _cap(args.N, MAX_RANK, "N")
    if args.N < 1:
        raise UsageError("N must be at least 1")
    if args.z_poly:
        co = e_lambda_coefficients(lam, args.N)
        payload = {str(k): c.to_json() for k, c in enumerate(co)}
        text = "\n".join(f"z^{k}: {c!r}" for k, c in enumerate(co))
    else:
        x = e_lambda(lam, args.N, 0)
        payload, text = x.to_json(), repr(x)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_capelli(args) -> int:
    from .weyl import c_lambda, capelli_image, capelli_product

    lam = _shape(args.shape)
    _cap(lam.n, MAX_CAPELLI_N, "shape size")
    _cap(args.N, MAX_RANK, "N")
    _cap(args.M, MAX_RANK, "M")
    if args.N < 1 or args.M < 1:
        raise UsageError("N and M must be at least 1")
    formula = FORMULAS[args.formula]
    fn = {"character": c_lambda, "product": capelli_product, "image": capelli_image}[formula]
    x = fn(lam, args.N, args.M)
    _emit(args, x.to_json(), repr(x))
    return EXIT_OK


def _sweep_config(args) -> SweepConfig:
    caps = {k: getattr(args, k) for k in SOFT_CAPS}
    for k, v in caps.items():
        if v < 1:
            raise UsageError(f"--{k.replace('_', '-')} must be at least 1")
        _cap(v, HARD_CAPS[k], "--" + k.replace("_", "-"))
        if v > SOFT_CAPS[k]:
            log.warning("--%s %d is beyond the default range; this may take a long time", k.replace("_", "-"), v)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return SweepConfig(jobs=jobs, **caps)


def _report_json(rep: SweepReport) -> dict:
    fail = rep.first_failure()
    return {
        "suite": rep.suite,
        "cases": len(rep.results),
        "passed": sum(r.ok for r in rep.results),
        "ok": rep.ok,
        "first_failure": None if fail is None else {"check": fail.check, "params": _jsonable(fail.params), "detail": fail.detail},
    }


def _jsonable(params: dict) -> dict:
    return {k: list(v) if isinstance(v, tuple) else v for k, v in params.items()}


def cmd_verify(args) -> int:
    cfg = _sweep_config(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for s in suites:
        t0 = time.perf_counter()
        rep = run_suite(s, cfg)
        dt = time.perf_counter() - t0
        reports.append((rep, dt))
        log.info("suite %s: %d/%d passed in %.1fs", s, sum(r.ok for r in rep.results), len(rep.results), dt)
    ok = all(r.ok for r, _ in reports)
    if args.format == "json":
        # no timings: JSON output is byte-for-byte reproducible
        payload = {"ok": ok, "suites": [_report_json(r) for r, _ in reports]}
        _emit(args, payload, "")
    else:
        lines = []
        for rep, dt in reports:
            passed = sum(r.ok for r in rep.results)
            status = "PASS" if rep.ok else "FAIL"
            lines.append(f"{status} {rep.suite}: {passed}/{len(rep.results)} cases ({dt:.1f}s)")
            fail = rep.first_failure()
            if fail is not None:
                lines.append(f"  smallest failing instance: {fail.describe()}")
        _emit(args, None, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# Parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def common(fmt: str = "json") -> list[argparse.ArgumentParser]:
        # a fresh parent per subcommand: argparse shares parent actions, so
        # one subcommand's defaults would otherwise leak into the others
        c = argparse.ArgumentParser(add_help=False)
        c.add_argument("--format", choices=("json", "text"), default=fmt)
        c.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
        return [c]

    p = argparse.ArgumentParser(prog="capelli", description="Exact fusion, pole-order and Capelli computations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fusion", parents=common(), help="limit of the fusion product for a shape")
    s.add_argument("--shape", required=True)
    s.add_argument("--order", choices=("lex", "prec"), default="lex", help="factor order before the limit")
    s.set_defaults(func=cmd_fusion)

    s = sub.add_parser("upsilon", parents=common(), help="limit of the partial product, equal to Q P")
    s.add_argument("--shape", required=True)
    s.set_defaults(func=cmd_upsilon)

    s = sub.add_parser("symmetrizer", parents=common(), help="symmetrizers built from the column tableau")
    s.add_argument("--shape", required=True)
    s.add_argument("--part", choices=("phi", "P", "Q", "QP", "idempotent"), default="phi")
    s.set_defaults(func=cmd_symmetrizer)

    s = sub.add_parser("phi-pair", parents=common(), help="the two-diagram function of z, or its pole order at 0")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu", required=True)
    s.add_argument("--pole-order", action="store_true")
    s.set_defaults(func=cmd_phi_pair)

    s = sub.add_parser(
        "shifted-product", aliases=["prop212"], parents=common(),
        help="check the product identity in an extra point u",
    )
    s.add_argument("--shape", required=True)
    s.set_defaults(func=cmd_shifted_product)

    s = sub.add_parser("qdet", parents=common(), help="coefficients of the evaluated quantum determinant")
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(func=cmd_qdet)

    s = sub.add_parser("elambda", parents=common(), help="the central element e_lambda of U(gl_N)")
    s.add_argument("--shape", required=True)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--z-poly", action="store_true", help="print every z-coefficient of e_lambda(z)")
    s.set_defaults(func=cmd_elambda)

    s = sub.add_parser("capelli", parents=common(), help="the Capelli operator as a differential operator")
    s.add_argument("--shape", required=True)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--M", type=int, required=True)
    s.add_argument(
        "--formula", choices=list(FORMULAS), default="character",
        help="character-weighted sum, ordered product, or image of e_lambda",
    )
    s.set_defaults(func=cmd_capelli)

    s = sub.add_parser("verify", parents=common("text"), help="run a verification sweep")
    s.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    s.add_argument("--max-n", dest="max_n", type=int, default=SOFT_CAPS["max_n"])
    s.add_argument("--max-pair-n", dest="max_pair_n", type=int, default=SOFT_CAPS["max_pair_n"])
    s.add_argument("--max-pair-m", dest="max_pair_m", type=int, default=SOFT_CAPS["max_pair_m"])
    s.add_argument("--max-N", dest="max_N", type=int, default=SOFT_CAPS["max_N"])
    s.add_argument("--max-M", dest="max_M", type=int, default=SOFT_CAPS["max_M"])
    s.add_argument("--capelli-max-n", dest="capelli_max_n", type=int, default=SOFT_CAPS["capelli_max_n"])
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default: $CAPELLI_JOBS or 1)")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"capelli: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
