"""Verification sweeps over ranges of diagrams and ranks.

Cases are listed smallest first; results come back in case order whatever
the number of workers, and the first failure is the smallest failing
instance.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from .symgroup import GroupAlgebraElement, alpha
from .young import YoungDiagram, as_diagram, dimension, idempotent, partitions, phi_lambda, rank, contains

log = logging.getLogger(__name__)

SUITES = ("fusion", "pole", "rtt", "capelli")


@dataclass
class SweepConfig:
    max_n: int = 5  # fusion suite
    max_pair_n: int = 4  # pole suite, first diagram
    max_pair_m: int = 4  # pole suite, second diagram
    max_N: int = 3  # rtt and capelli suites
    max_M: int = 3
    capelli_max_n: int = 3
    extra_capelli: tuple = ((4, 2, 2),)  # (n, N, M) extra Capelli ranges
    jobs: int = 1

    def __post_init__(self):
        for name in ("max_n", "max_pair_n", "max_pair_m", "max_N", "max_M", "capelli_max_n", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


@dataclass
class CaseResult:
    check: str
    params: dict
    ok: bool
    detail: str = ""

    def describe(self) -> str:
        ps = ", ".join(f"{k}={_fmt_param(v)}" for k, v in self.params.items())
        return f"{self.check}({ps})" + (f": {self.detail}" if self.detail else "")


def _fmt_param(v: Any) -> str:
    if isinstance(v, tuple) and all(isinstance(x, int) for x in v):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)


@dataclass
class SweepReport:
    suite: str
    results: list[CaseResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def first_failure(self) -> CaseResult | None:
        return next((r for r in self.results if not r.ok), None)


def first_difference(a: GroupAlgebraElement, b: GroupAlgebraElement) -> str:
    for p in sorted(set(a.terms) | set(b.terms)):
        x, y = a.coefficient(p), b.coefficient(p)
        if x != y:
            return f"coefficient of {p.one_based()}: got {x}, expected {y}"
    return ""


def first_difference_terms(a: dict, b: dict) -> str:
    for k in sorted(set(a) | set(b)):
        x, y = a.get(k, 0), b.get(k, 0)
        if x != y:
            return f"coefficient of {k}: got {x}, expected {y}"
    return ""


# Individual checks: each takes plain arguments and returns (ok, detail). ----


def check_fusion(lam) -> tuple[bool, str]:
    from .fusion import expected_fusion_value, fusion_limit

    got, want = fusion_limit(lam), expected_fusion_value(lam)
    return got == want, first_difference(got, want)


def check_upsilon(lam) -> tuple[bool, str]:
    from .fusion import expected_upsilon_value, upsilon_limit

    got, want = upsilon_limit(lam), expected_upsilon_value(lam)
    return got == want, first_difference(got, want)


def check_reordering(lam) -> tuple[bool, str]:
    from .fusion import fusion_product

    a, b = fusion_product(lam, "lex"), fusion_product(lam, "prec")
    return a == b, first_difference(a, b)


def check_idempotent(lam) -> tuple[bool, str]:
    lam = as_diagram(lam)
    phi = phi_lambda(lam)
    if phi.identity_coefficient() != 1:
        return False, f"identity coefficient {phi.identity_coefficient()}"
    e = idempotent(lam)
    sq = e * e
    if sq != e:
        return False, "not idempotent: " + first_difference(sq, e)
    if alpha(phi) != phi:
        return False, "not invariant under inversion: " + first_difference(alpha(phi), phi)
    return True, ""


def check_shifted_product(lam) -> tuple[bool, str]:
    from .fusion import verify_shifted_product

    return verify_shifted_product(lam), ""


def check_local_identities() -> tuple[bool, str]:
    from .fusion import verify_local_identities

    rep: dict = {}
    ok = verify_local_identities(report=rep)
    return ok, ", ".join(k for k, v in rep.items() if not v)


def check_pole(lam, mu) -> tuple[bool, str]:
    from .fusion import pole_order_phi, pole_order_bound

    order = pole_order_phi(lam, mu)
    bound = pole_order_bound(lam, mu) if as_diagram(lam) else 0
    return order <= bound, f"pole order {order}, bound {bound}"


def check_rtt(N) -> tuple[bool, str]:
    from .tensormat import verify_rtt_evaluation

    return verify_rtt_evaluation(N), ""


def check_qdet(N) -> tuple[bool, str]:
    from .tensormat import quantum_determinant, verify_qdet_divisibility
    from .ugl import is_central

    coeffs = quantum_determinant(N)
    for k, c in enumerate(coeffs, start=1):
        if not is_central(c):
            return False, f"coefficient D_{k} = {c} is not central"
    if not verify_qdet_divisibility(N):
        return False, "cleared matrix is not F_N times its trace"
    return True, ""


def check_projector_product(lam, N) -> tuple[bool, str]:
    from .tensormat import verify_projector_product

    return verify_projector_product(lam, N), ""


def check_e_lambda(lam, N) -> tuple[bool, str]:
    from .tensormat import e_lambda_coefficients, trace_F
    from .ugl import UglElement, is_central

    co = e_lambda_coefficients(lam, N)
    for k, c in enumerate(co):
        if not is_central(c):
            return False, f"z^{k} coefficient {c} is not central"
    lead = UglElement.one(N, trace_F(lam, N))
    if co[-1] != lead:
        return False, f"leading coefficient {co[-1]}, expected {lead}"
    return True, ""


def check_vanishing(lam, mu, N) -> tuple[bool, str]:
    from .tensormat import verify_vanishing

    return verify_vanishing(lam, mu, N), ""


def check_capelli(lam, N, M) -> tuple[bool, str]:
    from .weyl import c_lambda, capelli_image, capelli_product

    c = c_lambda(lam, N, M)
    img = capelli_image(lam, N, M)
    if img != c:
        return False, "image of e_lambda: " + first_difference_terms(img.terms, c.terms)
    prod_ = capelli_product(lam, N, M)
    if prod_ != c:
        return False, "ordered product: " + first_difference_terms(prod_.terms, c.terms)
    return True, ""


def check_invariance(lam, N, M) -> tuple[bool, str]:
    from .weyl import c_lambda, commutator, gl_action

    c = c_lambda(lam, N, M)
    for side, K in (("glN", N), ("glM", M)):
        for i in range(1, K + 1):
            for j in range(1, K + 1):
                if commutator(c, gl_action(side, i, j, N, M)):
                    return False, f"fails to commute with {side} E_{i}{j}"
    return True, ""


CHECKS: dict[str, Callable[..., tuple[bool, str]]] = {
    "fusion_limit": check_fusion,
    "upsilon_limit": check_upsilon,
    "reordering": check_reordering,
    "idempotent": check_idempotent,
    "shifted_product": check_shifted_product,
    "local_identities": check_local_identities,
    "pole_bound": check_pole,
    "rtt": check_rtt,
    "quantum_determinant": check_qdet,
    "projector_product": check_projector_product,
    "e_lambda_central": check_e_lambda,
    "vanishing": check_vanishing,
    "capelli_identity": check_capelli,
    "invariance": check_invariance,
}

_PARAM_NAMES = {
    "fusion_limit": ("lam",),
    "upsilon_limit": ("lam",),
    "reordering": ("lam",),
    "idempotent": ("lam",),
    "shifted_product": ("lam",),
    "local_identities": (),
    "pole_bound": ("lam", "mu"),
    "rtt": ("N",),
    "quantum_determinant": ("N",),
    "projector_product": ("lam", "N"),
    "e_lambda_central": ("lam", "N"),
    "vanishing": ("lam", "mu", "N"),
    "capelli_identity": ("lam", "N", "M"),
    "invariance": ("lam", "N", "M"),
}


def run_case(case: tuple) -> CaseResult:
    name, args = case
    params = dict(zip(_PARAM_NAMES[name], args))
    try:
        ok, detail = CHECKS[name](*args)
    except Exception as exc:  # a crash is a failure of that case, not of the sweep
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CaseResult(name, params, ok, "" if ok else detail)


def _diagrams(max_n: int, min_n: int = 1) -> list[YoungDiagram]:
    return [lam for n in range(min_n, max_n + 1) for lam in partitions(n)]


def fusion_cases(cfg: SweepConfig) -> list[tuple]:
    cases: list[tuple] = [("local_identities", ())]
    for lam in _diagrams(cfg.max_n):
        t = tuple(lam)
        cases += [
            ("idempotent", (t,)),
            ("fusion_limit", (t,)),
            ("upsilon_limit", (t,)),
            ("shifted_product", (t,)),
        ]
        if lam.n <= 4:
            cases.append(("reordering", (t,)))
    return cases


def pole_cases(cfg: SweepConfig) -> list[tuple]:
    cases = []
    for lam in _diagrams(cfg.max_pair_n, 0):
        for mu in _diagrams(cfg.max_pair_m, 0):
            cases.append(("pole_bound", (tuple(lam), tuple(mu))))
    cases.sort(key=lambda c: (sum(c[1][0]) + sum(c[1][1]), c[1]))
    return cases


def rtt_cases(cfg: SweepConfig) -> list[tuple]:
    cases: list[tuple] = []
    for N in range(1, cfg.max_N + 1):
        cases += [("rtt", (N,)), ("quantum_determinant", (N,))]
    for lam in _diagrams(4):
        for N in range(1, cfg.max_N + 1):
            if len(lam) <= N:
                cases.append(("projector_product", (tuple(lam), N)))
    return cases


def capelli_cases(cfg: SweepConfig) -> list[tuple]:
    cases: list[tuple] = []
    for lam in _diagrams(cfg.capelli_max_n):
        t = tuple(lam)
        for N in range(1, cfg.max_N + 1):
            cases.append(("e_lambda_central", (t, N)))
            for mu in _diagrams(lam.n - 1, 0):
                if len(mu) <= N:
                    cases.append(("vanishing", (t, tuple(mu), N)))
            for M in range(1, cfg.max_M + 1):
                cases += [("capelli_identity", (t, N, M)), ("invariance", (t, N, M))]
    for n, N, M in cfg.extra_capelli:
        for lam in partitions(n):
            t = tuple(lam)
            cases += [("capelli_identity", (t, N, M)), ("invariance", (t, N, M))]
    return cases


SUITE_CASES = {
    "fusion": fusion_cases,
    "pole": pole_cases,
    "rtt": rtt_cases,
    "capelli": capelli_cases,
}


def default_jobs() -> int:
    env = os.environ.get("CAPELLI_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring CAPELLI_JOBS=%r", env)
    return 1


def run_suite(suite: str, cfg: SweepConfig | None = None) -> SweepReport:
    cfg = cfg or SweepConfig(jobs=default_jobs())
    if suite not in SUITE_CASES:
        raise ValueError(f"unknown suite {suite!r}")
    cases = SUITE_CASES[suite](cfg)
    log.info("suite %s: %d cases, %d worker(s)", suite, len(cases), cfg.jobs)
    if cfg.jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(run_case, cases, chunksize=1))
    else:
        results = [run_case(c) for c in cases]
    return SweepReport(suite, results)


def run_all(cfg: SweepConfig | None = None) -> list[SweepReport]:
    return [run_suite(s, cfg) for s in SUITES]


def summarize_dimension_table(max_n: int) -> dict[int, int]:
    """n -> sum of squared dimensions, which should be n!."""
    return {n: sum(dimension(l) ** 2 for l in partitions(n)) for n in range(1, max_n + 1)}


def pole_table(max_n: int, max_m: int) -> list[dict]:
    """Pole orders next to their bounds, for reporting."""
    from .fusion import pole_order_phi

    rows = []
    for lam in _diagrams(max_n):
        for mu in _diagrams(max_m):
            rows.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "pole_order": pole_order_phi(lam, mu),
                    "rank": rank(lam),
                    "contained": contains(lam, mu),
                }
            )
    return rows

