"""Tiered equivalence checks between the analytic, incremental and brute-force routes."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .delta import StrategyEvaluator, closed_forms
from .flesh import CostParams, FleshParams, entropies
from .mutation import apply_mutation, build_state
from .oracle import EnumerationSpec, brute_delta_many, brute_entropies, enumerate_skeleta, strategy_cells
from .skeleton import Skeleton, SkeletonClass, toggle_edge

PHIS = (0.0, 0.5, 1.0, 2.0)
LAMBDAS = (0.0, 0.25, 0.5, 0.75, 1.0)


@dataclass
class CheckResult:
    name: str
    checked: int
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: checked={self.checked} max_error={self.max_error:.3e} tol={self.tolerance:.0e}"


def random_skeleton(rng: np.random.Generator, max_side: int = 8, min_edges: int = 0) -> Skeleton:
    while True:
        n = int(rng.integers(1, max_side + 1))
        m = int(rng.integers(1, max_side + 1))
        density = rng.uniform(0.05, 0.9)
        a = rng.random((n, m)) < density
        if a.sum() >= min_edges:
            edges = [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(a))]
            return Skeleton(n, m, edges)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1.0)


def check_entropies(rng: np.random.Generator, count: int = 1000, max_side: int = 8,
                    tolerance: float = 1e-12) -> CheckResult:
    worst = 0.0
    for _ in range(count):
        sk = random_skeleton(rng, max_side, min_edges=1)
        fp = FleshParams(float(rng.uniform(0, 2.5)))
        h = entropies(sk, fp)
        hs, hr, hsr = brute_entropies(sk, fp)
        worst = max(worst, abs(h.h_s - hs), abs(h.h_r - hr), abs(h.h_sr - hsr))
    return CheckResult("flesh-vs-oracle", count, worst, tolerance)


def state_error(a, b) -> float:
    """Largest field-wise relative difference between two entropy states."""
    errs = [_rel(getattr(a, f), getattr(b, f)) for f in ("m_phi", "x_sr", "x_s", "x_r")]
    errs += [_rel(x, y) for x, y in zip(a.mu_phi, b.mu_phi)]
    errs += [_rel(x, y) for x, y in zip(a.omega_phi, b.omega_phi)]
    return max(errs)


def check_mutations(rng: np.random.Generator, count: int = 1000, max_side: int = 8,
                    tolerance: float = 1e-10) -> CheckResult:
    worst = 0.0
    for _ in range(count):
        sk = random_skeleton(rng, max_side)
        fp = FleshParams(float(rng.uniform(0, 2.5)))
        i = int(rng.integers(1, sk.n + 1))
        j = int(rng.integers(1, sk.m + 1))
        got = apply_mutation(build_state(sk, fp), sk, fp, i, j)
        want = build_state(toggle_edge(sk, i, j), fp)
        worst = max(worst, state_error(got, want))
    return CheckResult("mutation-vs-rebuild", count, worst, tolerance)


def check_enumeration(max_n: int = 4, max_m: int = 6, phis=PHIS, lambdas=LAMBDAS,
                      tolerance: float = 1e-9) -> tuple[CheckResult, CheckResult]:
    """Closed forms vs the dynamic route, and the dynamic route vs brute force,
    over every counterpart-capped skeleton up to ``max_n`` x ``max_m``."""
    closed_err = general_err = 0.0
    n_closed = n_general = 0
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for sk in enumerate_skeleta(EnumerationSpec(n, m, SkeletonClass.COUNTERPART_CAPPED)):
                cells = list(strategy_cells(sk))
                if not cells:
                    continue
                for phi in phis:
                    fp = FleshParams(phi)
                    ev = StrategyEvaluator(sk, fp)
                    for i, ja, jb in cells:
                        brute = brute_delta_many(sk, phi, lambdas, i, ja, jb)
                        for lam, ref in zip(lambdas, brute):
                            general = ev.delta(lam, i, ja, jb)
                            general_err = max(general_err, abs(general - ref))
                            n_general += 1
                            for value in closed_forms(sk, fp, CostParams(lam), i, ja, jb).values():
                                closed_err = max(closed_err, abs(value - general))
                                n_closed += 1
    return (
        CheckResult("closed-form-vs-general", n_closed, closed_err, tolerance),
        CheckResult("general-vs-brute", n_general, general_err, tolerance),
    )


def check_skeleton(sk: Skeleton, phis=PHIS, lambdas=LAMBDAS, tolerance: float = 1e-9) -> list[CheckResult]:
    """Spot check every strategy pair of one skeleton."""
    closed_err = general_err = 0.0
    n_closed = n_general = 0
    cells = list(strategy_cells(sk))
    for phi in phis:
        fp = FleshParams(phi)
        ev = StrategyEvaluator(sk, fp)
        for i, ja, jb in cells:
            for lam, ref in zip(lambdas, brute_delta_many(sk, phi, lambdas, i, ja, jb)):
                general = ev.delta(lam, i, ja, jb)
                general_err = max(general_err, abs(general - ref))
                n_general += 1
                for value in closed_forms(sk, fp, CostParams(lam), i, ja, jb).values():
                    closed_err = max(closed_err, abs(value - general))
                    n_closed += 1
    return [
        CheckResult("closed-form-vs-general", n_closed, closed_err, tolerance),
        CheckResult("general-vs-brute", n_general, general_err, tolerance),
    ]


def run_all(max_n: int = 4, max_m: int | None = None, seed: int = 0, samples: int = 1000) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = [check_entropies(rng, samples), check_mutations(rng, samples)]
    results.extend(check_enumeration(max_n, max_m if max_m is not None else max_n))
    return results
