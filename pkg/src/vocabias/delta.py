"""Cost difference between the two word-learning strategies.

``Delta(lambda) = Omega'_a - Omega'_b`` where strategy *a* links a new form to
an unlinked counterpart and strategy *b* links it to an already linked one.
Negative values mean strategy *a* (mutual exclusivity) is cheaper.

Every closed form here is affine in ``lambda``; :class:`LinearDelta` carries the
slope/intercept decomposition.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .flesh import CostParams, FleshParams
from .mutation import apply_mutation, build_state
from .skeleton import Skeleton

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class LinearDelta:
    a: float  # slope
    b: float  # intercept

    def __call__(self, lam: float) -> float:
        return self.a * lam + self.b

    def root(self) -> float | None:
        """``lambda`` where the line crosses zero, or None for a flat line."""
        if self.a == 0:
            return None
        return -self.b / self.a


@dataclass(frozen=True)
class DeltaInputsVertexCapped:
    lam: float
    phi: float
    m_links: float

    def __post_init__(self):
        _check_lam_phi(self.lam, self.phi)
        if not self.m_links >= 1:
            raise DomainError(f"need M >= 1, got {self.m_links}")


@dataclass(frozen=True)
class DeltaInputsCounterpartCapped:
    lam: float
    phi: float
    mu_k: float
    x_sr: float
    m_phi: float

    def __post_init__(self):
        _check_lam_phi(self.lam, self.phi)
        if not self.mu_k >= 1:
            raise DomainError(f"need mu_k >= 1, got {self.mu_k}")


def _check_lam_phi(lam, phi):
    if not 0 <= lam <= 1:
        raise DomainError(f"lambda must lie in [0, 1], got {lam}")
    if not phi >= 0:
        raise DomainError(f"phi must be non-negative, got {phi}")


def _xlog(x: float) -> float:
    return x * math.log(x) if x > 0 else 0.0


# -- general skeleton, dynamic route -----------------------------------------

def check_strategy_cell(sk: Skeleton, i: int, j_a: int, j_b: int) -> None:
    """Raise :class:`DomainError` unless ``(i, j_a, j_b)`` is a valid strategy pair."""
    if not 1 <= i <= sk.n:
        raise DomainError(f"form {i} out of range 1..{sk.n}")
    for j in (j_a, j_b):
        if not 1 <= j <= sk.m:
            raise DomainError(f"counterpart {j} out of range 1..{sk.m}")
    if sk.degree_form(i) != 0:
        raise DomainError(f"form {i} must be unlinked (mu_i = {sk.degree_form(i)})")
    if sk.degree_counterpart(j_a) != 0:
        raise DomainError(f"strategy a counterpart {j_a} must be unlinked (omega = {sk.degree_counterpart(j_a)})")
    if sk.degree_counterpart(j_b) < 1:
        raise DomainError(f"strategy b counterpart {j_b} must already be linked")


class StrategyEvaluator:
    """Delta for many strategy pairs on one skeleton.

    The statistics of the skeleton are built once; each candidate successor
    ``sk + (i, j)`` is then obtained by a single incremental mutation and cached.
    """

    def __init__(self, sk: Skeleton, fp: FleshParams):
        self.sk = sk
        self.fp = fp
        self.base = build_state(sk, fp)
        self._succ: dict[tuple[int, int], object] = {}

    def successor(self, i: int, j: int):
        key = (i, j)
        if key not in self._succ:
            self._succ[key] = apply_mutation(self.base, self.sk, self.fp, i, j)
        return self._succ[key]

    def delta(self, lam: float, i: int, j_a: int, j_b: int) -> float:
        check_strategy_cell(self.sk, i, j_a, j_b)
        phi = self.fp.phi
        sa, sb = self.successor(i, j_a), self.successor(i, j_b)
        ma, mb = sa.m_phi, sb.m_phi
        dxs = mb * sa.x_s - ma * sb.x_s
        dxr = mb * sa.x_r - ma * sb.x_r
        dxsr = mb * sa.x_sr - ma * sb.x_sr
        value = (1 - 2 * lam) * math.log(ma / mb) - (
            (1 - 2 * lam) * dxs - lam * dxr + lam * phi * dxsr
        ) / (ma * mb)
        return value + 0.0


def delta_general(sk: Skeleton, fp: FleshParams, cp: CostParams, i: int, j_a: int, j_b: int) -> float:
    """Delta for an arbitrary skeleton from the incrementally updated statistics of both successors."""
    check_strategy_cell(sk, i, j_a, j_b)
    return StrategyEvaluator(sk, fp).delta(cp.lam, i, j_a, j_b)


# -- phi = 0 -----------------------------------------------------------------

def delta_phi0(lam: float, omega_j: float, m_links: float) -> float:
    """``-lambda [(w+1) log(w+1) - w log w] / (M+1)`` with ``w`` the degree of b's counterpart."""
    if not omega_j >= 1:
        raise DomainError(f"need omega_j >= 1, got {omega_j}")
    if not m_links >= omega_j:
        raise DomainError(f"need M >= omega_j, got M={m_links}, omega_j={omega_j}")
    _check_lam_phi(lam, 0.0)
    gain = _xlog(omega_j + 1) - _xlog(omega_j)
    return -lam * gain / (m_links + 1) + 0.0


# -- vertex degrees <= 1 -----------------------------------------------------

def _vertex_terms(phi: float, m: float) -> tuple[float, float]:
    two = 2.0 ** (phi + 1)
    log_term = math.log1p(2 * (2.0 ** phi - 1) / (m + 1))
    frac = two * LOG2 / (m + two - 1)
    return log_term, frac


def vertex_capped_extremes(phi: float, m_links: float) -> tuple[float, float]:
    """``(Delta(0), Delta(1))`` for the vertex-capped class."""
    log_term, frac = _vertex_terms(phi, m_links)
    return -log_term + phi * frac, log_term - (phi + 1) * frac


def delta_vertex_capped(inp: DeltaInputsVertexCapped) -> tuple[float, LinearDelta]:
    lam, phi = inp.lam, inp.phi
    log_term, frac = _vertex_terms(phi, inp.m_links)
    value = (1 - 2 * lam) * (-log_term + phi * frac) - lam * frac
    lin = LinearDelta(
        a=2 * log_term - (2 * phi + 1) * frac,
        b=-log_term + phi * frac,
    )
    return value + 0.0, lin


# -- counterpart degrees <= 1 ------------------------------------------------

def _cc_terms(phi: float, mu_k: float, x_sr: float, m_phi: float):
    t = 2.0 ** phi
    mk_pow = mu_k ** phi
    denom = m_phi + (t - 1) * mk_pow + t
    log_mk = math.log(mu_k)
    shifted = mu_k - 1 + t
    bracket = (
        (phi + 1) * x_sr * (t - 1) * (mk_pow + 1) / (m_phi + 1)
        - phi * t * LOG2
        + mk_pow * (log_mk * (mu_k + phi) - shifted * math.log(shifted))
    )
    log_ratio = math.log((m_phi + 1) / denom)
    return t, mk_pow, denom, log_mk, bracket, log_ratio


def counterpart_capped_extremes(phi: float, mu_k: float, x_sr: float, m_phi: float) -> tuple[float, float]:
    """``(Delta(0), Delta(1))`` for the counterpart-capped class."""
    t, mk_pow, denom, log_mk, bracket, log_ratio = _cc_terms(phi, mu_k, x_sr, m_phi)
    d0 = log_ratio + (phi * t * mk_pow * log_mk - bracket) / denom
    d1 = -log_ratio - ((mk_pow + 1) * t * math.log(mk_pow + 1) - bracket) / denom
    return d0, d1


def delta_counterpart_capped(inp: DeltaInputsCounterpartCapped) -> tuple[float, LinearDelta]:
    """Delta when every counterpart has degree <= 1.

    ``x_sr = sum mu_i**(phi+1) log mu_i`` and ``m_phi = sum mu_i**(phi+1)`` summarise
    the form degrees; ``mu_k`` is the degree of the form already attached to
    strategy b's counterpart.
    """
    lam, phi, mu_k = inp.lam, inp.phi, inp.mu_k
    t, mk_pow, denom, log_mk, bracket, log_ratio = _cc_terms(phi, mu_k, inp.x_sr, inp.m_phi)
    value = (1 - 2 * lam) * (log_ratio - bracket / denom) - (
        lam * (mk_pow + 1) * t * math.log(mk_pow + 1)
        - (1 - lam) * phi * t * mk_pow * log_mk
    ) / denom
    d0, d1 = counterpart_capped_extremes(phi, mu_k, inp.x_sr, inp.m_phi)
    return value + 0.0, LinearDelta(a=d1 - d0, b=d0)


def closed_forms(sk: Skeleton, fp: FleshParams, cp: CostParams, i: int, j_a: int, j_b: int) -> dict[str, float]:
    """Every closed form that applies to ``sk``, keyed by ``phi0``, ``vertex-capped``, ``counterpart-capped``."""
    from .skeleton import SkeletonClass, classify  # local: keeps the module import graph flat

    check_strategy_cell(sk, i, j_a, j_b)
    lam, phi = cp.lam, fp.phi
    out: dict[str, float] = {}
    if phi == 0:
        out["phi0"] = delta_phi0(lam, sk.degree_counterpart(j_b), sk.n_edges)
    cls = classify(sk)
    if cls is SkeletonClass.VERTEX_CAPPED:
        out["vertex-capped"] = delta_vertex_capped(DeltaInputsVertexCapped(lam, phi, sk.n_edges))[0]
    if cls is not SkeletonClass.GENERAL:
        (k,) = sk.counterpart_neighbors(j_b)
        mu = sk.mu[sk.mu > 0].astype(float)
        w = mu ** (phi + 1)
        x_sr = math.fsum(w * [math.log(v) for v in mu])
        inp = DeltaInputsCounterpartCapped(lam, phi, float(sk.degree_form(k)), x_sr, math.fsum(w))
        out["counterpart-capped"] = delta_counterpart_capped(inp)[0]
    return out
