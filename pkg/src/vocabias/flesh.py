"""Probabilities, entropies and the communication cost over a skeleton.

The joint probability of form ``i`` and counterpart ``j`` is proportional to
``a_ij * (mu_i * omega_j) ** phi``. All logarithms are natural; ``0 log 0 = 0``
and ``0 ** 0 = 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UndefinedDistributionError
from .skeleton import Skeleton


@dataclass(frozen=True)
class FleshParams:
    phi: float

    def __post_init__(self):
        if not (self.phi >= 0 and math.isfinite(self.phi)):
            raise DomainError(f"phi must be a finite non-negative real, got {self.phi}")


@dataclass(frozen=True)
class CostParams:
    lam: float

    def __post_init__(self):
        if not 0 <= self.lam <= 1:
            raise DomainError(f"lambda must lie in [0, 1], got {self.lam}")


@dataclass(frozen=True)
class EntropyBundle:
    """Entropies in nats."""

    h_s: float
    h_r: float
    h_sr: float

    @property
    def mi(self) -> float:
        return self.h_s + self.h_r - self.h_sr


def xlogx(x):
    """``x log x`` with the convention ``0 log 0 = 0``; works on scalars and arrays."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = x[pos] * np.log(x[pos])
    return out if out.ndim else float(out)


def _edge_weights(sk: Skeleton, phi: float) -> dict[tuple[int, int], float]:
    return {
        (i, j): float(sk.mu[i - 1] * sk.omega[j - 1]) ** phi
        for i, j in sk.edges
    }


def normalizer(sk: Skeleton, fp: FleshParams) -> float:
    """``M_phi``: sum of ``(mu_i omega_j) ** phi`` over the edges (``M`` when phi = 0)."""
    if fp.phi == 0:
        return float(sk.n_edges)
    return math.fsum(_edge_weights(sk, fp.phi).values())


def _require_edges(sk: Skeleton):
    if sk.n_edges == 0:
        raise UndefinedDistributionError("skeleton has no edges; the flesh is undefined")


def joint_probability(sk: Skeleton, fp: FleshParams, i: int, j: int) -> float:
    _require_edges(sk)
    if not sk.has_edge(i, j):
        return 0.0
    w = float(sk.mu[i - 1] * sk.omega[j - 1]) ** fp.phi
    return w / normalizer(sk, fp)


def weighted_degrees(sk: Skeleton, phi: float) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex ``mu_{phi,i} = sum_j a_ij omega_j**phi`` and ``omega_{phi,j} = sum_i a_ij mu_i**phi``."""
    mu_phi = np.zeros(sk.n)
    omega_phi = np.zeros(sk.m)
    mu_pow = sk.mu.astype(float) ** phi
    om_pow = sk.omega.astype(float) ** phi
    for i, j in sk.edges:
        mu_phi[i - 1] += om_pow[j - 1]
        omega_phi[j - 1] += mu_pow[i - 1]
    return mu_phi, omega_phi


def marginals(sk: Skeleton, fp: FleshParams) -> tuple[np.ndarray, np.ndarray]:
    """Form and counterpart marginals ``p(s_i) = mu_i**phi mu_{phi,i} / M_phi`` and the analogue for ``r_j``."""
    _require_edges(sk)
    mu_phi, omega_phi = weighted_degrees(sk, fp.phi)
    m_phi = normalizer(sk, fp)
    p_s = sk.mu.astype(float) ** fp.phi * mu_phi / m_phi
    p_r = sk.omega.astype(float) ** fp.phi * omega_phi / m_phi
    return p_s, p_r


def entropies(sk: Skeleton, fp: FleshParams) -> EntropyBundle:
    """H(S), H(R), H(S,R) via ``H = log M_phi - (1/M_phi) sum w log w`` over unnormalised masses."""
    _require_edges(sk)
    phi = fp.phi
    m_phi = normalizer(sk, fp)
    log_m = math.log(m_phi)
    if phi == 0:
        h_sr = log_m
    else:
        w = np.fromiter(_edge_weights(sk, phi).values(), dtype=float)
        h_sr = log_m - math.fsum(xlogx(w)) / m_phi
    mu_phi, omega_phi = weighted_degrees(sk, phi)
    w_s = sk.mu.astype(float) ** phi * mu_phi
    w_r = sk.omega.astype(float) ** phi * omega_phi
    h_s = log_m - math.fsum(xlogx(w_s)) / m_phi
    h_r = log_m - math.fsum(xlogx(w_r)) / m_phi
    return EntropyBundle(h_s=h_s, h_r=h_r, h_sr=h_sr)


def cost_from_entropies(h: EntropyBundle, lam: float) -> float:
    return (1 - 2 * lam) * h.h_s - lam * h.h_r + lam * h.h_sr


def cost(sk: Skeleton, fp: FleshParams, cp: CostParams) -> float:
    """``Omega(lambda) = (1 - 2 lambda) H(S) - lambda H(R) + lambda H(S,R)``."""
    return cost_from_entropies(entropies(sk, fp), cp.lam)
