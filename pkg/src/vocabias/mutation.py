"""Incremental maintenance of the entropy sufficient statistics.

The state keeps ``M_phi``, ``X(S,R)``, ``X(S)``, ``X(R)`` and the weighted
degrees ``mu_phi`` / ``omega_phi``. Flipping one adjacency cell only changes
quantities attached to the edges incident to its two endpoints, so an update
costs O(mu_i + omega_j) instead of a full pass over the skeleton.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, IntegrityError, UndefinedDistributionError
from .flesh import EntropyBundle, FleshParams, weighted_degrees, xlogx
from .skeleton import Skeleton, toggle_edge

AUDIT_TOLERANCE = 1e-8


@dataclass
class EntropyState:
    m_phi: float
    x_sr: float
    x_s: float
    x_r: float
    mu_phi: np.ndarray
    omega_phi: np.ndarray

    def copy(self) -> "EntropyState":
        return EntropyState(
            self.m_phi, self.x_sr, self.x_s, self.x_r,
            self.mu_phi.copy(), self.omega_phi.copy(),
        )


def _xlog(x: float) -> float:
    return x * math.log(x) if x > 0 else 0.0


def _edge_x(w_base: float, phi: float) -> float:
    # x(s_k, r_l) = (mu_k omega_l)**phi * log(mu_k omega_l)
    return w_base ** phi * math.log(w_base) if w_base > 0 else 0.0


def build_state(sk: Skeleton, fp: FleshParams) -> EntropyState:
    phi = fp.phi
    mu = sk.mu.astype(float)
    om = sk.omega.astype(float)
    m_terms, x_terms = [], []
    for i, j in sk.edges:
        base = mu[i - 1] * om[j - 1]
        m_terms.append(base ** phi)
        x_terms.append(_edge_x(base, phi))
    mu_phi, omega_phi = weighted_degrees(sk, phi)
    x_s = math.fsum(xlogx(mu ** phi * mu_phi))
    x_r = math.fsum(xlogx(om ** phi * omega_phi))
    return EntropyState(
        m_phi=math.fsum(m_terms),
        x_sr=math.fsum(x_terms),
        x_s=x_s,
        x_r=x_r,
        mu_phi=mu_phi,
        omega_phi=omega_phi,
    )


def apply_mutation(
    state: EntropyState, sk: Skeleton, fp: FleshParams, i: int, j: int, audit: bool = False
) -> EntropyState:
    """State of ``toggle_edge(sk, i, j)`` derived locally from ``state`` (which must describe ``sk``).

    Only ``mu_phi[k]`` for ``k in {i} | forms(j)`` and ``omega_phi[l]`` for
    ``l in {j} | counterparts(i)`` are rewritten. ``audit=True`` compares the
    result with a full rebuild and raises :class:`IntegrityError` on divergence.
    """
    out = _apply(state, sk, fp, i, j)
    if audit:
        fresh = build_state(toggle_edge(sk, i, j), fp)
        if not states_close(out, fresh, rel=AUDIT_TOLERANCE, abs_=AUDIT_TOLERANCE):
            raise IntegrityError(f"state inconsistent with skeleton after mutating ({i}, {j})")
    return out


def _apply(state: EntropyState, sk: Skeleton, fp: FleshParams, i: int, j: int) -> EntropyState:
    if not (1 <= i <= sk.n and 1 <= j <= sk.m):
        raise DomainError(f"cell ({i}, {j}) out of range for {sk.n}x{sk.m} skeleton")
    phi = fp.phi
    a = 1 if sk.has_edge(i, j) else 0
    step = -1 if a else 1
    mu_i, om_j = sk.degree_form(i), sk.degree_counterpart(j)
    mu_i_new, om_j_new = mu_i + step, om_j + step

    # E(i, j) without the mutated cell itself
    gamma_s = [l for l in sk.form_neighbors(i) if l != j]
    gamma_r = [k for k in sk.counterpart_neighbors(j) if k != i]

    old_m, new_m, old_x, new_x = [], [], [], []
    for l in gamma_s:
        om_l = sk.degree_counterpart(l)
        old_m.append(float(mu_i * om_l) ** phi)
        new_m.append(float(mu_i_new * om_l) ** phi)
        old_x.append(_edge_x(float(mu_i * om_l), phi))
        new_x.append(_edge_x(float(mu_i_new * om_l), phi))
    for k in gamma_r:
        mu_k = sk.degree_form(k)
        old_m.append(float(mu_k * om_j) ** phi)
        new_m.append(float(mu_k * om_j_new) ** phi)
        old_x.append(_edge_x(float(mu_k * om_j), phi))
        new_x.append(_edge_x(float(mu_k * om_j_new), phi))
    if a:
        old_m.append(float(mu_i * om_j) ** phi)
        old_x.append(_edge_x(float(mu_i * om_j), phi))
    else:
        new_m.append(float(mu_i_new * om_j_new) ** phi)
        new_x.append(_edge_x(float(mu_i_new * om_j_new), phi))

    out = state.copy()
    out.m_phi = math.fsum([state.m_phi, *new_m] + [-v for v in old_m])
    out.x_sr = math.fsum([state.x_sr, *new_x] + [-v for v in old_x])

    om_j_pow, om_j_new_pow = float(om_j) ** phi, float(om_j_new) ** phi
    mu_i_pow, mu_i_new_pow = float(mu_i) ** phi, float(mu_i_new) ** phi

    # form side: i itself and the other forms sharing counterpart j
    xs_old, xs_new = [], []
    xs_old.append(_xlog(mu_i_pow * state.mu_phi[i - 1]))
    out.mu_phi[i - 1] = state.mu_phi[i - 1] - a * om_j_pow + (1 - a) * om_j_new_pow
    if mu_i_new == 0:
        out.mu_phi[i - 1] = 0.0
    xs_new.append(_xlog(mu_i_new_pow * out.mu_phi[i - 1]))
    for k in gamma_r:
        mu_k_pow = float(sk.degree_form(k)) ** phi
        xs_old.append(_xlog(mu_k_pow * state.mu_phi[k - 1]))
        out.mu_phi[k - 1] = state.mu_phi[k - 1] - om_j_pow + om_j_new_pow
        xs_new.append(_xlog(mu_k_pow * out.mu_phi[k - 1]))

    xr_old, xr_new = [], []
    xr_old.append(_xlog(om_j_pow * state.omega_phi[j - 1]))
    out.omega_phi[j - 1] = state.omega_phi[j - 1] - a * mu_i_pow + (1 - a) * mu_i_new_pow
    if om_j_new == 0:
        out.omega_phi[j - 1] = 0.0
    xr_new.append(_xlog(om_j_new_pow * out.omega_phi[j - 1]))
    for l in gamma_s:
        om_l_pow = float(sk.degree_counterpart(l)) ** phi
        xr_old.append(_xlog(om_l_pow * state.omega_phi[l - 1]))
        out.omega_phi[l - 1] = state.omega_phi[l - 1] - mu_i_pow + mu_i_new_pow
        xr_new.append(_xlog(om_l_pow * out.omega_phi[l - 1]))

    out.x_s = math.fsum([state.x_s, *xs_new] + [-v for v in xs_old])
    out.x_r = math.fsum([state.x_r, *xr_new] + [-v for v in xr_old])
    if out.m_phi < 0 and out.m_phi > -1e-12:
        out.m_phi = 0.0
    return out


def entropies_from_state(state: EntropyState, phi: float) -> EntropyBundle:
    """``H(S,R) = log M_phi - phi X(S,R)/M_phi``; ``H(S)``, ``H(R)`` use ``X(S)``, ``X(R)``."""
    if state.m_phi <= 0:
        raise UndefinedDistributionError("M_phi is zero; the flesh is undefined")
    log_m = math.log(state.m_phi)
    return EntropyBundle(
        h_s=log_m - state.x_s / state.m_phi,
        h_r=log_m - state.x_r / state.m_phi,
        h_sr=log_m - phi * state.x_sr / state.m_phi,
    )


def states_close(a: EntropyState, b: EntropyState, rel: float, abs_: float = 1e-12) -> bool:
    scalars = all(
        math.isclose(getattr(a, f), getattr(b, f), rel_tol=rel, abs_tol=abs_)
        for f in ("m_phi", "x_sr", "x_s", "x_r")
    )
    return (
        scalars
        and np.allclose(a.mu_phi, b.mu_phi, rtol=rel, atol=abs_)
        and np.allclose(a.omega_phi, b.omega_phi, rtol=rel, atol=abs_)
    )


@dataclass
class MutationEngine:
    """Single-owner driver for mutation sequences.

    Rebuilds the state from scratch every ``rebuild_every`` mutations to cap
    floating-point drift. With ``audit`` on, every mutation is checked against
    a rebuild and an :class:`IntegrityError` is raised on divergence.
    """

    skeleton: Skeleton
    flesh: FleshParams
    rebuild_every: int = 10_000
    audit: bool = False
    state: EntropyState = field(init=False)
    mutations: int = field(init=False, default=0)

    def __post_init__(self):
        if self.rebuild_every < 1:
            raise DomainError("rebuild_every must be >= 1")
        self.state = build_state(self.skeleton, self.flesh)

    def toggle(self, i: int, j: int) -> EntropyState:
        new_state = _apply(self.state, self.skeleton, self.flesh, i, j)
        self.skeleton = toggle_edge(self.skeleton, i, j)
        self.mutations += 1
        if self.mutations % self.rebuild_every == 0:
            new_state = build_state(self.skeleton, self.flesh)
        elif self.audit:
            fresh = build_state(self.skeleton, self.flesh)
            if not states_close(new_state, fresh, rel=AUDIT_TOLERANCE, abs_=AUDIT_TOLERANCE):
                raise IntegrityError(
                    f"incremental state diverged from rebuild after mutation {self.mutations} at ({i}, {j})"
                )
        self.state = new_state
        return new_state

    def entropies(self) -> EntropyBundle:
        return entropies_from_state(self.state, self.flesh.phi)
