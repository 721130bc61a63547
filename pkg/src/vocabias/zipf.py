"""Right-truncated power-law form degrees.

Degrees follow ``mu_i = c * i**(-tau)`` for ranks ``1..n-1`` with
``tau = alpha / (phi + 1)`` and ``c = (n - 1)**tau`` so that ``mu_{n-1} = 1``;
the last form is unlinked (``mu_n = 0``). With counterpart degrees capped at
one, form probabilities then follow Zipf's law with exponent ``alpha``.
"""
from __future__ import annotations

import io
import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import DomainError

MODES = ("continuous", "discrete")


@dataclass(frozen=True)
class DegreeSequence:
    n: int
    alpha: float
    phi: float
    mode: str
    mu: np.ndarray = field(repr=False)
    clamped: int = 0  # discrete ranks raised from 0 to 1

    @property
    def tau(self) -> float:
        return self.alpha / (self.phi + 1)

    @property
    def c(self) -> float:
        return (self.n - 1) ** self.tau

    @property
    def mu_max(self) -> float:
        """Largest admissible ``mu_k``: ``(n-1)**(alpha/(phi+1))``."""
        return self.c


def generate(n: int, alpha: float, phi: float, mode: str = "continuous") -> DegreeSequence:
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if alpha < 0 or phi < 0:
        raise DomainError(f"alpha and phi must be non-negative, got alpha={alpha}, phi={phi}")
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    tau = alpha / (phi + 1)
    ranks = np.arange(1, n, dtype=float)
    mu = np.empty(n)
    # ratio form keeps the sequence monotone to the last ulp and hits 1 exactly
    mu[:-1] = ((n - 1) / ranks) ** tau
    mu[-1] = 0.0
    clamped = 0
    if mode == "discrete":
        # np.rint rounds half to even
        rounded = np.rint(mu[:-1])
        clamped = int(np.count_nonzero(rounded < 1))
        mu[:-1] = np.maximum(rounded, 1.0)
    mu.setflags(write=False)
    return DegreeSequence(n=n, alpha=alpha, phi=phi, mode=mode, mu=mu, clamped=clamped)


def links(seq: DegreeSequence) -> float:
    """Number of edges ``M = sum mu_i``."""
    total = math.fsum(seq.mu)
    return float(round(total)) if seq.mode == "discrete" else total


def sufficient_stats(seq: DegreeSequence) -> tuple[float, float]:
    """``(X(S,R), M_phi)`` = ``(sum mu**(phi+1) log mu, sum mu**(phi+1))``."""
    mu = seq.mu[seq.mu > 0]
    w = mu ** (seq.phi + 1)
    return math.fsum(w * np.log(mu)), math.fsum(w)


def link_bounds(n: int, tau: float) -> tuple[float, float]:
    """Integral bounds bracketing ``M = (n-1)**tau * sum_{i<n} i**(-tau)``."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if tau < 0:
        raise DomainError(f"need tau >= 0, got {tau}")
    scale = (n - 1) ** tau
    if tau == 1:
        return (n - 1) * math.log(n), (n - 1) * (1 + math.log(n - 1))
    lo = (1 - n ** (1 - tau)) / (tau - 1)
    hi = 1 + (1 - (n - 1) ** (1 - tau)) / (tau - 1)
    return scale * lo, scale * hi


class ZipfFit(NamedTuple):
    alpha_fit: float
    c_prime: float
    residual: float  # max absolute log-log residual
    exact: bool  # False in discrete mode, where rounding breaks the power law


def zipf_marginal_check(seq: DegreeSequence) -> ZipfFit:
    """Regress ``log p(s_i)`` on ``log i``, with ``p(s_i) = mu_i**(phi+1) / M_phi``."""
    exact = seq.mode == "continuous"
    if not exact:
        warnings.warn("discrete degrees are not an exact power law", stacklevel=2)
    _, m_phi = sufficient_stats(seq)
    mu = seq.mu[:-1]
    p = mu ** (seq.phi + 1) / m_phi
    x = np.log(np.arange(1, seq.n, dtype=float))
    y = np.log(p)
    if seq.n == 2:
        slope, intercept = 0.0, float(y[0])
    else:
        slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.max(np.abs(y - (slope * x + intercept))))
    return ZipfFit(alpha_fit=-float(slope), c_prime=(seq.n - 1) ** seq.alpha / m_phi,
                   residual=resid, exact=exact)


def to_csv(seq: DegreeSequence) -> str:
    buf = io.StringIO()
    buf.write(f"# n={seq.n} alpha={seq.alpha:.17g} phi={seq.phi:.17g} mode={seq.mode}\n")
    buf.write("mu\n")
    for v in seq.mu:
        buf.write(f"{v:.17g}\n")
    return buf.getvalue()
