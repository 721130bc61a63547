"""Two-dimensional sweeps of Delta over (lambda, y) and their zero boundaries.

The x axis is always ``lambda`` in [0, 1]. The y axis is ``M`` or ``phi`` for
the vertex-capped class and ``mu_k``, ``alpha`` or ``n`` for the
counterpart-capped class, whose form degrees come from :mod:`vocabias.zipf`.
Rows are independent, so sweeps can be spread over worker processes; results
are always assembled in row order.
"""
from __future__ import annotations

import io
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage, optimize

from . import zipf
from .delta import (
    DeltaInputsCounterpartCapped,
    DeltaInputsVertexCapped,
    delta_counterpart_capped,
    delta_vertex_capped,
)
from .errors import DomainError

log = logging.getLogger(__name__)

VERTEX = "vertex-capped"
COUNTERPART = "counterpart-capped"
Y_PARAMS = {VERTEX: ("M", "phi"), COUNTERPART: ("mu_k", "alpha", "n")}
FIXED = {
    VERTEX: {"M": ("phi",), "phi": ("m_links",)},
    COUNTERPART: {
        "mu_k": ("n", "alpha", "phi"),
        "alpha": ("n", "mu_k", "phi"),
        "n": ("alpha", "mu_k", "phi"),
    },
}
# y-axis name -> GridSpec field holding the same parameter when fixed
_FIELD = {"M": "m_links", "phi": "phi", "mu_k": "mu_k", "alpha": "alpha", "n": "n"}

DEFAULT_X_RES = 201
DEFAULT_Y_RES = 200
BOUNDARY_TOL = 1e-8


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    res: int = DEFAULT_Y_RES
    scale: str = "linear"

    def values(self) -> np.ndarray:
        if self.scale == "log":
            v = np.geomspace(self.lo, self.hi, self.res)
        else:
            v = np.linspace(self.lo, self.hi, self.res)
        if self.name == "n":
            v = np.rint(v)
        return v


@dataclass(frozen=True)
class GridSpec:
    cls: str
    y: Axis
    x_res: int = DEFAULT_X_RES
    phi: float | None = None
    alpha: float | None = None
    n: int | None = None
    mu_k: float | None = None
    m_links: float | None = None
    mode: str = "continuous"

    def __post_init__(self):
        if self.cls not in Y_PARAMS:
            raise DomainError(f"class must be one of {sorted(Y_PARAMS)}, got {self.cls!r}")
        if self.y.name not in Y_PARAMS[self.cls]:
            raise DomainError(f"y axis for {self.cls} must be one of {Y_PARAMS[self.cls]}, got {self.y.name!r}")
        if self.x_res < 2 or self.y.res < 2:
            raise DomainError("grid resolutions must be >= 2")
        if self.y.scale not in ("linear", "log"):
            raise DomainError(f"unknown axis scale {self.y.scale!r}")
        if self.y.lo > self.y.hi:
            raise DomainError(f"empty y range [{self.y.lo}, {self.y.hi}]")
        if getattr(self, _FIELD[self.y.name]) is not None:
            raise DomainError(f"{self.y.name} is on the y axis and cannot also be fixed")
        for name in FIXED[self.cls][self.y.name]:
            if getattr(self, name) is None:
                raise DomainError(f"{self.cls} sweep over {self.y.name} needs a fixed {name}")
        if self.mode not in zipf.MODES:
            raise DomainError(f"mode must be one of {zipf.MODES}, got {self.mode!r}")
        lo_bounds = {"M": 1, "phi": 0, "mu_k": 1, "alpha": 0, "n": 2}
        if self.y.lo < lo_bounds[self.y.name]:
            raise DomainError(f"{self.y.name} range must start at >= {lo_bounds[self.y.name]}")
        if self.y.scale == "log" and self.y.lo <= 0:
            raise DomainError("log axis needs a positive lower bound")

    def lambdas(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.x_res)


def default_axis(cls: str, name: str, res: int = DEFAULT_Y_RES, **fixed) -> Axis:
    """Default y range per parameter; ``mu_k`` spans up to the largest degree ``(n-1)**(alpha/(phi+1))``."""
    if name == "M":
        return Axis("M", 1, 150, res)
    if name == "phi":
        return Axis("phi", 0, 2.5, res)
    if name == "alpha":
        return Axis("alpha", 0, 2.5, res)
    if name == "n":
        return Axis("n", 10, 1000, res, scale="log")
    if name == "mu_k":
        hi = (fixed["n"] - 1) ** (fixed["alpha"] / (fixed["phi"] + 1))
        return Axis("mu_k", 1, max(hi, 1.0), res)
    raise DomainError(f"unknown axis {name!r}")


@dataclass
class Heatmap:
    spec: GridSpec
    lambdas: np.ndarray
    ys: np.ndarray
    delta: np.ndarray  # (y_res, x_res); NaN where masked
    feasible: np.ndarray  # (y_res, x_res) bool
    fully_masked: bool = False

    def sign_regions(self, sign: int = 1) -> int:
        """Number of 4-connected components where ``sign * Delta > 0``."""
        with np.errstate(invalid="ignore"):
            cells = np.where(self.feasible, sign * self.delta > 0, False)
        return int(ndimage.label(cells)[1])


@dataclass
class BoundaryCurve:
    y_name: str
    points: list[tuple[float, float]] = field(default_factory=list)
    residuals: list[float] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)


def _cell_context(spec: GridSpec, y: float):
    """Per-row quantities: ``(feasible, line_fn)`` with ``line_fn(lam) -> (value, LinearDelta)``."""
    p = {"phi": spec.phi, "alpha": spec.alpha, "n": spec.n, "mu_k": spec.mu_k, "m_links": spec.m_links}
    p[_FIELD[spec.y.name]] = y
    if spec.cls == VERTEX:
        def line(lam):
            return delta_vertex_capped(DeltaInputsVertexCapped(lam=lam, phi=p["phi"], m_links=p["m_links"]))
        return True, line
    n = int(p["n"])
    seq = zipf.generate(n, p["alpha"], p["phi"], spec.mode)
    feasible = p["mu_k"] <= seq.mu_max
    x_sr, m_phi = zipf.sufficient_stats(seq)

    def line(lam):
        return delta_counterpart_capped(DeltaInputsCounterpartCapped(
            lam=lam, phi=p["phi"], mu_k=p["mu_k"], x_sr=x_sr, m_phi=m_phi))
    return feasible, line


def _sweep_row(spec: GridSpec, y: float) -> tuple[np.ndarray, bool]:
    feasible, line = _cell_context(spec, y)
    lams = spec.lambdas()
    if not feasible:
        return np.full(lams.size, np.nan), False
    return np.array([line(float(lam))[0] for lam in lams]), True


def sweep(spec: GridSpec, workers: int = 1) -> Heatmap:
    ys = spec.y.values()
    lams = spec.lambdas()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row, [spec] * ys.size, ys.tolist()))
    else:
        rows = [_sweep_row(spec, float(y)) for y in ys]
    delta = np.vstack([r[0] for r in rows])
    feasible = np.repeat(np.array([r[1] for r in rows])[:, None], lams.size, axis=1)
    fully_masked = not feasible.any()
    if fully_masked:
        log.warning("every cell of the %s sweep is infeasible (mu_k exceeds the maximum degree)", spec.cls)
    return Heatmap(spec=spec, lambdas=lams, ys=ys, delta=delta, feasible=feasible, fully_masked=fully_masked)


def boundary(spec: GridSpec) -> BoundaryCurve:
    """Zero of Delta along lambda for every y row, from the slope/intercept of the row's line."""
    curve = BoundaryCurve(y_name=spec.y.name)
    for y in spec.y.values():
        y = float(y)
        feasible, line = _cell_context(spec, y)
        if not feasible:
            continue
        lin = line(0.0)[1]
        d0, d1 = lin.b, lin.a + lin.b
        if lin.a == 0 and lin.b == 0:
            curve.diagnostics.append(f"{spec.y.name}={y!r}: Delta vanishes identically; row skipped")
            continue
        if d0 * d1 > 0 or lin.a == 0:
            continue
        root = min(max(-lin.b / lin.a, 0.0), 1.0)
        resid = abs(line(root)[0])
        if resid >= BOUNDARY_TOL:
            curve.diagnostics.append(f"{spec.y.name}={y!r}: residual {resid:.3g} at lambda={root!r}")
            continue
        curve.points.append((root, y))
        curve.residuals.append(resid)
    return curve


def y_roots(spec: GridSpec, lam: float) -> list[float]:
    """Values of the y parameter where Delta vanishes at fixed ``lambda``.

    Sign changes between consecutive feasible grid rows are refined with Brent's method.
    """
    ys = spec.y.values()
    vals = []
    for y in ys:
        feasible, line = _cell_context(spec, float(y))
        vals.append(line(lam)[0] if feasible else math.nan)
    roots = []
    for k in range(len(ys) - 1):
        v0, v1 = vals[k], vals[k + 1]
        if math.isnan(v0) or math.isnan(v1):
            continue
        if v0 == 0:
            roots.append(float(ys[k]))
        elif v0 * v1 < 0 and spec.y.name != "n":
            f = lambda y: _cell_context(spec, y)[1](lam)[0]
            roots.append(optimize.brentq(f, float(ys[k]), float(ys[k + 1]), xtol=1e-14))
    return roots


# -- rendering ---------------------------------------------------------------

GRAY = (128, 128, 128)
WHITE = (255, 255, 255)


def _pixel(d: float, scale: float) -> tuple[int, int, int]:
    if math.isnan(d):
        return GRAY
    if d == 0 or scale == 0:
        return WHITE
    t = min(abs(d) / scale, 1.0)
    # lighter shade for a stronger bias
    lo, hi = int(round(80 * t)), int(round(160 + 95 * t))
    return (hi, lo, lo) if d < 0 else (lo, lo, hi)


def render(hm: Heatmap, fmt: str = "csv") -> bytes:
    """CSV (``x_lambda,y_<param>,delta,feasible``) or binary PPM with one pixel per cell."""
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(f"x_lambda,y_{hm.spec.y.name},delta,feasible\n")
        for r, y in enumerate(hm.ys):
            for c, lam in enumerate(hm.lambdas):
                ok = bool(hm.feasible[r, c])
                d = f"{hm.delta[r, c]:.17g}" if ok else ""
                buf.write(f"{lam:.17g},{y:.17g},{d},{int(ok)}\n")
        return buf.getvalue().encode()
    if fmt == "ppm":
        finite = hm.delta[hm.feasible]
        scale = float(np.max(np.abs(finite))) if finite.size else 0.0
        h, w = hm.delta.shape
        out = bytearray(f"P6\n{w} {h}\n255\n".encode())
        for r in range(h):  # row 0 = smallest y
            for c in range(w):
                out.extend(_pixel(float(hm.delta[r, c]), scale))
        return bytes(out)
    raise DomainError(f"unknown format {fmt!r}; expected 'csv' or 'ppm'")


def boundary_csv(curve: BoundaryCurve) -> bytes:
    buf = io.StringIO()
    buf.write(f"x_lambda,y_{curve.y_name}\n")
    for x, y in curve.points:
        buf.write(f"{x:.17g},{y:.17g}\n")
    return buf.getvalue().encode()
