"""Regenerate every heatmap and Delta=0 boundary as CSV/PPM files.

    python3 scripts/reproduce_figures.py --out figures --workers 4
    python3 scripts/reproduce_figures.py --only vertex_M --x-res 101 --y-res 100

Each map is written as ``<group>/<tag>.ppm``, ``<tag>.csv`` and ``<tag>_boundary.csv``.
A ``summary.csv`` lists the number of Delta>0 regions and masked cells per map.
"""
from __future__ import annotations

import argparse
import itertools
import logging
import time
from dataclasses import dataclass, field, replace
from pathlib import Path

from vocabias import phase
from vocabias.phase import COUNTERPART, VERTEX, GridSpec

PHIS = (0.0, 0.5, 1.0, 1.5, 2.0, 2.5)
MS = (2, 3, 5, 10, 50, 150)
ALPHAS = (0.5, 1.0, 1.5)
NS = (10, 100, 1000)
MU_KS = (1, 2, 4, 8)


@dataclass(frozen=True)
class FigureConfig:
    out: Path = Path("figures")
    x_res: int = phase.DEFAULT_X_RES
    y_res: int = phase.DEFAULT_Y_RES
    workers: int = 1
    mode: str = "continuous"
    only: tuple[str, ...] = field(default_factory=tuple)


def _tag(**kw) -> str:
    return "_".join(f"{k}{v:g}" for k, v in kw.items())


def grid_specs(cfg: FigureConfig):
    """Yield ``(group, tag, GridSpec)`` for every panel."""
    res = dict(x_res=cfg.x_res)
    for phi in PHIS:
        yield "vertex_M", _tag(phi=phi), GridSpec(VERTEX, phase.default_axis(VERTEX, "M", cfg.y_res), phi=phi, **res)
    for m in MS:
        yield "vertex_phi", _tag(M=m), GridSpec(VERTEX, phase.default_axis(VERTEX, "phi", cfg.y_res), m_links=m, **res)
    for phi, n, alpha in itertools.product(PHIS, NS, ALPHAS):
        ax = phase.default_axis(COUNTERPART, "mu_k", cfg.y_res, n=n, alpha=alpha, phi=phi)
        yield "cc_mu_k", _tag(phi=phi, n=n, alpha=alpha), GridSpec(
            COUNTERPART, ax, n=n, alpha=alpha, phi=phi, mode=cfg.mode, **res)
    for phi, mu_k, n in itertools.product(PHIS[1:], MU_KS, NS):
        ax = phase.default_axis(COUNTERPART, "alpha", cfg.y_res)
        yield "cc_alpha", _tag(phi=phi, mu_k=mu_k, n=n), GridSpec(
            COUNTERPART, ax, n=n, mu_k=mu_k, phi=phi, mode=cfg.mode, **res)
    for phi, mu_k, alpha in itertools.product(PHIS[1:], MU_KS, ALPHAS):
        ax = phase.default_axis(COUNTERPART, "n", cfg.y_res)
        yield "cc_n", _tag(phi=phi, mu_k=mu_k, alpha=alpha), GridSpec(
            COUNTERPART, ax, alpha=alpha, mu_k=mu_k, phi=phi, mode=cfg.mode, **res)


def run(cfg: FigureConfig) -> list[tuple[str, str, int, int]]:
    rows = []
    for group, tag, spec in grid_specs(cfg):
        if cfg.only and group not in cfg.only:
            continue
        folder = cfg.out / group
        folder.mkdir(parents=True, exist_ok=True)
        hm = phase.sweep(spec, workers=cfg.workers)
        (folder / f"{tag}.ppm").write_bytes(phase.render(hm, "ppm"))
        (folder / f"{tag}.csv").write_bytes(phase.render(hm, "csv"))
        (folder / f"{tag}_boundary.csv").write_bytes(phase.boundary_csv(phase.boundary(spec)))
        rows.append((group, tag, hm.sign_regions(+1), int((~hm.feasible).sum())))
        logging.info("%s/%s: %d blue region(s)", group, tag, rows[-1][2])
    with open(cfg.out / "summary.csv", "w") as fh:
        fh.write("group,panel,blue_regions,masked_cells\n")
        for r in rows:
            fh.write(",".join(map(str, r)) + "\n")
    return rows


def main(argv=None):
    groups = ("vertex_M", "vertex_phi", "cc_mu_k", "cc_alpha", "cc_n")
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=FigureConfig.out)
    ap.add_argument("--x-res", type=int, default=FigureConfig.x_res)
    ap.add_argument("--y-res", type=int, default=FigureConfig.y_res)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--mode", choices=("continuous", "discrete"), default="continuous")
    ap.add_argument("--only", nargs="+", choices=groups, default=())
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    cfg = replace(FigureConfig(), out=args.out, x_res=args.x_res, y_res=args.y_res,
                  workers=args.workers, mode=args.mode, only=tuple(args.only))
    t0 = time.perf_counter()
    rows = run(cfg)
    logging.info("%d maps written to %s in %.1fs", len(rows), cfg.out, time.perf_counter() - t0)


if __name__ == "__main__":
    main()
