import math

import numpy as np
import pytest

from vocabias import phase, zipf
from vocabias.delta import DeltaInputsVertexCapped, delta_vertex_capped
from vocabias.errors import DomainError
from vocabias.phase import COUNTERPART, VERTEX, Axis, GridSpec


def small_vertex(phi=1.0, res=20, x_res=21):
    return GridSpec(VERTEX, Axis("M", 1, 150, res), x_res=x_res, phi=phi)


def test_vertex_sweep_matches_pointwise():
    spec = small_vertex(phi=1.0, res=5, x_res=6)
    hm = phase.sweep(spec)
    assert hm.delta.shape == (5, 6) and hm.feasible.all() and not hm.fully_masked
    for r, m in enumerate(hm.ys):
        for c, lam in enumerate(hm.lambdas):
            ref = delta_vertex_capped(DeltaInputsVertexCapped(lam=float(lam), phi=1.0, m_links=float(m)))[0]
            assert hm.delta[r, c] == ref


def test_phi0_rows_nonpositive():
    hm = phase.sweep(small_vertex(phi=0.0))
    assert (hm.delta <= 0).all()
    assert (hm.delta[:, 1:] < 0).all()
    assert hm.sign_regions(+1) == 0


def test_counterpart_mask():
    spec = GridSpec(COUNTERPART, Axis("alpha", 0, 2.5, 26), x_res=5, n=10, mu_k=8, phi=1)
    hm = phase.sweep(spec)
    threshold = 2 * math.log(8) / math.log(9)
    for r, a in enumerate(hm.ys):
        assert hm.feasible[r].all() == (a >= threshold)
        assert np.isnan(hm.delta[r]).all() == (a < threshold)


def test_fully_masked_sweep_renders_gray(caplog):
    spec = GridSpec(COUNTERPART, Axis("mu_k", 50, 60, 3), x_res=4, n=10, alpha=1, phi=1)
    hm = phase.sweep(spec)
    assert hm.fully_masked
    assert "infeasible" in caplog.text
    ppm = phase.render(hm, "ppm")
    header = b"P6\n4 3\n255\n"
    assert ppm.startswith(header)
    assert ppm[len(header):] == bytes(phase.GRAY) * 12
    rows = phase.render(hm, "csv").decode().splitlines()[1:]
    assert all(line.endswith(",,0") for line in rows)


def test_sweep_deterministic_and_parallel_equal():
    spec = GridSpec(COUNTERPART, Axis("mu_k", 1, 20, 12), x_res=9, n=200, alpha=1.5, phi=1)
    a = phase.render(phase.sweep(spec), "csv")
    b = phase.render(phase.sweep(spec), "csv")
    c = phase.render(phase.sweep(spec, workers=2), "csv")
    assert a == b == c


def test_render_csv_layout():
    spec = GridSpec(VERTEX, Axis("M", 2, 3, 2), x_res=2, phi=1)
    lines = phase.render(phase.sweep(spec), "csv").decode().splitlines()
    assert lines[0] == "x_lambda,y_M,delta,feasible"
    assert len(lines) == 5
    x, y, d, ok = lines[1].split(",")
    assert (float(x), float(y), ok) == (0.0, 2.0, "1")
    ref = delta_vertex_capped(DeltaInputsVertexCapped(lam=0.0, phi=1.0, m_links=2.0))[0]
    assert float(d) == ref


def test_render_ppm_colors_phi0():
    hm = phase.sweep(small_vertex(phi=0.0, res=4, x_res=5))
    body = phase.render(hm, "ppm")[len(b"P6\n5 4\n255\n"):]
    px = np.frombuffer(body, dtype=np.uint8).reshape(4, 5, 3)
    assert (px[:, 0] == 255).all()  # Delta = 0 exactly at lambda = 0
    red = px[:, 1:]
    assert (red[..., 0] > red[..., 2]).all()


def test_render_unknown_format():
    with pytest.raises(DomainError):
        phase.render(phase.sweep(small_vertex(res=2, x_res=2)), "png")


def test_boundary_phi0_at_zero():
    curve = phase.boundary(small_vertex(phi=0.0))
    assert curve.points and all(x == 0.0 for x, _ in curve.points)


def test_boundary_phi1_monotone_in_m():
    spec = GridSpec(VERTEX, Axis("M", 2, 150, 40), phi=1)
    curve = phase.boundary(spec)
    xs = [x for x, _ in curve.points]
    assert len(xs) == 40
    assert all(0 < x < 1 for x in xs)
    assert all(b > a for a, b in zip(xs, xs[1:]))
    assert max(curve.residuals) < phase.BOUNDARY_TOL


def test_boundary_m3_root_and_sides():
    curve = phase.boundary(GridSpec(VERTEX, Axis("M", 3, 3, 2), phi=1))
    root = curve.points[0][0]
    d, lin = delta_vertex_capped(DeltaInputsVertexCapped(lam=root, phi=1.0, m_links=3.0))
    assert abs(d) < 1e-12
    assert root == pytest.approx(lin.root(), abs=1e-15)
    before = delta_vertex_capped(DeltaInputsVertexCapped(lam=root - 1e-3, phi=1.0, m_links=3.0))[0]
    after = delta_vertex_capped(DeltaInputsVertexCapped(lam=root + 1e-3, phi=1.0, m_links=3.0))[0]
    assert before > 0 > after


def test_y_roots_counterpart():
    spec = GridSpec(COUNTERPART, Axis("mu_k", 1, 31.6, 60), n=1000, alpha=1.5, phi=1)
    seq = zipf.generate(1000, 1.5, 1)
    x_sr, m_phi = zipf.sufficient_stats(seq)
    from vocabias.delta import DeltaInputsCounterpartCapped, delta_counterpart_capped
    for lam in (0.3, 0.5):
        for y in phase.y_roots(spec, lam):
            d = delta_counterpart_capped(DeltaInputsCounterpartCapped(lam, 1.0, y, x_sr, m_phi))[0]
            assert abs(d) < 1e-10


def test_default_axes():
    assert phase.default_axis(VERTEX, "M") == Axis("M", 1, 150, 200)
    ax = phase.default_axis(COUNTERPART, "mu_k", n=101, alpha=1, phi=1)
    assert ax.hi == pytest.approx(10)
    n_ax = phase.default_axis(COUNTERPART, "n")
    vals = n_ax.values()
    assert vals[0] == 10 and vals[-1] == 1000 and (vals == np.rint(vals)).all()
    with pytest.raises(DomainError):
        phase.default_axis(VERTEX, "beta")


@pytest.mark.parametrize("kwargs", [
    dict(cls="nope", y=Axis("M", 1, 2), phi=1),
    dict(cls=VERTEX, y=Axis("alpha", 0, 1), phi=1),
    dict(cls=VERTEX, y=Axis("M", 1, 2)),
    dict(cls=VERTEX, y=Axis("M", 1, 2), phi=1, m_links=3),
    dict(cls=VERTEX, y=Axis("M", 0.5, 2), phi=1),
    dict(cls=VERTEX, y=Axis("M", 3, 2), phi=1),
    dict(cls=VERTEX, y=Axis("M", 1, 2, 1), phi=1),
    dict(cls=VERTEX, y=Axis("M", 1, 2, scale="sqrt"), phi=1),
    dict(cls=VERTEX, y=Axis("phi", 0, 2, scale="log"), m_links=3),
    dict(cls=COUNTERPART, y=Axis("mu_k", 1, 2), n=10, phi=1),
    dict(cls=COUNTERPART, y=Axis("alpha", 0, 2), n=10, mu_k=2, phi=1, mode="exact"),
])
def test_gridspec_validation(kwargs):
    with pytest.raises(DomainError):
        GridSpec(**kwargs)
