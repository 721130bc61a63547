import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from vocabias import zipf
from vocabias.errors import DomainError


def test_generate_examples():
    assert zipf.generate(3, 1, 0).mu.tolist() == [2, 1, 0]
    for phi in (0, 1.5):
        assert zipf.generate(5, 0, phi).mu.tolist() == [1, 1, 1, 1, 0]
    seq = zipf.generate(101, 1, 1)
    assert seq.mu[0] == pytest.approx(10, rel=1e-15)
    assert seq.mu_max == pytest.approx(10, rel=1e-15)
    assert seq.tau == 0.5


@pytest.mark.parametrize("args", [(1, 1, 1), (5, -1, 1), (5, 1, -1), (5, 1, 1, "rounded")])
def test_generate_domain(args):
    with pytest.raises(DomainError):
        zipf.generate(*args)


@given(st.integers(2, 2000), st.floats(0, 3), st.floats(0, 3), st.sampled_from(zipf.MODES))
def test_sequence_invariants(n, alpha, phi, mode):
    seq = zipf.generate(n, alpha, phi, mode)
    mu = seq.mu
    assert mu[-1] == 0 and mu[-2] == 1
    assert (np.diff(mu) <= 0).all()
    if mode == "continuous":
        ranks = np.arange(1.0, n)
        assert np.allclose(mu[:-1], seq.c * ranks ** (-seq.tau), rtol=1e-12)
    else:
        cont = zipf.generate(n, alpha, phi).mu
        assert np.max(np.abs(mu - cont)) <= 0.5
        assert (mu == np.round(mu)).all()
        assert seq.clamped == 0


def test_discrete_matches_rint():
    seq = zipf.generate(10, 2, 1, "discrete")
    cont = zipf.generate(10, 2, 1).mu
    assert seq.mu.tolist() == np.rint(cont).tolist()


def test_links_examples():
    assert zipf.links(zipf.generate(17, 0, 1.3)) == 16
    assert zipf.links(zipf.generate(3, 1, 0)) == pytest.approx(3, rel=1e-15)
    seq = zipf.generate(100, 1, 1)
    lo, hi = zipf.link_bounds(100, 0.5)
    assert lo <= zipf.links(seq) <= hi
    disc = zipf.links(zipf.generate(100, 1, 1, "discrete"))
    assert disc == int(disc)


@pytest.mark.parametrize("n", [10, 100, 1000])
@pytest.mark.parametrize("tau", [0.25, 0.5, 1, 1.5])
def test_links_within_integral_bounds(n, tau):
    seq = zipf.generate(n, tau * 2, 1)  # alpha = tau (phi + 1)
    assert seq.tau == tau
    lo, hi = zipf.link_bounds(n, tau)
    assert lo <= zipf.links(seq) <= hi
    if tau == 1:
        assert lo == (n - 1) * math.log(n)
        assert hi == (n - 1) * (1 + math.log(n - 1))


def test_sufficient_stats_examples():
    assert zipf.sufficient_stats(zipf.generate(8, 0, 2)) == (0, 7)
    seq = zipf.DegreeSequence(n=3, alpha=1, phi=1, mode="continuous", mu=np.array([2.0, 1.0, 0.0]))
    x, m = zipf.sufficient_stats(seq)
    assert x == pytest.approx(4 * math.log(2), rel=1e-15) and m == 5


def test_sufficient_stats_loop_oracle():
    mu, phi = [4.0, 2.0, 1.0, 0.0], 0.5
    seq = zipf.DegreeSequence(n=4, alpha=1, phi=phi, mode="continuous", mu=np.array(mu))
    x_ref = m_ref = 0.0
    for v in mu:
        if v > 0:
            m_ref += v ** (phi + 1)
            x_ref += v ** (phi + 1) * math.log(v)
    x, m = zipf.sufficient_stats(seq)
    assert x == pytest.approx(x_ref, rel=1e-14)
    assert m == pytest.approx(m_ref, rel=1e-14)


@pytest.mark.parametrize("n, alpha, phi", [(50, 1, 1), (50, 0, 0), (200, 1.5, 2)])
def test_zipf_marginal_check(n, alpha, phi):
    seq = zipf.generate(n, alpha, phi)
    fit = zipf.zipf_marginal_check(seq)
    assert fit.alpha_fit == pytest.approx(alpha, abs=1e-9)
    assert fit.residual < 1e-9 and fit.exact
    _, m_phi = zipf.sufficient_stats(seq)
    assert fit.c_prime == pytest.approx((n - 1) ** alpha / m_phi, rel=1e-15)
    p = seq.mu[:-1] ** (phi + 1) / m_phi
    assert np.allclose(p, fit.c_prime * np.arange(1.0, n) ** (-alpha), rtol=1e-12)


def test_zipf_marginal_check_discrete_warns():
    with pytest.warns(UserWarning):
        fit = zipf.zipf_marginal_check(zipf.generate(100, 1.5, 1, "discrete"))
    assert not fit.exact


def test_csv_export():
    text = zipf.to_csv(zipf.generate(4, 1, 0))
    lines = text.splitlines()
    assert lines[0] == "# n=4 alpha=1 phi=0 mode=continuous"
    assert lines[1] == "mu"
    assert [float(v) for v in lines[2:]] == zipf.generate(4, 1, 0).mu.tolist()
