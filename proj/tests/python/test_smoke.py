import math

import numpy as np
import pytest

import memsfront as mf


def test_bell_state_measures():
    bell = mf.bell_phi_plus()
    assert mf.concurrence(bell) == pytest.approx(1.0, abs=1e-12)
    assert mf.negativity(bell) == pytest.approx(1.0, abs=1e-12)
    assert mf.eof(bell) == pytest.approx(1.0, abs=1e-12)
    assert mf.linear_entropy(bell) == pytest.approx(0.0, abs=1e-12)
    assert mf.chsh_b(bell) == pytest.approx(2 * math.sqrt(2), abs=1e-10)


def test_werner_against_closed_forms():
    for r in (0.2, 0.5, 0.9):
        w = mf.werner(r)
        assert np.allclose(w, w.conj().T)
        assert mf.linear_entropy(w) == pytest.approx(1 - r * r, abs=1e-12)
        assert mf.concurrence(w) == pytest.approx(max(0.0, (3 * r - 1) / 2), abs=1e-10)
        assert mf.chsh_b(w) == pytest.approx(2 * math.sqrt(2) * r, abs=1e-10)


def test_measures_against_numpy_oracles():
    rho = mf.random_density(4, 12345)
    assert rho.shape == (4, 4)
    ev = np.linalg.eigvalsh(rho)
    assert ev.min() > -1e-12
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    # negativity from numpy's partial transpose
    pt = rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
    ev_pt = np.linalg.eigvalsh(pt)
    n_numpy = 2 * max(0.0, -ev_pt[ev_pt < 0].sum())
    assert mf.negativity(rho) == pytest.approx(n_numpy, abs=1e-10)
    # von Neumann entropy in log base 4
    lam = ev[ev > 1e-14]
    sv_numpy = float(-(lam * np.log(lam)).sum() / math.log(4))
    assert mf.von_neumann_entropy(rho) == pytest.approx(sv_numpy, abs=1e-10)


def test_partial_transpose_and_eigensystem():
    rho = mf.gisin_c(1 / 3)
    vals, vecs = mf.hermitian_eigensystem(rho)
    assert sorted(vals, reverse=True) == pytest.approx(list(vals))
    recon = (np.asarray(vecs) * np.asarray(vals)) @ np.asarray(vecs).conj().T
    assert np.abs(recon - rho).max() < 1e-10
    assert np.array_equal(mf.partial_transpose(mf.partial_transpose(rho)), rho)


def test_frontier_points_and_crossings():
    p = mf.frontier_point("ef-sl", 0.3)
    assert p["entanglement"] == pytest.approx(0.5 * (1 + math.sqrt(1 - 0.45)), abs=1e-10)
    assert p["branch"] == "RANK2"

    t = mf.crossing_table()
    assert t["er_sl"]["s_l"] == pytest.approx(0.5054, abs=1e-3)
    assert t["er_sl"]["e_r"] == pytest.approx(0.3422, abs=1e-3)
    assert t["ef_sv"]["c"] == pytest.approx(0.305, abs=5e-3)
    assert t["er_sv"]["werner_r"] == pytest.approx(0.6059, abs=1e-3)
    assert t["sl_separability_threshold"] == pytest.approx(8 / 9, abs=1e-12)


def test_ls_decomposition_identity():
    d = mf.ls_decompose(0.1, 0.2, 0.05, 0.05, 0.6)
    rho = mf.from_x_params(0.1, 0.2, 0.05, 0.05, 0.6)
    assert 1 - d["lambda"] == pytest.approx(mf.concurrence(rho), abs=1e-10)
    recombined = d["lambda"] * d["separable_part"] + (1 - d["lambda"]) * d["entangled_part"]
    assert np.abs(recombined - rho).max() < 1e-10


def test_scatter_is_deterministic_and_inside_bounds():
    a = mf.scatter_measures(200, 7)
    b = mf.scatter_measures(200, 7)
    assert np.array_equal(a, b)
    conc, neg = a[:, 1], a[:, 4]
    assert (neg <= conc + 1e-9).all()
    lower = np.array([mf.cn_bounds(c)[0] for c in conc])
    assert (neg >= lower - 1e-9).all()


def test_er_closed_form():
    assert mf.er_rank3(0.0, 1.0) == pytest.approx(1.0, abs=1e-12)
    assert mf.er_rank3(0.3, 0.0) == 0.0
    assert mf.er_werner(1.0) == pytest.approx(1.0, abs=1e-12)
    sigma = mf.closest_separable_rank3(0.2, 0.0)
    rho = np.zeros((4, 4), complex)
    rho[0, 0] = rho[3, 3] = 0.4
    rho[1, 1] = 0.2
    assert np.abs(sigma - rho).max() < 1e-12
