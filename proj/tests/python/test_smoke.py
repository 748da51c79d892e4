import math

import numpy as np
import pytest

import seqent


def test_binary_entropy_anchors():
    assert seqent.binary_entropy(0.5) == pytest.approx(1.0, abs=1e-14)
    assert seqent.binary_entropy(0.0) == 0.0
    assert seqent.shannon(np.array([0.25, 0.25, 0.25, 0.25])) == pytest.approx(2.0, abs=1e-13)


def test_wigner_half_spin_closed_form():
    theta = 0.83
    d = seqent.wigner_small_d(1, theta)
    expect = np.array(
        [
            [math.cos(theta / 2), -math.sin(theta / 2)],
            [math.sin(theta / 2), math.cos(theta / 2)],
        ]
    )
    assert np.max(np.abs(d - expect)) < 1e-13


def test_wigner_matches_exponential_oracle():
    for twice_s in (1, 2, 3, 4):
        _, sy, _ = seqent.spin_operators(twice_s)
        for theta in (0.0, 0.9, 2.4, -1.3):
            d = seqent.wigner_small_d(twice_s, theta)
            u = seqent.expm_skew_hermitian(sy, theta)
            assert np.max(np.abs(d - u)) < 1e-10


def test_spin_operator_algebra():
    sx, sy, sz = seqent.spin_operators(3)
    comm = sx @ sy - sy @ sx
    assert np.max(np.abs(comm - 1j * sz)) < 1e-12


def test_sequential_joint_spin_marginals():
    p = seqent.sequential_joint_spin(2, 1.1)
    assert p.shape == (3, 3)
    assert np.all(p >= 0)
    assert np.sum(p) == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(p.sum(axis=1) - 1.0 / 3.0)) < 1e-12


def test_entropies_and_bounds():
    rho = np.eye(2, dtype=complex) / 2
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sz = np.diag([1.0, -1.0]).astype(complex)
    assert seqent.max_overlap(sx, sz) == pytest.approx(1 / math.sqrt(2), abs=1e-13)
    report = seqent.maassen_uffink_check(rho, sx, sz)
    assert report.satisfied
    assert report.lhs == pytest.approx(2.0, abs=1e-13)
    assert report.rhs == pytest.approx(1.0, abs=1e-13)

    bell = seqent.bell_state(2)
    assert seqent.conditional_von_neumann(bell, 2, 2) == pytest.approx(-1.0, abs=1e-12)
    berta = seqent.berta_check(bell, 2, 2, sx, sz)
    assert abs(berta.lhs) < 1e-10 and abs(berta.rhs) < 1e-10


def test_memory_witness_and_scan():
    assert seqent.memory_witness(1, 0.0, 0.0) == pytest.approx(-1.0, abs=1e-12)
    assert seqent.memory_witness(1, math.pi / 2, math.pi / 2) == pytest.approx(1.0, abs=1e-12)

    scan = seqent.run_scan(1, resolution=9)
    grid = scan["grid"]
    assert grid.shape == (9, 9)
    assert scan["min_value"] == pytest.approx(-1.0, abs=1e-12)
    assert 0.0 < scan["negative_fraction"] < 1.0
    assert grid[0, 0] == seqent.memory_witness(1, scan["thetas"][0], scan["phis"][0])


def test_steering_witness_detects_quantum_memory():
    sharp = seqent.sequential_joint_spin(1, 0.0)
    report = seqent.steering_witness(sharp, sharp, 1 / math.sqrt(2))
    assert not report.satisfied

    wide = seqent.sequential_joint_spin(1, math.pi / 2)
    assert seqent.steering_witness(wide, wide, 1 / math.sqrt(2)).satisfied


def test_run_checks_clean():
    summary = seqent.run_checks("mu", trials=40, dim=2, seed=7)
    assert summary["violations"] == 0
    assert summary["min_slack"] >= -1e-9
    theorem = seqent.run_checks("theorem", trials=40, dim=2, seed=8)
    assert theorem["violations"] == 0
    with pytest.raises(ValueError):
        seqent.run_checks("bogus", trials=1, dim=2, seed=1)


def test_partial_trace_and_density_validation():
    rho_a = np.array([[0.7, 0.1], [0.1, 0.3]], dtype=complex)
    rho_b = np.eye(3, dtype=complex) / 3
    joint = seqent.kron(rho_a, rho_b)
    reduced = seqent.partial_trace(joint, "b", 2, 3)
    assert np.max(np.abs(reduced - rho_a)) < 1e-12
    with pytest.raises(ValueError):
        seqent.von_neumann_entropy(np.eye(2, dtype=complex))  # trace 2
