import cmath
import math

import numpy as np
import pytest

import amkit


def omega(d):
    return cmath.exp(2j * math.pi / d)


def test_clock_gate():
    z = amkit.local_gate("Z", 3)
    assert np.allclose(np.diag(z), [1, omega(3), omega(3) ** 2])


def test_mc_phase_matches_controlled():
    z = amkit.local_gate("Z", 3)
    ccz = amkit.controlled(z, 3, arity=2)
    assert np.abs(amkit.mc_phase(3, 3, 1) - ccz).max() < 1e-12


def test_hypergraph_paths_agree():
    h = amkit.parse_hypergraph("dim 3\nvertices 3\nedge 1 2 mult 1\nedge 1 2 3 mult 2\n")
    a = amkit.hypergraph_state(h)
    b = amkit.hypergraph_state_hamiltonian(h)
    assert np.abs(a - b).max() < 1e-10
    assert amkit.slocc_certificate(h) < 1e-10


def test_parse_error_reports_line():
    with pytest.raises(ValueError, match="line 3"):
        amkit.parse_hypergraph("dim 3\nvertices 2\nedge 1 5 mult 1\n")


def test_ccz_decompositions():
    assert np.abs(amkit.ccz_two_body() - amkit.ccz_target()).max() < 1e-12
    labels, u = amkit.hard_ccz_decomposition(1)
    assert len(labels) == 5
    assert np.abs(u - amkit.hard_cz_target(1, 1)).max() < 1e-12


def test_optical_networks():
    text, f = amkit.dft_network()
    assert len(text.splitlines()) == 5
    assert np.abs(f - amkit.local_gate("F", 3)).max() < 1e-13
    dec = amkit.optical_ccz()
    assert dec["leakage"] < 1e-13
    m = dec["matrix"]
    assert np.abs(m - np.diag(np.diag(m))).max() < 1e-12
    ratio = np.diag(m) / np.diag(amkit.ccz_target())
    assert np.allclose(ratio, ratio[0])
    psi, leak = amkit.optical_hypergraph3()
    assert leak < 1e-13
    assert abs(np.linalg.norm(psi) - 1) < 1e-12


def test_symmetric_coupling():
    c, terms = amkit.coupling_from_qubits(2, 3)
    assert terms == 8
    jz = np.diag([1.0, 0.0, -1.0])
    want = np.kron(np.kron(jz, jz), jz)
    assert np.abs(amkit.compress_symmetric(c, 2, 3) - want).max() < 1e-12


def test_verify_and_cli():
    ok, report = amkit.run_suite("circuits")
    assert ok and "suite circuits: PASS" in report
    code, out, _ = amkit.run_cli(["gate", "--dim", "3", "--name", "X"])
    assert code == 0 and out.startswith("matrix 3 3")
    code, _, _ = amkit.run_cli(["hypergraph", "--file", "/nonexistent.hgs"])
    assert code == 2
