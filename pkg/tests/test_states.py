import json

import numpy as np
import pytest

from qutrit_invariants.states import (
    BipartiteState,
    apply_local,
    from_coords,
    from_single_coords,
    load_state,
    local_coordinate_map,
    physicality,
    random_local_sl,
    random_local_unitary,
    random_state,
    save_state,
    to_coords,
    to_single_coords,
)
from qutrit_invariants.tensors import GELL_MANN


def test_maximally_mixed_coords():
    c = to_coords(np.eye(9) / 9, 3, 3)
    assert abs(c.trace_entry - 1.0 / 9.0) < 1e-15
    assert np.abs(c.r).max() < 1e-15
    assert np.abs(c.rbar).max() < 1e-15
    assert np.abs(c.R).max() < 1e-15


def test_trace_formula_oracle():
    # the einsum extraction must match the literal trace definition
    rng = np.random.default_rng(3)
    st = random_state(3, 3, rng)
    c = st.coords
    for a in range(8):
        direct = np.trace(st.rho @ np.kron(GELL_MANN[a], np.eye(3))).real / 6.0
        assert abs(c.r[a] - direct) < 1e-13
        direct = np.trace(st.rho @ np.kron(np.eye(3), GELL_MANN[a])).real / 6.0
        assert abs(c.rbar[a] - direct) < 1e-13
    for a in range(8):
        for b in range(8):
            direct = np.trace(st.rho @ np.kron(GELL_MANN[a], GELL_MANN[b])).real / 4.0
            assert abs(c.R[a, b] - direct) < 1e-13


def test_single_axis_component():
    eps = 0.01
    rho = (np.eye(9) + eps * np.kron(GELL_MANN[2], np.eye(3))) / 9.0
    c = to_coords(rho, 3, 3)
    assert abs(c.r[2] - eps / 9.0) < 1e-15
    mask = np.ones(8, bool)
    mask[2] = False
    assert np.abs(c.r[mask]).max() < 1e-15
    assert np.abs(c.rbar).max() < 1e-15
    assert np.abs(c.R).max() < 1e-15


def test_round_trips():
    rng = np.random.default_rng(11)
    for dims in [(3, 3), (2, 2)]:
        for _ in range(50):
            st = random_state(*dims, rng)
            assert np.abs(from_coords(st.coords) - st.rho).max() < 1e-12


def test_from_coords_bell_projector():
    phi = np.zeros(9, dtype=complex)
    for i in range(3):
        phi[3 * i + i] = 1.0 / np.sqrt(3.0)
    proj = np.outer(phi, phi.conj())
    rebuilt = from_coords(to_coords(proj, 3, 3))
    assert np.abs(rebuilt - proj).max() < 1e-12
    eigs = np.linalg.eigvalsh(rebuilt)
    assert abs(eigs[-1] - 1.0) < 1e-12 and np.abs(eigs[:-1]).max() < 1e-12


def test_from_coords_hermitian_for_arbitrary_coordinates():
    rng = np.random.default_rng(5)
    c = to_coords(np.eye(9) / 9, 3, 3)
    ext = rng.standard_normal(c.ext.shape)
    arbitrary = type(c)(3, 3, ext)
    rho = from_coords(arbitrary)
    assert np.array_equal(rho, rho.conj().T)


def test_to_coords_rejects_non_hermitian():
    rho = np.eye(9, dtype=complex) / 9
    rho[0, 1] = 0.5
    with pytest.raises(ValueError):
        to_coords(rho, 3, 3)


def test_single_system_coords_round_trip():
    rng = np.random.default_rng(9)
    H = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    H = (H + H.conj().T) / 2
    v = to_single_coords(H, 3)
    assert np.abs(from_single_coords(v, 3) - H).max() < 1e-12
    assert abs(v[0] - np.trace(H).real / 3) < 1e-14


def test_random_state_contract():
    st = random_state(3, 3, 42)
    st2 = random_state(3, 3, 42)
    assert np.array_equal(st.rho, st2.rho)
    eigs = np.linalg.eigvalsh(st.rho)
    assert eigs.min() >= -1e-12
    assert abs(np.trace(st.rho).real - 1) < 1e-12
    assert abs(st.coords.trace_entry - 1.0 / 9.0) < 1e-13


def test_random_state_mean_purity():
    # Hilbert-Schmidt ensemble at total dimension 9; the measured mean was
    # 0.2195 over the pinned seed (analytic 2 N / (N^2 + 1) = 18/82)
    rng = np.random.default_rng(2024)
    purity = []
    for _ in range(300):
        rho = random_state(3, 3, rng).rho
        purity.append(float(np.trace(rho @ rho).real))
    mean = np.mean(purity)
    assert abs(mean - 18.0 / 82.0) / (18.0 / 82.0) < 0.2


def test_random_local_unitary_contract():
    U = random_local_unitary(3, 7)
    assert np.abs(U @ U.conj().T - np.eye(3)).max() < 1e-12
    assert abs(np.linalg.det(U) - 1) < 1e-12
    assert np.array_equal(U, random_local_unitary(3, 7))


def test_random_local_sl_contract():
    A = random_local_sl(3, 7)
    assert abs(np.linalg.det(A) - 1) < 1e-12
    assert np.abs(A @ A.conj().T - np.eye(3)).max() > 0.1


def test_apply_local_identity_and_trace():
    rng = np.random.default_rng(13)
    st = random_state(3, 3, rng)
    same = apply_local(st, np.eye(3), np.eye(3), renormalize=False)
    assert np.abs(same.rho - st.rho).max() < 1e-14
    U, V = random_local_unitary(3, rng), random_local_unitary(3, rng)
    moved = apply_local(st, U, V, renormalize=False)
    assert abs(np.trace(moved.rho).real - 1) < 1e-12
    A = random_local_sl(3, rng)
    renorm = apply_local(st, A, A, renormalize=True)
    assert abs(np.trace(renorm.rho).real - 1) < 1e-12


def test_apply_local_preserves_reduced_spectra_under_unitaries():
    rng = np.random.default_rng(14)
    st = random_state(3, 3, rng)
    U, V = random_local_unitary(3, rng), random_local_unitary(3, rng)
    moved = apply_local(st, U, V, renormalize=False)

    def reduced_a(rho):
        return np.trace(rho.reshape(3, 3, 3, 3), axis1=1, axis2=3)

    e1 = np.sort(np.linalg.eigvalsh(reduced_a(st.rho)))
    e2 = np.sort(np.linalg.eigvalsh(reduced_a(moved.rho)))
    assert np.abs(e1 - e2).max() < 1e-12


def test_apply_local_rejects_singular():
    st = random_state(3, 3, 0)
    with pytest.raises(ValueError):
        apply_local(st, np.zeros((3, 3)), np.eye(3))


def test_local_coordinate_map_consistency():
    # conjugating then extracting coordinates equals acting with the map
    rng = np.random.default_rng(21)
    st = random_state(3, 3, rng)
    A, B = random_local_sl(3, rng), random_local_sl(3, rng)
    moved = apply_local(st, A, B, renormalize=False)
    mA = local_coordinate_map(A, 3)
    mB = local_coordinate_map(B, 3)
    assert np.abs(mA @ st.coords.ext @ mB.T - moved.coords.ext).max() < 1e-10


def test_physicality_diagnostics():
    st = random_state(3, 3, 1)
    diag = physicality(st)
    assert diag["physical"]
    bad = BipartiteState.from_rho(np.diag([2.0] + [-1.0 / 8.0] * 8), 3, 3)
    assert not physicality(bad)["physical"]


def test_state_file_round_trip(tmp_path):
    st = random_state(3, 3, 99)
    path = tmp_path / "state.json"
    save_state(st, path)
    loaded = load_state(path)
    assert np.array_equal(loaded.rho, st.rho)
    assert loaded.dimA == 3 and loaded.dimB == 3


def test_state_file_validation(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dimA": 3, "dimB": 3, "re": [[1.0]], "im": [[0.0]]}))
    with pytest.raises(ValueError):
        load_state(path)
    path.write_text('{"dimA": 3')
    with pytest.raises((ValueError, json.JSONDecodeError)):
        load_state(path)
