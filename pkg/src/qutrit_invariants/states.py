"""Bipartite qudit mixed states and their real coordinate pictures.

A state of local dimensions (dA, dB) is carried both as a dense density
matrix and as the real (dA^2 x dB^2) coordinate matrix over the extended
Hermitian bases (identity in slot 0), related by trace inner products.
Sampling of states and of local transformations is deterministic given a
seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .tensors import build_structure_tensors

HERMITICITY_TOL = 1e-10


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _norms(dim):
    # Tr(l_a l_b) = 2 delta_ab on the traceless block, Tr(I I) = dim
    n = np.full(dim * dim, 2.0)
    n[0] = float(dim)
    return n


@dataclass(frozen=True)
class StateCoords:
    """Real coordinates of a bipartite Hermitian operator.

    ``ext[a, b]`` multiplies basis element a (x) b with index 0 the
    identity; the one-sided blocks and the correlation block are views.
    """

    dimA: int
    dimB: int
    ext: np.ndarray

    @property
    def r(self):
        return self.ext[1:, 0]

    @property
    def rbar(self):
        return self.ext[0, 1:]

    @property
    def R(self):
        return self.ext[1:, 1:]

    @property
    def trace_entry(self):
        return float(self.ext[0, 0])


@dataclass(frozen=True)
class BipartiteState:
    dimA: int
    dimB: int
    rho: np.ndarray
    coords: StateCoords

    @classmethod
    def from_rho(cls, rho, dimA, dimB):
        return cls(dimA, dimB, rho, to_coords(rho, dimA, dimB))


def to_coords(rho, dimA, dimB):
    """Extract the real coordinate matrix of a Hermitian ``rho``.

    ext[a, b] = Tr(rho (l_a x l_b)) / (n_a n_b) with n_0 = dim and n_a = 2
    otherwise, so ext[0, 0] = Tr(rho) / (dimA dimB).
    """
    rho = np.asarray(rho, dtype=complex)
    D = dimA * dimB
    if rho.shape != (D, D):
        raise ValueError(f"expected a {D}x{D} matrix for dims ({dimA},{dimB})")
    herm = np.abs(rho - rho.conj().T).max()
    if herm > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian (residual {herm:.2e})")
    lamA = build_structure_tensors(dimA).lam_ext
    lamB = build_structure_tensors(dimB).lam_ext
    rho4 = rho.reshape(dimA, dimB, dimA, dimB)
    ext = np.einsum('ipjq,aji,bqp->ab', rho4, lamA, lamB, optimize=True)
    ext = ext.real / np.outer(_norms(dimA), _norms(dimB))
    return StateCoords(dimA, dimB, ext)


def from_coords(coords):
    """Reconstruct the Hermitian matrix from coordinates (exact inverse)."""
    dimA, dimB = coords.dimA, coords.dimB
    ext = np.asarray(coords.ext, dtype=float)
    if ext.shape != (dimA * dimA, dimB * dimB):
        raise ValueError("coordinate shape does not match declared dimensions")
    lamA = build_structure_tensors(dimA).lam_ext
    lamB = build_structure_tensors(dimB).lam_ext
    rho4 = np.einsum('ab,aij,bpq->ipjq', ext, lamA, lamB, optimize=True)
    rho = rho4.reshape(dimA * dimB, dimA * dimB)
    return (rho + rho.conj().T) / 2.0


def to_single_coords(rho, dim):
    """Coordinates (r0, r1, ..) of a single-system Hermitian matrix."""
    rho = np.asarray(rho, dtype=complex)
    t = build_structure_tensors(dim)
    vals = np.einsum('ij,aji->a', rho, t.lam_ext, optimize=True).real / _norms(dim)
    return vals


def from_single_coords(coords, dim):
    t = build_structure_tensors(dim)
    rho = np.einsum('a,aij->ij', np.asarray(coords, dtype=float), t.lam_ext)
    return (rho + rho.conj().T) / 2.0


def random_state(dimA, dimB, seed):
    """Hilbert-Schmidt ensemble state G G^dag / Tr(G G^dag)."""
    rng = _rng(seed)
    D = dimA * dimB
    G = rng.standard_normal((D, D)) + 1j * rng.standard_normal((D, D))
    W = G @ G.conj().T
    rho = W / np.trace(W).real
    return BipartiteState.from_rho(rho, dimA, dimB)


def random_local_unitary(dim, seed):
    """Haar-ish special unitary: QR with phase fixing, determinant set to 1."""
    rng = _rng(seed)
    Z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    Q, R = np.linalg.qr(Z)
    Q = Q * (np.diagonal(R) / np.abs(np.diagonal(R)))
    return Q / np.linalg.det(Q) ** (1.0 / dim)


def random_local_sl(dim, seed):
    """Random unit-determinant complex matrix (Gaussian entries rescaled)."""
    rng = _rng(seed)
    A = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return A / np.linalg.det(A) ** (1.0 / dim)


def apply_local(state, A, B, renormalize=True):
    """Conjugate by A (x) B, optionally dividing by the resulting trace."""
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    for M, d in ((A, state.dimA), (B, state.dimB)):
        if M.shape != (d, d):
            raise ValueError("local map shape does not match state dimensions")
        if abs(np.linalg.det(M)) < 1e-12:
            raise ValueError("local map is singular")
    E = np.kron(A, B)
    rho = E @ state.rho @ E.conj().T
    if renormalize:
        rho = rho / np.trace(rho).real
    return BipartiteState.from_rho(rho, state.dimA, state.dimB)


def local_coordinate_map(A, dim):
    """Real (dim^2 x dim^2) matrix of rho -> A rho A^dag on the extended
    coordinate basis of one subsystem; index 0 is the identity direction."""
    A = np.asarray(A, dtype=complex)
    lam = build_structure_tensors(dim).lam_ext
    moved = np.einsum('ij,ajk,lk->ail', A, lam, A.conj(), optimize=True)
    m = np.einsum('ail,bli->ba', moved, lam, optimize=True)
    m = m / _norms(dim)[:, None]
    assert np.abs(m.imag).max() < 1e-12
    return m.real


def physicality(state, tol=1e-10):
    """Trace, Hermiticity residual and minimum eigenvalue diagnostics."""
    rho = state.rho
    herm = float(np.abs(rho - rho.conj().T).max())
    eigs = np.linalg.eigvalsh((rho + rho.conj().T) / 2)
    tr = float(np.trace(rho).real)
    return {
        "trace": tr,
        "hermiticity_residual": herm,
        "min_eigenvalue": float(eigs.min()),
        "physical": bool(herm <= tol and eigs.min() >= -tol and abs(tr - 1) <= tol),
    }


# ---------------------------------------------------------------------------
# JSON state files: {"dimA": 3, "dimB": 3, "re": [[..]], "im": [[..]]},
# row-major real and imaginary parts of the density matrix.

def save_state(state, path):
    payload = {
        "dimA": state.dimA,
        "dimB": state.dimB,
        "re": state.rho.real.tolist(),
        "im": state.rho.imag.tolist(),
    }
    with open(path, "w") as fh:
        json.dump(payload, fh)


def load_state(path):
    with open(path) as fh:
        payload = json.load(fh)
    try:
        dimA = int(payload["dimA"])
        dimB = int(payload["dimB"])
        re = np.asarray(payload["re"], dtype=float)
        im = np.asarray(payload["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state file: {exc}") from exc
    D = dimA * dimB
    if re.shape != (D, D) or im.shape != (D, D):
        raise ValueError(
            f"state file arrays must be {D}x{D} for dims ({dimA},{dimB})")
    rho = re + 1j * im
    return BipartiteState.from_rho(rho, dimA, dimB)
