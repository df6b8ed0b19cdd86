"""Two-qubit invariants under local unit-determinant transformations.

Qubit coordinates live in a four-dimensional space with the Lorentz-type
metric diag(1, -1, -1, -1); the relativistic transfer matrix built from
the bipartite coordinate matrix yields the trace invariants Q2, Q4, Q6
(and Q8, which is dependent), while the determinant of the coordinate
matrix itself supplies the quartic invariant Q4t with an equivalent
epsilon-epsilon contraction form.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .numdiff import numerical_rank, poly_jacobian

ETA = np.diag([1.0, -1.0, -1.0, -1.0])


def _levi_civita(n):
    eps = np.zeros((n,) * n)
    for perm in permutations(range(n)):
        sign = 1
        p = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        eps[perm] = sign
    return eps


_EPS4 = _levi_civita(4)
_EPS3 = _levi_civita(3)


def _require_qubits(coords):
    if coords.dimA != 2 or coords.dimB != 2:
        raise ValueError("these invariants require two qubits")


def w_matrix(ext):
    """One-sided transfer matrix: raise/lower with the metric on both
    slots of the coordinate matrix and contract the bar side."""
    ext = np.asarray(ext, dtype=float)
    return ext @ ETA @ ext.T @ ETA


def w_matrix_bar(ext):
    """The partner acting on the other side; isospectral to w_matrix."""
    ext = np.asarray(ext, dtype=float)
    return ext.T @ ETA @ ext @ ETA


def q_invariants(ext):
    """Trace invariants of the transfer matrix plus the coordinate-matrix
    determinant, computed both directly and by the epsilon contraction."""
    ext = np.asarray(ext, dtype=float)
    w = w_matrix(ext)
    w2 = w @ w
    eps_form = np.einsum('abcd,pqrs,ap,bq,cr,ds->', _EPS4, _EPS4,
                         ext, ext, ext, ext, optimize=True) / 24.0
    return {
        "Q2": float(np.trace(w)),
        "Q4": float(np.trace(w2)),
        "Q6": float(np.trace(w2 @ w)),
        "Q8": float(np.trace(w2 @ w2)),
        "Q4t": float(np.linalg.det(ext)),
        "Q4t_eps": float(eps_form),
    }


def q2_expansion(coords):
    """Block expansion of Q2 for a trace-normalized state:
    1/16 - r.r - rbar.rbar + sum R^2."""
    _require_qubits(coords)
    r, rbar, R = coords.r, coords.rbar, coords.R
    return 1.0 / 16.0 - r @ r - rbar @ rbar + float(np.sum(R * R))


def q4_expansion(coords):
    """Block expansion of Q4 for a trace-normalized state."""
    _require_qubits(coords)
    r, rbar, R = coords.r, coords.rbar, coords.R
    RRt = R @ R.T
    return (float(np.trace(RRt @ RRt))
            + (r @ r) ** 2 + (rbar @ rbar) ** 2
            - 2.0 * (r @ RRt @ r) - 2.0 * (rbar @ (R.T @ R) @ rbar)
            + (r @ R @ rbar)
            - (r @ r) / 8.0 - (rbar @ rbar) / 8.0 + 1.0 / 256.0)


def q4tilde_expansion(coords):
    """Block expansion of the coordinate-matrix determinant for a
    trace-normalized state: det(R)/4 minus half the double-cross coupling.

    The minus sign is forced by the determinant itself (block expansion of
    the 4x4 coordinate matrix with the standard epsilon orientation) and is
    pinned against the direct determinant by the test suite.
    """
    _require_qubits(coords)
    r, rbar, R = coords.r, coords.rbar, coords.R
    cross = np.einsum('ijk,pqr,i,jp,kq,r->', _EPS3, _EPS3,
                      r, R, R, rbar, optimize=True)
    return float(np.linalg.det(R)) / 4.0 - cross / 2.0


def expansion_residuals(coords):
    """Residuals of the three block expansions against the direct values."""
    _require_qubits(coords)
    q = q_invariants(coords.ext)
    return {
        "Q2": abs(q["Q2"] - q2_expansion(coords)),
        "Q4": abs(q["Q4"] - q4_expansion(coords)),
        "Q4t": abs(q["Q4t"] - q4tilde_expansion(coords)),
        "Q4t_eps": abs(q["Q4t"] - q["Q4t_eps"]),
    }


def q4tilde_expansion_residual(coords):
    _require_qubits(coords)
    return abs(float(np.linalg.det(coords.ext)) - q4tilde_expansion(coords))


def dependence_jacobian_rank(coords, rel_threshold=1e-8):
    """Rank of the Jacobian of (Q2, Q4, Q6, Q8, Q4t) over the fifteen free
    coordinates of a normalized state; the expected value is 4, witnessing
    one polynomial relation tying Q8 to the others."""
    _require_qubits(coords)
    ext0 = np.asarray(coords.ext, dtype=float).copy()

    def fn(x):
        ext = ext0.copy()
        flat = ext.reshape(-1)
        flat[1:] = x
        q = q_invariants(ext)
        return np.array([q["Q2"], q["Q4"], q["Q6"], q["Q8"], q["Q4t"]])

    jac = poly_jacobian(fn, ext0.reshape(-1)[1:], degree=8, h=0.25)
    return numerical_rank(jac, rel_threshold, normalize_rows=True)


def q8_relation_residual(ext):
    """Residual of the measured polynomial relation expressing Q8 through
    Q2, Q4, Q6 and the squared coordinate determinant (a Newton identity
    for the transfer-matrix spectrum whose product is that square)."""
    q = q_invariants(ext)
    predicted = (q["Q2"] ** 4 - 6.0 * q["Q2"] ** 2 * q["Q4"]
                 + 8.0 * q["Q2"] * q["Q6"] + 3.0 * q["Q4"] ** 2
                 - 24.0 * q["Q4t"] ** 2) / 6.0
    return abs(q["Q8"] - predicted)
