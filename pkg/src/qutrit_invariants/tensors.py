"""Hermitian matrix bases and their structure constants.

Builds the Pauli (dim 2) and Gell-Mann (dim 3) bases in the standard
ordering, the antisymmetric f and symmetric d coefficient arrays from their
trace formulas, and the totally symmetric rank-3 tensor extending d to the
identity direction (index 0), whose invariance group realizes the local
special-linear transformations of a single qutrit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

_SQ3 = np.sqrt(3.0)

PAULI = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)

# lambda_1..lambda_8 with lambda_3, lambda_8 diagonal; Tr(l_a l_b) = 2 delta_ab
GELL_MANN = np.array([
    [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
    [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]],
    [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
    [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
    [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]],
    [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]],
    [[1 / _SQ3, 0, 0], [0, 1 / _SQ3, 0], [0, 0, -2 / _SQ3]],
], dtype=complex)


@dataclass(frozen=True)
class StructureTensors:
    """Basis matrices plus f, d and the extended symmetric tensor.

    f and d are dense (n, n, n) arrays over the traceless basis (n = dim^2 - 1,
    0-based indices); dtilde is (n+1, n+1, n+1) with index 0 the identity
    direction.  d and dtilde exist only for dim 3.
    """

    dim: int
    lambdas: np.ndarray   # (n, dim, dim)
    lam_ext: np.ndarray   # (n+1, dim, dim), entry 0 is the identity
    f: np.ndarray
    d: np.ndarray | None
    dtilde: np.ndarray | None


def _freeze(a):
    a.setflags(write=False)
    return a


@lru_cache(maxsize=None)
def build_structure_tensors(dim):
    """Construct the basis and coefficient arrays for local dimension 2 or 3.

    f_abc = Tr([l_a, l_b] l_c) / 4i and d_abc = Tr({l_a, l_b} l_c) / 4,
    evaluated once per sorted index triple and spread over all permutations,
    so total (anti)symmetry holds exactly.
    """
    if dim == 2:
        lams = PAULI
    elif dim == 3:
        lams = GELL_MANN
    else:
        raise ValueError(f"unsupported local dimension {dim}")
    n = dim * dim - 1
    f = np.zeros((n, n, n))
    d = np.zeros((n, n, n))
    for a in range(n):
        for b in range(a + 1, n):
            comm = lams[a] @ lams[b] - lams[b] @ lams[a]
            for c in range(b + 1, n):
                val = (np.trace(comm @ lams[c]) / 4j).real
                if abs(val) > 1e-14:
                    for p, sign in ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), \
                                   ((1, 0, 2), -1), ((0, 2, 1), -1), ((2, 1, 0), -1):
                        idx = (a, b, c)
                        f[idx[p[0]], idx[p[1]], idx[p[2]]] = sign * val
    for a in range(n):
        for b in range(a, n):
            anti = lams[a] @ lams[b] + lams[b] @ lams[a]
            for c in range(b, n):
                val = (np.trace(anti @ lams[c]) / 4).real
                if abs(val) > 1e-14:
                    for p in set(permutations((a, b, c))):
                        d[p] = val

    lam_ext = np.concatenate([np.eye(dim, dtype=complex)[None], lams])
    if dim == 2:
        return StructureTensors(2, _freeze(lams.copy()), _freeze(lam_ext),
                                _freeze(f), None, None)

    dt = np.zeros((9, 9, 9))
    dt[0, 0, 0] = 1.5
    for a in range(1, 9):
        dt[0, a, a] = dt[a, 0, a] = dt[a, a, 0] = -0.5
    dt[1:, 1:, 1:] = d
    return StructureTensors(3, _freeze(lams.copy()), _freeze(lam_ext),
                            _freeze(f), _freeze(d), _freeze(dt))


def cyclic_identity_check(tensors):
    """Residuals of the once-contracted quartet identities used throughout
    the quartic analysis.

    Over four free octet indices (a, b, c, d), the cyclic sum in (a, b, c)
    of the pattern X_{ace} Y_{ebd} vanishes for (X, Y) = (d, f) and (f, f),
    while for (d, d) it equals one third of the matching delta-delta sum.
    Returns the max-abs residual of each.
    """
    if tensors.dim != 3:
        raise ValueError("quartet identities require local dimension 3")
    f, d = tensors.f, tensors.d

    def cyclic(x, y):
        return (np.einsum('ace,ebd->abcd', x, y, optimize=True)
                + np.einsum('bae,ecd->abcd', x, y, optimize=True)
                + np.einsum('cbe,ead->abcd', x, y, optimize=True))

    eye = np.eye(8)
    dd = cyclic(d, d)
    deltas = (np.einsum('ac,bd->abcd', eye, eye, optimize=True)
              + np.einsum('ba,cd->abcd', eye, eye, optimize=True)
              + np.einsum('cb,ad->abcd', eye, eye, optimize=True))
    return {
        "df": float(np.abs(cyclic(d, f)).max()),
        "ff": float(np.abs(cyclic(f, f)).max()),
        "dd_minus_deltadelta": float(np.abs(dd - deltas / 3.0).max()),
    }


def det_from_dtilde(coords):
    """Evaluate the cubic form of the extended symmetric tensor on single-
    qutrit coordinates (r0, r1..r8) alongside the direct determinant.

    Returns (cubic value, determinant of the reconstructed matrix).  The two
    are proportional; the constant is measured by the test suite rather than
    assumed.
    """
    coords = np.asarray(coords, dtype=float)
    if coords.shape != (9,):
        raise ValueError("expected 9 single-qutrit coordinates")
    t = build_structure_tensors(3)
    cubic = float(np.einsum('abc,a,b,c->', t.dtilde, coords, coords, coords, optimize=True))
    rho = np.einsum('a,aij->ij', coords, t.lam_ext, optimize=True)
    det = float(np.linalg.det(rho).real)
    return cubic, det
