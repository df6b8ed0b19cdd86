"""Derivatives of polynomial maps by exact-degree central stencils.

A central difference stencil of order >= the polynomial degree has zero
truncation error, so Jacobians of the invariant polynomials carry only
rounding noise.  Weights are the classical rational values.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

# offset -> weight of the first-derivative stencil, exact for polynomials
# of degree <= order
_WEIGHTS = {
    2: {-1: Fraction(-1, 2), 1: Fraction(1, 2)},
    4: {-2: Fraction(1, 12), -1: Fraction(-2, 3),
        1: Fraction(2, 3), 2: Fraction(-1, 12)},
    6: {-3: Fraction(-1, 60), -2: Fraction(3, 20), -1: Fraction(-3, 4),
        1: Fraction(3, 4), 2: Fraction(-3, 20), 3: Fraction(1, 60)},
    8: {-4: Fraction(1, 280), -3: Fraction(-4, 105), -2: Fraction(1, 5),
        -1: Fraction(-4, 5), 1: Fraction(4, 5), 2: Fraction(-1, 5),
        3: Fraction(4, 105), 4: Fraction(-1, 280)},
}


def poly_jacobian(fn, x0, degree, h=0.25):
    """Jacobian of ``fn`` (vector in, vector out) at ``x0``.

    ``fn`` must be polynomial of total degree <= ``degree`` in each
    coordinate; the stencil then differentiates it exactly up to rounding.
    """
    order = min(o for o in sorted(_WEIGHTS) if o >= degree)
    weights = [(o, float(w)) for o, w in _WEIGHTS[order].items()]
    x0 = np.asarray(x0, dtype=float)
    f0 = np.asarray(fn(x0), dtype=float)
    jac = np.zeros((f0.size, x0.size))
    for j in range(x0.size):
        acc = np.zeros_like(f0)
        for offset, w in weights:
            x = x0.copy()
            x[j] += offset * h
            acc += w * np.asarray(fn(x), dtype=float)
        jac[:, j] = acc / h
    return jac


def numerical_rank(matrix, rel_threshold=1e-8, normalize_rows=False):
    """Rank by SVD with a threshold relative to the largest singular value."""
    m = np.asarray(matrix, dtype=float)
    if m.size == 0:
        return 0
    if normalize_rows:
        norms = np.linalg.norm(m, axis=1, keepdims=True)
        norms[norms == 0] = 1.0
        m = m / norms
    sv = np.linalg.svd(m, compute_uv=False)
    if sv.size == 0 or sv[0] == 0:
        return 0
    return int(np.sum(sv > rel_threshold * sv[0]))
