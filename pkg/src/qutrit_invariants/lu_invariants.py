"""Local-unitary invariant polynomials of two-qutrit mixed states.

Invariants are labeled K<pqs> by their multidegree in the one-sided octet
vectors r, rbar and the correlation tensor R; variant contractions at the
same grading get a suffix.  All of them are complete tensor contractions
against f, d and delta, except the pure-R quartics, which are evaluated as
index chains of the correlation tensor embedded in the defining
representation (one superscript/subscript pair per factor and side).
"""

from __future__ import annotations

import numpy as np

from .numdiff import numerical_rank, poly_jacobian
from .tensors import build_structure_tensors

# (p, q, s) multidegree of every label; the exact scaling law under
# r -> t r, rbar -> u rbar, R -> v R is t^p u^q v^s.
GRADINGS = {
    "K000": (0, 0, 0),
    "K200": (2, 0, 0), "K020": (0, 2, 0), "K002": (0, 0, 2),
    "K300": (3, 0, 0), "K030": (0, 3, 0), "K111": (1, 1, 1),
    "K102": (1, 0, 2), "K012": (0, 1, 2),
    "K003d": (0, 0, 3), "K003f": (0, 0, 3),
    "K103": (1, 0, 3), "K103p": (1, 0, 3),
    "K013": (0, 1, 3), "K013p": (0, 1, 3),
    "K202a": (2, 0, 2), "K202b": (2, 0, 2),
    "K022a": (0, 2, 2), "K022b": (0, 2, 2),
    "K112d": (1, 1, 2), "K112f": (1, 1, 2),
    "K121": (1, 2, 1), "K211": (2, 1, 1),
    "K004_33": (0, 0, 4), "K004_24": (0, 0, 4), "K004_42": (0, 0, 4),
    "K004_22": (0, 0, 4), "K004_32": (0, 0, 4), "K004_x22": (0, 0, 4),
}

LOW_DEGREE_LABELS = ["K000", "K200", "K020", "K002", "K300", "K030", "K111",
                     "K102", "K012", "K003d", "K003f"]

# The seventeen independent connected quartics.  At grading 004 the single
# bar-cycle chains satisfy the measured relation
#   K004_32 = (K004_33 - K004_24 - K004_42 + 2 K004_22) / 4,
# so the fifth independent direction is the crossed topology K004_x22 (two
# bar-side 2-cycles closed by one plain-side 4-cycle).  K004_32 is still
# evaluated and reported.
QUARTIC_LABELS = ["K103", "K103p", "K013", "K013p", "K202a", "K202b",
                  "K022a", "K022b", "K112d", "K112f", "K121", "K211",
                  "K004_33", "K004_24", "K004_42", "K004_22", "K004_x22"]
ALL_QUARTIC_LABELS = QUARTIC_LABELS + ["K004_32"]

_T3 = build_structure_tensors(3)
_F, _D = _T3.f, _T3.d
_LAM = _T3.lambdas


def _require_qutrit(coords):
    if coords.dimA != 3 or coords.dimB != 3:
        raise ValueError("local-unitary invariants require two qutrits")


def _embedded(R):
    """Correlation tensor in the defining representation, T[i, p, j, q]
    carrying (superscript, superscript-bar, subscript, subscript-bar)."""
    return np.einsum('ab,aij,bpq->ipjq', R, _LAM, _LAM, optimize=True)


def low_degree_blocks(r, rbar, R):
    d, f = _D, _F
    vals = {
        "K000": 1.0,
        "K200": r @ r,
        "K020": rbar @ rbar,
        "K002": np.sum(R * R),
        "K300": np.einsum('abc,a,b,c->', d, r, r, r, optimize=True),
        "K030": np.einsum('abc,a,b,c->', d, rbar, rbar, rbar, optimize=True),
        "K111": r @ R @ rbar,
        "K102": np.einsum('abc,a,bd,cd->', d, r, R, R, optimize=True),
        "K012": np.einsum('abc,a,db,dc->', d, rbar, R, R, optimize=True),
        "K003d": np.einsum('abc,xyz,ax,by,cz->', d, d, R, R, R, optimize=True),
        "K003f": np.einsum('abc,xyz,ax,by,cz->', f, f, R, R, R, optimize=True),
    }
    return {k: float(v) for k, v in vals.items()}


def quartic_blocks(r, rbar, R):
    d, f = _D, _F
    RtR = R.T @ R    # bar-bar
    RRt = R @ R.T    # plain-plain
    vals = {
        # one r, three R: the delta-coupled and the f/d-coupled chain
        "K103": np.einsum('abc,ab,c->', d, RtR, R.T @ r, optimize=True),
        "K103p": np.einsum('ABC,aA,bB,cC,d,abe,ecd->', f, R, R, R, r, f, d, optimize=True),
        "K013": np.einsum('abc,ab,c->', d, RRt, R @ rbar, optimize=True),
        "K013p": np.einsum('abc,aA,bB,cC,D,ABE,ECD->', f, R, R, R, rbar, f, d, optimize=True),
        # two r (or rbar), two R: delta- and d-coupled pairings
        "K202a": r @ RRt @ r,
        "K202b": np.einsum('abc,b,c->a', d, r, r, optimize=True) @ np.einsum('ade,de->a', d, RRt, optimize=True),
        "K022a": rbar @ RtR @ rbar,
        "K022b": np.einsum('abc,b,c->a', d, rbar, rbar, optimize=True) @ np.einsum('ade,de->a', d, RtR, optimize=True),
        # one r, one rbar, two R: both sides coupled by d or both by f
        "K112d": np.einsum('abc,ABC,a,A,bB,cC->', d, d, r, rbar, R, R, optimize=True),
        "K112f": np.einsum('abc,ABC,a,A,bB,cC->', f, f, r, rbar, R, R, optimize=True),
        # single invariants at mixed cubic-like gradings
        "K121": np.einsum('ABC,A,B,c,cC->', d, rbar, rbar, r, R, optimize=True),
        "K211": np.einsum('abc,a,b,C,cC->', d, r, r, rbar, R, optimize=True),
    }
    T = _embedded(R)
    chains = {
        # label (m, n): superscript of factor 1 closes on the subscript of
        # factor m, its subscript on the superscript of factor n; the
        # bar-side indices always run in one cycle
        "K004_33": np.einsum('ipjq,kqlr,jris,lskp->', T, T, T, T, optimize=True),
        "K004_24": np.einsum('ipjq,kqir,mrks,jsmp->', T, T, T, T, optimize=True),
        "K004_42": np.einsum('ipjq,jqkr,krls,lsip->', T, T, T, T, optimize=True),
        "K004_22": np.einsum('ipjq,jqir,krls,lskp->', T, T, T, T, optimize=True),
        "K004_32": np.einsum('ipjq,jqnr,mris,nsmp->', T, T, T, T, optimize=True),
        "K004_x22": np.einsum('ipjq,jqlp,lrns,nsir->', T, T, T, T, optimize=True),
    }
    for k, v in chains.items():
        vals[k] = v.real if np.iscomplexobj(v) else v
    return {k: float(v) for k, v in vals.items()}


def all_blocks(r, rbar, R):
    out = low_degree_blocks(r, rbar, R)
    out.update(quartic_blocks(r, rbar, R))
    return out


def low_degree_invariants(coords):
    """Degree <= 3 invariants (the connected quadratics and cubics)."""
    _require_qutrit(coords)
    return low_degree_blocks(coords.r, coords.rbar, coords.R)


def quartic_invariants(coords):
    """The seventeen connected quartic invariants."""
    _require_qutrit(coords)
    return quartic_blocks(coords.r, coords.rbar, coords.R)


def all_invariants(coords):
    _require_qutrit(coords)
    return all_blocks(coords.r, coords.rbar, coords.R)


def disconnected_two_cycle(coords):
    """The square of the two-cycle trace pattern of the embedded correlation
    tensor; equals (4 K002)^2 and is the disconnected companion of the
    connected pure-R quartics."""
    _require_qutrit(coords)
    T = _embedded(coords.R)
    val = np.einsum('ipjq,jqip->', T, T, optimize=True)
    return float(val.real) ** 2


# ---------------------------------------------------------------------------
# Independence diagnostics

def _pack(r, rbar, R):
    return np.concatenate([r, rbar, R.ravel()])


def _unpack(x):
    return x[:8], x[8:16], x[16:].reshape(8, 8)


def independence_test(states, labels, rel_threshold=1e-8, jacobian_points=2):
    """Linear and algebraic independence evidence for a set of invariants.

    Returns the numerical rank of the values matrix over the sample and the
    Jacobian rank of the invariant map at a few of the sampled states
    (stencil differentiation, exact for these degree <= 4 polynomials).
    Degenerate samples are reported, not silently accepted.
    """
    states = list(states)
    labels = list(labels)
    unknown = [l for l in labels if l not in GRADINGS]
    if unknown:
        raise ValueError(f"unknown invariant labels: {unknown}")
    if len(states) < len(labels) + 5:
        raise ValueError("sample must exceed the label count by at least 5")

    values = np.array([[all_invariants(st.coords)[l] for l in labels]
                       for st in states])
    col = np.linalg.norm(values, axis=0, keepdims=True)
    degenerate = [labels[i] for i in range(len(labels)) if col[0, i] == 0]
    colsafe = np.where(col == 0, 1.0, col)
    value_rank = numerical_rank(values / colsafe, rel_threshold)

    degree = max(sum(GRADINGS[l]) for l in labels)

    def fn(x):
        blocks = all_blocks(*_unpack(x))
        return np.array([blocks[l] for l in labels])

    jac_ranks = []
    for st in states[:jacobian_points]:
        c = st.coords
        x0 = _pack(c.r, c.rbar, c.R)
        jac = poly_jacobian(fn, x0, degree=max(degree, 1))
        jac_ranks.append(numerical_rank(jac, rel_threshold, normalize_rows=True))

    return {
        "labels": labels,
        "value_rank": value_rank,
        "jacobian_ranks": jac_ranks,
        "jacobian_rank": max(jac_ranks) if jac_ranks else None,
        "degenerate_labels": degenerate,
    }
