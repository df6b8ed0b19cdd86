"""Two-outcome local measurements and entanglement-monotone trials.

A measurement pair (E1, E2) with E1^dag E1 + E2^dag E2 = I is sampled
through singular value decompositions sharing the right unitary, which
makes completeness exact by construction.  For a functional F built as
|invariant|^(1/degree) the concavity margin F(rho) - p1 F(rho1') -
p2 F(rho2') must be nonnegative; trials are independently seeded per
index so runs are reproducible and order-independent.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import lsl_qutrit, qubit
from .states import BipartiteState, random_local_unitary, random_state

DEGENERATE_P = 1e-14


@dataclass(frozen=True)
class MeasurementPair:
    E1: np.ndarray
    E2: np.ndarray
    U1: np.ndarray
    U2: np.ndarray
    V: np.ndarray
    singular_values: np.ndarray  # entries of the first diagonal factor

    def completeness_residual(self):
        dim = self.E1.shape[0]
        total = self.E1.conj().T @ self.E1 + self.E2.conj().T @ self.E2
        return float(np.abs(total - np.eye(dim)).max())


def sample_measurement(dim, seed, eps=1e-3):
    """Random two-outcome pair; singular values stay in (eps, 1 - eps) so
    bulk trials keep both branch probabilities away from zero (the singular
    limits are exercised separately by explicit boundary cases)."""
    if dim not in (2, 3):
        raise ValueError("local dimension must be 2 or 3")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    U1 = random_local_unitary(dim, rng)
    U2 = random_local_unitary(dim, rng)
    V = random_local_unitary(dim, rng)
    sv = rng.uniform(eps, 1.0 - eps, size=dim)
    return assemble_measurement(U1, U2, V, sv)


def assemble_measurement(U1, U2, V, singular_values):
    sv = np.asarray(singular_values, dtype=float)
    D1 = np.diag(sv)
    D2 = np.diag(np.sqrt(1.0 - sv ** 2))
    return MeasurementPair(U1 @ D1 @ V, U2 @ D2 @ V, U1, U2, V, sv)


def apply_measurement(state, pair, side="A"):
    """Both measurement branches: [(p1, state1), (p2, state2)].

    The operator acts on one subsystem only.  A branch with probability
    below 1e-14 is flagged degenerate by returning None for its state.
    """
    if side == "A":
        ops = [np.kron(E, np.eye(state.dimB)) for E in (pair.E1, pair.E2)]
    elif side == "B":
        ops = [np.kron(np.eye(state.dimA), E) for E in (pair.E1, pair.E2)]
    else:
        raise ValueError("side must be 'A' or 'B'")
    branches = []
    for op in ops:
        out = op @ state.rho @ op.conj().T
        p = float(np.trace(out).real)
        if p < DEGENERATE_P:
            branches.append((p, None))
        else:
            branches.append((p, BipartiteState.from_rho(out / p,
                                                        state.dimA, state.dimB)))
    return branches


def concavity_trial(state, pair, functional, side="A"):
    """Margin F(rho) - sum_i p_i F(rho_i'); None with a reason when a
    branch is degenerate."""
    branches = apply_measurement(state, pair, side)
    if any(st is None for _, st in branches):
        return None, "degenerate branch probability"
    margin = functional(state) - sum(p * functional(st) for p, st in branches)
    return margin, None


# ---------------------------------------------------------------------------
# Monotone functionals

def _c3_monotone(state):
    return abs(lsl_qutrit.cubic_invariant(state.coords.ext)) ** (1.0 / 3.0)


def _c6_monotone(state):
    return abs(lsl_qutrit.sextic_invariant(state.coords.ext)) ** (1.0 / 6.0)


def _c3_raw(state):
    # deliberate wrong-exponent control: homogeneity 3 instead of 1
    return lsl_qutrit.cubic_invariant(state.coords.ext)


def _q_monotone(key, power):
    def fn(state):
        return abs(qubit.q_invariants(state.coords.ext)[key]) ** power
    return fn


MONOTONE_FUNCTIONALS = {
    "C3": (3, _c3_monotone),
    "C6": (3, _c6_monotone),
    "C3_raw": (3, _c3_raw),
    "Q2": (2, _q_monotone("Q2", 1.0 / 2.0)),
    "Q4": (2, _q_monotone("Q4", 1.0 / 4.0)),
    "Q4t": (2, _q_monotone("Q4t", 1.0 / 4.0)),
    "Q6": (2, _q_monotone("Q6", 1.0 / 6.0)),
}


def monotone_functional(name):
    try:
        return MONOTONE_FUNCTIONALS[name]
    except KeyError:
        raise ValueError(f"unknown functional {name!r}; "
                         f"choose from {sorted(MONOTONE_FUNCTIONALS)}") from None


def _run_chunk(args):
    name, seed, indices = args
    dim, functional = monotone_functional(name)
    margins = []
    skipped = 0
    for i in indices:
        rng = np.random.default_rng(np.random.SeedSequence((seed, i)))
        state = random_state(dim, dim, rng)
        pair = sample_measurement(dim, rng)
        side = "A" if rng.uniform() < 0.5 else "B"
        margin, reason = concavity_trial(state, pair, functional, side)
        if margin is None:
            skipped += 1
            margins.append(np.nan)
        else:
            margins.append(margin)
    return margins, skipped


def run_trials(name, trials, seed, workers=1, tol=1e-9):
    """Monte-Carlo concavity sweep; the report is a JSON-ready dict.

    Each trial derives its own generator from (seed, index), so the result
    is identical for any worker count.  Violating trials are listed with
    their seeds for reproduction.
    """
    indices = list(range(trials))
    if workers > 1:
        chunks = [indices[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, [(name, seed, ch) for ch in chunks]))
        margins = [np.nan] * trials
        skipped = 0
        for ch, (vals, sk) in zip(chunks, parts):
            skipped += sk
            for i, v in zip(ch, vals):
                margins[i] = v
    else:
        margins, skipped = _run_chunk((name, seed, indices))
    margins = np.asarray(margins)
    valid = margins[~np.isnan(margins)]
    violations = [
        {"trial": int(i), "seed": [int(seed), int(i)], "margin": float(margins[i])}
        for i in np.nonzero(margins < -tol)[0]
    ]
    return {
        "functional": name,
        "trials": trials,
        "seed": int(seed),
        "tolerance": tol,
        "skipped_degenerate": int(skipped),
        "min_margin": float(valid.min()) if valid.size else float("nan"),
        "violations": violations,
    }


def wrong_exponent_counterexample():
    """A deliberate control showing that the cube root in the cubic
    monotone is essential.

    The state is a weakly entangled perturbation of a pure product state,
    so its one-sided reduced state is concentrated on one basis direction;
    aligning the small singular value of the measurement with that
    direction makes the branch reweighting d_i^2 / p_i^2 exceed one, which
    the raw (homogeneity-3) cubic functional cannot absorb.  Returns the
    state, the measurement and both margins: the raw margin is negative,
    the properly scaled one is not.
    """
    dim = 3
    phi = np.zeros(9, dtype=complex)
    for i in range(3):
        phi[3 * i + i] = 1.0 / np.sqrt(3.0)
    entangled = np.outer(phi, phi.conj())
    product = np.zeros((9, 9), dtype=complex)
    product[0, 0] = 1.0
    eps = 0.05
    rho = (1 - eps) * product + eps * (entangled + np.eye(9) / 9.0) / 2.0
    state = BipartiteState.from_rho(rho, dim, dim)
    pair = assemble_measurement(np.eye(3), np.eye(3), np.eye(3),
                                np.array([0.45, 0.95, 0.95]))
    raw_margin, _ = concavity_trial(state, pair, MONOTONE_FUNCTIONALS["C3_raw"][1])
    proper_margin, _ = concavity_trial(state, pair, MONOTONE_FUNCTIONALS["C3"][1])
    return {
        "state": state,
        "pair": pair,
        "raw_margin": float(raw_margin),
        "proper_margin": float(proper_margin),
    }


def scalar_inequality_scan(resolution, samples=100_000, seed=0):
    """Scan of the scalar concavity bound for the cube-root monotones:
    (abc)^(2/3) + ((1-a^2)(1-b^2)(1-c^2))^(1/3) <= 1 on the open unit cube,
    with equality exactly on the diagonal a = b = c.

    Checks a uniform interior grid plus random samples, and the boundary
    faces where the bound collapses to a trivial one.  Returns the largest
    excess over 1 found anywhere (should not exceed rounding).
    """
    if resolution < 10:
        raise ValueError("resolution must be at least 10 points per axis")

    def lhs(a, b, c):
        return ((a * b * c) ** (2.0 / 3.0)
                + ((1 - a * a) * (1 - b * b) * (1 - c * c)) ** (1.0 / 3.0))

    ax = np.linspace(0.0, 1.0, resolution + 2)[1:-1]
    A, B, C = np.meshgrid(ax, ax, ax, indexing="ij", sparse=True)
    grid_max = float((lhs(A, B, C) - 1.0).max())

    rng = np.random.default_rng(seed)
    a, b, c = rng.uniform(0, 1, size=(3, samples))
    random_max = float((lhs(a, b, c) - 1.0).max())

    # boundary collapse: at a in {0, 1} the bound degenerates to a product
    # of numbers at most 1
    F1, F2 = np.meshgrid(ax, ax, indexing="ij", sparse=True)
    boundary_max = float(max(
        (lhs(np.asarray(v), F1, F2) - 1.0).max() for v in (0.0, 1.0)
    ))

    diag = lhs(ax, ax, ax)
    return {
        "resolution": int(resolution),
        "random_samples": int(samples),
        "seed": int(seed),
        "max_violation": max(grid_max, random_max),
        "boundary_max_violation": boundary_max,
        "diagonal_equality_residual": float(np.abs(diag - 1.0).max()),
    }
