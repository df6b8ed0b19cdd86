import numpy as np
import pytest

from qutrit_invariants.lu_invariants import (
    ALL_QUARTIC_LABELS,
    GRADINGS,
    LOW_DEGREE_LABELS,
    QUARTIC_LABELS,
    all_blocks,
    all_invariants,
    disconnected_two_cycle,
    independence_test,
    low_degree_invariants,
    quartic_invariants,
)
from qutrit_invariants.states import (
    BipartiteState,
    apply_local,
    random_local_unitary,
    random_state,
)

RNG = np.random.default_rng(5)
STATES = [random_state(3, 3, RNG) for _ in range(40)]


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def test_maximally_mixed_all_zero():
    mm = BipartiteState.from_rho(np.eye(9) / 9, 3, 3)
    vals = all_invariants(mm.coords)
    assert vals["K000"] == 1.0
    assert max(abs(v) for k, v in vals.items() if k != "K000") < 1e-14


def test_label_sets_consistent():
    vals = all_invariants(STATES[0].coords)
    assert set(vals) == set(GRADINGS)
    assert set(LOW_DEGREE_LABELS + ALL_QUARTIC_LABELS) == set(GRADINGS)
    assert len(QUARTIC_LABELS) == 17


def test_rejects_wrong_dimension():
    st = random_state(2, 2, 0)
    with pytest.raises(ValueError):
        low_degree_invariants(st.coords)
    with pytest.raises(ValueError):
        quartic_invariants(st.coords)


def test_product_state_factorization():
    # for product states the correlation block is 9 r (x) rbar, so the
    # mixed cubic reduces to 9 K200 K020
    rng = np.random.default_rng(17)
    for _ in range(5):
        G = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        rA = G @ G.conj().T
        rA /= np.trace(rA).real
        G = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        rB = G @ G.conj().T
        rB /= np.trace(rB).real
        st = BipartiteState.from_rho(np.kron(rA, rB), 3, 3)
        c = st.coords
        assert np.abs(c.R - 9.0 * np.outer(c.r, c.rbar)).max() < 1e-13
        v = all_invariants(c)
        assert rel(v["K111"], 9.0 * v["K200"] * v["K020"]) < 1e-10


def test_unitary_invariance_all_labels():
    # 100 fresh (state, U, V) triples
    rng = np.random.default_rng(23)
    for _ in range(100):
        st = random_state(3, 3, rng)
        base = all_invariants(st.coords)
        U = random_local_unitary(3, rng)
        V = random_local_unitary(3, rng)
        moved = all_invariants(apply_local(st, U, V, renormalize=False).coords)
        for k in base:
            assert rel(moved[k], base[k]) < 1e-10, k


def test_exact_multigrading():
    c = STATES[1].coords
    base = all_blocks(c.r, c.rbar, c.R)
    t, u, v = 1.7, 0.6, 2.3
    scaled = all_blocks(t * c.r, u * c.rbar, v * c.R)
    for k, (p, q, s) in GRADINGS.items():
        assert rel(scaled[k], t ** p * u ** q * v ** s * base[k]) < 1e-12, k


def test_disconnected_two_cycle_matches_k002():
    c = STATES[2].coords
    v = all_invariants(c)
    assert rel(disconnected_two_cycle(c), (4.0 * v["K002"]) ** 2) < 1e-12


def test_pure_r_chain_relation():
    # measured linear relation among the single-bar-cycle chains; the
    # crossed pattern K004_x22 stays outside this relation and supplies the
    # fifth independent direction
    for st in STATES[:10]:
        v = quartic_invariants(st.coords)
        lhs = v["K004_32"]
        rhs = (v["K004_33"] - v["K004_24"] - v["K004_42"] + 2 * v["K004_22"]) / 4.0
        assert abs(lhs - rhs) < 1e-15


def test_product_state_pure_r_quartics_factor():
    # on product states the embedded chain patterns reduce to products of
    # single-system contractions of each factor's coordinate vector
    rng = np.random.default_rng(31)
    G = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    rA = G @ G.conj().T
    rA /= np.trace(rA).real
    G = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    rB = G @ G.conj().T
    rB /= np.trace(rB).real
    st = BipartiteState.from_rho(np.kron(rA, rB), 3, 3)
    v = quartic_invariants(st.coords)

    a = rA - np.trace(rA) / 3 * np.eye(3)   # traceless parts
    b = rB - np.trace(rB) / 3 * np.eye(3)
    # the embedded tensor factorizes as a (x) b, so each chain becomes a
    # product of a plain-side and a bar-side trace word
    tr = lambda m, k: np.trace(np.linalg.matrix_power(m, k)).real
    assert rel(v["K004_42"], tr(a, 4) * tr(b, 4)) < 1e-9
    assert rel(v["K004_22"], tr(a, 2) ** 2 * tr(b, 4)) < 1e-9
    assert rel(v["K004_x22"], tr(a, 4) * tr(b, 2) ** 2) < 1e-9


def test_grading_ranks_match_counts():
    groups = {
        (1, 0, 3): (["K103", "K103p"], 2),
        (0, 1, 3): (["K013", "K013p"], 2),
        (2, 0, 2): (["K202a", "K202b"], 2),
        (0, 2, 2): (["K022a", "K022b"], 2),
        (1, 1, 2): (["K112d", "K112f"], 2),
        (1, 2, 1): (["K121"], 1),
        (2, 1, 1): (["K211"], 1),
        (0, 0, 4): (["K004_33", "K004_24", "K004_42", "K004_22", "K004_x22"], 5),
    }
    for grading, (labels, expected) in groups.items():
        rep = independence_test(STATES, labels, jacobian_points=0)
        assert rep["value_rank"] == expected, grading


def test_quadratic_cubic_jacobian_rank():
    labels = [l for l in LOW_DEGREE_LABELS if l != "K000"]
    rep = independence_test(STATES, labels, jacobian_points=2)
    assert rep["jacobian_rank"] == 10


def test_quartic_jacobian_rank_17():
    rep = independence_test(STATES, QUARTIC_LABELS, jacobian_points=1)
    assert rep["value_rank"] == 17
    assert rep["jacobian_rank"] == 17


def test_duplicate_labels_leave_rank_unchanged():
    rep = independence_test(STATES, ["K200", "K020"], jacobian_points=0)
    rep2 = independence_test(STATES, ["K200", "K200", "K020"], jacobian_points=0)
    assert rep["value_rank"] == rep2["value_rank"] == 2


def test_sample_size_guard():
    with pytest.raises(ValueError):
        independence_test(STATES[:5], QUARTIC_LABELS)
    with pytest.raises(ValueError):
        independence_test(STATES, ["K_nonexistent"])


def test_ranks_never_exceed_combinatorial_counts():
    from qutrit_invariants.counting import (
        GRADED_COLUMNS,
        count_graded_quartics,
        count_lu_mixed,
    )

    h2, h3 = count_lu_mixed(3, 2), count_lu_mixed(3, 3)
    connected_quadratics = h2 - 1    # drop the squared trace
    connected_cubics = h3 - h2       # drop trace times degree-2 invariants
    labels = [l for l in LOW_DEGREE_LABELS if l != "K000"]
    rep = independence_test(STATES, labels, jacobian_points=1)
    assert rep["jacobian_rank"] <= connected_quadratics + connected_cubics
    quartic_count = sum(count_graded_quartics(*g) for g in GRADED_COLUMNS)
    rep = independence_test(STATES, QUARTIC_LABELS, jacobian_points=0)
    assert rep["value_rank"] <= quartic_count
