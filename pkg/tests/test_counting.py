import pytest

from qutrit_invariants.counting import (
    GRADED_COLUMNS,
    count_graded_quartics,
    count_lsl,
    count_lu_mixed,
    count_lu_pure,
    su3_conjugate,
)
from qutrit_invariants.symfunc import S


def expand_rational_series(numerator, den_factors, order):
    """Integer power-series expansion of num / prod (1 - z^p)^m."""
    series = list(numerator[:order + 1]) + [0] * (order + 1 - len(numerator))

    def mul(a, b):
        out = [0] * (order + 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b[:order + 1 - i]):
                    out[i + j] += x * y
        return out

    for p, m in den_factors:
        geometric = [1 if i % p == 0 else 0 for i in range(order + 1)]
        for _ in range(m):
            series = mul(series, geometric)
    return series


def test_lu_pure_divisibility():
    assert count_lu_pure(4, 2, 3) == 0
    assert count_lu_pure(4, 2, 5) == 0
    assert count_lu_pure(2, 3, 4) == 0


def test_lu_pure_four_qubit_series():
    values = [count_lu_pure(4, 2, n) for n in range(0, 13, 2)]
    assert values == [1, 1, 3, 4, 7, 9, 14]


def test_lu_pure_bounds():
    with pytest.raises(ValueError):
        count_lu_pure(5, 2, 4)
    with pytest.raises(ValueError):
        count_lu_pure(4, 2, 13)


def test_lu_mixed_qutrit_series():
    assert [count_lu_mixed(3, n) for n in range(6)] == [1, 1, 4, 11, 34, 108]


def test_lu_mixed_qubit_series_matches_rational_form():
    # the two-qubit mixed series has the known closed rational form; its
    # expansion is an independent oracle for the character counts
    numerator = [0] * 16
    for k, c in [(0, 1), (4, 1), (5, 1), (6, 3), (7, 2), (8, 2), (9, 3),
                 (10, 1), (11, 1), (15, 1)]:
        numerator[k] = c
    expected = expand_rational_series(
        numerator, [(1, 1), (2, 3), (3, 2), (4, 3), (6, 1)], 8)
    assert [count_lu_mixed(2, n) for n in range(9)] == expected
    assert expected[:3] == [1, 1, 4]


def test_lu_mixed_bounds():
    with pytest.raises(ValueError):
        count_lu_mixed(3, 6)
    with pytest.raises(ValueError):
        count_lu_mixed(2, 9)
    with pytest.raises(ValueError):
        count_lu_mixed(4, 2)


def test_graded_quartics_row():
    counts = [count_graded_quartics(*g) for g in GRADED_COLUMNS]
    assert counts == [0, 0, 2, 2, 2, 2, 2, 1, 1, 0, 0, 5]


def test_graded_quartics_examples():
    assert count_graded_quartics(1, 0, 3) == 2
    assert count_graded_quartics(0, 0, 4) == 5
    assert count_graded_quartics(3, 0, 1) == 0


def test_graded_total_is_seventeen():
    assert sum(count_graded_quartics(*g) for g in GRADED_COLUMNS) == 17


def test_graded_lower_degrees():
    assert count_graded_quartics(2, 0, 0) == 1
    assert count_graded_quartics(0, 0, 2) == 1
    assert count_graded_quartics(1, 1, 1) == 1
    assert count_graded_quartics(0, 0, 3) == 2
    assert count_graded_quartics(1, 0, 0) == 0


def test_graded_bounds():
    with pytest.raises(ValueError):
        count_graded_quartics(3, 2, 0)


def test_su3_conjugate():
    assert su3_conjugate(S(2, 1)) == S(2, 1)          # adjoint self-dual
    assert su3_conjugate(S(1)) == S(1, 1)             # defining <-> dual
    assert su3_conjugate(S(4, 2)) == S(4, 2)
    assert su3_conjugate(S(3)) == S(3, 3)


def test_lsl_qubit_series():
    values = [count_lsl(2, n) for n in range(0, 13)]
    assert [v.count for v in values[::2]] == [1, 1, 3, 4, 7, 9, 14]
    assert all(v.count == 0 for v in values[1::2])
    assert not any(v.conjecture for v in values)


def test_lsl_qutrit_series_is_conjecture():
    reports = {n: count_lsl(3, n) for n in (0, 3, 6, 9, 12)}
    assert [reports[n].count for n in (0, 3, 6, 9, 12)] == [1, 1, 2, 5, 12]
    assert all(r.conjecture for r in reports.values())
    for n in (1, 2, 4, 5, 7, 8, 10, 11):
        assert count_lsl(3, n).count == 0


def test_lsl_bounds():
    with pytest.raises(ValueError):
        count_lsl(2, 14)
    with pytest.raises(ValueError):
        count_lsl(3, 15)
    with pytest.raises(ValueError):
        count_lsl(4, 3)


def test_report_shape():
    rep = count_lsl(3, 9)
    d = rep.as_dict()
    assert d["degree"] == 9 and d["count"] == 5 and d["conjecture"]
