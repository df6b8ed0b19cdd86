"""Combinatorial counts of linearly independent local invariants.

All counts are exact integers obtained from symmetric-group characters and
Schur-function plethysms; nothing here touches floating point.  The qutrit
local-special-linear count rests on an unproven multiplicity reading and is
flagged as a conjecture in its report.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .symfunc import (
    SchurExpr,
    character,
    partitions,
    plethysm,
    product_power_plethysm,
    plethysm_series,
    sun_modify,
    zclass,
)

ADJOINT = SchurExpr.schur((2, 1))


@dataclass(frozen=True)
class CountReport:
    degree: int
    count: int
    method: str
    conjecture: bool = False

    def as_dict(self):
        return {
            "degree": self.degree,
            "count": self.count,
            "method": self.method,
            "conjecture": self.conjecture,
        }


def count_lu_pure(K, D, n):
    """Linearly independent degree-n local-unitary invariants of a pure
    K-qudit state with local dimension D.

    Vanishes unless D divides n; otherwise it is the multiplicity of the
    trivial representation in the K-fold inner product of the rectangular
    character (r^D), r = n/D.
    """
    if K > 4 or D not in (2, 3) or n > 12 or n < 0:
        raise ValueError("supported range: K <= 4, D in {2,3}, n <= 12")
    if n == 0:
        return 1
    if n % D:
        return 0
    r = n // D
    tau = (r,) * D
    total = Fraction(0)
    for rho in partitions(n):
        chi = character(tau, rho)
        if chi:
            total += Fraction(chi ** K, zclass(rho))
    assert total.denominator == 1
    return int(total)


def count_lu_mixed(D, n):
    """Linearly independent degree-n local-unitary invariants of a
    bipartite mixed state with local dimension D.

    Sums, over partitions tau of n with at most D^2 rows, the squared
    total multiplicity of tau in inner squares of partitions with at most
    D rows.
    """
    if D not in (2, 3):
        raise ValueError("local dimension must be 2 or 3")
    if (D == 3 and n > 5) or (D == 2 and n > 8) or n < 0:
        raise ValueError("supported degrees: n <= 5 for D=3, n <= 8 for D=2")
    if n == 0:
        return 1
    classes = partitions(n)
    total = 0
    for tau in partitions(n, max_len=D * D):
        inner = Fraction(0)
        for sigma in partitions(n, max_len=D):
            inner += sum(
                (Fraction(character(sigma, rho) ** 2 * character(tau, rho),
                          zclass(rho)) for rho in classes),
                Fraction(0),
            )
        assert inner.denominator == 1
        total += int(inner) ** 2
    return total


def su3_conjugate(expr):
    """Contragredient of an SU(3)-reduced character: (a, b) -> (a, a-b)."""
    out = SchurExpr()
    for lam, c in expr.terms.items():
        if len(lam) > 2:
            raise ValueError("conjugation expects SU(3)-reduced partitions")
        a = lam[0] if lam else 0
        b = lam[1] if len(lam) > 1 else 0
        conj = tuple(x for x in (a, a - b) if x)
        out.terms[conj] = out.terms.get(conj, 0) + c
    out.terms = {k: v for k, v in out.terms.items() if v}
    return out


def _su3_singlets(x, y):
    """Multiplicity of the SU(3) singlet in the product of two characters:
    pair each irreducible in x with its contragredient in y."""
    xm = sun_modify(x, 3)
    ym = su3_conjugate(sun_modify(y, 3))
    return sum(c * ym.terms.get(lam, 0) for lam, c in xm.terms.items())


def _graded_raw(p, q, s):
    """Linear count of invariants of multidegree (p, q, s) in the one-sided,
    other-sided and correlation blocks, disconnected products included."""
    total = 0
    for _, left, right in product_power_plethysm(ADJOINT, ADJOINT, s):
        side1 = _su3_singlets(plethysm(SchurExpr.schur((p,) if p else ()), ADJOINT), left)
        side2 = _su3_singlets(plethysm(SchurExpr.schur((q,) if q else ()), ADJOINT), right)
        total += side1 * side2
    return total


def count_graded_quartics(p, q, s):
    """Connected invariants of multidegree (p, q, s), total degree <= 4.

    The raw character count includes products of lower-degree invariants;
    at total degree 4 the only such products are pairs of quadratics, since
    no degree-1 invariant exists.  They are subtracted to leave the count
    of new, connected invariants at this grading.
    """
    total = p + q + s
    if total > 4 or min(p, q, s) < 0:
        raise ValueError("supported gradings have total degree <= 4")
    raw = _graded_raw(p, q, s)
    if total < 4:
        return raw
    disconnected = 0
    quads = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
    for i, g1 in enumerate(quads):
        for g2 in quads[i:]:
            if (g1[0] + g2[0], g1[1] + g2[1], g1[2] + g2[2]) != (p, q, s):
                continue
            n1, n2 = _graded_raw(*g1), _graded_raw(*g2)
            disconnected += n1 * (n1 + 1) // 2 if g1 == g2 else n1 * n2
    return raw - disconnected


GRADED_COLUMNS = [
    (4, 0, 0), (0, 4, 0), (1, 0, 3), (0, 1, 3), (2, 0, 2), (0, 2, 2),
    (1, 1, 2), (1, 2, 1), (2, 1, 1), (3, 0, 1), (0, 3, 1), (0, 0, 4),
]


def count_lsl(D, n):
    """Local-special-linear (SLOCC) invariant count for a bipartite mixed
    state of local dimension D, as a CountReport.

    D = 2 is computed through the equivalence with local-unitary counting
    for four-qubit pure states.  D = 3 reads multiplicities off the
    symmetrized-power series of the degree-3 symmetric invariant tensor; no
    modification rules are known for that case, so the result is flagged as
    a conjecture.
    """
    if D == 2:
        if n > 12 or n < 0:
            raise ValueError("supported degrees: n <= 12")
        count = 0 if n % 2 else count_lu_pure(4, 2, n)
        return CountReport(n, count, "four-qubit pure-state equivalence")
    if D == 3:
        if n > 12 or n < 0:
            raise ValueError("supported degrees: n <= 12")
        if n % 3:
            return CountReport(n, 0, "symmetric-cube series multiplicities",
                               conjecture=True)
        block = plethysm_series(3, max(n, 3)).weight_part(n)
        count = sum(c * c for c in block.terms.values()) if n else 1
        return CountReport(n, count, "symmetric-cube series multiplicities",
                           conjecture=True)
    raise ValueError("local dimension must be 2 or 3")
