"""Exact combinatorial counts of independent invariants.

The symmetric-function engine reproduces every count used elsewhere in the
package: local-unitary counts by degree, the graded quartic table, and the
local special-linear counts for qubits and qutrits.
"""

from qutrit_invariants import (
    S,
    count_graded_quartics,
    count_lsl,
    count_lu_mixed,
    kronecker,
    outer,
    plethysm,
    plethysm_series,
    sun_modify,
)
from qutrit_invariants.counting import GRADED_COLUMNS

print("engine basics:")
print("  {1}*{1} =", outer(S(1), S(1)))
print("  {2,1} inner {2,1} =", kronecker(S(2, 1), S(2, 1)))
print("  {2} plethysm {2} =", plethysm(S(2), S(2)))
print("  octet cube, SU(3)-reduced:",
      sun_modify(plethysm(S(3), S(2, 1)), 3))

print("\nlocal-unitary counts for two qutrits by degree:")
print(" ", [count_lu_mixed(3, n) for n in range(6)])

print("\ngraded quartic counts (connected invariants):")
header = "  " + "  ".join(f"{p}{q}{s}" for p, q, s in GRADED_COLUMNS)
row = "  " + "  ".join(f"{count_graded_quartics(p, q, s):>3}"
                       for p, q, s in GRADED_COLUMNS)
print(header)
print(row)
print("  total:", sum(count_graded_quartics(*g) for g in GRADED_COLUMNS))

print("\nlocal special-linear counts, qubits (even degrees 0..12):")
print(" ", [count_lsl(2, n).count for n in range(0, 13, 2)])

print("\nlocal special-linear counts, qutrits (degrees 0,3,..,12):")
for n in (0, 3, 6, 9, 12):
    rep = count_lsl(3, n)
    flag = "  [conjecture]" if rep.conjecture else ""
    print(f"  degree {n:>2}: {rep.count}{flag}")

print("\nthe symmetrized-power series behind the qutrit count, to weight 9:")
print(" ", plethysm_series(3, 9))
