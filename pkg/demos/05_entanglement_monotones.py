"""Entanglement monotones from homogeneity-matched invariant roots.

Runs a Monte-Carlo sweep of two-outcome local measurements checking the
concavity margin of |C3|^(1/3), scans the scalar inequality that underlies
the argument, and exhibits the deliberate wrong-exponent counterexample
showing the cube root is essential.
"""

from qutrit_invariants import (
    run_trials,
    sample_measurement,
    scalar_inequality_scan,
    wrong_exponent_counterexample,
)

pair = sample_measurement(3, seed=0)
print("sampled measurement pair, completeness residual:",
      f"{pair.completeness_residual():.2e}")
print("singular values of the first outcome:", pair.singular_values.round(4))

report = run_trials("C3", trials=2000, seed=17)
print("\n|C3|^(1/3) over 2000 random (state, measurement) trials:")
print("  min margin:", f"{report['min_margin']:.3e}")
print("  violations:", len(report["violations"]))

report6 = run_trials("C6", trials=500, seed=18)
print("|C6|^(1/6) over 500 trials: min margin",
      f"{report6['min_margin']:.3e}")

scan = scalar_inequality_scan(resolution=100, samples=100_000, seed=1)
print("\nscalar inequality scan on the open unit cube:")
print("  max violation:", scan["max_violation"])
print("  equality residual on the diagonal a = b = c:",
      scan["diagonal_equality_residual"])

control = wrong_exponent_counterexample()
print("\nwrong-exponent control (raw cubic, homogeneity 3):")
print("  raw margin:", f"{control['raw_margin']:.3e}", "(violation)")
print("  proper |C3|^(1/3) margin on the same trial:",
      f"{control['proper_margin']:.3e}")
