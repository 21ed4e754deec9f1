"""Walk through the ideal measurement pipeline step by step.

A coherent state evolves under a Kerr nonlinearity for a quarter period and
splits into a balanced superposition of two opposite-amplitude components.
A weak impulsive force then shifts the relative phase of the two components
by 2*delta*alpha, and undoing the Kerr evolution converts that phase into a
displacement of the mean quadrature that a homodyne detector can see.
"""

import math

from kerrcat import (
    ProtocolParams,
    branch_phase_shift,
    cat_state,
    coherent_state,
    default_truncation,
    fidelity,
    kerr_unitary,
    mean_X_ideal,
    mean_quadrature,
    run_ideal,
)

ALPHA = 2.0

print("=" * 72)
print("Step 1: quarter-period Kerr evolution builds the superposition")
print("=" * 72)
N = default_truncation(ALPHA)
initial = coherent_state(ALPHA, N)
evolved = kerr_unitary(math.pi / 2.0, N) @ initial
target = cat_state(ALPHA, N)
print(f"truncation dimension      N = {N}")
print(f"fidelity with the balanced superposition: {fidelity(evolved, target):.12f}")
print(f"mean X of the superposition (should be ~0): {mean_quadrature(evolved):+.3e}")
print()

print("=" * 72)
print("Step 2: a weak kick imprints the phase 2*delta*alpha between branches")
print("=" * 72)
print(f"{'delta':>8} {'extracted phase':>18} {'2*delta*alpha':>16} {'difference':>12}")
for delta in (0.01, 0.05, 0.1):
    phase = branch_phase_shift(ALPHA, delta)
    expected = 2.0 * delta * ALPHA
    print(f"{delta:>8.3f} {phase:>18.12f} {expected:>16.12f} {abs(phase - expected):>12.2e}")
print()

print("=" * 72)
print("Step 3: undoing the Kerr evolution turns the phase into a mean shift")
print("=" * 72)
print(f"{'delta':>8} {'closed form <X>':>18} {'number basis <X>':>18} {'difference':>12}")
for delta in (0.0, 0.01, 0.05, 0.1):
    closed = mean_X_ideal(ALPHA, delta)
    brute = mean_quadrature(run_ideal(ProtocolParams(alpha0=ALPHA, delta=delta)))
    print(f"{delta:>8.3f} {closed:>18.12f} {brute:>18.12f} {abs(closed - brute):>12.2e}")
print()
print("With no kick the pipeline returns the initial coherent amplitude;")
print("small kicks move the mean at a rate that grows with alpha^2, which is")
print("the interferometric advantage of using the superposition.")
