# Irrational amplitude ratios are handled by rational approximation of the
# squared ratio; leftover phases are removed with on-site pulses on
# decoupled dots.
import math

import numpy as np

from bornchain import DotChain, approximate_ratio, execute, parseval_check, plan_equalization, zero_phase

for bound in (5, 20, 100, 1000):
    n, m = approximate_ratio(math.sqrt(math.pi), bound)
    print(f"A_L/A_R = sqrt(pi), denominator <= {bound:4d}: n/m = {n}/{m}, error {abs(n / m - math.pi):.2e}")

plan = plan_equalization(1, 4)
state = execute(plan)
print("\nafter equalization, phases:", np.round(np.angle(state.amplitudes), 6))
idle = DotChain.idle(plan.site_count)
for dot in range(plan.site_count):
    schedule, state = zero_phase(state, dot, idle)
    for pulse in schedule:
        print(f"  dot {dot}: energy 1.0 for t = {pulse.segment.duration:.6f}")
print("after phase pulses:", np.round(state.amplitudes, 12))

# The amplitude norm is the same in the Fourier basis.
rng = np.random.default_rng(3)
psi = rng.normal(size=32) + 1j * rng.normal(size=32)
print("\nnorm in dot basis vs Fourier basis:", parseval_check(psi))
