# Two degenerate dots joined by a hopping tau trade their weight back and
# forth. Starting with everything in the first dot, the second dot's
# amplitude grows as |sin(dE t / 2)| with dE = 2 tau.
import math

import numpy as np

from bornchain import EvolutionSegment, build_chain, eigensystem, evolve, level_splitting

tau = 0.75
pair = build_chain([0.0, 0.0], [tau])

energies, vectors = eigensystem(pair)
print("eigenvalues:", energies)
print("level splitting:", level_splitting(pair, (0, 1)), "(2 tau =", 2 * tau, ")")

print(f"\n{'t':>6} {'|A2| simulated':>16} {'|sin(dE t/2)|':>16}")
for t in np.linspace(0, 2 * math.pi / (2 * tau), 9):
    a2 = evolve([1.0, 0.0], EvolutionSegment(pair, t)).amplitudes[1]
    print(f"{t:6.3f} {abs(a2):16.12f} {abs(math.sin(tau * t)):16.12f}")

# A detuned pair never transfers everything: the splitting grows but the
# maximum transferred weight is (2 tau / dE)**2.
detuned = build_chain([0.5, -0.5], [tau])
de = level_splitting(detuned, (0, 1))
peak = max(evolve([1, 0], EvolutionSegment(detuned, t)).dot_norms[1] for t in np.linspace(0, 10, 2001))
print(f"\ndetuned pair: dE = {de:.4f}, max transferred weight {peak:.6f} vs (2 tau/dE)^2 = {(2 * tau / de) ** 2:.6f}")
