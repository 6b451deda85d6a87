# Counting histories of N repeated two-outcome measurements. All 2^N
# histories are weighted equally; most of them have a zero-fraction close to
# 1/2, and the atypical share shrinks quickly with N.
from fractions import Fraction

from bornchain import ConcentrationQuery, HistoryEnsemble, fraction_within, min_measurements, verify_estimate
from bornchain.branches import branch_count

exactly_half = Fraction(branch_count(HistoryEnsemble(26), "L", 13), 2**26)
print(f"N=26: histories with exactly 13 zeros: {exactly_half} = {float(exactly_half):.6f}")

beta = 0.1
for N in (50, 100, 200, 400, 800):
    print(f"N={N:4d}: atypical share (|f - 1/2| >= {beta}) = {1 - fraction_within(HistoryEnsemble(N), beta):.3e}")

query = ConcentrationQuery(beta=0.1, alpha=0.05)
print("\nestimated length ln(1/alpha)/beta^2:", min_measurements(query))
print("exact check at that length:", verify_estimate(query))

# Unequal amplitudes map to unequal label counts over equiprobable outcomes:
# 2 outcomes labeled L and 3 labeled R reproduce p_L = 2/5.
ens = HistoryEnsemble.split(500, 2, 3)
print("\n2:3 relabeling, N=500, share within 0.05 of 2/5:", fraction_within(ens, 0.05, "L"))
