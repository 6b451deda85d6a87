# Suppose probabilities were proportional to |A|^m. Splitting the right dot
# into n^2 copies is a purely right-side operation, so it must not change the
# left probability. Only m = 2 passes.
from bornchain import deformation_discrimination

exponents = [0.5, 1, 1.5, 2, 3, 4]
for n in (2, 3, 5, 10):
    print(f"start amplitudes (1, {n}):")
    for m, (before, after, change) in deformation_discrimination(n, exponents).items():
        flag = "unchanged" if change < 1e-9 else "CHANGED"
        print(f"   m={m:<4} P_L {before:.6f} -> {after:.6f}  |dP_L|={change:.3e}  {flag}")

# For large n every rule with m > 2 has both P_L values close to zero, so
# the absolute change shrinks like 1/n^2 even though the rule is still wrong.
