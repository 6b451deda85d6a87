# Amplitudes sqrt(n) and sqrt(m) sit in two dots separated by a barrier that
# is never opened. Resonant pulses inside each side spread the weight until
# all n + m dots carry the same |A|^2. Counting dots then gives the
# probabilities n/(n+m) and m/(n+m), which are exactly the squared-modulus
# weights of the starting amplitudes.
import numpy as np

from bornchain import PulseSchedule, born_probabilities, execute, plan_equalization, regional_norms, total_norm

n, m = 2, 3
plan = plan_equalization(n, m)
state = plan.start_state()
print("start |A|^2:", np.round(state.dot_norms, 12))

for step, pulse in enumerate(plan.schedule, 1):
    state = execute(plan, state, PulseSchedule((pulse,)))
    print(
        f"pulse {step}: bond {pulse.target}-{pulse.target + 1}, "
        f"moves {pulse.fraction:.4f} of the source weight in t = {pulse.segment.duration:.6f}; "
        f"|A|^2 = {np.round(state.dot_norms, 12)}"
    )

norms = regional_norms(state, plan.partition)
total = total_norm(state)
print("\nregional weights:", {k: v / total for k, v in norms.items()})
print("dot counts:      ", {"L": n / (n + m), "R": m / (n + m)})
print("Born on start:   ", born_probabilities(plan.start_state(), plan.partition))

# The case A_L = 1, A_R = 2 needs 1 + 4 equivalent dots.
final = execute(plan_equalization(1, 4))
print("\n1:2 amplitudes -> dots with |A|^2 =", np.round(final.dot_norms, 12))
