# %% [markdown]
# # Optimized displacement
#
# For each cutoff m the displacement is chosen to minimize the conditional
# error. Larger m pushes the optimum further from the Kennedy line.

# %%
import math

from pnrdisc import optimize_displacement

for alpha_sq in (0.1, 0.4, 1.0, 4.0):
    alpha = math.sqrt(alpha_sq)
    line = [f"{optimize_displacement(alpha, m).beta_opt / alpha:.3f}" for m in range(5)]
    print(f"|alpha|^2={alpha_sq}: beta_opt/alpha for m=0..4 ->", line)

# %% [markdown]
# Errors at the optimum next to the ideal intermediate measurement with the
# same inconclusive rate. The gap never closes.

# %%
for m in range(5):
    r = optimize_displacement(math.sqrt(0.4), m)
    print(f"m={m}  beta={r.beta_opt:.4f}  p_error={r.rates.p_error:.5f}  "
          f"p_inc={r.rates.p_inconclusive:.4f}  bound={r.matched_bound:.5f}")

# %% [markdown]
# How much does m = 4 buy over m = 0?

# %%
for alpha_sq in (0.3, 0.5, 0.7, 1.0):
    alpha = math.sqrt(alpha_sq)
    ratio = optimize_displacement(alpha, 4).rates.p_error / optimize_displacement(alpha, 0).rates.p_error
    print(f"|alpha|^2={alpha_sq}: p_error(m=4)/p_error(m=0) = {ratio:.3f}")
