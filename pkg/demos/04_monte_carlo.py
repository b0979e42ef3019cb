# %% [markdown]
# # Checking the closed forms by simulation
#
# Each trial picks a state, displaces it, draws a Poisson count and applies
# the decision rule. Nothing in the simulation uses the closed-form rates.

# %%
import math

from pnrdisc import Alphabet, ReceiverParams, optimize_displacement, rates, simulate

alpha = math.sqrt(0.4)
opt = optimize_displacement(alpha, 2)
params = ReceiverParams(opt.beta_opt, 2)
tally = simulate(Alphabet(alpha), params, 1_000_000, seed=1234)
print(tally.counts)

# %%
closed = rates(alpha, params)
emp = tally.empirical_rates
print(f"p_error: mc={emp.p_error:.5f} +- {tally.stderr_error:.5f}  closed={closed.p_error:.5f}")
print(f"p_inc:   mc={emp.p_inconclusive:.5f} +- {tally.stderr_inc:.5f}  closed={closed.p_inconclusive:.5f}")

# %% [markdown]
# The tally depends only on the seed, not on how many threads ran it.

# %%
again = simulate(Alphabet(alpha), params, 1_000_000, seed=1234, workers=4)
print("identical:", (again.counts == tally.counts).all())
