# %% [markdown]
# # Acceptance and the error / inconclusive trade-off
#
# Acceptance is 1 - p_inc. An ideal unambiguous (error-free) device accepts
# 1 - sigma of the time; the PNR receivers with larger m drop below it as
# the signal grows.

# %%
from pnrdisc import figure_spec, run_sweep

rows = run_sweep(figure_spec("4a"))
for r in rows[9::10]:
    print(f"{r['alpha_sq']:.2f}  usd={r['usd_acceptance']:.3f}  " +
          "  ".join(f"m={m}:{r[f'acceptance_m{m}']:.3f}" for m in (1, 2, 3, 4)))

# %% [markdown]
# Parametric view: every (p_inc, p_error) point of a PNR receiver sits
# above the ideal intermediate measurement at the same p_inc. Rows flagged
# `dot` are the ones nearest |alpha|^2 = 0.1, 0.2, ..., 1.0.

# %%
rows = run_sweep(figure_spec("4b"))
for r in (r for r in rows if r["dot"]):
    print(f"{r['alpha_sq']:.3f}  m=4: p_inc={r['p_inc_m4']:.3f}  "
          f"p_error={r['p_error_m4']:.2e}  ideal={r['bound_m4']:.2e}")
