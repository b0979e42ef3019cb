# %% [markdown]
# # Error and acceptance against the displacement
#
# Fix |alpha|^2 = 0.4 and scan the displacement beta for a few postselection
# cutoffs m. Counts in 1..m are thrown away as inconclusive.

# %%
import math

import numpy as np

from pnrdisc import ReceiverParams, error_rate, inconclusive_rate, run_sweep, figure_spec

alpha = math.sqrt(0.4)
betas = np.linspace(0, 3, 13)
for m in (0, 1, 2, 3):
    p = error_rate(alpha, ReceiverParams(betas, m))
    print(f"m={m}: " + " ".join(f"{x:.3f}" for x in p))

# %% [markdown]
# The Kennedy choice beta = alpha nulls |-alpha> exactly. It is not the
# best displacement, and at beta = alpha a wider window even hurts.

# %%
for m in (0, 1):
    params = ReceiverParams(alpha, m)
    print(m, float(error_rate(alpha, params)), float(inconclusive_rate(alpha, params)))

# %% [markdown]
# The same curves as a table, on the default 0.005 grid.

# %%
rows = run_sweep(figure_spec("2a"))
best = min(rows, key=lambda r: r["p_error_m0"])
print(len(rows), "rows; m=0 minimum", best["p_error_m0"], "at beta", best["beta"])

# %%
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    b = [r["beta"] for r in rows]
    for m in (0, 1, 2, 3):
        plt.semilogy(b, [r[f"p_error_m{m}"] for r in rows], label=f"m={m}")
    plt.xlabel("beta")
    plt.ylabel("p_error")
    plt.legend()
    plt.savefig("error_vs_beta.png", dpi=120)
    print("wrote error_vs_beta.png")
