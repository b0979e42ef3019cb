# %% [markdown]
# # Reference limits for BPSK coherent states
#
# Two states |-alpha> and |alpha> overlap by sigma = exp(-2 alpha^2). That
# single number fixes the Helstrom error (all results conclusive), the IDP
# inconclusive rate (no errors at all), and the family of intermediate
# bounds in between.

# %%
import numpy as np

from pnrdisc import Alphabet, helstrom, idp_inconclusive, intermediate_bound

for alpha_sq in (0.1, 0.4, 1.0):
    a = Alphabet.from_mean_photon_number(alpha_sq)
    print(f"|alpha|^2={alpha_sq:4}  sigma={a.sigma:.6f}  "
          f"helstrom={helstrom(a):.6f}  idp={idp_inconclusive(a):.6f}")

# %% [markdown]
# Trading inconclusive results for errors: at p_inc = 0 the bound is the
# Helstrom error, and it reaches zero at p_inc = sigma.

# %%
a = Alphabet.from_mean_photon_number(0.4)
for p_inc in np.linspace(0, a.sigma, 6):
    print(f"p_inc={p_inc:.4f}  min error={intermediate_bound(p_inc, a.sigma):.6f}")

# %% [markdown]
# Unequal priors change the Helstrom error but the intermediate bound here
# is only defined for p1 = p2 = 1/2.

# %%
for p1 in (0.5, 0.7, 0.9):
    print(p1, helstrom(Alphabet.from_mean_photon_number(0.4, p1)))
