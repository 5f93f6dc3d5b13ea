# %% [markdown]
# # A tour of the worked examples
#
# Each catalog entry is a pair of polarising lattices N+ and N- given by one
# integer Gram matrix, plus a gluing angle theta. From it we get the
# configuration angles, the Maslov correction m_rho and the extended
# invariant nu_bar, all in exact arithmetic.

# %%
from g2nu import catalog, configuration_angles, nu_bar

for entry in catalog.entries():
    cfg = entry.configuration
    print(f"{entry.id}: theta = {cfg.theta}*pi, k = ({cfg.k_plus}, {cfg.k_minus})")
    print("  gram  ", cfg.gram.tolist())
    print("  angles", configuration_angles(cfg).render())

# %% [markdown]
# ## Decomposing nu_bar
#
# With both quotient orders at most 2 the halves contribute nothing, so
# nu_bar is the gluing term -72 rho/pi plus three times m_rho.

# %%
for entry in catalog.entries():
    r = nu_bar(entry.configuration)
    print(
        f"{entry.id:9s} rho/pi = {str(r.rho_over_pi):4s} "
        f"-72 rho/pi = {str(r.term_gluing):4s} 3 m_rho = {r.term_maslov:3d} "
        f"nu_bar = {str(r.nu_bar):4s} nu = {r.nu_mod_48}"
    )

# %% [markdown]
# ## Swapping theta for pi - theta
#
# The same lattices glued at the supplementary angle flip the sign of rho,
# and with it the sign of nu_bar.

# %%
from g2nu import Configuration

c = catalog.get("ex_3_6").configuration
mirror = Configuration("mirror", c.rank_plus, c.rank_minus, c.gram.tolist(), 1 - c.theta, c.k_plus, c.k_minus)
print(nu_bar(c).nu_bar, "->", nu_bar(mirror).nu_bar)

# %% [markdown]
# ## A cross-check with floating point
#
# The exact pipeline never compares floats. For comparison, numpy's eigen
# solver on the composite of the two reflections gives the same angles.

# %%
import numpy as np

from g2nu import composite_isometry

a = np.array([[float(x) for x in row] for row in composite_isometry(catalog.get("ex_3_7").configuration)])
print(np.round(np.angle(np.linalg.eigvals(a)) / np.pi, 12))
