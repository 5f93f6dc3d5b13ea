# %% [markdown]
# # Maslov angles and torus gluing
#
# ## The four-dimensional kernel example
#
# Two Lagrangians in R^4 built from the gluing frame. Their Maslov angle
# equals rho/pi = 1 - 2 theta/pi.

# %%
from fractions import Fraction

from g2nu.maslov import kernel_example_pair, maslov_angle

for t in [Fraction(k, 12) for k in range(1, 12)]:
    res = maslov_angle(kernel_example_pair(t))
    print(f"theta = {str(t):5s}*pi  maslov = {str(res.value):5s}  angles = {[a.render() for a in res.angle_list]}")

# %% [markdown]
# ## Random pairs against numpy
#
# Graphs of random symmetric matrices, moved by a random integer base change.
# Angles that are not rational multiples of pi make the value a float; it is
# compared with an eigenvalue computation on the (-i)-eigenspace of the
# complex structure.

# %%
import random
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from conftest import numeric_maslov, random_lagrangian_pair  # noqa: E402

rng = random.Random(0)
for n in (1, 2, 3):
    p = random_lagrangian_pair(rng, n)
    value = maslov_angle(p).value
    print(f"dim {2 * n}: value {value!s:>22}  float {numeric_maslov(p): .12f}  swapped {maslov_angle(p.swapped()).value}")

# %% [markdown]
# ## Which gluing angles fit two torus factors?
#
# A Z/k quotient of a rectangular torus is a planar lattice; theta is admissible
# when the orientation-reversing gluing isometry carries one lattice onto the
# other.

# %%
from g2nu.surds import Surd
from g2nu.torus import TorusFactor, gluing_angles, quotient_lattice

one, r2, r3 = Surd(1), Surd.sqrt(2), Surd.sqrt(3)
recipes = {
    "square": (TorusFactor(2, one, one), TorusFactor(1, one / r2, one / r2)),
    "hexagonal": (TorusFactor(2, one, r3), TorusFactor(2, r3, one)),
    "equal factors": (TorusFactor(2, one, r3), TorusFactor(2, one, r3)),
    "mismatched area": (TorusFactor(1, one, one), TorusFactor(1, one, 2 * one)),
}
for name, (tp, tm) in recipes.items():
    print(f"{name:16s}", [g.render() for g in gluing_angles(tp, tm)])

print("square quotient basis:", quotient_lattice(TorusFactor(2, one, one)).basis)
print("floating check of its side:", np.hypot(0.5, 0.5), "=", 1 / np.sqrt(2))
