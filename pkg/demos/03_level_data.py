"""
Level data and the surgery element
==================================

For each level r and root A the engine tabulates Delta_k, t_k and the Hopf
matrix, together with mu^2 = (A^2 - A^-2)^2 / (-r).  The surgery element
Omega is mu times the sum of Delta_k S_k over even colors.
"""

import math

from so3_invariants.cyclotomic import NAMED_ROOTS, RootChoice, embed
from so3_invariants.rt_data import build_level_data, omega_on_framed_unknot, omega_u_minus_closed_form

# %%
# mu at the distinguished roots is (2/sqrt r) sin(pi/r), always below 1.
for r in (5, 7, 11, 13):
    data = build_level_data(RootChoice.named(r))
    print(f"r={r:2d}: mu = {data.mu_numeric:.7f}  (closed form {2 / math.sqrt(r) * math.sin(math.pi / r):.7f})")

# %%
# Omega on a (-1)-framed unknot has modulus exactly one at every
# distinguished root; the direct sum agrees with its Gauss-sum closed form.
for name in NAMED_ROOTS:
    data = build_level_data(RootChoice.named(7, name))
    u_minus = omega_on_framed_unknot(-1, data)
    print(
        f"r=7 {name:10s}: |<Omega>_U-|^2 == 1: {u_minus.modulus_squared(data.mu_squared) == 1}, "
        f"closed form agrees: {u_minus == omega_u_minus_closed_form(data)}"
    )

# %%
# Framing only matters modulo r once Omega carries even colors.
data = build_level_data(RootChoice.named(5))
print("U_3 == U_8:", omega_on_framed_unknot(3, data) == omega_on_framed_unknot(8, data))

# %%
# The tables round-trip through JSON.
text = data.to_json()
print("JSON dump:", len(text), "characters")
print("twist t_2:", embed(data.twist[2]).midpoint())
