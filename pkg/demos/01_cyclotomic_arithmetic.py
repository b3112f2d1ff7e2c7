"""
Exact arithmetic at a root of unity
===================================

Every quantity in this package lives in the cyclotomic field Q(zeta_{4r}).
Numbers are stored as integer coefficient vectors reduced modulo the
cyclotomic polynomial, so identities can be checked with ``==`` instead of
a tolerance.
"""

from so3_invariants.cyclotomic import RootChoice, cyclotomic_polynomial, embed, gauss_sum_quartic

# %%
# The field for r = 5 is Q(zeta_20), a degree-8 extension.
print("Phi_20 coefficients:", cyclotomic_polynomial(20))

# %%
# Pick the distinguished root A = exp(2 pi i / 20) and form the quantum
# integer [2] = A^2 + A^-2.
root = RootChoice.named(5, "q4r")
A = root.A()
two = A**2 + A**-2
print("[2] =", two)
print("[2] numerically:", embed(two).midpoint())

# %%
# Inverses are exact: the product of the Galois conjugates divided by the norm.
inv = two.inverse()
print("[2] * [2]^-1 == 1:", two * inv == 1)
print("norm of [2]:", two.norm())

# %%
# Complex conjugation is the Galois automorphism A -> A^-1.
print("conj(A) == A^-1:", A.conj() == A**-1)

# %%
# ``embed`` returns a rigorous interval enclosure; raising the precision
# shrinks it.
for bits in (64, 128, 256):
    print(f"{bits:4d} bits: radius {embed(two, bits).radius:.3e}")

# %%
# A quartic Gauss sum: sum_k A^(8 k^2) has modulus sqrt(r) exactly.
g = gauss_sum_quartic(root)
print("G * conj(G) =", g * g.conj())
print("G numerically:", embed(g).midpoint())
