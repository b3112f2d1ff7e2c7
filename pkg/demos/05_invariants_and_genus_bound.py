"""
The invariant and the genus bound
=================================

I_A(M) inserts Omega on every surgery component, evaluates the colored
link by a leaf-to-root state sum over the forest, and normalizes by the
signature.  The quantity q_A(M) = ln|I_A(M)| / ln(1/mu) is a lower bound
for the Heegaard genus at the distinguished roots.
"""

from so3_invariants.cyclotomic import RootChoice
from so3_invariants.invariant import conjugate, genus_bound, invariant
from so3_invariants.surgery import Presentation, lens_space

root = RootChoice.named(5)

examples = {
    "S^3": Presentation.empty(),
    "S^1 x S^2": Presentation.from_framings([0]),
    "RP^3": Presentation.from_framings([2]),
    "L(7,2)": lens_space(7, 2),
    "Poincare sphere (E8)": Presentation.from_framings(
        [-2] * 8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]
    ),
}

# %%
# Moduli and genus bounds at r = 5.
for name, pres in examples.items():
    result = invariant(pres, root)
    q = genus_bound(result)
    print(f"{name:22s} |I| = {float(result.modulus().mid.a):.7f}   q_A in [{float(q.a):.6f}, {float(q.b):.6f}]")

# %%
# Reversing orientation conjugates the invariant exactly.
pres = Presentation.from_framings([3, -1, 2], [(0, 1), (1, 2)])
print("mirror == conjugate:", invariant(pres.mirror(), root).same_as(conjugate(invariant(pres, root))))

# %%
# The same Poincare sphere from a four-component star.
star = Presentation.from_framings([1, 2, 3, 5], [(0, 1), (0, 2), (0, 3)])
print("E8 plumbing == star (1; 2, 3, 5):", invariant(examples["Poincare sphere (E8)"], root).same_as(invariant(star, root)))
