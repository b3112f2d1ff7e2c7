"""
A Temperley-Lieb brute-force oracle
===================================

The closed-form tables used by the invariant engine (quantum dimensions,
twist eigenvalues, Hopf-link values) are cross-checked against a direct
evaluation in the Temperley-Lieb algebra: crossings are smoothed with the
Kauffman bracket, components are colored with Jones-Wenzl projectors and
closed diagrams are reduced to scalars.
"""

from so3_invariants.cyclotomic import RootChoice, embed
from so3_invariants.rt_data import build_level_data
from so3_invariants.temperley_lieb import (
    TLElement,
    evaluate_template,
    generate_pairings,
    hopf,
    jones_wenzl,
    loop_value,
    twisted_unknot,
)

root = RootChoice.named(5)

# %%
# Basis diagrams are noncrossing pairings; there are Catalan-many.
print("pairings on 0..5 strands:", [len(generate_pairings(n)) for n in range(6)])

# %%
# A closed loop evaluates to -A^2 - A^-2.
print("loop value:", embed(loop_value(root)).midpoint())

# %%
# The projector p_3 is idempotent and killed by every cap-cup.
p3 = jones_wenzl(3, root)
print("p3 has", len(p3), "terms; idempotent:", p3.then(p3) == p3)
print("p3 e_1 == 0:", len(p3.then(TLElement.cap_cup(root, 3, 1))) == 0)

# %%
# Compare brute force with the closed forms.
data = build_level_data(root)
for k in range(4):
    brute = evaluate_template(twisted_unknot(k, 1), root)
    print(f"color {k}, framing 1: brute == t_k Delta_k ? {brute == data.twist[k] * data.delta[k]}")
for j, k in [(1, 1), (2, 3), (3, 3)]:
    print(f"Hopf link ({j},{k}): brute == H ? {evaluate_template(hopf(j, k), root) == data.hopf[j][k]}")
