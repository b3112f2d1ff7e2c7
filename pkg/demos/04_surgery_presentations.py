"""
Surgery presentations
=====================

A presentation is a forest of unknots with surgery coefficients; each edge
is a Hopf clasp.  Rational coefficients are turned into integer-framed
chains by negative continued fractions.
"""

import random
from fractions import Fraction

from so3_invariants.surgery import (
    Presentation,
    alternate_continued_fraction,
    continued_fraction,
    expand_rational,
    fold,
    lens_space,
    linking_matrix,
    signature,
)

# %%
# 7/2 = 4 - 1/2.
print("7/2 ->", continued_fraction(7, 2), "folds back to", fold(continued_fraction(7, 2)))

# %%
# Expansions are not unique; rounding each step up or down gives another.
rng = random.Random(0)
print("alternate expansions of 17/5:", {tuple(alternate_continued_fraction(17, 5, rng)) for _ in range(20)})

# %%
# The lens space L(7,2) is -7/2 surgery on the unknot.
pres = lens_space(7, 2)
chain = expand_rational(pres)
print("L(7,2):", pres.coefficients, "->", chain.framings, chain.edges)

# %%
# Linking matrix and its exact signature.
m = linking_matrix(chain)
print(m)
print("signature:", signature(m))

# %%
# JSON is the exchange format used by the CLI.
star = Presentation((Fraction(0), Fraction(2), Fraction(2), Fraction(2), Fraction(11, 2)), ((0, 1), (0, 2), (0, 3), (0, 4)))
print(star.to_json())
