import json
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from so3_invariants.surgery import (
    DegenerateContinuedFraction,
    NoApplicableMove,
    Presentation,
    alternate_continued_fraction,
    bz_chain,
    bz_comparison,
    bz_entries,
    bz_family,
    continued_fraction,
    delete_zero_meridian,
    expand_rational,
    fold,
    lens_space,
    linking_matrix,
    signature,
    validate_expansion,
)


# -- continued fractions ---------------------------------------------------------


def test_fold_examples():
    assert fold([4, 2]) == Fraction(7, 2)
    assert fold([2, 2, 2]) == Fraction(4, 3)
    assert fold([5]) == 5
    assert fold([1, 1]) == 0


def test_fold_degenerate():
    with pytest.raises(DegenerateContinuedFraction):
        fold([3, 0, 2, 0])
    with pytest.raises(ValueError):
        fold([])


def test_continued_fraction_examples():
    assert continued_fraction(7, 2) == [4, 2]
    assert continued_fraction(4, 3) == [2, 2, 2]
    assert continued_fraction(-5, 2) == [-2, 2]
    assert continued_fraction(6) == [6]
    with pytest.raises(ZeroDivisionError):
        continued_fraction(1, 0)


def test_canonical_entries_at_least_two():
    for p, q in [(17, 5), (-17, 5), (101, 37), (3, 7)]:
        entries = continued_fraction(p, q)
        assert all(x >= 2 for x in entries[1:])


def test_fold_inverts_expansion_random():
    rng = random.Random(1)
    for _ in range(1000):
        q = rng.randint(1, 500)
        p = rng.randint(-1000, 1000)
        value = Fraction(p, q)
        assert fold(continued_fraction(p, q)) == value
        assert fold(alternate_continued_fraction(p, q, rng)) == value


@given(st.integers(-300, 300), st.integers(1, 300), st.integers(0, 2**32))
def test_alternate_expansion_folds_back(p, q, seed):
    entries = alternate_continued_fraction(p, q, random.Random(seed))
    assert fold(entries) == Fraction(p, q)


def test_validate_expansion():
    validate_expansion(Fraction(7, 2), [4, 2])
    validate_expansion(Fraction(7, 2), [3, -2])
    with pytest.raises(ValueError):
        validate_expansion(Fraction(7, 2), [4, 3])


# -- presentations ---------------------------------------------------------------


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation.from_framings([1, 2, 3], [(0, 1), (1, 2), (2, 0)])  # cycle
    with pytest.raises(ValueError):
        Presentation.from_framings([1, 2], [(0, 1), (1, 0)])  # multi-edge
    with pytest.raises(ValueError):
        Presentation.from_framings([1, 2], [(0, 2)])
    with pytest.raises(ValueError):
        Presentation.from_framings([1], [(0, 0)])


def test_presentation_basics():
    pres = Presentation.from_framings([2, -1, 3], [(0, 1), (0, 2)])
    assert len(pres) == 3
    assert pres.is_integral
    assert pres.degree(0) == 2
    assert sorted(pres.neighbors(0)) == [1, 2]
    assert pres.mirror().framings == (-2, 1, -3)
    assert not lens_space(7, 2).is_integral
    with pytest.raises(ValueError):
        lens_space(7, 2).framings


def test_disjoint_union_relabels():
    a = Presentation.from_framings([1, 2], [(0, 1)])
    b = Presentation.from_framings([3, 4], [(0, 1)])
    u = a.disjoint_union(b)
    assert u.framings == (1, 2, 3, 4)
    assert set(u.edges) == {(0, 1), (2, 3)}


def test_json_roundtrip():
    pres = Presentation((Fraction(-7, 2), Fraction(3)), ((0, 1),))
    assert Presentation.from_json(pres.to_json()) == pres
    assert json.loads(pres.to_json())["vertices"][0] == {"p": -7, "q": 2}


def test_json_defaults_and_errors():
    assert Presentation.from_dict({"vertices": [{"p": 2}]}) == Presentation.from_framings([2])
    with pytest.raises(ValueError):
        Presentation.from_dict({"vertices": [{"p": 2, "q": 0}]})


def test_expand_rational():
    pres = lens_space(7, 2)  # -7/2 = [-3, 2]
    chain = expand_rational(pres)
    assert chain.framings == (-3, 2)
    assert chain.edges == ((0, 1),)
    alt = expand_rational(pres, {0: [-4, -2]})
    assert alt.framings == (-4, -2)
    with pytest.raises(ValueError):
        expand_rational(pres, {0: [-4, 2]})


def test_expand_keeps_tree_shape():
    pres = Presentation((Fraction(1), Fraction(5, 3), Fraction(2)), ((0, 1), (0, 2)))
    out = expand_rational(pres)
    assert out.framings[:3] == (1, 2, 2)
    assert len(out) == 3 + len(continued_fraction(5, 3)) - 1


# -- linking matrix and signature ------------------------------------------------


def test_linking_matrix():
    m = linking_matrix(Presentation.from_framings([2, -1, 3], [(0, 1), (0, 2)]))
    assert m.tolist() == [[2, 1, 1], [1, -1, 0], [1, 0, 3]]


def test_signature_examples():
    assert signature([[1, 0], [0, -1]]) == 0
    assert signature([[0, 1], [1, 0]]) == 0
    assert signature([[0]]) == 0
    assert signature(np.zeros((0, 0), dtype=object)) == 0
    assert signature([[2, 1], [1, 2]]) == 2
    assert signature([[0, 1, 0], [1, 0, 0], [0, 0, -3]]) == -1
    with pytest.raises(ValueError):
        signature([[1, 2], [0, 1]])


def test_signature_matches_eigenvalues():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(1, 13))
        a = rng.integers(-3, 4, size=(n, n))
        if rng.random() < 0.3:
            a[:, : n // 2] = 0  # force zero diagonal blocks and degeneracy
        sym = a + a.T
        eig = np.linalg.eigvalsh(sym.astype(float))
        tol = 1e-9 * max(1.0, np.abs(eig).max())
        expected = int((eig > tol).sum() - (eig < -tol).sum())
        assert signature(sym.astype(object)) == expected


def test_signature_of_presentations():
    assert signature(linking_matrix(Presentation.from_framings([2]))) == 1
    assert signature(linking_matrix(Presentation.from_framings([0]))) == 0
    # [4, 2] chain is positive definite
    assert signature(linking_matrix(Presentation.from_framings([4, 2], [(0, 1)]))) == 2


# -- Kirby moves -------------------------------------------------------------------


def test_delete_zero_meridian():
    pres = Presentation.from_framings([5, 0, 2], [(0, 1), (1, 2)])
    # the 0-framed middle vertex has degree 2; nothing applies
    with pytest.raises(NoApplicableMove):
        delete_zero_meridian(pres)
    pres = Presentation.from_framings([2, 7, 0], [(0, 1), (1, 2)])
    assert delete_zero_meridian(pres) == Presentation.from_framings([2])


def test_delete_zero_meridian_repeat():
    pres = Presentation.from_framings([2, 5, 3, 10, 0], [(0, 1), (1, 2), (2, 3), (3, 4)])
    once = delete_zero_meridian(pres)
    assert once.framings == (2, 5, 3)
    assert delete_zero_meridian(pres, repeat=True) == once


# -- Boileau-Zieschang family ------------------------------------------------------


def test_bz_entries():
    assert bz_entries(5, [1, 1, 2, -1]) == [5, 2, -5]
    with pytest.raises(ValueError):
        bz_entries(5, [1, 2, 3])
    with pytest.raises(ValueError):
        bz_entries(4, [1, 2])


def test_bz_family_shape():
    pres = bz_family(5, [0, 1, 2, 1])
    assert pres.coefficients[:4] == (0, 2, 2, 2)
    assert pres.coefficients[4] == fold([5, 2, 5])
    assert pres.degree(0) == 4
    chain = bz_chain(5, [0, 1, 2, 1])
    assert chain.framings == (0, 2, 2, 2, 5, 2, 5)


def test_bz_comparison_reduces():
    for xs in ([0, 1], [1, 2, 3, -1], [-2, 1, -3, 2, 1, 1]):
        reduced = delete_zero_meridian(bz_comparison(7, xs), repeat=True)
        assert reduced.framings == (2, 2, 2)
        assert reduced.edges == ()


def test_bz_degenerate():
    # x_2 = 0 puts a zero at the end of the chain
    with pytest.raises(DegenerateContinuedFraction):
        bz_family(5, [0, 0, 1, 0])
