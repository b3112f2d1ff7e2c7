import math

import pytest

from so3_invariants.cyclotomic import NAMED_ROOTS, CycNum, RootChoice, embed
from so3_invariants.rt_data import (
    LevelData,
    MuScaled,
    OracleMismatch,
    build_level_data,
    check_against_oracle,
    omega_on_framed_unknot,
    omega_u_minus_closed_form,
    omega_u_plus_plus_closed_form,
    quantum_integer,
)
from so3_invariants.temperley_lieb import WorkCap

LEVELS = [5, 7, 11, 13]


def test_quantum_integers():
    root = RootChoice.named(5)
    A = root.A()
    diff = A**2 - A**-2
    for m in range(-6, 7):
        assert quantum_integer(root, m) * diff == A ** (2 * m) - A ** (-2 * m)


@pytest.mark.parametrize("r", LEVELS)
def test_level_data_structure(r):
    data = build_level_data(RootChoice.named(r))
    assert data.even_labels == tuple(range(0, r - 2, 2))
    assert data.delta[0] == 1
    assert data.twist[0] == 1
    for j in range(r - 1):
        assert data.hopf[0][j] == data.delta[j]
        for k in range(r - 1):
            assert data.hopf[j][k] == data.hopf[k][j]
    # unitarity-type identity: mu^2 * sum Delta_k^2 over even colors is 1
    total = sum((data.delta[k] ** 2 for k in data.even_labels), CycNum.zero(data.root.n))
    assert total * data.mu_squared == 1


@pytest.mark.parametrize("r", [5, 7])
def test_mu_numeric(r):
    data = build_level_data(RootChoice.named(r))
    assert abs(data.mu_numeric - 2 / math.sqrt(r) * math.sin(math.pi / r)) < 1e-15
    assert 0 < data.mu_numeric < 1


def test_mu_anchor_values():
    assert abs(build_level_data(RootChoice.named(5)).mu_numeric - 0.5257311) < 1e-7
    assert abs(build_level_data(RootChoice.named(7)).mu_numeric - 0.3279853) < 1e-7


def test_oracle_agreement_r5():
    data = build_level_data(RootChoice.named(5), oracle_check=True)
    assert check_against_oracle(data) == 16


def test_oracle_mismatch_detected():
    good = build_level_data(RootChoice.named(5))
    hopf = [list(row) for row in good.hopf]
    hopf[1][1] = hopf[1][1] + 1
    bad = LevelData(good.root, good.delta, good.twist, tuple(map(tuple, hopf)), good.mu_squared)
    with pytest.raises(OracleMismatch):
        check_against_oracle(bad, WorkCap(), max_color=2)


@pytest.mark.parametrize("r", LEVELS)
@pytest.mark.parametrize("name", NAMED_ROOTS)
def test_omega_u_minus(r, name):
    data = build_level_data(RootChoice.named(r, name))
    direct = omega_on_framed_unknot(-1, data)
    assert direct == omega_u_minus_closed_form(data)
    assert direct.modulus_squared(data.mu_squared) == 1


@pytest.mark.parametrize("r", [5, 7, 11])
@pytest.mark.parametrize("name", NAMED_ROOTS)
def test_omega_u_plus_plus(r, name):
    data = build_level_data(RootChoice.named(r, name))
    assert omega_on_framed_unknot(2, data) == omega_u_plus_plus_closed_form(data)


@pytest.mark.parametrize("r", [5, 7])
def test_omega_framing_periodic_mod_r(r):
    data = build_level_data(RootChoice.named(r))
    for f in range(-2 * r, 2 * r + 1):
        assert omega_on_framed_unknot(f, data) == omega_on_framed_unknot(f + r, data)


@pytest.mark.parametrize("r", [5, 7])
def test_omega_mirror_framing(r):
    data = build_level_data(RootChoice.named(r))
    for f in range(-2 * r, 2 * r + 1):
        assert omega_on_framed_unknot(-f, data) == omega_on_framed_unknot(f, data).conj()


def test_omega_zero_framing_vanishes():
    # Omega on a 0-framed unknot gives S^1 x S^2 weighting: mu * sum Delta^2 = 1/mu
    data = build_level_data(RootChoice.named(5))
    x, parity = omega_on_framed_unknot(0, data).folded(data.mu_squared)
    assert parity == 1 and x * data.mu_squared == 1


def test_mu_scaled_folding():
    data = build_level_data(RootChoice.named(5))
    one = CycNum.one(data.root.n)
    assert MuScaled(one, 4).folded(data.mu_squared) == (data.mu_squared**2, 0)
    assert MuScaled(one, -3).folded(data.mu_squared) == (data.mu_squared**-2, 1)
    assert (MuScaled(one, 1) ** 3).mu_exponent == 3


@pytest.mark.parametrize("r", [5, 7])
def test_json_roundtrip(r):
    data = build_level_data(RootChoice.named(r, "iq4r"))
    assert LevelData.from_json(data.to_json()) == data


def test_json_rejects_tampering():
    import json

    raw = json.loads(build_level_data(RootChoice.named(5)).to_json())
    raw["delta"][1][0] += 1
    with pytest.raises(ValueError):
        LevelData.from_json(json.dumps(raw))


def test_twist_numeric_values():
    root = RootChoice.named(5)
    data = build_level_data(root)
    A = complex(math.cos(math.pi / 10), math.sin(math.pi / 10))
    for k in range(4):
        assert abs(embed(data.twist[k]).midpoint() - (-1) ** k * A ** (k * k + 2 * k)) < 1e-12
