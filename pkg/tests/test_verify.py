import pytest

from so3_invariants.verify import SUITES, VerifyConfig, run_suite


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes(name):
    checks = run_suite(name, VerifyConfig(count=5))
    assert checks
    failed = [c for c in checks if not c.passed]
    assert not failed, failed


@pytest.mark.parametrize("name", ["kr", "mirror", "welldefined", "connsum"])
def test_suite_at_imaginary_root(name):
    checks = run_suite(name, VerifyConfig(root="iq4r", count=5, seed=4))
    assert all(c.passed for c in checks)


def test_numeric_mode():
    checks = run_suite("kr", VerifyConfig(count=5, mode="numeric"))
    assert all(c.passed and c.mode == "numeric" for c in checks)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
