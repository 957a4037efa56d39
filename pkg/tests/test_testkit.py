import pytest

from tenab import Framework, GenConfig, get_fixture, random_framework, zoo_check
from tenab.testkit import ZOO_SIZE_CAP, ZOO_SIZE_CAP_NO_CYCOG
from tenab.weak import SizeLimitError


def test_gen_config_validation():
    with pytest.raises(ValueError):
        GenConfig(n=-1)
    with pytest.raises(ValueError):
        GenConfig(n=3, p_attack=1.5)


def test_random_framework_basics():
    assert random_framework(GenConfig(n=0)).n == 0
    edgeless = random_framework(GenConfig(n=6, p_attack=0.0, p_selfattack=0.0))
    assert edgeless.attack_pairs() == []
    dense = random_framework(GenConfig(n=4, p_attack=1.0, p_selfattack=1.0))
    assert len(dense.attack_pairs()) == 16


def test_random_framework_deterministic():
    a = random_framework(GenConfig(n=5, p_attack=0.3, seed=42))
    b = random_framework(GenConfig(n=5, p_attack=0.3, seed=42))
    assert a == b


def test_zoo_check_empty_and_fixtures():
    assert zoo_check(Framework([])).ok
    for name in ("S", "F", "U", "SIM", "F_4", "F_6", "F_7"):
        report = zoo_check(get_fixture(name).framework)
        assert report.ok, (name, report.violations)
        fw = get_fixture(name).framework
        assert report.subsets_checked == fw.full_mask + 1


def test_zoo_check_f8_without_cycog():
    report = zoo_check(get_fixture("F_8").framework, skip_cycog=True)
    assert report.ok, report.violations


def test_zoo_check_size_caps():
    with pytest.raises(SizeLimitError):
        zoo_check(Framework([f"a{i}" for i in range(ZOO_SIZE_CAP + 1)]))
    with pytest.raises(SizeLimitError):
        zoo_check(Framework([f"a{i}" for i in range(ZOO_SIZE_CAP_NO_CYCOG + 1)]),
                  skip_cycog=True)
