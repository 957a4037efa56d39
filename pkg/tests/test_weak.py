import pytest

from tenab import (Framework, IN, Labeling, OUT, SizeLimitError, UNDEC,
                   contained_in_weakly_complete, get_fixture, grounded,
                   defense_closure, is_cogent, is_cyclically_cogent,
                   is_weakly_admissible, is_weakly_complete_extension,
                   is_weakly_complete_labeling, weakly_complete_extensions,
                   weakly_complete_labelings)
from tenab.core import ArgSet
from tenab.weak import (is_cogent_by_definition,
                        is_cyclically_cogent_by_definition)
from conftest import corpus


def fw_of(name):
    return get_fixture(name).framework


def test_is_cogent():
    f1 = fw_of("F_1")
    assert is_cogent(f1, f1.set_of("a"))
    f = fw_of("F")
    assert is_cogent(f, f.empty_set())
    f3 = fw_of("F_3")
    assert not is_cogent(f3, f3.set_of("a"))
    assert not is_cogent(f, f.set_of("b1", "b2"))


def test_cogent_characterization_matches_definition():
    for fw in corpus(40, 5, seed_base=11):
        for m in range(fw.full_mask + 1):
            E = ArgSet(fw, m)
            assert is_cogent(fw, E) == is_cogent_by_definition(fw, E), (fw, E)


def test_is_cyclically_cogent():
    f3 = fw_of("F_3")
    assert is_cyclically_cogent(f3, f3.set_of("a"))
    f = fw_of("F")
    assert is_cyclically_cogent(f, f.empty_set())
    f5 = fw_of("F_5")
    assert not is_cyclically_cogent(f5, f5.set_of("a"))


def test_cyclic_cogency_matches_definition():
    for fw in corpus(25, 4, seed_base=31):
        for m in range(fw.full_mask + 1):
            E = ArgSet(fw, m)
            if not fw.cf_mask(m):
                continue
            got = is_cyclically_cogent(fw, E)
            want = is_cyclically_cogent_by_definition(fw, E)
            assert got == want, (fw, E)


def test_is_weakly_admissible():
    f4 = fw_of("F_4")
    assert is_weakly_admissible(f4, f4.set_of("a"))
    f = fw_of("F")
    assert is_weakly_admissible(f, f.empty_set())
    f6 = fw_of("F_6")
    assert not is_weakly_admissible(f6, f6.set_of("a"))
    assert not is_weakly_admissible(f, f.set_of("b1", "b2"))


def test_is_weakly_complete_labeling():
    cyc = Framework.of("a b c", ("a", "b"), ("b", "c"), ("c", "a"))
    assert is_weakly_complete_labeling(cyc, [UNDEC, UNDEC, UNDEC])
    two = Framework.of("x y", ("x", "y"))
    assert not is_weakly_complete_labeling(two, [IN, IN])
    f2 = fw_of("F_2")
    assert is_weakly_complete_labeling(f2, {"a": IN, "b1": UNDEC, "b2": UNDEC})
    with pytest.raises(ValueError):
        Labeling(two, [IN])
    with pytest.raises(ValueError):
        Labeling(two, ["yes", "no"])


def test_weakly_complete_extensions():
    empty = Framework([])
    assert [e.mask for e in weakly_complete_extensions(empty)] == [0]
    f1 = fw_of("F_1")
    assert f1.mask_of(["a"]) in {e.mask for e in weakly_complete_extensions(f1)}
    f3 = fw_of("F_3")
    a = f3.index["a"]
    assert not any(e.mask >> a & 1 for e in weakly_complete_extensions(f3))


def test_contained_in_weakly_complete():
    for name in ("S", "F", "U", "F_3", "F_7"):
        fw = fw_of(name)
        assert contained_in_weakly_complete(fw, fw.empty_set())
    f8 = fw_of("F_8")
    assert contained_in_weakly_complete(f8, f8.set_of("a"))
    f3 = fw_of("F_3")
    assert not contained_in_weakly_complete(f3, f3.set_of("a"))


def test_is_weakly_complete_extension():
    f1 = fw_of("F_1")
    assert is_weakly_complete_extension(f1, f1.set_of("a"))
    # the all-undec labeling also qualifies on F_1, so the empty set is one too
    assert is_weakly_complete_extension(f1, f1.empty_set())
    lone = Framework.of("x")
    assert is_weakly_complete_extension(lone, lone.set_of("x"))
    assert not is_weakly_complete_extension(lone, lone.empty_set())


def test_extensions_contain_grounded():
    for fw in corpus(40, 6, seed_base=61) + [fw_of(n) for n in ("U", "F_6", "F_7")]:
        g = grounded(fw).fixpoint.mask
        for e in weakly_complete_extensions(fw):
            assert g & ~e.mask == 0, (fw, e)


def test_weakly_admissible_contained_with_closure_witness():
    for fw in corpus(40, 6, seed_base=91):
        for m in fw.cf_masks():
            A = ArgSet(fw, m)
            if not is_weakly_admissible(fw, A):
                continue
            assert contained_in_weakly_complete(fw, A), (fw, A)
            closed = defense_closure(fw, A)
            assert A <= closed


def test_size_cap():
    big = Framework([f"a{i}" for i in range(21)])
    with pytest.raises(SizeLimitError):
        weakly_complete_labelings(big)
