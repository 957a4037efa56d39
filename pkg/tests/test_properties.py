from hypothesis import given, settings, strategies as st

from tenab import (ArgSet, DisputeKind, Framework, PRO, STRONG_TENABILITY,
                   TENABILITY, as_cogent, attackers, grounded, is_admissible,
                   is_statically_tenable, plus, reduct, restriction)
from tenab.games import DisputeSolver
from tenab.weak import is_cogent, is_cogent_by_definition

SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def frameworks(draw, max_n=6):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return Framework([])
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    edges = draw(st.sets(pairs, max_size=n * n))
    return Framework([f"a{i}" for i in range(n)], sorted(edges))


@st.composite
def framework_and_masks(draw, k=1, max_n=6):
    fw = draw(frameworks(max_n))
    masks = [draw(st.integers(0, fw.full_mask)) for _ in range(k)]
    return (fw, *masks)


@SETTINGS
@given(framework_and_masks(k=2))
def test_plus_is_monotone(data):
    fw, a, b = data
    assert fw.plus_mask(a & b) & ~fw.plus_mask(a) == 0
    assert fw.plus_mask(a) & ~fw.plus_mask(a | b) == 0


@SETTINGS
@given(framework_and_masks(k=2))
def test_as_cogent_depends_only_on_attackers_of_first(data):
    fw, a, b = data
    A, B = ArgSet(fw, a), ArgSet(fw, b)
    assert as_cogent(A, B) == as_cogent(A, B & attackers(A))


@SETTINGS
@given(framework_and_masks(k=2))
def test_restriction_composes(data):
    fw, s, t = data
    once = restriction(fw, ArgSet(fw, s & t))
    inner = restriction(fw, ArgSet(fw, s))
    inner_mask = 0
    for i, name in enumerate(inner.names):
        if (s & t) >> fw.index[name] & 1:
            inner_mask |= 1 << i
    twice = restriction(inner, ArgSet(inner, inner_mask))
    assert once == twice


@SETTINGS
@given(framework_and_masks())
def test_reduct_avoids_dead_arguments(data):
    fw, a = data
    A = ArgSet(fw, a)
    sub, back = reduct(fw, A)
    dead = a | fw.plus_mask(a)
    assert all(not dead >> i & 1 for i in back)
    assert reduct(fw, fw.empty_set())[0] == fw


@SETTINGS
@given(frameworks())
def test_grounded_fixpoint_is_admissible(fw):
    g = grounded(fw)
    assert is_admissible(fw, g.fixpoint)
    assert set(g.entry_index) == set(g.fixpoint.indices())
    for earlier, later in zip(g.layers, g.layers[1:]):
        assert earlier <= later


@SETTINGS
@given(framework_and_masks(max_n=5))
def test_cogency_characterization(data):
    fw, m = data
    E = ArgSet(fw, m)
    assert is_cogent(fw, E) == is_cogent_by_definition(fw, E)


@SETTINGS
@given(frameworks(max_n=5))
def test_admissible_implies_strongly_tenable(fw):
    solver = DisputeSolver(fw, DisputeKind(STRONG_TENABILITY))
    for m in fw.cf_masks():
        A = ArgSet(fw, m)
        if is_admissible(fw, A):
            assert solver.solve(A).winner == PRO


@SETTINGS
@given(frameworks(max_n=5))
def test_tenability_subset_closure(fw):
    for kind in (DisputeKind(TENABILITY), DisputeKind(STRONG_TENABILITY)):
        solver = DisputeSolver(fw, kind)
        for m in fw.cf_masks():
            if solver.solve(ArgSet(fw, m)).winner != PRO:
                continue
            sub = m
            while sub:
                sub = (sub - 1) & m
                assert solver.solve(ArgSet(fw, sub)).winner == PRO
    for m in fw.cf_masks():
        if not is_statically_tenable(fw, ArgSet(fw, m)):
            continue
        sub = m
        while sub:
            sub = (sub - 1) & m
            assert is_statically_tenable(fw, ArgSet(fw, sub))


@SETTINGS
@given(frameworks(max_n=5))
def test_strong_robustness_under_bound_one(fw):
    unbounded = DisputeSolver(fw, DisputeKind(STRONG_TENABILITY))
    bounded = DisputeSolver(fw, DisputeKind(STRONG_TENABILITY, 1))
    for m in fw.cf_masks():
        A = ArgSet(fw, m)
        assert unbounded.solve(A).winner == bounded.solve(A).winner
