import pytest

from softideal.errors import AxiomViolation, CapacityError, NotASubsetError, PointOutsideSpaceError
from softideal.harness import canonical_space
from softideal.softset import (
    ParameterSet,
    SoftPoint,
    Universe,
    absolute_soft_set,
    empty_soft_set,
    make_soft_set,
)
from softideal.topology import (
    closure,
    count_topologies,
    discrete_topology,
    enumerate_topologies,
    indiscrete_topology,
    is_closed,
    is_dense,
    is_hausdorff,
    is_neighborhood,
    is_open,
    is_t1,
    min_open_nbhd,
    soft_limit_point_of_set,
    space_has_no_soft_limit_point,
    subspace,
    topology_new,
)

U = Universe(["a", "b"])
S = ParameterSet(["s"])
X = absolute_soft_set(U, S)
E = empty_soft_set(U, S)
A = make_soft_set(U, S, [("s", ["a"])])
B = make_soft_set(U, S, [("s", ["b"])])
a, b = SoftPoint("s", "a"), SoftPoint("s", "b")
SIER = topology_new(X, [E, A, X])
DISC = discrete_topology(X)
INDISC = indiscrete_topology(X)


def test_topology_new_examples():
    assert set(SIER.opens) == {E, A, X}
    with pytest.raises(AxiomViolation) as exc:
        topology_new(X, [E, A])
    assert exc.value.axiom == "(ii)"
    with pytest.raises(AxiomViolation) as exc:
        topology_new(X, [A, X])
    assert exc.value.axiom == "(i)"
    with pytest.raises(AxiomViolation) as exc:
        topology_new(X, [E, A, B])
    assert exc.value.axiom == "(iii)" and set(exc.value.witness) == {A, B}
    three = absolute_soft_set(Universe(["a", "b", "c"]), S)
    c1 = make_soft_set(three.universe, S, [("s", ["a"])])
    c2 = make_soft_set(three.universe, S, [("s", ["b"])])
    with pytest.raises(AxiomViolation) as exc:
        topology_new(three, [empty_soft_set(three.universe, S), c1, c2, three])
    assert exc.value.axiom == "(iii)" and set(exc.value.witness) == {c1, c2}


def test_open_closed_examples():
    assert is_open(SIER, A) and not is_closed(SIER, A)
    assert is_closed(SIER, B)
    assert is_open(SIER, E) and is_closed(SIER, E)
    with pytest.raises(NotASubsetError):
        is_open(SIER, absolute_soft_set(Universe(["a", "b", "c"]), S))


def test_closure_examples():
    assert closure(SIER, A) == X
    assert closure(SIER, B) == B
    assert closure(SIER, E) == E


def test_neighborhood_examples():
    assert is_neighborhood(SIER, X, b)
    assert is_neighborhood(SIER, A, a)
    assert not is_neighborhood(SIER, B, b)
    with pytest.raises(PointOutsideSpaceError):
        is_neighborhood(SIER, X, SoftPoint("s", "z"))


def test_min_open_nbhd_examples():
    assert min_open_nbhd(SIER, a) == A
    assert min_open_nbhd(SIER, b) == X
    assert min_open_nbhd(DISC, a) == A and min_open_nbhd(DISC, b) == B


def test_subspace_examples():
    sub = subspace(SIER, B)
    assert sub.space == B and set(sub.opens) == {E, B}
    assert subspace(SIER, X) == SIER
    assert subspace(DISC, A) == discrete_topology(A)


def test_dense_examples():
    assert is_dense(SIER, A)
    assert not is_dense(SIER, B)
    assert is_dense(SIER, X)


def test_separation_examples():
    assert is_t1(DISC) and is_hausdorff(DISC)
    assert not is_t1(SIER) and not is_hausdorff(SIER)
    assert not is_t1(INDISC) and not is_hausdorff(INDISC)


def test_limit_point_examples():
    assert soft_limit_point_of_set(SIER, A, b)
    assert not any(soft_limit_point_of_set(SIER, k, a) for k in (E, A, B, X))
    assert not any(soft_limit_point_of_set(DISC, k, p) for k in (E, A, B, X) for p in (a, b))
    assert space_has_no_soft_limit_point(DISC)
    assert not space_has_no_soft_limit_point(SIER)
    assert not space_has_no_soft_limit_point(INDISC)


# --- enumeration against brute force over all families ----------------------


def brute_force_count(n):
    full = (1 << n) - 1
    middle = [m for m in range(1, full)]
    count = 0
    for sel in range(1 << len(middle)):
        fam = {0, full} | {m for k, m in enumerate(middle) if (sel >> k) & 1}
        if all(x | y in fam and x & y in fam for x in fam for y in fam):
            count += 1
    return count


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 4), (3, 29)])
def test_enumeration_matches_brute_force(n, expected):
    assert brute_force_count(n) == expected
    tops = list(enumerate_topologies(canonical_space(n)))
    assert len(tops) == expected == count_topologies(n)
    assert len({t.masks for t in tops}) == expected
    for t in tops:
        topology_new(t.space, t.opens)


def test_enumeration_four_points_brute_force():
    tops = list(enumerate_topologies(canonical_space(4)))
    assert len(tops) == brute_force_count(4) == 355


def test_enumeration_bound():
    with pytest.raises(CapacityError):
        list(enumerate_topologies(canonical_space(5)))
    assert list(enumerate_topologies(canonical_space(2))) == list(enumerate_topologies(canonical_space(2)))


# --- exhaustive invariants on every topology with <= 3 soft points ------------


def all_small_topologies(max_points=3):
    for n in range(0, max_points + 1):
        space = canonical_space(n) if n else make_soft_set(U, S, [])
        yield from enumerate_topologies(space)


def test_closure_laws_exhaustive():
    for t in all_small_topologies():
        g = t.graph
        subsets = [g.decode(m) for m in range(g.full + 1)]
        for h in subsets:
            c = closure(t, h)
            assert h <= c and closure(t, c) == c and is_closed(t, c)
            assert is_closed(t, h) == (c == h)
            # a point is in the closure iff each open around it meets h
            for k, p in enumerate(g.pairs):
                meets = all(o & g.encode(h) for o in t.masks if (o >> k) & 1)
                assert (p in c) == meets
            for h2 in subsets:
                if h <= h2:
                    assert closure(t, h) <= closure(t, h2)


def test_min_nbhd_exhaustive():
    for t in all_small_topologies():
        g = t.graph
        for p in g.pairs:
            u = min_open_nbhd(t, p)
            assert is_open(t, u) and p in u
            for m in range(g.full + 1):
                k = g.decode(m)
                if is_neighborhood(t, k, p):
                    assert u <= k


def test_limit_point_reduction_matches_definition():
    for t in all_small_topologies():
        g = t.graph
        for m in range(g.full + 1):
            k = g.decode(m)
            for j, p in enumerate(g.pairs):
                nbhds = [n for n in range(g.full + 1) if is_neighborhood(t, g.decode(n), p)]
                definitional = all(n & ~(1 << j) & m for n in nbhds)
                assert soft_limit_point_of_set(t, k, p) == definitional


def test_subspaces_are_topologies():
    for t in all_small_topologies():
        for m in range(t.graph.full + 1):
            h = t.graph.decode(m)
            sub = subspace(t, h)
            topology_new(h, sub.opens)


def test_separation_exhaustive_up_to_four_points():
    for n in range(1, 5):
        for t in enumerate_topologies(canonical_space(n)):
            discrete = len(t.masks) == 1 << n
            h, t1 = is_hausdorff(t), is_t1(t)
            assert not h or t1
            assert h == t1 == discrete


def test_no_limit_point_iff_singletons_open():
    for t in all_small_topologies():
        singletons = all((1 << k) in t.mask_set for k in range(len(t.graph)))
        assert space_has_no_soft_limit_point(t) == singletons


def test_university_topology(university):
    t = university.topologies["T"]
    assert len(t.opens) == 4
    p = SoftPoint("s2", "x3")
    assert min_open_nbhd(t, p) == university.softsets["A"]
