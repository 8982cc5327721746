import pytest
from hypothesis import given, strategies as st

from softideal.errors import CapacityError, ContextMismatchError, NotASubsetError, UnknownNameError
from softideal.softset import (
    ParameterSet,
    PointGraph,
    SoftPoint,
    SoftSet,
    Universe,
    absolute_soft_set,
    contains_point,
    empty_soft_set,
    graph_decode,
    graph_encode,
    is_soft_subset,
    make_soft_set,
    point_set,
    soft_complement,
    soft_difference,
    soft_equal,
    soft_intersection,
    soft_points_of,
    soft_union,
    subset_violation,
)

X = Universe(["x1", "x2", "x3", "x4", "x5"])
S = ParameterSet(["s1", "s2", "s3", "s4"])
G = make_soft_set(X, S, [("s1", ["x1"]), ("s2", ["x1", "x3", "x5"]), ("s3", ["x1", "x4", "x5"])])
EMPTY = empty_soft_set(X, S)
FULL = absolute_soft_set(X, S)


def P(text):
    return SoftPoint.parse(text)


def test_university_soft_set():
    assert G.value("s1") == {"x1"}
    assert G.value("s2") == {"x1", "x3", "x5"}
    assert G.value("s3") == {"x1", "x4", "x5"}
    assert G.value("s4") == frozenset()
    assert G.support == ("s1", "s2", "s3")


def test_empty_and_absolute():
    assert make_soft_set(X, S, []) == EMPTY
    assert make_soft_set(X, S, [(s, X.elements) for s in S.params]) == FULL


def test_unknown_names():
    with pytest.raises(UnknownNameError, match="x9"):
        make_soft_set(X, S, [("s1", ["x9"])])
    with pytest.raises(UnknownNameError, match="s9"):
        make_soft_set(X, S, [("s9", ["x1"])])
    with pytest.raises(UnknownNameError):
        contains_point(G, P("x1@s7"))


def test_algebra_examples():
    assert soft_union(G, EMPTY) == G
    h = make_soft_set(X, S, [("s2", ["x3", "x4"])])
    assert soft_intersection(G, h) == make_soft_set(X, S, [("s2", ["x3"])])
    assert soft_difference(G, G) == EMPTY


def test_complement_examples():
    assert soft_complement(EMPTY) == FULL
    assert soft_complement(G).value("s1") == {"x2", "x3", "x4", "x5"}
    assert soft_complement(soft_complement(G)) == G


def test_subset_examples():
    assert is_soft_subset(EMPTY, G)
    assert is_soft_subset(G, FULL)
    h = make_soft_set(X, S, [("s2", ["x2"])])
    assert not is_soft_subset(h, G)
    assert subset_violation(h, G) == "s2"


def test_context_mismatch():
    other = absolute_soft_set(Universe(["a"]), S)
    with pytest.raises(ContextMismatchError):
        soft_union(G, other)
    with pytest.raises(ContextMismatchError):
        is_soft_subset(G, other)


def test_points_of_university():
    pts = [str(p) for p in soft_points_of(G)]
    assert pts == ["x1@s1", "x1@s2", "x3@s2", "x5@s2", "x1@s3", "x4@s3", "x5@s3"]
    assert contains_point(G, P("x4@s3"))
    assert not contains_point(G, P("x2@s1"))


def test_point_distinctness():
    assert P("x1@s1") != P("x1@s2")
    assert P("x1@s1") != P("x2@s1")
    assert P("x1@s1") == SoftPoint("s1", "x1")


def test_graph_examples():
    g = PointGraph(G)
    assert g.encode(G) == g.full == (1 << 7) - 1
    assert g.encode(EMPTY) == 0
    assert graph_decode(FULL, graph_encode(FULL, G)) == G
    with pytest.raises(NotASubsetError):
        g.encode(FULL)


def test_graph_capacity():
    u = Universe([f"e{k}" for k in range(13)])
    s = ParameterSet(["a", "b", "c", "d", "e"])
    with pytest.raises(CapacityError):
        PointGraph(absolute_soft_set(u, s))
    PointGraph(absolute_soft_set(Universe([f"e{k}" for k in range(16)]), ParameterSet(["a", "b", "c", "d"])))


# --- lattice laws over random soft sets -------------------------------------

U3 = Universe(["a", "b", "c"])
S2 = ParameterSet(["p", "q"])
soft_sets = st.tuples(st.integers(0, 7), st.integers(0, 7)).map(lambda m: SoftSet(U3, S2, m))


@given(soft_sets, soft_sets, soft_sets)
def test_lattice_laws(a, b, c):
    assert a | b == b | a and a & b == b & a
    assert (a | b) | c == a | (b | c) and (a & b) & c == a & (b & c)
    assert a | a == a and a & a == a
    assert a | (a & b) == a and a & (a | b) == a
    assert soft_complement(a | b) == soft_complement(a) & soft_complement(b)
    assert soft_complement(a & b) == soft_complement(a) | soft_complement(b)
    assert soft_equal(a, b) == (is_soft_subset(a, b) and is_soft_subset(b, a))


@given(soft_sets)
def test_union_of_points_rebuilds_set(a):
    acc = empty_soft_set(U3, S2)
    for p in soft_points_of(a):
        acc = acc | point_set(U3, S2, p)
    assert acc == a


def test_graph_is_lattice_isomorphism_exhaustive():
    u = Universe(["a", "b", "c", "d"])
    s = ParameterSet(["p", "q"])
    for n in range(9):
        # n soft points: first four on p, the rest on q
        amb = SoftSet(u, s, ((1 << min(n, 4)) - 1, (1 << max(n - 4, 0)) - 1))
        g = PointGraph(amb)
        assert len(g) == n
        subsets = [g.decode(m) for m in range(g.full + 1)]
        for ea, a in enumerate(subsets):
            assert g.encode(a) == ea
            for eb, b in enumerate(subsets):
                assert g.encode(a | b) == ea | eb
                assert g.encode(a & b) == ea & eb
                assert g.encode(a - b) == ea & ~eb
