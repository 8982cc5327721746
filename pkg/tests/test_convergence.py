from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from softideal.convergence import (
    EpSoftSeq,
    build_interleaved_sequence,
    constant_sequence,
    differs_on,
    exception_set,
    gamma_set,
    hit_set,
    ideal_converges_to,
    ideal_limits,
    istar_converges_to,
    lambda_set,
    lift,
    soft_converges_to,
    soft_limit_points_of_sequence,
    splice,
    stat_converges_to,
    subsequence_by_epset,
    witness_nonconvergent_subsequence,
)
from softideal.errors import ContextMismatchError, PointOutsideSpaceError, PreconditionError
from softideal.ideals import finite_ideal, ideal_contains, parse_ideal
from softideal.natset import (
    empty,
    ep_density,
    ep_from_bits,
    ep_from_finite,
    ep_from_residues,
    ep_is_finite,
    naturals,
    parse_epset,
)
from softideal.softset import SoftPoint
from softideal.topology import closure

A = SoftPoint.parse("a@s")
B = SoftPoint.parse("b@s")
EVENS = ep_from_residues(2, [0])
ODDS = ep_from_residues(2, [1])


@pytest.fixture
def sp(sierpinski):
    ws = sierpinski
    return ws, ws.topologies["T"], ws.sequences["W"]


def test_sequence_terms_and_canonical_form(sierpinski):
    X = sierpinski.space
    w = EpSoftSeq(X, [A, B], [A, B, A, B])
    assert w.prefix == () and w.pattern == (A, B)
    assert w.terms(5) == [A, B, A, B, A]
    assert w == sierpinski.sequences["W"]
    assert str(w) == "prefix[] pattern[a@s b@s]"
    # a prefix that merely rotates the pattern is absorbed
    assert EpSoftSeq(X, [B], [A, B]) == EpSoftSeq(X, [], [B, A])


def test_sequence_rejects_stray_points(sierpinski):
    with pytest.raises(PointOutsideSpaceError):
        EpSoftSeq(sierpinski.space, [], [SoftPoint.parse("c@s")])


def test_exception_and_hit_sets(sp):
    ws, t, w = sp
    assert exception_set(w, ws.softsets["A"]) == ODDS
    assert exception_set(w, ws.space) == empty()
    assert hit_set(w, ws.softsets["A"]) == EVENS
    assert hit_set(w, ws.softsets["E"]) == empty()


def test_soft_and_statistical_convergence(sp, sierpinski):
    ws, t, w = sp
    assert soft_converges_to(t, w, B)
    assert not soft_converges_to(t, w, A)
    assert not stat_converges_to(t, w, A)
    assert ep_density(exception_set(w, ws.softsets["A"])) == Fraction(1, 2)
    # a constant sequence converges everywhere it should, in every topology on the file
    for name in ("T", "D", "I"):
        tt = sierpinski.topologies[name]
        for x in (A, B):
            c = constant_sequence(ws.space, x)
            assert soft_converges_to(tt, c, x) and stat_converges_to(tt, c, x)
    bumped = EpSoftSeq(ws.space, [B, B, B], [A])
    assert stat_converges_to(t, bumped, A) and soft_converges_to(t, bumped, A)


def test_ideal_convergence_examples(sp, sierpinski):
    ws, t, w = sp
    assert ideal_converges_to(t, w, ws.ideals["Fin"], B)
    assert not ideal_converges_to(t, w, ws.ideals["Ev"], A)
    assert ideal_converges_to(t, w, ws.ideals["Odd"], A)
    indiscrete = sierpinski.topologies["I"]
    assert ideal_limits(indiscrete, w, ws.ideals["Fin"]) == [A, B]
    assert ideal_limits(t, w, ws.ideals["Odd"]) == [A, B]
    assert ideal_limits(sierpinski.topologies["D"], w, ws.ideals["Fin"]) == []


def test_istar_examples(sp):
    ws, t, w = sp
    ev = ws.ideals["Ev"]
    assert istar_converges_to(t, w, ev, B)
    assert not istar_converges_to(t, w, ev, A)
    assert istar_converges_to(t, w, ws.ideals["Odd"], A)
    c = constant_sequence(ws.space, A)
    for i in ws.ideals.values():
        assert istar_converges_to(t, c, i, A)


def test_limit_and_cluster_sets(sp):
    ws, t, w = sp
    assert lambda_set(t, w, ws.ideals["Fin"]) == [A, B]
    assert gamma_set(t, w, ws.ideals["Fin"]) == [A, B]
    assert lambda_set(t, w, ws.ideals["Ev"]) == [B]
    assert gamma_set(t, w, ws.ideals["Ev"]) == [B]
    c = constant_sequence(ws.space, A)
    assert A in lambda_set(t, c, finite_ideal())
    assert A in gamma_set(t, c, finite_ideal())
    g = lift(t, gamma_set(t, w, ws.ideals["Ev"]))
    assert closure(t, g) == g == ws.softsets["B"]
    assert soft_limit_points_of_sequence(t, w) == [A, B]


def test_subsequences(sp):
    ws, t, w = sp
    assert subsequence_by_epset(w, EVENS) == constant_sequence(ws.space, A)
    assert subsequence_by_epset(w, naturals()) == w
    # residues 1 and 3 mod 4 are just the odd indices, where the sequence sits at b
    assert subsequence_by_epset(w, ep_from_residues(4, [1, 3])) == constant_sequence(ws.space, B)
    # 1, 2, 5, 6, 9, 10, ... alternates b, a
    sub = subsequence_by_epset(w, ep_from_residues(4, [1, 2]))
    assert sub == EpSoftSeq(ws.space, [], [B, A])
    with pytest.raises(PreconditionError):
        subsequence_by_epset(w, ep_from_finite([0, 2]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([A, B]), max_size=3), st.lists(st.sampled_from([A, B]), min_size=1, max_size=4),
       st.lists(st.integers(0, 1), max_size=3), st.lists(st.integers(0, 1), min_size=1, max_size=4))
def test_subsequence_matches_unrolled_terms(prefix, pattern, pbits, qbits):
    from softideal.softset import ParameterSet, Universe, absolute_soft_set

    space = absolute_soft_set(Universe(["a", "b"]), ParameterSet(["s"]))
    w = EpSoftSeq(space, prefix, pattern)
    p = ep_from_bits(pbits, qbits)
    if ep_is_finite(p):
        return
    idx = [n for n in range(200) if n in p][:30]
    assert subsequence_by_epset(w, p).terms(len(idx)) == [w.term(n) for n in idx]


def test_nonconvergence_witness(sp, sierpinski):
    ws, t, w = sp
    assert witness_nonconvergent_subsequence(t, w, ws.ideals["Fin"], A) == ODDS
    d = sierpinski.topologies["D"]
    assert witness_nonconvergent_subsequence(d, w, ws.ideals["Fin"], A) == ODDS
    sub = subsequence_by_epset(w, ODDS)
    assert sub == constant_sequence(ws.space, B)
    assert not ideal_converges_to(d, sub, ws.ideals["Fin"], A)
    with pytest.raises(PreconditionError):
        witness_nonconvergent_subsequence(sierpinski.topologies["I"], w, ws.ideals["Fin"], A)


def test_interleaving(sp):
    ws, t, w = sp
    h = [ep_from_residues(4, [0]), ep_from_residues(4, [2])]
    seq = build_interleaved_sequence(h, [A, A], B, ws.space)
    assert seq == w
    assert build_interleaved_sequence([], [], B, ws.space) == constant_sequence(ws.space, B)
    with pytest.raises(PreconditionError):
        build_interleaved_sequence([EVENS, ep_from_residues(4, [0])], [A, A], B, ws.space)
    with pytest.raises(PreconditionError):
        build_interleaved_sequence([EVENS], [], B, ws.space)
    # the blocks union to the evens, which the even ideal absorbs
    assert ideal_converges_to(t, seq, ws.ideals["Ev"], B)


def test_differs_on(sp):
    ws, t, w = sp
    assert differs_on(w, w) == empty()
    assert differs_on(w, constant_sequence(ws.space, A)) == ODDS
    v = EpSoftSeq(ws.space, [B, B, B], [B, A])
    diff = differs_on(w, v)
    assert ep_is_finite(diff) and diff == ep_from_finite([0, 2])


def test_differs_on_rejects_foreign_sequences(sp, university):
    ws, t, w = sp
    with pytest.raises(ContextMismatchError):
        differs_on(w, university.sequences["W"])


def test_splice_on_ideal_set_keeps_outputs(sp):
    ws, t, w = sp
    ev = ws.ideals["Ev"]
    v = splice(w, constant_sequence(ws.space, B), EVENS)
    assert v == constant_sequence(ws.space, B)
    assert ideal_contains(ev, differs_on(w, v))
    assert lambda_set(t, v, ev) == lambda_set(t, w, ev)
    assert gamma_set(t, v, ev) == gamma_set(t, w, ev)
    # on the odds (outside the ideal) the cluster set moves
    v2 = splice(w, constant_sequence(ws.space, A), ODDS)
    assert gamma_set(t, v2, ev) != gamma_set(t, w, ev)


def test_university_sequence(university):
    ws = university
    t, w = ws.topologies["T"], ws.sequences["W"]
    fin = finite_ideal()
    x1 = SoftPoint.parse("x1@s1")
    limits = ideal_limits(t, w, fin)
    # x1@s1 sits inside every nonempty open, so the sequence reaches it wherever it goes
    assert x1 not in limits or soft_converges_to(t, w, x1)
    assert set(lambda_set(t, w, fin)) == set(gamma_set(t, w, fin))
    odd = parse_ideal("gens(mod(2: 1))")
    for x in t.graph.pairs:
        assert ideal_converges_to(t, w, odd, x) == istar_converges_to(t, w, odd, x)


def test_parse_epset_in_context():
    assert parse_epset("mod(4: 1 3)") == ODDS
