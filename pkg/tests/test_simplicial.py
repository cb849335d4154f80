import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from grosimp.errors import TruncationError
from grosimp.simplicial import (TruncatedSimplicialSet, coproduct, horn,
                                invertible_interval, product, pullback,
                                pushout, standard_object, standard_simplex,
                                SimplicialMap, constant_map)
from grosimp.validate import map_violations, violations


# ---------------------------------------------------------------------------
# standard objects against counting oracles
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_standard_simplex_counts(m):
    # weakly increasing (n+1)-tuples valued in {0..m}
    S = standard_simplex(m, 4)
    for n in range(5):
        assert S.simplex_count(n) == comb(n + m + 1, m)
    assert not violations(S)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_standard_simplex_nondegenerate_counts(m):
    S = standard_simplex(m, 4)
    for n in range(5):
        assert len(S.nondegenerate(n)) == comb(m + 1, n + 1)


@pytest.mark.parametrize("n,i", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1)])
def test_horn_counts(n, i):
    """A monotone tuple lies in the horn iff its image misses some
    vertex other than i."""
    H = horn(n, i, 3)
    for k in range(4):
        expected = sum(
            1
            for t in itertools.combinations_with_replacement(range(n + 1), k + 1)
            if any(j not in t for j in range(n + 1) if j != i)
        )
        assert H.simplex_count(k) == expected
    assert not violations(H)


def test_invertible_interval_counts():
    J = invertible_interval(4)
    for n in range(5):
        assert J.simplex_count(n) == 2 ** (n + 1)
    assert not violations(J)


def test_standard_object_shorthand():
    assert standard_object("delta 2", 3) == standard_simplex(2, 3)
    assert standard_object("horn 2 1", 3) == horn(2, 1, 3)
    assert standard_object("J", 3) == invertible_interval(3)
    assert standard_object(("horn", 2, 1), 3) == horn(2, 1, 3)
    with pytest.raises(ValueError):
        standard_object("cone 2", 3)


# ---------------------------------------------------------------------------
# operator action
# ---------------------------------------------------------------------------

def monotone(length, top):
    return st.lists(st.integers(0, top), min_size=length, max_size=length).map(
        lambda xs: tuple(sorted(xs)))


@given(st.data())
def test_act_composes(data):
    S = standard_simplex(2, 4)
    n = data.draw(st.integers(0, 4), label="n")
    x = data.draw(st.sampled_from(sorted(S.simplices[n])), label="x")
    m = data.draw(st.integers(0, 4), label="m")
    alpha = data.draw(monotone(m + 1, n), label="alpha")
    k = data.draw(st.integers(0, 4), label="k")
    beta = data.draw(monotone(k + 1, m), label="beta")
    together = tuple(alpha[b] for b in beta)
    assert S.act(m, S.act(n, x, alpha), beta) == S.act(n, x, together)


@given(st.data())
def test_act_identity(data):
    J = invertible_interval(3)
    n = data.draw(st.integers(0, 3))
    x = data.draw(st.sampled_from(sorted(J.simplices[n])))
    assert J.act(n, x, tuple(range(n + 1))) == x


def test_act_recovers_faces_and_degens():
    S = standard_simplex(2, 3)
    x = (0, 1, 2)
    assert S.act(2, x, (0, 1)) == S.face(2, 2, x)
    assert S.act(2, x, (1, 2)) == S.face(2, 0, x)
    assert S.act(2, x, (0, 0, 1, 2)) == S.degen(2, 0, x)


# ---------------------------------------------------------------------------
# limits and colimits, degreewise
# ---------------------------------------------------------------------------

def test_product_counts_and_projections():
    A = standard_simplex(1, 3)
    B = horn(2, 1, 3)
    res = product(A, B)
    for n in range(4):
        assert res.space.simplex_count(n) == A.simplex_count(n) * B.simplex_count(n)
    assert not violations(res.space)
    assert not map_violations(res.proj1)
    assert not map_violations(res.proj2)


def test_coproduct_counts():
    A = standard_simplex(1, 3)
    B = standard_simplex(0, 3)
    res = coproduct(A, B)
    for n in range(4):
        assert res.space.simplex_count(n) == A.simplex_count(n) + B.simplex_count(n)
    assert res.inj1.is_injective() and res.inj2.is_injective()


def test_pullback_along_identity():
    A = standard_simplex(1, 3)
    pt = standard_simplex(0, 3)
    f = constant_map(A, pt, (0,))
    res = pullback(f, SimplicialMap.identity(pt))
    for n in range(4):
        assert res.space.simplex_count(n) == A.simplex_count(n)
    assert not violations(res.space)


def test_pushout_glues_endpoints():
    # two intervals glued at one endpoint make a wedge
    seg = standard_simplex(1, 3)
    pt = standard_simplex(0, 3)
    left = constant_map(pt, seg, (0,))
    right = constant_map(pt, seg, (1,))
    res = pushout(left, right)
    assert res.space.simplex_count(0) == 3
    assert len(res.space.nondegenerate(1)) == 2
    assert not violations(res.space)
    # both injections agree on the glued vertex
    assert res.inj1.apply(0, left.apply(0, (0,))) == res.inj2.apply(0, right.apply(0, (0,)))


def test_mixed_bounds_rejected():
    with pytest.raises(TruncationError):
        product(standard_simplex(1, 2), standard_simplex(1, 3))


# ---------------------------------------------------------------------------
# validate catches broken structure
# ---------------------------------------------------------------------------

def test_validate_flags_broken_degeneracy():
    S = standard_simplex(1, 2)
    faces = {key: dict(table) for key, table in S.faces.items()}
    # point the first face of a degenerate edge at the wrong vertex
    faces[(1, 0)] = dict(faces[(1, 0)])
    faces[(1, 0)][(0, 0)] = (1,)
    broken = TruncatedSimplicialSet(2, S.simplices, faces, S.degens)
    assert violations(broken)
