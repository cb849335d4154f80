import pytest

from grosimp.category import chain_category, walking_iso_category, nerve
from grosimp.errors import MarkedEdgeError
from grosimp.marked import (MarkedSimplicialSet, adjunction_counit,
                            adjunction_unit, flat, is_equivalence_edge,
                            localization_universal, localize, localize_map,
                            mark_equivalences, sharp)
from grosimp.simplicial import (SimplicialMap, invertible_interval,
                                standard_simplex)
from grosimp.validate import map_violations, violations


def test_flat_marks_exactly_degenerates(seg):
    M = flat(seg)
    assert M.marked == {(0, 0), (1, 1)}
    assert not M.violations()


def test_sharp_marks_everything(seg):
    M = sharp(seg)
    assert M.marked == set(seg.simplices[1])
    assert not M.violations()


def test_unmarked_degenerate_edge_is_a_violation(seg):
    M = MarkedSimplicialSet(seg, [(0, 1)])
    assert M.violations()


def test_equivalence_marking_on_interval(seg):
    # no edge of Delta[1] is invertible except the degenerate ones
    M = mark_equivalences(seg)
    assert M.marked == flat(seg).marked


def test_equivalence_marking_on_loop():
    J = invertible_interval(3)
    M = mark_equivalences(J)
    assert M.marked == set(J.simplices[1])


def test_equivalence_edge_witnesses():
    J = invertible_interval(3)
    report = is_equivalence_edge(J, (0, 1))
    assert report.is_equivalence and report.witness is not None
    seg = standard_simplex(1, 3)
    assert not is_equivalence_edge(seg, (0, 1)).is_equivalence


# ---------------------------------------------------------------------------
# localization
# ---------------------------------------------------------------------------

def localized_count(S, n_marked, n):
    """Original cells plus one glued interval copy per marked edge,
    minus the monotone words that fold back onto the original."""
    return S.simplex_count(n) + n_marked * (2 ** (n + 1) - (n + 2))


def test_localize_flat_interval_counts(seg):
    M = flat(seg)
    loc = localize(M)
    for n in range(4):
        assert loc.space.simplex_count(n) == localized_count(seg, 2, n)
    assert loc.space.simplex_count(1) == 5
    assert not violations(loc.space)


def test_localize_projection_injective(seg):
    loc = localize(sharp(seg))
    assert not map_violations(loc.projection)
    assert loc.projection.is_injective()


def test_localized_marked_edges_become_equivalences(seg):
    loc = localize(sharp(seg))
    for e in sharp(seg).marked:
        assert is_equivalence_edge(loc.space, loc.projection.apply(1, e)).is_equivalence


def test_localize_warns_below_witness_dimension():
    tiny = flat(standard_simplex(1, 1))
    assert localize(tiny).warnings


def test_universal_map_with_pinned_witnesses_is_identity(seg):
    M = sharp(seg)
    loc = localize(M)
    preferred = {e: loc.glued[e] for e in M.marked}
    U = localization_universal(M, loc.projection, localization=loc,
                               preferred_extensions=preferred)
    assert U.equals(SimplicialMap.identity(loc.space))


def test_universal_map_factors_the_projection(seg):
    M = sharp(seg)
    loc = localize(M)
    J = invertible_interval(3)
    incl = SimplicialMap(seg, J, {
        n: {x: x for x in seg.simplices[n]} for n in range(4)
    })
    U = localization_universal(M, incl, localization=loc)
    assert not map_violations(U)
    assert U.compose(loc.projection).equals(incl)


def test_universal_map_requires_invertible_images(seg):
    # the identity does not send (0, 1) to an equivalence
    with pytest.raises(MarkedEdgeError):
        localization_universal(sharp(seg), SimplicialMap.identity(seg))


def test_localize_map_covers_glued_cells(pt, seg):
    from grosimp.simplicial import constant_map
    g = constant_map(seg, pt, (0,))
    loc_s = localize(sharp(seg))
    loc_p = localize(sharp(pt))
    Lg = localize_map(g, loc_s, loc_p)
    assert not map_violations(Lg)
    for n in range(4):
        assert set(Lg.components[n]) == set(loc_s.space.simplices[n])


# ---------------------------------------------------------------------------
# the unit and counit
# ---------------------------------------------------------------------------

def test_unit_lands_in_equivalences(seg):
    eta = adjunction_unit(flat(seg))
    assert not eta.violations()
    assert eta.target.marked >= {eta.mapping.apply(1, e) for e in flat(seg).marked}


def test_triangles_on_an_interval(seg):
    X = sharp(seg)
    locX = localize(X)
    eta = adjunction_unit(X, locX)
    U, loc2 = adjunction_counit(locX.space, source_localization=locX)
    for n in range(4):
        for c in locX.space.simplices[n]:
            assert U.apply(n, localize_map(eta.mapping, locX, loc2).apply(n, c)) == c

    ES = mark_equivalences(seg)
    loc1 = localize(ES)
    eta2 = adjunction_unit(ES, loc1)
    U2, _ = adjunction_counit(seg)
    for n in range(4):
        for x in seg.simplices[n]:
            assert U2.apply(n, eta2.mapping.apply(n, x)) == x
