import pytest

from grosimp.category import (chain_category, discrete_category, nerve,
                              nerve_map, slice_category, slice_reindex,
                              terminal_category, walking_iso_category,
                              Functor)
from grosimp.diagram import constant_diagram, constant_marked_diagram
from grosimp.grothendieck import (canonical_iso, cotensor_over, fiber, gerbe,
                                  gerbe_top_map, grothendieck_total,
                                  left_adjoint_slice, relative_nerve,
                                  relnerve_vertex_fiber_map,
                                  right_adjoint_value, unit_map,
                                  vertex_fiber_map)
from grosimp.homs import find_isomorphism
from grosimp.marked import MarkedMap, flat, sharp
from grosimp.simplicial import SimplicialMap, product, standard_simplex
from grosimp.validate import map_violations, violations


# ---------------------------------------------------------------------------
# nerves
# ---------------------------------------------------------------------------

def test_nerve_of_chain_is_a_simplex(chain2):
    N = nerve(chain2, 3)
    D = standard_simplex(2, 3)
    for n in range(4):
        assert N.simplex_count(n) == D.simplex_count(n)
    assert find_isomorphism(N, D) is not None


def test_nerve_of_discrete_category():
    N = nerve(discrete_category(["a", "b", "c"]), 3)
    for n in range(4):
        assert N.simplex_count(n) == 3


def test_nerve_of_walking_iso():
    # one functor [n] -> iso per vertex word
    N = nerve(walking_iso_category(), 3)
    for n in range(4):
        assert N.simplex_count(n) == 2 ** (n + 1)


def test_nerve_map_is_simplicial(chain1, chain2):
    F = Functor(chain1, chain2,
                {0: 0, 1: 2},
                {(0, 0): (0, 0), (1, 1): (2, 2), (0, 1): (0, 2)})
    assert not F.violations()
    assert not map_violations(nerve_map(F, 3))


# ---------------------------------------------------------------------------
# total space and relative nerve
# ---------------------------------------------------------------------------

def test_constant_total_space_is_a_product(chain2, seg):
    F = constant_diagram(chain2, seg)
    total = grothendieck_total(F)
    P = product(nerve(chain2, seg.dim_bound), seg)
    for n in range(seg.dim_bound + 1):
        assert total.space.simplex_count(n) == P.space.simplex_count(n)
    assert not map_violations(total.projection)


def test_point_diagram_total_is_the_nerve(chain2, pt):
    total = grothendieck_total(constant_diagram(chain2, pt))
    assert total.projection.is_bijective()
    assert not violations(total.space)


def test_relative_nerve_of_point_diagram(chain2, pt):
    rel = relative_nerve(constant_diagram(chain2, pt))
    assert rel.projection.is_bijective()


def test_canonical_iso_on_inclusion(inclusion_diagram):
    iso, rep, total, rel = canonical_iso(inclusion_diagram)
    assert rep.ok
    assert all(rep.bijective_degrees)
    assert iso.is_bijective()


def test_vertex_fibers_match_values(inclusion_diagram):
    for d in inclusion_diagram.base.objects:
        fm, fib = vertex_fiber_map(inclusion_diagram, d)
        assert fm.is_bijective()
        assert not map_violations(fm)
        rm, rfib = relnerve_vertex_fiber_map(inclusion_diagram, d)
        assert rm.is_bijective()


def test_fiber_of_identity(seg):
    # over an n-simplex the fiber of the identity is Delta[n]
    p = SimplicialMap.identity(seg)
    for n in range(4):
        assert fiber(p, 0, (0,)).space.simplex_count(n) == 1
    edge_fiber = fiber(p, 1, (0, 1)).space
    D1 = standard_simplex(1, seg.dim_bound)
    for n in range(4):
        assert edge_fiber.simplex_count(n) == D1.simplex_count(n)


# ---------------------------------------------------------------------------
# gerbes
# ---------------------------------------------------------------------------

def test_degenerate_chain_gerbe_is_a_mapping_space(inclusion_diagram):
    F = inclusion_diagram
    sigma = (F.base.identity[1],)
    G = gerbe(F, 1, sigma, 2)
    top, fc = gerbe_top_map(G)
    assert top.is_bijective()
    assert not map_violations(top)
    assert G.objects == (1, 1)


def test_gerbe_degree_two(inclusion_diagram):
    F = inclusion_diagram
    sigma = (F.base.identity[0],) * 2
    G = gerbe(F, 2, sigma, 1)
    top, fc = gerbe_top_map(G)
    assert top.is_bijective()


# ---------------------------------------------------------------------------
# slices and the two adjoints
# ---------------------------------------------------------------------------

def test_slice_categories_are_categories(chain2):
    for d in chain2.objects:
        over = slice_category(chain2, d, "over")
        under = slice_category(chain2, d, "under")
        assert not over.category.violations()
        assert not under.category.violations()
        assert not over.projection.violations()
        assert not under.projection.violations()
    assert len(slice_category(chain2, 2, "over").category.objects) == 3
    assert len(slice_category(chain2, 2, "under").category.objects) == 1


def test_slice_reindex_is_a_functor(chain2):
    F = slice_reindex(chain2, (0, 1), "over")
    assert not F.violations()
    G = slice_reindex(chain2, (0, 1), "under")
    assert not G.violations()


def test_left_adjoint_at_a_terminal_object(chain1):
    N = nerve(chain1, 3)
    Xp = sharp(N)
    q = MarkedMap(Xp, sharp(N), SimplicialMap.identity(N))
    value, pb, sl = left_adjoint_slice(Xp, q, chain1, 1)
    # [1]/1 is the whole chain, so the pullback recovers X
    for n in range(4):
        assert value.underlying.simplex_count(n) == N.simplex_count(n)


def test_left_adjoint_over_discrete_base_is_the_fiber(pt, seg):
    from grosimp.simplicial import coproduct
    D = discrete_category(["a", "b"])
    N = nerve(D, 3)
    res = coproduct(pt, seg)

    def over(x, n):
        # degree-0 nerve cells are the objects, higher cells chains of
        # identity arrows
        obj = "a" if x[0] == 0 else "b"
        return obj if n == 0 else (("id", obj),) * n

    q_plain = SimplicialMap(res.space, N, {
        n: {x: over(x, n) for x in res.space.simplices[n]}
        for n in range(4)
    })
    assert not map_violations(q_plain)
    Xp = sharp(res.space)
    q = MarkedMap(Xp, sharp(N), q_plain)
    value, pb, sl = left_adjoint_slice(Xp, q, D, "b")
    for n in range(4):
        assert value.underlying.simplex_count(n) == seg.simplex_count(n)


def test_right_adjoint_over_terminal_base_recovers_the_object():
    C = terminal_category()
    Y = nerve(C, 3)
    fc, sl = right_adjoint_value(Y, SimplicialMap.identity(Y), C, "*", 2)
    for k in range(3):
        assert fc.space.simplex_count(k) == Y.simplex_count(k)


def test_right_adjoint_of_the_nerve_is_a_point(chain1):
    N = nerve(chain1, 3)
    fc, sl = right_adjoint_value(N, SimplicialMap.identity(N), chain1, 0, 1)
    for k in range(2):
        assert fc.space.simplex_count(k) == 1


# ---------------------------------------------------------------------------
# the unit and the cotensor
# ---------------------------------------------------------------------------

def test_unit_is_a_marked_map(chain1, seg):
    F = constant_marked_diagram(chain1, flat(seg))
    um, hom, total = unit_map(F, 0, k_max=1)
    assert not um.violations()


def test_unit_over_terminal_base_is_an_iso(seg):
    F = constant_marked_diagram(terminal_category(), flat(seg))
    um, hom, total = unit_map(F, "*", k_max=2)
    assert um.mapping.is_bijective()


def test_cotensor_by_a_point(seg):
    pt = standard_simplex(0, seg.dim_bound)
    pb, fcY, fcB = cotensor_over(pt, seg, SimplicialMap.identity(seg), 1)
    for k in range(2):
        assert pb.space.simplex_count(k) == seg.simplex_count(k)


def test_cotensor_of_the_base_against_itself(seg):
    pb, fcY, fcB = cotensor_over(seg, seg, SimplicialMap.identity(seg), 1)
    # over the identity the constancy condition forces constant maps,
    # one per vertex, and one homotopy class of squares per edge
    assert pb.space.simplex_count(0) == 2
    assert pb.space.simplex_count(1) == 3
