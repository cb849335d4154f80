"""Bisimplicial sets: bigraded cell families with two commuting
simplicial directions, truncated in both."""

from __future__ import annotations

from .simplicial import TruncatedSimplicialSet, make_simplicial_set
from .util import canon_sorted


def _bounds_pair(bounds):
    if isinstance(bounds, int):
        return (bounds, bounds)
    m, k = bounds
    return (int(m), int(k))


class BisimplicialSet:
    """Cells indexed by a pair of degrees with horizontal and vertical
    structure maps.

    ``cells[(m, k)]`` is the set of (m, k)-cells.  ``hface[(m, k, i)]``
    sends them to (m-1, k)-cells, ``vface[(m, k, i)]`` to (m, k-1)-cells;
    degeneracies go up by one in the matching index.  The two directions
    must commute; :func:`grosimp.validate.validate` checks that.
    """

    def __init__(self, bounds, cells, hfaces, hdegens, vfaces, vdegens):
        self.hbound, self.vbound = _bounds_pair(bounds)
        self.cells = {
            (m, k): tuple(canon_sorted(set(cells.get((m, k), ()))))
            for m in range(self.hbound + 1)
            for k in range(self.vbound + 1)
        }
        self.hfaces = {key: dict(v) for key, v in hfaces.items()}
        self.hdegens = {key: dict(v) for key, v in hdegens.items()}
        self.vfaces = {key: dict(v) for key, v in vfaces.items()}
        self.vdegens = {key: dict(v) for key, v in vdegens.items()}

    def cell_count(self, m, k):
        return len(self.cells.get((m, k), ()))

    def hface(self, m, k, i, x):
        return self.hfaces[(m, k, i)][x]

    def hdegen(self, m, k, j, x):
        return self.hdegens[(m, k, j)][x]

    def vface(self, m, k, i, x):
        return self.vfaces[(m, k, i)][x]

    def vdegen(self, m, k, j, x):
        return self.vdegens[(m, k, j)][x]

    def row_complex(self, k):
        """The horizontal simplicial set of cells at vertical degree k."""
        return make_simplicial_set(
            self.hbound,
            {m: self.cells[(m, k)] for m in range(self.hbound + 1)},
            lambda m, i, x: self.hface(m, k, i, x),
            lambda m, j, x: self.hdegen(m, k, j, x),
        )

    def column_complex(self, m):
        """The vertical simplicial set of cells at horizontal degree m."""
        return make_simplicial_set(
            self.vbound,
            {k: self.cells[(m, k)] for k in range(self.vbound + 1)},
            lambda k, i, x: self.vface(m, k, i, x),
            lambda k, j, x: self.vdegen(m, k, j, x),
        )

    def __repr__(self):
        return "BisimplicialSet(bounds=(%d, %d))" % (self.hbound, self.vbound)


def make_bisimplicial_set(bounds, cells_by_degree, hface_rule, hdegen_rule,
                          vface_rule, vdegen_rule):
    hb, vb = _bounds_pair(bounds)
    cells = {(m, k): tuple(cells_by_degree.get((m, k), ()))
             for m in range(hb + 1) for k in range(vb + 1)}
    hfaces, hdegens, vfaces, vdegens = {}, {}, {}, {}
    for (m, k), items in cells.items():
        for i in range(m + 1):
            if m >= 1:
                hfaces[(m, k, i)] = {x: hface_rule(m, k, i, x) for x in items}
        for j in range(m + 1):
            if m < hb:
                hdegens[(m, k, j)] = {x: hdegen_rule(m, k, j, x) for x in items}
        for i in range(k + 1):
            if k >= 1:
                vfaces[(m, k, i)] = {x: vface_rule(m, k, i, x) for x in items}
        for j in range(k + 1):
            if k < vb:
                vdegens[(m, k, j)] = {x: vdegen_rule(m, k, j, x) for x in items}
    return BisimplicialSet((hb, vb), cells, hfaces, hdegens, vfaces, vdegens)


class BisimplicialMap:
    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = {key: dict(v) for key, v in components.items()}

    def apply(self, m, k, x):
        return self.components[(m, k)][x]


def box_product(K, L):
    """The external product: (m, k)-cells are pairs of a K_m and an L_k
    simplex, horizontal structure acting on the first component and
    vertical on the second."""
    bounds = (K.dim_bound, L.dim_bound)
    cells = {
        (m, k): [(a, b) for a in K.simplices[m] for b in L.simplices[k]]
        for m in range(K.dim_bound + 1)
        for k in range(L.dim_bound + 1)
    }
    return make_bisimplicial_set(
        bounds, cells,
        lambda m, k, i, ab: (K.face(m, i, ab[0]), ab[1]),
        lambda m, k, j, ab: (K.degen(m, j, ab[0]), ab[1]),
        lambda m, k, i, ab: (ab[0], L.face(k, i, ab[1])),
        lambda m, k, j, ab: (ab[0], L.degen(k, j, ab[1])),
    )
