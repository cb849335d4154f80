"""Enumerated mapping spaces between truncated simplicial sets.

A simplicial map is determined by its values on nondegenerate simplices,
and a candidate assignment extends to a map exactly when it commutes
with faces (degeneracy compatibility is then automatic).  `CellMap`
stores only those values and evaluates everywhere else by peeling
degeneracies; `enumerate_cell_maps` backtracks over nondegenerate cells
in increasing degree, checking faces incrementally so dead branches die
early.  Function complexes are built on top: their k-simplices are maps
out of a product with the standard k-simplex, with faces and
degeneracies given by precomposition in the simplex coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import TruncationError
from .simplicial import (
    SimplicialMap,
    TruncatedSimplicialSet,
    coface_tuple,
    codegeneracy_tuple,
    make_simplicial_set,
    product,
    standard_simplex,
)
from .util import as_budget, canon_key


class CellMap:
    """A simplicial map stored by its values on nondegenerate cells.

    `values` maps pairs (degree, cell) to target cells, with a key for
    every nondegenerate cell of the source.  Everything else is derived:
    the value on a degenerate cell is the matching degeneracy of the
    value on its nondegenerate support.
    """

    __slots__ = ("source", "target", "values", "_key")

    def __init__(self, source, target, values):
        self.source = source
        self.target = target
        self.values = dict(values)
        self._key = None

    def eval(self, n, x):
        got = self.values.get((n, x))
        if got is not None or (n, x) in self.values:
            return got
        j, y = self.source.degenerate_preimage(n, x)
        return self.target.degen(n - 1, j, self.eval(n - 1, y))

    def __call__(self, n, x):
        return self.eval(n, x)

    def key(self):
        """Canonical hashable form: the sorted tuple of value pairs."""
        if self._key is None:
            self._key = tuple(sorted(self.values.items(),
                                     key=lambda kv: canon_key(kv[0])))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, CellMap):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def as_simplicial_map(self):
        comps = {
            n: {x: self.eval(n, x) for x in self.source.simplices[n]}
            for n in range(self.source.dim_bound + 1)
        }
        return SimplicialMap(self.source, self.target, comps)

    def precompose(self, g):
        """The cell map self o g, for g a SimplicialMap into self's source."""
        src = g.source
        vals = {}
        for n in range(src.dim_bound + 1):
            for x in src.nondegenerate(n):
                vals[(n, x)] = self.eval(n, g.apply(n, x))
        return CellMap(src, self.target, vals)

    def postcompose(self, f):
        """The cell map f o self, for f a SimplicialMap out of self's target."""
        vals = {k: f.apply(k[0], v) for k, v in self.values.items()}
        return CellMap(self.source, f.target, vals)

    def __repr__(self):
        return "CellMap(%d cells)" % len(self.values)


def cell_map_from_key(source, target, key):
    return CellMap(source, target, dict(key))


def enumerate_cell_maps(A, X, budget=None, constraint=None, partial=None,
                        first_only=False):
    """All simplicial maps A -> X, as CellMaps, in canonical order.

    Backtracks over the nondegenerate cells of A in increasing degree.
    A candidate value for an n-cell must have the already-determined
    faces; `constraint(n, cell, value)` may veto it further.  `partial`
    pins values on chosen nondegenerate cells (they are still checked).
    Every candidate inspection spends one step of `budget`.
    """
    budget = as_budget(budget)
    cells = []
    for n in range(A.dim_bound + 1):
        cells.extend((n, x) for x in A.nondegenerate(n))
    partial = dict(partial or {})
    found = []
    assignment = {}

    def eval_partial(n, x):
        if (n, x) in assignment:
            return assignment[(n, x)]
        j, y = A.degenerate_preimage(n, x)
        return X.degen(n - 1, j, eval_partial(n - 1, y))

    def extend(idx):
        if idx == len(cells):
            found.append(CellMap(A, X, assignment))
            return first_only
        n, x = cells[idx]
        if (n, x) in partial:
            candidates = (partial[(n, x)],)
        else:
            candidates = X.simplices[n]
        want = None
        if n > 0:
            want = tuple(eval_partial(n - 1, A.face(n, i, x)) for i in range(n + 1))
        for v in candidates:
            budget.spend()
            if not X.has(n, v):
                continue
            if want is not None and any(X.face(n, i, v) != want[i] for i in range(n + 1)):
                continue
            if constraint is not None and not constraint(n, x, v):
                continue
            assignment[(n, x)] = v
            if extend(idx + 1):
                return True
            del assignment[(n, x)]
        return False

    extend(0)
    return sorted(found, key=lambda m: canon_key(m.key()))


def find_isomorphism(A, X, budget=None):
    """A degreewise bijective map A -> X, or None.

    Quick cardinality screening first, then exhaustive search over
    candidate maps, keeping the first whose materialization is bijective
    in every degree.
    """
    for n in range(A.dim_bound + 1):
        if A.simplex_count(n) != X.simplex_count(n):
            return None
    for m in enumerate_cell_maps(A, X, budget=budget):
        sm = m.as_simplicial_map()
        if sm.is_bijective():
            return sm
    return None


# ---------------------------------------------------------------------------
# maps between standard simplices and between products
# ---------------------------------------------------------------------------

def simplex_operator_map(alpha, n, dim_bound):
    """The map of standard simplices induced by a monotone tuple.

    `alpha` is the value tuple of a monotone map [m] -> [n]; the result
    is the SimplicialMap Delta[m] -> Delta[n] postcomposing every cell
    with it.
    """
    m = len(alpha) - 1
    src = standard_simplex(m, dim_bound)
    tgt = standard_simplex(n, dim_bound)
    comps = {
        k: {t: tuple(alpha[v] for v in t) for t in src.simplices[k]}
        for k in range(dim_bound + 1)
    }
    return SimplicialMap(src, tgt, comps)


def simplex_coface_map(i, n, dim_bound):
    """Delta[n-1] -> Delta[n] hitting everything except vertex i."""
    return simplex_operator_map(coface_tuple(i, n), n, dim_bound)


def simplex_codegeneracy_map(j, n, dim_bound):
    """Delta[n+1] -> Delta[n] collapsing the edge (j, j+1)."""
    return simplex_operator_map(codegeneracy_tuple(j, n), n, dim_bound)


def product_map(f, g, P=None, Q=None):
    """f x g on the degreewise products of the endpoints.

    P and Q may supply already-built ProductResults for the source and
    target products; otherwise they are constructed here.
    """
    if P is None:
        P = product(f.source, g.source)
    if Q is None:
        Q = product(f.target, g.target)
    N = P.space.dim_bound
    comps = {
        n: {ab: (f.apply(n, ab[0]), g.apply(n, ab[1])) for ab in P.space.simplices[n]}
        for n in range(N + 1)
    }
    return SimplicialMap(P.space, Q.space, comps)


# ---------------------------------------------------------------------------
# function complexes
# ---------------------------------------------------------------------------

@dataclass
class FunctionComplexResult:
    """A truncated mapping space together with its bookkeeping.

    space : TruncatedSimplicialSet
        Degree-k simplices are canonical keys of maps A x Delta[k] -> X.
    maps : dict
        (k, key) -> CellMap recovering the actual map.
    products : dict
        k -> ProductResult for A x Delta[k], shared with callers that
        need to build further maps over the same products.
    """

    space: TruncatedSimplicialSet
    maps: dict = field(default_factory=dict)
    products: dict = field(default_factory=dict)


def function_complex(A, X, k_max, over=None, budget=None, constraint=None):
    """The mapping space [A, X] up to simplicial degree k_max.

    A degree-k simplex is a simplicial map A x Delta[k] -> X; the i-th
    face precomposes with id x d^i and the j-th degeneracy with
    id x s^j.  When `over=(q, base)` is given, only maps F with
    q o F = base o proj1 are kept, which computes the fiberwise mapping
    space over a fixed base map.  An extra `constraint(k, n, cell, v)`
    filters candidate values further; it must carve out a subobject
    closed under the structure maps.

    The dimension bound of A must leave room for the products: it needs
    top_nondegenerate(A) + k_max <= A.dim_bound, and X must be stored at
    least as deep.  Anything less raises TruncationError rather than
    silently clamping.
    """
    budget = as_budget(budget)
    top = A.top_nondegenerate()
    need = max(top, 0) + k_max
    if A.dim_bound < need:
        raise TruncationError(
            "mapping space needs dim_bound >= %d on the source (top cell %d + %d), got %d"
            % (need, top, k_max, A.dim_bound))
    if X.dim_bound < A.dim_bound:
        raise TruncationError(
            "mapping space needs the target stored to dim_bound %d, got %d"
            % (A.dim_bound, X.dim_bound))
    if X.dim_bound > A.dim_bound:
        from .simplicial import truncate
        X = truncate(X, A.dim_bound)
    if over is not None:
        q, base = over

    products = {k: product(A, standard_simplex(k, A.dim_bound))
                for k in range(k_max + 1)}
    maps = {}
    by_degree = {}
    for k in range(k_max + 1):
        Pk = products[k].space

        def keep(n, cell, v, _k=k):
            if over is not None and q.apply(n, v) != base.apply(n, cell[0]):
                return False
            if constraint is not None and not constraint(_k, n, cell, v):
                return False
            return True

        for m in enumerate_cell_maps(Pk, X, budget=budget, constraint=keep):
            maps[(k, m.key())] = m
        by_degree[k] = [key for (kk, key) in maps if kk == k]

    id_A = SimplicialMap.identity(A)
    op_face = {}
    op_degen = {}
    for k in range(1, k_max + 1):
        for i in range(k + 1):
            d = simplex_coface_map(i, k, A.dim_bound)
            op_face[(k, i)] = product_map(id_A, d, products[k - 1], products[k])
    for k in range(k_max):
        for j in range(k + 1):
            s = simplex_codegeneracy_map(j, k, A.dim_bound)
            op_degen[(k, j)] = product_map(id_A, s, products[k + 1], products[k])

    def face_rule(k, i, key):
        F = maps[(k, key)]
        G = F.precompose(op_face[(k, i)])
        got = G.key()
        assert (k - 1, got) in maps, "face of a mapping-space simplex left the space"
        return got

    def degen_rule(k, j, key):
        F = maps[(k, key)]
        G = F.precompose(op_degen[(k, j)])
        got = G.key()
        assert (k + 1, got) in maps, "degeneracy of a mapping-space simplex left the space"
        return got

    space = make_simplicial_set(k_max, by_degree, face_rule, degen_rule)
    return FunctionComplexResult(space, maps, products)
