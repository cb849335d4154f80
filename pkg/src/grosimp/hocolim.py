"""Bar construction over the base nerve, strict colimits, and homotopy
colimits of diagrams.

The pipeline marks each value's equivalences, forms the bar object
whose simplices pair a base chain with a simplex of the value at the
chain's first vertex, and localizes at the edges whose value part is
marked.  The comparison into the total space and the degreewise count
reports are the instruments the tests use to watch each stage.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import chain_endpoints, nerve
from .diagram import Diagram, flat_diagram, mark_equivalences_diagram, tensor_with_flat
from .grothendieck import marked_grothendieck_total
from .marked import MarkedMap, MarkedSimplicialSet, flat, localize, marked_product
from .simplicial import SimplicialMap, make_simplicial_set
from .util import UnionFind, canon_sorted


# ---------------------------------------------------------------------------
# the bar construction
# ---------------------------------------------------------------------------

@dataclass
class BarResult:
    marked: MarkedSimplicialSet
    space: object
    projection: SimplicialMap
    nerve: object


def bar_construction(F, dim_bound=None):
    """Pairs of a base chain and a simplex of the value at its first
    vertex.

    The zeroth face moves the value simplex forward along the chain's
    first morphism; every other face and degeneracy acts on the two
    parts separately.  An edge is marked exactly when its value part
    is, which covers all degenerate edges since the diagram's marked
    values contain theirs.  Requires a marked diagram; flatten or mark
    equivalences first.
    """
    if not F.marked:
        raise ValueError("bar construction needs a marked diagram; "
                         "flatten or mark equivalences first")
    C = F.base
    N = F.dim_bound if dim_bound is None else dim_bound
    ND = nerve(C, N)

    def first(n, sigma):
        return chain_endpoints(C, n, sigma)[0]

    by_degree = {
        n: [(sigma, x)
            for sigma in ND.simplices[n]
            for x in F.value(first(n, sigma)).simplices[n]]
        for n in range(N + 1)
    }

    def face_rule(n, i, cell):
        sigma, x = cell
        c0 = first(n, sigma)
        fs = ND.face(n, i, sigma)
        if i == 0:
            moved = F.structure_map(sigma[0]).apply(n - 1,
                                                    F.value(c0).face(n, 0, x))
            return (fs, moved)
        return (fs, F.value(c0).face(n, i, x))

    def degen_rule(n, j, cell):
        sigma, x = cell
        c0 = first(n, sigma)
        return (ND.degen(n, j, sigma), F.value(c0).degen(n, j, x))

    space = make_simplicial_set(N, by_degree, face_rule, degen_rule)
    marked = [cell for cell in space.simplices.get(1, ())
              if cell[1] in F.marked_value(first(1, cell[0])).marked]
    projection = SimplicialMap(space, ND, {
        n: {cell: cell[0] for cell in space.simplices[n]}
        for n in range(N + 1)
    })
    return BarResult(MarkedSimplicialSet(space, marked), space, projection, ND)


def bar_vertex_fiber_cells(F, bar, d):
    """Degree -> bar simplices lying over the totally degenerate chain
    at a base object."""
    N = bar.space.dim_bound
    out = {}
    for m in range(N + 1):
        sigma_m = bar.nerve.act(0, d, (0,) * (m + 1))
        out[m] = [cell for cell in bar.space.simplices[m]
                  if cell[0] == sigma_m]
    return out


# ---------------------------------------------------------------------------
# the comparison into the total space
# ---------------------------------------------------------------------------

@dataclass
class ComparisonResult:
    mapping: MarkedMap
    source: MarkedSimplicialSet
    target: MarkedSimplicialSet
    bar: BarResult
    total: object
    injective_degrees: tuple
    defects: tuple


def iota_comparison(F, dim_bound=None):
    """Bar object into the total space, over the base nerve.

    A pair (sigma, x) goes to the chain of forward transports of the
    front restrictions of x.  Marking is preserved because the edge
    case transports the whole value part.  Injectivity is reported
    degreewise, not assumed: collapsing structure maps can identify
    distinct value parts.
    """
    bar = bar_construction(F, dim_bound)
    marked_total, total = marked_grothendieck_total(F, dim_bound)
    N = bar.space.dim_bound
    comps = {}
    defects = []
    for n in range(N + 1):
        table = {}
        for cell in bar.space.simplices[n]:
            sigma, x = cell
            V = F.value(chain_endpoints(F.base, n, sigma)[0])
            bs = tuple(
                F.transport(n, sigma, 0, t).apply(t, V.act(n, x, tuple(range(t + 1))))
                for t in range(n + 1)
            )
            table[cell] = (sigma, bs)
            if not total.space.has(n, (sigma, bs)):
                defects.append("degree %d: image of %r is not a chain" % (n, cell))
        comps[n] = table
    mapping = SimplicialMap(bar.space, total.space, comps)
    injective = tuple(
        len(set(comps[n].values())) == len(comps[n]) for n in range(N + 1)
    )
    for e in bar.marked.marked:
        if mapping.apply(1, e) not in marked_total.marked:
            defects.append("marking lost at %r" % (e,))
    for n in range(N + 1):
        for cell in bar.space.simplices[n]:
            if total.projection.apply(n, comps[n][cell]) != bar.projection.apply(n, cell):
                defects.append("degree %d: projections disagree at %r" % (n, cell))
    marked_mapping = MarkedMap(bar.marked, marked_total, mapping)
    return ComparisonResult(marked_mapping, bar.marked, marked_total, bar,
                            total, injective, tuple(defects))


# ---------------------------------------------------------------------------
# strict colimits
# ---------------------------------------------------------------------------

@dataclass
class ColimResult:
    space: object
    injections: dict
    classes: dict


def colim_diagram(X):
    """Degreewise quotient of the disjoint union of the values by the
    structure-map relation, in one union-find pass per degree.

    Representatives are the canonically least members of their classes;
    the relation is face-closed, so faces and degeneracies descend.
    """
    C = X.base
    N = X.dim_bound
    reps = {}
    for n in range(N + 1):
        uf = UnionFind()
        for d in C.objects:
            for x in X.value(d).simplices[n]:
                uf.add((d, x))
        for f in C.morphisms:
            a, b = C.src[f], C.tgt[f]
            g = X.structure_map(f)
            for x in X.value(a).simplices[n]:
                uf.union((a, x), (b, g.apply(n, x)))
        table = {}
        for members in uf.classes().values():
            rep = canon_sorted(members)[0]
            for m in members:
                table[m] = rep
        reps[n] = table
    by_degree = {n: canon_sorted(set(reps[n].values())) for n in range(N + 1)}

    def face_rule(n, i, rep):
        d, x = rep
        return reps[n - 1][(d, X.value(d).face(n, i, x))]

    def degen_rule(n, j, rep):
        d, x = rep
        return reps[n + 1][(d, X.value(d).degen(n, j, x))]

    space = make_simplicial_set(N, by_degree, face_rule, degen_rule)
    injections = {
        d: SimplicialMap(X.value(d), space, {
            n: {x: reps[n][(d, x)] for x in X.value(d).simplices[n]}
            for n in range(N + 1)
        })
        for d in C.objects
    }
    return ColimResult(space, injections, reps)


def colim_marked(F):
    """Colimit of a marked diagram; a class is marked when any member
    is."""
    plain = Diagram(F.base,
                    {d: F.value(d) for d in F.base.objects},
                    {f: F.structure_map(f) for f in F.base.morphisms})
    res = colim_diagram(plain)
    marked = set()
    for d in F.base.objects:
        inj = res.injections[d]
        for e in F.marked_value(d).marked:
            marked.add(inj.apply(1, e))
    return MarkedSimplicialSet(res.space, marked), res


def colim_mediating(X, res, cocone, target):
    """The unique map out of the colimit matching a commuting cocone.

    `cocone` maps each base object to a SimplicialMap value -> target.
    Values are forced on representatives, and the defects collect every
    disagreement within a class, so an empty list certifies both
    existence and uniqueness.
    """
    C = X.base
    N = X.dim_bound
    defects = []
    for f in C.morphisms:
        a, b = C.src[f], C.tgt[f]
        g = X.structure_map(f)
        for n in range(N + 1):
            for x in X.value(a).simplices[n]:
                if cocone[b].apply(n, g.apply(n, x)) != cocone[a].apply(n, x):
                    defects.append("cocone does not commute along %r at %r" % (f, x))
    comps = {}
    for n in range(N + 1):
        table = {}
        for d in C.objects:
            for x in X.value(d).simplices[n]:
                rep = res.classes[n][(d, x)]
                value = cocone[d].apply(n, x)
                if rep in table and table[rep] != value:
                    defects.append(
                        "class of %r receives two values in degree %d" % (rep, n))
                table[rep] = value
        comps[n] = table
    return SimplicialMap(res.space, target, comps), defects


# ---------------------------------------------------------------------------
# the homotopy colimit
# ---------------------------------------------------------------------------

@dataclass
class HocolimResult:
    localized: object
    bar: BarResult
    diagram: Diagram


def hocolim(F, witness_depth=0):
    """Localize the bar object at the edges whose value part is marked.

    A plain diagram first gets its equivalences marked objectwise, so
    the inverted edges are exactly the bar edges that move through an
    invertible value edge; a marked diagram keeps the caller's choice.
    """
    if not F.marked:
        F = mark_equivalences_diagram(F, witness_depth)
    bar = bar_construction(F)
    return HocolimResult(localize(bar.marked), bar, F)


@dataclass
class CountReport:
    colim_counts: tuple
    hocolim_counts: tuple
    marked_count: int


def colimit_comparison_counts(F, witness_depth=0):
    """Degreewise sizes of the strict colimit against the localized
    pipeline output, with the number of inverted edges.

    Reported, not judged: whether the two ever agree beyond the easy
    cases is left to the caller reading the numbers.
    """
    plain = F
    if F.marked:
        plain = Diagram(F.base,
                        {d: F.value(d) for d in F.base.objects},
                        {f: F.structure_map(f) for f in F.base.morphisms})
    strict = colim_diagram(plain)
    ho = hocolim(F, witness_depth)
    N = strict.space.dim_bound
    return CountReport(
        tuple(strict.space.simplex_count(n) for n in range(N + 1)),
        tuple(ho.localized.space.simplex_count(n) for n in range(N + 1)),
        len(ho.bar.marked.marked),
    )


# ---------------------------------------------------------------------------
# tensor compatibility
# ---------------------------------------------------------------------------

@dataclass
class TensorReport:
    ok: bool
    mapping: SimplicialMap
    left: MarkedSimplicialSet
    right: MarkedSimplicialSet
    defects: tuple


def tensor_compat_check(F, K):
    """Total space of (diagram tensor flat K) against (total space of
    the diagram) times flat K.

    The second components of a compatible chain are the front
    restrictions of the last one, so dropping all but the last is a
    bijection; the report checks it degreewise together with both
    markings and the simplicial structure.
    """
    if not F.marked:
        F = flat_diagram(F)
    FK = tensor_with_flat(F, K)
    left_marked, left_total = marked_grothendieck_total(FK)
    right_total_marked, right_total = marked_grothendieck_total(F)
    right_marked, prod = marked_product(right_total_marked, flat(K))
    N = left_total.space.dim_bound
    comps = {}
    defects = []
    for n in range(N + 1):
        table = {}
        for cell in left_total.space.simplices[n]:
            sigma, cs = cell
            xs = tuple(c[0] for c in cs)
            t = cs[-1][1]
            table[cell] = ((sigma, xs), t)
        comps[n] = table
        if len(set(table.values())) != len(table):
            defects.append("degree %d: not injective" % n)
        if set(table.values()) != set(prod.space.simplices[n]):
            defects.append("degree %d: not onto the product" % n)
    mapping = SimplicialMap(left_total.space, prod.space, comps)
    for n in range(1, N + 1):
        for cell in left_total.space.simplices[n]:
            for i in range(n + 1):
                if comps[n - 1][left_total.space.face(n, i, cell)] != \
                        prod.space.face(n, i, comps[n][cell]):
                    defects.append("degree %d: face %d breaks at %r" % (n, i, cell))
    for n in range(N):
        for cell in left_total.space.simplices[n]:
            for j in range(n + 1):
                if comps[n + 1][left_total.space.degen(n, j, cell)] != \
                        prod.space.degen(n, j, comps[n][cell]):
                    defects.append("degree %d: degeneracy %d breaks at %r"
                                   % (n, j, cell))
    left_edges_marked = {comps[1][e] for e in left_marked.marked} \
        if N >= 1 else set()
    if N >= 1 and left_edges_marked != set(right_marked.marked):
        defects.append("markings disagree across the comparison")
    return TensorReport(not defects, mapping, left_marked, right_marked,
                        tuple(defects))
