"""Gerbes over nerve simplices, the total space they assemble into, the
relative nerve, and the verified comparison between the two.

A gerbe over an n-chain sigma is stored minimally: a degree-k simplex
is the tuple (beta_0, ..., beta_n) of its iterated last-face top
components, beta_j a map Delta[j] x Delta[k] -> value(vertex j), with
each consecutive pair compatible: transporting beta_j forward along the
chain's (j+1)-st morphism agrees with restricting beta_{j+1} away from
its last vertex.  The remaining data of the recursive pullback is
redundant once the face maps are required to satisfy the simplicial
identities, and keeping it would break the degreewise bijection with
the relative nerve whenever a structure map is non-injective.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .category import nerve, nerve_map, slice_category
from .errors import TruncationError
from .homs import CellMap, enumerate_cell_maps, function_complex
from .marked import MarkedMap, MarkedSimplicialSet, marked_pullback, sharp
from .simplicial import (
    SimplicialMap,
    codegeneracy_tuple,
    coface_tuple,
    make_simplicial_set,
    product,
    pullback,
    standard_simplex,
    truncate,
)
from .util import as_budget


# ---------------------------------------------------------------------------
# gerbes
# ---------------------------------------------------------------------------

class GerbeWorkspace:
    """Shared caches for gerbe enumeration across one diagram.

    Chain components are enumerated level by level; the possible
    successors of a component depend only on the morphism being crossed
    and the component's values, so they are cached by (morphism, level,
    degree, key) and shared by every simplex of the base nerve.  Cached
    entries store plain value dictionaries because ambient bounds can
    vary across workspaces while the nondegenerate cells, and hence the
    keys, do not.

    All product spaces inside one workspace share the ambient degree
    bound so that chain components of neighbouring chain lengths can be
    precomposed against each other without running past a table.
    """

    def __init__(self, X, k_max, budget=None, ambient=None):
        self.X = X
        self.k_max = int(k_max)
        self.budget = as_budget(budget)
        self.ambient = int(k_max if ambient is None else ambient)
        self._products = {}
        self._simplices = {}
        self._level0 = {}
        self._children = {}

    def simplex(self, n, bound):
        key = (n, bound)
        if key not in self._simplices:
            self._simplices[key] = standard_simplex(n, bound)
        return self._simplices[key]

    def prod(self, j, k):
        key = (j, k)
        if key not in self._products:
            self._products[key] = product(self.simplex(j, self.ambient),
                                          self.simplex(k, self.ambient))
        return self._products[key]

    def first_factor_map(self, alpha, j_src, j_tgt, k):
        """The product map applying a monotone tuple on the first factor."""
        src = self.prod(j_src, k).space
        tgt = self.prod(j_tgt, k).space
        comps = {
            m: {tu: (tuple(alpha[v] for v in tu[0]), tu[1])
                for tu in src.simplices[m]}
            for m in range(src.dim_bound + 1)
        }
        return SimplicialMap(src, tgt, comps)

    def level0(self, d, k):
        """All maps Delta[0] x Delta[k] -> value(d), as value dicts."""
        key = (d, k)
        if key not in self._level0:
            space = self.prod(0, k).space
            found = enumerate_cell_maps(space, self.X.value(d), budget=self.budget)
            self._level0[key] = tuple(dict(m.values) for m in found)
        return self._level0[key]

    def children(self, f, j_next, k, parent):
        """Successor components across the morphism f.

        `parent` is the level j_next - 1 component as a CellMap; values
        on every product cell missing the new last vertex are forced by
        transporting the parent forward, so only the cells seeing that
        vertex are searched.
        """
        key = (f, j_next, k, parent.key())
        if key not in self._children:
            space = self.prod(j_next, k).space
            g = self.X.structure_map(f)
            target = self.X.value(self.X.base.tgt[f])
            pins = {}
            for m in range(space.dim_bound + 1):
                for tu in space.nondegenerate(m):
                    t, u = tu
                    if t[-1] != j_next:
                        pins[(m, tu)] = g.apply(m, parent.eval(m, (t, u)))
            found = enumerate_cell_maps(space, target, budget=self.budget,
                                        partial=pins)
            self._children[key] = tuple(dict(m.values) for m in found)
        return self._children[key]


@dataclass
class GerbeResult:
    """A gerbe's simplicial set together with its chain bookkeeping.

    space : TruncatedSimplicialSet of degree bound k_max whose
        simplices are tuples of component keys.
    chains : (k, id) -> tuple of CellMaps recovering the components.
    objects : the chain of base objects under sigma.
    """

    degree: int
    sigma: object
    k_max: int
    space: object
    chains: dict = field(default_factory=dict)
    objects: tuple = ()
    workspace: GerbeWorkspace | None = None

    def top_key(self, cid):
        return cid[-1]

    def face_transform(self, i):
        """Chain ids of this gerbe -> chain ids of the gerbe over the
        i-th face of sigma.  Components before position i survive;
        later ones restrict away from vertex i in their simplex factor.
        """
        n = self.degree
        ws = self.workspace
        out = {}
        for (k, cid), comps in self.chains.items():
            new = list(comps[:i])
            for m in range(i, n):
                op = ws.first_factor_map(coface_tuple(i, m + 1), m, m + 1, k)
                new.append(comps[m + 1].precompose(op))
            out[cid] = tuple(c.key() for c in new)
        return out

    def degen_transform(self, j):
        """Chain ids -> ids over the j-th degeneracy of sigma.
        Components after position j repeat vertex j in their simplex
        factor."""
        n = self.degree
        ws = self.workspace
        if ws.ambient < n + 1 + self.k_max:
            raise TruncationError(
                "degeneracy transform off a %d-chain needs ambient bound %d, got %d"
                % (n, n + 1 + self.k_max, ws.ambient))
        out = {}
        for (k, cid), comps in self.chains.items():
            new = list(comps[:j + 1])
            for m in range(j + 1, n + 2):
                op = ws.first_factor_map(codegeneracy_tuple(j, m - 1),
                                         m, m - 1, k)
                new.append(comps[m - 1].precompose(op))
            out[cid] = tuple(c.key() for c in new)
        return out


def gerbe(X, n, sigma, k_max, budget=None, workspace=None):
    """The gerbe of X over an n-simplex of the base nerve.

    Its degree-k simplices are compatible component chains; faces and
    degeneracies act on the Delta[k] coordinate of every component at
    once.  Requires the diagram stored to depth n + k_max.
    """
    if workspace is not None:
        ws = workspace
    else:
        ws = GerbeWorkspace(X, k_max, budget, ambient=n + 1 + k_max)
    if X.dim_bound < n + k_max:
        raise TruncationError(
            "gerbe over a %d-chain at depth %d needs diagram dim_bound >= %d, got %d"
            % (n, k_max, n + k_max, X.dim_bound))
    if ws.ambient < n + k_max:
        raise TruncationError(
            "gerbe over a %d-chain at depth %d needs ambient bound >= %d, got %d"
            % (n, k_max, n + k_max, ws.ambient))
    objects = X.chain_objects(n, sigma)
    chains = {}
    by_degree = {}
    for k in range(k_max + 1):
        partial = [
            (CellMap(ws.prod(0, k).space, X.value(objects[0]), dict(v)),)
            for v in ws.level0(objects[0], k)
        ]
        for j in range(1, n + 1):
            f = sigma[j - 1]
            extended = []
            for comps in partial:
                for vals in ws.children(f, j, k, comps[-1]):
                    child = CellMap(ws.prod(j, k).space,
                                    X.value(objects[j]), dict(vals))
                    extended.append(comps + (child,))
            partial = extended
        ids = []
        for comps in partial:
            cid = tuple(c.key() for c in comps)
            chains[(k, cid)] = comps
            ids.append(cid)
        by_degree[k] = ids

    id_ops = {}

    def component_op(k_src, k_tgt, alpha):
        """Precomposition with id x (operator) on every component."""
        ops = []
        for j in range(n + 1):
            src = ws.prod(j, k_src).space
            tgt = ws.prod(j, k_tgt).space
            comps = {
                m: {tu: (tu[0], tuple(alpha[v] for v in tu[1]))
                    for tu in src.simplices[m]}
                for m in range(src.dim_bound + 1)
            }
            ops.append(SimplicialMap(src, tgt, comps))
        return ops

    def face_rule(k, i, cid):
        key = ("d", k, i)
        if key not in id_ops:
            id_ops[key] = component_op(k - 1, k, coface_tuple(i, k))
        ops = id_ops[key]
        comps = chains[(k, cid)]
        new = tuple(c.precompose(op) for c, op in zip(comps, ops))
        nid = tuple(c.key() for c in new)
        if (k - 1, nid) not in chains:
            chains[(k - 1, nid)] = new
        return nid

    def degen_rule(k, j, cid):
        key = ("s", k, j)
        if key not in id_ops:
            id_ops[key] = component_op(k + 1, k, codegeneracy_tuple(j, k))
        ops = id_ops[key]
        comps = chains[(k, cid)]
        new = tuple(c.precompose(op) for c, op in zip(comps, ops))
        nid = tuple(c.key() for c in new)
        if (k + 1, nid) not in chains:
            chains[(k + 1, nid)] = new
        return nid

    space = make_simplicial_set(k_max, by_degree, face_rule, degen_rule)
    return GerbeResult(n, sigma, k_max, space, chains, objects, ws)


def gerbe_top_map(G, fc=None):
    """The projection onto the last chain component, as a map into the
    mapping space of the chain's final value.

    When `fc` (a FunctionComplexResult for the same endpoints) is
    given, the map lands in it with literally equal identifiers.
    """
    ws = G.workspace
    n = G.degree
    if fc is None:
        A = ws.simplex(n, n + G.k_max)
        fc = function_complex(A, ws.X.value(G.objects[-1]), G.k_max,
                              budget=ws.budget)
    comps = {
        k: {cid: cid[-1] for cid in G.space.simplices[k]}
        for k in range(G.k_max + 1)
    }
    return SimplicialMap(G.space, fc.space, comps), fc


# ---------------------------------------------------------------------------
# the bisimplicial assembly
# ---------------------------------------------------------------------------

@dataclass
class GrothendieckSpaceResult:
    space: object
    gerbes: dict
    projection: object


def grothendieck_space(X, bounds, budget=None):
    """Gerbes over all nerve simplices, assembled bisimplicially.

    Horizontal degree is the nerve degree, vertical the gerbes' own;
    horizontal faces restrict chains along the base face, horizontal
    degeneracies repeat a chain vertex, and the vertical direction is
    each gerbe's internal structure.  Projects onto the box product of
    the base nerve with a point.
    """
    from .bisimplicial import BisimplicialMap, box_product, make_bisimplicial_set
    if isinstance(bounds, int):
        M = K = bounds
    else:
        M, K = bounds
    ws = GerbeWorkspace(X, K, budget, ambient=M + K)
    ND = nerve(X.base, M)
    gerbes = {}
    for m in range(M + 1):
        for sigma in ND.simplices[m]:
            gerbes[(m, sigma)] = gerbe(X, m, sigma, K, workspace=ws)
    cells = {
        (m, k): [(sigma, cid)
                 for sigma in ND.simplices[m]
                 for cid in gerbes[(m, sigma)].space.simplices[k]]
        for m in range(M + 1) for k in range(K + 1)
    }
    hface_tables = {}
    hdegen_tables = {}
    for (m, sigma), G in gerbes.items():
        for i in range(m + 1):
            if m >= 1:
                hface_tables[(m, sigma, i)] = G.face_transform(i)
        for j in range(m + 1):
            if m < M:
                hdegen_tables[(m, sigma, j)] = G.degen_transform(j)

    def hface_rule(m, k, i, cell):
        sigma, cid = cell
        return (ND.face(m, i, sigma), hface_tables[(m, sigma, i)][cid])

    def hdegen_rule(m, k, j, cell):
        sigma, cid = cell
        return (ND.degen(m, j, sigma), hdegen_tables[(m, sigma, j)][cid])

    def vface_rule(m, k, i, cell):
        sigma, cid = cell
        return (sigma, gerbes[(m, sigma)].space.face(k, i, cid))

    def vdegen_rule(m, k, j, cell):
        sigma, cid = cell
        return (sigma, gerbes[(m, sigma)].space.degen(k, j, cid))

    space = make_bisimplicial_set((M, K), cells, hface_rule, hdegen_rule,
                                  vface_rule, vdegen_rule)
    point = standard_simplex(0, K)
    base_box = box_product(ND, point)
    proj = BisimplicialMap(space, base_box, {
        (m, k): {cell: (cell[0], (0,) * (k + 1)) for cell in cells[(m, k)]}
        for (m, k) in cells
    })
    return GrothendieckSpaceResult(space, gerbes, proj)


# ---------------------------------------------------------------------------
# the total space
# ---------------------------------------------------------------------------

@dataclass
class TotalSpaceResult:
    space: object
    projection: SimplicialMap
    nerve: object


def grothendieck_total(X, dim_bound=None):
    """The simplicial set of chains of compatible value simplices.

    An n-simplex is a base n-chain together with one j-simplex of the
    value at each chain vertex, each transporting forward to the last
    face of the next.  This is exactly the degree-zero gerbe data, so no
    mapping spaces are materialized.
    """
    N = X.dim_bound if dim_bound is None else dim_bound
    if N > X.dim_bound:
        raise TruncationError(
            "total space at dim_bound %d needs diagram values at least that deep"
            % N)
    ND = nerve(X.base, N)
    by_degree = {}
    for n in range(N + 1):
        cells = []
        for sigma in ND.simplices[n]:
            objects = X.chain_objects(n, sigma)
            partial = [(b0,) for b0 in X.value(objects[0]).simplices[0]]
            for j in range(1, n + 1):
                g = X.structure_map(sigma[j - 1])
                nxt = X.value(objects[j])
                by_last = {}
                for b in nxt.simplices[j]:
                    by_last.setdefault(nxt.face(j, j, b), []).append(b)
                partial = [bs + (b,)
                           for bs in partial
                           for b in by_last.get(g.apply(j - 1, bs[-1]), ())]
            cells.extend((sigma, bs) for bs in partial)
        by_degree[n] = cells

    def face_rule(n, i, cell):
        sigma, bs = cell
        fs = ND.face(n, i, sigma)
        if i == n:
            return (fs, bs[:-1])
        values = [X.value(d) for d in X.chain_objects(n, sigma)]
        new = bs[:i] + tuple(values[m].face(m, i, bs[m]) for m in range(i + 1, n + 1))
        return (fs, new)

    def degen_rule(n, j, cell):
        sigma, bs = cell
        values = [X.value(d) for d in X.chain_objects(n, sigma)]
        new = bs[:j + 1] + tuple(values[m - 1].degen(m - 1, j, bs[m - 1])
                                 for m in range(j + 1, n + 2))
        return (ND.degen(n, j, sigma), new)

    space = make_simplicial_set(N, by_degree, face_rule, degen_rule)
    projection = SimplicialMap(space, ND, {
        n: {cell: cell[0] for cell in space.simplices[n]} for n in range(N + 1)
    })
    return TotalSpaceResult(space, projection, ND)


def marked_grothendieck_total(F, dim_bound=None):
    """Total space of a marked diagram; an edge is marked exactly when
    its component at the target vertex is marked there."""
    total = grothendieck_total(F, dim_bound)
    marked = []
    for cell in total.space.simplices.get(1, ()):
        sigma, bs = cell
        tgt = F.chain_objects(1, sigma)[1]
        if bs[1] in F.marked_value(tgt).marked:
            marked.append(cell)
    return MarkedSimplicialSet(total.space, marked), total


# ---------------------------------------------------------------------------
# the relative nerve
# ---------------------------------------------------------------------------

def _subsets(n):
    """Nonempty subsets of 0..n as sorted tuples, smallest first."""
    out = []
    for mask in range(1, 1 << (n + 1)):
        out.append(tuple(v for v in range(n + 1) if mask >> v & 1))
    out.sort(key=lambda J: (len(J), J))
    return out


@dataclass
class RelativeNerveResult:
    space: object
    projection: SimplicialMap
    nerve: object


def relative_nerve(X, dim_bound=None):
    """Chains decorated with one value simplex per nonempty vertex
    subset.

    An n-simplex is (sigma, tau) where tau assigns to each nonempty
    J of the chain's vertices a (|J|-1)-simplex of the value at max J;
    dropping a non-maximal vertex must restrict the simplex, and
    dropping the maximum must transport the rest forward along the
    chain.  tau is stored as a sorted tuple of (J, simplex) pairs.
    """
    N = X.dim_bound if dim_bound is None else dim_bound
    if N > X.dim_bound:
        raise TruncationError(
            "relative nerve at dim_bound %d needs diagram values at least that deep"
            % N)
    ND = nerve(X.base, N)
    by_degree = {}
    for n in range(N + 1):
        cells = []
        subsets = _subsets(n)
        for sigma in ND.simplices[n]:
            objects = X.chain_objects(n, sigma)
            assignments = [{}]
            for J in subsets:
                space_J = X.value(objects[J[-1]])
                deg = len(J) - 1
                extended = []
                for tau in assignments:
                    for cand in space_J.simplices[deg]:
                        ok = True
                        for pos, j in enumerate(J):
                            if len(J) == 1:
                                break
                            I = J[:pos] + J[pos + 1:]
                            if j != J[-1]:
                                if space_J.face(deg, pos, cand) != tau[I]:
                                    ok = False
                                    break
                            else:
                                trans = X.transport(n, sigma, I[-1], J[-1])
                                if space_J.face(deg, pos, cand) != trans.apply(deg - 1, tau[I]):
                                    ok = False
                                    break
                        if ok:
                            new = dict(tau)
                            new[J] = cand
                            extended.append(new)
                assignments = extended
            cells.extend(
                (sigma, tuple(sorted(tau.items())))
                for tau in assignments
            )
        by_degree[n] = cells

    def act_rule(n, cell, alpha):
        """Reindex a decorated chain along a monotone operator tuple."""
        sigma, tau_pairs = cell
        tau = dict(tau_pairs)
        new_sigma = ND.act(n, sigma, alpha)
        m = len(alpha) - 1
        objects = X.chain_objects(n, sigma)
        new_tau = {}
        for J in _subsets(m):
            img = tuple(sorted({alpha[v] for v in J}))
            pos = tuple(img.index(alpha[v]) for v in J)
            space_img = X.value(objects[img[-1]])
            new_tau[J] = space_img.act(len(img) - 1, tau[img], pos)
        return (new_sigma, tuple(sorted(new_tau.items())))

    def face_rule(n, i, cell):
        return act_rule(n, cell, coface_tuple(i, n))

    def degen_rule(n, j, cell):
        return act_rule(n, cell, codegeneracy_tuple(j, n))

    space = make_simplicial_set(N, by_degree, face_rule, degen_rule)
    projection = SimplicialMap(space, ND, {
        n: {cell: cell[0] for cell in space.simplices[n]} for n in range(N + 1)
    })
    return RelativeNerveResult(space, projection, ND)


def decoration_violations(X, n, cell):
    """Failures of the full subset-compatibility family on one simplex.

    Checks every nested pair of nonempty subsets, not only the
    codimension-one generators used during construction.
    """
    sigma, tau_pairs = cell
    tau = dict(tau_pairs)
    objects = X.chain_objects(n, sigma)
    out = []
    subsets = _subsets(n)
    for J in subsets:
        space_J = X.value(objects[J[-1]])
        for I in subsets:
            if not (set(I) <= set(J)) or I == J:
                continue
            pos = tuple(J.index(v) for v in I)
            restricted = space_J.act(len(J) - 1, tau[J], pos)
            trans = X.transport(n, sigma, I[-1], J[-1])
            if trans.apply(len(I) - 1, tau[I]) != restricted:
                out.append("subsets %r <= %r disagree" % (I, J))
    return out


def marked_relative_nerve(F, dim_bound=None):
    """Relative nerve of a marked diagram: the edge over a base edge is
    marked when its decorating edge at the target is marked there."""
    rel = relative_nerve(F, dim_bound)
    marked = []
    for cell in rel.space.simplices.get(1, ()):
        sigma, tau_pairs = cell
        tau = dict(tau_pairs)
        tgt = F.chain_objects(1, sigma)[1]
        if tau[(0, 1)] in F.marked_value(tgt).marked:
            marked.append(cell)
    return MarkedSimplicialSet(rel.space, marked), rel


# ---------------------------------------------------------------------------
# the comparison isomorphism
# ---------------------------------------------------------------------------

@dataclass
class IsoReport:
    ok: bool
    bijective_degrees: tuple
    defects: tuple
    counts: tuple


def canonical_iso(X, dim_bound=None):
    """Total space -> relative nerve: restrict the component at max J
    along the vertex inclusion of J.

    Both sides are constructed independently; the report records
    degreewise bijectivity, commutation with every face and degeneracy,
    and compatibility with the projections.
    """
    total = grothendieck_total(X, dim_bound)
    rel = relative_nerve(X, dim_bound)
    N = total.space.dim_bound
    comps = {}
    defects = []
    for n in range(N + 1):
        table = {}
        for cell in total.space.simplices[n]:
            sigma, bs = cell
            objects = X.chain_objects(n, sigma)
            tau = {}
            for J in _subsets(n):
                space_J = X.value(objects[J[-1]])
                tau[J] = space_J.act(J[-1], bs[J[-1]], J)
            image = (sigma, tuple(sorted(tau.items())))
            if not rel.space.has(n, image):
                defects.append("degree %d: image of %r is not a decorated chain"
                               % (n, cell))
            table[cell] = image
        comps[n] = table
    iso = SimplicialMap(total.space, rel.space, comps)
    bijective = []
    counts = []
    for n in range(N + 1):
        values = set(comps[n].values())
        counts.append((total.space.simplex_count(n), rel.space.simplex_count(n)))
        bij = (len(values) == len(comps[n])
               and values == set(rel.space.simplices[n]))
        bijective.append(bij)
        if not bij:
            defects.append("degree %d: not a bijection (%d cells to %d)"
                           % (n, len(comps[n]), rel.space.simplex_count(n)))
    for n in range(1, N + 1):
        for cell in total.space.simplices[n]:
            for i in range(n + 1):
                if comps[n - 1][total.space.face(n, i, cell)] != rel.space.face(n, i, iso.apply(n, cell)):
                    defects.append("degree %d: face %d does not commute at %r"
                                   % (n, i, cell))
    for n in range(N):
        for cell in total.space.simplices[n]:
            for j in range(n + 1):
                if comps[n + 1][total.space.degen(n, j, cell)] != rel.space.degen(n, j, iso.apply(n, cell)):
                    defects.append("degree %d: degeneracy %d does not commute at %r"
                                   % (n, j, cell))
    for n in range(N + 1):
        for cell in total.space.simplices[n]:
            if rel.projection.apply(n, iso.apply(n, cell)) != total.projection.apply(n, cell):
                defects.append("degree %d: projections disagree at %r" % (n, cell))
    report = IsoReport(not defects and all(bijective),
                       tuple(bijective), tuple(defects), tuple(counts))
    return iso, report, total, rel


# ---------------------------------------------------------------------------
# fibers
# ---------------------------------------------------------------------------

def classifying_map(B, n, sigma):
    """Delta[n] -> B picking out a simplex."""
    src = standard_simplex(n, B.dim_bound)
    comps = {
        m: {t: B.act(n, sigma, t) for t in src.simplices[m]}
        for m in range(B.dim_bound + 1)
    }
    return SimplicialMap(src, B, comps)


def fiber(p, n, sigma):
    """Pullback of p along the simplex sigma of its target."""
    return pullback(p, classifying_map(p.target, n, sigma))


def vertex_fiber_map(X, d, total=None):
    """The canonical comparison of a diagram value into the vertex fiber
    of the total space: front faces of a simplex make up the chain data
    over the degenerate base chain."""
    if total is None:
        total = grothendieck_total(X)
    fib = fiber(total.projection, 0, d)
    V = X.value(d)
    N = V.dim_bound
    comps = {}
    for m in range(N + 1):
        sigma_m = classifying_map(total.nerve, 0, d).apply(m, (0,) * (m + 1))
        table = {}
        for x in V.simplices[m]:
            bs = tuple(V.act(m, x, tuple(range(j + 1))) for j in range(m + 1))
            table[x] = ((sigma_m, bs), (0,) * (m + 1))
        comps[m] = table
    return SimplicialMap(V, fib.space, comps), fib


def relnerve_vertex_fiber_map(X, d, rel=None):
    """Diagram value into the vertex fiber of the relative nerve: the
    decoration on each subset is the matching front restriction."""
    if rel is None:
        rel = relative_nerve(X)
    fib = fiber(rel.projection, 0, d)
    V = X.value(d)
    N = V.dim_bound
    comps = {}
    for m in range(N + 1):
        sigma_m = classifying_map(rel.nerve, 0, d).apply(m, (0,) * (m + 1))
        table = {}
        for x in V.simplices[m]:
            tau = tuple(sorted((J, V.act(m, x, J)) for J in _subsets(m)))
            table[x] = ((sigma_m, tau), (0,) * (m + 1))
        comps[m] = table
    return SimplicialMap(V, fib.space, comps), fib


# ---------------------------------------------------------------------------
# adjoint fragments over the nerve
# ---------------------------------------------------------------------------

def left_adjoint_slice(Xp, q, C, d, dim_bound=None):
    """Marked pullback against the sharpened nerve of the over-slice.

    Xp is a marked object, q its marked structure map to the sharp
    nerve of C; the value at d restricts it over the arrows into d.
    """
    N = Xp.underlying.dim_bound if dim_bound is None else dim_bound
    sl = slice_category(C, d, "over")
    nm = nerve_map(sl.projection, N)
    sharp_slice = sharp(nm.source)
    sharp_base = q.target
    marked_nm = MarkedMap(sharp_slice, sharp_base, nm)
    value, pb = marked_pullback(q, marked_nm)
    return value, pb, sl


def right_adjoint_value(Y, q, C, d, k_max, budget=None):
    """Mapping space out of the under-slice nerve, over the base.

    Enumerates maps N(d/C) x Delta[k] -> Y whose projection to the
    nerve is the slice projection, degree by degree up to k_max.
    """
    N = Y.dim_bound
    sl = slice_category(C, d, "under")
    nm = nerve_map(sl.projection, N)
    A = nm.source
    return function_complex(A, Y, k_max, over=(q, nm), budget=budget), sl


def unit_map(F, d, k_max=None, budget=None):
    """The marked diagram value at d mapped into the mapping space of
    the under-slice nerve into the total space, over the base nerve.

    A k-simplex x goes to the map whose value on a slice chain and a
    simplex coordinate transports the matching restriction of x forward
    along the slice object at each vertex.
    """
    from .marked import marked_hom
    N = F.dim_bound
    sl = slice_category(F.base, d, "under")
    nm = nerve_map(sl.projection, N)
    A = nm.source
    top = A.top_nondegenerate()
    if k_max is None:
        k_max = N - max(top, 0)
    if N < max(top, 0) + k_max:
        raise TruncationError(
            "unit at %r needs dim_bound >= %d for mapping degree %d, got %d"
            % (d, max(top, 0) + k_max, k_max, N))
    marked_total, total = marked_grothendieck_total(F)
    hom = marked_hom(sharp(A), marked_total, k_max,
                     over=(total.projection, nm), budget=budget)
    V = F.marked_value(d)
    Vt = truncate(V.underlying, k_max)
    comps = {}
    for k in range(k_max + 1):
        prod_space = hom.products[k].space
        table = {}
        for x in Vt.simplices[k]:
            vals = {}
            for m in range(prod_space.dim_bound + 1):
                for cu in prod_space.nondegenerate(m):
                    chain, u = cu
                    base_chain = nm.apply(m, chain)
                    slice_objs = chain_endpoints_of_slice(sl, m, chain)
                    bs = []
                    for t in range(m + 1):
                        g_t = slice_objs[t]
                        xt = V.underlying.act(k, x, u[:t + 1])
                        bs.append(F.structure_map(g_t).apply(t, xt))
                    vals[(m, cu)] = (base_chain, tuple(bs))
            table[x] = CellMap(prod_space, total.space, vals).key()
        comps[k] = table
    mapping = SimplicialMap(Vt, hom.space, comps)
    source_marked = MarkedSimplicialSet(
        Vt, [e for e in V.marked if Vt.has(1, e)] if k_max >= 1 else
        Vt.simplices.get(1, ()))
    return MarkedMap(source_marked, hom.as_marked(), mapping), hom, total


def chain_endpoints_of_slice(sl, m, chain):
    """Slice objects visited by a chain in a slice category."""
    from .category import chain_endpoints
    return chain_endpoints(sl.category, m, chain)


def cotensor_over(A, Y, q, k_max, budget=None):
    """Mapping spaces relative to the base: maps out of A into Y whose
    projection is constant along A.

    Computed as the pullback of postcomposition with q against the
    map sending a base simplex to the projection-then-act composite.
    """
    fcY = function_complex(A, Y, k_max, budget=budget)
    B = q.target
    fcB = function_complex(A, B, k_max, budget=budget)
    post = SimplicialMap(fcY.space, fcB.space, {
        k: {key: fcY.maps[(k, key)].postcompose(q).key()
            for key in fcY.space.simplices[k]}
        for k in range(k_max + 1)
    })
    Bt = truncate(B, k_max)
    diag_comps = {}
    for k in range(k_max + 1):
        prod_space = fcB.products[k].space
        table = {}
        for rho in Bt.simplices[k]:
            vals = {
                (m, au): B.act(k, rho, au[1])
                for m in range(prod_space.dim_bound + 1)
                for au in prod_space.nondegenerate(m)
            }
            table[rho] = CellMap(prod_space, B, vals).key()
        diag_comps[k] = table
    diag = SimplicialMap(Bt, fcB.space, diag_comps)
    pb = pullback(post, diag)
    return pb, fcY, fcB
