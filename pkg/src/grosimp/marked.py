"""Marked simplicial sets and the interval localization.

A marking distinguishes a set of edges that always includes the
degenerate ones.  Localization glues one copy of the invertible
interval along each marked edge, making it invertible; the universal
property of that pushout is realized constructively by extending
equivalence witnesses over the interval, degree by degree, with a
bounded backtracking search above degree two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExtensionSearchError, MarkedEdgeError, TruncationError
from .homs import enumerate_cell_maps, function_complex
from .simplicial import (
    SimplicialMap,
    invertible_interval,
    is_weakly_increasing,
    make_simplicial_set,
    pullback,
    product,
    subcomplex,
)
from .util import canon_sorted


class MarkedSimplicialSet:
    """A simplicial set with a distinguished edge subset containing
    every degenerate edge."""

    def __init__(self, underlying, marked):
        self.underlying = underlying
        self.marked = frozenset(marked)

    @property
    def dim_bound(self):
        return self.underlying.dim_bound

    def violations(self):
        out = []
        edges = set(self.underlying.simplices.get(1, ()))
        for e in self.marked:
            if e not in edges:
                out.append("marked edge %r is not an edge" % (e,))
        for e in edges:
            if self.underlying.is_degenerate(1, e) and e not in self.marked:
                out.append("degenerate edge %r is not marked" % (e,))
        return out

    def __eq__(self, other):
        if not isinstance(other, MarkedSimplicialSet):
            return NotImplemented
        return self.underlying == other.underlying and self.marked == other.marked

    def __repr__(self):
        return "MarkedSimplicialSet(%r, %d marked)" % (self.underlying, len(self.marked))


class MarkedMap:
    """A simplicial map carrying marked edges to marked edges."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = mapping

    def apply(self, n, x):
        return self.mapping.apply(n, x)

    def violations(self):
        out = []
        for e in self.source.marked:
            if self.mapping.apply(1, e) not in self.target.marked:
                out.append("marked edge %r maps to an unmarked edge" % (e,))
        return out

    @staticmethod
    def identity(X):
        return MarkedMap(X, X, SimplicialMap.identity(X.underlying))

    def compose(self, other):
        return MarkedMap(other.source, self.target, self.mapping.compose(other.mapping))

    def __eq__(self, other):
        if not isinstance(other, MarkedMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.mapping == other.mapping)


def flat(S):
    """Mark exactly the degenerate edges."""
    return MarkedSimplicialSet(
        S, [e for e in S.simplices.get(1, ()) if S.is_degenerate(1, e)])


def sharp(S):
    """Mark every edge."""
    return MarkedSimplicialSet(S, S.simplices.get(1, ()))


def underlying(X):
    return X.underlying


def marked_product(X, Y):
    """Degreewise product; an edge is marked iff both components are."""
    P = product(X.underlying, Y.underlying)
    marked = [(a, b) for (a, b) in P.space.simplices.get(1, ())
              if a in X.marked and b in Y.marked]
    return MarkedSimplicialSet(P.space, marked), P


def marked_pullback(f, g):
    """Pullback of marked maps; an edge is marked iff both legs are."""
    P = pullback(f.mapping, g.mapping)
    marked = [(a, b) for (a, b) in P.space.simplices.get(1, ())
              if a in f.source.marked and b in g.source.marked]
    return MarkedSimplicialSet(P.space, marked), P


# ---------------------------------------------------------------------------
# equivalence edges
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceWitness:
    """Inverse edge plus the two triangles certifying invertibility.

    `source_triangle` has faces (inverse, unit at source, the edge);
    `target_triangle` has faces (the edge, unit at target, inverse).
    """

    inverse: object
    source_triangle: object
    target_triangle: object


@dataclass
class WordSearchAnswer:
    found: bool
    depth: int
    word: tuple | None


@dataclass
class EquivalenceReport:
    edge: object
    is_equivalence: bool
    witness: EquivalenceWitness | None
    word_search: WordSearchAnswer | None = None


def is_equivalence_edge(S, y, witness_depth=0):
    """Decide invertibility of an edge by the two-triangle criterion.

    Searches for an edge running the other way together with two
    2-simplices witnessing that both composites are degenerate; the
    lexicographically least witness is returned, which keeps every
    construction that consumes witnesses deterministic.  A positive
    `witness_depth` additionally runs a bounded word search in the
    edge-path category and records that answer separately; the verdict
    itself always comes from the triangle criterion.
    """
    if S.dim_bound < 2:
        raise TruncationError(
            "equivalence detection needs 2-simplices; dim_bound is %d" % S.dim_bound)
    src = S.face(1, 1, y)
    tgt = S.face(1, 0, y)
    unit_src = S.degen(0, 0, src)
    unit_tgt = S.degen(0, 0, tgt)
    witness = None
    for y_inv in S.simplices[1]:
        if S.face(1, 1, y_inv) != tgt or S.face(1, 0, y_inv) != src:
            continue
        tri_src = None
        for sig in S.simplices[2]:
            if (S.face(2, 0, sig) == y_inv and S.face(2, 2, sig) == y
                    and S.face(2, 1, sig) == unit_src):
                tri_src = sig
                break
        if tri_src is None:
            continue
        for beta in S.simplices[2]:
            if (S.face(2, 0, beta) == y and S.face(2, 2, beta) == y_inv
                    and S.face(2, 1, beta) == unit_tgt):
                witness = EquivalenceWitness(y_inv, tri_src, beta)
                break
        if witness is not None:
            break
    report = EquivalenceReport(y, witness is not None, witness)
    if witness_depth:
        report.word_search = _bounded_word_search(S, y, witness_depth)
    return report


def _bounded_word_search(S, y, depth):
    """Invertibility of y in the edge-path category, truncated to words
    of bounded length.

    Words are composable edge sequences; each 2-simplex identifies the
    word of its outer edges with its long edge.  The search closes that
    relation on all words up to length depth + 1 and looks for a
    reverse word cancelling y on both sides.  Failure means only "not
    found within the bound".
    """
    from .util import UnionFind
    cap = depth + 1
    by_start = {}
    for e in S.simplices[1]:
        by_start.setdefault(S.face(1, 1, e), []).append(e)
    words = [(e,) for e in S.simplices[1]]
    all_words = list(words)
    for _ in range(cap - 1):
        words = [w + (e,) for w in words for e in by_start.get(S.face(1, 0, w[-1]), ())]
        all_words.extend(words)
    uf = UnionFind()
    relations = [(S.face(2, 2, sig), S.face(2, 0, sig), S.face(2, 1, sig))
                 for sig in S.simplices[2]]
    for w in all_words:
        uf.add(w)
        for first, second, long_edge in relations:
            for pos in range(len(w) - 1):
                if w[pos] == first and w[pos + 1] == second:
                    uf.union(w, w[:pos] + (long_edge,) + w[pos + 2:])
    src = S.face(1, 1, y)
    tgt = S.face(1, 0, y)
    unit_src = (S.degen(0, 0, src),)
    unit_tgt = (S.degen(0, 0, tgt),)
    for w in all_words:
        if len(w) > depth:
            continue
        if S.face(1, 1, w[0]) != tgt or S.face(1, 0, w[-1]) != src:
            continue
        if len(w) + 1 > cap:
            continue
        if uf.find((y,) + w) == uf.find(unit_src) and uf.find(w + (y,)) == uf.find(unit_tgt):
            return WordSearchAnswer(True, depth, w)
    return WordSearchAnswer(False, depth, None)


def push_witness(g, witness):
    """Image of an equivalence witness under a simplicial map.

    Faces commute with g, so the image tuple is again a valid witness
    in the target; returned so callers can verify that directly.
    """
    return EquivalenceWitness(
        g.apply(1, witness.inverse),
        g.apply(2, witness.source_triangle),
        g.apply(2, witness.target_triangle),
    )


def mark_equivalences(S, witness_depth=0):
    """Mark exactly the edges passing the equivalence criterion."""
    marked = [e for e in S.simplices.get(1, ())
              if is_equivalence_edge(S, e, witness_depth).is_equivalence]
    return MarkedSimplicialSet(S, marked)


def mark_equivalences_map(g):
    """The marked map a plain map induces between marked-by-equivalence
    objects; valid because witnesses push forward along any map."""
    return MarkedMap(mark_equivalences(g.source), mark_equivalences(g.target), g)


def core(S):
    """The largest subcomplex all of whose edges are equivalences."""
    eq = {e for e in S.simplices.get(1, ())
          if is_equivalence_edge(S, e).is_equivalence}
    keep = {
        n: [x for x in S.simplices[n]
            if all(e in eq for e in S.edges_of(n, x))]
        for n in range(S.dim_bound + 1)
    }
    return subcomplex(S, keep)


# ---------------------------------------------------------------------------
# localization
# ---------------------------------------------------------------------------

@dataclass
class LocalizationResult:
    """The localized object with its bookkeeping.

    space : the localized simplicial set; cells are (0, x) for original
        simplices and (1, (e, w)) for the glued interval cells, where e
        is a marked edge and w a non-monotone 0/1 word.
    projection : the canonical degreewise-injective map from the
        original object.
    marked_image : images of the marked edges, each invertible in the
        localization by construction.
    glued : marked edge -> the glued copy of the invertible interval,
        as a simplicial map; these are the canonical inverses and are
        preferred by the universal construction when available.
    glued_by_image : same maps keyed by the image edge.
    """

    space: object
    projection: SimplicialMap
    marked_image: frozenset
    glued: dict
    glued_by_image: dict
    warnings: tuple = ()


def localize(X):
    """Glue one invertible interval along each marked edge.

    The interval inclusion is degreewise injective, so the pushout in
    degree n is the disjoint union of the original n-simplices with one
    copy of the non-monotone interval cells per marked edge.  Faces of
    glued cells fall back into the original object exactly when the
    face word becomes monotone.
    """
    S = X.underlying
    N = S.dim_bound
    warnings = ()
    if N < 2:
        warnings = ("dim_bound %d < 2: glued intervals carry no invertibility witnesses"
                    % N,)
    J = invertible_interval(N)
    marked = canon_sorted(X.marked)
    by_degree = {}
    for n in range(N + 1):
        cells = [(0, x) for x in S.simplices[n]]
        for e in marked:
            cells.extend((1, (e, w)) for w in J.simplices[n]
                         if not is_weakly_increasing(w))
        by_degree[n] = cells

    def resolve(e, w):
        if is_weakly_increasing(w):
            return (0, S.act(1, e, w))
        return (1, (e, w))

    def face_rule(n, i, cell):
        tag, payload = cell
        if tag == 0:
            return (0, S.face(n, i, payload))
        e, w = payload
        return resolve(e, w[:i] + w[i + 1:])

    def degen_rule(n, j, cell):
        tag, payload = cell
        if tag == 0:
            return (0, S.degen(n, j, payload))
        e, w = payload
        return (1, (e, w[:j + 1] + w[j:]))

    space = make_simplicial_set(N, by_degree, face_rule, degen_rule)
    projection = SimplicialMap(S, space, {
        n: {x: (0, x) for x in S.simplices[n]} for n in range(N + 1)
    })
    glued = {}
    glued_by_image = {}
    for e in marked:
        comps = {n: {w: resolve(e, w) for w in J.simplices[n]} for n in range(N + 1)}
        m = SimplicialMap(J, space, comps)
        glued[e] = m
        glued_by_image[(0, e)] = m
    return LocalizationResult(
        space, projection, frozenset((0, e) for e in marked),
        glued, glued_by_image, warnings)


def localize_map(g, loc_source, loc_target):
    """The map localizations inherit from a marked map.

    Original cells map through g; a glued cell over a marked edge e
    lands in the glued copy over g(e), which exists because marked maps
    preserve markings.
    """
    comps = {}
    for n in range(loc_source.space.dim_bound + 1):
        table = {}
        for cell in loc_source.space.simplices[n]:
            tag, payload = cell
            if tag == 0:
                table[cell] = (0, g.apply(n, payload))
            else:
                e, w = payload
                table[cell] = (1, (g.apply(1, e), w))
        comps[n] = table
    return SimplicialMap(loc_source.space, loc_target.space, comps)


def interval_extension(T, report_edge, witness, budget=None):
    """Extend an equivalence witness to a map from the whole interval.

    The witness pins the map on every nondegenerate interval cell up to
    degree two; the alternating cells above that are found by
    backtracking.  Raises ExtensionSearchError when no extension exists
    within the dimension bound.
    """
    N = T.dim_bound
    J = invertible_interval(N)
    y = report_edge
    src = T.face(1, 1, y)
    tgt = T.face(1, 0, y)
    partial = {
        (0, (0,)): src,
        (0, (1,)): tgt,
        (1, (0, 1)): y,
        (1, (1, 0)): witness.inverse,
    }
    if N >= 2:
        partial[(2, (0, 1, 0))] = witness.source_triangle
        partial[(2, (1, 0, 1))] = witness.target_triangle
    found = enumerate_cell_maps(J, T, budget=budget, partial=partial,
                                first_only=True)
    if not found:
        raise ExtensionSearchError(
            "no interval extension for edge %r within dim_bound %d" % (y, N),
            edge=y)
    return found[0].as_simplicial_map()


def localization_universal(X, G, budget=None, localization=None,
                           preferred_extensions=None):
    """The unique map out of the localization induced by G.

    G must carry every marked edge to an edge invertible in its target;
    the offending edge is reported otherwise.  On original cells the
    result is G; on the interval glued along a marked edge e it is the
    interval extension of the canonical witness for G(e), or a caller-
    supplied preferred extension (used to make retraction identities
    exact when the target is itself a localization).
    """
    loc = localization if localization is not None else localize(X)
    T = G.target
    preferred = preferred_extensions or {}
    extensions = {}
    for e in canon_sorted(X.marked):
        if e in preferred:
            extensions[e] = preferred[e]
            continue
        y = G.apply(1, e)
        report = is_equivalence_edge(T, y)
        if not report.is_equivalence:
            raise MarkedEdgeError(
                "marked edge %r maps to %r, which is not invertible in the target"
                % (e, y), edge=e)
        extensions[e] = interval_extension(T, y, report.witness, budget=budget)
    comps = {}
    for n in range(loc.space.dim_bound + 1):
        table = {}
        for cell in loc.space.simplices[n]:
            tag, payload = cell
            if tag == 0:
                table[cell] = G.apply(n, payload)
            else:
                e, w = payload
                table[cell] = extensions[e].apply(n, w)
        comps[n] = table
    return SimplicialMap(loc.space, T, comps)


# ---------------------------------------------------------------------------
# the adjunction between localizing and marking equivalences
# ---------------------------------------------------------------------------

def adjunction_unit(X, localization=None):
    """X -> equivalences-marked localization, over the projection."""
    loc = localization if localization is not None else localize(X)
    target = mark_equivalences(loc.space)
    return MarkedMap(X, target, loc.projection)


def adjunction_counit(S, source_localization=None, budget=None):
    """Localizing the equivalence marking retracts back onto S.

    When S is itself a localization, passing its LocalizationResult
    reuses the glued intervals as the preferred extensions, making the
    composite with the localized unit the exact identity.

    Returns the retraction together with the localization of the
    equivalence-marked object it is defined on.
    """
    ES = mark_equivalences(S)
    loc = localize(ES)
    preferred = {}
    if source_localization is not None:
        for image_edge, m in source_localization.glued_by_image.items():
            if image_edge in ES.marked:
                preferred[image_edge] = m
    U = localization_universal(ES, SimplicialMap.identity(S), budget=budget,
                               localization=loc, preferred_extensions=preferred)
    return U, loc


def adjunction_maps(obj, **kwargs):
    """Unit for a marked object, counit for a plain one."""
    if isinstance(obj, MarkedSimplicialSet):
        return adjunction_unit(obj, **kwargs)
    return adjunction_counit(obj, **kwargs)[0]


# ---------------------------------------------------------------------------
# marked mapping spaces
# ---------------------------------------------------------------------------

@dataclass
class MarkedHomResult:
    """Flat and sharp mapping spaces between marked objects.

    The flat space's k-simplices are maps of the underlying product
    X x Delta[k] -> Y sending (marked edge, degenerate coordinate)
    edges to marked edges; an edge of the space is itself marked when
    it also sends (marked edge, long coordinate) edges to marked edges,
    and the sharp space keeps the simplices all of whose edges are
    marked."""

    space: object
    sharp_space: object
    marked: frozenset
    maps: dict
    products: dict

    def as_marked(self):
        return MarkedSimplicialSet(self.space, self.marked)


def marked_hom(X, Y, k_max, over=None, budget=None):
    def keep_flat(k, n, cell, v):
        if n == 1:
            e, t = cell
            if e in X.marked and t[0] == t[1]:
                return v in Y.marked
        return True

    fc = function_complex(X.underlying, Y.underlying, k_max, over=over,
                          budget=budget, constraint=keep_flat)
    marked = []
    for key in fc.space.simplices.get(1, ()):
        F = fc.maps[(1, key)]
        if all(F.eval(1, (e, (0, 1))) in Y.marked for e in X.marked):
            marked.append(key)
    marked = frozenset(marked)
    keep = {
        n: [x for x in fc.space.simplices[n]
            if all(e in marked for e in fc.space.edges_of(n, x))]
        for n in range(fc.space.dim_bound + 1)
    }
    sharp_space = subcomplex(fc.space, keep)
    return MarkedHomResult(fc.space, sharp_space, marked, fc.maps, fc.products)
