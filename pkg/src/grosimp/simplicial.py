"""Finite simplicial sets truncated at an explicit dimension bound.

Every object stores all of its simplices, degenerate ones included, for
each degree up to ``dim_bound``, together with complete face and
degeneracy tables.  Keeping the degenerate simplices around makes every
construction in the package a uniform degreewise computation at the cost
of some blowup, which is acceptable at the desk scale this package
targets.

Simplex identifiers are ordinary hashable Python values (integers,
strings, nested tuples).  All simplex listings are kept in the canonical
order of :func:`grosimp.util.canon_key`, which makes repeated runs of any
construction byte-identical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import TruncationError
from .util import canon_key, canon_sorted

DEFAULT_DIM_BOUND = 4


# ---------------------------------------------------------------------------
# monotone maps between finite ordinals, used both as simplices of the
# standard simplices and as simplicial operators
# ---------------------------------------------------------------------------

def is_weakly_increasing(values):
    return all(values[i] <= values[i + 1] for i in range(len(values) - 1))


@dataclass(frozen=True)
class MonotoneMap:
    """A weakly increasing map [m] -> [n], stored by its value tuple.

    ``values`` has length m + 1 and entries in ``0 .. codomain``.  These
    maps play two roles: the k-simplices of the standard n-simplex, and
    the simplicial operators acting on arbitrary simplices.
    """

    values: tuple
    codomain: int

    def violations(self):
        out = []
        if len(self.values) == 0:
            out.append("empty domain is not an ordinal")
        if not is_weakly_increasing(self.values):
            out.append("values are not weakly increasing: %r" % (self.values,))
        if any(v < 0 or v > self.codomain for v in self.values):
            out.append("value out of range 0..%d: %r" % (self.codomain, self.values))
        return out

    def compose(self, other):
        """self after other: requires other's codomain = self's domain."""
        if other.codomain != len(self.values) - 1:
            raise ValueError("monotone maps are not composable")
        return MonotoneMap(tuple(self.values[v] for v in other.values), self.codomain)


def coface_tuple(i, n):
    """Value tuple of the injection [n-1] -> [n] that skips i."""
    return tuple(v for v in range(n + 1) if v != i)


def codegeneracy_tuple(j, n):
    """Value tuple of the surjection [n+1] -> [n] that repeats j."""
    return tuple(range(j + 1)) + tuple(range(j, n + 1))


def compose_tuples(alpha, beta):
    """Value tuple of alpha after beta."""
    return tuple(alpha[v] for v in beta)


def identity_tuple(n):
    return tuple(range(n + 1))


# ---------------------------------------------------------------------------
# the main container
# ---------------------------------------------------------------------------

class TruncatedSimplicialSet:
    """A simplicial set with all data stored explicitly up to a bound.

    Parameters
    ----------
    dim_bound : int
        Largest degree stored.  Degrees run from 0 to ``dim_bound``.
    simplices : dict
        Maps each degree to an iterable of simplex identifiers.  Missing
        degrees are treated as empty.
    faces : dict
        Maps ``(n, i)`` with ``1 <= n <= dim_bound`` and ``0 <= i <= n``
        to a dict sending each n-simplex to its i-th face.
    degens : dict
        Maps ``(n, j)`` with ``0 <= n < dim_bound`` and ``0 <= j <= n``
        to a dict sending each n-simplex to its j-th degeneracy.
    vertex_labels : dict, optional
        Maps vertex identifiers to integers.  When present, validation
        additionally checks that the vertex sequence of every simplex is
        weakly increasing in the labels; this catches mislabeled face
        tables that the bare simplicial identities cannot see.
    """

    def __init__(self, dim_bound, simplices, faces, degens, vertex_labels=None):
        self.dim_bound = int(dim_bound)
        if self.dim_bound < 0:
            raise ValueError("dim_bound must be nonnegative")
        self.simplices = {
            n: tuple(canon_sorted(set(simplices.get(n, ()))))
            for n in range(self.dim_bound + 1)
        }
        self._sets = {n: frozenset(v) for n, v in self.simplices.items()}
        self.faces = {k: dict(v) for k, v in faces.items()}
        self.degens = {k: dict(v) for k, v in degens.items()}
        self.vertex_labels = dict(vertex_labels) if vertex_labels else None
        self._degen_rev = None

    # -- basic access -------------------------------------------------

    def has(self, n, x):
        return 0 <= n <= self.dim_bound and x in self._sets[n]

    def simplex_count(self, n):
        return len(self.simplices.get(n, ()))

    def total_count(self):
        return sum(len(v) for v in self.simplices.values())

    def face(self, n, i, x):
        return self.faces[(n, i)][x]

    def degen(self, n, j, x):
        return self.degens[(n, j)][x]

    def face_list(self, n, x):
        return [self.face(n, i, x) for i in range(n + 1)]

    @property
    def vertices(self):
        return self.simplices[0]

    @property
    def edges(self):
        return self.simplices.get(1, ())

    # -- degeneracy bookkeeping ----------------------------------------

    def _degen_reverse(self):
        if self._degen_rev is None:
            rev = {}
            for (n, j), table in self.degens.items():
                for y, x in table.items():
                    key = (n + 1, x)
                    cur = rev.get(key)
                    if cur is None or j < cur[0]:
                        rev[key] = (j, y)
            self._degen_rev = rev
        return self._degen_rev

    def degenerate_preimage(self, n, x):
        """Return ``(j, y)`` with ``degen(n-1, j, y) == x``, or None.

        When several such pairs exist the least j is returned, which
        keeps every derived computation deterministic.
        """
        return self._degen_reverse().get((n, x))

    def is_degenerate(self, n, x):
        return self.degenerate_preimage(n, x) is not None

    def nondegenerate(self, n):
        if n == 0:
            return self.simplices[0]
        rev = self._degen_reverse()
        return tuple(x for x in self.simplices[n] if (n, x) not in rev)

    def top_nondegenerate(self):
        """Largest degree carrying a nondegenerate simplex, or -1 if empty."""
        for n in range(self.dim_bound, -1, -1):
            if self.nondegenerate(n):
                return n
        return -1

    # -- operator action ------------------------------------------------

    def act(self, n, x, alpha):
        """Apply the simplicial operator with value tuple ``alpha`` to x.

        ``alpha`` is a weakly increasing tuple with entries in ``0..n``;
        the result is the simplex of degree ``len(alpha) - 1`` obtained
        by reindexing x along it.  The operator is peeled into elementary
        faces and degeneracies, so only the stored tables are used.
        """
        alpha = tuple(alpha)
        m = len(alpha) - 1
        for j in range(m):
            if alpha[j] == alpha[j + 1]:
                y = self.act(n, x, alpha[:j + 1] + alpha[j + 2:])
                return self.degen(m - 1, j, y)
        if m == n:
            # an injective monotone endomap of [n] is the identity
            return x
        present = set(alpha)
        missing = max(v for v in range(n + 1) if v not in present)
        reduced = tuple(v - 1 if v > missing else v for v in alpha)
        return self.act(n - 1, self.face(n, missing, x), reduced)

    def vertex_of(self, n, x, i):
        """The i-th vertex of an n-simplex."""
        return self.act(n, x, (i,))

    def edge_of(self, n, x, i, j):
        """The (i, j)-edge of an n-simplex, i <= j."""
        return self.act(n, x, (i, j))

    def edges_of(self, n, x):
        return [self.act(n, x, (i, j)) for i in range(n + 1) for j in range(i, n + 1)]

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSimplicialSet):
            return NotImplemented
        return (
            self.dim_bound == other.dim_bound
            and self.simplices == other.simplices
            and self.faces == other.faces
            and self.degens == other.degens
        )

    def __hash__(self):
        return hash((self.dim_bound, tuple(self.simplices.get(n, ()) for n in range(self.dim_bound + 1))))

    def __repr__(self):
        counts = ",".join(str(self.simplex_count(n)) for n in range(self.dim_bound + 1))
        return "TruncatedSimplicialSet(dim_bound=%d, counts=[%s])" % (self.dim_bound, counts)


def make_simplicial_set(dim_bound, simplices_by_degree, face_rule, degen_rule,
                        vertex_labels=None):
    """Build a TruncatedSimplicialSet from rule functions.

    ``face_rule(n, i, x)`` and ``degen_rule(n, j, x)`` supply the tables;
    they are invoked once per entry.
    """
    simplices = {n: tuple(simplices_by_degree.get(n, ())) for n in range(dim_bound + 1)}
    faces = {}
    degens = {}
    for n in range(1, dim_bound + 1):
        for i in range(n + 1):
            faces[(n, i)] = {x: face_rule(n, i, x) for x in simplices[n]}
    for n in range(dim_bound):
        for j in range(n + 1):
            degens[(n, j)] = {x: degen_rule(n, j, x) for x in simplices[n]}
    return TruncatedSimplicialSet(dim_bound, simplices, faces, degens, vertex_labels)


# ---------------------------------------------------------------------------
# simplicial maps
# ---------------------------------------------------------------------------

class SimplicialMap:
    """A degreewise function between simplicial sets of equal bound.

    ``components[n]`` maps each n-simplex of the source to an n-simplex
    of the target.  Commutation with the structure maps is the job of
    :func:`grosimp.validate.validate`; the constructor only stores data.
    """

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = {n: dict(components.get(n, {})) for n in range(source.dim_bound + 1)}

    def apply(self, n, x):
        return self.components[n][x]

    def __call__(self, n, x):
        return self.apply(n, x)

    @staticmethod
    def identity(space):
        return SimplicialMap(space, space, {
            n: {x: x for x in space.simplices[n]} for n in range(space.dim_bound + 1)
        })

    def compose(self, other):
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("maps are not composable")
        comps = {
            n: {x: self.apply(n, y) for x, y in other.components[n].items()}
            for n in range(other.source.dim_bound + 1)
        }
        return SimplicialMap(other.source, self.target, comps)

    def is_injective(self):
        for n in range(self.source.dim_bound + 1):
            vals = list(self.components[n].values())
            if len(set(vals)) != len(vals):
                return False
        return True

    def is_bijective(self):
        for n in range(self.source.dim_bound + 1):
            vals = set(self.components[n].values())
            if len(vals) != len(self.components[n]) or vals != set(self.target.simplices[n]):
                return False
        return True

    def equals(self, other):
        return (
            self.source == other.source
            and self.target == other.target
            and self.components == other.components
        )

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.equals(other)

    def __repr__(self):
        return "SimplicialMap(%r -> %r)" % (self.source, self.target)


def constant_map(source, target, vertex):
    """The map collapsing ``source`` onto the degeneracies of one vertex."""
    comps = {}
    images = {0: vertex}
    for n in range(1, target.dim_bound + 1):
        images[n] = target.degen(n - 1, 0, images[n - 1])
    for n in range(source.dim_bound + 1):
        comps[n] = {x: images[n] for x in source.simplices[n]}
    return SimplicialMap(source, target, comps)


# ---------------------------------------------------------------------------
# standard objects
# ---------------------------------------------------------------------------

def standard_simplex(n, dim_bound=None):
    """The standard n-simplex.

    Its k-simplices are the weakly increasing maps [k] -> [n], stored as
    their value tuples; faces delete a position and degeneracies repeat
    one.  Vertex labels are attached so validation can detect scrambled
    tables.
    """
    if dim_bound is None:
        dim_bound = max(n, DEFAULT_DIM_BOUND)
    if n > dim_bound:
        raise TruncationError("standard simplex of dimension %d needs dim_bound >= %d" % (n, n))
    if n < 0:
        raise ValueError("negative simplex dimension")
    by_degree = {
        k: [t for t in itertools.combinations_with_replacement(range(n + 1), k + 1)]
        for k in range(dim_bound + 1)
    }
    labels = {(v,): v for v in range(n + 1)}
    return make_simplicial_set(
        dim_bound,
        by_degree,
        lambda k, i, t: t[:i] + t[i + 1:],
        lambda k, j, t: t[:j + 1] + t[j:],
        vertex_labels=labels,
    )


def horn(n, i, dim_bound=None):
    """The subcomplex of the standard n-simplex missing the i-th facet.

    A monotone tuple belongs to the horn exactly when its image together
    with {i} still misses some vertex of [n].
    """
    if not 0 <= i <= n:
        raise ValueError("horn index out of range: %d not in 0..%d" % (i, n))
    if dim_bound is None:
        dim_bound = max(n, DEFAULT_DIM_BOUND)
    if n > dim_bound:
        raise TruncationError("horn in dimension %d needs dim_bound >= %d" % (n, n))
    full = set(range(n + 1))
    def member(t):
        return set(t) | {i} != full
    by_degree = {
        k: [t for t in itertools.combinations_with_replacement(range(n + 1), k + 1) if member(t)]
        for k in range(dim_bound + 1)
    }
    labels = {(v,): v for v in range(n + 1) if member((v,))}
    return make_simplicial_set(
        dim_bound,
        by_degree,
        lambda k, idx, t: t[:idx] + t[idx + 1:],
        lambda k, j, t: t[:j + 1] + t[j:],
        vertex_labels=labels,
    )


def invertible_interval(dim_bound=None):
    """Nerve of the groupoid on two objects with a unique isomorphism.

    Its k-simplices are all functions [k] -> {0, 1}, monotone or not,
    stored as value tuples; the weakly increasing ones form a copy of the
    standard 1-simplex inside it.  This is the object glued in by
    localization, named "J" in generator shorthand.
    """
    if dim_bound is None:
        dim_bound = DEFAULT_DIM_BOUND
    by_degree = {
        k: [t for t in itertools.product((0, 1), repeat=k + 1)]
        for k in range(dim_bound + 1)
    }
    return make_simplicial_set(
        dim_bound,
        by_degree,
        lambda k, i, t: t[:i] + t[i + 1:],
        lambda k, j, t: t[:j + 1] + t[j:],
    )


def empty_simplicial_set(dim_bound):
    return TruncatedSimplicialSet(dim_bound, {}, {}, {})


def standard_object(kind, dim_bound=None):
    """Dispatch on a generator description.

    ``kind`` is either a tuple (("delta", n), ("horn", n, i), ("j",)) or
    the equivalent shorthand string ("delta 2", "horn 2 1", "J").
    """
    if isinstance(kind, str):
        parts = kind.strip().split()
        head = parts[0].lower()
        args = tuple(int(p) for p in parts[1:])
        kind = (head,) + args
    head = kind[0].lower()
    if head == "delta":
        return standard_simplex(kind[1], dim_bound)
    if head == "horn":
        return horn(kind[1], kind[2], dim_bound)
    if head == "j":
        return invertible_interval(dim_bound)
    raise ValueError("unknown standard object kind: %r" % (kind,))


# ---------------------------------------------------------------------------
# degreewise limits and colimits
# ---------------------------------------------------------------------------

def _require_equal_bounds(*spaces):
    bounds = {s.dim_bound for s in spaces}
    if len(bounds) != 1:
        raise TruncationError("dimension bounds differ: %s" % sorted(bounds))


@dataclass
class ProductResult:
    space: TruncatedSimplicialSet
    proj1: SimplicialMap
    proj2: SimplicialMap


@dataclass
class PullbackResult:
    space: TruncatedSimplicialSet
    proj1: SimplicialMap
    proj2: SimplicialMap


@dataclass
class CoproductResult:
    space: TruncatedSimplicialSet
    inj1: SimplicialMap
    inj2: SimplicialMap


@dataclass
class PushoutResult:
    space: TruncatedSimplicialSet
    inj1: SimplicialMap
    inj2: SimplicialMap


def product(A, B):
    """Degreewise product; simplices are pairs, structure maps act
    componentwise."""
    _require_equal_bounds(A, B)
    N = A.dim_bound
    by_degree = {
        n: [(a, b) for a in A.simplices[n] for b in B.simplices[n]]
        for n in range(N + 1)
    }
    space = make_simplicial_set(
        N,
        by_degree,
        lambda n, i, ab: (A.face(n, i, ab[0]), B.face(n, i, ab[1])),
        lambda n, j, ab: (A.degen(n, j, ab[0]), B.degen(n, j, ab[1])),
    )
    proj1 = SimplicialMap(space, A, {n: {ab: ab[0] for ab in space.simplices[n]} for n in range(N + 1)})
    proj2 = SimplicialMap(space, B, {n: {ab: ab[1] for ab in space.simplices[n]} for n in range(N + 1)})
    return ProductResult(space, proj1, proj2)


def pullback(f, g):
    """Degreewise pullback of f : A -> C against g : B -> C."""
    A, B, C = f.source, g.source, f.target
    if g.target != C:
        raise ValueError("pullback legs must share a codomain")
    _require_equal_bounds(A, B, C)
    N = A.dim_bound
    by_degree = {
        n: [(a, b) for a in A.simplices[n] for b in B.simplices[n]
            if f.apply(n, a) == g.apply(n, b)]
        for n in range(N + 1)
    }
    space = make_simplicial_set(
        N,
        by_degree,
        lambda n, i, ab: (A.face(n, i, ab[0]), B.face(n, i, ab[1])),
        lambda n, j, ab: (A.degen(n, j, ab[0]), B.degen(n, j, ab[1])),
    )
    proj1 = SimplicialMap(space, A, {n: {ab: ab[0] for ab in space.simplices[n]} for n in range(N + 1)})
    proj2 = SimplicialMap(space, B, {n: {ab: ab[1] for ab in space.simplices[n]} for n in range(N + 1)})
    return PullbackResult(space, proj1, proj2)


def coproduct(A, B):
    """Degreewise disjoint union with tagged identifiers."""
    _require_equal_bounds(A, B)
    N = A.dim_bound
    by_degree = {
        n: [(0, a) for a in A.simplices[n]] + [(1, b) for b in B.simplices[n]]
        for n in range(N + 1)
    }
    def face_rule(n, i, tx):
        tag, x = tx
        return (tag, (A if tag == 0 else B).face(n, i, x))
    def degen_rule(n, j, tx):
        tag, x = tx
        return (tag, (A if tag == 0 else B).degen(n, j, x))
    space = make_simplicial_set(N, by_degree, face_rule, degen_rule)
    inj1 = SimplicialMap(A, space, {n: {a: (0, a) for a in A.simplices[n]} for n in range(N + 1)})
    inj2 = SimplicialMap(B, space, {n: {b: (1, b) for b in B.simplices[n]} for n in range(N + 1)})
    return CoproductResult(space, inj1, inj2)


def pushout(f, g):
    """Degreewise pushout of A <- C -> B along f and g.

    Computed as the quotient of the tagged disjoint union by the
    equivalence relation generated by f(c) ~ g(c) in every degree.  The
    generating pairs are already closed under faces and degeneracies
    because f and g commute with them, so a single union-find pass
    suffices.  Class representatives are the canonically least members,
    which keeps identifiers deterministic.
    """
    from .util import UnionFind
    A, B, C = f.target, g.target, f.source
    if g.source != C:
        raise ValueError("pushout legs must share a domain")
    _require_equal_bounds(A, B, C)
    N = A.dim_bound
    rep = {}
    classes_by_degree = {}
    for n in range(N + 1):
        uf = UnionFind()
        for a in A.simplices[n]:
            uf.add((0, a))
        for b in B.simplices[n]:
            uf.add((1, b))
        for c in C.simplices[n]:
            uf.union((0, f.apply(n, c)), (1, g.apply(n, c)))
        classes = uf.classes()
        for members in classes.values():
            least = members[0]
            for m in members:
                rep[(n, m)] = least
        classes_by_degree[n] = sorted((members[0] for members in classes.values()), key=canon_key)
    def member_face(n, i, tx):
        tag, x = tx
        y = (A if tag == 0 else B).face(n, i, x)
        return rep[(n - 1, (tag, y))]
    def member_degen(n, j, tx):
        tag, x = tx
        y = (A if tag == 0 else B).degen(n, j, x)
        return rep[(n + 1, (tag, y))]
    space = make_simplicial_set(N, classes_by_degree, member_face, member_degen)
    inj1 = SimplicialMap(A, space, {n: {a: rep[(n, (0, a))] for a in A.simplices[n]} for n in range(N + 1)})
    inj2 = SimplicialMap(B, space, {n: {b: rep[(n, (1, b))] for b in B.simplices[n]} for n in range(N + 1)})
    return PushoutResult(space, inj1, inj2)


def pi0(S):
    """Components of the vertex set under the edge-generated relation.

    Returns a tuple of components, each a canonically sorted tuple of
    vertices, ordered by their least members.
    """
    from .util import UnionFind
    uf = UnionFind()
    for v in S.vertices:
        uf.add(v)
    for e in S.edges:
        uf.union(S.face(1, 0, e), S.face(1, 1, e))
    classes = uf.classes()
    comps = sorted((tuple(members) for members in classes.values()),
                   key=lambda c: canon_key(c[0]))
    return tuple(comps)


# ---------------------------------------------------------------------------
# subcomplexes and truncation
# ---------------------------------------------------------------------------

def subcomplex(S, keep):
    """The full subobject on the simplices in ``keep`` (a dict degree ->
    iterable).  Raises if the selection is not closed under faces and
    degeneracies."""
    sets = {n: set(keep.get(n, ())) for n in range(S.dim_bound + 1)}
    for n in range(1, S.dim_bound + 1):
        for x in sets[n]:
            for i in range(n + 1):
                if S.face(n, i, x) not in sets[n - 1]:
                    raise ValueError("selection not closed under face %d of %r" % (i, x))
    for n in range(S.dim_bound):
        for x in sets[n]:
            for j in range(n + 1):
                if S.degen(n, j, x) not in sets[n + 1]:
                    raise ValueError("selection not closed under degeneracy %d of %r" % (j, x))
    labels = None
    if S.vertex_labels:
        labels = {v: l for v, l in S.vertex_labels.items() if v in sets[0]}
    return make_simplicial_set(
        S.dim_bound,
        {n: canon_sorted(sets[n]) for n in sets},
        lambda n, i, x: S.face(n, i, x),
        lambda n, j, x: S.degen(n, j, x),
        vertex_labels=labels,
    )


def truncate(S, new_bound):
    """Forget all degrees above ``new_bound``."""
    if new_bound > S.dim_bound:
        raise TruncationError("cannot extend a truncated object (bound %d, wanted %d)"
                              % (S.dim_bound, new_bound))
    return make_simplicial_set(
        new_bound,
        {n: S.simplices[n] for n in range(new_bound + 1)},
        lambda n, i, x: S.face(n, i, x),
        lambda n, j, x: S.degen(n, j, x),
        vertex_labels=S.vertex_labels,
    )


def truncate_map(m, new_bound):
    return SimplicialMap(
        truncate(m.source, new_bound),
        truncate(m.target, new_bound),
        {n: m.components[n] for n in range(new_bound + 1)},
    )
