"""Finite categories, their nerves, and slice categories.

Categories are stored as plain tables: object identifiers, morphism
identifiers with source/target assignments, an identity per object, and
a composition table indexed by composable pairs.  ``compose(g, f)``
means g after f and is defined exactly when ``tgt(f) == src(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .simplicial import SimplicialMap, make_simplicial_set
from .util import canon_sorted


class FiniteCategory:
    def __init__(self, objects, src, tgt, identity, comp):
        self.objects = tuple(canon_sorted(set(objects)))
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.identity = dict(identity)
        self.comp = dict(comp)
        self.morphisms = tuple(canon_sorted(self.src.keys()))

    def compose(self, g, f):
        """g after f; requires tgt(f) == src(g)."""
        return self.comp[(g, f)]

    def is_composable(self, g, f):
        return self.tgt[f] == self.src[g]

    def hom(self, a, b):
        return tuple(m for m in self.morphisms if self.src[m] == a and self.tgt[m] == b)

    def violations(self):
        """All failures of the category laws, as human-readable strings."""
        out = []
        for x in self.objects:
            i = self.identity.get(x)
            if i is None:
                out.append("object %r has no identity" % (x,))
                continue
            if self.src.get(i) != x or self.tgt.get(i) != x:
                out.append("identity of %r has wrong endpoints" % (x,))
        for m in self.morphisms:
            if self.src[m] not in self.objects or self.tgt[m] not in self.objects:
                out.append("morphism %r has endpoints outside the object set" % (m,))
        for g in self.morphisms:
            for f in self.morphisms:
                defined = (g, f) in self.comp
                if defined != self.is_composable(g, f):
                    out.append("composition of (%r, %r) defined=%s but composable=%s"
                               % (g, f, defined, self.is_composable(g, f)))
                elif defined:
                    h = self.comp[(g, f)]
                    if self.src.get(h) != self.src[f] or self.tgt.get(h) != self.tgt[g]:
                        out.append("composite of (%r, %r) has wrong endpoints" % (g, f))
        for f in self.morphisms:
            if self.comp.get((self.identity[self.tgt[f]], f)) != f:
                out.append("left unit law fails at %r" % (f,))
            if self.comp.get((f, self.identity[self.src[f]])) != f:
                out.append("right unit law fails at %r" % (f,))
        for h in self.morphisms:
            for g in self.morphisms:
                if not self.is_composable(h, g):
                    continue
                for f in self.morphisms:
                    if not self.is_composable(g, f):
                        continue
                    if self.comp[(self.comp[(h, g)], f)] != self.comp[(h, self.comp[(g, f)])]:
                        out.append("associativity fails on (%r, %r, %r)" % (h, g, f))
        return out

    def __eq__(self, other):
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return (self.objects == other.objects and self.src == other.src
                and self.tgt == other.tgt and self.identity == other.identity
                and self.comp == other.comp)

    def __repr__(self):
        return "FiniteCategory(%d objects, %d morphisms)" % (len(self.objects), len(self.morphisms))


class Functor:
    def __init__(self, source, target, on_objects, on_morphisms):
        self.source = source
        self.target = target
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)

    def apply_obj(self, x):
        return self.on_objects[x]

    def apply_mor(self, m):
        return self.on_morphisms[m]

    def violations(self):
        out = []
        C, D = self.source, self.target
        for m in C.morphisms:
            fm = self.on_morphisms.get(m)
            if fm is None:
                out.append("morphism %r has no image" % (m,))
                continue
            if D.src[fm] != self.on_objects[C.src[m]] or D.tgt[fm] != self.on_objects[C.tgt[m]]:
                out.append("image of %r has wrong endpoints" % (m,))
        for x in C.objects:
            if self.on_morphisms.get(C.identity[x]) != D.identity.get(self.on_objects[x]):
                out.append("identity of %r not preserved" % (x,))
        for g in C.morphisms:
            for f in C.morphisms:
                if C.is_composable(g, f):
                    lhs = self.on_morphisms[C.comp[(g, f)]]
                    rhs = D.comp[(self.on_morphisms[g], self.on_morphisms[f])]
                    if lhs != rhs:
                        out.append("composition of (%r, %r) not preserved" % (g, f))
        return out

    @staticmethod
    def identity_functor(C):
        return Functor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms})

    def compose(self, other):
        """self after other."""
        return Functor(
            other.source, self.target,
            {x: self.on_objects[y] for x, y in other.on_objects.items()},
            {m: self.on_morphisms[n] for m, n in other.on_morphisms.items()},
        )

    def __repr__(self):
        return "Functor(%r -> %r)" % (self.source, self.target)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def discrete_category(objects):
    objects = list(objects)
    return FiniteCategory(
        objects,
        {("id", x): x for x in objects},
        {("id", x): x for x in objects},
        {x: ("id", x) for x in objects},
        {(("id", x), ("id", x)): ("id", x) for x in objects},
    )


def terminal_category():
    return discrete_category(["*"])


def poset_category(elements, relation):
    """The category of a partial order.

    ``relation`` is an iterable of (a, b) pairs meaning a <= b; its
    reflexive transitive closure supplies the morphisms, each stored as
    the pair (a, b).  Antisymmetry of the closure is asserted.
    """
    elements = list(elements)
    leq = {(a, a) for a in elements}
    leq.update((a, b) for a, b in relation)
    changed = True
    while changed:
        changed = False
        for a, b in list(leq):
            for c, d in list(leq):
                if b == c and (a, d) not in leq:
                    leq.add((a, d))
                    changed = True
    for a, b in leq:
        assert not (a != b and (b, a) in leq), "relation is not antisymmetric"
    morphisms = sorted(leq, key=lambda p: (str(p[0]), str(p[1])))
    comp = {}
    for g in morphisms:
        for f in morphisms:
            if f[1] == g[0]:
                comp[(g, f)] = (f[0], g[1])
    return FiniteCategory(
        elements,
        {m: m[0] for m in morphisms},
        {m: m[1] for m in morphisms},
        {a: (a, a) for a in elements},
        comp,
    )


def chain_category(n):
    """The linear order 0 < 1 < ... < n as a category."""
    return poset_category(range(n + 1), [(i, i + 1) for i in range(n)])


def walking_iso_category():
    """Two objects, a unique morphism in every hom-set.

    Morphisms are the pairs (a, b) with a, b in {0, 1}; (a, b) runs from
    a to b, and both non-identity morphisms are inverse to each other.
    """
    objs = [0, 1]
    morphisms = [(a, b) for a in objs for b in objs]
    comp = {}
    for g in morphisms:
        for f in morphisms:
            if f[1] == g[0]:
                comp[(g, f)] = (f[0], g[1])
    return FiniteCategory(
        objs,
        {m: m[0] for m in morphisms},
        {m: m[1] for m in morphisms},
        {a: (a, a) for a in objs},
        comp,
    )


# ---------------------------------------------------------------------------
# nerves
# ---------------------------------------------------------------------------

def chain_endpoints(C, n, chain):
    """Vertex sequence of a composable chain (object at each position)."""
    if n == 0:
        return (chain,)
    return tuple([C.src[chain[0]]] + [C.tgt[m] for m in chain])


def nerve(C, dim_bound=None):
    """The nerve of a finite category, truncated at ``dim_bound``.

    Degree 0 simplices are the object identifiers themselves; a degree n
    simplex is a tuple of n composable morphisms, read left to right.
    The outer faces drop an end morphism, the inner face d_i composes at
    the i-th object, and degeneracies insert identities.
    """
    from .simplicial import DEFAULT_DIM_BOUND
    if dim_bound is None:
        dim_bound = DEFAULT_DIM_BOUND
    by_degree = {0: list(C.objects)}
    chains = [(m,) for m in C.morphisms]
    by_degree[1] = chains
    for n in range(2, dim_bound + 1):
        chains = [c + (m,) for c in chains for m in C.morphisms
                  if C.tgt[c[-1]] == C.src[m]]
        by_degree[n] = chains

    def face_rule(n, i, chain):
        if n == 1:
            return C.tgt[chain[0]] if i == 0 else C.src[chain[0]]
        if i == 0:
            return chain[1:]
        if i == n:
            return chain[:-1]
        return chain[:i - 1] + (C.comp[(chain[i], chain[i - 1])],) + chain[i + 1:]

    def degen_rule(n, j, chain):
        if n == 0:
            return (C.identity[chain],)
        vertex = chain_endpoints(C, n, chain)[j]
        return chain[:j] + (C.identity[vertex],) + chain[j:]

    return make_simplicial_set(dim_bound, by_degree, face_rule, degen_rule)


def nerve_map(F, dim_bound=None):
    """The simplicial map induced on nerves by a functor."""
    from .simplicial import DEFAULT_DIM_BOUND
    if dim_bound is None:
        dim_bound = DEFAULT_DIM_BOUND
    NC = nerve(F.source, dim_bound)
    ND = nerve(F.target, dim_bound)
    comps = {0: {x: F.on_objects[x] for x in NC.simplices[0]}}
    for n in range(1, dim_bound + 1):
        comps[n] = {c: tuple(F.on_morphisms[m] for m in c) for c in NC.simplices[n]}
    return SimplicialMap(NC, ND, comps)


# ---------------------------------------------------------------------------
# slice categories
# ---------------------------------------------------------------------------

@dataclass
class SliceResult:
    category: FiniteCategory
    projection: Functor


def slice_category(C, d, side="over"):
    """The over- or under-slice of C at d, with its projection.

    Over: objects are the arrows into d; a morphism from g to g' is a
    triple (g, f, g') with g' o f = g.  Under: objects are the arrows
    out of d; a morphism from g to g' is a triple (g, f, g') with
    f o g = g'.  Projection sends g to its free end and (g, f, g') to f.
    """
    if d not in C.objects:
        raise ValueError("unknown object %r" % (d,))
    if side == "over":
        objs = [m for m in C.morphisms if C.tgt[m] == d]
        arrows = [(g, f, g2) for g in objs for g2 in objs for f in C.morphisms
                  if C.src[f] == C.src[g] and C.tgt[f] == C.src[g2]
                  and C.comp[(g2, f)] == g]
        free_end = C.src
    elif side == "under":
        objs = [m for m in C.morphisms if C.src[m] == d]
        arrows = [(g, f, g2) for g in objs for g2 in objs for f in C.morphisms
                  if C.src[f] == C.tgt[g] and C.tgt[f] == C.tgt[g2]
                  and C.comp[(f, g)] == g2]
        free_end = C.tgt
    else:
        raise ValueError("side must be 'over' or 'under', got %r" % (side,))
    comp = {}
    for t2 in arrows:
        for t1 in arrows:
            if t1[2] == t2[0]:
                comp[(t2, t1)] = (t1[0], C.comp[(t2[1], t1[1])], t2[2])
    cat = FiniteCategory(
        objs,
        {t: t[0] for t in arrows},
        {t: t[2] for t in arrows},
        {g: (g, C.identity[free_end[g]], g) for g in objs},
        comp,
    )
    proj = Functor(cat, C, {g: free_end[g] for g in objs}, {t: t[1] for t in arrows})
    return SliceResult(cat, proj)


def slice_reindex(C, f, side="over"):
    """The reindexing functor a morphism f : d -> d' induces on slices.

    Over-slices are covariant: C/d -> C/d' postcomposes with f.  Under-
    slices are contravariant: d'/C -> d/C precomposes with f.
    """
    d, d2 = C.src[f], C.tgt[f]
    if side == "over":
        src_slice = slice_category(C, d, "over").category
        tgt_slice = slice_category(C, d2, "over").category
        on_obj = {g: C.comp[(f, g)] for g in src_slice.objects}
        on_mor = {t: (on_obj[t[0]], t[1], on_obj[t[2]]) for t in src_slice.morphisms}
    elif side == "under":
        src_slice = slice_category(C, d2, "under").category
        tgt_slice = slice_category(C, d, "under").category
        on_obj = {g: C.comp[(g, f)] for g in src_slice.objects}
        on_mor = {t: (on_obj[t[0]], t[1], on_obj[t[2]]) for t in src_slice.morphisms}
    else:
        raise ValueError("side must be 'over' or 'under', got %r" % (side,))
    return Functor(src_slice, tgt_slice, on_obj, on_mor)
