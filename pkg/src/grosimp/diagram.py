"""Diagrams of (marked) simplicial sets over a finite category."""

from __future__ import annotations

from .category import chain_endpoints
from .marked import (
    MarkedMap,
    MarkedSimplicialSet,
    flat,
    mark_equivalences,
    sharp,
    marked_product,
)
from .simplicial import SimplicialMap, product


class Diagram:
    """A functor from a finite category to simplicial sets.

    `at_object` maps objects to values, `at_morphism` maps morphisms to
    structure maps; in the marked variant the values are
    MarkedSimplicialSets and the structure maps MarkedMaps.  Accessors
    named `value`/`structure_map` always give the plain underlying data.
    """

    def __init__(self, base, at_object, at_morphism, marked=False):
        self.base = base
        self.at_object = dict(at_object)
        self.at_morphism = dict(at_morphism)
        self.marked = bool(marked)

    def value(self, d):
        v = self.at_object[d]
        return v.underlying if self.marked else v

    def marked_value(self, d):
        if not self.marked:
            raise ValueError("diagram has no markings")
        return self.at_object[d]

    def structure_map(self, f):
        m = self.at_morphism[f]
        return m.mapping if self.marked else m

    def marked_structure_map(self, f):
        if not self.marked:
            raise ValueError("diagram has no markings")
        return self.at_morphism[f]

    @property
    def dim_bound(self):
        bounds = {self.value(d).dim_bound for d in self.base.objects}
        if len(bounds) != 1:
            raise ValueError("diagram values have mixed dimension bounds: %s"
                             % sorted(bounds))
        return bounds.pop()

    def chain_objects(self, n, sigma):
        """Objects visited by an n-simplex of the base nerve."""
        return chain_endpoints(self.base, n, sigma)

    def transport(self, n, sigma, start, stop):
        """Composite structure map along a chain segment.

        For an n-simplex sigma of the base nerve, composes the structure
        maps of its morphisms from vertex `start` to vertex `stop`;
        start == stop gives the identity on the value there.
        """
        objs = self.chain_objects(n, sigma)
        m = SimplicialMap.identity(self.value(objs[start]))
        for t in range(start, stop):
            m = self.structure_map(sigma[t]).compose(m)
        return m

    def violations(self):
        out = []
        C = self.base
        try:
            self.dim_bound
        except ValueError as exc:
            out.append(str(exc))
        for d in C.objects:
            if d not in self.at_object:
                out.append("object %r has no value" % (d,))
        if self.marked:
            for d in C.objects:
                out.extend("value at %r: %s" % (d, v)
                           for v in self.at_object[d].violations())
            for f in C.morphisms:
                out.extend("structure map at %r: %s" % (f, v)
                           for v in self.at_morphism[f].violations())
        for f in C.morphisms:
            m = self.structure_map(f)
            if m.source != self.value(C.src[f]) or m.target != self.value(C.tgt[f]):
                out.append("structure map at %r has wrong endpoints" % (f,))
        for d in C.objects:
            if not self.structure_map(C.identity[d]).equals(
                    SimplicialMap.identity(self.value(d))):
                out.append("identity of %r does not act as the identity" % (d,))
        for g in C.morphisms:
            for f in C.morphisms:
                if C.is_composable(g, f):
                    lhs = self.structure_map(C.comp[(g, f)])
                    rhs = self.structure_map(g).compose(self.structure_map(f))
                    if not lhs.equals(rhs):
                        out.append("functoriality fails on (%r, %r)" % (g, f))
        return out

    def __repr__(self):
        return "Diagram(%r, marked=%s)" % (self.base, self.marked)


def constant_diagram(C, S):
    return Diagram(
        C,
        {d: S for d in C.objects},
        {f: SimplicialMap.identity(S) for f in C.morphisms},
    )


def constant_marked_diagram(C, X):
    return Diagram(
        C,
        {d: X for d in C.objects},
        {f: MarkedMap.identity(X) for f in C.morphisms},
        marked=True,
    )


def flat_diagram(F):
    """Mark each value flat; structure maps preserve degenerate edges."""
    values = {d: flat(F.value(d)) for d in F.base.objects}
    return Diagram(
        F.base, values,
        {f: MarkedMap(values[F.base.src[f]], values[F.base.tgt[f]],
                      F.structure_map(f))
         for f in F.base.morphisms},
        marked=True,
    )


def sharp_diagram(F):
    values = {d: sharp(F.value(d)) for d in F.base.objects}
    return Diagram(
        F.base, values,
        {f: MarkedMap(values[F.base.src[f]], values[F.base.tgt[f]],
                      F.structure_map(f))
         for f in F.base.morphisms},
        marked=True,
    )


def mark_equivalences_diagram(F, witness_depth=0):
    """Apply the equivalence marking objectwise.

    Structure maps stay valid because simplicial maps push equivalence
    witnesses forward.
    """
    values = {d: mark_equivalences(F.value(d), witness_depth)
              for d in F.base.objects}
    return Diagram(
        F.base, values,
        {f: MarkedMap(values[F.base.src[f]], values[F.base.tgt[f]],
                      F.structure_map(f))
         for f in F.base.morphisms},
        marked=True,
    )


def tensor_with_flat(F, K):
    """Objectwise marked product with a flat object.

    Sends each value X(d) to X(d) x flat(K) and each structure map to
    its product with the identity of K.
    """
    flatK = flat(K)
    values = {}
    prods = {}
    for d in F.base.objects:
        values[d], prods[d] = marked_product(F.marked_value(d), flatK)
    maps = {}
    for f in F.base.morphisms:
        a, b = F.base.src[f], F.base.tgt[f]
        g = F.structure_map(f)
        comps = {
            n: {ab: (g.apply(n, ab[0]), ab[1])
                for ab in prods[a].space.simplices[n]}
            for n in range(prods[a].space.dim_bound + 1)
        }
        maps[f] = MarkedMap(values[a], values[b],
                            SimplicialMap(prods[a].space, prods[b].space, comps))
    return Diagram(F.base, values, maps, marked=True)
