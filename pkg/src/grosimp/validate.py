"""Structural checks for every container in the package.

Each checker returns a list of human-readable defect strings, empty
when the object is sound.  The dispatcher picks the right family by
type, so batch tools can validate a whole workspace uniformly.
"""

from __future__ import annotations

from .bisimplicial import BisimplicialMap, BisimplicialSet
from .category import FiniteCategory, Functor
from .diagram import Diagram
from .marked import MarkedMap, MarkedSimplicialSet
from .simplicial import SimplicialMap, TruncatedSimplicialSet


def simplicial_violations(S):
    """Face and degeneracy table soundness plus the five identity
    families, degree by degree."""
    out = []
    N = S.dim_bound

    def face(n, i, x):
        return S.faces[(n, i)][x]

    def degen(n, j, x):
        return S.degens[(n, j)][x]

    for n in range(1, N + 1):
        for x in S.simplices[n]:
            for i in range(n + 1):
                try:
                    y = face(n, i, x)
                except KeyError:
                    out.append("missing face %d of %r in degree %d" % (i, x, n))
                    continue
                if not S.has(n - 1, y):
                    out.append("face %d of %r leaves the simplex sets" % (i, x))
    for n in range(N):
        for x in S.simplices[n]:
            for j in range(n + 1):
                try:
                    y = degen(n, j, x)
                except KeyError:
                    out.append("missing degeneracy %d of %r in degree %d"
                               % (j, x, n))
                    continue
                if not S.has(n + 1, y):
                    out.append("degeneracy %d of %r leaves the simplex sets"
                               % (j, x))
    for n in range(2, N + 1):
        for x in S.simplices[n]:
            for j in range(1, n + 1):
                for i in range(j):
                    if face(n - 1, i, face(n, j, x)) != \
                            face(n - 1, j - 1, face(n, i, x)):
                        out.append("face-face identity fails at %r (i=%d, j=%d)"
                                   % (x, i, j))
    for n in range(N - 1):
        for x in S.simplices[n]:
            for j in range(n + 1):
                for i in range(j + 1):
                    if degen(n + 1, j + 1, degen(n, i, x)) != \
                            degen(n + 1, i, degen(n, j, x)):
                        out.append(
                            "degeneracy-degeneracy identity fails at %r (i=%d, j=%d)"
                            % (x, i, j))
    for n in range(N):
        for x in S.simplices[n]:
            for j in range(n + 1):
                sx = degen(n, j, x)
                for i in range(n + 2):
                    got = face(n + 1, i, sx)
                    if i == j or i == j + 1:
                        want = x
                    elif i < j:
                        want = degen(n - 1, j - 1, face(n, i, x))
                    else:
                        want = degen(n - 1, j, face(n, i - 1, x))
                    if got != want:
                        out.append(
                            "face-degeneracy identity fails at %r (i=%d, j=%d)"
                            % (x, i, j))
    if S.vertex_labels:
        for v in S.simplices.get(0, ()):
            if v not in S.vertex_labels:
                out.append("vertex %r has no label" % (v,))
    return out


def map_violations(f):
    """Totality, membership, and naturality of a simplicial map."""
    out = []
    X, Y = f.source, f.target
    N = X.dim_bound
    if Y.dim_bound < N:
        out.append("target dimension bound %d is below the source's %d"
                   % (Y.dim_bound, N))
        return out
    for n in range(N + 1):
        table = f.components.get(n)
        if table is None:
            out.append("no components in degree %d" % n)
            continue
        for x in X.simplices[n]:
            if x not in table:
                out.append("no value at %r in degree %d" % (x, n))
            elif not Y.has(n, table[x]):
                out.append("value at %r is not a %d-simplex of the target"
                           % (x, n))
    if out:
        return out
    for n in range(1, N + 1):
        for x in X.simplices[n]:
            for i in range(n + 1):
                if f.apply(n - 1, X.face(n, i, x)) != Y.face(n, i, f.apply(n, x)):
                    out.append("face %d not preserved at %r in degree %d"
                               % (i, x, n))
    for n in range(N):
        for x in X.simplices[n]:
            for j in range(n + 1):
                if f.apply(n + 1, X.degen(n, j, x)) != Y.degen(n, j, f.apply(n, x)):
                    out.append("degeneracy %d not preserved at %r in degree %d"
                               % (j, x, n))
    return out


def bisimplicial_violations(B):
    """Both directions' identity families plus their commutation."""
    out = []
    hb, vb = B.hbound, B.vbound
    for (m, k), cells in B.cells.items():
        for x in cells:
            if m >= 2:
                for j in range(1, m + 1):
                    for i in range(j):
                        if B.hface(m - 1, k, i, B.hface(m, k, j, x)) != \
                                B.hface(m - 1, k, j - 1, B.hface(m, k, i, x)):
                            out.append(
                                "horizontal face-face fails at %r (%d,%d)"
                                % (x, i, j))
            if k >= 2:
                for j in range(1, k + 1):
                    for i in range(j):
                        if B.vface(m, k - 1, i, B.vface(m, k, j, x)) != \
                                B.vface(m, k - 1, j - 1, B.vface(m, k, i, x)):
                            out.append(
                                "vertical face-face fails at %r (%d,%d)"
                                % (x, i, j))
            if m >= 1 and k >= 1:
                for i in range(m + 1):
                    for l in range(k + 1):
                        if B.vface(m - 1, k, l, B.hface(m, k, i, x)) != \
                                B.hface(m, k - 1, i, B.vface(m, k, l, x)):
                            out.append(
                                "face directions do not commute at %r (%d,%d)"
                                % (x, i, l))
            if m < hb and k < vb:
                for i in range(m + 1):
                    for l in range(k + 1):
                        if B.vdegen(m + 1, k, l, B.hdegen(m, k, i, x)) != \
                                B.hdegen(m, k + 1, i, B.vdegen(m, k, l, x)):
                            out.append(
                                "degeneracy directions do not commute at %r (%d,%d)"
                                % (x, i, l))
            if m >= 1 and k < vb:
                for i in range(m + 1):
                    for l in range(k + 1):
                        if B.vdegen(m - 1, k, l, B.hface(m, k, i, x)) != \
                                B.hface(m, k + 1, i, B.vdegen(m, k, l, x)):
                            out.append(
                                "horizontal face and vertical degeneracy "
                                "do not commute at %r (%d,%d)" % (x, i, l))
            if m < hb and k >= 1:
                for i in range(m + 1):
                    for l in range(k + 1):
                        if B.vface(m + 1, k, l, B.hdegen(m, k, i, x)) != \
                                B.hdegen(m, k - 1, i, B.vface(m, k, l, x)):
                            out.append(
                                "horizontal degeneracy and vertical face "
                                "do not commute at %r (%d,%d)" % (x, i, l))
    for k in range(vb + 1):
        out.extend("row %d: %s" % (k, v)
                   for v in simplicial_violations(B.row_complex(k)))
    for m in range(hb + 1):
        out.extend("column %d: %s" % (m, v)
                   for v in simplicial_violations(B.column_complex(m)))
    return out


def bisimplicial_map_violations(F):
    """Totality and naturality of a bisimplicial map in both
    directions."""
    out = []
    B, T = F.source, F.target
    for (m, k), cells in B.cells.items():
        table = F.components.get((m, k))
        if table is None:
            out.append("no components in bidegree (%d, %d)" % (m, k))
            continue
        for x in cells:
            if x not in table:
                out.append("no value at %r in bidegree (%d, %d)" % (x, m, k))
    if out:
        return out
    for (m, k), cells in B.cells.items():
        for x in cells:
            if m >= 1:
                for i in range(m + 1):
                    if F.apply(m - 1, k, B.hface(m, k, i, x)) != \
                            T.hface(m, k, i, F.apply(m, k, x)):
                        out.append("horizontal face %d not preserved at %r"
                                   % (i, x))
            if k >= 1:
                for i in range(k + 1):
                    if F.apply(m, k - 1, B.vface(m, k, i, x)) != \
                            T.vface(m, k, i, F.apply(m, k, x)):
                        out.append("vertical face %d not preserved at %r"
                                   % (i, x))
            if m < B.hbound:
                for j in range(m + 1):
                    if F.apply(m + 1, k, B.hdegen(m, k, j, x)) != \
                            T.hdegen(m, k, j, F.apply(m, k, x)):
                        out.append("horizontal degeneracy %d not preserved at %r"
                                   % (j, x))
            if k < B.vbound:
                for j in range(k + 1):
                    if F.apply(m, k + 1, B.vdegen(m, k, j, x)) != \
                            T.vdegen(m, k, j, F.apply(m, k, x)):
                        out.append("vertical degeneracy %d not preserved at %r"
                                   % (j, x))
    return out


def violations(obj):
    """Dispatch to the right checker; unknown types raise TypeError."""
    if isinstance(obj, TruncatedSimplicialSet):
        return simplicial_violations(obj)
    if isinstance(obj, SimplicialMap):
        return map_violations(obj)
    if isinstance(obj, MarkedSimplicialSet):
        return (simplicial_violations(obj.underlying)
                + obj.violations())
    if isinstance(obj, MarkedMap):
        return (map_violations(obj.mapping) + obj.violations())
    if isinstance(obj, (FiniteCategory, Functor, Diagram)):
        return obj.violations()
    if isinstance(obj, BisimplicialSet):
        return bisimplicial_violations(obj)
    if isinstance(obj, BisimplicialMap):
        return bisimplicial_map_violations(obj)
    raise TypeError("no validator for %r" % type(obj).__name__)
