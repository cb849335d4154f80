"""Horn lifting problems and the of fibration checks built on them.

Everything here is exhaustive search at desk scale: a lifting problem
is a horn in the source lying over a simplex of the target, and a check
enumerates every such problem up to a degree cap and scans for fillers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .marked import MarkedSimplicialSet
from .simplicial import SimplicialMap, constant_map, standard_simplex
from .util import as_budget


@dataclass(frozen=True)
class LiftingProblem:
    """A horn over a simplex: facet j of the would-be n-simplex is
    prescribed for every j except i, and the whole thing must lie over
    `bottom`."""

    p: SimplicialMap
    n: int
    i: int
    top: tuple          # pairs (j, facet), j != i, sorted
    bottom: object

    def facets(self):
        return dict(self.top)

    def violations(self):
        X = self.p.source
        B = self.p.target
        n, i = self.n, self.i
        out = []
        facets = self.facets()
        if not B.has(n, self.bottom):
            out.append("bottom is not a %d-simplex of the target" % n)
            return out
        for j, x in facets.items():
            if not X.has(n - 1, x):
                out.append("facet %d is not a %d-simplex of the source" % (j, n - 1))
            elif self.p.apply(n - 1, x) != B.face(n, j, self.bottom):
                out.append("facet %d does not lie over face %d of the bottom" % (j, j))
        for j in sorted(facets):
            for l in sorted(facets):
                if j >= l:
                    continue
                if X.face(n - 1, j, facets[l]) != X.face(n - 1, l - 1, facets[j]):
                    out.append("facets %d and %d do not glue" % (j, l))
        return out


def lift_search(problem, budget=None):
    """All fillers of a lifting problem, in storage order."""
    budget = as_budget(budget)
    X = problem.p.source
    n, i = problem.n, problem.i
    facets = problem.facets()
    found = []
    for x in X.simplices[n]:
        budget.spend()
        if problem.p.apply(n, x) != problem.bottom:
            continue
        if all(X.face(n, j, x) == facets[j] for j in facets):
            found.append(x)
    return found


def horn_problems(p, n, i, budget=None, edge_constraint=None):
    """Every lifting problem for the horn missing facet i in degree n.

    Facets are assigned in ascending index against a chosen bottom
    simplex, pruned by the gluing conditions as they go.
    `edge_constraint`, when given, receives each candidate facet and its
    index and may veto it; it is how coCartesian checks pin the first
    edge.
    """
    budget = as_budget(budget)
    X = p.source
    B = p.target
    js = [j for j in range(n + 1) if j != i]
    out = []
    for bottom in B.simplices[n]:
        stacks = [{}]
        for j in js:
            want = B.face(n, j, bottom)
            extended = []
            for chosen in stacks:
                for x in X.simplices[n - 1]:
                    budget.spend()
                    if p.apply(n - 1, x) != want:
                        continue
                    if edge_constraint is not None and not edge_constraint(j, x):
                        continue
                    ok = True
                    for l, y in chosen.items():
                        if X.face(n - 1, l, x) != X.face(n - 1, j - 1, y):
                            ok = False
                            break
                    if ok:
                        new = dict(chosen)
                        new[j] = x
                        extended.append(new)
            stacks = extended
        for chosen in stacks:
            out.append(LiftingProblem(p, n, i, tuple(sorted(chosen.items())),
                                      bottom))
    return out


@dataclass
class FibrationReport:
    ok: bool
    defects: tuple
    problems_checked: int


def is_inner_fibration(p, n_max=None, budget=None):
    """Scan every inner horn problem up to degree n_max for fillers."""
    budget = as_budget(budget)
    if n_max is None:
        n_max = min(p.source.dim_bound, p.target.dim_bound)
    defects = []
    checked = 0
    for n in range(2, n_max + 1):
        for i in range(1, n):
            for problem in horn_problems(p, n, i, budget=budget):
                checked += 1
                if not lift_search(problem, budget=budget):
                    defects.append(problem)
    return FibrationReport(not defects, tuple(defects), checked)


def is_quasi_category(S, n_max=None, budget=None):
    """Inner horn filling against the point."""
    point = standard_simplex(0, S.dim_bound)
    return is_inner_fibration(constant_map(S, point, (0,)), n_max=n_max,
                              budget=budget)


@dataclass
class EdgeReport:
    edge: object
    ok: bool
    defects: tuple
    problems_checked: int


def is_cocartesian_edge(p, y, n_max=None, budget=None):
    """Initial-vertex horn filling for the problems whose leading edge
    is y.

    A facet that still contains both of the first two vertices has to
    restrict to y on them; facet 1 and the bottom range freely.  Only
    meaningful when p already fills inner horns.
    """
    budget = as_budget(budget)
    X = p.source
    if n_max is None:
        n_max = min(p.source.dim_bound, p.target.dim_bound)
    defects = []
    checked = 0
    for n in range(2, n_max + 1):
        def pin_leading_edge(j, x):
            if j >= 2:
                return X.act(n - 1, x, (0, 1)) == y
            return True
        for problem in horn_problems(p, n, 0, budget=budget,
                                     edge_constraint=pin_leading_edge):
            checked += 1
            if not lift_search(problem, budget=budget):
                defects.append(problem)
    return EdgeReport(y, not defects, tuple(defects), checked)


@dataclass
class CocartesianReport:
    ok: bool
    inner: FibrationReport
    edges: dict = field(default_factory=dict)
    missing_lifts: tuple = ()
    marking: MarkedSimplicialSet | None = None
    defects: tuple = ()


def cocartesian_edges(p, n_max=None, budget=None):
    """Edge -> report, for every edge of the source."""
    return {y: is_cocartesian_edge(p, y, n_max=n_max, budget=budget)
            for y in p.source.simplices.get(1, ())}


def is_cocartesian_fibration(p, n_max=None, budget=None):
    """Inner fibration with enough initial-vertex lifts.

    After the inner check, every target edge must lift against every
    source vertex over its source end to an edge all of whose
    initial-vertex horns fill.  The natural marking collects exactly
    those edges; it is reported only when the whole check passes.
    """
    budget = as_budget(budget)
    inner = is_inner_fibration(p, n_max=n_max, budget=budget)
    edges = cocartesian_edges(p, n_max=n_max, budget=budget)
    good = frozenset(y for y, rep in edges.items() if rep.ok)
    X, B = p.source, p.target
    missing = []
    for e in B.simplices.get(1, ()):
        src_vertex = B.face(1, 1, e)
        for x in X.simplices.get(0, ()):
            if p.apply(0, x) != src_vertex:
                continue
            lifts = [y for y in good
                     if p.apply(1, y) == e and X.face(1, 1, y) == x]
            if not lifts:
                missing.append((e, x))
    defects = []
    if not inner.ok:
        defects.append("inner horn problems without fillers: %d"
                       % len(inner.defects))
    if missing:
        defects.append("edge/vertex pairs without a distinguished lift: %d"
                       % len(missing))
    marking = None
    if not defects:
        candidate = MarkedSimplicialSet(X, good)
        if candidate.violations():
            defects.append("distinguished edges do not form a valid marking")
        else:
            marking = candidate
    return CocartesianReport(not defects, inner, edges, tuple(missing),
                             marking, tuple(defects))
