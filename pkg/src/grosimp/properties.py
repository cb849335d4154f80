"""Executable forms of the guarantees the package is designed around.

Each check builds its own instances, runs the construction it is about,
and reports a CriterionResult.  They share one seeded corpus of random
diagrams so the whole battery is deterministic; run_all executes the
checks in a fixed order, and both the command line `suite` command and
the acceptance tests go through it.
"""

import random
from dataclasses import dataclass

from .category import (Functor, chain_category, chain_endpoints,
                       discrete_category, nerve, nerve_map,
                       terminal_category, walking_iso_category)
from .diagram import (Diagram, constant_diagram, constant_marked_diagram,
                      mark_equivalences_diagram)
from .fibrations import (is_cocartesian_edge, is_cocartesian_fibration,
                         is_inner_fibration)
from .grothendieck import (canonical_iso, gerbe, gerbe_top_map,
                           grothendieck_total, marked_relative_nerve,
                           relative_nerve, relnerve_vertex_fiber_map,
                           vertex_fiber_map)
from .hocolim import (bar_construction, bar_vertex_fiber_cells,
                      colim_diagram, colim_mediating, iota_comparison,
                      tensor_compat_check)
from .homs import enumerate_cell_maps
from .marked import (MarkedSimplicialSet, adjunction_counit, adjunction_unit,
                     flat, is_equivalence_edge, localization_universal,
                     localize, localize_map, mark_equivalences, sharp)
from .simplicial import (SimplicialMap, coproduct, horn, invertible_interval,
                         product, pullback, pushout, standard_simplex)
from .validate import map_violations, violations

POOL_BOUND = 3
DEFAULT_SEED = 20260819
MAX_REPORTED = 8


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str
    defects: tuple = ()

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return "%s %s: %s" % (status, self.name, self.detail)


def _result(name, detail, defects):
    defects = tuple(defects)
    return CriterionResult(name, not defects, detail, defects[:MAX_REPORTED])


def value_pool(dim_bound=POOL_BOUND):
    """Small spaces used as diagram values, none with more than six
    nondegenerate simplices."""
    pt = standard_simplex(0, dim_bound)
    seg = standard_simplex(1, dim_bound)
    wedge = horn(2, 1, dim_bound)
    two_points = coproduct(pt, standard_simplex(0, dim_bound)).space
    seg_and_point = coproduct(seg, standard_simplex(0, dim_bound)).space
    return (pt, seg, wedge, two_points, seg_and_point)


class Corpus:
    """A deterministic family of random diagrams over short chains.

    Values are drawn from value_pool; the structure map of each cover
    relation is drawn from the full set of simplicial maps between the
    chosen values, and longer steps are the composites, so functoriality
    holds by construction.  Totals and relative nerves are cached since
    several checks revisit them.
    """

    def __init__(self, dim_bound=POOL_BOUND, seed=DEFAULT_SEED, count=60):
        self.dim_bound = dim_bound
        self.seed = seed
        self.pool = value_pool(dim_bound)
        self._map_pools = {}
        rng = random.Random(seed)
        self.diagrams = [self._random_diagram(rng, k) for k in range(count)]
        self._total_rel = {}

    def map_pool(self, i, j):
        if (i, j) not in self._map_pools:
            maps = enumerate_cell_maps(self.pool[i], self.pool[j])
            self._map_pools[(i, j)] = tuple(m.as_simplicial_map() for m in maps)
        return self._map_pools[(i, j)]

    def _random_diagram(self, rng, k):
        C = chain_category(1 if k % 2 == 0 else 2)
        top = len(C.objects) - 1
        idx = {d: rng.randrange(len(self.pool)) for d in C.objects}
        maps = {C.identity[d]: SimplicialMap.identity(self.pool[idx[d]])
                for d in C.objects}
        for a in range(top):
            maps[(a, a + 1)] = rng.choice(self.map_pool(idx[a], idx[a + 1]))
        for f in C.morphisms:
            if f not in maps:
                a, b = f
                g = maps[(a, a + 1)]
                for m in range(a + 1, b):
                    g = maps[(m, m + 1)].compose(g)
                maps[f] = g
        return Diagram(C, {d: self.pool[idx[d]] for d in C.objects}, maps)

    def total_and_rel(self, idx):
        if idx not in self._total_rel:
            F = self.diagrams[idx]
            self._total_rel[idx] = (grothendieck_total(F), relative_nerve(F))
        return self._total_rel[idx]

    def injective_diagrams(self):
        """Diagrams all of whose structure maps are degreewise injective,
        padded with two handmade ones so the family is never empty."""
        seg = self.pool[1]
        out = [constant_diagram(chain_category(1), seg)]
        pt = self.pool[0]
        C = chain_category(1)
        incl = next(m for m in self.map_pool(0, 1) if m.is_injective())
        out.append(Diagram(C, {0: pt, 1: seg}, {
            (0, 0): SimplicialMap.identity(pt),
            (1, 1): SimplicialMap.identity(seg),
            (0, 1): incl,
        }))
        for F in self.diagrams:
            if all(F.structure_map(f).is_injective() for f in F.base.morphisms):
                out.append(F)
        return out


# ---------------------------------------------------------------------------
# 1. simplicial identities across every construction
# ---------------------------------------------------------------------------

def check_simplicial_identities(corpus):
    rng = random.Random(corpus.seed + 1)
    pool = corpus.pool
    built = []
    for C in (terminal_category(), chain_category(1), chain_category(2),
              discrete_category((0, 1, 2)), walking_iso_category()):
        built.append(("nerve", nerve(C, corpus.dim_bound)))
    for _ in range(15):
        A, B = rng.choice(pool), rng.choice(pool)
        built.append(("product", product(A, B).space))
    for _ in range(15):
        i, j, k = (rng.randrange(len(pool)) for _ in range(3))
        f = rng.choice(corpus.map_pool(i, k))
        g = rng.choice(corpus.map_pool(j, k))
        built.append(("pullback", pullback(f, g).space))
    for _ in range(15):
        i, j, k = (rng.randrange(len(pool)) for _ in range(3))
        f = rng.choice(corpus.map_pool(i, j))
        g = rng.choice(corpus.map_pool(i, k))
        built.append(("pushout", pushout(f, g).space))
    for F in corpus.diagrams[:10]:
        f = (0, 1) if rng.random() < 0.5 else F.base.identity[0]
        built.append(("gerbe", gerbe(F, 1, (f,), 1).space))
    for F in corpus.diagrams[:15]:
        built.append(("total", grothendieck_total(F).space))
    bars = []
    for F in corpus.diagrams[:15]:
        bar = bar_construction(mark_equivalences_diagram(F))
        built.append(("bar", bar.marked))
        bars.append(bar)
    for V in pool:
        built.append(("localization", localize(flat(V)).space))
        built.append(("localization", localize(sharp(V)).space))
    for bar in bars[:5]:
        built.append(("localization", localize(bar.marked).space))
    defects = []
    for label, obj in built:
        for v in violations(obj):
            defects.append("%s: %s" % (label, v))
    detail = "%d constructions validated" % len(built)
    return _result("simplicial-identities", detail, defects)


# ---------------------------------------------------------------------------
# 2. the comparison isomorphism between total space and relative nerve
# ---------------------------------------------------------------------------

def check_comparison_iso(corpus):
    defects = []
    for idx, F in enumerate(corpus.diagrams):
        iso, report, total, rel = canonical_iso(F)
        corpus._total_rel.setdefault(idx, (total, rel))
        if not report.ok:
            for d in report.defects[:2]:
                defects.append("diagram %d: %s" % (idx, d))
            if not report.defects:
                defects.append("diagram %d: not degreewise bijective %r"
                               % (idx, report.bijective_degrees))
    detail = ("%d diagrams, bijective and natural in degrees 0..%d"
              % (len(corpus.diagrams), corpus.dim_bound))
    return _result("comparison-iso", detail, defects)


# ---------------------------------------------------------------------------
# 3. vertex fibers of both projections recover the diagram values
# ---------------------------------------------------------------------------

def check_fiber_laws(corpus):
    defects = []
    checked = 0
    for idx, F in enumerate(corpus.diagrams):
        total, rel = corpus.total_and_rel(idx)
        for d in F.base.objects:
            for tag, (m, fib) in (
                ("total", vertex_fiber_map(F, d, total)),
                ("relnerve", relnerve_vertex_fiber_map(F, d, rel)),
            ):
                checked += 1
                bad = map_violations(m)
                if bad:
                    defects.append("diagram %d, object %r, %s fiber: %s"
                                   % (idx, d, tag, bad[0]))
                elif not m.is_bijective():
                    defects.append("diagram %d, object %r: %s fiber not "
                                   "isomorphic to the value" % (idx, d, tag))
    detail = "%d vertex fibers match their values" % checked
    return _result("fiber-laws", detail, defects)


# ---------------------------------------------------------------------------
# 4. mapping spaces of identity and totally degenerate chains
# ---------------------------------------------------------------------------

def check_mapping_space_identities(corpus):
    defects = []
    checked = 0
    for idx, F in enumerate(corpus.diagrams[:8]):
        for d in F.base.objects:
            for n, k_max in ((1, 2), (2, 1)):
                sigma = (F.base.identity[d],) * n
                G = gerbe(F, n, sigma, k_max)
                top, fc = gerbe_top_map(G)
                checked += 1
                bad = map_violations(top)
                if bad:
                    defects.append("diagram %d, object %r, degree %d: %s"
                                   % (idx, d, n, bad[0]))
                elif not top.is_bijective():
                    defects.append(
                        "diagram %d, object %r: degree-%d chain of "
                        "identities is not the simplex mapping space"
                        % (idx, d, n))
    detail = ("%d degenerate chains match simplex mapping spaces, "
              "degrees 1..2" % checked)
    return _result("mapping-space-identities", detail, defects)


# ---------------------------------------------------------------------------
# 5. constant one-point diagrams collapse onto the base nerve
# ---------------------------------------------------------------------------

def check_terminal_collapse(corpus):
    defects = []
    pt = standard_simplex(0, corpus.dim_bound)
    cats = (terminal_category(), chain_category(1), chain_category(2),
            discrete_category((0, 1, 2)), walking_iso_category())
    for C in cats:
        total = grothendieck_total(constant_diagram(C, pt))
        bad = map_violations(total.projection)
        if bad:
            defects.append("%r total projection: %s" % (C, bad[0]))
        elif not total.projection.is_bijective():
            defects.append("%r: one-point total space differs from the nerve"
                           % (C,))
        bar = bar_construction(constant_marked_diagram(C, flat(pt)))
        if not bar.projection.is_bijective():
            defects.append("%r: one-point bar object differs from the nerve"
                           % (C,))
        if set(bar.marked.marked) != set(bar.space.simplices[1]):
            defects.append("%r: one-point bar object is not fully marked"
                           % (C,))
    detail = "%d base categories collapse" % len(cats)
    return _result("terminal-collapse", detail, defects)


# ---------------------------------------------------------------------------
# 6. degreewise size of the bar object
# ---------------------------------------------------------------------------

def check_bar_sizes(corpus):
    defects = []
    for idx, F in enumerate(corpus.diagrams):
        Fm = mark_equivalences_diagram(F)
        bar = bar_construction(Fm)
        for n in range(corpus.dim_bound + 1):
            want = sum(
                len(F.value(chain_endpoints(F.base, n, s)[0]).simplices[n])
                for s in bar.nerve.simplices[n])
            got = bar.space.simplex_count(n)
            if got != want:
                defects.append("diagram %d, degree %d: %d cells, expected %d"
                               % (idx, n, got, want))
    detail = ("%d diagrams, degrees 0..%d match the sum over base chains"
              % (len(corpus.diagrams), corpus.dim_bound))
    return _result("bar-sizes", detail, defects)


# ---------------------------------------------------------------------------
# 7. the comparison of the bar object into the total space
# ---------------------------------------------------------------------------

def _fiber_bijection_defects(F, res, idx):
    out = []
    for d in F.base.objects:
        cells = bar_vertex_fiber_cells(F, res.bar, d)
        for m, members in cells.items():
            sigma_m = res.bar.nerve.act(0, d, (0,) * (m + 1))
            images = [res.mapping.mapping.apply(m, c) for c in members]
            expected = [c for c in res.total.space.simplices[m]
                        if c[0] == sigma_m]
            if len(set(images)) != len(images) or set(images) != set(expected):
                out.append("diagram %d, object %r, degree %d: fiber not "
                           "bijective" % (idx, d, m))
    return out


def check_bar_comparison(corpus):
    defects = []
    count = 0
    for idx, F in enumerate(corpus.diagrams[:20]):
        Fm = mark_equivalences_diagram(F)
        res = iota_comparison(Fm)
        count += 1
        for d in res.defects[:2]:
            defects.append("diagram %d: %s" % (idx, d))
        defects.extend(_fiber_bijection_defects(Fm, res, idx))
    injectives = corpus.injective_diagrams()
    for idx, F in enumerate(injectives):
        Fm = mark_equivalences_diagram(F)
        res = iota_comparison(Fm)
        count += 1
        for d in res.defects[:2]:
            defects.append("injective diagram %d: %s" % (idx, d))
        if not all(res.injective_degrees):
            defects.append("injective diagram %d: comparison not injective "
                           "in degrees %r" % (idx, res.injective_degrees))
        defects.extend(_fiber_bijection_defects(Fm, res, idx))
    detail = ("%d diagrams compared over the nerve, %d with injective "
              "structure maps" % (count, len(injectives)))
    return _result("bar-comparison", detail, defects)


# ---------------------------------------------------------------------------
# 8. localization sizes and the universal property
# ---------------------------------------------------------------------------

def _localization_instances(corpus):
    pt, seg, wedge = corpus.pool[0], corpus.pool[1], corpus.pool[2]
    one_marked = MarkedSimplicialSet(
        wedge, set(flat(wedge).marked) | {(0, 1)})
    return (
        ("flat point", flat(pt)),
        ("flat interval", flat(seg)),
        ("sharp interval", sharp(seg)),
        ("flat wedge", flat(wedge)),
        ("wedge with one long edge", one_marked),
        ("equivalence-marked loop",
         mark_equivalences(invertible_interval(corpus.dim_bound))),
    )


def check_localization(corpus):
    defects = []
    instances = _localization_instances(corpus)
    for label, T in instances:
        loc = localize(T)
        S = T.underlying
        for n in range(S.dim_bound + 1):
            want = S.simplex_count(n) + len(T.marked) * (2 ** (n + 1) - (n + 2))
            if loc.space.simplex_count(n) != want:
                defects.append("%s, degree %d: %d cells, expected %d"
                               % (label, n, loc.space.simplex_count(n), want))
        if not loc.projection.is_injective():
            defects.append("%s: projection not injective" % label)
        defects.extend("%s: projection: %s" % (label, v)
                       for v in map_violations(loc.projection))
        for e in T.marked:
            img = loc.projection.apply(1, e)
            if not is_equivalence_edge(loc.space, img).is_equivalence:
                defects.append("%s: image of %r has no inverse witness"
                               % (label, e))
        preferred = {e: loc.glued[e] for e in T.marked}
        U = localization_universal(T, loc.projection, localization=loc,
                                   preferred_extensions=preferred)
        ident = SimplicialMap.identity(loc.space)
        if not U.equals(ident):
            defects.append("%s: glued witnesses do not pin the universal "
                           "map to the identity" % label)
        U2 = localization_universal(T, loc.projection, localization=loc)
        U3 = localization_universal(T, loc.projection, localization=loc)
        if not U2.equals(U3):
            defects.append("%s: universal map is not deterministic" % label)
        for n in range(S.dim_bound + 1):
            for x in S.simplices[n]:
                if U2.apply(n, loc.projection.apply(n, x)) != loc.projection.apply(n, x):
                    defects.append("%s: universal map does not factor the "
                                   "projection at degree %d" % (label, n))
                    break
    seg = corpus.pool[1]
    loop = invertible_interval(corpus.dim_bound)
    incl = SimplicialMap(seg, loop, {
        n: {t: t for t in seg.simplices[n]} for n in range(seg.dim_bound + 1)})
    T = sharp(seg)
    loc = localize(T)
    U = localization_universal(T, incl, localization=loc)
    for n in range(seg.dim_bound + 1):
        for x in seg.simplices[n]:
            if U.apply(n, (0, x)) != incl.apply(n, x):
                defects.append("interval into loop: universal map does not "
                               "factor at degree %d" % n)
                break
    defects.extend("interval into loop: %s" % v for v in map_violations(U))
    detail = "%d marked objects localized" % (len(instances) + 1)
    return _result("localization", detail, defects)


# ---------------------------------------------------------------------------
# 9. triangle identities of the localization adjunction
# ---------------------------------------------------------------------------

def _triangle_instances():
    pt = standard_simplex(0, 2)
    seg = standard_simplex(1, 2)
    two = coproduct(pt, standard_simplex(0, 2)).space
    marked = (
        ("flat point", flat(pt)),
        ("flat interval", flat(seg)),
        ("sharp interval", sharp(seg)),
        ("flat two points", flat(two)),
    )
    plain = (("point", pt), ("interval", seg), ("two points", two))
    return marked, plain


def check_triangle_identities(corpus):
    defects = []
    marked, plain = _triangle_instances()
    for label, X in marked:
        locX = localize(X)
        eta = adjunction_unit(X, locX)
        U, loc2 = adjunction_counit(locX.space, source_localization=locX)
        Leta = localize_map(eta.mapping, locX, loc2)
        for n in range(locX.space.dim_bound + 1):
            for c in locX.space.simplices[n]:
                if U.apply(n, Leta.apply(n, c)) != c:
                    defects.append("%s: first triangle fails at degree %d"
                                   % (label, n))
                    break
    for label, S in plain:
        ES = mark_equivalences(S)
        loc1 = localize(ES)
        eta = adjunction_unit(ES, loc1)
        U, _ = adjunction_counit(S)
        for n in range(S.dim_bound + 1):
            for x in S.simplices[n]:
                if U.apply(n, eta.mapping.apply(n, x)) != x:
                    defects.append("%s: second triangle fails at degree %d"
                                   % (label, n))
                    break
    detail = ("%d marked and %d plain objects with at most 10 simplices"
              % (len(marked), len(plain)))
    return _result("triangle-identities", detail, defects)


# ---------------------------------------------------------------------------
# 10. fibration checks on relative nerves of category diagrams
# ---------------------------------------------------------------------------

def _category_nerve_diagrams(dim_bound):
    iso = walking_iso_category()
    one = chain_category(1)
    term = terminal_category()
    out = []

    collapse = Functor(iso, term, {0: "*", 1: "*"},
                       {m: ("id", "*") for m in iso.morphisms})
    out.append(("loop collapsing to a point", Diagram(one, {
        0: nerve(iso, dim_bound), 1: nerve(term, dim_bound),
    }, {
        (0, 0): SimplicialMap.identity(nerve(iso, dim_bound)),
        (1, 1): SimplicialMap.identity(nerve(term, dim_bound)),
        (0, 1): nerve_map(collapse, dim_bound),
    })))

    endpoint = Functor(term, one, {"*": 0}, {("id", "*"): (0, 0)})
    out.append(("point into an interval", Diagram(one, {
        0: nerve(term, dim_bound), 1: nerve(one, dim_bound),
    }, {
        (0, 0): SimplicialMap.identity(nerve(term, dim_bound)),
        (1, 1): SimplicialMap.identity(nerve(one, dim_bound)),
        (0, 1): nerve_map(endpoint, dim_bound),
    })))

    out.append(("constant interval",
                constant_diagram(one, nerve(one, dim_bound))))

    two = chain_category(2)
    swap = Functor(iso, iso, {0: 1, 1: 0},
                   {(a, b): (1 - a, 1 - b) for (a, b) in iso.morphisms})
    swap_nerve = nerve_map(swap, dim_bound)
    out.append(("swapped loops over a point", Diagram(two, {
        0: nerve(iso, dim_bound), 1: nerve(iso, dim_bound),
        2: nerve(term, dim_bound),
    }, {
        two.identity[0]: SimplicialMap.identity(nerve(iso, dim_bound)),
        two.identity[1]: SimplicialMap.identity(nerve(iso, dim_bound)),
        two.identity[2]: SimplicialMap.identity(nerve(term, dim_bound)),
        (0, 1): swap_nerve,
        (1, 2): nerve_map(collapse, dim_bound),
        (0, 2): nerve_map(collapse, dim_bound).compose(swap_nerve),
    })))
    return out


def check_cocartesian(corpus):
    defects = []
    family = _category_nerve_diagrams(corpus.dim_bound)
    marked_edges = 0
    for label, F in family:
        Fm = mark_equivalences_diagram(F)
        marked_rel, rel = marked_relative_nerve(Fm)
        p = rel.projection
        inner = is_inner_fibration(p, n_max=3)
        if not inner.ok:
            defects.append("%s: inner horn without filler: %s"
                           % (label, inner.defects[:1]))
        report = is_cocartesian_fibration(p, n_max=3)
        if not report.ok:
            defects.append("%s: not a cocartesian fibration: %s"
                           % (label, report.defects[:1]))
        for e in marked_rel.marked:
            marked_edges += 1
            if not is_cocartesian_edge(p, e, n_max=3).ok:
                defects.append("%s: marked edge %r fails the lifting test"
                               % (label, e))
    F0 = constant_diagram(terminal_category(),
                          standard_simplex(1, corpus.dim_bound))
    rel0 = relative_nerve(F0)
    long_edges = [c for c in rel0.space.simplices[1]
                  if dict(c[1])[(0, 1)] == (0, 1)]
    if len(long_edges) != 1:
        defects.append("interval over a point: expected one long edge, "
                       "found %d" % len(long_edges))
    elif is_cocartesian_edge(rel0.projection, long_edges[0], n_max=2).ok:
        defects.append("interval over a point: the long edge passes the "
                       "lifting test but must not")
    detail = ("%d diagrams of category nerves, %d marked edges, horn "
              "degree up to 3" % (len(family), marked_edges))
    return _result("cocartesian-checks", detail, defects)


# ---------------------------------------------------------------------------
# 11. tensoring a diagram with a fixed space
# ---------------------------------------------------------------------------

def check_tensor_compatibility(corpus):
    defects = []
    pt = standard_simplex(0, corpus.dim_bound)
    seg = standard_simplex(1, corpus.dim_bound)
    pairs = 0
    for idx, F in enumerate(corpus.diagrams[:6]):
        for k_label, K in (("point", pt), ("interval", seg)):
            pairs += 1
            rep = tensor_compat_check(F, K)
            if not rep.ok:
                defects.append("diagram %d against the %s: %s"
                               % (idx, k_label, rep.defects[0]))
    for idx in (0, 1):
        Fm = mark_equivalences_diagram(corpus.diagrams[idx])
        pairs += 1
        rep = tensor_compat_check(Fm, seg)
        if not rep.ok:
            defects.append("marked diagram %d against the interval: %s"
                           % (idx, rep.defects[0]))
    detail = "%d diagram and space pairs in bijection" % pairs
    return _result("tensor-compatibility", detail, defects)


# ---------------------------------------------------------------------------
# 12. the strict colimit against every cocone
# ---------------------------------------------------------------------------

def _small_colim_instances():
    bound = 2
    pt = standard_simplex(0, bound)
    seg = standard_simplex(1, bound)
    two = coproduct(pt, standard_simplex(0, bound)).space
    one = chain_category(1)
    chain2 = chain_category(2)
    maps_ss = [m.as_simplicial_map() for m in enumerate_cell_maps(seg, seg)]
    maps_ps = [m.as_simplicial_map() for m in enumerate_cell_maps(pt, seg)]
    maps_ts = [m.as_simplicial_map() for m in enumerate_cell_maps(two, seg)]
    maps_tp = [m.as_simplicial_map() for m in enumerate_cell_maps(two, pt)]
    maps_sp = [m.as_simplicial_map() for m in enumerate_cell_maps(seg, pt)]
    to_point = maps_sp[0]
    chain_maps = {
        chain2.identity[0]: SimplicialMap.identity(two),
        chain2.identity[1]: SimplicialMap.identity(seg),
        chain2.identity[2]: SimplicialMap.identity(pt),
        (0, 1): maps_ts[-1],
        (1, 2): to_point,
    }
    chain_maps[(0, 2)] = chain_maps[(1, 2)].compose(chain_maps[(0, 1)])
    return [
        ("interval onto interval", Diagram(one, {0: seg, 1: seg}, {
            (0, 0): SimplicialMap.identity(seg),
            (1, 1): SimplicialMap.identity(seg),
            (0, 1): maps_ss[0],
        })),
        ("point into interval", Diagram(one, {0: pt, 1: seg}, {
            (0, 0): SimplicialMap.identity(pt),
            (1, 1): SimplicialMap.identity(seg),
            (0, 1): maps_ps[-1],
        })),
        ("two points merging", Diagram(one, {0: two, 1: pt}, {
            (0, 0): SimplicialMap.identity(two),
            (1, 1): SimplicialMap.identity(pt),
            (0, 1): maps_tp[0],
        })),
        ("two points into an interval then collapsed",
         Diagram(chain2, {0: two, 1: seg, 2: pt}, chain_maps)),
    ]


def _all_cocones(F, T, pools):
    C = F.base
    objs = list(C.objects)
    cocones = []

    def extend(i, chosen):
        if i == len(objs):
            cocones.append(dict(chosen))
            return
        d = objs[i]
        for g in pools[d]:
            chosen[d] = g
            good = True
            for f in C.morphisms:
                a, b = C.src[f], C.tgt[f]
                if a in chosen and b in chosen:
                    if not chosen[b].compose(F.structure_map(f)).equals(chosen[a]):
                        good = False
                        break
            if good:
                extend(i + 1, chosen)
            del chosen[d]

    extend(0, {})
    return cocones


def check_colimit_universal(corpus):
    defects = []
    instances = _small_colim_instances()
    targets = (standard_simplex(0, 2), standard_simplex(1, 2))
    cocones_checked = 0
    for label, F in instances:
        bad = F.violations()
        if bad:
            defects.append("%s: %s" % (label, bad[0]))
            continue
        res = colim_diagram(F)
        defects.extend("%s: %s" % (label, v) for v in violations(res.space))
        for f in F.base.morphisms:
            a, b = F.base.src[f], F.base.tgt[f]
            lhs = res.injections[b].compose(F.structure_map(f))
            if not lhs.equals(res.injections[a]):
                defects.append("%s: insertion maps do not commute along %r"
                               % (label, f))
        for T in targets:
            pools = {d: [m.as_simplicial_map()
                         for m in enumerate_cell_maps(F.value(d), T)]
                     for d in F.base.objects}
            all_maps = [m.as_simplicial_map()
                        for m in enumerate_cell_maps(res.space, T)]
            for cocone in _all_cocones(F, T, pools):
                cocones_checked += 1
                med, med_defects = colim_mediating(F, res, cocone, T)
                if med_defects:
                    defects.append("%s: no mediating map for a commuting "
                                   "cocone" % label)
                    continue
                matching = [h for h in all_maps
                            if all(h.compose(res.injections[d]).equals(cocone[d])
                                   for d in F.base.objects)]
                if len(matching) != 1 or not matching[0].equals(med):
                    defects.append("%s: mediating map is not the unique "
                                   "factorization (%d found)"
                                   % (label, len(matching)))
    detail = ("%d small diagrams, %d commuting cocones factor uniquely"
              % (len(instances), cocones_checked))
    return _result("colimit-universal", detail, defects)


# ---------------------------------------------------------------------------
# the battery
# ---------------------------------------------------------------------------

ALL_CHECKS = (
    check_simplicial_identities,
    check_comparison_iso,
    check_fiber_laws,
    check_mapping_space_identities,
    check_terminal_collapse,
    check_bar_sizes,
    check_bar_comparison,
    check_localization,
    check_triangle_identities,
    check_cocartesian,
    check_tensor_compatibility,
    check_colimit_universal,
)


def run_all(seed=DEFAULT_SEED, count=60, dim_bound=POOL_BOUND):
    corpus = Corpus(dim_bound=dim_bound, seed=seed, count=count)
    return [check(corpus) for check in ALL_CHECKS]
