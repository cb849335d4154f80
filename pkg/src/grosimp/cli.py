"""Command line interface.

Every command reads one workspace file, computes, and emits a workspace
document (schema, named objects, a ``command`` echo, and a ``report``)
to stdout or to ``--out``.  Reruns are byte-identical.  Exit codes:
0 success, 1 invariant defects (with the report), 2 parse or usage
errors, 3 step budget exceeded.
"""

import argparse
import sys

from . import properties
from .category import nerve
from .errors import (BudgetExceeded, ExtensionSearchError, MarkedEdgeError,
                     TruncationError, WorkspaceError)
from .fibrations import (cocartesian_edges, is_cocartesian_fibration,
                         is_inner_fibration)
from .grothendieck import (canonical_iso, gerbe, grothendieck_total,
                           marked_grothendieck_total, marked_relative_nerve,
                           relative_nerve)
from .hocolim import (bar_construction, colim_diagram, colim_marked, hocolim,
                      iota_comparison)
from .marked import flat, localize, mark_equivalences, sharp
from .util import Budget, canon_sorted, encode_id
from .validate import map_violations, violations
from .workspace import SECTIONS, Workspace, decode_id


def _load(args):
    try:
        with open(args.workspace) as fh:
            text = fh.read()
    except OSError as exc:
        raise WorkspaceError("cannot read %s: %s" % (args.workspace, exc))
    ws = Workspace.parse(text)
    if getattr(args, "dim_bound", None) is not None:
        ws.dim_bound = args.dim_bound
    if getattr(args, "budget", None) is not None:
        ws.budget_limit = args.budget
    return ws


def _budget(ws):
    return Budget(ws.budget_limit) if ws.budget_limit is not None else None


def _output(ws):
    out = Workspace(dim_bound=ws.dim_bound, budget=ws.budget_limit)
    return out


def _finish(args, out):
    text = out.emit()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sizes(S):
    return [S.simplex_count(n) for n in range(S.dim_bound + 1)]


def _strs(items):
    return [x if isinstance(x, str) else repr(x) for x in items]


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------

def cmd_validate(args):
    ws = _load(args)
    out = _output(ws)
    defects = {}
    checked = 0
    getters = {
        "categories": (ws.category, lambda C: C.violations()),
        "simplicial_sets": (ws.space, violations),
        "marked_sets": (ws.marked, lambda M: M.violations()),
        "maps": (ws.mapping, map_violations),
        "diagrams": (ws.diagram, lambda F: F.violations()),
    }
    wanted = set(args.names)
    for section in SECTIONS:
        get, check = getters[section]
        for name in ws.names(section):
            if wanted and name not in wanted:
                continue
            checked += 1
            label = "%s/%s" % (section, name)
            try:
                found = _strs(check(get(name)))
            except (WorkspaceError, TruncationError, ValueError) as exc:
                found = [str(exc)]
            if found:
                defects[label] = found
    if wanted:
        known = {name for section in SECTIONS for name in ws.names(section)}
        for name in sorted(wanted - known):
            defects["unknown/%s" % name] = ["no object by this name"]
    out.command = {"name": "validate", "names": sorted(wanted)}
    out.report = {"checked": checked, "defects": defects}
    _finish(args, out)
    return 1 if defects else 0


def cmd_nerve(args):
    ws = _load(args)
    C = ws.category(args.category)
    N = nerve(C, ws.dim_bound)
    out = _output(ws)
    out.add_category(args.category, C)
    out.add_space(args.category + "_nerve", N)
    out.command = {"name": "nerve", "category": args.category}
    out.report = {"sizes": _sizes(N)}
    _finish(args, out)
    return 0


def cmd_gerbe(args):
    ws = _load(args)
    F = ws.diagram(args.diagram)
    sigma = decode_id(args.chain)
    base_nerve = nerve(F.base, max(args.degree, 1))
    if not base_nerve.has(args.degree, sigma):
        raise WorkspaceError("%s is not a degree-%d chain of the base of %r"
                             % (args.chain, args.degree, args.diagram))
    G = gerbe(F, args.degree, sigma, args.k_max, budget=_budget(ws))
    out = _output(ws)
    out.add_space(args.diagram + "_gerbe", G.space)
    out.command = {"name": "gerbe", "diagram": args.diagram,
                   "degree": args.degree, "chain": encode_id(sigma),
                   "k_max": args.k_max}
    out.report = {"sizes": _sizes(G.space),
                  "objects": [encode_id(d) for d in G.objects]}
    _finish(args, out)
    return 0


def cmd_grothendieck(args):
    ws = _load(args)
    F = ws.diagram(args.diagram)
    out = _output(ws)
    name = args.diagram
    if F.marked:
        marked, total = marked_grothendieck_total(F)
    else:
        total = grothendieck_total(F)
        marked = None
    out.add_space(name + "_total", total.space)
    out.add_space(name + "_base_nerve", total.nerve)
    out.add_map(name + "_total_projection", total.projection,
                name + "_total", name + "_base_nerve")
    if marked is not None:
        out.add_marked(name + "_total_marked", marked, name + "_total")
    out.command = {"name": "grothendieck", "diagram": name}
    out.report = {"sizes": _sizes(total.space),
                  "base_sizes": _sizes(total.nerve)}
    if marked is not None:
        out.report["marked"] = len(marked.marked)
    _finish(args, out)
    return 0


def cmd_relnerve(args):
    ws = _load(args)
    F = ws.diagram(args.diagram)
    out = _output(ws)
    name = args.diagram
    if F.marked:
        marked, rel = marked_relative_nerve(F)
    else:
        rel = relative_nerve(F)
        marked = None
    out.add_space(name + "_relnerve", rel.space)
    out.add_space(name + "_base_nerve", rel.nerve)
    out.add_map(name + "_relnerve_projection", rel.projection,
                name + "_relnerve", name + "_base_nerve")
    if marked is not None:
        out.add_marked(name + "_relnerve_marked", marked, name + "_relnerve")
    out.command = {"name": "relnerve", "diagram": name}
    out.report = {"sizes": _sizes(rel.space),
                  "base_sizes": _sizes(rel.nerve)}
    if marked is not None:
        out.report["marked"] = len(marked.marked)
    _finish(args, out)
    return 0


def cmd_check_iso(args):
    ws = _load(args)
    F = ws.diagram(args.diagram)
    iso, rep, total, rel = canonical_iso(F)
    out = _output(ws)
    name = args.diagram
    out.add_space(name + "_total", total.space)
    out.add_space(name + "_relnerve", rel.space)
    out.add_map(name + "_comparison", iso, name + "_total", name + "_relnerve")
    out.command = {"name": "check-iso", "diagram": name}
    if rep.ok:
        summary = "bijective, degrees 0..%d" % total.space.dim_bound
    else:
        summary = "defective in %d places" % len(rep.defects)
    out.report = {
        "ok": rep.ok,
        "summary": summary,
        "counts": [list(pair) for pair in rep.counts],
        "bijective_degrees": list(rep.bijective_degrees),
        "defects": _strs(rep.defects),
    }
    _finish(args, out)
    return 0 if rep.ok else 1


def cmd_mark(args):
    ws = _load(args)
    S = ws.space(args.space)
    if args.marking == "flat":
        M = flat(S)
    elif args.marking == "sharp":
        M = sharp(S)
    else:
        M = mark_equivalences(S, args.witness_depth)
    out = _output(ws)
    out.add_space(args.space, S)
    out.add_marked("%s_%s" % (args.space, args.marking), M, args.space)
    out.command = {"name": "mark", "space": args.space,
                   "marking": args.marking,
                   "witness_depth": args.witness_depth}
    out.report = {"marked": len(M.marked)}
    _finish(args, out)
    return 0


def cmd_localize(args):
    ws = _load(args)
    M = ws.marked(args.marked)
    space_name = ws.entries["marked_sets"][args.marked]["space"]
    loc = localize(M)
    out = _output(ws)
    name = args.marked
    out.add_marked(name, M, space_name)
    out.add_space(name + "_localized", loc.space)
    out.add_map(name + "_localized_projection", loc.projection,
                space_name, name + "_localized")
    out.command = {"name": "localize", "marked": name}
    out.report = {"sizes": _sizes(loc.space),
                  "inverted": len(M.marked),
                  "warnings": list(loc.warnings)}
    _finish(args, out)
    return 0


def cmd_check_fibration(args):
    ws = _load(args)
    p = ws.mapping(args.map)
    budget = _budget(ws)
    inner = is_inner_fibration(p, n_max=args.nmax, budget=budget)
    coc = is_cocartesian_fibration(p, n_max=args.nmax, budget=budget)
    out = _output(ws)
    out.command = {"name": "check-fibration", "map": args.map,
                   "nmax": args.nmax}
    out.report = {
        "inner": {"ok": inner.ok, "problems_checked": inner.problems_checked,
                  "defects": _strs(inner.defects)},
        "cocartesian": {"ok": coc.ok, "defects": _strs(coc.defects)},
    }
    _finish(args, out)
    return 0 if inner.ok and coc.ok else 1


def cmd_cocartesian_edges(args):
    ws = _load(args)
    p = ws.mapping(args.map)
    reports = cocartesian_edges(p, n_max=args.nmax, budget=_budget(ws))
    out = _output(ws)
    out.command = {"name": "cocartesian-edges", "map": args.map,
                   "nmax": args.nmax}
    out.report = {"edges": [
        {"edge": encode_id(e), "ok": reports[e].ok,
         "problems_checked": reports[e].problems_checked}
        for e in canon_sorted(reports)
    ]}
    _finish(args, out)
    return 0


def cmd_bar(args):
    ws = _load(args)
    F = ws.diagram(args.diagram)
    bar = bar_construction(F)
    out = _output(ws)
    name = args.diagram
    out.add_space(name + "_bar", bar.space)
    out.add_space(name + "_base_nerve", bar.nerve)
    out.add_marked(name + "_bar_marked", bar.marked, name + "_bar")
    out.add_map(name + "_bar_projection", bar.projection,
                name + "_bar", name + "_base_nerve")
    out.command = {"name": "bar", "diagram": name}
    out.report = {"sizes": _sizes(bar.space),
                  "marked": len(bar.marked.marked)}
    _finish(args, out)
    return 0


def cmd_iota(args):
    ws = _load(args)
    F = ws.diagram(args.diagram)
    res = iota_comparison(F)
    out = _output(ws)
    name = args.diagram
    out.add_space(name + "_bar", res.bar.space)
    out.add_space(name + "_total", res.total.space)
    out.add_marked(name + "_bar_marked", res.source, name + "_bar")
    out.add_marked(name + "_total_marked", res.target, name + "_total")
    out.add_map(name + "_comparison", res.mapping.mapping,
                name + "_bar", name + "_total")
    out.command = {"name": "iota", "diagram": name}
    out.report = {"defects": _strs(res.defects),
                  "injective_degrees": list(res.injective_degrees)}
    _finish(args, out)
    return 0 if not res.defects else 1


def cmd_colim(args):
    ws = _load(args)
    F = ws.diagram(args.diagram)
    out = _output(ws)
    name = args.diagram
    if F.marked:
        marked, res = colim_marked(F)
    else:
        res = colim_diagram(F)
        marked = None
    out.add_space(name + "_colim", res.space)
    if marked is not None:
        out.add_marked(name + "_colim_marked", marked, name + "_colim")
    value_names = ws.entries["diagrams"][name]["values"]
    for d in F.base.objects:
        ref = value_names[encode_id(d)]
        if F.marked:
            ref = ws.entries["marked_sets"][ref]["space"]
        out.add_map("%s_colim_inj_%s" % (name, encode_id(d)),
                    res.injections[d], ref, name + "_colim")
    out.command = {"name": "colim", "diagram": name}
    out.report = {"sizes": _sizes(res.space)}
    _finish(args, out)
    return 0


def cmd_hocolim(args):
    ws = _load(args)
    F = ws.diagram(args.diagram)
    res = hocolim(F, witness_depth=args.witness_depth)
    out = _output(ws)
    name = args.diagram
    out.add_space(name + "_bar", res.bar.space)
    out.add_marked(name + "_bar_marked", res.bar.marked, name + "_bar")
    out.add_space(name + "_hocolim", res.localized.space)
    out.add_map(name + "_hocolim_projection", res.localized.projection,
                name + "_bar", name + "_hocolim")
    out.command = {"name": "hocolim", "diagram": name,
                   "witness_depth": args.witness_depth}
    out.report = {"bar_sizes": _sizes(res.bar.space),
                  "sizes": _sizes(res.localized.space),
                  "inverted": len(res.bar.marked.marked),
                  "warnings": list(res.localized.warnings)}
    _finish(args, out)
    return 0


def cmd_suite(args):
    results = properties.run_all(seed=args.seed, count=args.count)
    lines = [r.line() for r in results]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="grosimp",
        description="Constructions on finite truncated simplicial sets: "
                    "total spaces, relative nerves, markings, "
                    "localizations, and homotopy colimits.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("workspace", help="workspace JSON file")
    common.add_argument("--dim-bound", type=int, default=None,
                        help="override the workspace dimension bound")
    common.add_argument("--budget", type=int, default=None,
                        help="override the workspace step budget")
    common.add_argument("--out", default=None,
                        help="write the output document here instead of stdout")

    def add(name, handler, helptext, parents=(common,)):
        p = sub.add_parser(name, parents=list(parents), help=helptext)
        p.set_defaults(handler=handler)
        return p

    p = add("validate", cmd_validate, "check structural invariants")
    p.add_argument("names", nargs="*",
                   help="objects to check (default: everything)")

    p = add("nerve", cmd_nerve, "nerve of a named category")
    p.add_argument("--category", required=True)

    p = add("gerbe", cmd_gerbe, "mapping-space gerbe over one base chain")
    p.add_argument("--diagram", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--chain", required=True,
                   help="encoded chain identifier, e.g. \"((0,1))\"")
    p.add_argument("--k-max", type=int, required=True, dest="k_max")

    p = add("grothendieck", cmd_grothendieck,
            "total space of a diagram with its projection")
    p.add_argument("--diagram", required=True)

    p = add("relnerve", cmd_relnerve,
            "relative nerve of a diagram with its projection")
    p.add_argument("--diagram", required=True)

    p = add("check-iso", cmd_check_iso,
            "compare the total space with the relative nerve")
    p.add_argument("--diagram", required=True)

    p = add("mark", cmd_mark, "mark the edges of a simplicial set")
    p.add_argument("--space", required=True)
    p.add_argument("--marking", required=True,
                   choices=("flat", "sharp", "equivalences"))
    p.add_argument("--witness-depth", type=int, default=0)

    p = add("localize", cmd_localize, "invert the marked edges")
    p.add_argument("--marked", required=True)

    p = add("check-fibration", cmd_check_fibration,
            "inner and cocartesian fibration checks for a map")
    p.add_argument("--map", required=True)
    p.add_argument("--nmax", type=int, default=None)

    p = add("cocartesian-edges", cmd_cocartesian_edges,
            "per-edge initial-vertex lifting reports")
    p.add_argument("--map", required=True)
    p.add_argument("--nmax", type=int, default=None)

    p = add("bar", cmd_bar, "bar object of a marked diagram")
    p.add_argument("--diagram", required=True)

    p = add("iota", cmd_iota, "bar-to-total comparison over the base nerve")
    p.add_argument("--diagram", required=True)

    p = add("colim", cmd_colim, "degreewise colimit with its injections")
    p.add_argument("--diagram", required=True)

    p = add("hocolim", cmd_hocolim,
            "localized bar object with size statistics")
    p.add_argument("--diagram", required=True)
    p.add_argument("--witness-depth", type=int, default=0)

    p = sub.add_parser("suite", help="run the acceptance battery")
    p.set_defaults(handler=cmd_suite)
    p.add_argument("--seed", type=int, default=properties.DEFAULT_SEED)
    p.add_argument("--count", type=int, default=60)
    p.add_argument("--out", default=None)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except WorkspaceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (MarkedEdgeError, ExtensionSearchError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except TruncationError as exc:
        print("invariant defect: %s" % exc, file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
