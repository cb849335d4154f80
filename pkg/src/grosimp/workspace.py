"""Named-object workspace files.

One JSON document holds categories, simplicial sets, marked sets, maps,
and diagrams that reference each other by name, together with a global
dimension bound and an optional step budget.  The emitted form is
canonical: sorted keys, two-space indentation, identifiers rendered
through encode_id, lists in canonical order.  Parsing a canonical
document and emitting it again reproduces the bytes exactly; parsing is
additionally tolerant of whitespace inside identifiers.

Identifiers inside a workspace are the encode_id strings of the actual
simplex, object, and morphism identifiers, and decode_id inverts that
encoding, so objects loaded from a file compare equal to the ones they
were emitted from.
"""

import json

from .category import (FiniteCategory, chain_category, discrete_category,
                       nerve, poset_category, terminal_category,
                       walking_iso_category)
from .diagram import Diagram
from .errors import WorkspaceError
from .marked import MarkedMap, MarkedSimplicialSet, flat, mark_equivalences, sharp
from .simplicial import (DEFAULT_DIM_BOUND, SimplicialMap,
                         TruncatedSimplicialSet, constant_map, coproduct,
                         product, pullback, pushout, standard_object)
from .util import canon_sorted, encode_id

SECTIONS = ("categories", "simplicial_sets", "marked_sets", "maps", "diagrams")
_BARE_DELIMS = ",(){}' \t"


def decode_id(text):
    """Inverse of encode_id; accepts stray whitespace between tokens."""
    if not isinstance(text, str):
        raise WorkspaceError("identifier must be a string, got %r" % (text,))
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos] in " \t":
            pos += 1

    def fail():
        raise WorkspaceError("malformed identifier %r (at offset %d)" % (text, pos))

    def value():
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            fail()
        c = text[pos]
        if c == "(" or c == "{":
            close = ")" if c == "(" else "}"
            pos += 1
            items = []
            skip_ws()
            if pos < len(text) and text[pos] == close:
                pos += 1
            else:
                while True:
                    items.append(value())
                    skip_ws()
                    if pos < len(text) and text[pos] == ",":
                        pos += 1
                        skip_ws()
                        if pos < len(text) and text[pos] == close:
                            pos += 1
                            break
                        continue
                    if pos < len(text) and text[pos] == close:
                        pos += 1
                        break
                    fail()
            return tuple(items) if close == ")" else frozenset(items)
        if c == "'":
            pos += 1
            out = []
            while pos < len(text):
                ch = text[pos]
                if ch == "\\":
                    if pos + 1 >= len(text):
                        fail()
                    out.append(text[pos + 1])
                    pos += 2
                    continue
                if ch == "'":
                    pos += 1
                    return "".join(out)
                out.append(ch)
                pos += 1
            fail()
        start = pos
        while pos < len(text) and text[pos] not in _BARE_DELIMS:
            pos += 1
        token = text[start:pos]
        if not token:
            fail()
        if token == "true":
            return True
        if token == "false":
            return False
        body = token[1:] if token.startswith("-") else token
        if body and all(c in "0123456789" for c in body):
            return int(token)
        return token

    got = value()
    skip_ws()
    if pos != len(text):
        fail()
    return got


# ---------------------------------------------------------------------------
# canonical entries from live objects
# ---------------------------------------------------------------------------

def category_entry(C):
    return {
        "objects": [encode_id(x) for x in C.objects],
        "morphisms": [encode_id(m) for m in C.morphisms],
        "src": {encode_id(m): encode_id(C.src[m]) for m in C.morphisms},
        "tgt": {encode_id(m): encode_id(C.tgt[m]) for m in C.morphisms},
        "identity": {encode_id(x): encode_id(C.identity[x]) for x in C.objects},
        "comp": {encode_id(pair): encode_id(h) for pair, h in C.comp.items()},
    }


def space_entry(S):
    N = S.dim_bound
    entry = {
        "dim_bound": N,
        "simplices": {str(n): [encode_id(x) for x in S.simplices[n]]
                      for n in range(N + 1)},
        "faces": {str(n): {encode_id(x): [encode_id(S.face(n, i, x))
                                          for i in range(n + 1)]
                           for x in S.simplices[n]}
                  for n in range(1, N + 1)},
        "degens": {str(n): {encode_id(x): [encode_id(S.degen(n, j, x))
                                           for j in range(n + 1)]
                            for x in S.simplices[n]}
                   for n in range(N)},
    }
    if S.vertex_labels:
        entry["vertex_labels"] = {encode_id(v): label
                                 for v, label in S.vertex_labels.items()}
    return entry


def marked_entry(space_name, M):
    return {
        "space": space_name,
        "marked": [encode_id(e) for e in canon_sorted(M.marked)],
    }


def map_entry(source_name, target_name, f):
    return {
        "source": source_name,
        "target": target_name,
        "components": {
            str(n): {encode_id(x): encode_id(y)
                     for x, y in f.components[n].items()}
            for n in range(f.source.dim_bound + 1)
        },
    }


# ---------------------------------------------------------------------------
# the workspace
# ---------------------------------------------------------------------------

class Workspace:
    """Named objects with lazy cross-reference resolution.

    `entries` holds the canonical JSON-ready entry of every named object;
    live objects are built on first access and memoized.  Structural
    problems (unknown names, unknown kinds, circular references, ids
    that do not resolve) raise WorkspaceError.
    """

    def __init__(self, dim_bound=DEFAULT_DIM_BOUND, budget=None):
        self.dim_bound = int(dim_bound)
        self.budget_limit = budget
        self.entries = {section: {} for section in SECTIONS}
        self.command = None
        self.report = None
        self._live = {section: {} for section in SECTIONS}
        self._building = set()

    # -- parsing -------------------------------------------------------

    @classmethod
    def parse(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise WorkspaceError("not valid JSON: %s" % exc)
        if not isinstance(data, dict):
            raise WorkspaceError("workspace document must be a JSON object")
        if data.get("schema") != 1:
            raise WorkspaceError("unsupported or missing schema version: %r"
                                 % (data.get("schema"),))
        known = set(SECTIONS) | {"schema", "dim_bound", "budget", "command",
                                 "report"}
        for key in data:
            if key not in known:
                raise WorkspaceError("unknown top-level key %r" % key)
        dim_bound = data.get("dim_bound", DEFAULT_DIM_BOUND)
        if not isinstance(dim_bound, int) or dim_bound < 0:
            raise WorkspaceError("dim_bound must be a nonnegative integer")
        budget = data.get("budget")
        if budget is not None and (not isinstance(budget, int) or budget <= 0):
            raise WorkspaceError("budget must be a positive integer or null")
        ws = cls(dim_bound=dim_bound, budget=budget)
        ws.command = data.get("command")
        ws.report = data.get("report")
        for section in SECTIONS:
            block = data.get(section, {})
            if not isinstance(block, dict):
                raise WorkspaceError("section %r must be an object" % section)
            for name, entry in block.items():
                if not isinstance(name, str) or not name:
                    raise WorkspaceError("object names must be nonempty strings")
                if not isinstance(entry, dict):
                    raise WorkspaceError("%s %r must be an object" % (section, name))
                ws.entries[section][name] = _normalize(section, name, entry)
        ws._check_references()
        return ws

    def _check_references(self):
        def need(section, name, context):
            if name not in self.entries[section]:
                raise WorkspaceError("%s references unknown %s %r"
                                     % (context, section.rstrip("s"), name))

        for name, entry in self.entries["simplicial_sets"].items():
            ctx = "simplicial set %r" % name
            if "nerve" in entry:
                need("categories", entry["nerve"], ctx)
            for key in ("product", "coproduct"):
                if key in entry:
                    for ref in entry[key]:
                        need("simplicial_sets", ref, ctx)
            for key in ("pullback", "pushout"):
                if key in entry:
                    for ref in entry[key]:
                        need("maps", ref, ctx)
        for name, entry in self.entries["marked_sets"].items():
            need("simplicial_sets", entry["space"], "marked set %r" % name)
        for name, entry in self.entries["maps"].items():
            ctx = "map %r" % name
            need("simplicial_sets", entry["source"], ctx)
            need("simplicial_sets", entry["target"], ctx)
        for name, entry in self.entries["diagrams"].items():
            ctx = "diagram %r" % name
            need("categories", entry["base"], ctx)
            value_section = "marked_sets" if entry.get("marked") else "simplicial_sets"
            for ref in entry["values"].values():
                need(value_section, ref, ctx)
            for ref in entry["maps"].values():
                need("maps", ref, ctx)

    # -- emission ------------------------------------------------------

    def emit(self):
        doc = {
            "schema": 1,
            "dim_bound": self.dim_bound,
            "budget": self.budget_limit,
        }
        for section in SECTIONS:
            doc[section] = self.entries[section]
        if self.command is not None:
            doc["command"] = self.command
        if self.report is not None:
            doc["report"] = self.report
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    # -- adding computed objects ----------------------------------------

    def add_category(self, name, C):
        self.entries["categories"][name] = category_entry(C)
        self._live["categories"][name] = C

    def add_space(self, name, S):
        self.entries["simplicial_sets"][name] = space_entry(S)
        self._live["simplicial_sets"][name] = S

    def add_marked(self, name, M, space_name):
        if space_name not in self.entries["simplicial_sets"]:
            self.add_space(space_name, M.underlying)
        self.entries["marked_sets"][name] = marked_entry(space_name, M)
        self._live["marked_sets"][name] = M

    def add_map(self, name, f, source_name, target_name):
        if source_name not in self.entries["simplicial_sets"]:
            self.add_space(source_name, f.source)
        if target_name not in self.entries["simplicial_sets"]:
            self.add_space(target_name, f.target)
        self.entries["maps"][name] = map_entry(source_name, target_name, f)
        self._live["maps"][name] = f

    # -- resolution ------------------------------------------------------

    def names(self, section):
        return sorted(self.entries[section])

    def category(self, name):
        return self._get("categories", name)

    def space(self, name):
        return self._get("simplicial_sets", name)

    def marked(self, name):
        return self._get("marked_sets", name)

    def mapping(self, name):
        return self._get("maps", name)

    def diagram(self, name):
        return self._get("diagrams", name)

    def _get(self, section, name):
        live = self._live[section]
        if name in live:
            return live[name]
        if name not in self.entries[section]:
            raise WorkspaceError("unknown %s %r" % (section.rstrip("s"), name))
        key = (section, name)
        if key in self._building:
            raise WorkspaceError("circular reference through %s %r"
                                 % (section.rstrip("s"), name))
        self._building.add(key)
        try:
            built = _BUILDERS[section](self, name, self.entries[section][name])
        finally:
            self._building.discard(key)
        live[name] = built
        return built


# ---------------------------------------------------------------------------
# entry normalization (parse side)
# ---------------------------------------------------------------------------

def _canon_id(name, enc):
    """Validate and canonicalize one encoded identifier."""
    try:
        return encode_id(decode_id(enc))
    except WorkspaceError as exc:
        raise WorkspaceError("%s: %s" % (name, exc))


def _canon_id_list(name, items):
    if not isinstance(items, list):
        raise WorkspaceError("%s: expected a list of identifiers" % name)
    decoded = [decode_id(x) for x in items]
    return [encode_id(x) for x in canon_sorted(decoded)]


def _canon_id_dict(name, block, value_kind="id"):
    if not isinstance(block, dict):
        raise WorkspaceError("%s: expected an object" % name)
    out = {}
    for k, v in block.items():
        ck = _canon_id(name, k)
        if value_kind == "id":
            out[ck] = _canon_id(name, v)
        elif value_kind == "id_list":
            if not isinstance(v, list):
                raise WorkspaceError("%s: expected lists of identifiers" % name)
            out[ck] = [_canon_id(name, x) for x in v]
        else:
            out[ck] = v
    return out


def _normalize(section, name, entry):
    where = "%s %r" % (section.rstrip("s"), name)
    if section == "categories":
        return _normalize_category(where, entry)
    if section == "simplicial_sets":
        return _normalize_space(where, entry)
    if section == "marked_sets":
        return _normalize_marked(where, entry)
    if section == "maps":
        return _normalize_map(where, entry)
    return _normalize_diagram(where, entry)


def _normalize_category(where, entry):
    if "kind" in entry:
        kind = entry["kind"]
        if kind == "terminal":
            return {"kind": "terminal"}
        if kind == "walking_iso":
            return {"kind": "walking_iso"}
        if kind == "chain":
            length = entry.get("length")
            if not isinstance(length, int) or length < 0:
                raise WorkspaceError("%s: chain length must be a nonnegative "
                                     "integer" % where)
            return {"kind": "chain", "length": length}
        if kind == "discrete":
            objs = entry.get("objects")
            if not isinstance(objs, list) or not objs:
                raise WorkspaceError("%s: discrete categories need a nonempty "
                                     "object list" % where)
            return {"kind": "discrete", "objects": _canon_id_list(where, objs)}
        if kind == "poset":
            elems = entry.get("elements")
            rel = entry.get("relation")
            if not isinstance(elems, list) or not isinstance(rel, list):
                raise WorkspaceError("%s: posets need element and relation "
                                     "lists" % where)
            pairs = []
            for p in rel:
                if not isinstance(p, list) or len(p) != 2:
                    raise WorkspaceError("%s: relation entries must be pairs"
                                         % where)
                pairs.append([_canon_id(where, p[0]), _canon_id(where, p[1])])
            return {"kind": "poset",
                    "elements": _canon_id_list(where, elems),
                    "relation": sorted(pairs)}
        raise WorkspaceError("%s: unknown category kind %r" % (where, kind))
    needed = {"objects", "morphisms", "src", "tgt", "identity", "comp"}
    if not needed <= set(entry):
        raise WorkspaceError("%s: explicit categories need keys %s"
                             % (where, sorted(needed)))
    return {
        "objects": _canon_id_list(where, entry["objects"]),
        "morphisms": _canon_id_list(where, entry["morphisms"]),
        "src": _canon_id_dict(where, entry["src"]),
        "tgt": _canon_id_dict(where, entry["tgt"]),
        "identity": _canon_id_dict(where, entry["identity"]),
        "comp": _canon_id_dict(where, entry["comp"]),
    }


def _normalize_space(where, entry):
    if "generator" in entry:
        gen = entry["generator"]
        if not isinstance(gen, str):
            raise WorkspaceError("%s: generator must be a string" % where)
        return {"generator": " ".join(gen.split())}
    if "nerve" in entry:
        if not isinstance(entry["nerve"], str):
            raise WorkspaceError("%s: nerve must name a category" % where)
        return {"nerve": entry["nerve"]}
    for key in ("product", "coproduct", "pullback", "pushout"):
        if key in entry:
            refs = entry[key]
            if (not isinstance(refs, list) or len(refs) != 2
                    or not all(isinstance(r, str) for r in refs)):
                raise WorkspaceError("%s: %s takes a pair of names" % (where, key))
            return {key: list(refs)}
    if "simplices" not in entry:
        raise WorkspaceError("%s: unknown simplicial set form (keys %s)"
                             % (where, sorted(entry)))
    N = entry.get("dim_bound")
    if not isinstance(N, int) or N < 0:
        raise WorkspaceError("%s: explicit spaces need a dim_bound" % where)
    simplices = entry["simplices"]
    if not isinstance(simplices, dict):
        raise WorkspaceError("%s: simplices must map degrees to lists" % where)
    out = {"dim_bound": N, "simplices": {}, "faces": {}, "degens": {}}
    for deg, items in simplices.items():
        _degree(where, deg, N)
        out["simplices"][deg] = _canon_id_list(where, items)
    for block_name in ("faces", "degens"):
        block = entry.get(block_name, {})
        if not isinstance(block, dict):
            raise WorkspaceError("%s: %s must be an object" % (where, block_name))
        for deg, table in block.items():
            n = _degree(where, deg, N)
            want = n + 1
            canon = _canon_id_dict("%s %s[%s]" % (where, block_name, deg),
                                   table, value_kind="id_list")
            for x, values in canon.items():
                if len(values) != want:
                    raise WorkspaceError(
                        "%s: %s of %s at degree %s must list %d entries"
                        % (where, block_name, x, deg, want))
            out[block_name][deg] = canon
    if "vertex_labels" in entry:
        labels = _canon_id_dict(where, entry["vertex_labels"], value_kind="raw")
        for v, label in labels.items():
            if not isinstance(label, int):
                raise WorkspaceError("%s: vertex labels must be integers" % where)
        out["vertex_labels"] = labels
    return out


def _degree(where, deg, N):
    try:
        n = int(deg)
    except (TypeError, ValueError):
        raise WorkspaceError("%s: degree keys must be integers, got %r"
                             % (where, deg))
    if not 0 <= n <= N:
        raise WorkspaceError("%s: degree %d outside 0..%d" % (where, n, N))
    return n


def _normalize_marked(where, entry):
    space = entry.get("space")
    if not isinstance(space, str):
        raise WorkspaceError("%s: marked sets must name their space" % where)
    if "marking" in entry:
        marking = entry["marking"]
        if marking not in ("flat", "sharp", "equivalences"):
            raise WorkspaceError("%s: unknown marking %r" % (where, marking))
        out = {"space": space, "marking": marking}
        if "witness_depth" in entry:
            depth = entry["witness_depth"]
            if not isinstance(depth, int) or depth < 0:
                raise WorkspaceError("%s: witness_depth must be a nonnegative "
                                     "integer" % where)
            out["witness_depth"] = depth
        return out
    if "marked" not in entry:
        raise WorkspaceError("%s: marked sets need a marking or an edge list"
                             % where)
    return {"space": space, "marked": _canon_id_list(where, entry["marked"])}


def _normalize_map(where, entry):
    source, target = entry.get("source"), entry.get("target")
    if not isinstance(source, str) or not isinstance(target, str):
        raise WorkspaceError("%s: maps must name source and target" % where)
    out = {"source": source, "target": target}
    if entry.get("identity"):
        out["identity"] = True
        return out
    if "constant" in entry:
        out["constant"] = _canon_id(where, entry["constant"])
        return out
    comps = entry.get("components")
    if not isinstance(comps, dict):
        raise WorkspaceError("%s: maps need components, a constant vertex, or "
                             "identity: true" % where)
    out["components"] = {}
    for deg, table in comps.items():
        try:
            n = int(deg)
        except (TypeError, ValueError):
            raise WorkspaceError("%s: degree keys must be integers" % where)
        if n < 0:
            raise WorkspaceError("%s: negative degree %d" % (where, n))
        out["components"][deg] = _canon_id_dict(
            "%s components[%s]" % (where, deg), table)
    return out


def _normalize_diagram(where, entry):
    base = entry.get("base")
    if not isinstance(base, str):
        raise WorkspaceError("%s: diagrams must name their base category" % where)
    values = entry.get("values")
    if not isinstance(values, dict) or not values:
        raise WorkspaceError("%s: diagrams need a values table" % where)
    maps = entry.get("maps", {})
    if not isinstance(maps, dict):
        raise WorkspaceError("%s: diagram maps must be an object" % where)
    for ref in list(values.values()) + list(maps.values()):
        if not isinstance(ref, str):
            raise WorkspaceError("%s: diagram entries reference objects by "
                                 "name" % where)
    return {
        "base": base,
        "marked": bool(entry.get("marked")),
        "values": {_canon_id(where, k): v for k, v in values.items()},
        "maps": {_canon_id(where, k): v for k, v in maps.items()},
    }


# ---------------------------------------------------------------------------
# live object builders
# ---------------------------------------------------------------------------

def _build_category(ws, name, entry):
    kind = entry.get("kind")
    if kind == "terminal":
        return terminal_category()
    if kind == "walking_iso":
        return walking_iso_category()
    if kind == "chain":
        return chain_category(entry["length"])
    if kind == "discrete":
        return discrete_category([decode_id(x) for x in entry["objects"]])
    if kind == "poset":
        return poset_category(
            [decode_id(x) for x in entry["elements"]],
            [(decode_id(a), decode_id(b)) for a, b in entry["relation"]])
    return FiniteCategory(
        [decode_id(x) for x in entry["objects"]],
        {decode_id(m): decode_id(o) for m, o in entry["src"].items()},
        {decode_id(m): decode_id(o) for m, o in entry["tgt"].items()},
        {decode_id(o): decode_id(m) for o, m in entry["identity"].items()},
        {decode_id(pair): decode_id(m) for pair, m in entry["comp"].items()},
    )


def _build_space(ws, name, entry):
    if "generator" in entry:
        try:
            return standard_object(entry["generator"], ws.dim_bound)
        except (ValueError, IndexError) as exc:
            raise WorkspaceError("simplicial set %r: %s" % (name, exc))
    if "nerve" in entry:
        return nerve(ws.category(entry["nerve"]), ws.dim_bound)
    if "product" in entry:
        a, b = entry["product"]
        return product(ws.space(a), ws.space(b)).space
    if "coproduct" in entry:
        a, b = entry["coproduct"]
        return coproduct(ws.space(a), ws.space(b)).space
    if "pullback" in entry:
        f, g = entry["pullback"]
        return pullback(ws.mapping(f), ws.mapping(g)).space
    if "pushout" in entry:
        f, g = entry["pushout"]
        return pushout(ws.mapping(f), ws.mapping(g)).space
    N = entry["dim_bound"]
    simplices = {int(deg): [decode_id(x) for x in items]
                 for deg, items in entry["simplices"].items()}
    faces = {}
    for deg, table in entry["faces"].items():
        n = int(deg)
        for enc, values in table.items():
            x = decode_id(enc)
            for i, v in enumerate(values):
                faces.setdefault((n, i), {})[x] = decode_id(v)
    degens = {}
    for deg, table in entry["degens"].items():
        n = int(deg)
        for enc, values in table.items():
            x = decode_id(enc)
            for j, v in enumerate(values):
                degens.setdefault((n, j), {})[x] = decode_id(v)
    labels = None
    if "vertex_labels" in entry:
        labels = {decode_id(v): label
                  for v, label in entry["vertex_labels"].items()}
    return TruncatedSimplicialSet(N, simplices, faces, degens,
                                  vertex_labels=labels)


def _build_marked(ws, name, entry):
    S = ws.space(entry["space"])
    marking = entry.get("marking")
    if marking == "flat":
        return flat(S)
    if marking == "sharp":
        return sharp(S)
    if marking == "equivalences":
        return mark_equivalences(S, entry.get("witness_depth", 0))
    edges = []
    for enc in entry["marked"]:
        e = decode_id(enc)
        if not S.has(1, e):
            raise WorkspaceError("marked set %r: %s is not an edge of %s"
                                 % (name, enc, entry["space"]))
        edges.append(e)
    return MarkedSimplicialSet(S, edges)


def _build_map(ws, name, entry):
    src = ws.space(entry["source"])
    tgt = ws.space(entry["target"])
    if entry.get("identity"):
        if src != tgt:
            raise WorkspaceError("map %r: identity needs equal source and "
                                 "target" % name)
        return SimplicialMap.identity(src)
    if "constant" in entry:
        v = decode_id(entry["constant"])
        if not tgt.has(0, v):
            raise WorkspaceError("map %r: constant vertex %s is not a vertex "
                                 "of %s" % (name, entry["constant"], entry["target"]))
        return constant_map(src, tgt, v)
    comps = {}
    for deg, table in entry["components"].items():
        n = int(deg)
        if n > src.dim_bound:
            raise WorkspaceError("map %r: component degree %d beyond the "
                                 "source bound %d" % (name, n, src.dim_bound))
        block = {}
        for k, v in table.items():
            x, y = decode_id(k), decode_id(v)
            if not src.has(n, x):
                raise WorkspaceError("map %r: %s is not a %d-simplex of %s"
                                     % (name, k, n, entry["source"]))
            if not tgt.has(n, y):
                raise WorkspaceError("map %r: %s is not a %d-simplex of %s"
                                     % (name, v, n, entry["target"]))
            block[x] = y
        comps[n] = block
    # degenerate simplices have forced images; fill the ones left out
    for n in range(src.dim_bound + 1):
        block = comps.setdefault(n, {})
        for x in src.simplices[n]:
            if x in block:
                continue
            pre = src.degenerate_preimage(n, x)
            if pre is None:
                raise WorkspaceError("map %r: no image for nondegenerate "
                                     "%d-simplex %s" % (name, n, encode_id(x)))
            j, y = pre
            if y not in comps[n - 1]:
                raise WorkspaceError("map %r: no image for %d-simplex %s"
                                     % (name, n - 1, encode_id(y)))
            block[x] = tgt.degen(n - 1, j, comps[n - 1][y])
    return SimplicialMap(src, tgt, comps)


def _build_diagram(ws, name, entry):
    C = ws.category(entry["base"])
    marked = entry["marked"]
    values = {}
    seen = set()
    for enc, ref in entry["values"].items():
        d = decode_id(enc)
        if d not in C.objects:
            raise WorkspaceError("diagram %r: %s is not an object of %s"
                                 % (name, enc, entry["base"]))
        seen.add(d)
        values[d] = ws.marked(ref) if marked else ws.space(ref)
    missing = [x for x in C.objects if x not in seen]
    if missing:
        raise WorkspaceError("diagram %r: no value at %s"
                             % (name, encode_id(missing[0])))
    at_morphism = {}
    for enc, ref in entry["maps"].items():
        m = decode_id(enc)
        if m not in C.morphisms:
            raise WorkspaceError("diagram %r: %s is not a morphism of %s"
                                 % (name, enc, entry["base"]))
        plain = ws.mapping(ref)
        if marked:
            at_morphism[m] = MarkedMap(values[C.src[m]], values[C.tgt[m]], plain)
        else:
            at_morphism[m] = plain
    for d in C.objects:
        i = C.identity[d]
        if i not in at_morphism:
            if marked:
                at_morphism[i] = MarkedMap.identity(values[d])
            else:
                at_morphism[i] = SimplicialMap.identity(values[d])
    for m in C.morphisms:
        if m not in at_morphism:
            raise WorkspaceError("diagram %r: no structure map at %s"
                                 % (name, encode_id(m)))
    return Diagram(C, values, at_morphism, marked=marked)


_BUILDERS = {
    "categories": _build_category,
    "simplicial_sets": _build_space,
    "marked_sets": _build_marked,
    "maps": _build_map,
    "diagrams": _build_diagram,
}
