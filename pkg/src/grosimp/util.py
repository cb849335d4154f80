"""Small shared helpers: canonical ordering, identifier encoding,
union-find, and step budgets."""

from .errors import BudgetExceeded


def canon_key(x):
    """Total order key for heterogeneous simplex identifiers.

    Identifiers produced by the constructions in this package mix
    integers, strings, and nested tuples.  Python refuses to compare
    those directly, so every deterministic ordering in the package goes
    through this key.
    """
    if isinstance(x, bool):
        return (1, "", int(x))
    if isinstance(x, int):
        return (0, "", x)
    if isinstance(x, str):
        return (2, x, 0)
    if isinstance(x, tuple):
        return (3, tuple(canon_key(v) for v in x), 0)
    if isinstance(x, frozenset):
        return (4, tuple(sorted(canon_key(v) for v in x)), 0)
    return (5, repr(x), 0)


def canon_sorted(items):
    return sorted(items, key=canon_key)


def encode_id(x):
    """Stable, compact string form of a simplex identifier.

    Used when emitting JSON, where dictionary keys must be strings.
    The encoding is injective on the identifiers this package builds,
    so re-loading an emitted file yields one opaque string id per
    simplex and emitting again reproduces the bytes exactly.
    """
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, tuple):
        return "(" + ",".join(encode_id(v) for v in x) + ")"
    if isinstance(x, str):
        plain = x and all(c.isalnum() or c in "_-.:" for c in x)
        if plain and not x.isdigit() and x not in ("true", "false"):
            return x
        return "'" + x.replace("\\", "\\\\").replace("'", "\\'") + "'"
    if isinstance(x, frozenset):
        return "{" + ",".join(encode_id(v) for v in canon_sorted(x)) + "}"
    return "'" + repr(x) + "'"


class UnionFind:
    """Disjoint sets over arbitrary hashable elements."""

    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def classes(self):
        """Map each root to the canonically sorted list of its members."""
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        for members in out.values():
            members.sort(key=canon_key)
        return out


class Budget:
    """Mutable step counter for bounded searches.

    `spend` raises BudgetExceeded once the limit is crossed.  A limit of
    None never raises, which keeps small calls free of bookkeeping.
    """

    def __init__(self, limit=None):
        self.limit = limit
        self.spent = 0

    def spend(self, n=1):
        self.spent += n
        if self.limit is not None and self.spent > self.limit:
            raise BudgetExceeded(
                "search budget exceeded (%d steps, limit %d)"
                % (self.spent, self.limit),
                spent=self.spent,
                limit=self.limit,
            )


def as_budget(budget):
    if budget is None or isinstance(budget, Budget):
        return budget if budget is not None else Budget(None)
    return Budget(int(budget))
