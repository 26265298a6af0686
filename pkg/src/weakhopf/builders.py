"""Group algebras, groupoid algebras and Drinfeld doubles of finite groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

from .scalars import ONE, FieldSpec
from .wha import WeakHopfAlgebra


class InvalidTable(ValueError):
    pass


@dataclass(frozen=True)
class GroupTable:
    """``mul[g][h]`` is the index of gh."""

    order: int
    mul: tuple
    inverse: tuple
    identity: int
    labels: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))
        object.__setattr__(self, "inverse", tuple(self.inverse))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"g{i}" for i in range(self.order)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        self.validate()

    def validate(self):
        n, m, e = self.order, self.mul, self.identity
        if n < 1:
            raise InvalidTable("a group needs at least one element")
        if len(m) != n or any(len(r) != n for r in m):
            raise InvalidTable("multiplication table must be order x order")
        if len(self.inverse) != n or len(self.labels) != n:
            raise InvalidTable("inverse table and labels need one entry per element")
        if not all(isinstance(x, int) and 0 <= x < n for r in m for x in r):
            raise InvalidTable("multiplication table entry out of range")
        if not (isinstance(e, int) and 0 <= e < n):
            raise InvalidTable("identity out of range")
        for g in range(n):
            if m[e][g] != g or m[g][e] != g:
                raise InvalidTable(f"identity law fails at {g}")
            gi = self.inverse[g]
            if not (isinstance(gi, int) and 0 <= gi < n) or m[g][gi] != e or m[gi][g] != e:
                raise InvalidTable(f"inverse law fails at {g}")
        for a, b, c in product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise InvalidTable(f"associativity fails at {(a, b, c)}")

    def to_dict(self):
        return {"kind": "group", "order": self.order, "mul": [list(r) for r in self.mul],
                "inverse": list(self.inverse), "identity": self.identity,
                "labels": list(self.labels)}

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(int(d["order"]), d["mul"], d["inverse"], int(d["identity"]),
                       tuple(d.get("labels", ())))
        except (KeyError, TypeError) as exc:
            raise InvalidTable(f"malformed group table: {exc}") from exc


@dataclass(frozen=True)
class GroupoidTable:
    """Morphisms with (source, target); ``compose[(f, g)]`` is f o g (g first),
    defined exactly when source(f) == target(g)."""

    objects: tuple
    source: tuple
    target: tuple
    compose: dict = field(hash=False)
    identities: tuple
    inverse: tuple
    labels: tuple = ()

    def __post_init__(self):
        for name in ("objects", "source", "target", "identities", "inverse", "labels"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "compose", {tuple(k): v for k, v in dict(self.compose).items()})
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"f{i}" for i in range(len(self.source))))
        self.validate()

    @property
    def size(self):
        return len(self.source)

    def validate(self):
        n = self.size
        nobj = len(self.objects)
        if len(self.target) != n or len(self.inverse) != n or len(self.labels) != n:
            raise InvalidTable("source, target, inverse and labels need one entry per morphism")
        if len(self.identities) != nobj:
            raise InvalidTable("one identity per object")
        if not all(0 <= x < nobj for x in self.source + self.target):
            raise InvalidTable("source/target out of range")
        for (f, g), h in self.compose.items():
            if self.source[f] != self.target[g]:
                raise InvalidTable(f"composite {(f, g)} given for non-composable pair")
            if not 0 <= h < n or self.source[h] != self.source[g] or self.target[h] != self.target[f]:
                raise InvalidTable(f"composite {(f, g)} has wrong endpoints")
        for f, g in product(range(n), repeat=2):
            if self.source[f] == self.target[g] and (f, g) not in self.compose:
                raise InvalidTable(f"missing composite {(f, g)}")
        for x, i in enumerate(self.identities):
            if self.source[i] != x or self.target[i] != x:
                raise InvalidTable(f"identity of object {x} is not a loop at it")
            for f in range(n):
                if self.target[f] == x and self.compose[(i, f)] != f:
                    raise InvalidTable(f"left identity law fails at {f}")
                if self.source[f] == x and self.compose[(f, i)] != f:
                    raise InvalidTable(f"right identity law fails at {f}")
        for f in range(n):
            fi = self.inverse[f]
            if not 0 <= fi < n or self.compose.get((f, fi)) != self.identities[self.target[f]] \
                    or self.compose.get((fi, f)) != self.identities[self.source[f]]:
                raise InvalidTable(f"inverse law fails at {f}")
        c = self.compose
        for f, g, h in product(range(n), repeat=3):
            if (f, g) in c and (g, h) in c and c[(c[(f, g)], h)] != c[(f, c[(g, h)])]:
                raise InvalidTable(f"associativity fails at {(f, g, h)}")

    def to_dict(self):
        return {"kind": "groupoid", "objects": list(self.objects), "source": list(self.source),
                "target": list(self.target),
                "compose": [[f, g, h] for (f, g), h in sorted(self.compose.items())],
                "identities": list(self.identities), "inverse": list(self.inverse),
                "labels": list(self.labels)}

    @classmethod
    def from_dict(cls, d):
        try:
            comp = {(int(f), int(g)): int(h) for f, g, h in d["compose"]}
            return cls(tuple(d["objects"]), d["source"], d["target"], comp, d["identities"],
                       d["inverse"], tuple(d.get("labels", ())))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidTable(f"malformed groupoid table: {exc}") from exc


# -- standard tables --------------------------------------------------------------

def trivial_group():
    return GroupTable(1, [[0]], [0], 0, ("e",))


def cyclic_group(n):
    return GroupTable(n, [[(a + b) % n for b in range(n)] for a in range(n)],
                      [(-a) % n for a in range(n)], 0, tuple(f"c^{a}" for a in range(n)))


def _perm_label(p):
    seen, cycles = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j + 1)
            j = p[j]
        cycles.append("(" + " ".join(map(str, c)) + ")")
    return "".join(cycles) or "e"


def symmetric_group(n):
    """S_n with (pq)(i) = p(q(i)), identity first."""
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    mul = [[index[tuple(p[q[i]] for i in range(n))] for q in elems] for p in elems]
    inv = []
    for p in elems:
        r = [0] * n
        for i, v in enumerate(p):
            r[v] = i
        inv.append(index[tuple(r)])
    return GroupTable(len(elems), mul, inv, 0, tuple(_perm_label(p) for p in elems))


def groupoid_from_group(G):
    comp = {(a, b): G.mul[a][b] for a in range(G.order) for b in range(G.order)}
    return GroupoidTable((0,), [0] * G.order, [0] * G.order, comp, (G.identity,), G.inverse,
                         G.labels)


def indiscrete_groupoid(k):
    """The pair groupoid on k objects: exactly one morphism x -> y for all x, y.

    Morphism y <- x has index y*k + x.
    """
    idx = lambda y, x: y * k + x  # noqa: E731
    src, tgt, labels = [], [], []
    for y in range(k):
        for x in range(k):
            src.append(x)
            tgt.append(y)
            labels.append(f"id{x + 1}" if x == y else f"f{y + 1}{x + 1}")
    comp = {(idx(z, y), idx(y, x)): idx(z, x) for x in range(k) for y in range(k) for z in range(k)}
    return GroupoidTable(tuple(range(k)), src, tgt, comp, [idx(x, x) for x in range(k)],
                         [idx(x, y) for y in range(k) for x in range(k)], labels)


def discrete_groupoid(k):
    comp = {(x, x): x for x in range(k)}
    return GroupoidTable(tuple(range(k)), range(k), range(k), comp, range(k), range(k),
                         tuple(f"id{x + 1}" for x in range(k)))


# -- builders ----------------------------------------------------------------------

def build_groupoid_algebra(Gd, field=None):
    """Returns (H, R) with R = Delta(1)."""
    n = Gd.size
    mult = {(f, g): {h: ONE} for (f, g), h in Gd.compose.items()}
    unit = {i: ONE for i in Gd.identities}
    comult = [{(g, g): ONE} for g in range(n)]
    counit = {g: ONE for g in range(n)}
    antipode = [{Gd.inverse[g]: ONE} for g in range(n)]
    H = WeakHopfAlgebra(n, mult, unit, comult, counit, antipode, field, Gd.labels)
    return H, dict(H.delta_one)


def build_group_algebra(G, field=None):
    """Returns (kG, R) with R = 1 x 1."""
    return build_groupoid_algebra(groupoid_from_group(G), field)


def build_drinfeld_double(G, field=None):
    """D(G) on the basis delta_a x g, index a*|G| + g; returns (H, R)."""
    n = G.order
    m, inv, e = G.mul, G.inverse, G.identity
    idx = lambda a, g: a * n + g  # noqa: E731
    mult = {}
    for a, g, b, h in product(range(n), repeat=4):
        if a == m[m[g][b]][inv[g]]:
            mult[(idx(a, g), idx(b, h))] = {idx(a, m[g][h]): ONE}
    unit = {idx(a, e): ONE for a in range(n)}
    comult = []
    counit = {}
    antipode = []
    for a in range(n):
        for g in range(n):
            comult.append({(idx(b, g), idx(c, g)): ONE
                           for b in range(n) for c in range(n) if m[b][c] == a})
            if a == e:
                counit[idx(a, g)] = ONE
            gi = inv[g]
            antipode.append({idx(m[m[gi][inv[a]]][g], gi): ONE})
    R = {}
    for g in range(n):
        for a in range(n):
            R[(idx(g, e), idx(a, g))] = ONE
    labels = [f"d[{G.labels[a]}]#{G.labels[g]}" for a in range(n) for g in range(n)]
    H = WeakHopfAlgebra(n * n, mult, unit, comult, counit, antipode, field, labels)
    return H, R


def build_from_table(table, field=None):
    if isinstance(table, GroupTable):
        return build_group_algebra(table, field)
    if isinstance(table, GroupoidTable):
        return build_groupoid_algebra(table, field)
    raise InvalidTable(f"unknown table type {type(table).__name__}")


def load_table(d):
    kind = d.get("kind") if isinstance(d, dict) else None
    if kind == "group":
        return GroupTable.from_dict(d)
    if kind == "groupoid":
        return GroupoidTable.from_dict(d)
    raise InvalidTable("table must declare kind 'group' or 'groupoid'")


__all__ = ["InvalidTable", "GroupTable", "GroupoidTable", "trivial_group", "cyclic_group",
           "symmetric_group", "groupoid_from_group", "indiscrete_groupoid",
           "discrete_groupoid", "build_group_algebra", "build_groupoid_algebra",
           "build_drinfeld_double", "build_from_table", "load_table", "FieldSpec"]
