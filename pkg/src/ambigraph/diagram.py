"""Coset-diagram traversal over ambiguous numbers.

The successor of an ambiguous element e is defined as the unique ambiguous
element among y(x(e)) and y^2(x(e)).  Iterating the successor from any
ambiguous anchor returns to it, tracing the unique closed path of its orbit;
the orbit's ambiguous members are the path vertices together with their
x-images.  A union-find over the whole ambiguous set with generator edges
gives the same partition independently of the traversal, and the two are
cross-checked against each other.
"""

import enum
from dataclasses import dataclass

from .core import (
    Element,
    is_ambiguous,
    is_ambiguous_triple,
    x_triple,
    y_triple,
    yy_triple,
)
from .enumeration import ambiguous_triples, enumerate_ambiguous
from .errors import (
    CycleLimitExceeded,
    DichotomyViolation,
    InternalInconsistency,
    UnknownOrbit,
)


class StepType(enum.Enum):
    YX = "yx"
    YYX = "y2x"

    def __str__(self):
        return self.value


def successor_triple(t, n=None):
    """Triple-level successor; returns ((a,b,c), StepType)."""
    f = x_triple(t)
    cy = y_triple(f)
    cyy = yy_triple(f)
    ay = is_ambiguous_triple(cy)
    ayy = is_ambiguous_triple(cyy)
    if ay == ayy:
        raise DichotomyViolation(t, cy, cyy)
    return (cy, StepType.YX) if ay else (cyy, StepType.YYX)


def successor(e: Element):
    """The unique ambiguous element among y(x(e)), y^2(x(e)), with its tag."""
    if not is_ambiguous(e):
        raise ValueError(f"successor requires an ambiguous element, got {e}")
    t, tag = successor_triple(e.triple)
    return Element.from_triple(t, e.n), tag


@dataclass(frozen=True)
class ClosedPath:
    """The closed successor cycle through an ambiguous anchor.

    steps[i] is (StepType, target); the last target equals the anchor.
    """

    anchor: Element
    steps: tuple

    def __len__(self):
        return len(self.steps)

    @property
    def vertices(self):
        """Path vertices in traversal order, starting at the anchor."""
        return (self.anchor,) + tuple(t for _, t in self.steps[:-1])

    @property
    def step_types(self):
        return tuple(s for s, _ in self.steps)


def closed_path(e: Element, limit: int = None) -> ClosedPath:
    if not is_ambiguous(e):
        raise ValueError(f"closed_path requires an ambiguous element, got {e}")
    if limit is None:
        limit = len(ambiguous_triples(e.n)) + 1
    n = e.n
    steps = []
    t = e.triple
    anchor = e.triple
    while True:
        t, tag = successor_triple(t)
        steps.append((tag, Element.from_triple(t, n)))
        if t == anchor:
            break
        if len(steps) > limit:
            raise CycleLimitExceeded(
                f"no return to anchor {e} within {limit} steps"
            )
    return ClosedPath(e, tuple(steps))


def orbit_members(path: ClosedPath):
    """Orbit member set: path vertices plus their x-images, sorted by (a, c)."""
    n = path.anchor.n
    triples = set()
    for v in path.vertices:
        triples.add(v.triple)
        triples.add(x_triple(v.triple))
    return tuple(
        Element.from_triple(t, n)
        for t in sorted(triples, key=lambda t: (t[0], t[2]))
    )


@dataclass(frozen=True)
class OrbitRecord:
    representative: Element
    members: tuple
    path: ClosedPath

    @property
    def ambiguous_length(self):
        return len(self.members)


@dataclass(frozen=True)
class OrbitPartition:
    n: int
    orbits: tuple  # OrbitRecord, sorted by representative (a, c)

    def __len__(self):
        return len(self.orbits)

    def sizes(self):
        return sorted(len(o.members) for o in self.orbits)

    def member_sets(self):
        """Frozenset-of-frozensets view for partition comparisons."""
        return frozenset(
            frozenset(m.triple for m in o.members) for o in self.orbits
        )

    def orbit_of(self, e: Element):
        for i, o in enumerate(self.orbits):
            if e.triple in {m.triple for m in o.members}:
                return i
        return None


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # deterministic: smaller tuple wins as root
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def components(self):
        comps = {}
        for x in self.parent:
            comps.setdefault(self.find(x), []).append(x)
        return comps


def _records_from_components(n, comps, check_paths=True):
    records = []
    for members in comps:
        members = sorted(members, key=lambda t: (t[0], t[2]))
        rep = Element.from_triple(members[0], n)
        path = closed_path(rep, limit=2 * len(members) + 2)
        if check_paths:
            closure = {v.triple for v in path.vertices}
            closure |= {x_triple(t) for t in closure}
            if closure != set(members):
                raise InternalInconsistency(
                    f"component of {rep} != path-plus-x-images closure"
                )
        records.append(
            OrbitRecord(
                rep,
                tuple(Element.from_triple(t, n) for t in members),
                path,
            )
        )
    records.sort(key=lambda r: (r.representative.a, r.representative.c))
    return tuple(records)


def partition_graph(n: int, max_n: int = None) -> OrbitPartition:
    """Partition the ambiguous set into orbits by union-find over generator edges."""
    kwargs = {} if max_n is None else {"max_n": max_n}
    amb = enumerate_ambiguous(n, **kwargs)
    triples = [e.triple for e in amb]
    universe = set(triples)
    uf = UnionFind(triples)
    for t in triples:
        xt = x_triple(t)
        if xt in universe:
            uf.union(t, xt)
        yt = y_triple(t)
        if yt in universe:
            uf.union(t, yt)
        yyt = yy_triple(t)
        if yyt in universe:
            uf.union(t, yyt)
    comps = uf.components().values()
    return OrbitPartition(n, _records_from_components(n, comps))


def export_dot(partition: OrbitPartition, rep_a: int, rep_c: int) -> str:
    """Render one orbit's ambiguous closed paths as a DOT digraph.

    Successor edges are directed and labeled yx / y2x; x-pairings are
    undirected dashed edges.  Node order and edge order are sorted so the
    output is byte-reproducible.
    """
    record = None
    for o in partition.orbits:
        if any(m.a == rep_a and m.c == rep_c for m in o.members):
            record = o
            break
    if record is None:
        raise UnknownOrbit(
            f"no orbit of n={partition.n} contains a={rep_a}, c={rep_c}"
        )
    members = sorted(m.triple for m in record.members)
    lines = ["digraph orbit {"]
    for t in members:
        lines.append(f'  "{t[0]},{t[1]},{t[2]}";')
    succ_edges = []
    for t in members:
        s, tag = successor_triple(t)
        succ_edges.append((t, s, tag.value))
    for t, s, lab in sorted(succ_edges):
        lines.append(
            f'  "{t[0]},{t[1]},{t[2]}" -> "{s[0]},{s[1]},{s[2]}" [label="{lab}"];'
        )
    x_edges = set()
    for t in members:
        xt = x_triple(t)
        x_edges.add(tuple(sorted((t, xt))))
    for t, s in sorted(x_edges):
        lines.append(
            f'  "{t[0]},{t[1]},{t[2]}" -> "{s[0]},{s[1]},{s[2]}"'
            " [dir=none, style=dashed];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
