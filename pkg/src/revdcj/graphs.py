"""Looped simple graphs and their GF(2) adjacency matrices.

The circle graph of an Euler system records which vertex pairs interleave
along the Eulerian circuits; a vertex carries a loop when switching its
route to the supplementary partition's yields another Euler system.  Rank
and nullity of the adjacency matrix over GF(2) drive the distance bounds,
so the matrix type keeps rows as int bitmasks and does Gaussian
elimination directly on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fourreg import (
    CircuitPartition,
    FourRegularGraph,
    circuits,
    is_euler_system,
    supplementary,
    switch_route,
    _slot_walk,
)


@dataclass(frozen=True)
class LoopedGraph:
    """An undirected graph on integer vertices; size-1 edges are loops."""

    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        if tuple(sorted(set(self.vertices))) != self.vertices:
            raise ValueError("vertices must be sorted and distinct")
        vs = set(self.vertices)
        for e in self.edges:
            if len(e) not in (1, 2):
                raise ValueError("edges join one or two vertices")
            if not e <= vs:
                raise ValueError("edge %r leaves the vertex set" % (set(e),))

    def has_loop(self, v: int) -> bool:
        return frozenset({v}) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        out = set()
        for e in self.edges:
            if v in e and len(e) == 2:
                out.update(e - {v})
        return frozenset(out)

    def looped_vertices(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices if self.has_loop(v))

    def has_any_edge(self) -> bool:
        return bool(self.edges)


def looped_graph(vertices, edges) -> LoopedGraph:
    """Normalize arbitrary vertex/edge iterables into a LoopedGraph."""
    return LoopedGraph(
        tuple(sorted(set(vertices))), frozenset(frozenset(e) for e in edges)
    )


def induced_subgraph(h: LoopedGraph, keep) -> LoopedGraph:
    keep = frozenset(keep)
    if not keep <= set(h.vertices):
        raise ValueError("subgraph vertices must come from the graph")
    return LoopedGraph(
        tuple(sorted(keep)), frozenset(e for e in h.edges if e <= keep)
    )


def connected_components(h: LoopedGraph) -> tuple[frozenset[int], ...]:
    """Components under non-loop edges, sorted by least vertex."""
    root = {v: v for v in h.vertices}

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for e in h.edges:
        if len(e) == 2:
            a, b = sorted(e)
            ra, rb = find(a), find(b)
            if ra != rb:
                root[ra] = rb
    groups: dict[int, set[int]] = {}
    for v in h.vertices:
        groups.setdefault(find(v), set()).add(v)
    return tuple(sorted((frozenset(g) for g in groups.values()), key=min))


@dataclass(frozen=True)
class Gf2Matrix:
    """A symmetric 0/1 matrix indexed by vertex ids; rows are int bitmasks."""

    index: tuple[int, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.index) != len(self.rows):
            raise ValueError("one row per index entry")

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def size(self) -> int:
        return len(self.index)

    def rank(self) -> int:
        return gf2_rank(self.rows)

    def nullity(self) -> int:
        return len(self.rows) - self.rank()


def gf2_rank(rows) -> int:
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


def adjacency_matrix(h: LoopedGraph) -> Gf2Matrix:
    """Adjacency over GF(2); loops put a 1 on the diagonal."""
    pos = {v: i for i, v in enumerate(h.vertices)}
    rows = [0] * len(h.vertices)
    for e in h.edges:
        if len(e) == 1:
            (v,) = e
            rows[pos[v]] |= 1 << pos[v]
        else:
            a, b = e
            rows[pos[a]] |= 1 << pos[b]
            rows[pos[b]] |= 1 << pos[a]
    return Gf2Matrix(h.vertices, tuple(rows))


def matrix_pretty(m: Gf2Matrix, labels=None) -> str:
    """Bordered 0/1 layout with row and column labels."""
    if labels is None:
        labels = ["v%d" % v for v in m.index]
    width = max((len(s) for s in labels), default=1)
    header = " " * (width + 1) + " ".join(s.rjust(width) for s in labels)
    lines = [header]
    for i, lab in enumerate(labels):
        cells = " ".join(str(m.entry(i, j)).rjust(width) for j in range(m.size()))
        lines.append(lab.rjust(width) + " " + cells)
    return "\n".join(lines)


def _interleaved(occ_u: tuple[int, int], occ_w: tuple[int, int]) -> bool:
    inside = sum(1 for t in occ_w if occ_u[0] < t < occ_u[1])
    return inside == 1


def circle_graph(
    g: FourRegularGraph, p1: CircuitPartition, p2: CircuitPartition
) -> LoopedGraph:
    """Interleavement graph of the Euler system p1, with loops from p2.

    Vertices u, w are adjacent when their visits interleave along p1's
    circuit through them (u w u w cyclically); u is looped when switching
    its route to p2's leaves an Euler system.
    """
    if not supplementary(p1, p2):
        raise ValueError("partitions are not supplementary")
    if not is_euler_system(g, p1):
        raise ValueError("p1 is not an Euler system")

    edges: set[frozenset[int]] = set()
    for steps in _slot_walk(g, p1):
        word = [dep // 4 for _, dep in steps]
        occ: dict[int, list[int]] = {}
        for t, v in enumerate(word):
            occ.setdefault(v, []).append(t)
        verts = sorted(occ)
        for i, u in enumerate(verts):
            for w in verts[i + 1 :]:
                if _interleaved(tuple(occ[u]), tuple(occ[w])):
                    edges.add(frozenset({u, w}))

    n_components = g.n_components()
    for v in range(g.n_vertices):
        switched = switch_route(p1, v, p2)
        if len(circuits(g, switched)) == n_components:
            edges.add(frozenset({v}))

    return LoopedGraph(tuple(range(g.n_vertices)), frozenset(edges))


def looped_graph_to_dot(h: LoopedGraph, labels=None) -> str:
    if labels is None:
        labels = {v: "v%d" % v for v in h.vertices}
    lines = ["graph circle {"]
    for v in h.vertices:
        shape = "doublecircle" if h.has_loop(v) else "circle"
        lines.append('  n%d [label="%s", shape=%s];' % (v, labels[v], shape))
    for e in sorted(h.edges, key=sorted):
        if len(e) == 2:
            a, b = sorted(e)
            lines.append("  n%d -- n%d;" % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(h: LoopedGraph) -> dict:
    return {
        "vertices": list(h.vertices),
        "edges": sorted(sorted(e) for e in h.edges if len(e) == 2),
        "loops": sorted(v for v in h.vertices if h.has_loop(v)),
    }


def graph_from_json(data: dict) -> LoopedGraph:
    edges = [frozenset(e) for e in data["edges"]]
    edges += [frozenset({v}) for v in data["loops"]]
    return looped_graph(data["vertices"], edges)
