"""4-regular multigraphs with half-edge structure and circuit partitions.

Every vertex owns four half-edge slots, numbered 0..3; globally slot
``4*v + s`` is slot s of vertex v.  An edge is an unordered pair of slots
(a loop pairs two slots of the same vertex), and the edge set is a perfect
matching on all slots.  A circuit partition assigns each vertex a route,
one of the three perfect matchings on its four slots; following edges and
routes alternately decomposes the edge set into closed circuits.

The two encodings at the end turn a signed permutation (circularize with
an anchor, insert intermediate segments) or a pair of all-circular genomes
(insert intermediates only) into such a graph together with the circuit
partition of the source chromosome(s) and the supplementary partition
whose real-segment circuits spell the target.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .perm import CIRCULAR, Genome, SignedPermutation

ANCHOR = "anchor"
REAL = "real"
INTERMEDIATE = "intermediate"

# the three routes on slots {0,1,2,3}, keyed by the slot paired with slot 0
_ROUTE_PAIRS = {
    1: ((0, 1), (2, 3)),
    2: ((0, 2), (1, 3)),
    3: ((0, 3), (1, 2)),
}


@dataclass(frozen=True)
class FourRegularGraph:
    """A 4-regular multigraph as a perfect matching on half-edge slots."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    edge_labels: tuple[str, ...] = ()
    vertex_labels: tuple[str, ...] = ()
    edge_kinds: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.edges) * 2 != 4 * self.n_vertices:
            raise ValueError("edge count must be 2 * vertex count")
        seen = set()
        for a, b in self.edges:
            for s in (a, b):
                if not 0 <= s < 4 * self.n_vertices:
                    raise ValueError("slot %d out of range" % s)
                if s in seen:
                    raise ValueError("slot %d matched twice" % s)
                seen.add(s)
        if not self.edge_labels:
            object.__setattr__(
                self, "edge_labels", tuple("e%d" % i for i in range(len(self.edges)))
            )
        if not self.vertex_labels:
            object.__setattr__(
                self, "vertex_labels", tuple("u%d" % v for v in range(self.n_vertices))
            )
        if not self.edge_kinds:
            object.__setattr__(self, "edge_kinds", (REAL,) * len(self.edges))

    @property
    def n_slots(self) -> int:
        return 4 * self.n_vertices

    def slot_partner(self) -> list[int]:
        partner = [0] * self.n_slots
        for a, b in self.edges:
            partner[a], partner[b] = b, a
        return partner

    def edge_of_slot(self) -> list[int]:
        owner = [0] * self.n_slots
        for i, (a, b) in enumerate(self.edges):
            owner[a] = owner[b] = i
        return owner

    def n_components(self) -> int:
        root = list(range(self.n_vertices))

        def find(x):
            while root[x] != x:
                root[x] = root[root[x]]
                x = root[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a // 4), find(b // 4)
            if ra != rb:
                root[ra] = rb
        return len({find(v) for v in range(self.n_vertices)})


@dataclass(frozen=True)
class CircuitPartition:
    """Per-vertex routes, stored as the slot paired with slot 0."""

    routes: tuple[int, ...]

    def __post_init__(self):
        for r in self.routes:
            if r not in (1, 2, 3):
                raise ValueError("route code must be 1, 2, or 3")

    def pairs_at(self, v: int) -> tuple[tuple[int, int], tuple[int, int]]:
        return _ROUTE_PAIRS[self.routes[v]]


def route_code(pair_with_zero: int) -> int:
    if pair_with_zero not in (1, 2, 3):
        raise ValueError("slot 0 pairs with 1, 2, or 3")
    return pair_with_zero


def _route_from_visit_pairs(pairs: list[tuple[int, int]]) -> int:
    # pairs: two (slot offset, slot offset) pairs covering {0,1,2,3}
    for a, b in pairs:
        if a == 0:
            return b
        if b == 0:
            return a
    raise ValueError("route pairs must cover slot 0")


@dataclass(frozen=True)
class Circuit:
    """A closed walk, canonicalized over rotation and reflection."""

    edge_ids: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edge_ids", _canonical_cycle(self.edge_ids))

    def labels(self, g: FourRegularGraph) -> tuple[str, ...]:
        return tuple(g.edge_labels[i] for i in self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)


def _canonical_cycle(ids) -> tuple[int, ...]:
    ids = tuple(ids)
    if len(ids) <= 1:
        return ids
    best = None
    for seq in (ids, ids[::-1]):
        for i in range(len(seq)):
            cand = seq[i:] + seq[:i]
            if best is None or cand < best:
                best = cand
    return best


def _slot_walk(g: FourRegularGraph, p: CircuitPartition):
    """Yield each circuit once, as the list of (arrive_slot, depart_slot) steps."""
    partner = g.slot_partner()
    route_partner = [0] * g.n_slots
    for v in range(g.n_vertices):
        for a, b in p.pairs_at(v):
            route_partner[4 * v + a] = 4 * v + b
            route_partner[4 * v + b] = 4 * v + a
    visited = [False] * g.n_slots
    for start in range(g.n_slots):
        if visited[start]:
            continue
        steps = []
        cur = start
        while not visited[cur]:
            visited[cur] = True
            dep = route_partner[cur]
            visited[dep] = True
            steps.append((cur, dep))
            cur = partner[dep]
        yield steps


def circuits(g: FourRegularGraph, p: CircuitPartition) -> tuple[Circuit, ...]:
    """Decompose the edges into circuits by alternating edges with routes."""
    if len(p.routes) != g.n_vertices:
        raise ValueError("partition does not match graph")
    owner = g.edge_of_slot()
    result = [
        Circuit(tuple(owner[dep] for _, dep in steps)) for steps in _slot_walk(g, p)
    ]
    return tuple(sorted(result, key=lambda c: c.edge_ids))


def is_euler_system(g: FourRegularGraph, p: CircuitPartition) -> bool:
    """True iff the partition has exactly one circuit per connected component."""
    return len(circuits(g, p)) == g.n_components()


def supplementary(p1: CircuitPartition, p2: CircuitPartition) -> bool:
    """True iff the two partitions take a different route at every vertex."""
    if len(p1.routes) != len(p2.routes):
        raise ValueError("partitions live on different graphs")
    return all(a != b for a, b in zip(p1.routes, p2.routes))


def switch_route(
    p: CircuitPartition, v: int, target: CircuitPartition
) -> CircuitPartition:
    """Replace the route at v with target's route there."""
    if not 0 <= v < len(p.routes):
        raise ValueError("unknown vertex %r" % (v,))
    routes = list(p.routes)
    routes[v] = target.routes[v]
    return CircuitPartition(tuple(routes))


@dataclass(frozen=True)
class PermEncoding:
    """A 4-regular multigraph with the source and target circuit partitions.

    pa follows the source traversal, one circuit per source chromosome
    (an Euler system for permutation encodings, whose graph is connected
    with a single circularized chromosome); pb is the supplementary
    partition whose real-segment circuits spell the target.  For
    permutation encodings, junction_sequence[t] is the vertex label index
    of the junction after traversal segment t, so each vertex appears at
    exactly two positions.
    """

    graph: FourRegularGraph
    pa: CircuitPartition
    pb: CircuitPartition
    n: int
    junction_sequence: tuple[int, ...] = field(default=(), compare=False)

    def breakpoint_positions(self, v: int) -> tuple[int, int]:
        occ = [t for t, lab in enumerate(self.junction_sequence) if lab == v]
        if len(occ) != 2:
            raise ValueError("vertex %r has no junction positions" % (v,))
        return (occ[0], occ[1])


def target_circuit_count(g: FourRegularGraph, pb: CircuitPartition) -> int:
    """The number of pb circuits made of intermediate segments only."""
    kinds = g.edge_kinds
    total = 0
    for c in circuits(g, pb):
        if all(kinds[i] == INTERMEDIATE for i in c.edge_ids):
            total += 1
    return total


def encode_permutation(p: SignedPermutation) -> PermEncoding:
    """Build the 4-regular multigraph of a signed permutation.

    The chromosome is circularized with an anchor segment and an
    intermediate segment is inserted at every junction, so the traversal
    reads anchor, I1, s1, I2, s2, ..., sn, I(n+1) cyclically.  Junctions
    between segments are labeled v0..vn (the junction where the head of
    segment i will meet the tail of segment i+1 is vi, with the anchor
    standing in for segment 0 and segment n+1), and same-labeled junctions
    merge into one vertex of degree 4.
    """
    n = len(p)
    m = 2 * (n + 1)
    values = p.values

    edge_labels = []
    edge_kinds = []
    for t in range(m):
        if t == 0:
            edge_labels.append("$")
            edge_kinds.append(ANCHOR)
        elif t % 2 == 1:
            edge_labels.append("I%d" % ((t + 1) // 2))
            edge_kinds.append(INTERMEDIATE)
        else:
            edge_labels.append(str(abs(values[t // 2 - 1])))
            edge_kinds.append(REAL)

    junction = []
    for t in range(m):
        if t == 0:
            junction.append(0)
        elif t == m - 1:
            junction.append(n)
        elif t % 2 == 1:
            k = values[(t + 1) // 2 - 1]  # tail side of the next real segment
            junction.append(k - 1 if k > 0 else -k)
        else:
            k = values[t // 2 - 1]  # head side of this real segment
            junction.append(k if k > 0 else -k - 1)

    # first and second junction position of each vertex label
    occ: dict[int, list[int]] = {}
    for t, lab in enumerate(junction):
        occ.setdefault(lab, []).append(t)

    def slot(t: int, outgoing: bool) -> int:
        lab = junction[t]
        second = occ[lab][1] == t
        return 4 * lab + 2 * second + outgoing

    edges = []
    for t in range(m):
        # segment t runs from the junction before it to the junction after it
        edges.append((slot((t - 1) % m, True), slot(t, False)))

    pb_routes = []
    for v in range(n + 1):
        ta, tb = occ[v]
        real_a = 0 if ta % 2 == 0 else 1  # incoming edge is real at even junctions
        real_b = 2 if tb % 2 == 0 else 3
        if real_a == 0:
            pb_routes.append(real_b)
        else:
            pb_routes.append(5 - real_b)  # slot 0 pairs with the other intermediate

    graph = FourRegularGraph(
        n_vertices=n + 1,
        edges=tuple(edges),
        edge_labels=tuple(edge_labels),
        vertex_labels=tuple("v%d" % v for v in range(n + 1)),
        edge_kinds=tuple(edge_kinds),
    )
    pa = CircuitPartition((1,) * (n + 1))
    pb = CircuitPartition(tuple(pb_routes))
    return PermEncoding(graph, pa, pb, n, tuple(junction))


def _extremity(marker: str, head: bool) -> tuple[str, str]:
    return (marker, "head" if head else "tail")


def _chromosome_adjacencies(markers) -> list[frozenset]:
    # consecutive (right end, next left end) pairs around a circular chromosome
    out = []
    k = len(markers)
    for i in range(k):
        name, sign = markers[i]
        nxt_name, nxt_sign = markers[(i + 1) % k]
        right = _extremity(name, sign > 0)
        left = _extremity(nxt_name, nxt_sign < 0)
        out.append(frozenset({right, left}))
    return out


def encode_circular_genomes(ga: Genome, gb: Genome) -> PermEncoding:
    """Encode two all-circular genomes over the same markers.

    Expansion inserts an intermediate segment at every junction of ga; the
    merged vertices are the adjacencies of gb, each holding two marker
    extremities.  pb pairs the marker ends at every vertex, so its real
    circuits spell gb's chromosomes and every other circuit is a cycle of
    intermediates; their count c gives the DCJ distance as n - c.
    """
    for g in (ga, gb):
        for chrom in g.chromosomes:
            if chrom.shape != CIRCULAR:
                raise ValueError("encoding requires all-circular chromosomes")
    if ga.marker_names() != gb.marker_names():
        raise ValueError("marker sets differ")

    vertices = sorted(
        {adj for chrom in gb.chromosomes for adj in _chromosome_adjacencies(chrom.markers)},
        key=lambda adj: tuple(sorted(adj)),
    )
    vertex_of_ext = {}
    for i, adj in enumerate(vertices):
        for ext in adj:
            vertex_of_ext[ext] = i

    n_vertices = len(vertices)
    visits: dict[int, int] = {v: 0 for v in range(n_vertices)}
    edges = []
    edge_labels = []
    edge_kinds = []
    pb_real_slots: dict[int, list[int]] = {v: [] for v in range(n_vertices)}
    intermediate_id = 0

    for chrom in ga.chromosomes:
        k = len(chrom.markers)
        # junction j sits after marker j; junctions alternate marker end,
        # intermediate end around the chromosome
        junction_vertex = []
        for i in range(k):
            name, sign = chrom.markers[i]
            right = _extremity(name, sign > 0)
            junction_vertex.append(vertex_of_ext[right])
        pre_vertex = []
        for i in range(k):
            name, sign = chrom.markers[i]
            left = _extremity(name, sign < 0)
            pre_vertex.append(vertex_of_ext[left])

        # slots in traversal order: marker i runs pre_vertex[i] -> junction_vertex[i],
        # intermediate i runs junction_vertex[i] -> pre_vertex[i+1]
        incoming_slot = {}
        outgoing_slot = {}
        for i in range(k):
            for vertex, key, is_marker_end in (
                (junction_vertex[i], ("after", i), True),
                (pre_vertex[(i + 1) % k], ("before", (i + 1) % k), False),
            ):
                base = 4 * vertex + 2 * (visits[vertex] > 0)
                visits[vertex] += 1
                incoming_slot[key] = base
                outgoing_slot[key] = base + 1
                if is_marker_end:
                    pb_real_slots[vertex].append(base)  # marker end arrives here
                else:
                    pb_real_slots[vertex].append(base + 1)  # marker end departs here

        for i in range(k):
            name, _ = chrom.markers[i]
            edges.append((outgoing_slot[("before", i)], incoming_slot[("after", i)]))
            edge_labels.append(name)
            edge_kinds.append(REAL)
            edges.append(
                (outgoing_slot[("after", i)], incoming_slot[("before", (i + 1) % k)])
            )
            intermediate_id += 1
            edge_labels.append("I%d" % intermediate_id)
            edge_kinds.append(INTERMEDIATE)

    pb_routes = []
    for v in range(n_vertices):
        real = sorted(s - 4 * v for s in pb_real_slots[v])
        if len(real) != 2:
            raise ValueError("vertex %d did not receive two marker ends" % v)
        if 0 in real:
            pb_routes.append(real[0] + real[1])
        else:
            other = sorted({0, 1, 2, 3} - set(real))
            pb_routes.append(other[1])

    labels = tuple(
        ",".join("%s.%s" % (m, side[0]) for m, side in sorted(adj)) for adj in vertices
    )
    graph = FourRegularGraph(
        n_vertices=n_vertices,
        edges=tuple(edges),
        edge_labels=tuple(edge_labels),
        vertex_labels=labels,
        edge_kinds=tuple(edge_kinds),
    )
    pa = CircuitPartition((1,) * n_vertices)
    pb = CircuitPartition(tuple(pb_routes))
    return PermEncoding(graph, pa, pb, len(ga.marker_names()))


# ---------------------------------------------------------------------------
# seeded random generators for the property-test harness


def random_four_regular(n_vertices: int, seed: int) -> FourRegularGraph:
    """Configuration-model pairing of all slots; loops and multi-edges allowed."""
    rng = random.Random(seed)
    slots = list(range(4 * n_vertices))
    rng.shuffle(slots)
    edges = tuple(
        (slots[2 * i], slots[2 * i + 1]) for i in range(2 * n_vertices)
    )
    return FourRegularGraph(n_vertices=n_vertices, edges=edges)


def random_euler_system(g: FourRegularGraph, seed: int) -> CircuitPartition:
    """A seeded Euler system, one random Eulerian circuit per component."""
    rng = random.Random(seed)
    partner = g.slot_partner()
    avail = [set(range(4 * v, 4 * v + 4)) for v in range(g.n_vertices)]
    assigned: list[list[tuple[int, int]]] = [[] for _ in range(g.n_vertices)]

    def subtour(v: int) -> list[tuple[int, int]]:
        path = []
        cur = v
        while avail[cur]:
            dep = rng.choice(sorted(avail[cur]))
            avail[cur].remove(dep)
            arr = partner[dep]
            avail[arr // 4].remove(arr)
            path.append((dep, arr))
            cur = arr // 4
        if cur != v:
            raise AssertionError("open trail in an even-degree multigraph")
        return path

    for start in range(g.n_vertices):
        if not avail[start]:
            continue
        tour = subtour(start)
        i = 0
        while i < len(tour):
            at = tour[i][1] // 4
            if avail[at]:
                tour[i + 1 : i + 1] = subtour(at)
            else:
                i += 1
        # route pairs: each arrival is followed by the next departure
        for i in range(len(tour)):
            arr = tour[i][1]
            dep = tour[(i + 1) % len(tour)][0]
            assigned[arr // 4].append((arr % 4, dep % 4))

    routes = tuple(_route_from_visit_pairs(assigned[v]) for v in range(g.n_vertices))
    p = CircuitPartition(routes)
    if not is_euler_system(g, p):
        raise AssertionError("generated partition is not an Euler system")
    return p


def random_supplementary(
    g: FourRegularGraph, p: CircuitPartition, seed: int
) -> CircuitPartition:
    """A seeded partition taking one of the two other routes at every vertex."""
    rng = random.Random(seed)
    routes = tuple(
        rng.choice([r for r in (1, 2, 3) if r != p.routes[v]])
        for v in range(g.n_vertices)
    )
    return CircuitPartition(routes)


# ---------------------------------------------------------------------------
# exports


def graph_to_dot(
    g: FourRegularGraph, partition: CircuitPartition | None = None
) -> str:
    """DOT rendering; with a partition, edges are colored by circuit."""
    palette = (
        "black red blue darkgreen orange purple brown cadetblue "
        "deeppink gray goldenrod"
    ).split()
    color = {}
    if partition is not None:
        for ci, c in enumerate(circuits(g, partition)):
            for e in c.edge_ids:
                color[e] = palette[ci % len(palette)]
    lines = ["graph fourreg {"]
    for v in range(g.n_vertices):
        lines.append('  n%d [label="%s"];' % (v, g.vertex_labels[v]))
    for i, (a, b) in enumerate(g.edges):
        attrs = ['label="%s"' % g.edge_labels[i]]
        if i in color:
            attrs.append("color=%s" % color[i])
        lines.append("  n%d -- n%d [%s];" % (a // 4, b // 4, ", ".join(attrs)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def pairing_to_json(enc: PermEncoding) -> dict:
    """Half-edge dump for golden tests."""
    return {
        "n": enc.n,
        "vertices": list(enc.graph.vertex_labels),
        "edges": [
            {"slots": list(e), "label": enc.graph.edge_labels[i], "kind": enc.graph.edge_kinds[i]}
            for i, e in enumerate(enc.graph.edges)
        ],
        "pa_routes": list(enc.pa.routes),
        "pb_routes": list(enc.pb.routes),
    }
