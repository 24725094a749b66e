"""The non-commuting graph of a finite group.

Vertices are the non-central elements in deterministic enumeration order;
two vertices are adjacent exactly when they do not commute.  The graph is
implicit: adjacency is a commutation test, and an explicit bitmap is only
materialised below a size cap for brute-force cross-checks.  Degrees come
from centraliser orders via the class partition, so degree(x) =
|G| - |C_G(x)| without any adjacency scan.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Permutation
from .permgroup import CapExceeded, DEFAULT_ELEMENT_CAP, PermGroup
from .structure import centre, conjugacy_classes, is_soluble

MATERIALIZE_CAP = 5000


class NCGraph:
    """Non-commuting graph on the non-central elements of a group."""

    def __init__(self, group, cap=DEFAULT_ELEMENT_CAP):
        order = group.order()
        if order > cap:
            raise CapExceeded(f"group order {order} exceeds cap {cap}",
                              size=order, cap=cap)
        self.group = group
        self.centre = centre(group, cap)
        self._zset = frozenset(self.centre.elements())
        self.vertices = [g for g in group.elements() if g not in self._zset]
        self._vertex_set = frozenset(self.vertices)
        self._centraliser_order = self._centraliser_orders(cap)

    def _centraliser_orders(self, cap):
        order = self.group.order()
        out = {}
        for cls in conjugacy_classes(self.group, cap):
            # all members of a class share the centraliser order
            c_order = order // cls.size
            members = [cls.rep]
            seen = {cls.rep}
            for y in members:
                for g in self.group.generators:
                    z = y.conjugated_by(g)
                    if z not in seen:
                        seen.add(z)
                        members.append(z)
            for m in members:
                out[m] = c_order
        return out

    def adjacent(self, x, y):
        return x != y and not x.commutes_with(y)

    def vertex_count(self):
        return len(self.vertices)

    def degree(self, x):
        """|G| - |C_G(x)|, the number of non-commuting partners."""
        if x not in self._vertex_set:
            raise ValueError("not a vertex of the graph")
        return self.group.order() - self._centraliser_order[x]

    def degree_multiset(self):
        """Run-length encoded sorted degree multiset: [(degree, count), ...]."""
        counts = {}
        for v in self.vertices:
            d = self.degree(v)
            counts[d] = counts.get(d, 0) + 1
        return sorted(counts.items())

    def adjacency_bitmap(self):
        """Explicit adjacency for brute-force checks (capped)."""
        n = len(self.vertices)
        if n > MATERIALIZE_CAP:
            raise CapExceeded("graph too large to materialise", size=n,
                              cap=MATERIALIZE_CAP)
        rows = []
        for x in self.vertices:
            rows.append([self.adjacent(x, y) for y in self.vertices])
        return rows

    def triangle_sample(self, pairs=200):
        """Common-neighbour counts over the first deterministic vertex pairs."""
        n = len(self.vertices)
        total = 0
        taken = 0
        for i in range(n):
            if taken >= pairs:
                break
            for j in range(i + 1, n):
                if taken >= pairs:
                    break
                x, y = self.vertices[i], self.vertices[j]
                if not self.adjacent(x, y):
                    continue
                total += sum(1 for z in self.vertices
                             if self.adjacent(x, z) and self.adjacent(y, z))
                taken += 1
        return total

    def fingerprint(self):
        """(vertex count, degree multiset, sampled triangle count)."""
        return (self.vertex_count(), tuple(self.degree_multiset()),
                self.triangle_sample())


@dataclass
class GraphView:
    """An induced subgraph presented as a vertex list plus adjacency."""
    vertices: list
    graph: NCGraph

    def adjacent(self, x, y):
        return self.graph.adjacent(x, y)

    def vertex_count(self):
        return len(self.vertices)


def build_ncgraph(G, cap=DEFAULT_ELEMENT_CAP):
    return NCGraph(G, cap)


def non_neighbour_core(graph, x):
    """The subgraph induced on the non-neighbours of x, isolated vertices
    removed.

    Its vertex set works out to C_G(x) minus Z(C_G(x)), with the same
    adjacency as the non-commuting graph of C_G(x).
    """
    non_nbrs = [y for y in graph.vertices if y == x or not graph.adjacent(x, y)]
    keep = []
    for y in non_nbrs:
        if any(graph.adjacent(y, z) for z in non_nbrs if z != y):
            keep.append(y)
    return GraphView(keep, graph)


def domination_pair(graph, cap=DEFAULT_ELEMENT_CAP):
    """First pair (a, b) with C(a) meet C(b) = Z(G), or None.

    a runs over class representatives (the pair property is preserved by
    simultaneous conjugation), b over all vertices, in enumeration order.
    """
    G = graph.group
    zsize = graph.centre.order()
    classes = conjugacy_classes(G, cap)
    vertex_set = set(graph.vertices)
    for cls in classes:
        a = cls.rep
        if a not in vertex_set:
            continue
        ca = [g for g in G.elements() if g.commutes_with(a)]
        for b in graph.vertices:
            inter = [g for g in ca if g.commutes_with(b)]
            if len(inter) == zsize:
                return a, b
    return None


def verify_domination_pair(graph, pair):
    """Exact check that C(a) meet C(b) equals the centre elementwise."""
    a, b = pair
    G = graph.group
    zset = {z for z in graph.centre.elements()}
    inter = {g for g in G.elements()
             if g.commutes_with(a) and g.commutes_with(b)}
    return inter == zset


def two_generated_insoluble_witness(G, trials=40, seed=0,
                                    pair_cap=20000):
    """A pair (x, y) with <x, y> insoluble, or None.

    Seeded random sampling first, then an exhaustive scan of (class
    representative, element) pairs bounded by pair_cap.  None is the
    correct answer for soluble G.
    """
    if is_soluble(G):
        return None
    for t in range(trials):
        x = G.random_element(seed * 1000 + 2 * t)
        y = G.random_element(seed * 1000 + 2 * t + 1)
        H = PermGroup([x, y], degree=G.degree)
        if not is_soluble(H):
            return x, y
    examined = 0
    for cls in conjugacy_classes(G, pair_cap):
        a = cls.rep
        for b in G.elements(pair_cap):
            examined += 1
            if examined > pair_cap:
                return None
            H = PermGroup([a, b], degree=G.degree)
            if not is_soluble(H):
                return a, b
    return None
