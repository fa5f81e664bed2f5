"""Brauer trees: finite trees with a cyclic edge order at every vertex,
one exceptional vertex and a multiplicity.

The cyclic order at a vertex lists the incident edges in the order in which
the quiver arrows of the associated algebra rotate around that vertex; the
composition series of the projectives then wind the opposite way (left
modules).  For the star this puts the arrows at i -> i+1 and makes uniserial
composition series descend mod n.
"""

from __future__ import annotations

from itertools import permutations


class BrauerTree:
    """Combinatorial Brauer tree of type (n, multiplicity).

    Attributes:
        vertices: tuple of vertex ids.
        edges: dict edge id -> (v, w) endpoint pair.
        cyclic_order: dict vertex id -> tuple of incident edge ids.
        exceptional: the exceptional vertex id.
        multiplicity: integer k >= 1 attached to the exceptional vertex.
    """

    def __init__(self, vertices, edges, cyclic_order, exceptional, multiplicity):
        self.vertices = tuple(vertices)
        self.edges = {e: tuple(ends) for e, ends in dict(edges).items()}
        self.cyclic_order = {v: tuple(c) for v, c in dict(cyclic_order).items()}
        self.exceptional = exceptional
        self.multiplicity = int(multiplicity)
        self._validate()
        self._adj = {v: self.cyclic_order[v] for v in self.vertices}
        self._succ = {
            (v, e): order[(i + 1) % len(order)]
            for v, order in self.cyclic_order.items()
            for i, e in enumerate(order)
        }

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def star(n: int, multiplicity: int) -> "BrauerTree":
        """Star with edges 1..n around the exceptional center 0."""
        if n < 1:
            raise ValueError("a star needs at least one edge")
        vertices = [0] + [-i for i in range(1, n + 1)]
        edges = {i: (0, -i) for i in range(1, n + 1)}
        cyclic = {0: tuple(range(1, n + 1))}
        cyclic.update({-i: (i,) for i in range(1, n + 1)})
        return BrauerTree(vertices, edges, cyclic, 0, multiplicity)

    # -- validation ------------------------------------------------------------

    def _validate(self):
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        if not self.edges:
            raise ValueError("tree must have at least one edge")
        if len(self.edges) != len(self.vertices) - 1:
            raise ValueError("edge count must be vertex count minus one")
        if self.exceptional not in self.vertices:
            raise ValueError(f"exceptional vertex {self.exceptional} unknown")
        incident = {v: [] for v in self.vertices}
        for e, (v, w) in self.edges.items():
            if v == w or v not in incident or w not in incident:
                raise ValueError(f"edge {e} has invalid endpoints {(v, w)}")
            incident[v].append(e)
            incident[w].append(e)
        for v in self.vertices:
            order = self.cyclic_order.get(v)
            if order is None or sorted(order) != sorted(incident[v]):
                raise ValueError(
                    f"cyclic order at vertex {v} does not match its incident edges"
                )
        # connectivity
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for e in incident[v]:
                w = self.other_end(e, v)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(self.vertices):
            raise ValueError("graph is not connected")

    # -- basic accessors --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.edges)

    def edge_ids(self):
        return sorted(self.edges)

    def other_end(self, edge, v):
        a, b = self.edges[edge]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an endpoint of edge {edge}")

    def degree(self, v) -> int:
        return len(self.cyclic_order[v])

    def vertex_multiplicity(self, v) -> int:
        return self.multiplicity if v == self.exceptional else 1

    def winding_bound(self, v) -> int:
        """Length of the full winding around v (multiplicity times degree)."""
        return self.vertex_multiplicity(v) * self.degree(v)

    def succ(self, v, edge):
        """Next edge after `edge` in the cyclic order at v (arrow direction)."""
        return self._succ[(v, edge)]

    def is_star(self) -> bool:
        return self.degree(self.exceptional) == self.n

    # -- isomorphism -------------------------------------------------------------

    def _encode(self, v, in_edge, mark_exceptional: bool):
        flag = 1 if (mark_exceptional and v == self.exceptional) else 0
        order = self.cyclic_order[v]
        if in_edge is None:
            if not order:
                return (flag,)
            rots = [order[i:] + order[:i] for i in range(len(order))]
            return min(
                (flag,)
                + tuple(self._encode(self.other_end(e, v), e, mark_exceptional) for e in rot)
                for rot in rots
            )
        i = order.index(in_edge)
        children = order[i + 1 :] + order[:i]
        return (flag,) + tuple(
            self._encode(self.other_end(e, v), e, mark_exceptional) for e in children
        )

    def canonical_key(self, respect_exceptional: bool | None = None):
        """Canonical form; equal keys mean isomorphic trees with matching
        cyclic orders (and matching exceptional vertex when respected).

        By default the exceptional mark is compared only when the
        multiplicity is at least 2, where it changes the algebra.
        """
        if respect_exceptional is None:
            respect_exceptional = self.multiplicity >= 2
        key = min(self._encode(v, None, respect_exceptional) for v in self.vertices)
        return (self.n, self.multiplicity, key)

    def is_isomorphic_to(self, other: "BrauerTree", respect_exceptional=None) -> bool:
        return self.canonical_key(respect_exceptional) == other.canonical_key(
            respect_exceptional
        )


def _labeled_trees(num_vertices: int):
    """All labeled trees on vertices 0..num_vertices-1 as edge lists."""
    if num_vertices == 1:
        return
    if num_vertices == 2:
        yield [(0, 1)]
        return
    from itertools import product

    for seq in product(range(num_vertices), repeat=num_vertices - 2):
        degree = [1] * num_vertices
        for v in seq:
            degree[v] += 1
        seq_list = list(seq)
        edges = []
        ptr = [v for v in range(num_vertices) if degree[v] == 1]
        import heapq

        heapq.heapify(ptr)
        deg = degree[:]
        for v in seq_list:
            leaf = heapq.heappop(ptr)
            edges.append((leaf, v))
            deg[v] -= 1
            if deg[v] == 1:
                heapq.heappush(ptr, v)
        u = heapq.heappop(ptr)
        w = heapq.heappop(ptr)
        edges.append((u, w))
        yield edges


def all_brauer_trees(n: int, multiplicity: int) -> list[BrauerTree]:
    """Representatives of every isomorphism class of Brauer trees with n
    edges and the given multiplicity (shape, cyclic orders and, for
    multiplicity >= 2, exceptional placement all vary).
    """
    seen = {}
    for edge_list in _labeled_trees(n + 1):
        edges = {i: ends for i, ends in enumerate(edge_list)}
        incident = {v: [] for v in range(n + 1)}
        for e, (a, b) in edges.items():
            incident[a].append(e)
            incident[b].append(e)
        # one cyclic order per vertex: fix the first incident edge, permute the rest
        per_vertex = []
        for v in range(n + 1):
            inc = incident[v]
            if len(inc) <= 2:
                per_vertex.append([tuple(inc)])
            else:
                per_vertex.append([(inc[0],) + p for p in permutations(inc[1:])])
        from itertools import product

        for orders in product(*per_vertex):
            cyclic = {v: orders[v] for v in range(n + 1)}
            for exc in range(n + 1):
                tree = BrauerTree(range(n + 1), edges, cyclic, exc, multiplicity)
                key = tree.canonical_key()
                if key not in seen:
                    seen[key] = tree
    return [seen[k] for k in sorted(seen)]
