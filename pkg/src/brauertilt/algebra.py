"""Basis-level model of a Brauer tree algebra.

The basis consists of path classes: one idempotent e_i per edge, the proper
winding paths around a single vertex, and one socle class z_i per edge (the
two full windings at an edge are identified into the single class z_i).
Paths multiply by concatenation, left factor first: compose(p, q) is "p then
q".  A product is zero as soon as it mixes winding vertices or exceeds the
full winding length.

Projective left modules are P_i = A e_i, so a map P_i -> P_j is right
multiplication by an element of e_i A e_j, i.e. by a combination of path
classes running from edge i to edge j.
"""

from __future__ import annotations

from typing import NamedTuple

from .trees import BrauerTree

DEFAULT_PRIME = 32003


class PathClass(NamedTuple):
    kind: str  # "e" idempotent, "p" proper winding path, "z" socle
    start: int  # start edge
    end: int  # end edge
    vertex: object  # winding vertex (proper paths only)
    length: int  # arrow steps ("z": full winding, length stored as -1)

    def __repr__(self):
        if self.kind == "e":
            return f"e[{self.start}]"
        if self.kind == "z":
            return f"z[{self.start}]"
        return f"p[{self.vertex};{self.start};{self.length}]"


def idempotent(edge) -> PathClass:
    return PathClass("e", edge, edge, None, 0)


def socle_class(edge) -> PathClass:
    return PathClass("z", edge, edge, None, -1)


class BrauerTreeAlgebra:
    """Exact basis, multiplication table and Cartan data of a Brauer tree
    algebra over the prime field F_p.

    The structure constants are all 0/1, so the basis data is independent
    of the prime; the prime only enters later linear algebra.
    """

    def __init__(self, tree: BrauerTree, prime: int = DEFAULT_PRIME, check=True):
        if prime < 2:
            raise ValueError("prime must be at least 2")
        self.tree = tree
        self.prime = prime
        self.edges = tree.edge_ids()
        self.n = len(self.edges)
        self.eidx = {e: i for i, e in enumerate(self.edges)}
        self._build_basis()
        self._build_mult()
        self._build_arrows()
        if check:
            self._check_consistency()
        self.hom_cache: dict = {}
        self.summand_cache: dict = {}

    # -- construction ---------------------------------------------------------

    def _winding_end(self, v, start_edge, length):
        e = start_edge
        for _ in range(length):
            e = self.tree.succ(v, e)
        return e

    def _build_basis(self):
        tree = self.tree
        basis: list[PathClass] = []
        for e in self.edges:
            basis.append(idempotent(e))
        for e in self.edges:
            for v in tree.edges[e]:
                bound = tree.winding_bound(v)
                for t in range(1, bound):
                    basis.append(
                        PathClass("p", e, self._winding_end(v, e, t), v, t)
                    )
        for e in self.edges:
            basis.append(socle_class(e))
        self.basis = basis
        self.index = {pc: i for i, pc in enumerate(basis)}
        self.dim = len(basis)
        blocks: dict[tuple, list[PathClass]] = {
            (a, b): [] for a in self.edges for b in self.edges
        }
        for pc in basis:
            blocks[(pc.start, pc.end)].append(pc)
        self.blocks = blocks
        self.block_pos = {
            (a, b): {pc: i for i, pc in enumerate(pcs)} for (a, b), pcs in blocks.items()
        }

    def _compose_raw(self, p: PathClass, q: PathClass):
        if p.end != q.start:
            return None
        if p.kind == "e":
            return q
        if q.kind == "e":
            return p
        if p.kind == "z" or q.kind == "z":
            return None
        if p.vertex != q.vertex:
            return None
        total = p.length + q.length
        bound = self.tree.winding_bound(p.vertex)
        if total < bound:
            return PathClass("p", p.start, self._winding_end(p.vertex, p.start, total), p.vertex, total)
        if total == bound:
            return socle_class(p.start)
        return None

    def _build_mult(self):
        self.mult = {
            (p, q): r
            for p in self.basis
            for q in self.basis
            if (r := self._compose_raw(p, q)) is not None
        }

    def _build_arrows(self):
        arrows = [pc for pc in self.basis if pc.kind == "p" and pc.length == 1]
        # degenerate case: both windings at an edge are trivial, so the socle
        # class is not a product of shorter paths and must act as a generator
        for e in self.edges:
            v, w = self.tree.edges[e]
            if self.tree.winding_bound(v) == 1 and self.tree.winding_bound(w) == 1:
                arrows.append(socle_class(e))
        self.arrows = arrows

    def _check_consistency(self):
        cart = self.cartan_matrix()
        for i in range(self.n):
            for j in range(self.n):
                if cart[i][j] != cart[j][i]:
                    raise AssertionError("Cartan matrix is not symmetric")
        if self.dim ** 3 <= 3_000_000:
            compose = self.compose
            for p in self.basis:
                for q in self.basis:
                    pq = compose(p, q)
                    for r in self.basis:
                        left = compose(pq, r) if pq is not None else None
                        qr = compose(q, r)
                        right = compose(p, qr) if qr is not None else None
                        if left != right:
                            raise AssertionError(
                                f"multiplication not associative on ({p}, {q}, {r})"
                            )

    # -- public interface -------------------------------------------------------

    def compose(self, p: PathClass, q: PathClass):
        """Product "p then q"; None encodes zero."""
        if p not in self.index or q not in self.index:
            raise ValueError("path class does not belong to this algebra")
        return self.mult.get((p, q))

    def hom_basis(self, i, j) -> list[PathClass]:
        """Basis of Hom(P_i, P_j): the path classes from edge i to edge j,
        acting by right multiplication."""
        if i not in self.eidx or j not in self.eidx:
            raise ValueError(f"unknown edge in ({i}, {j})")
        return list(self.blocks[(i, j)])

    def cartan_matrix(self) -> list[list[int]]:
        return [
            [len(self.blocks[(self.edges[i], self.edges[j])]) for j in range(self.n)]
            for i in range(self.n)
        ]

    def dim_projective(self, i) -> int:
        return sum(len(self.blocks[(a, i)]) for a in self.edges)

    def arrow_letters(self, pc: PathClass) -> list[PathClass]:
        """Decompose a path class into arrow factors, left factor first."""
        if pc.kind == "e":
            return []
        if pc.kind == "p":
            v, e = pc.vertex, pc.start
            letters = []
            for t in range(pc.length):
                start = self._winding_end(v, e, t)
                letters.append(PathClass("p", start, self.tree.succ(v, start), v, 1))
            return letters
        # socle: expand the full winding at an endpoint that has arrows
        for v in self.tree.edges[pc.start]:
            bound = self.tree.winding_bound(v)
            if bound >= 2:
                letters = []
                e = pc.start
                for _ in range(bound):
                    letters.append(PathClass("p", e, self.tree.succ(v, e), v, 1))
                    e = self.tree.succ(v, e)
                return letters
        return [pc]  # the socle class is itself an arrow here

    # star conveniences ---------------------------------------------------------

    @property
    def is_canonical_star(self) -> bool:
        """Star with edges 1..n in that cyclic order around the center,
        as produced by star_algebra; the mod-n edge arithmetic below
        assumes this labeling."""
        return (
            self.tree.is_star()
            and self.edges == list(range(1, self.n + 1))
            and self.tree.cyclic_order[self.tree.exceptional]
            == tuple(range(1, self.n + 1))
        )

    def require_star(self):
        if not self.is_canonical_star:
            raise ValueError("operation requires the canonical Brauer star algebra")

    def star_next(self, edge, steps=1):
        """Edge label shifted by +steps around the star (labels 1..n)."""
        return (edge - 1 + steps) % self.n + 1

    def star_path(self, start_edge, length) -> PathClass | None:
        """Path class of the given length winding from start_edge around the
        star center; None when the length exceeds the socle length."""
        self.require_star()
        bound = self.n * self.tree.multiplicity
        if length == 0:
            return idempotent(start_edge)
        if length < bound:
            return PathClass(
                "p", start_edge, self.star_next(start_edge, length), 0, length
            )
        if length == bound:
            return socle_class(start_edge)
        return None


def build_tree_algebra(tree: BrauerTree, prime: int = DEFAULT_PRIME) -> BrauerTreeAlgebra:
    return BrauerTreeAlgebra(tree, prime)


def star_algebra(n: int, k: int, prime: int = DEFAULT_PRIME) -> BrauerTreeAlgebra:
    if n < 1 or k < 1:
        raise ValueError("star parameters must satisfy n >= 1 and k >= 1")
    return BrauerTreeAlgebra(BrauerTree.star(n, k), prime)


# -- linear combinations of path classes ---------------------------------------

AlgElement = dict  # PathClass -> coefficient mod p


def elem(pc: PathClass, coeff: int = 1) -> AlgElement:
    return {pc: coeff}


def elem_zero() -> AlgElement:
    return {}


def elem_add(a: BrauerTreeAlgebra, x: AlgElement, y: AlgElement) -> AlgElement:
    out = dict(x)
    p = a.prime
    for pc, c in y.items():
        v = (out.get(pc, 0) + c) % p
        if v:
            out[pc] = v
        else:
            out.pop(pc, None)
    return out


def elem_scale(a: BrauerTreeAlgebra, x: AlgElement, c: int) -> AlgElement:
    c %= a.prime
    if c == 0:
        return {}
    return {pc: (v * c) % a.prime for pc, v in x.items()}


def elem_mul(a: BrauerTreeAlgebra, x: AlgElement, y: AlgElement) -> AlgElement:
    out: AlgElement = {}
    p = a.prime
    for pcx, cx in x.items():
        for pcy, cy in y.items():
            r = a.mult.get((pcx, pcy))
            if r is not None:
                v = (out.get(r, 0) + cx * cy) % p
                if v:
                    out[r] = v
                else:
                    out.pop(r, None)
    return out


def elem_is_radical(x: AlgElement) -> bool:
    return all(pc.kind != "e" for pc in x)
