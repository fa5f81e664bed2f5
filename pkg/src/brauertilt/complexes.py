"""Bounded complexes of projectives and Hom spaces in the homotopy category.

A differential entry from a P_a slot to a P_b slot is a linear combination
of path classes from edge a to edge b, acting by right multiplication.
Composition of maps multiplies the path elements left factor first, so a
chain map followed by another corresponds to the algebra product of their
entries in that order.

Hom_{K^b}(Q, R[s]) is computed as the solution space of the commuting
squares minus the span of the null-homotopic maps, by exact elimination
over the working prime field.  Sign conventions for shifted differentials
are dropped: they rescale unknowns and never change dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import BrauerTreeAlgebra, elem_mul


@dataclass(frozen=True)
class Summand:
    """Label for a declared indecomposable direct summand."""

    kind: str  # "stalk" or "pres"
    key: tuple
    edge: int | None = None
    degree: int | None = None
    module_label: tuple | None = None
    p0_edges: tuple = ()
    p1_edges: tuple = ()

    @staticmethod
    def stalk(edge, degree) -> "Summand":
        return Summand("stalk", ("stalk", edge, degree), edge=edge, degree=degree)

    @staticmethod
    def presentation(module_label, p0_edges, p1_edges) -> "Summand":
        return Summand(
            "pres",
            ("pres", tuple(module_label) if isinstance(module_label, (list, tuple)) else (module_label,)),
            module_label=module_label,
            p0_edges=tuple(p0_edges),
            p1_edges=tuple(p1_edges),
        )

    def display(self) -> str:
        if self.kind == "stalk":
            return f"P_{self.edge}[deg {self.degree}]"
        if len(self.p0_edges) == 1 and len(self.p1_edges) == 1:
            # cover first, matching the usual way these summands are written
            return f"P_{self.p1_edges[0]}->P_{self.p0_edges[0]}"
        return f"pres{self.module_label}"


class ProjComplex:
    """Bounded complex of projectives with optional summand labels.

    comps maps a degree to the tuple of projective edge indices in that
    degree; diffs[d] is the matrix of the differential comps[d] ->
    comps[d+1], stored as rows over target slots with path-element entries.
    """

    def __init__(self, algebra: BrauerTreeAlgebra, comps, diffs, labels=None, check=True):
        self.algebra = algebra
        self.comps = {int(d): tuple(c) for d, c in comps.items() if len(c) > 0}
        self.diffs = {}
        for d, mat in diffs.items():
            d = int(d)
            src = self.comps.get(d, ())
            tgt = self.comps.get(d + 1, ())
            mat = [[dict(entry) for entry in row] for row in mat]
            if len(mat) != len(tgt) or any(len(row) != len(src) for row in mat):
                raise ValueError(f"differential at degree {d} has wrong shape")
            self.diffs[d] = mat
        self.labels = tuple(labels) if labels is not None else None
        if check:
            self._validate()
        if self.labels is not None and len(self.labels) == 1:
            algebra.summand_cache.setdefault(self.labels[0].key, self)

    def _validate(self):
        A = self.algebra
        for d, mat in self.diffs.items():
            src, tgt = self.comps[d], self.comps[d + 1]
            for h, row in enumerate(mat):
                for g, entry in enumerate(row):
                    for pc in entry:
                        if pc.start != src[g] or pc.end != tgt[h]:
                            raise ValueError(
                                f"entry {pc} at degree {d} not in block "
                                f"({src[g]}, {tgt[h]})"
                            )
        for d in self.diffs:
            if d + 1 in self.diffs:
                up, down = self.diffs[d + 1], self.diffs[d]
                for t in range(len(self.comps[d + 2])):
                    for g in range(len(self.comps[d])):
                        acc = {}
                        for m in range(len(self.comps[d + 1])):
                            acc = _elem_acc(A, acc, elem_mul(A, down[m][g], up[t][m]))
                        if acc:
                            raise ValueError("differential does not square to zero")

    # -- shape ------------------------------------------------------------------

    def degrees(self):
        return sorted(self.comps)

    @property
    def min_degree(self):
        return min(self.comps)

    @property
    def max_degree(self):
        return max(self.comps)

    def slots(self, d) -> tuple:
        return self.comps.get(d, ())

    def diff(self, d):
        src, tgt = self.slots(d), self.slots(d + 1)
        if d in self.diffs:
            return self.diffs[d]
        return [[{} for _ in src] for _ in tgt]

    def is_minimal(self) -> bool:
        return all(
            all(pc.kind != "e" for entry in row for pc in entry)
            for mat in self.diffs.values()
            for row in mat
        )

    def shift(self, s: int) -> "ProjComplex":
        """X[s]; content at degree d moves to degree d - s."""
        comps = {d - s: c for d, c in self.comps.items()}
        diffs = {d - s: mat for d, mat in self.diffs.items()}
        labels = None
        if self.labels is not None and all(l.kind == "stalk" for l in self.labels):
            labels = tuple(Summand.stalk(l.edge, l.degree - s) for l in self.labels)
        return ProjComplex(self.algebra, comps, diffs, labels=labels, check=False)

    def display(self) -> str:
        if self.labels:
            return " + ".join(l.display() for l in self.labels)
        parts = [f"deg {d}: {list(self.comps[d])}" for d in self.degrees()]
        return "; ".join(parts)


def _elem_acc(A, acc, extra):
    for pc, c in extra.items():
        v = (acc.get(pc, 0) + c) % A.prime
        if v:
            acc[pc] = v
        else:
            acc.pop(pc, None)
    return acc


def stalk_complex(A: BrauerTreeAlgebra, edge, degree=0) -> ProjComplex:
    if edge not in A.eidx:
        raise ValueError(f"unknown edge {edge}")
    return ProjComplex(A, {degree: (edge,)}, {}, labels=(Summand.stalk(edge, degree),))


def algebra_complex(A: BrauerTreeAlgebra, degree=0) -> ProjComplex:
    """A (or A shifted) as the sum of all projective stalks."""
    return direct_sum([stalk_complex(A, e, degree) for e in A.edges])


def direct_sum(parts) -> ProjComplex:
    parts = list(parts)
    if not parts:
        raise ValueError("empty direct sum")
    A = parts[0].algebra
    if any(p.algebra is not A for p in parts):
        raise ValueError("summands live over different algebras")
    degrees = sorted({d for p in parts for d in p.comps})
    comps = {d: sum((list(p.slots(d)) for p in parts), []) for d in degrees}
    diffs = {}
    for d in degrees:
        if all(d not in p.diffs for p in parts):
            continue
        src = comps[d]
        tgt = comps.get(d + 1, [])
        mat = [[{} for _ in src] for _ in tgt]
        roff = 0
        coff = 0
        for p in parts:
            pd = p.diff(d)
            for h in range(len(p.slots(d + 1))):
                for g in range(len(p.slots(d))):
                    mat[roff + h][coff + g] = dict(pd[h][g])
            roff += len(p.slots(d + 1))
            coff += len(p.slots(d))
        diffs[d] = mat
    labels = None
    if all(p.labels is not None for p in parts):
        labels = tuple(l for p in parts for l in p.labels)
    comps = {d: tuple(c) for d, c in comps.items() if c}
    return ProjComplex(A, comps, diffs, labels=labels, check=False)


# -- chain maps -----------------------------------------------------------------


class ChainMap:
    """Chain map Q -> R[s], stored per degree as a matrix of path elements."""

    def __init__(self, Q: ProjComplex, R: ProjComplex, s: int, comps):
        self.Q, self.R, self.s = Q, R, s
        self.comps = {int(d): [[dict(e) for e in row] for row in mat] for d, mat in comps.items()}

    def entry(self, d):
        src, tgt = self.Q.slots(d), self.R.slots(d + self.s)
        if d in self.comps:
            return self.comps[d]
        return [[{} for _ in src] for _ in tgt]

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self followed by other (other.Q must be self.R)."""
        if other.Q is not self.R:
            raise ValueError("chain maps do not compose")
        A = self.Q.algebra
        s = self.s + other.s
        comps = {}
        for d in self.Q.degrees():
            mid = self.R.slots(d + self.s)
            tgt = other.R.slots(d + s)
            src = self.Q.slots(d)
            if not src or not tgt or not mid:
                continue
            f, g = self.entry(d), other.entry(d + self.s)
            mat = [[{} for _ in src] for _ in tgt]
            for t in range(len(tgt)):
                for i in range(len(src)):
                    acc = {}
                    for j in range(len(mid)):
                        acc = _elem_acc(A, acc, elem_mul(A, f[j][i], g[t][j]))
                    mat[t][i] = acc
            comps[d] = mat
        return ChainMap(self.Q, other.R, s, comps)

    def is_chain_map(self) -> bool:
        A = self.Q.algebra
        for d in self.Q.degrees():
            src = self.Q.slots(d)
            tgt = self.R.slots(d + self.s + 1)
            if not src or not tgt:
                continue
            lhs = [[{} for _ in src] for _ in tgt]
            g_next = self.entry(d + 1)
            dq = self.Q.diff(d)
            for t in range(len(tgt)):
                for i in range(len(src)):
                    acc = {}
                    for m in range(len(self.Q.slots(d + 1))):
                        acc = _elem_acc(A, acc, elem_mul(A, dq[m][i], g_next[t][m]))
                    lhs[t][i] = acc
            g_here = self.entry(d)
            dr = self.R.diff(d + self.s)
            for t in range(len(tgt)):
                for i in range(len(src)):
                    acc = {}
                    for j in range(len(self.R.slots(d + self.s))):
                        acc = _elem_acc(A, acc, elem_mul(A, g_here[j][i], dr[t][j]))
                    if acc != lhs[t][i]:
                        return False
        return True


def identity_chain_map(T: ProjComplex) -> ChainMap:
    from .algebra import idempotent

    comps = {}
    for d in T.degrees():
        slots = T.slots(d)
        comps[d] = [
            [{idempotent(slots[i]): 1} if i == j else {} for i in range(len(slots))]
            for j in range(len(slots))
        ]
    return ChainMap(T, T, 0, comps)


class ChainMapSpace:
    """All chain maps Q -> R[s] and the null-homotopic ones among them.

    chain_basis rows span the chain maps in the coefficient coordinates
    described by `layout`; null_basis rows span the null-homotopic maps.
    """

    def __init__(self, Q: ProjComplex, R: ProjComplex, s: int):
        self.Q, self.R, self.s = Q, R, s
        A = Q.algebra
        if R.algebra is not A:
            raise ValueError("complexes over different algebras")
        p = A.prime
        layout = []  # (d, tgt_slot, src_slot, pcs)
        offsets = {}
        total = 0
        for d in Q.degrees():
            src, tgt = Q.slots(d), R.slots(d + s)
            for j in range(len(tgt)):
                for i in range(len(src)):
                    pcs = A.blocks[(src[i], tgt[j])]
                    offsets[(d, j, i)] = (total, pcs)
                    layout.append((d, j, i, pcs))
                    total += len(pcs)
        self.layout, self.offsets, self.total = layout, offsets, total

        rows = []
        for d in Q.degrees():
            src = Q.slots(d)
            tgt = R.slots(d + s + 1)
            if not src or not tgt:
                continue
            dq, dr = Q.diff(d), R.diff(d + s)
            mid_q = Q.slots(d + 1)
            mid_r = R.slots(d + s)
            for t in range(len(tgt)):
                for i in range(len(src)):
                    coeff: dict = {}
                    for m in range(len(mid_q)):
                        key = (d + 1, t, m)
                        if key not in self.offsets:
                            continue
                        off, pcs = self.offsets[key]
                        for kk, pc in enumerate(pcs):
                            for out_pc, c in elem_mul(A, dq[m][i], {pc: 1}).items():
                                coeff[(off + kk, out_pc)] = (coeff.get((off + kk, out_pc), 0) + c) % p
                    for j in range(len(mid_r)):
                        key = (d, j, i)
                        if key not in self.offsets:
                            continue
                        off, pcs = self.offsets[key]
                        for kk, pc in enumerate(pcs):
                            for out_pc, c in elem_mul(A, {pc: 1}, dr[t][j]).items():
                                coeff[(off + kk, out_pc)] = (coeff.get((off + kk, out_pc), 0) - c) % p
                    out_pcs = {out_pc for (_, out_pc) in coeff}
                    for out_pc in out_pcs:
                        row = linalg.zeros(1, total)[0]
                        for (col, opc), c in coeff.items():
                            if opc == out_pc:
                                row[col] = c
                        if row.any():
                            rows.append(row)
        cmat = np.array(rows, dtype=np.int64) if rows else linalg.zeros(0, total)
        self.chain_basis = linalg.nullspace(cmat, p) if total else linalg.zeros(0, 0)

        hrows = []
        for d in Q.degrees():
            src = Q.slots(d)
            mid = R.slots(d + s - 1)
            for j in range(len(mid)):
                for i in range(len(src)):
                    pcs = A.blocks[(src[i], mid[j])]
                    for pc in pcs:
                        vec = linalg.zeros(1, total)[0]
                        # d_R h contribution in degree d
                        dr = R.diff(d + s - 1)
                        for t in range(len(R.slots(d + s))):
                            key = (d, t, i)
                            if key not in self.offsets:
                                continue
                            off, out_pcs = self.offsets[key]
                            prod = elem_mul(A, {pc: 1}, dr[t][j])
                            for kk, opc in enumerate(out_pcs):
                                if opc in prod:
                                    vec[off + kk] = (vec[off + kk] + prod[opc]) % p
                        # h d_Q contribution in degree d-1
                        dq = Q.diff(d - 1)
                        for i0 in range(len(Q.slots(d - 1))):
                            key = (d - 1, j, i0)
                            if key not in self.offsets:
                                continue
                            off, out_pcs = self.offsets[key]
                            prod = elem_mul(A, dq[i][i0], {pc: 1})
                            for kk, opc in enumerate(out_pcs):
                                if opc in prod:
                                    vec[off + kk] = (vec[off + kk] + prod[opc]) % p
                        if vec.any():
                            hrows.append(vec)
        self.null_basis = np.array(hrows, dtype=np.int64) if hrows else linalg.zeros(0, total)
        self.null_rank = linalg.rank(self.null_basis, p) if total else 0
        if total and self.null_basis.shape[0]:
            stacked = np.concatenate([self.chain_basis, self.null_basis], axis=0)
            if linalg.rank(stacked, p) != self.chain_basis.shape[0]:
                raise AssertionError("null-homotopic maps escaped the chain-map space")
        self.dim = self.chain_basis.shape[0] - self.null_rank
        self._reduction = None

    # -- conversions ---------------------------------------------------------------

    def vector_of(self, f: ChainMap) -> np.ndarray:
        p = self.Q.algebra.prime
        vec = linalg.zeros(1, self.total)[0]
        for (d, j, i, pcs) in self.layout:
            entry = f.entry(d)[j][i]
            off, _ = self.offsets[(d, j, i)]
            for kk, pc in enumerate(pcs):
                if pc in entry:
                    vec[off + kk] = entry[pc] % p
        return vec

    def map_from_vector(self, vec) -> ChainMap:
        comps = {}
        for d in self.Q.degrees():
            src, tgt = self.Q.slots(d), self.R.slots(d + self.s)
            if not src or not tgt:
                continue
            mat = [[{} for _ in src] for _ in tgt]
            for j in range(len(tgt)):
                for i in range(len(src)):
                    off, pcs = self.offsets[(d, j, i)]
                    for kk, pc in enumerate(pcs):
                        c = int(vec[off + kk])
                        if c:
                            mat[j][i][pc] = c
            comps[d] = mat
        return ChainMap(self.Q, self.R, self.s, comps)

    def _reduction_data(self):
        if self._reduction is None:
            p = self.Q.algebra.prime
            null_red, null_piv = linalg.rref(self.null_basis, p)
            null_rows = null_red[: len(null_piv)]
            reps = []
            current = null_rows
            for v in self.chain_basis:
                stacked = np.concatenate([current, v[None, :]], axis=0)
                if linalg.rank(stacked, p) > current.shape[0]:
                    reps.append(v)
                    current = stacked
            reps = np.array(reps, dtype=np.int64) if reps else linalg.zeros(0, self.total)
            self._reduction = (null_rows, reps)
        return self._reduction

    def quotient_coords(self, vec) -> np.ndarray:
        """Coordinates of a chain-map vector in the homotopy quotient."""
        null_rows, reps = self._reduction_data()
        p = self.Q.algebra.prime
        if reps.shape[0] == 0:
            return linalg.zeros(1, 0)[0]
        full = np.concatenate([null_rows, reps], axis=0)
        sol = linalg.solve(full.T, np.asarray(vec, dtype=np.int64) % p, p)
        if sol is None:
            raise ValueError("vector is not a chain map")
        return sol[null_rows.shape[0] :]

    def is_null_homotopic(self, f: ChainMap) -> bool:
        return not self.quotient_coords(self.vector_of(f)).any()

    def basis_maps(self) -> list[ChainMap]:
        _, reps = self._reduction_data()
        return [self.map_from_vector(v) for v in reps]


def chain_map_space(Q: ProjComplex, R: ProjComplex, s: int) -> ChainMapSpace:
    return ChainMapSpace(Q, R, s)


def _pair_hom_dim(A: BrauerTreeAlgebra, lu: Summand, lv: Summand, s: int) -> int:
    key = (lu.key, lv.key, s)
    if key in A.hom_cache:
        return A.hom_cache[key]
    Qu = A.summand_cache.get(lu.key)
    Rv = A.summand_cache.get(lv.key)
    if Qu is None or Rv is None:
        raise KeyError("summand complex not registered")
    dim = ChainMapSpace(Qu, Rv, s).dim
    A.hom_cache[key] = dim
    return dim


def hom_complex_dim(Q: ProjComplex, R: ProjComplex, s: int, direct: bool = False) -> int:
    """dim Hom_{K^b}(Q, R[s]).

    With summand labels available on both sides the dimension is the sum
    over label pairs, computed once per pair and cached on the algebra;
    direct=True forces one whole-complex elimination instead.
    """
    A = Q.algebra
    if not direct and Q.labels is not None and R.labels is not None:
        try:
            return sum(
                _pair_hom_dim(A, lu, lv, s) for lu in Q.labels for lv in R.labels
            )
        except KeyError:
            pass
    return ChainMapSpace(Q, R, s).dim


def euler_pairing(Q: ProjComplex, R: ProjComplex) -> int:
    """Alternating sum of module Hom dimensions between the components;
    equals dim Hom_{K^b}(Q, R) whenever the pair has no Homs in nonzero
    shifts."""
    A = Q.algebra
    total = 0
    for r, qs in Q.comps.items():
        for s, rs in R.comps.items():
            sign = -1 if (r - s) % 2 else 1
            block = sum(len(A.blocks[(a, b)]) for a in qs for b in rs)
            total += sign * block
    return total
