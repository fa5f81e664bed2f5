"""Endomorphism rings of two-term tilting complexes over a Brauer star
algebra: Cartan matrix, partition of the summands into A-cycles with their
cyclic orders, and the resulting Brauer tree.

Two independent decoders are provided.  The generic one assembles the
endomorphism algebra from chain-map spaces, reads off the quiver from the
radical modulo its square and traces maximal chains of arrows with nonzero
products.  The star fast path groups summands by shared components and
orders them along the star, with explicit witness morphisms whose maximal
nonzero compositions certify each cyclic order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import BrauerTreeAlgebra, idempotent, socle_class
from .complexes import (
    ChainMap,
    ChainMapSpace,
    ProjComplex,
    euler_pairing,
    hom_complex_dim,
    identity_chain_map,
)
from .tilting import is_tilting
from .trees import BrauerTree


@dataclass
class ACycle:
    """A vertex of the endomorphism Brauer tree: the cyclically ordered
    summands around it, witness morphisms between consecutive members, and
    whether the vertex is exceptional."""

    members: tuple  # summand indices, in cyclic order
    exceptional: bool
    witnesses: list | None = None  # ChainMap member[t] -> member[t+1]

    def normalized(self):
        rots = [
            self.members[i:] + self.members[:i] for i in range(len(self.members))
        ]
        return min(rots)


def summand_complexes(T: ProjComplex) -> list[ProjComplex]:
    if T.labels is None:
        raise ValueError("summand labels required")
    A = T.algebra
    out = []
    for l in T.labels:
        S = A.summand_cache.get(l.key)
        if S is None:
            raise ValueError(f"no registered complex for summand {l.key}")
        out.append(S)
    return out


def endo_cartan(T: ProjComplex, check_tilting: bool = True) -> list[list[int]]:
    """Cartan matrix of End(T): Hom dimensions at shift zero between the
    summands, cross-checked against the alternating-sum pairing."""
    if check_tilting and not is_tilting(T):
        raise ValueError("complex is not tilting")
    parts = summand_complexes(T)
    m = len(parts)
    cart = [[hom_complex_dim(parts[i], parts[j], 0) for j in range(m)] for i in range(m)]
    for i in range(m):
        for j in range(m):
            if cart[i][j] != cart[j][i]:
                raise AssertionError("endomorphism Cartan matrix is not symmetric")
            if cart[i][j] != euler_pairing(parts[i], parts[j]):
                raise AssertionError("Cartan entry disagrees with the Euler pairing")
    return cart


# -- star fast path -------------------------------------------------------------------


def _label_data(T: ProjComplex):
    """(stalk degree, per-summand info) for covering-shaped labels."""
    stalk_degrees = {l.degree for l in T.labels if l.kind == "stalk"}
    if len(stalk_degrees) != 1:
        raise ValueError("expected stalk summands concentrated in one degree")
    info = []
    for l in T.labels:
        if l.kind == "stalk":
            info.append(("stalk", l.edge))
        else:
            if len(l.p0_edges) != 1 or len(l.p1_edges) != 1:
                raise ValueError("fast path needs single-slot presentations")
            info.append(("pres", l.p0_edges[0], l.p1_edges[0]))
    return stalk_degrees.pop(), info


def a_cycle_fast(T: ProjComplex) -> list[ACycle]:
    """A-cycle partition by the shared-component case analysis over the
    star, including leaf groups of a single summand."""
    A = T.algebra
    A.require_star()
    n = A.n
    delta, info = _label_data(T)
    parts = summand_complexes(T)

    stalks = sorted(
        (i for i, it in enumerate(info) if it[0] == "stalk"),
        key=lambda i: info[i][1],
    )
    g0: dict[int, list[int]] = {}
    g1: dict[int, list[int]] = {}
    for i, it in enumerate(info):
        if it[0] == "pres":
            g0.setdefault(it[1], []).append(i)
            g1.setdefault(it[2], []).append(i)

    cycles = []
    witnesses = []

    def stalk_map(u, v, degree):
        length = (info[v][1] - info[u][1]) % n or n
        pc = A.star_path(info[u][1], length)
        return ChainMap(parts[u], parts[v], 0, {degree: [[{pc: 1}]]})

    # the cycle of all stalks, exceptional
    mem = tuple(stalks)
    wits = [
        stalk_map(mem[t], mem[(t + 1) % len(mem)], delta) for t in range(len(mem))
    ]
    cycles.append(ACycle(mem, True, wits))

    def pres_step_lower(u, v):
        # shared lower component, moving along the covers
        j = info[u][1]
        a, b = info[u][2], info[v][2]
        pc = A.star_path(a, (b - a) % n)
        return ChainMap(
            parts[u], parts[v], 0, {0: [[{idempotent(j): 1}]], 1: [[{pc: 1}]]}
        )

    def pres_step_upper(u, v):
        # shared cover, moving along the lower components
        b = info[u][2]
        a, a2 = info[u][1], info[v][1]
        pc = A.star_path(a, (a2 - a) % n)
        return ChainMap(
            parts[u], parts[v], 0, {0: [[{pc: 1}]], 1: [[{idempotent(b): 1}]]}
        )

    for j in sorted(g0):
        group = sorted(g0[j], key=lambda i: (info[i][2] - j) % n)
        if delta == 0 and any(info[s][1] == j for s in stalks):
            s = next(s for s in stalks if info[s][1] == j)
            mem = (s,) + tuple(group)
            wits = [
                ChainMap(parts[s], parts[group[0]], 0, {0: [[{socle_class(j): 1}]]})
            ]
            wits += [pres_step_lower(group[t], group[t + 1]) for t in range(len(group) - 1)]
            wits.append(
                ChainMap(parts[group[-1]], parts[s], 0, {0: [[{idempotent(j): 1}]]})
            )
            cycles.append(ACycle(mem, False, wits))
        else:
            mem = tuple(group)
            wits = [pres_step_lower(group[t], group[t + 1]) for t in range(len(group) - 1)]
            wits.append(
                ChainMap(
                    parts[group[-1]],
                    parts[group[0]],
                    0,
                    {0: [[{socle_class(j): 1}]], 1: [[{}]]},
                )
            )
            cycles.append(ACycle(mem, False, wits))

    for b in sorted(g1):
        group = sorted(g1[b], key=lambda i: (info[i][1] - b) % n)
        if delta == 1 and any(info[s][1] == b for s in stalks):
            s = next(s for s in stalks if info[s][1] == b)
            mem = (s,) + tuple(group)
            wits = [
                ChainMap(parts[s], parts[group[0]], 0, {1: [[{idempotent(b): 1}]]})
            ]
            wits += [pres_step_upper(group[t], group[t + 1]) for t in range(len(group) - 1)]
            wits.append(
                ChainMap(parts[group[-1]], parts[s], 0, {1: [[{socle_class(b): 1}]]})
            )
            cycles.append(ACycle(mem, False, wits))
        else:
            mem = tuple(group)
            wits = [pres_step_upper(group[t], group[t + 1]) for t in range(len(group) - 1)]
            wits.append(
                ChainMap(
                    parts[group[-1]],
                    parts[group[0]],
                    0,
                    {0: [[{}]], 1: [[{socle_class(b): 1}]]},
                )
            )
            cycles.append(ACycle(mem, False, wits))

    return cycles


def validate_cycles(T: ProjComplex, cycles: list[ACycle]):
    """Witness maximality: around a cycle of length r the composition of r
    consecutive witnesses (kr at the exceptional vertex) is not
    null-homotopic, and one more composition kills it."""
    A = T.algebra
    k = A.tree.multiplicity
    parts = summand_complexes(T)
    spaces: dict[tuple, ChainMapSpace] = {}

    def space(u, v):
        if (u, v) not in spaces:
            spaces[(u, v)] = ChainMapSpace(parts[u], parts[v], 0)
        return spaces[(u, v)]

    for cyc in cycles:
        r = len(cyc.members)
        if cyc.witnesses is None or len(cyc.witnesses) != r:
            raise AssertionError("cycle carries no witness chain")
        for t, w in enumerate(cyc.witnesses):
            if not w.is_chain_map():
                raise AssertionError("witness is not a chain map")
        bound = k * r if cyc.exceptional else r
        for start in range(r):
            comp = cyc.witnesses[start]
            for step in range(1, bound):
                comp = comp.compose(cyc.witnesses[(start + step) % r])
            u = cyc.members[start]
            v = cyc.members[(start + bound) % r]
            if space(u, v).is_null_homotopic(comp):
                raise AssertionError("witness composition died too early")
            comp = comp.compose(cyc.witnesses[(start + bound) % r])
            v2 = cyc.members[(start + bound + 1) % r]
            if not space(u, v2).is_null_homotopic(comp):
                raise AssertionError("witness composition survived past the bound")


# -- generic decoder ------------------------------------------------------------------


class EndoAlgebra:
    """Basis and structure constants of End(T) assembled from chain maps
    modulo homotopy."""

    def __init__(self, T: ProjComplex):
        self.T = T
        A = T.algebra
        self.p = A.prime
        self.parts = summand_complexes(T)
        m = len(self.parts)
        self.m = m
        self.spaces = {
            (u, v): ChainMapSpace(self.parts[u], self.parts[v], 0)
            for u in range(m)
            for v in range(m)
        }
        self.maps = {uv: sp.basis_maps() for uv, sp in self.spaces.items()}
        self.dims = {uv: len(b) for uv, b in self.maps.items()}
        self.idc = {
            u: self.spaces[(u, u)].quotient_coords(
                self.spaces[(u, u)].vector_of(identity_chain_map(self.parts[u]))
            )
            for u in range(m)
        }

    def compose_coords(self, u, v, w, f: ChainMap, g: ChainMap) -> np.ndarray:
        sp = self.spaces[(u, w)]
        return sp.quotient_coords(sp.vector_of(f.compose(g)))

    def map_from_coords(self, u, v, coords) -> ChainMap:
        sp = self.spaces[(u, v)]
        _, reps = sp._reduction_data()
        vec = (np.asarray(coords, dtype=np.int64)[None, :] @ reps) % self.p if len(coords) else linalg.zeros(1, sp.total)
        return sp.map_from_vector(vec[0] if vec.ndim == 2 else vec)

    def local_radical(self, u) -> list[np.ndarray]:
        """Coordinate vectors spanning rad End(T_u)."""
        d = self.dims[(u, u)]
        if d == 1:
            return []
        prods = [
            [
                self.compose_coords(u, u, u, self.maps[(u, u)][i], self.maps[(u, u)][j])
                for j in range(d)
            ]
            for i in range(d)
        ]
        idc = self.idc[u]

        def left_mult(xc):
            cols = []
            for j in range(d):
                col = linalg.zeros(1, d)[0]
                for i in range(d):
                    if xc[i]:
                        col = (col + int(xc[i]) * prods[i][j]) % self.p
                cols.append(col)
            return np.array(cols, dtype=np.int64).T

        def scalar_of(xc) -> int:
            L = left_mult(xc)
            if self.p > d and d % self.p != 0:
                inv_d = pow(d, -1, self.p)
                c = int(np.trace(L)) % self.p * inv_d % self.p
                if _is_nilpotent((L - c * linalg.eye(d)) % self.p, self.p, d):
                    return c
            for c in range(self.p):
                if _is_nilpotent((L - c * linalg.eye(d)) % self.p, self.p, d):
                    return c
            raise AssertionError("local algebra has no scalar part")

        rad_rows = []
        for i in range(d):
            e = linalg.zeros(1, d)[0]
            e[i] = 1
            c = scalar_of(e)
            rad_rows.append((e - c * idc) % self.p)
        mat = np.array(rad_rows, dtype=np.int64)
        red, piv = linalg.rref(mat, self.p)
        return [red[i] for i in range(len(piv))]


def _is_nilpotent(mat, p, d) -> bool:
    m = mat.copy() % p
    steps = max(1, d).bit_length() + 1
    for _ in range(steps):
        if not m.any():
            return True
        m = (m @ m) % p
    return not m.any()


def a_cycle_generic(T: ProjComplex) -> list[ACycle]:
    """Quiver of End(T) from the radical modulo its square; cycles traced
    along maximal nonzero compositions of arrows."""
    E = EndoAlgebra(T)
    p, m = E.p, E.m
    k = T.algebra.tree.multiplicity

    # radical basis per block, as (coords) with chain-map lifts
    jbasis: dict[tuple, list[tuple[np.ndarray, ChainMap]]] = {}
    for u in range(m):
        for v in range(m):
            if u == v:
                items = []
                for coords in E.local_radical(u):
                    items.append((coords, E.map_from_coords(u, u, coords)))
                jbasis[(u, v)] = items
            else:
                items = []
                for i, f in enumerate(E.maps[(u, v)]):
                    coords = linalg.zeros(1, E.dims[(u, v)])[0]
                    coords[i] = 1
                    items.append((coords, f))
                jbasis[(u, v)] = items

    # radical squared per block
    jsq: dict[tuple, list[np.ndarray]] = {uv: [] for uv in jbasis}
    for u in range(m):
        for w in range(m):
            for v in range(m):
                for (_, f) in jbasis[(u, v)]:
                    for (_, g) in jbasis[(v, w)]:
                        coords = E.compose_coords(u, v, w, f, g)
                        if coords.any():
                            jsq[(u, w)].append(coords)

    arrows = []  # (u, v, ChainMap)
    for u in range(m):
        for v in range(m):
            d = E.dims[(u, v)] if u != v else len(jbasis[(u, v)])
            if d == 0:
                continue
            width = len(jbasis[(u, v)][0][0])
            current = (
                np.array(jsq[(u, v)], dtype=np.int64)
                if jsq[(u, v)]
                else linalg.zeros(0, width)
            )
            picked = []
            for coords, f in jbasis[(u, v)]:
                stacked = np.concatenate([current, coords[None, :]], axis=0)
                if linalg.rank(stacked, p) > linalg.rank(current, p):
                    picked.append((coords, f))
                    current = stacked
            for coords, f in picked:
                arrows.append((u, v, f))
            if u != v and len(picked) > 1:
                raise AssertionError("more than one arrow between distinct vertices")

    # successors: unique next arrow with nonzero composite
    def nonzero(u, w, f):
        sp = E.spaces[(u, w)]
        return sp.quotient_coords(sp.vector_of(f)).any()

    succ = {}
    for ai, (u, v, f) in enumerate(arrows):
        nxt = [
            bi
            for bi, (u2, w, g) in enumerate(arrows)
            if u2 == v and nonzero(u, w, f.compose(g))
        ]
        if len(nxt) > 1:
            raise AssertionError("arrow has more than one nonzero successor")
        succ[ai] = nxt[0] if nxt else None

    visited = set()
    cycles = []
    for ai in range(len(arrows)):
        if ai in visited:
            continue
        # walk back to a chain head if the orbit is not closed
        chain = [ai]
        visited.add(ai)
        cur = ai
        closed = False
        while succ[cur] is not None:
            cur = succ[cur]
            if cur == chain[0]:
                closed = True
                break
            if cur in visited:
                raise AssertionError("arrow orbits are not disjoint")
            visited.add(cur)
            chain.append(cur)
        if not closed:
            preds = [bi for bi in range(len(arrows)) if succ[bi] == chain[0]]
            if preds:
                raise AssertionError("open chain with a predecessor")
        members = tuple(arrows[b][0] for b in chain)
        wits = [arrows[b][2] for b in chain]
        cycles.append(ACycle(members, False, wits))

    # exceptional detection: two full loops of compositions stay nonzero
    # exactly at the exceptional cycle when the multiplicity is >= 2
    exceptional_idx = None
    for ci, cyc in enumerate(cycles):
        if k < 2:
            break
        r = len(cyc.members)
        comp = cyc.witnesses[0]
        for t in range(1, 2 * r):
            comp = comp.compose(cyc.witnesses[t % r])
        u = cyc.members[0]
        sp = E.spaces[(u, u)]
        if sp.quotient_coords(sp.vector_of(comp)).any():
            if exceptional_idx is not None:
                raise AssertionError("two cycles look exceptional")
            exceptional_idx = ci
    if exceptional_idx is None:
        # multiplicity 1 (or no arrows at all): the mark is immaterial;
        # put it on the cycle holding a stalk summand when there is one
        stalk_positions = {
            i for i, l in enumerate(T.labels) if l.kind == "stalk"
        }
        for ci, cyc in enumerate(cycles):
            if set(cyc.members) & stalk_positions:
                exceptional_idx = ci
                break
        if exceptional_idx is None:
            exceptional_idx = 0 if cycles else None
    for ci, cyc in enumerate(cycles):
        cyc.exceptional = ci == exceptional_idx
    if not cycles:
        # single summand, no arrows (one-edge tree with multiplicity 1)
        cycles = [ACycle((0,), True, None)]
    return cycles


# -- tree assembly --------------------------------------------------------------------


def _tree_from_cycles(T: ProjComplex, cycles: list[ACycle]) -> tuple[BrauerTree, dict]:
    A = T.algebra
    n = len(T.labels)
    membership = {i: [] for i in range(n)}
    for ci, cyc in enumerate(cycles):
        if len(set(cyc.members)) != len(cyc.members):
            raise AssertionError("cycle repeats a summand")
        for i in cyc.members:
            membership[i].append(ci)
    vertex_orders = {}
    for ci, cyc in enumerate(cycles):
        vertex_orders[("c", ci)] = tuple(cyc.members)
    leaf_count = 0
    for i in range(n):
        if len(membership[i]) > 2:
            raise AssertionError("summand lies on more than two cycles")
        while len(membership[i]) < 2:
            vertex_orders[("l", leaf_count)] = (i,)
            membership[i].append(("leaf", leaf_count))
            leaf_count += 1
    vertices = list(vertex_orders)
    vid = {v: t for t, v in enumerate(vertices)}
    edges = {}
    for i in range(n):
        ends = []
        for ref in membership[i]:
            if isinstance(ref, tuple) and ref[0] == "leaf":
                ends.append(vid[("l", ref[1])])
            else:
                ends.append(vid[("c", ref)])
        edges[i] = tuple(ends)
    cyclic = {vid[v]: order for v, order in vertex_orders.items()}
    exc_cycles = [ci for ci, cyc in enumerate(cycles) if cyc.exceptional]
    if len(exc_cycles) != 1:
        raise AssertionError("expected exactly one exceptional cycle")
    tree = BrauerTree(
        range(len(vertices)),
        edges,
        cyclic,
        vid[("c", exc_cycles[0])],
        A.tree.multiplicity,
    )
    label_map = {i: T.labels[i] for i in range(n)}
    return tree, label_map


def a_cycle_partition(T: ProjComplex, method: str = "both", validate: bool = True) -> list[ACycle]:
    """Partition of the summands of a tilting complex into A-cycles.

    method 'generic' decodes the quiver of End(T); 'fast' applies the
    shared-component case analysis over the star; 'both' runs the two and
    insists they agree.
    """
    if not is_tilting(T):
        raise ValueError("complex is not tilting")
    if method == "fast":
        cycles = a_cycle_fast(T)
        if validate:
            validate_cycles(T, cycles)
        return cycles
    if method == "generic":
        return a_cycle_generic(T)
    if method != "both":
        raise ValueError("method must be 'fast', 'generic' or 'both'")
    fast = a_cycle_fast(T)
    if validate:
        validate_cycles(T, fast)
    generic = a_cycle_generic(T)
    def norm(cycles, with_flag):
        full = {c.normalized(): c.exceptional for c in cycles if len(c.members) >= 2}
        if with_flag:
            return {(mem, flag) for mem, flag in full.items()}
        return set(full)
    with_flag = T.algebra.tree.multiplicity >= 2
    if norm(fast, with_flag) != norm(generic, with_flag):
        raise AssertionError("fast and generic A-cycle decoders disagree")
    return fast


def endo_brauer_tree(T: ProjComplex, method: str = "both", validate: bool = True):
    """Brauer tree of End(T) with edges labeled by the summands; returns
    (tree, edge -> summand label map)."""
    cycles = a_cycle_partition(T, method=method, validate=validate)
    tree, label_map = _tree_from_cycles(T, cycles)
    endo_cart = endo_cartan(T, check_tilting=False)
    from .algebra import build_tree_algebra

    check = build_tree_algebra(tree, T.algebra.prime)
    if check.cartan_matrix() != endo_cart:
        raise AssertionError(
            "tree Cartan matrix disagrees with the endomorphism Cartan matrix"
        )
    return tree, label_map


def is_autoequivalence_covering(cov, A: BrauerTreeAlgebra, method: str = "fast") -> bool:
    """Whether the covering's tilting complex has endomorphism ring
    isomorphic to the star algebra itself."""
    from .coverings import covering_to_complex

    T = covering_to_complex(cov, A)
    tree, _ = endo_brauer_tree(T, method=method)
    return tree.is_isomorphic_to(A.tree)
