"""Tilting decisions for complexes of projectives, and the module-level
criteria that decide them without touching chain maps.

For a minimal presentation T of a module M (no projective summands) the
complex T is partial tilting exactly when M has no maps to its second
syzygy and no chain maps T -> M; the two routes are kept independent so
they can cross-check each other.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .algebra import elem_mul
from .complexes import (
    ProjComplex,
    direct_sum,
    hom_complex_dim,
    stalk_complex,
)
from .modules import (
    Representation,
    decompose_serial,
    has_projective_summand,
    hom_dim,
    min_proj_presentation,
    projective_rep,
    projective_sum,
    quotient_representation,
    second_syzygy,
    uniserial_rep,
)


def shift_range(Q: ProjComplex, R: ProjComplex):
    """Nonzero shifts where Hom can be nonzero for degree reasons."""
    lo = R.min_degree - Q.max_degree
    hi = R.max_degree - Q.min_degree
    return [s for s in range(lo, hi + 1) if s != 0]


def is_partial_tilting(T: ProjComplex, direct: bool = False) -> bool:
    return all(hom_complex_dim(T, T, s, direct=direct) == 0 for s in shift_range(T, T))


def is_tilting(T: ProjComplex, direct: bool = False) -> bool:
    """Partial tilting with as many isomorphism classes of indecomposable
    summands as the algebra has simples (the count criterion replaces the
    generation condition over these algebras)."""
    if T.labels is None:
        raise ValueError("is_tilting needs summand labels")
    distinct = {l.key for l in T.labels}
    if len(distinct) != T.algebra.n:
        return False
    return is_partial_tilting(T, direct=direct)


def hom_to_module(T: ProjComplex, M: Representation) -> int:
    """dim Hom_{K^b}(T, M) with M a stalk in T's lower degree: maps from
    the lower term to M modulo those factoring through the differential."""
    A = T.algebra
    if M.algebra is not A:
        raise ValueError("module over a different algebra")
    lo = T.min_degree
    src = T.slots(lo)
    tgt = T.slots(lo + 1)
    dim_maps = sum(M.dims[A.eidx[a]] for a in src)
    if not tgt or lo not in T.diffs:
        return dim_maps
    diff = T.diffs[lo]
    rows = sum(M.dims[A.eidx[a]] for a in src)
    cols = sum(M.dims[A.eidx[b]] for b in tgt)
    mat = linalg.zeros(rows, cols)
    roff = 0
    for g, a in enumerate(src):
        coff = 0
        da = M.dims[A.eidx[a]]
        for h, b in enumerate(tgt):
            db = M.dims[A.eidx[b]]
            block = linalg.zeros(da, db)
            for pc, c in diff[h][g].items():
                block = (block + c * M.path_action(pc)) % A.prime
            mat[roff : roff + da, coff : coff + db] = block
            coff += db
        roff += da
    return dim_maps - linalg.rank(mat, A.prime)


def module_partial_tilting_test(M: Representation) -> bool:
    """Decide partial tilting of the minimal presentation from module data
    alone: no maps M -> second syzygy and no chain maps onto M."""
    if M.is_zero():
        raise ValueError("zero module")
    if has_projective_summand(M):
        raise ValueError("module has a projective direct summand")
    omega2 = second_syzygy(M, _check=False)
    if not omega2.is_zero() and hom_dim(M, omega2) != 0:
        return False
    T = min_proj_presentation(M)
    return hom_to_module(T, M) == 0


def stalk_orthogonality_test(
    M: Representation, edge, degree: int, check_precondition: bool = True
) -> bool:
    """Whether the stalk of P_edge (at the given degree of a two-term
    presentation) can join the minimal presentation of M in a partial
    tilting complex."""
    if degree not in (0, 1):
        raise ValueError("degree must be 0 or 1")
    if check_precondition and not is_partial_tilting(min_proj_presentation(M)):
        raise ValueError("minimal presentation of M is not partial tilting")
    A = M.algebra
    P = projective_rep(A, edge)
    N = M if degree == 0 else second_syzygy(M, _check=False)
    if N.is_zero():
        return True
    return hom_dim(N, P) == 0 and hom_dim(P, N) == 0


# -- two-term decomposition (star algebras) -----------------------------------------


def cokernel_rep(T: ProjComplex) -> Representation:
    """Cokernel of the differential of a two-term complex, as a module on
    the upper term."""
    A = T.algebra
    lo, hi = T.min_degree, T.max_degree
    if hi - lo != 1:
        raise ValueError("cokernel is defined for two-term complexes")
    upper, offsets = projective_sum(A, T.slots(hi))
    spans = [[] for _ in range(A.n)]
    diff = T.diff(lo)
    for g, a in enumerate(T.slots(lo)):
        for c_idx, c in enumerate(A.edges):
            for q in A.blocks[(c, a)]:
                vec = linalg.zeros(1, upper.dims[c_idx])[0]
                for h, b in enumerate(T.slots(hi)):
                    prod = elem_mul(A, {q: 1}, diff[h][g])
                    for pc, cf in prod.items():
                        vec[offsets[h][c_idx] + A.block_pos[(c, b)][pc]] = cf
                if vec.any():
                    spans[c_idx].append(vec)
    spans = [
        np.array(s, dtype=np.int64) if s else linalg.zeros(0, upper.dims[i])
        for i, s in enumerate(spans)
    ]
    quot, _ = quotient_representation(upper, spans)
    return quot


def decompose_two_term(T: ProjComplex) -> ProjComplex:
    """Rewrite a two-term complex over a star algebra as a labeled sum of
    minimal presentations, stalks in both degrees and nothing else
    (contractible pieces are dropped)."""
    A = T.algebra
    A.require_star()
    lo, hi = T.min_degree, T.max_degree
    if (lo, hi) != (0, 1):
        raise ValueError("decomposition expects a complex in degrees 0 and 1")
    nk = A.n * A.tree.multiplicity
    specs = decompose_serial(cokernel_rep(T))
    parts = []
    used_hi = {e: 0 for e in A.edges}
    used_lo = {e: 0 for e in A.edges}
    for spec in specs:
        if spec.length == nk + 1:
            parts.append(stalk_complex(A, spec.top, hi))
            used_hi[spec.top] += 1
        else:
            pres = min_proj_presentation(
                uniserial_rep(A, spec), label=("uniserial", spec.top, spec.length)
            )
            parts.append(pres)
            used_hi[spec.top] += 1
            used_lo[A.star_next(spec.top, -spec.length)] += 1
    contractible = {}
    for e in A.edges:
        c = list(T.slots(hi)).count(e) - used_hi[e]
        if c < 0:
            raise AssertionError("decomposition used more covers than present")
        contractible[e] = c
    for e in A.edges:
        extra = list(T.slots(lo)).count(e) - used_lo[e] - contractible[e]
        if extra < 0:
            raise AssertionError("decomposition used more lower slots than present")
        for _ in range(extra):
            parts.append(stalk_complex(A, e, lo))
    if not parts:
        # everything was contractible
        return ProjComplex(A, {}, {}, labels=())
    return direct_sum(parts)
