"""Divisibility conditions on Hermitian lattices.

Both conditions quantify over vectors r of a fixed norm and only depend
on the Z-module M_r = {<l, r> : l in L} inside F. That module is the sum
of the modules coming from the orthogonal blocks of the Gram matrix, so
the bounded search enumerates every block's coordinate box once (with
numpy), records the distinct modules per norm, and combines blocks. This
decides exactly the same thing as testing every vector of the full box
one at a time.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .hlattice import HermLattice, _trace_gram, from_z_coords
from .intmat import hnf2
from .qfield import FieldElem, OmegaKind, format_rational, is_in_scaled_ring
from .qlattice import DEFAULT_LIMIT, EnumerationLimitError

DEFAULT_BOUND = 3
_CHUNK = 1 << 20


class ConditionStatus(enum.Enum):
    VERIFIED_SUFFICIENT = "VERIFIED_SUFFICIENT"
    VERIFIED_UP_TO_BOUND = "VERIFIED_UP_TO_BOUND"
    VIOLATED = "VIOLATED"

    @property
    def passed(self) -> bool:
        return self is not ConditionStatus.VIOLATED


@dataclass(frozen=True)
class ConditionVerdict:
    condition: str
    status: ConditionStatus
    bound_used: Optional[int] = None
    counterexample: Optional[tuple[FieldElem, ...]] = None
    witness: Optional[FieldElem] = None
    checked_vectors: int = 0
    distinct_modules: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status.passed

    def to_json(self) -> dict:
        def fe(x):
            p, q = x.sqrt_coords()
            return [format_rational(p), format_rational(q)]
        return {
            "condition": self.condition,
            "status": self.status.value,
            "bound_used": self.bound_used,
            "counterexample": None if self.counterexample is None else
            [fe(x) for x in self.counterexample],
            "witness": None if self.witness is None else fe(self.witness),
            "checked_vectors": self.checked_vectors,
            "distinct_modules": self.distinct_modules,
            "note": self.note,
        }


# --- numpy helpers ---------------------------------------------------------

def _vxgcd(a, b):
    old_r, r = a.copy(), b.copy()
    old_s, s = np.ones_like(a), np.zeros_like(a)
    old_t, t = np.zeros_like(a), np.ones_like(a)
    while True:
        nz = r != 0
        if not nz.any():
            break
        q = np.zeros_like(r)
        q[nz] = old_r[nz] // r[nz]
        old_r, r = np.where(nz, r, old_r), np.where(nz, old_r - q * r, r)
        old_s, s = np.where(nz, s, old_s), np.where(nz, old_s - q * s, s)
        old_t, t = np.where(nz, t, old_t), np.where(nz, old_t - q * t, t)
    neg = old_r < 0
    return np.where(neg, -old_r, old_r), np.where(neg, -old_s, old_s), np.where(neg, -old_t, old_t)


def _vhnf2(P, Q):
    """Row-wise hnf2 over generator arrays of shape (N, K)."""
    N, K = P.shape
    A = np.zeros(N, dtype=np.int64)
    B = np.zeros(N, dtype=np.int64)
    C = np.zeros(N, dtype=np.int64)
    for k in range(K):
        p, q = P[:, k], Q[:, k]
        g, s, t = _vxgcd(A, p)
        g0 = g == 0
        gs = np.where(g0, 1, g)
        kern = np.where(g0, q, (p // gs) * B - (A // gs) * q)
        C = np.gcd(C, kern)
        B = np.where(g0, B, s * B + t * q)
        A = np.where(g0, A, g)
        B = np.where(C > 0, np.mod(B, np.where(C > 0, C, 1)), B)
    return A, B, C


def _lcm_den(values) -> int:
    d = 1
    for v in values:
        d = d * v.denominator // math.gcd(d, v.denominator)
    return d


def gram_blocks(H: HermLattice) -> list[list[int]]:
    """Index sets of the orthogonal blocks (connected components)."""
    m = H.rank
    seen = [False] * m
    blocks = []
    for s in range(m):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(m):
                if not seen[j] and H.gram[i][j]:
                    seen[j] = True
                    stack.append(j)
        blocks.append(sorted(comp))
    return blocks


def _sub(H: HermLattice, idx) -> HermLattice:
    return HermLattice(H.field, [[H.gram[i][j] for j in idx] for i in idx])


def _box_chunks(dim: int, bound: int):
    """Yield int64 arrays covering [-bound, bound]^dim in lexicographic order."""
    side = 2 * bound + 1
    inner = dim
    while inner > 0 and side ** inner > _CHUNK:
        inner -= 1
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    if inner:
        grid = np.stack(np.meshgrid(*([vals] * inner), indexing="ij"), axis=-1).reshape(-1, inner)
    else:
        grid = np.zeros((1, 0), dtype=np.int64)
    for head in itertools.product(range(-bound, bound + 1), repeat=dim - inner):
        h = np.broadcast_to(np.array(head, dtype=np.int64), (grid.shape[0], dim - inner))
        yield np.concatenate([h, grid], axis=1)


@dataclass
class _BlockData:
    idx: list[int]
    norm_scale: int           # integer norms are (2 * D_T) * hermitian norm
    module_scale: int         # module coordinates scaled by this
    tgram: np.ndarray
    mx: np.ndarray            # (2k, 2k): w-basis coordinates of <b, r>
    my: np.ndarray


def _block_data(H: HermLattice, idx) -> _BlockData:
    Hb = _sub(H, idx)
    k = Hb.rank
    T = _trace_gram(Hb)
    dt = _lcm_den(x for row in T for x in row)
    tg = np.array([[int(x * dt) for x in row] for row in T], dtype=np.int64)
    # <b, r> for Z-basis vectors b and r
    f = Hb.field
    basis = [[(f.one if s == 0 else f.omega) if kk == i else f.zero for kk in range(k)]
             for s in (0, 1) for i in range(k)]
    vals = [[Hb.inner(b, r) for r in basis] for b in basis]
    dm = _lcm_den(v for row in vals for x in row for v in (x.a, x.b))
    mx = np.array([[int(x.a * dm) for x in row] for row in vals], dtype=np.int64)
    my = np.array([[int(x.b * dm) for x in row] for row in vals], dtype=np.int64)
    return _BlockData(list(idx), 2 * dt, dm, tg, mx, my)


def _block_table(bd: _BlockData, bound: int, want_norms=None, global_scale: int = 1):
    """Map scaled norm -> {module key: representative z-coords} for one block.

    ``want_norms`` (scaled integers) restricts the table; the module key is
    the HNF (a, b, c) of the module scaled by ``global_scale``.
    """
    dim = bd.tgram.shape[0]
    factor = global_scale // bd.module_scale
    table: dict[int, dict[tuple[int, int, int], np.ndarray]] = {}
    count = 0
    for Z in _box_chunks(dim, bound):
        # hermitian norm * 2 * D_T
        nrm = np.einsum("ij,ij->i", Z @ bd.tgram, Z)
        if want_norms is not None:
            keep = np.isin(nrm, np.fromiter(want_norms, dtype=np.int64))
            Z, nrm = Z[keep], nrm[keep]
        if Z.shape[0] == 0:
            continue
        count += Z.shape[0]
        P = (Z @ bd.mx.T) * factor
        Q = (Z @ bd.my.T) * factor
        A, B, C = _vhnf2(P, Q)
        keys = np.stack([nrm, A, B, C], axis=1)
        uniq, first = np.unique(keys, axis=0, return_index=True)
        for row, i in zip(uniq, first):
            t = int(row[0])
            key = (int(row[1]), int(row[2]), int(row[3]))
            bucket = table.setdefault(t, {})
            if key not in bucket:
                bucket[key] = Z[i].copy()
    return table, count


def _module_sum(m1, m2):
    a1, b1, c1 = m1
    a2, b2, c2 = m2
    return hnf2([(a1, b1), (0, c1), (a2, b2), (0, c2)])


def _search_modules(H: HermLattice, t: Fraction, bound: int):
    """Distinct modules M_r (scaled HNF keys) over box vectors r of norm t.

    Returns (dict key -> full z-coords representative, global scale,
    number of vectors examined per block).
    """
    blocks = [_block_data(H, idx) for idx in gram_blocks(H)]
    blocks.sort(key=lambda b: len(b.idx))
    gscale = 1
    for b in blocks:
        gscale = gscale * b.module_scale // math.gcd(gscale, b.module_scale)
    m = H.rank
    # partial state: hermitian norm (Fraction) -> {module: {block-index: zcoords}}
    state: dict[Fraction, dict[tuple, tuple]] = {Fraction(0): {(0, 0, 0): ()}}
    examined = 0
    for pos, bd in enumerate(blocks):
        last = pos == len(blocks) - 1
        want = None
        if last:
            want = {int((t - s) * bd.norm_scale) for s in state
                    if ((t - s) * bd.norm_scale).denominator == 1}
            if not want:
                state = {}
                break
        table, n = _block_table(bd, bound, want, gscale)
        examined += n
        new: dict[Fraction, dict[tuple, tuple]] = {}
        for s, mods in state.items():
            for tn, bmods in table.items():
                tot = s + Fraction(tn, bd.norm_scale)
                if last and tot != t:
                    continue
                dst = new.setdefault(tot, {})
                for k1, rep1 in mods.items():
                    for k2, z in bmods.items():
                        key = _module_sum(k1, k2)
                        if key not in dst:
                            dst[key] = rep1 + ((pos, z),)
        state = new
    found = {}
    for key, parts in state.get(t, {}).items():
        if key == (0, 0, 0):
            continue  # only the zero vector
        zs = [0] * (2 * m)
        for pos, z in parts:
            bd = blocks[pos]
            k = len(bd.idx)
            for j, i in enumerate(bd.idx):
                zs[i] = int(z[j])
                zs[m + i] = int(z[k + j])
        found[key] = tuple(zs)
    return found, gscale, examined


def box_vectors_with_norm(H: HermLattice, t, bound: int, limit: int = DEFAULT_LIMIT):
    """All nonzero z-coordinate vectors in the box with hermitian norm t.

    Counts are convolved blockwise first so the limit is enforced before
    anything large is materialised. Output is lexicographically sorted.
    """
    t = Fraction(t)
    blocks = [_block_data(H, idx) for idx in gram_blocks(H)]
    per_block = []
    for bd in blocks:
        by_norm: dict[Fraction, list[np.ndarray]] = {}
        for Z in _box_chunks(bd.tgram.shape[0], bound):
            nrm = np.einsum("ij,ij->i", Z @ bd.tgram, Z)
            for v in np.unique(nrm):
                by_norm.setdefault(Fraction(int(v), bd.norm_scale), []).append(Z[nrm == v])
        per_block.append({k: np.concatenate(v) for k, v in by_norm.items()})
    counts = {Fraction(0): 1}
    for tab in per_block:
        nxt: dict[Fraction, int] = {}
        for s, c in counts.items():
            for tn, arr in tab.items():
                nxt[s + tn] = nxt.get(s + tn, 0) + c * arr.shape[0]
        counts = nxt
    total = counts.get(t, 0) - (1 if t == 0 else 0)
    if total > limit:
        raise EnumerationLimitError(f"{total} box vectors of norm {t} exceed limit {limit}")
    m = H.rank
    results = []

    def rec(pos, s, parts):
        if pos == len(blocks):
            if s == t:
                results.append(list(parts))
            return
        for tn, arr in per_block[pos].items():
            parts.append(arr)
            if pos == len(blocks) - 1 and s + tn != t:
                parts.pop()
                continue
            rec(pos + 1, s + tn, parts)
            parts.pop()

    rec(0, Fraction(0), [])
    out = []
    for combo in results:
        for rows in itertools.product(*combo):
            zs = [0] * (2 * m)
            for bd, z in zip(blocks, rows):
                k = len(bd.idx)
                for j, i in enumerate(bd.idx):
                    zs[i] = int(z[j])
                    zs[m + i] = int(z[k + j])
            if any(zs):
                out.append(tuple(zs))
    return sorted(out)


# --- module predicates -----------------------------------------------------

def _module_doubles_integral(key, scale) -> bool:
    """2*M inside O_F for M = (1/scale) * <(a, b), (0, c)>."""
    a, b, c = key
    return all((2 * x) % scale == 0 for x in (a, b, c))


def _real_integral_part_witness(key, scale, kind: OmegaKind):
    """An element of M with integral real part outside O_F, or None.

    Re((X + Y w)/scale) is X/scale (w = sqrt d) or (2X + Y)/(2 scale)
    (w = (1 + sqrt d)/2). The sublattice where it is integral contains
    N*M with N = 2*scale, so it suffices to scan k*u + j*v, 0 <= k, j < N.
    """
    a, b, c = key
    eps = 0 if kind is OmegaKind.SQRT_D else 1
    N = 2 * scale
    for k in range(N):
        for j in range(N):
            X, Y = k * a, k * b + j * c
            if (2 * X + eps * Y) % N == 0 and (X % scale or Y % scale):
                return X, Y
    return None


# --- the two conditions ----------------------------------------------------

def _check_bound(bound):
    if bound < 1:
        raise ValueError("bound must be >= 1")


@functools.lru_cache(maxsize=128)
def condition_minus_one(H: HermLattice, bound: int = DEFAULT_BOUND) -> ConditionVerdict:
    """2<l, r> in O_F for all l, r in L with <r, r> = -1."""
    _check_bound(bound)
    name = "2<l,r> in O_F for <r,r> = -1"
    if all(is_in_scaled_ring(x, 2) for row in H.gram for x in row):
        return ConditionVerdict(name, ConditionStatus.VERIFIED_SUFFICIENT, bound_used=None,
                                note="every Gram entry lies in (1/2)O_F")
    found, scale, examined = _search_modules(H, Fraction(-1), bound)
    for key in sorted(found):
        if not _module_doubles_integral(key, scale):
            r = tuple(from_z_coords(H, found[key]))
            f = H.field
            wit = None
            for i in range(H.rank):
                e = [f.one if kk == i else f.zero for kk in range(H.rank)]
                v = H.inner(e, r)
                if not is_in_scaled_ring(v, 2):
                    wit = v
                    break
            return ConditionVerdict(name, ConditionStatus.VIOLATED, bound, r, wit,
                                    examined, len(found))
    return ConditionVerdict(name, ConditionStatus.VERIFIED_UP_TO_BOUND, bound, None, None,
                            examined, len(found))


@functools.lru_cache(maxsize=128)
def condition_minus_two(H: HermLattice, bound: int = DEFAULT_BOUND) -> ConditionVerdict:
    """<l, r> in O_F for all l, r with <r, r> = -2 and Re<l, r> integral."""
    _check_bound(bound)
    name = "<l,r> in O_F for <r,r> = -2 and Re<l,r> in Z"
    if all(x.is_integral() for row in H.gram for x in row):
        return ConditionVerdict(name, ConditionStatus.VERIFIED_SUFFICIENT, bound_used=None,
                                note="every Gram entry lies in O_F")
    found, scale, examined = _search_modules(H, Fraction(-2), bound)
    kind = H.field.omega_kind
    for key in sorted(found):
        w = _real_integral_part_witness(key, scale, kind)
        if w is not None:
            r = tuple(from_z_coords(H, found[key]))
            wit = FieldElem(H.field, Fraction(w[0], scale), Fraction(w[1], scale))
            return ConditionVerdict(name, ConditionStatus.VIOLATED, bound, r, wit,
                                    examined, len(found))
    return ConditionVerdict(name, ConditionStatus.VERIFIED_UP_TO_BOUND, bound, None, None,
                            examined, len(found))


def pairing_module(H: HermLattice, r) -> tuple[tuple[int, int, int], int]:
    """HNF key and scale of M_r = {<l, r> : l in L}, computed directly."""
    f = H.field
    vals = []
    for i in range(H.rank):
        e = [f.one if k == i else f.zero for k in range(H.rank)]
        v = H.inner(e, r)
        vals.extend([v, f.omega * v])
    scale = _lcm_den(x for v in vals for x in (v.a, v.b))
    return hnf2([(int(v.a * scale), int(v.b * scale)) for v in vals]), scale


def recheck_counterexample(H: HermLattice, verdict: ConditionVerdict) -> bool:
    """Recompute the violation from the stored vector alone."""
    r = verdict.counterexample
    if r is None:
        return False
    key, scale = pairing_module(H, r)
    if verdict.condition.startswith("2<l,r>"):
        return H.norm(r) == -1 and not _module_doubles_integral(key, scale)
    return (H.norm(r) == -2
            and _real_integral_part_witness(key, scale, H.field.omega_kind) is not None)


def _ring_denominator(H: HermLattice) -> int:
    """Smallest N with N * g_ij in O_F for every Gram entry."""
    N = 1
    while not all(is_in_scaled_ring(x, N) for row in H.gram for x in row):
        N += 1
    return N


def real_integral_pairing_all(H: HermLattice):
    """Decide exactly whether <l, r> in O_F whenever Re<l, r> in Z, for all l, r.

    If N g_ij lies in O_F (and N is even when O_F has half-integral real
    parts), changing r by an element of N L changes every <l, r> by an
    element of O_F with integral real part. So r only matters modulo N L
    and the finitely many residues are checked one by one. Returns
    (True, None) or (False, r).
    """
    N = _ring_denominator(H)
    if H.field.omega_kind is OmegaKind.HALF_PLUS and N % 2:
        N *= 2
    kind = H.field.omega_kind
    for z in itertools.product(range(N), repeat=2 * H.rank):
        if not any(z):
            continue
        r = from_z_coords(H, z)
        key, scale = pairing_module(H, r)
        if _real_integral_part_witness(key, scale, kind) is not None:
            return False, tuple(r)
    return True, None
