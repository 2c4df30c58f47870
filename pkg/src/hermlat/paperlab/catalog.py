"""Named quadratic and Hermitian lattices.

Quadratic names are sums of root lattices with optional rescaling, e.g.
"U+U(2)+E8(-2)". Hermitian names refer to the explicit Gram matrices of
the appendix examples, entered in sqrt(d)-coordinates.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from typing import Callable, Optional

from ..hlattice import HermLattice, herm_compose
from ..qfield import field_data
from ..qlattice import QuadLattice, direct_sum, rescale


class UnknownNameError(KeyError):
    pass


# --- quadratic --------------------------------------------------------------

def _cartan_from_edges(n, edges):
    g = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return g


def root_gram(kind: str, n: int) -> list[list[int]]:
    """Gram matrix of A_n, D_n (n >= 4) or E8 in a root basis."""
    if kind == "A" and n >= 1:
        return _cartan_from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "D" and n >= 4:
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return _cartan_from_edges(n, edges)
    if kind == "E" and n == 8:
        # Bourbaki labelling: chain 1-3-4-5-6-7-8, node 2 attached to 4
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
        return _cartan_from_edges(8, edges)
    raise UnknownNameError(f"no root lattice {kind}{n}")


_TERM = re.compile(r"^\s*(U|[ADE]\d+)\s*(?:\(\s*([+-]?\d+)\s*\))?\s*$")


@functools.lru_cache(maxsize=None)
def make_named_quadratic(name: str) -> QuadLattice:
    """Build e.g. "U", "U(2)", "A2", "D4(-1)", "U+U(2)+E8(-2)"."""
    parts = []
    for term in name.split("+"):
        m = _TERM.match(term)
        if not m:
            raise UnknownNameError(f"cannot parse lattice name {name!r}")
        base, scale = m.group(1), int(m.group(2) or 1)
        if base == "U":
            g = [[0, 1], [1, 0]]
        else:
            g = root_gram(base[0], int(base[1:]))
        if scale == 0:
            raise UnknownNameError(f"zero scale in {name!r}")
        parts.append(rescale(QuadLattice(g), scale))
    return direct_sum(*parts) if len(parts) > 1 else parts[0]


# The quadratic lattices B_d the appendix lists for the rank 4 lattices A_d.
B_MINUS1 = [
    [2, 0, 0, -1, 0, -1, 1, 0],
    [0, 2, 1, 0, 1, 0, 0, 1],
    [0, 1, 2, 0, 1, 0, 0, 1],
    [-1, 0, 0, 2, 0, 1, -1, 0],
    [0, 1, 1, 0, 2, 0, 1, 0],
    [-1, 0, 0, 1, 0, 2, 0, 1],
    [1, 0, 0, -1, 1, 0, 2, 0],
    [0, 1, 1, 0, 0, 1, 0, 2],
]
B_MINUS2 = [
    [2, 0, 0, 0, 1, 2, 0, 1],
    [0, 4, 0, 0, -2, 2, -1, 0],
    [0, 0, 2, 0, 0, 1, 1, -2],
    [0, 0, 0, 4, -1, 0, 2, 2],
    [1, -2, 0, -1, 2, 0, 0, 0],
    [2, 2, 1, 0, 0, 4, 0, 0],
    [0, -1, 1, 2, 0, 0, 2, 0],
    [1, 0, -2, 2, 0, 0, 0, 4],
]

# Trace-form matrices as displayed next to each Hermitian lattice, in the
# interleaved basis (e_1, w e_1, e_2, w e_2, ...).
DISPLAYED_TRACE_GRAMS = {
    "L_UU2(d=-1)": [[0, 0, 1, 1], [0, 0, -1, 1], [1, -1, 0, 0], [1, 1, 0, 0]],
    "L_UU2(d=-2)": [[0, 0, 1, 0], [0, 0, 0, 2], [1, 0, 0, 0], [0, 2, 0, 0]],
    "L_D4(d=-1)": [[2, 0, 1, -1], [0, 2, 1, 1], [1, 1, 2, 0], [-1, 1, 0, 2]],
    "L_D4(d=-2)": [[2, 0, 1, 2], [0, 4, -2, 2], [1, -2, 2, 0], [2, 2, 0, 4]],
    "L_D6": [
        [2, 0, 1, 1, 1, 0],
        [0, 2, -1, 1, 0, 1],
        [1, -1, 2, 0, 0, 0],
        [1, 1, 0, 2, 0, 0],
        [1, 0, 0, 0, 2, 0],
        [0, 1, 0, 0, 0, 2],
    ],
    "L_D8": [
        [2, 0, 1, 1, 0, 0, 0, 0],
        [0, 2, -1, 1, 0, 0, 0, 0],
        [1, -1, 2, 0, 1, 0, 0, 0],
        [1, 1, 0, 2, 0, 1, 0, 0],
        [0, 0, 1, 0, 2, 0, 1, 0],
        [0, 0, 0, 1, 0, 2, 0, 1],
        [0, 0, 0, 0, 1, 0, 2, 0],
        [0, 0, 0, 0, 0, 1, 0, 2],
    ],
    "L_A2": [[2, 1], [1, 2]],
    "A_-1": B_MINUS1,
    "A_-2": B_MINUS2,
}


def interleave_order(m: int) -> list[int]:
    """Permutation taking (e.., w e..) coordinates to (e_1, w e_1, e_2, ...)."""
    return [k for i in range(m) for k in (i, m + i)]


def permute(L: QuadLattice, order) -> QuadLattice:
    return QuadLattice([[L.gram[i][j] for j in order] for i in order])


# --- hermitian --------------------------------------------------------------

def _herm(d: int, rows, scale=1) -> HermLattice:
    """Gram matrix from entries (p, q) meaning p + q*sqrt(d), times ``scale``."""
    f = field_data(d)
    s = Fraction(scale)
    return HermLattice(f, [[f.from_sqrt_coords(Fraction(p) * s, Fraction(q) * s)
                            for p, q in row] for row in rows])


h = Fraction(1, 2)
q4 = Fraction(1, 4)


def _l_uu(d):
    # 1/(2 sqrt d) = sqrt(d) / (2d)
    c = Fraction(1, 2 * d)
    return _herm(d, [[(0, 0), (0, c)], [(0, -c), (0, 0)]])


def _a_minus1():
    return _herm(-1, [
        [(2, 0), (0, -1), (0, -1), (1, 0)],
        [(0, 1), (2, 0), (1, 0), (0, 1)],
        [(0, 1), (1, 0), (2, 0), (1, 0)],
        [(1, 0), (0, -1), (1, 0), (2, 0)],
    ], scale=h)


def _a_minus2():
    return _herm(-2, [
        [(2, 0), (0, 0), (1, 1), (0, h)],
        [(0, 0), (2, 0), (0, h), (1, -1)],
        [(1, -1), (0, -h), (2, 0), (0, 0)],
        [(0, -h), (1, 1), (0, 0), (2, 0)],
    ], scale=h)


_BASE: dict[str, Callable[[], HermLattice]] = {
    "L_UU(d=-1)": lambda: _l_uu(-1),
    "L_UU(d=-2)": lambda: _l_uu(-2),
    "L_UU2(d=-1)": lambda: _herm(-1, [[(0, 0), (h, h)], [(h, -h), (0, 0)]]),
    "L_UU2(d=-2)": lambda: _herm(-2, [[(0, 0), (h, 0)], [(h, 0), (0, 0)]]),
    "L_D4(d=-1)": lambda: _herm(-1, [[(1, 0), (h, -h)], [(h, h), (1, 0)]]),
    "L_D4(d=-2)": lambda: _herm(-2, [[(1, 0), (h, h)], [(h, -h), (1, 0)]]),
    "L_D6": lambda: _herm(-1, [
        [(2, 0), (1, 1), (1, 0)],
        [(1, -1), (2, 0), (0, 0)],
        [(1, 0), (0, 0), (2, 0)],
    ], scale=h),
    "L_D8": lambda: _herm(-1, [
        [(2, 0), (1, 1), (0, 0), (0, 0)],
        [(1, -1), (2, 0), (1, 0), (0, 0)],
        [(0, 0), (1, 0), (2, 0), (1, 0)],
        [(0, 0), (0, 0), (1, 0), (2, 0)],
    ], scale=h),
    "L_A2": lambda: _herm(-3, [[(1, 0)]]),
    "A_-1": _a_minus1,
    "A_-2": _a_minus2,
}

# Example compositions: (part, scale) pairs. Ex6-Ex9 negate the definite
# summand so that the Hermitian signature is (1, n) and L_Q has signature
# (2, 2n) as the theorems require.
EXAMPLES: dict[str, list[tuple[str, int]]] = {
    "Ex1": [("L_UU(d=-1)", 1), ("A_-1", -1)],
    "Ex2": [("L_UU(d=-1)", 1), ("L_D8", -1)],
    "Ex3": [("L_UU(d=-1)", 1), ("L_D4(d=-1)", -1), ("L_D4(d=-1)", -1)],
    "Ex4": [("L_UU2(d=-2)", 1), ("L_D4(d=-2)", -1), ("L_D4(d=-2)", -1)],
    "Ex5": [("L_UU2(d=-1)", 1), ("A_-1", -2)],
    "Ex6": [("L_UU(d=-1)", 1), ("L_D6", -1)],
    "Ex7(d=-1)": [("L_UU(d=-1)", 2), ("L_D4(d=-1)", -1)],
    "Ex7(d=-2)": [("L_UU(d=-2)", 2), ("L_D4(d=-2)", -1)],
    "Ex8": [("L_UU(d=-1)", 1), ("L_D4(d=-1)", -1)],
    "Ex9": [("L_UU2(d=-2)", 1), ("L_D4(d=-2)", -1)],
}

# Quadratic class each example's trace lattice is claimed to be isometric to,
# and the theorem it is meant to satisfy.
EXAMPLE_CLAIMS: dict[str, tuple[str, str]] = {
    "Ex1": ("U+U+E8(-1)", "T5.1"),
    "Ex2": ("U+U+D8(-1)", "T5.1"),
    "Ex3": ("U+U+D4(-1)+D4(-1)", "T5.1"),
    "Ex4": ("U+U(2)+D4(-1)+D4(-1)", "T5.1"),
    "Ex5": ("U+U(2)+E8(-2)", "T5.2"),
    "Ex6": ("U+U+D6(-1)", "T5.3"),
    "Ex7(d=-1)": ("U(2)+U(2)+D4(-1)", "T5.4"),
    "Ex7(d=-2)": ("U(2)+U(2)+D4(-1)", "T5.4"),
    "Ex8": ("U+U+D4(-1)", "T5.4"),
    "Ex9": ("U+U(2)+D4(-1)", "T5.4"),
}

# Hermitian building blocks and the class of their trace lattice.
BASE_CLAIMS: dict[str, str] = {
    "L_UU(d=-1)": "U+U",
    "L_UU(d=-2)": "U+U",
    "L_UU2(d=-1)": "U+U(2)",
    "L_UU2(d=-2)": "U+U(2)",
    "L_D4(d=-1)": "D4",
    "L_D4(d=-2)": "D4",
    "L_D6": "D6",
    "L_D8": "D8",
    "L_A2": "A2",
    "A_-1": "E8",
    "A_-2": "E8",
}

# Pairing claims made for the building blocks, for all l, r in L:
# ("scaled", s) means s<l,r> in O_F; ("real_integral", None) means
# <l,r> in O_F whenever Re<l,r> is an integer.
DIVISIBILITY_CLAIMS: dict[str, tuple[str, Optional[int]]] = {
    "L_UU(d=-1)": ("scaled", 2),
    "L_UU2(d=-1)": ("real_integral", None),
    "L_UU2(d=-2)": ("scaled", 2),
    "L_D4(d=-1)": ("scaled", 2),
    "L_D4(d=-2)": ("scaled", 2),
    "L_D6": ("scaled", 2),
    "L_D8": ("scaled", 2),
    "L_A2": ("scaled", 12),
}


def hermitian_names() -> list[str]:
    return list(_BASE) + list(EXAMPLES)


@functools.lru_cache(maxsize=None)
def make_named_hermitian(name: str) -> HermLattice:
    if name in _BASE:
        return _BASE[name]()
    if name in EXAMPLES:
        return herm_compose([(make_named_hermitian(p), s) for p, s in EXAMPLES[name]])
    if name == "Ex7":
        return make_named_hermitian("Ex7(d=-1)")
    raise UnknownNameError(f"unknown Hermitian lattice {name!r}")


QUADRATIC_NAMES = ["U", "U(2)", "A2", "D4", "D6", "D8", "E8", "B_-1", "B_-2"]


def make_quadratic(name: str) -> QuadLattice:
    """Named quadratic lattice, including the listed matrices B_-1, B_-2."""
    if name == "B_-1":
        return QuadLattice(B_MINUS1)
    if name == "B_-2":
        return QuadLattice(B_MINUS2)
    return make_named_quadratic(name)


def _slug(name: str) -> str:
    s = name.lower().replace("(d=-", "-dm").replace("(-", "m").replace("(", "").replace(")", "")
    return s.replace("+", "-").replace("_", "-").replace("--", "-minus")


# Shipped lattice files: file name -> ("hermitian" | "quadratic", registry name).
SHIPPED_FILES: dict[str, tuple[str, str]] = {
    **{f"{_slug(n)}.json": ("hermitian", n) for n in list(_BASE) + list(EXAMPLES)},
    **{f"{_slug(n)}.json": ("quadratic", n) for n in
       ["E8", "D4", "D6", "D8", "A2", "U+U", "U+U(2)"]},
    "b-minus1.json": ("quadratic", "B_-1"),
    "b-minus2.json": ("quadratic", "B_-2"),
    "u-u2-e8m2.json": ("quadratic", "U+U(2)+E8(-2)"),
    "u-u-e8m2.json": ("quadratic", "U+U+E8(-2)"),
    "u-u2-d4m1-d4m1.json": ("quadratic", "U+U(2)+D4(-1)+D4(-1)"),
    "u-u-d4m1-d4m1.json": ("quadratic", "U+U+D4(-1)+D4(-1)"),
    "u-u-d8m1.json": ("quadratic", "U+U+D8(-1)"),
    "u-u-e8m1.json": ("quadratic", "U+U+E8(-1)"),
    "u-u-d6m1.json": ("quadratic", "U+U+D6(-1)"),
}


def make_shipped(file_name: str):
    kind, name = SHIPPED_FILES[file_name]
    return make_named_hermitian(name) if kind == "hermitian" else make_quadratic(name)
