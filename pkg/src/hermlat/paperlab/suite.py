"""End-to-end check of every computational claim in the registry.

Each item is independent; a failing or crashing item becomes a FAIL entry
with its evidence instead of aborting the run.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Union

from ..conditions import (ConditionStatus, condition_minus_one, condition_minus_two,
                          real_integral_pairing_all)
from ..hlattice import HermLattice, pairing_decomposition, to_z_coords, trace_lattice
from ..isometry import is_isometric_definite, is_isometric_indef_2elem
from ..qfield import FieldElem, is_in_scaled_ring
from ..qlattice import QuadLattice, invariant_profile
from . import catalog
from .forms import CLASSES_2_10, SIG_2_6, SIG_2_10, weight_formula
from .verdict import theorem_verdict

# Weights as printed in the two tables, keyed by ell.
TABLE_2_10 = {10: 4, 8: 12, 6: 28, 4: 60, 2: 124, 0: 252}
TABLE_2_6 = {6: 24, 4: 40, 2: 72}
# (ell, delta) column of the classification table.
INTRO_TABLE = {key: (ell, 0) for ell, key in CLASSES_2_10.items()}

Lattice = Union[QuadLattice, HermLattice]


@dataclass(frozen=True)
class SuiteItem:
    id: str
    claim: str
    passed: bool
    evidence: str

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        return {"id": self.id, "claim": self.claim, "status": self.status,
                "evidence": self.evidence}


@dataclass(frozen=True)
class SuiteReport:
    items: tuple[SuiteItem, ...]
    bound: int

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items)

    def to_json(self) -> dict:
        return {"items": [it.to_json() for it in self.items], "pass": self.passed}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def render_text(self) -> str:
        lines = [f"{it.status} {it.id} {it.claim}: {it.evidence}" for it in self.items]
        failed = sum(not it.passed for it in self.items)
        lines.append("ALL CLAIMS VERIFIED" if not failed else
                     f"{failed} OF {len(self.items)} CLAIMS FAILED")
        return "\n".join(lines)


class _Registry:
    """Name lookup with optional replacement lattices (used to inject faults)."""

    def __init__(self, overrides: Optional[dict[str, Lattice]] = None):
        self.overrides = dict(overrides or {})

    def quad(self, name: str) -> QuadLattice:
        if name in self.overrides:
            L = self.overrides[name]
            return L if isinstance(L, QuadLattice) else QuadLattice(L)
        return catalog.make_quadratic(name)

    def herm(self, name: str) -> HermLattice:
        if name in self.overrides:
            return self.overrides[name]
        return catalog.make_named_hermitian(name)


def _class_match(LQ: QuadLattice, Q: QuadLattice) -> tuple[bool, str]:
    if LQ.is_definite:
        w = is_isometric_definite(LQ, Q)
        if w is None:
            return False, "no isometry found"
        return w.verify(LQ, Q), f"witness {[list(r) for r in w.matrix]}"
    ok = is_isometric_indef_2elem(LQ, Q)
    return ok, (f"Nikulin triples {invariant_profile(LQ).nikulin_triple} "
                f"vs {invariant_profile(Q).nikulin_triple}")


def _items(reg: _Registry, bound: int, samples: int):
    """Yield (id, claim, thunk) with thunk() -> (passed, evidence)."""
    # (i) classification table
    for ell, key in sorted(CLASSES_2_10.items(), reverse=True):
        def f(key=key):
            p = invariant_profile(reg.quad(key))
            got = (p.ell, p.delta)
            return (p.even and p.two_elementary and got == INTRO_TABLE[key],
                    f"signature {p.signature}, (ell, delta) = {got}")
        yield f"i.{ell:02d}", f"{key} has (ell, delta) = {INTRO_TABLE[key]}", f

    # (ii) weight tables
    for ell, w in sorted(TABLE_2_10.items()):
        yield (f"ii.2_10.{ell:02d}", f"(2,10) ell={ell} weight {w}",
               lambda ell=ell, w=w: (weight_formula(SIG_2_10, ell) == w,
                                     f"formula gives {weight_formula(SIG_2_10, ell)}"))
    for ell, w in sorted(TABLE_2_6.items()):
        yield (f"ii.2_6.{ell:02d}", f"(2,6) ell={ell} weight {w}",
               lambda ell=ell, w=w: (weight_formula(SIG_2_6, ell) == w,
                                     f"formula gives {weight_formula(SIG_2_6, ell)}"))

    # (iii) isometries
    for b in ("B_-1", "B_-2"):
        def f(b=b):
            return _class_match(reg.quad(b), reg.quad("E8"))
        yield f"iii.{b}~E8", f"{b} is isometric to E8", f
    for name, cls in catalog.BASE_CLAIMS.items():
        def f(name=name, cls=cls):
            LQ = trace_lattice(reg.herm(name))
            target = cls
            if name in ("A_-1", "A_-2"):
                target = "B_" + name[2:]
            return _class_match(LQ, reg.quad(target))
        target = "B_" + name[2:] if name.startswith("A_") else cls
        yield f"iii.trace.{name}", f"trace lattice of {name} is isometric to {target}", f
    for name, disp in catalog.DISPLAYED_TRACE_GRAMS.items():
        def f(name=name, disp=disp):
            LQ = trace_lattice(reg.herm(name))
            P = catalog.permute(LQ, catalog.interleave_order(LQ.rank // 2))
            return (P.gram == QuadLattice(disp).gram,
                    "equal in the basis (e_1, w e_1, e_2, ...)")
        yield f"iii.display.{name}", f"trace Gram matrix of {name} as displayed", f
    for name, (cls, _) in catalog.EXAMPLE_CLAIMS.items():
        def f(name=name, cls=cls):
            return _class_match(trace_lattice(reg.herm(name)), reg.quad(cls))
        yield f"iii.example.{name}", f"L_Q of {name} is isometric to {cls}", f

    # (iv) pairing claims
    for name, (kind, s) in catalog.DIVISIBILITY_CLAIMS.items():
        if kind == "scaled":
            def f(name=name, s=s):
                H = reg.herm(name)
                if s == 2:
                    v = condition_minus_one(H, bound)
                    return (v.status is ConditionStatus.VERIFIED_SUFFICIENT,
                            f"{v.status.value}: {v.note}")
                ok = all(is_in_scaled_ring(x, s) for row in H.gram for x in row)
                return ok, f"every Gram entry in (1/{s})O_F: {ok}"
            claim = f"{s}<l,r> in O_F for all l, r in {name}"
        else:
            def f(name=name):
                ok, r = real_integral_pairing_all(reg.herm(name))
                return ok, ("checked every residue r mod N L" if ok else f"fails at r = {r}")
            claim = f"<l,r> in O_F whenever Re<l,r> in Z, for all l, r in {name}"
        yield f"iv.{name}", claim, f

    def ex5():
        v = condition_minus_two(reg.herm("Ex5"), bound)
        return v.status.passed, (f"{v.status.value}, bound {v.bound_used}, "
                                 f"{v.checked_vectors} vectors, {v.distinct_modules} modules")
    yield "iv.Ex5.minus2", "Ex5 satisfies the (-2)-vector condition", ex5

    # (v) verdicts
    for name, (_, th) in catalog.EXAMPLE_CLAIMS.items():
        def f(name=name, th=th):
            v = theorem_verdict(reg.herm(name), bound)
            ok = v.uniruled and v.theorem_id == th
            if name == "Ex1":
                ok = ok and v.fano
            return ok, (f"theorem {v.theorem_id}, n={v.n}, a={v.a}, k={v.k}, "
                        f"uniruled={v.uniruled}, fano={v.fano}, bound {bound}")
        claim = f"{name} satisfies {th} and is uniruled" + (" and Fano" if name == "Ex1" else "")
        yield f"v.{name}", claim, f

    # (vi) (lam, z) = 2 Re<lam, z> on random vectors
    def pairing():
        rng = random.Random(20240101)
        count = 0
        for name in catalog.hermitian_names():
            H = reg.herm(name)
            LQ = trace_lattice(H)
            f_ = H.field
            for _ in range(samples):
                lam = [FieldElem(f_, rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(H.rank)]
                z = [FieldElem(f_, rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(H.rank)]
                re, _ = pairing_decomposition(H, lam, z)
                if LQ.inner(to_z_coords(H, lam), to_z_coords(H, z)) != 2 * re:
                    return False, f"mismatch on {name}"
                count += 1
        return True, f"{count} random pairs"
    yield "vi.pairing", "trace pairing equals twice the real part of <,>", pairing


def paper_suite(bound: int = 3, overrides: Optional[dict[str, Lattice]] = None,
                samples: int = 20) -> SuiteReport:
    reg = _Registry(overrides)
    items = []
    for id_, claim, thunk in _items(reg, bound, samples):
        try:
            ok, ev = thunk()
        except Exception as e:  # failures are report entries
            ok, ev = False, f"{type(e).__name__}: {e}"
        items.append(SuiteItem(id_, claim, bool(ok), ev))
    items.sort(key=lambda it: it.id)
    return SuiteReport(tuple(items), bound)
