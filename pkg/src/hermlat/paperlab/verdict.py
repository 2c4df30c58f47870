"""Match a Hermitian lattice against the four uniruledness theorems.

Condition (1) is a statement about the isometry class of L_Q, decided by
its Nikulin triple. Condition (2) is the pairing condition on (-1)-vectors
(or (-2)-vectors for the Phi_124 case), decided by
:mod:`hermlat.conditions`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..conditions import (DEFAULT_BOUND, ConditionVerdict, condition_minus_one,
                          condition_minus_two)
from ..hlattice import HermLattice, TraceIntegralityError, herm_signature, trace_lattice
from ..qfield import multiplicity_a
from ..qlattice import invariant_profile
from .forms import (CLASS_D6, CLASS_PHI124, CLASSES_2_6, SIG_2_6, SIG_2_10,
                    ReflectiveFormEntry, _triple, form_lookup, uniruledness_check,
                    weight_formula)

THEOREMS = ("T5.1", "T5.2", "T5.3", "T5.4")
FANO_CLASS = "U+U+E8(-1)"


@dataclass(frozen=True)
class HypothesisResult:
    label: str
    passed: bool
    evidence: str

    def to_json(self) -> dict:
        return {"label": self.label, "passed": self.passed, "evidence": self.evidence}


@dataclass
class TheoremVerdict:
    theorem_id: Optional[str]
    hypothesis_results: list[HypothesisResult]
    n: Optional[int]
    a: int
    k: Optional[int]
    uniruled: bool
    fano: bool
    trail: list[str] = field(default_factory=list)
    bound: int = DEFAULT_BOUND
    condition_variant: Optional[str] = None
    condition: Optional[ConditionVerdict] = None

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "hypothesis_results": [h.to_json() for h in self.hypothesis_results],
            "n": self.n,
            "a": self.a,
            "k": self.k,
            "uniruled": self.uniruled,
            "fano": self.fano,
            "bound": self.bound,
            "condition_variant": self.condition_variant,
            "condition": None if self.condition is None else self.condition.to_json(),
            "trail": list(self.trail),
        }

    def summary(self) -> tuple:
        """The fields that must agree between isometric inputs."""
        return (self.theorem_id, tuple((h.label, h.passed) for h in self.hypothesis_results),
                self.n, self.a, self.k, self.uniruled, self.fano)


def _t51_ok(prof, d: int, strict: bool) -> bool:
    if not (prof.signature == (2, 10) and prof.even and prof.two_elementary
            and prof.delta == 0 and prof.ell <= 8):
        return False
    tight = (-1, -3) if strict else (-3,)
    return not (d in tight and prof.ell > 6)


def theorem_verdict(H: HermLattice, bound: int = DEFAULT_BOUND) -> TheoremVerdict:
    """Verdict for H; failures are reported in the verdict, never raised."""
    d = H.field.d
    a = multiplicity_a(H.field)
    hyps: list[HypothesisResult] = []
    trail = [f"field Q(sqrt({d})), |O_F^x| = {2 * a}, a = {a}", f"bound = {bound}"]

    def give_up(theorem=None, n=None):
        return TheoremVerdict(theorem, hyps, n, a, None, False, False, trail, bound)

    p, q = herm_signature(H)
    n = q
    sig_ok = p == 1 and q in (3, 4, 5)
    hyps.append(HypothesisResult("signature (1,n), n in {3,4,5}", sig_ok, f"signature ({p},{q})"))
    if not sig_ok:
        trail.append("no theorem applies to this signature")
        return give_up(n=None)

    try:
        LQ = trace_lattice(H)
    except TraceIntegralityError as e:
        hyps.append(HypothesisResult("Tr<x,x> integral", False, str(e)))
        return give_up(n=n)
    prof = invariant_profile(LQ)
    trip = prof.nikulin_triple if prof.even else None
    trail.append(f"L_Q: signature {prof.signature}, even={prof.even}, "
                 f"2-elementary={prof.two_elementary}, ell={prof.ell}, delta={prof.delta}")

    theorem = None
    variant = None
    label = ""
    if n == 5:
        if _t51_ok(prof, d, strict=True):
            theorem, label = "T5.1", "L_Q even 2-elementary, delta=0, ell<=8 (ell<=6 if d in {-1,-3})"
            variant = "intro"
        elif trip == _triple(CLASS_PHI124):
            theorem, label = "T5.2", f"L_Q ~ {CLASS_PHI124}"
        if _t51_ok(prof, d, strict=True) != _t51_ok(prof, d, strict=False):
            trail.append(f"ell={prof.ell}, d={d}: the ell<=6 restriction decides T5.1; "
                         "applied for d in {-1,-3} (restriction for d=-3 only would accept)")
            variant = "intro"
        elif theorem == "T5.1":
            trail.append("T5.1 condition (1): stricter and looser ell bounds agree")
    elif n == 4:
        if trip == _triple(CLASS_D6):
            theorem, label = "T5.3", f"L_Q ~ {CLASS_D6}"
    elif n == 3:
        for ell, key in sorted(CLASSES_2_6.items()):
            if trip == _triple(key):
                theorem, label = "T5.4", f"L_Q ~ {key}"
                break

    if theorem is None:
        hyps.append(HypothesisResult("condition (1): L_Q in a listed class", False,
                                     f"Nikulin triple {trip}"))
        trail.append("no theorem's condition (1) matches")
        return give_up(n=n)
    hyps.append(HypothesisResult(f"condition (1): {label}", True, f"Nikulin triple {trip}"))
    trail.append(f"{theorem} condition (1) holds")

    if theorem == "T5.2":
        cond = condition_minus_two(H, bound)
        clabel = "condition (2): <l,r> in O_F whenever Re<l,r> in Z, <r,r> = -2"
    else:
        cond = condition_minus_one(H, bound)
        clabel = "condition (2): 2<l,r> in O_F for <r,r> = -1"
    hyps.append(HypothesisResult(clabel, cond.status.passed,
                                 f"{cond.status.value}" + (f" ({cond.note})" if cond.note else "")))
    trail.append(f"{clabel}: {cond.status.value}, bound {cond.bound_used}")

    if theorem == "T5.1":
        k = weight_formula(SIG_2_10, prof.ell)
    elif theorem == "T5.4":
        k = weight_formula(SIG_2_6, prof.ell)
    else:
        entry = form_lookup(prof)
        k = entry.weight if isinstance(entry, ReflectiveFormEntry) else None
    trail.append(f"reflective form of weight k = {k}")

    all_ok = all(h.passed for h in hyps)
    uniruled = bool(all_ok and k is not None and uniruledness_check(n, a, k))
    trail.append(f"k > a(n+1): {k} > {a * (n + 1)} -> {uniruled}")
    fano = bool(uniruled and n == 5 and trip == _triple(FANO_CLASS) and cond.status.passed)
    if fano:
        trail.append(f"L_Q ~ {FANO_CLASS}: Fano")
    return TheoremVerdict(theorem, hyps, n, a, k, uniruled, fano, trail, bound,
                          variant, cond)
