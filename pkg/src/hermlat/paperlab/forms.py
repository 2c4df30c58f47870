"""Reflective modular forms on the orthogonal side, keyed by the isometry
class of L_Q, and the numerical uniruledness criterion."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from ..qlattice import InvariantProfile, invariant_profile
from .catalog import make_named_quadratic


class SignatureTag(enum.Enum):
    SIG_2_10 = (2, 10)
    SIG_2_6 = (2, 6)


SIG_2_10 = SignatureTag.SIG_2_10
SIG_2_6 = SignatureTag.SIG_2_6


class DivisorKind(enum.Enum):
    DELTA_PRIME_MINUS2 = "delta_prime_minus2"     # zeros along r^perp, (r,r) = -2, r/2 not in dual
    MINUS4_DOUBLE_DUAL = "minus4_double_dual"     # zeros along r^perp, (r,r) = -4, r/2 in dual


def weight_formula(tag: SignatureTag, ell: int) -> int:
    """Weight of the reflective form of an even 2-elementary lattice with delta = 0."""
    if not isinstance(ell, int) or ell % 2:
        raise ValueError(f"ell must be an even integer, got {ell!r}")
    if tag is SIG_2_10:
        if not 0 <= ell <= 10:
            raise ValueError(f"ell={ell} out of range 0..10 for signature (2,10)")
        return 2 ** ((16 - ell) // 2) - 4
    if tag is SIG_2_6:
        if not 2 <= ell <= 6:
            raise ValueError(f"ell={ell} out of range 2..6 for signature (2,6)")
        return 8 * (2 ** ((8 - ell) // 2) + 1)
    raise ValueError(f"unknown signature tag {tag!r}")


@dataclass(frozen=True)
class ReflectiveFormEntry:
    class_key: str
    weight: int
    divisor_kind: DivisorKind
    strongly_reflective: bool
    source: str

    def to_json(self) -> dict:
        return {"class_key": self.class_key, "weight": self.weight,
                "divisor_kind": self.divisor_kind.value,
                "strongly_reflective": self.strongly_reflective, "source": self.source}


@dataclass(frozen=True)
class InadmissibleForm:
    """delta = 1, signature (2,10): a form exists but its multiplicities are g,
    so the weight/multiplicity ratio is only 4."""

    ell: int
    g: int
    weight: int
    multiplicity: int
    stated_threshold: int = 5      # threshold quoted alongside this family
    criterion_threshold: int = 6   # a(n+1) with a = 1, n = 5

    @property
    def ratio(self) -> int:
        return self.weight // self.multiplicity

    @property
    def thresholds_disagree(self) -> bool:
        return self.stated_threshold != self.criterion_threshold

    def to_json(self) -> dict:
        return {"ell": self.ell, "g": self.g, "weight": self.weight,
                "multiplicity": self.multiplicity, "ratio": self.ratio,
                "stated_threshold": self.stated_threshold,
                "criterion_threshold": self.criterion_threshold,
                "thresholds_disagree": self.thresholds_disagree}


# (2,10) delta = 0 classes by ell, as they appear in the classification table.
CLASSES_2_10 = {
    10: "U+U(2)+E8(-2)",
    8: "U+U+E8(-2)",
    6: "U+U(2)+D4(-1)+D4(-1)",
    4: "U+U+D4(-1)+D4(-1)",
    2: "U+U+D8(-1)",
    0: "U+U+E8(-1)",
}
CLASS_D6 = "U+U+D6(-1)"
CLASS_PHI124 = "U+U(2)+E8(-2)"
CLASSES_2_6 = {2: "U+U+D4(-1)", 4: "U+U(2)+D4(-1)", 6: "U(2)+U(2)+D4(-1)"}


def _triple(name: str):
    return invariant_profile(make_named_quadratic(name)).nikulin_triple


def _registry() -> list[tuple[tuple, ReflectiveFormEntry]]:
    out = []
    for ell, key in sorted(CLASSES_2_10.items()):
        out.append((_triple(key), ReflectiveFormEntry(
            key, weight_formula(SIG_2_10, ell), DivisorKind.DELTA_PRIME_MINUS2, True, "Psi_M (2,10)")))
    out.append((_triple(CLASS_D6), ReflectiveFormEntry(
        CLASS_D6, 102, DivisorKind.DELTA_PRIME_MINUS2, True, "Psi_M (2,8)")))
    out.append((_triple(CLASS_PHI124), ReflectiveFormEntry(
        CLASS_PHI124, 124, DivisorKind.MINUS4_DOUBLE_DUAL, True, "Phi_124")))
    for ell, key in sorted(CLASSES_2_6.items()):
        out.append((_triple(key), ReflectiveFormEntry(
            key, weight_formula(SIG_2_6, ell), DivisorKind.DELTA_PRIME_MINUS2, True, "Psi_M (2,6)")))
    return out


_REGISTRY: Optional[list] = None


def registry() -> list[tuple[tuple, ReflectiveFormEntry]]:
    """(Nikulin triple, entry) pairs, built on first use."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _registry()
    return _REGISTRY


def entries_for(profile: InvariantProfile) -> list[ReflectiveFormEntry]:
    t = profile.nikulin_triple if profile.even else None
    return [e for key, e in registry() if t is not None and key == t]


def form_lookup(profile: Optional[InvariantProfile], class_key: Optional[str] = None
                ) -> Union[ReflectiveFormEntry, InadmissibleForm, None]:
    """Reflective form attached to the class of ``profile`` (or to ``class_key``).

    When several forms live on the same class (U+U(2)+E8(-2) carries both
    Psi_M of weight 4 and Phi_124) the one of highest weight is returned.
    """
    if class_key is not None:
        profile = invariant_profile(make_named_quadratic(class_key))
    if profile is None:
        return None
    found = entries_for(profile)
    if found:
        return max(found, key=lambda e: e.weight)
    if (profile.even and profile.two_elementary and profile.delta == 1
            and profile.signature == (2, 10)):
        g = 2 ** ((12 - profile.ell) // 2) + 1
        return InadmissibleForm(ell=profile.ell, g=g, weight=4 * g, multiplicity=g)
    return None


def uniruledness_check(n: int, a: int, k: int) -> bool:
    """k > a(n+1): a reflective form of weight k and multiplicities <= a."""
    if n <= 1:
        raise ValueError(f"criterion needs n > 1, got n={n}")
    if a < 1 or k < 1:
        raise ValueError("a and k must be positive")
    return k > a * (n + 1)
