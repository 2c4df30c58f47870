"""
Discriminant invariants and reflective forms
============================================

Even 2-elementary lattices are classified (in the indefinite case) by the
signature, the rank ell of the discriminant group and the parity delta.
Each class in the table below carries a reflective modular form whose
weight is given by a closed formula in ell.
"""

from hermlat.paperlab.catalog import make_named_quadratic
from hermlat.paperlab.forms import (CLASS_D6, CLASS_PHI124, CLASSES_2_6, CLASSES_2_10,
                                    SIG_2_6, form_lookup, weight_formula)
from hermlat.qlattice import invariant_profile

print(f"{'lattice':26s} {'sig':8s} ell delta weight")
for ell, name in sorted(CLASSES_2_10.items()):
    p = invariant_profile(make_named_quadratic(name))
    entry = form_lookup(p)
    print(f"{name:26s} {str(p.signature):8s} {p.ell:3d} {p.delta:5d} {entry.weight:6d}")

# U+U(2)+E8(-2) carries two forms; lookup returns the heavier one
phi = form_lookup(None, CLASS_PHI124)
print(phi.class_key, phi.weight, phi.divisor_kind.value)
print(CLASS_D6, form_lookup(None, CLASS_D6).weight)

# signature (2,6)
for ell, name in sorted(CLASSES_2_6.items()):
    print(name, weight_formula(SIG_2_6, ell))

# The discriminant group itself comes from the Smith normal form of the Gram
# matrix. For D6 it is (Z/2)^2 and the generators have odd norm, so delta = 1.
p = invariant_profile(make_named_quadratic("D6"))
print("D6:", p.elementary_divisors, "ell", p.ell, "delta", p.delta)

# A delta = 1 lattice of signature (2,10) only has a form whose
# weight/multiplicity ratio is 4, too small for the uniruledness criterion.
rec = form_lookup(invariant_profile(make_named_quadratic("U+U(2)+" + "+".join(["A1(-1)"] * 8))))
print(rec)
