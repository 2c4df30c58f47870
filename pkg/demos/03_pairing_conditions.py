"""
The pairing conditions on short vectors
=======================================

The theorems need 2<l, r> in O_F for every l and every r of norm -1 (or a
variant for norm -2 vectors). If every Gram entry already lies in
(1/2) O_F this is automatic; otherwise vectors in a coordinate box are
searched and each one is decided exactly through the module it generates.
"""

from fractions import Fraction

from hermlat.conditions import (condition_minus_one, condition_minus_two,
                                real_integral_pairing_all, recheck_counterexample)
from hermlat.hlattice import HermLattice
from hermlat.paperlab.catalog import make_named_hermitian
from hermlat.qfield import field_data

# A lattice where the sufficient criterion applies
v = condition_minus_one(make_named_hermitian("L_D4(d=-1)"))
print(v.status.value, "-", v.note)

# A small lattice with an entry 1/4 and a basis vector of norm -1
f = field_data(-1)
q = Fraction(1, 4)
H = HermLattice(f, [[f(-1), f(q)], [f(q), f(1)]])
v = condition_minus_one(H, bound=1)
print(v.status.value, "counterexample", v.counterexample, "pairing", v.witness)
print("recheck:", recheck_counterexample(H, v))

# The norm -2 condition for a lattice of signature (1,5). Only a handful of
# distinct modules show up among the hundreds of thousands of box vectors.
ex5 = make_named_hermitian("Ex5")
for bound in (1, 2, 3):
    v = condition_minus_two(ex5, bound)
    print(bound, v.status.value, v.checked_vectors, "vectors,", v.distinct_modules, "modules")

# For the rank 2 summand the statement can be decided for every r at once,
# since r only matters modulo a finite index sublattice.
print(real_integral_pairing_all(make_named_hermitian("L_UU2(d=-1)")))
