"""
Uniruledness verdicts
=====================

theorem_verdict matches a Hermitian lattice of signature (1,n) against the
four theorems: the class of its trace lattice, the pairing condition, and
the numerical test k > a(n+1), where a is half the number of units.
"""

from hermlat.hlattice import herm_compose
from hermlat.paperlab.catalog import EXAMPLE_CLAIMS, make_named_hermitian
from hermlat.paperlab.verdict import theorem_verdict

print(f"{'name':10s} theorem  n  a    k  uniruled  fano")
for name in EXAMPLE_CLAIMS:
    v = theorem_verdict(make_named_hermitian(name))
    print(f"{name:10s} {v.theorem_id:7s} {v.n:2d} {v.a:2d} {v.k:4d}  {str(v.uniruled):8s}  {v.fano}")

# The full trail for the Fano case
v = theorem_verdict(make_named_hermitian("Ex1"))
for line in v.trail:
    print("  ", line)

# Over Z[i] the ell <= 8 lattice U+U+E8(-2) is rejected: the criterion needs
# ell <= 6 there. The verdict says so instead of failing silently.
H = herm_compose([(make_named_hermitian("L_UU(d=-1)"), 1), (make_named_hermitian("A_-1"), -2)])
v = theorem_verdict(H)
print(v.theorem_id, v.uniruled)
for line in v.trail:
    print("  ", line)
