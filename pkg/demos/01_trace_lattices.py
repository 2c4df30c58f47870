"""
Hermitian lattices and their trace lattices
===========================================

A Hermitian lattice over the ring of integers of Q(sqrt(d)) becomes an
integral quadratic lattice of twice the rank once we forget the O_F
structure and take the trace of the form.
"""

from hermlat.hlattice import herm_signature, trace_lattice
from hermlat.isometry import is_isometric_definite
from hermlat.paperlab.catalog import interleave_order, make_named_hermitian, make_quadratic, permute
from hermlat.qlattice import invariant_profile

# The hyperbolic lattice over Z[i]: rank 2, signature (1,1)
H = make_named_hermitian("L_UU(d=-1)")
print(H)
print("hermitian signature", herm_signature(H))

# Its trace lattice has rank 4 and signature (2,2). The basis is
# (e_1, e_2, w e_1, w e_2) with w = sqrt(-1).
LQ = trace_lattice(H)
for row in LQ.int_gram():
    print(row)
print("Nikulin triple", invariant_profile(LQ).nikulin_triple)   # U + U

# The same Gram matrix in the interleaved basis (e_1, w e_1, e_2, w e_2)
P = permute(LQ, interleave_order(H.rank))
for row in P.int_gram():
    print(row)

# The 4x4 matrix A_-1 over Z[i] is positive definite; its trace lattice is
# unimodular, even, of rank 8, so it has to be E8. The backtracking search
# returns an explicit witness T with T^t B T = trace Gram.
A = make_named_hermitian("A_-1")
TA = trace_lattice(A)
B = make_quadratic("B_-1")
w = is_isometric_definite(TA, B)
print("isometric to B_-1:", w is not None, "verified:", w.verify(TA, B))
print("witness rows:")
for row in w.matrix:
    print(" ", list(row))
