"""Tour of the exact lattice layer.

Build lattices from standard labels, take orthogonal complements and
saturations, and read off discriminant forms. Everything is integer or
Fraction arithmetic; nothing here floats.
"""
from cf_lattice import (
    direct_sum,
    discriminant_data,
    genus_invariants,
    orthogonal_complement,
    saturation,
    saturation_index,
    span_sublattice,
    standard_lattice,
)

# Standard building blocks carry their conventional Gram matrices.
a2 = standard_lattice("A2")
u = standard_lattice("U")
e8 = standard_lattice("E8")
print("A2 Gram:", a2.gram)
print("U signature:", u.signature())
print("E8 det:", e8.det(), "| even:", e8.is_even())

# The rank-23 odd unimodular lattice with a square-3 vector whose
# complement is even: all 23 coordinates of h are odd, which forces parity.
lam = standard_lattice("I_{21,2}")
h = tuple([1] * 21 + [3, 3])
print("\nh.h =", lam.inner(h, h))

core = orthogonal_complement(lam, span_sublattice(lam, [h]))
core_lat = core.lattice("complement of h")
inv = genus_invariants(core_lat)
print("complement rank:", inv.rank)
print("complement signature:", inv.signature)
print("complement parity:", "even" if inv.even else "odd")
print("complement discriminant:", inv.disc.invariant_factors, "q =", inv.disc.q)

# The discriminant form of the complement equals that of A2 (q = 2/3 on Z/3)
# and is opposite to E6's (q = 4/3); that opposition is what makes the
# order-3 gluing with E6 possible later.
print("\nA2 disc q:", discriminant_data(a2).form.q)
print("E6 disc q:", discriminant_data(standard_lattice("E6")).form.q)

# Saturation recovers primitive closures; the index measures the defect.
sub = span_sublattice(u, [(2, 0)])
closed = saturation(u, sub)
print("\nsaturation of span(2e1) in U:", closed.basis,
      "| index:", saturation_index(u, sub))

# Inside E7, an embedded E6 leaves a norm-6 line as its complement; the two
# together sit at index 3 below E7.
e7 = standard_lattice("E7")
e6_rows = tuple(tuple(1 if j == i else 0 for j in range(7)) for i in range(6))
line = orthogonal_complement(e7, span_sublattice(e7, e6_rows))
print("\ncomplement of E6 in E7:", line.induced_gram())
both = span_sublattice(e7, list(e6_rows) + list(line.basis))
print("index of E6 + line in its saturation:", saturation_index(e7, both))

# Direct sums just add: signatures, ranks, determinants multiply.
big = direct_sum(e8, e8, a2)
print("\nE8 + E8 + A2: rank", big.rank, "det", big.det())
