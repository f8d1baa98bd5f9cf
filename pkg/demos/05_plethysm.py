"""Characters, symmetric cubes, and the two Kirwan normal slices.

Characters live as Weyl-invariant Laurent polynomials; symmetric powers go
through the exact power-sum recurrence and decompositions by greedy
highest-weight peeling.
"""
from cf_lattice.plethysm import (
    SL2,
    SL3,
    decompose,
    irreducible_character,
    normal_slice_chi,
    normal_slice_omega,
    parse_rep_expression,
    standard_character,
    sym_power,
    tensor,
    trivial_character,
)

v2 = standard_character(SL2)
print("SL2 V:", v2.as_dict())
print("V (x) V =", decompose(tensor(v2, v2)))

# The space of cubics on a 6-dimensional quadric space, as an SL3 module.
v3 = standard_character(SL3)
w = sym_power(v3, 2)
cube = sym_power(w, 3)
print("\nSL3: dim Sym^2 V =", w.dimension(), "| dim Sym^3 Sym^2 V =", cube.dimension())
print("decomposition:", decompose(cube))

# The same space as an SL2 module, for the quartic-plus-line situation.
w2 = sym_power(v2, 4) + trivial_character(SL2)
print("\nSL2: Sym^3(Sym^4 V + C) =", decompose(sym_power(w2, 3)))

# Normal slices at the two special orbits: subtract the orbit directions
# (the ambient Lie algebra modulo the stabilizer) from the ambient tangent.
print("\nnormal slice at the SL3 point:", normal_slice_omega(),
      "| dim", normal_slice_omega().dimension())
print("normal slice along the SL2 curve:", normal_slice_chi(),
      "| dim", normal_slice_chi().dimension())

# Everything is reachable through the expression grammar as well.
expr = parse_rep_expression("Sym^3(Sym^4(V)+C)", SL2)
print("\nparsed expression dim:", expr.dimension())
print("Gamma_{2,2} dimension:", irreducible_character(SL3, (2, 2)).dimension())
