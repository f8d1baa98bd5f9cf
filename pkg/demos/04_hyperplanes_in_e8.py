"""The degree-2/degree-6 hyperplane dictionary inside E8.

All positive definite reasoning about how the two hyperplane families meet
reduces to configurations of roots around a fixed E6 inside E8: a root
either lies in E6, is orthogonal to it (the A2 complement), or spans an E7
with it. Counting these classes gives the weight and vanishing orders of
the discriminant automorphic form.
"""
from cf_lattice import direct_sum, standard_lattice
from cf_lattice.period import (
    automorphic_weight_and_orders,
    e8_dictionary,
    hyperplane_dictionary_check,
    intersection_codimension_check,
)
from cf_lattice.roots import roots

dic = e8_dictionary()
print("roots of E8 relative to a fixed E6:")
print("  inside E6:    ", len(dic.in_e6))
print("  orthogonal:   ", len(dic.orthogonal))
print("  mixed:        ", sum(len(v) for v in dic.mixed_by_line.values()))
print("  mixed classes:", {line: len(v) for line, v in dic.mixed_by_line.items()})

report = hyperplane_dictionary_check()
print("\ndictionary check:", report.status)
for summary in report.actual["mixed_saturations"]:
    print("  mixed saturation:", summary)

report = intersection_codimension_check()
print("\nintersection check:", report.status)
print("  pairwise saturations:", report.actual["pairwise_saturations"])
print("  projection ranks by boundary type:")
for name, rank in sorted(report.actual["projection_ranks"].items()):
    print(f"    {name:12s} -> {rank}")

# Weight and vanishing orders from raw root counts:
#   weight = 12 + |roots(E6)| / 2
#   order along the determinant-2 family = (|roots(E7)| - |roots(E6)|) / 2
#   order along the determinant-6 family = (|roots(E6+A1)| - |roots(E6)|) / 2
e6 = standard_lattice("E6")
e7 = standard_lattice("E7")
e6a1 = direct_sum(e6, standard_lattice("A1"))
print("\nroot counts: E6 =", len(roots(e6)), " E7 =", len(roots(e7)),
      " E6+A1 =", len(roots(e6a1)))
report = automorphic_weight_and_orders()
print("weight and orders:", report.actual)
