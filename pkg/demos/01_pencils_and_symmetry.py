"""Walk through the basic objects: arrow partitions, pencils, and the
diagonal symmetry groups that fix them."""

from grasspencils.grassmann import (build_pencil, enumerate_arrow_partitions,
                                    evaluate_pencil, frozen_variables,
                                    monomial_name, plucker_names,
                                    plucker_relations)
from grasspencils.symmetry import build_group, invariant_monomials

print("=== Partitions and pencil monomials on G(2,4) ===")
print("arrow partitions:", enumerate_arrow_partitions(2, 4))
print("frozen variables:", frozen_variables(2, 4))
spec = build_pencil(2, 4)
print("deforming monomials:",
      [monomial_name(e, 2, 4) for e in spec.deforming])
print("frozen product:   ", monomial_name(spec.frozen, 2, 4))
print("defining polynomial at t = 1:")
print("   ", evaluate_pencil(spec, 1).to_string(plucker_names(2, 4)))
print("the single Pluecker relation:")
print("   ", plucker_relations(2, 4)[0].to_string(plucker_names(2, 4)))

print()
print("=== The same data on G(2,5) ===")
print("arrow partitions:", enumerate_arrow_partitions(2, 5))
print("   (only the partition 3+1, i.e. p25, is excess)")
spec25 = build_pencil(2, 5)
print("deforming monomials:",
      [monomial_name(e, 2, 5) for e in spec25.deforming])
print("frozen product:   ", monomial_name(spec25.frozen, 2, 5))

print()
print("=== Diagonal symmetry groups ===")
for n, r in [(4, 2), (5, 2)]:
    g = build_group(n, r)
    print(f"(n,r) = ({n},{r}): full diagonal group order {g.order}, "
          f"effective quotient order {g.effective_order}, "
          f"structure {g.structure}")

print()
print("=== Invariant quartic monomials on G(2,4) ===")
for e in invariant_monomials(2, 4, 4):
    print("   ", monomial_name(e, 2, 4))
print("(the pencil monomials all appear; three pairs of squares and two")
print(" extra four-cycles complete the list of twelve)")
