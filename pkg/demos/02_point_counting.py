"""Count points of the (2,4) pencil over small prime fields by Schubert-cell
enumeration and print the full tables."""

from grasspencils.grassmann import build_pencil
from grasspencils.pointcount import (count_table, enumerate_cells,
                                     grassmannian_count)

print("=== Schubert cells of G(2,4) ===")
for cell in enumerate_cells(2, 4):
    print(f"   pivots {cell.pivots}: dimension {cell.dimension}")
print("total points over F_p is sum of p^dim = (p^2+1)(p^2+p+1):")
for p in (5, 7, 11):
    print(f"   p={p}: {grassmannian_count(2, 4, p)}")

print()
spec = build_pencil(2, 4)
for p in (5, 7, 11):
    print(f"=== members of the pencil over F_{p} ===")
    print("    t  #X_t  #X_t mod p")
    for rec in count_table(spec, p):
        print(f"   {rec.t:>2}  {rec.count:>4}  {rec.residue:>2}")
    print()
