"""The period series of the (2,4) pencil, its Hasse-Witt truncations, and
the (empty) search for a classical hypergeometric truncation relation."""

from grasspencils.grassmann import build_pencil
from grasspencils.periods import (LT_LOWER, LT_UPPER, default_kernel,
                                  hasse_witt, period_coefficients,
                                  truncation_search)
from grasspencils.pointcount import count_table

kernel = default_kernel()
print("=== Period kernel ===")
print("Laurent terms:", kernel.kernel.num_terms())
print("construction checks:", kernel.checks)
print()
print("series coefficients c_0..c_10 of the holomorphic period:")
print("   ", period_coefficients(kernel, 10))
print("(only even powers of t appear)")

print()
print("=== Hasse-Witt invariants vs point counts ===")
spec = build_pencil(2, 4)
for p in (5, 7, 11):
    rows = count_table(spec, p)
    print(f"p={p}:")
    for rec in rows:
        hw = hasse_witt(p, rec.t)
        mark = "ok" if (1 - hw) % p == rec.residue else "MISMATCH"
        print(f"   t={rec.t:>2}: HW={hw:>2}, 1-HW={(1 - hw) % p:>2}, "
              f"count mod p={rec.residue:>2}  {mark}")

print()
print("=== Truncation search ===")
print("upper parameters:", [str(a) for a in LT_UPPER])
print("lower parameters:", [str(b) for b in LT_LOWER])
for p in (5, 7, 11):
    hits = truncation_search(p, count_table(spec, p))
    print(f"p={p}: scanned {(p - 1) ** 2} scalings (a, b); hits = {hits}")
print("no scaling reproduces the counts: the pencil's periods do not")
print("truncate to the classical one-parameter hypergeometric series")
