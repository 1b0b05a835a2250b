"""Diagonal symmetry groups of the pencils and their invariant monomials.

The group of diagonal matrices diag(z_1,...,z_n) with z_i^n = 1 and
(prod z_i)^r = 1 acts on Pluecker coordinates by p_I -> z_{i1}...z_{ir} p_I.
Additively this is the lattice L = {a in (Z/n)^n : r * sum(a) = 0 mod n};
roots of unity never appear, everything is exponent arithmetic mod n.  A
monomial is invariant iff its character (the vector of index multiplicities
mod n) pairs to zero with every generator of L.

The effective quotient by the scalar diagonal has order |L|/n; its abelian
structure is read off the Smith normal form of the relation lattice.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from fractions import Fraction

from .grassmann import plucker_indices
from .linalg import smith_invariant_factors
from .poly import monomials_of_degree


@dataclass(frozen=True)
class SymmetryGroup:
    """Additive presentation of the diagonal symmetry group for (n, r)."""

    n: int
    r: int
    generators: tuple            # basis of the lattice L in (Z/n)^n
    scalar: tuple                # the scalar direction (1,...,1)
    order: int                   # |L|, the full diagonal group
    effective_order: int         # |L| / n, after killing scalars
    invariant_factors: tuple     # d1 | d2 | ... of the effective group
    structure: str               # e.g. "(Z/4)^2 x (Z/2)"


def _structure_string(invariant_factors) -> str:
    if not invariant_factors:
        return "trivial"
    counts = {}
    for d in invariant_factors:
        # split into prime-power elementary divisors
        m = d
        q = 2
        while m > 1:
            if m % q == 0:
                pk = 1
                while m % q == 0:
                    pk *= q
                    m //= q
                counts[pk] = counts.get(pk, 0) + 1
            q += 1
    parts = []
    for pk in sorted(counts, reverse=True):
        e = counts[pk]
        parts.append(f"(Z/{pk})^{e}" if e > 1 else f"(Z/{pk})")
    return " x ".join(parts)


def _solve_integer(basis_rows, target):
    """Solve x * B = target over the integers (B square, full rank)."""
    n = len(basis_rows)
    aug = [[Fraction(basis_rows[j][i]) for j in range(n)] + [Fraction(target[i])]
           for i in range(n)]  # columns of B^T, solving B^T x = target
    # plain Gaussian elimination over Q
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    xs = [aug[i][n] for i in range(n)]
    if any(x.denominator != 1 for x in xs):
        raise ValueError("target is not in the lattice")
    return [int(x) for x in xs]


@lru_cache(maxsize=None)
def build_group(n: int, r: int) -> SymmetryGroup:
    """Generators and structure of the diagonal symmetry group for (n, r).

    The lattice L is the kernel of a -> r*sum(a) mod n; an explicit basis is
    e_i - e_1 for i = 2..n together with (n/gcd(r,n)) * e_1.
    """
    if n < 2 or not (1 <= r <= n - 1):
        raise ValueError(f"need n >= 2 and 1 <= r <= n-1, got ({n}, {r})")
    g = gcd(r, n)
    gens = []
    for i in range(1, n):
        v = [0] * n
        v[0] = n - 1  # -e_1 mod n
        v[i] = 1
        gens.append(tuple(v))
    v = [0] * n
    v[0] = n // g
    gens.append(tuple(v))
    order = n ** (n - 1) * g
    effective = order // n

    # structure of (lattice L) / (scalars + n Z^n), via Smith normal form of
    # the sublattice expressed in a basis of the preimage of L in Z^n
    basis = [[0] * n for _ in range(n)]
    basis[0][0] = n // g
    for i in range(1, n):
        basis[i][0] = -1
        basis[i][i] = 1
    sub = []
    for i in range(n):
        v = [0] * n
        v[i] = n
        sub.append(_solve_integer(basis, v))
    sub.append(_solve_integer(basis, [1] * n))
    factors = tuple(smith_invariant_factors(sub))
    assert _product(factors) == effective, "group order/SNF mismatch"
    return SymmetryGroup(
        n=n, r=r, generators=tuple(gens), scalar=(1,) * n,
        order=order, effective_order=effective,
        invariant_factors=factors, structure=_structure_string(factors))


def _product(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def character(exponents, group: SymmetryGroup) -> tuple:
    """Index-multiplicity vector of a monomial, reduced mod n.

    Entry i counts how often index i+1 occurs among the Pluecker factors of
    the monomial, with multiplicity.
    """
    indices = plucker_indices(group.r, group.n)
    if len(exponents) != len(indices):
        raise ValueError("exponent vector does not match the variable set")
    counts = [0] * group.n
    for e, idx in zip(exponents, indices):
        if e:
            for i in idx:
                counts[i - 1] += e
    return tuple(c % group.n for c in counts)


def is_invariant(exponents, group: SymmetryGroup) -> bool:
    """True iff the monomial is fixed by the whole diagonal group."""
    chi = character(exponents, group)
    n = group.n
    return all(
        sum(c * a for c, a in zip(chi, gen)) % n == 0
        for gen in group.generators)


def invariant_monomials(r: int, n: int, degree: int,
                        group: SymmetryGroup | None = None) -> list:
    """All invariant degree-`degree` monomials, in canonical order.

    Canonical order is graded-lex: descending lexicographic on exponent
    vectors within the fixed degree.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    if group is None:
        group = build_group(n, r)
    nv = len(plucker_indices(r, n))
    return [e for e in monomials_of_degree(nv, degree)
            if is_invariant(e, group)]


def invariant_monomials_json(r: int, n: int, degree: int,
                             group: SymmetryGroup | None = None) -> str:
    """Invariant monomials as a JSON document with the order flagged."""
    mons = invariant_monomials(r, n, degree, group)
    doc = {
        "r": r,
        "n": n,
        "degree": degree,
        "canonical_order": "graded-lex-descending",
        "monomials": [list(e) for e in mons],
    }
    return json.dumps(doc, sort_keys=True)
