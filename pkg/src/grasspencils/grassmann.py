"""Combinatorics of G(r,n) in Pluecker coordinates.

A Pluecker coordinate carries two equivalent labels: a strictly increasing
r-tuple of indices in {1,...,n}, and a partition whose Young diagram fits in
the r x (n-r) grid.  The dictionary between them walks the lattice path
along the boundary of the diagram from the lower-left to the upper-right
corner of the grid and records which of the n unit steps are vertical.

The sign convention is fixed once for the whole package: p_I stands for the
wedge x_{i1} ^ ... ^ x_{ir} with I increasing, and reordering a wedge picks
up the parity of the permutation.  Pluecker relations, the derivation action
and the point-counting minors all share this convention.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .fields import RATIONALS
from .poly import SparsePolynomial

VARIANTS = ("arrow", "squares", "quads", "squares+quads")


@lru_cache(maxsize=None)
def plucker_indices(r: int, n: int) -> tuple:
    """All increasing r-tuples in {1..n}, in lexicographic order.

    This is the variable order of every polynomial ring on G(r,n).
    """
    _check_rn(r, n)
    return tuple(combinations(range(1, n + 1), r))


@lru_cache(maxsize=None)
def index_position(r: int, n: int) -> dict:
    return {idx: k for k, idx in enumerate(plucker_indices(r, n))}


def _check_rn(r, n):
    if not (1 <= r <= n - 1):
        raise ValueError(f"need 1 <= r <= n-1, got r={r}, n={n}")


def _check_partition(part, r, n):
    k = n - r
    if len(part) > r:
        raise ValueError(f"partition {part} has more than r={r} parts")
    if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
        raise ValueError(f"partition {part} is not weakly decreasing")
    if part and (part[0] > k or part[-1] < 0):
        raise ValueError(f"partition {part} does not fit in {r}x{k}")


def normalize_partition(part) -> tuple:
    """Trim trailing zeros."""
    part = tuple(part)
    while part and part[-1] == 0:
        part = part[:-1]
    return part


def partition_to_index(part, r: int, n: int) -> tuple:
    """Lattice-path conversion partition -> increasing index tuple.

    The m-th vertical step (counting from the bottom row of the diagram)
    sits at path position lambda_{r+1-m} + m.
    """
    _check_rn(r, n)
    part = normalize_partition(part)
    _check_partition(part, r, n)
    lam = list(part) + [0] * (r - len(part))
    return tuple(lam[r - m] + m for m in range(1, r + 1))


def index_to_partition(idx, r: int, n: int) -> tuple:
    """Inverse lattice-path conversion."""
    _check_rn(r, n)
    idx = tuple(idx)
    if len(idx) != r or any(idx[i] >= idx[i + 1] for i in range(r - 1)):
        raise ValueError(f"{idx} is not a strictly increasing {r}-tuple")
    if idx[0] < 1 or idx[-1] > n:
        raise ValueError(f"{idx} out of range 1..{n}")
    lam = [idx[m - 1] - m for m in range(r, 0, -1)]
    return normalize_partition(lam)


def enumerate_arrow_partitions(r: int, n: int) -> list:
    """The arrow partitions: empty, full grid, full rows plus one partial
    row, or full columns plus one partial column.

    There are exactly 2(r-1)(n-r-1) + n of them.
    """
    _check_rn(r, n)
    k = n - r
    found = {()}
    found.add(normalize_partition((k,) * r))
    # up to r-2 full rows plus one shorter row
    for full in range(0, r - 1):
        for a in range(1, k + 1):
            found.add(normalize_partition((k,) * full + (a,)))
    # 1..k-1 full columns plus one column of height 0..r-1
    for c in range(1, k):
        for b in range(0, r):
            found.add(normalize_partition((c + 1,) * b + (c,) * (r - b)))
    return sorted(found, key=lambda p: partition_to_index(p, r, n))


def frozen_variables(r: int, n: int) -> list:
    """The n cyclic index windows (1..r), (2..r+1), ..., each sorted."""
    _check_rn(r, n)
    out = []
    for start in range(n):
        window = tuple(sorted((start + j) % n + 1 for j in range(r)))
        out.append(window)
    return out


def sort_with_sign(seq):
    """Sort an index tuple, tracking the permutation sign.

    Returns (sorted tuple, +1/-1), or (None, 0) when an index repeats
    (the wedge vanishes).
    """
    seq = list(seq)
    sign = 1
    # insertion sort; counts the swaps
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    for i in range(len(seq) - 1):
        if seq[i] == seq[i + 1]:
            return None, 0
    return tuple(seq), sign


@lru_cache(maxsize=None)
def plucker_relations(r: int, n: int) -> tuple:
    """A generating set of the Pluecker ideal (quadratic shuffle relations).

    For every (r-1)-tuple alpha and (r+1)-tuple beta the alternating sum
    over j of p_{alpha+beta_j} p_{beta-beta_j} vanishes on the Grassmannian.
    Duplicates are removed and each relation is sign-normalized so that its
    leading (graded-lex greatest) term has positive coefficient; no further
    minimalization is attempted.
    """
    _check_rn(r, n)
    if r < 2 or r > n - 2:
        return ()
    pos = index_position(r, n)
    nv = len(pos)
    seen = set()
    out = []
    for alpha in combinations(range(1, n + 1), r - 1):
        for beta in combinations(range(1, n + 1), r + 1):
            terms = {}
            for j, bj in enumerate(beta):
                first, s1 = sort_with_sign(alpha + (bj,))
                if first is None:
                    continue
                second = beta[:j] + beta[j + 1:]
                e = [0] * nv
                e[pos[first]] += 1
                e[pos[second]] += 1
                e = tuple(e)
                coeff = terms.get(e, 0) + (-1) ** j * s1
                if coeff:
                    terms[e] = coeff
                else:
                    terms.pop(e, None)
            if not terms:
                continue
            lead = max(terms, key=lambda e: (sum(e), e))
            if terms[lead] < 0:
                terms = {e: -c for e, c in terms.items()}
            key = tuple(sorted(terms.items()))
            if key in seen:
                continue
            seen.add(key)
            out.append(SparsePolynomial(nv, RATIONALS, dict(terms)))
    return tuple(out)


@dataclass(frozen=True)
class PencilSpec:
    """One-parameter family t*(deforming sum) + (frozen product).

    Monomials are stored as exponent vectors over the Pluecker variables of
    G(r,n) in their canonical (lexicographic index) order.  Every monomial
    has total degree n and the deforming monomials carry coefficient 1.
    """

    r: int
    n: int
    variant: str
    deforming: tuple
    frozen: tuple

    def __post_init__(self):
        if len(set(self.deforming)) != len(self.deforming):
            raise ValueError("deforming monomials must be pairwise distinct")
        nv = len(plucker_indices(self.r, self.n))
        for e in self.deforming + (self.frozen,):
            if len(e) != nv:
                raise ValueError(
                    f"pencil monomial {e} does not live on G({self.r},"
                    f"{self.n})")
            if sum(e) != self.n:
                raise ValueError(
                    f"pencil monomial {e} does not have degree {self.n}")
        if self.frozen != _exponent_of(frozen_variables(self.r, self.n),
                                       self.r, self.n):
            raise ValueError(
                "frozen monomial must be the product of the frozen "
                "variables, each to the first power")

    @property
    def nvars(self):
        return len(plucker_indices(self.r, self.n))

    def to_json(self) -> str:
        doc = {
            "r": self.r,
            "n": self.n,
            "variant": self.variant,
            "monomials": [list(e) for e in self.deforming],
            "frozen": list(self.frozen),
        }
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PencilSpec":
        doc = json.loads(text)
        return cls(doc["r"], doc["n"], doc["variant"],
                   tuple(tuple(e) for e in doc["monomials"]),
                   tuple(doc["frozen"]))


def _exponent_of(factors, r, n):
    """Exponent vector of a product of Pluecker indices (with repeats)."""
    pos = index_position(r, n)
    e = [0] * len(pos)
    for idx in factors:
        e[pos[idx]] += 1
    return tuple(e)


# Extra deforming monomials of the three (2,4) pencil variants, as products
# of Pluecker indices, in the order their defining equations list them.
_SQUARES_24 = (((1, 4), (1, 4), (2, 3), (2, 3)),
               ((1, 3), (1, 3), (2, 4), (2, 4)),
               ((1, 2), (1, 2), (3, 4), (3, 4)))
_QUADS_24 = (((1, 3), (1, 4), (2, 3), (2, 4)),
             ((1, 2), (1, 3), (2, 4), (3, 4)))
_SQUARES_QUADS_24 = (_SQUARES_24[0], _QUADS_24[0], _SQUARES_24[1],
                     _QUADS_24[1], _SQUARES_24[2])


def build_pencil(r: int, n: int, variant: str = "arrow") -> PencilSpec:
    """The pencil t*(sum of n-th powers of arrow variables) + frozen
    product, or one of its three (2,4) extensions."""
    _check_rn(r, n)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; "
                         f"choose from {VARIANTS}")
    if variant != "arrow" and (r, n) != (2, 4):
        raise ValueError(f"variant {variant!r} is only defined for (2,4)")
    deforming = [
        _exponent_of((partition_to_index(lam, r, n),) * n, r, n)
        for lam in enumerate_arrow_partitions(r, n)
    ]
    extras = {
        "arrow": (),
        "squares": _SQUARES_24,
        "quads": _QUADS_24,
        "squares+quads": _SQUARES_QUADS_24,
    }[variant]
    deforming += [_exponent_of(factors, r, n) for factors in extras]
    frozen = _exponent_of(frozen_variables(r, n), r, n)
    return PencilSpec(r, n, variant, tuple(deforming), frozen)


def evaluate_pencil(spec: PencilSpec, t, field=RATIONALS) -> SparsePolynomial:
    """The defining polynomial t*(deforming sum) + frozen product."""
    t = field.coerce(t)
    terms = {e: t for e in spec.deforming}
    terms[spec.frozen] = terms.get(spec.frozen, field.zero) + field.one
    return SparsePolynomial(spec.nvars, field, terms)


def plucker_names(r: int, n: int) -> list:
    sep = "" if n <= 9 else ","
    return ["p" + sep.join(str(i) for i in idx)
            for idx in plucker_indices(r, n)]


def monomial_name(exponents, r: int, n: int) -> str:
    """Readable form of an exponent vector, e.g. 'p14^2*p23^2'."""
    names = plucker_names(r, n)
    parts = [f"{names[i]}^{k}" if k > 1 else names[i]
             for i, k in enumerate(exponents) if k]
    return "*".join(parts) if parts else "1"
