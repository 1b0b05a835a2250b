"""Exact sparse linear algebra: rank, quotient dimensions, rank extension.

Over the rationals, rank is computed by fraction-free (Bareiss) elimination
on integer-scaled rows, choosing pivots of smallest magnitude in the current
column to limit coefficient growth.  Over a prime field, elimination runs on
dense int64 numpy arrays ((p-1)^2 must fit in int64, so p < 2^31).

Incremental rank questions ("does this vector extend the span?") go through
RowBasis, which keeps an echelon set of rows; each stored row vanishes on
the pivot columns of all rows stored before it, so reducing a vector is a
single in-order pass.
"""

from fractions import Fraction
from math import gcd

import numpy as np

from .fields import RATIONALS

_MOD_LIMIT = 1 << 31  # int64 safety: factors and entries below 2^31


class ResourceLimitError(RuntimeError):
    """A computation would exceed a hard size guard."""


class SparseMatrix:
    """Sparse matrix over an exact field; no zero entries stored."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, nrows, ncols, field=RATIONALS, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        self.rows = [dict() for _ in range(nrows)]
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = v

    @classmethod
    def from_rows(cls, rows, ncols, field=RATIONALS):
        """Build from an iterable of {column: value} dicts."""
        rows = list(rows)
        m = cls(len(rows), ncols, field)
        for i, row in enumerate(rows):
            for j, v in row.items():
                m[i, j] = v
        return m

    @classmethod
    def from_dense(cls, data, field=RATIONALS):
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        m = cls(len(data), ncols, field)
        for i, row in enumerate(data):
            for j, v in enumerate(row):
                if v:
                    m[i, j] = v
        return m

    def __setitem__(self, key, value):
        i, j = key
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry {key} out of range")
        value = self.field.coerce(value)
        if value == 0:
            self.rows[i].pop(j, None)
        else:
            self.rows[i][j] = value

    def __getitem__(self, key):
        i, j = key
        return self.rows[i].get(j, self.field.zero)

    def entry_count(self):
        return sum(len(r) for r in self.rows)

    def rank(self):
        if self.field.modulus is None:
            return _rank_rational(self.rows, self.ncols)
        return _rank_mod(self.rows, self.ncols, self.field.modulus)

    def __repr__(self):
        return (f"SparseMatrix({self.nrows}x{self.ncols}, {self.field}, "
                f"{self.entry_count()} entries)")


def rank(m: SparseMatrix) -> int:
    return m.rank()


def quotient_dimension(ambient_dim: int, span: SparseMatrix) -> int:
    """dim(ambient / row span) = ambient_dim - rank(span)."""
    if span.ncols != ambient_dim:
        raise ValueError(
            f"span has {span.ncols} columns, ambient dimension is "
            f"{ambient_dim}")
    return ambient_dim - span.rank()


def independent_extension(base: SparseMatrix, candidates) -> list:
    """Greedy maximal independent subset of candidate rows over `base`.

    Candidates are processed in the given order; index i is kept iff row i
    strictly increases the rank of base plus the rows kept so far.  The
    result size always equals rank(base | candidates) - rank(base).
    """
    basis = row_basis(base.ncols, base.field)
    basis.add_rows(base.rows)
    kept = []
    for i, cand in enumerate(candidates):
        if basis.add_row(cand):
            kept.append(i)
    return kept


# -- rational elimination --------------------------------------------


def _integer_rows(rows):
    """Clear denominators and content, preserving the row span."""
    out = []
    for row in rows:
        if not row:
            continue
        den = 1
        for v in row.values():
            den = den * v.denominator // gcd(den, v.denominator)
        ints = {c: int(v * den) for c, v in row.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        out.append(ints)
    return out


def _rank_rational(rows, ncols):
    """Bareiss fraction-free elimination; smallest-magnitude pivots."""
    work = _integer_rows(rows)
    if not work:
        return 0
    rk = 0
    prev = 1
    active = work
    for col in range(ncols):
        pivot_idx = None
        pivot_val = None
        for idx, row in enumerate(active):
            v = row.get(col)
            if v and (pivot_val is None or abs(v) < abs(pivot_val)):
                pivot_idx, pivot_val = idx, v
        if pivot_idx is None:
            continue
        pivot = active.pop(pivot_idx)
        rk += 1
        nxt = []
        for row in active:
            rv = row.get(col, 0)
            new = {}
            for c in row.keys() | pivot.keys():
                if c <= col:
                    continue
                val = pivot_val * row.get(c, 0) - rv * pivot.get(c, 0)
                val //= prev  # exact by the Bareiss identity
                if val:
                    new[c] = val
            if new:
                nxt.append(new)
        active = nxt
        prev = pivot_val
        if not active:
            break
    return rk


# -- prime-field elimination (dense numpy) ----------------------------


def _rows_to_array(rows, ncols, p):
    a = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in row.items():
            a[i, j] = int(v) % p
    return a


def _rank_mod(rows, ncols, p):
    basis = ModRowBasis(ncols, p)
    basis.add_array(_rows_to_array(rows, ncols, p))
    return basis.rank


class ModRowBasis:
    """Incremental echelon row set over F_p on dense int64 vectors."""

    def __init__(self, ncols, p):
        if p >= _MOD_LIMIT:
            raise ResourceLimitError(
                f"modulus {p} too large for the int64 elimination kernel")
        self.ncols = ncols
        self.p = p
        self.rows = []    # pivot-normalized np vectors
        self.pivots = []  # pivot column of each stored row

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Reduce a vector against the stored rows; returns the residue."""
        p = self.p
        vec = np.asarray(vec, dtype=np.int64) % p
        for pc, row in zip(self.pivots, self.rows):
            f = int(vec[pc])
            if f:
                vec = (vec - f * row) % p
        return vec

    def add_vector(self, vec) -> bool:
        res = self.reduce(vec)
        cols = np.nonzero(res)[0]
        if cols.size == 0:
            return False
        pc = int(cols[0])
        inv = pow(int(res[pc]), -1, self.p)
        self.rows.append(res * inv % self.p)
        self.pivots.append(pc)
        return True

    def add_row(self, row_dict) -> bool:
        vec = np.zeros(self.ncols, dtype=np.int64)
        for j, v in row_dict.items():
            vec[j] = int(v) % self.p
        return self.add_vector(vec)

    def add_rows(self, row_dicts) -> int:
        return self.add_array(_rows_to_array(row_dicts, self.ncols, self.p))

    def add_array(self, block) -> int:
        """Block insertion: one vectorized elimination pass over `block`."""
        p = self.p
        a = np.array(block, dtype=np.int64) % p
        for pc, row in zip(self.pivots, self.rows):
            col = a[:, pc]
            nz = np.nonzero(col)[0]
            if nz.size:
                a[nz] = (a[nz] - col[nz, None] * row[None, :]) % p
        gained = 0
        r = 0
        nrows = a.shape[0]
        for c in range(self.ncols):
            if r == nrows:
                break
            col = a[r:, c]
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                a[[r, k]] = a[[k, r]]
            inv = pow(int(a[r, c]), -1, p)
            a[r] = a[r] * inv % p
            below = a[r + 1:, c]
            bnz = np.nonzero(below)[0]
            if bnz.size:
                a[r + 1 + bnz] = (a[r + 1 + bnz]
                                  - below[bnz, None] * a[r][None, :]) % p
            self.rows.append(a[r].copy())
            self.pivots.append(c)
            gained += 1
            r += 1
        return gained

    def contains(self, row_dict) -> bool:
        vec = np.zeros(self.ncols, dtype=np.int64)
        for j, v in row_dict.items():
            vec[j] = int(v) % self.p
        return not np.any(self.reduce(vec))


class RationalRowBasis:
    """Incremental echelon row set over Q on sparse Fraction rows."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row_dict):
        res = {c: Fraction(v) for c, v in row_dict.items() if v}
        for pc, row in zip(self.pivots, self.rows):
            f = res.get(pc)
            if f:
                for c, v in row.items():
                    newv = res.get(c, 0) - f * v
                    if newv:
                        res[c] = newv
                    else:
                        res.pop(c, None)
        return res

    def add_row(self, row_dict) -> bool:
        res = self.reduce(row_dict)
        if not res:
            return False
        pc = min(res)
        inv = 1 / res[pc]
        self.rows.append({c: v * inv for c, v in res.items()})
        self.pivots.append(pc)
        return True

    def add_rows(self, row_dicts) -> int:
        return sum(1 for r in row_dicts if self.add_row(r))

    def contains(self, row_dict) -> bool:
        return not self.reduce(row_dict)


def row_basis(ncols, field):
    if field.modulus is None:
        return RationalRowBasis(ncols)
    return ModRowBasis(ncols, field.modulus)


# -- Smith normal form -------------------------------------------------


def smith_invariant_factors(rows) -> list:
    """Nontrivial invariant factors d1 | d2 | ... of an integer matrix.

    Small-matrix workhorse for abelian group structure; entries are Python
    ints, so there is no overflow to worry about.
    """
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    diag = []
    k = 0
    while k < min(m, n):
        # locate the smallest-magnitude nonzero entry in the trailing block
        best = None
        for i in range(k, m):
            for j in range(k, n):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        if best is None:
            break
        bi, bj, _ = best
        a[k], a[bi] = a[bi], a[k]
        for row in a:
            row[k], row[bj] = row[bj], row[k]
        while True:
            # clear column k then row k by floor-division steps
            done = True
            for i in range(k + 1, m):
                if a[i][k]:
                    q = a[i][k] // a[k][k]
                    for j in range(k, n):
                        a[i][j] -= q * a[k][j]
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        done = False
            for j in range(k + 1, n):
                if a[k][j]:
                    q = a[k][j] // a[k][k]
                    for i in range(k, m):
                        a[i][j] -= q * a[i][k]
                    if a[k][j]:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        done = False
            if done:
                break
        piv = abs(a[k][k])
        # force divisibility: fold in any entry the pivot does not divide
        offender = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if a[i][j] % piv:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(k, n):
                a[k][j] += a[offender][j]
            continue
        diag.append(piv)
        k += 1
    # normalize the chain d1 | d2 | ... via gcd/lcm exchanges
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i]:
                    g = gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
    return [d for d in diag if d != 1]
