"""Sparse multivariate Laurent polynomials over an exact coefficient field.

A polynomial is a map from exponent vectors (tuples of ints, one per
variable, negative entries allowed) to nonzero scalars of its field.  Two
polynomials are equal iff their term maps are equal; no zero coefficient is
ever stored.

Canonical term order throughout the package is graded lexicographic:
monomials of lower total degree come first, and within a degree monomials
are listed in descending lexicographic order of their exponent vectors
(so for degree 4 in six variables the listing starts at x0^4 and ends at
x5^4).
"""

from fractions import Fraction

from .fields import RATIONALS


def grlex_key(exponents):
    """Sort key realizing the graded-lexicographic order."""
    return (sum(exponents), exponents)


def monomials_of_degree(nvars: int, degree: int):
    """Yield all degree-`degree` exponent vectors in canonical order.

    Canonical order within a fixed degree is descending lexicographic:
    (degree, 0, ..., 0) first, (0, ..., 0, degree) last.  Negative degrees
    yield nothing.
    """
    if degree < 0:
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


class SparsePolynomial:
    """Immutable-by-convention sparse polynomial with Laurent exponents."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars, field, terms=None, _clean=False):
        self.nvars = nvars
        self.field = field
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise ValueError(
                        f"exponent vector {e} has length {len(e)}, "
                        f"expected {nvars}")
                c = field.coerce(c)
                if c != 0:
                    clean[e] = c
            self.terms = clean

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, nvars, field=RATIONALS):
        return cls(nvars, field, {}, _clean=True)

    @classmethod
    def constant(cls, nvars, value, field=RATIONALS):
        return cls(nvars, field, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, index, field=RATIONALS, power=1):
        e = [0] * nvars
        e[index] = power
        return cls(nvars, field, {tuple(e): field.one})

    @classmethod
    def monomial(cls, exponents, coefficient=1, field=RATIONALS):
        return cls(len(exponents), field, {tuple(exponents): coefficient})

    # -- ring operations ---------------------------------------------

    def _check_context(self, other):
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable counts differ: {self.nvars} vs {other.nvars}")
        if self.field != other.field:
            raise ValueError(
                f"coefficient fields differ: {self.field} vs {other.field}")

    def __add__(self, other):
        self._check_context(other)
        p = self.field.modulus
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if p is not None:
                s %= p
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return SparsePolynomial(self.nvars, self.field, out, _clean=True)

    def __neg__(self):
        p = self.field.modulus
        if p is None:
            out = {e: -c for e, c in self.terms.items()}
        else:
            out = {e: (p - c) % p for e, c in self.terms.items()}
        return SparsePolynomial(self.nvars, self.field, out, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_context(other)
        p = self.field.modulus
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if p is not None:
                    s %= p
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return SparsePolynomial(self.nvars, self.field, out, _clean=True)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = SparsePolynomial.constant(self.nvars, 1, self.field)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c):
        c = self.field.coerce(c)
        if c == 0:
            return SparsePolynomial.zero(self.nvars, self.field)
        p = self.field.modulus
        if p is None:
            out = {e: v * c for e, v in self.terms.items()}
        else:
            out = {}
            for e, v in self.terms.items():
                s = v * c % p
                if s:
                    out[e] = s
        return SparsePolynomial(self.nvars, self.field, out, _clean=True)

    def __eq__(self, other):
        return (isinstance(other, SparsePolynomial)
                and self.nvars == other.nvars
                and self.field == other.field
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    # -- inspection ---------------------------------------------------

    def constant_term(self):
        """Coefficient of the all-zero exponent vector (zero if absent)."""
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def num_terms(self):
        return len(self.terms)

    def total_degree(self):
        """Max over terms of the sum of exponents; None for the zero poly."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def partial(self, index):
        """Formal partial derivative with respect to variable `index`."""
        p = self.field.modulus
        out = {}
        for e, c in self.terms.items():
            k = e[index]
            if k == 0:
                continue
            coeff = c * k
            if p is not None:
                coeff %= p
                if coeff == 0:
                    continue
            e2 = list(e)
            e2[index] = k - 1
            out[tuple(e2)] = coeff
        return SparsePolynomial(self.nvars, self.field, out, _clean=True)

    def evaluate(self, values):
        """Evaluate at a point; negative exponents need invertible values."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        p = self.field.modulus
        total = self.field.zero
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k == 0:
                    continue
                if p is None:
                    term *= Fraction(v) ** k
                else:
                    term = term * pow(v, k, p) % p
            total = total + term
            if p is not None:
                total %= p
        return total

    def extend_variables(self, extra: int):
        """Reinterpret in a ring with `extra` new trailing variables."""
        pad = (0,) * extra
        out = {e + pad: c for e, c in self.terms.items()}
        return SparsePolynomial(self.nvars + extra, self.field, out,
                                _clean=True)

    def convert(self, field):
        """Recoerce every coefficient into `field` (e.g. reduce mod p)."""
        return SparsePolynomial(self.nvars, field, dict(self.terms))

    def sorted_terms(self):
        """Terms in canonical (graded-lex, descending within degree) order."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]),
                      reverse=True)

    def to_string(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            factors = [f"{names[i]}^{k}" if k != 1 else names[i]
                       for i, k in enumerate(e) if k != 0]
            body = "*".join(factors)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        s = self.to_string()
        if len(s) > 120:
            s = s[:117] + "..."
        return f"SparsePolynomial({self.field}, {s})"
