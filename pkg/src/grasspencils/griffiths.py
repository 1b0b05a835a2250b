"""Hodge-theoretic dimension counts via graded linear algebra.

Two formalisms, one kind of computation:

* the generalized Jacobian (Griffiths) ring of a hypersurface in G(r,n):
  the coordinate ring of the Pluecker cone modulo the ideal generated by
  the defining polynomial f, the derivations D^i_j f (i != j) and the
  diagonal differences D^i_i f - D^j_j f, where D^i_j = x_i d/dx_j acts on
  wedges by the Leibniz rule;

* the bigraded Jacobian ring of a complete intersection in projective
  space, generated by f_1..f_c and the partials of F = y_1 f_1 +...+ y_c f_c
  with deg(x_i) = (1,0) and deg(y_j) = (-d_j, 1).

Every dimension we need lives in a single graded slice, so no Groebner
bases appear anywhere: a slice is a finite monomial basis, the ideal cuts
out a row span, and the quotient dimension is an exact corank.

Generic-parameter answers (coefficients in Q(t)) are obtained by
specializing t to several rational values and/or several large prime
fields and demanding unanimity; disagreement raises, it is never averaged
away.
"""

import json
import os
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fields import PrimeField, RATIONALS
from .grassmann import (PencilSpec, evaluate_pencil, monomial_name,
                        plucker_indices, plucker_relations)
from .linalg import ResourceLimitError, row_basis
from .poly import SparsePolynomial, grlex_key, monomials_of_degree
from .symmetry import build_group, invariant_monomials

AMBIENT_GUARD = 10 ** 6  # largest graded slice we agree to materialize


class SpecializationMismatch(RuntimeError):
    """Specializations disagreed; no consensus dimension exists."""

    def __init__(self, message, results=None):
        super().__init__(message)
        self.results = results or []


@dataclass
class GradedPieceReport:
    """One graded slice: ambient size, span ranks, quotient dimension.

    relation_rank is the rank of the Pluecker-relation rows alone;
    ideal_rank is the additional rank contributed by the ideal generators,
    so quotient_dim = ambient - relation_rank - ideal_rank always holds.
    invariant_dim and survivors are filled by invariant-subspace runs.
    """

    label: str
    rn: tuple | None
    degree: object
    t: object
    field: str
    ambient: int
    relation_rank: int
    ideal_rank: int
    quotient_dim: int
    invariant_dim: int | None = None
    survivors: tuple | None = None
    survivor_names: tuple | None = None
    specializations: tuple | None = None
    span_checks: dict | None = None
    elapsed_ms: float = 0.0

    def to_json(self, include_timing: bool = True) -> str:
        doc = {
            "label": self.label,
            "rn": list(self.rn) if self.rn else None,
            "degree": list(self.degree) if isinstance(self.degree, tuple)
                      else self.degree,
            "t": str(self.t) if self.t is not None else None,
            "field": self.field,
            "ambient": self.ambient,
            "relation_rank": self.relation_rank,
            "ideal_rank": self.ideal_rank,
            "quotient_dim": self.quotient_dim,
            "invariant_dim": self.invariant_dim,
            "survivors": ([list(e) for e in self.survivors]
                          if self.survivors is not None else None),
            "survivor_names": (list(self.survivor_names)
                               if self.survivor_names is not None else None),
            "specializations": (list(self.specializations)
                                if self.specializations is not None else None),
            "span_checks": self.span_checks,
            "elapsed_ms": self.elapsed_ms if include_timing else None,
        }
        return json.dumps(doc, sort_keys=True)


# -- derivations -------------------------------------------------------


def apply_derivation(i: int, j: int, g: SparsePolynomial, r: int,
                     n: int) -> SparsePolynomial:
    """Apply D^i_j = x_i d/dx_j to a polynomial in Pluecker coordinates.

    On a single coordinate: zero when j is absent or both i, j are present;
    otherwise the coordinate with j replaced by i, signed by the parity of
    the reordering.  Extended to monomials by the Leibniz rule; the result
    is degree-preserving.
    """
    indices = plucker_indices(r, n)
    pos = {idx: k for k, idx in enumerate(indices)}
    if g.nvars != len(indices):
        raise ValueError("polynomial does not live on G(r,n)")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"derivation indices ({i},{j}) out of range 1..{n}")
    fld = g.field
    p = fld.modulus
    out = {}

    def accumulate(e, c):
        if p is not None:
            c %= p
        if c == 0:
            return
        cur = out.get(e, 0) + c
        if p is not None:
            cur %= p
        if cur == 0:
            out.pop(e, None)
        else:
            out[e] = cur

    for exps, coeff in g.terms.items():
        if i == j:
            mult = sum(e for e, idx in zip(exps, indices) if e and i in idx)
            if mult:
                accumulate(exps, coeff * mult)
            continue
        for v, e in enumerate(exps):
            if not e:
                continue
            idx = indices[v]
            if j not in idx or i in idx:
                continue
            replaced = tuple(i if x == j else x for x in idx)
            target, sign = _sorted_with_sign(replaced)
            new = list(exps)
            new[v] -= 1
            new[pos[target]] += 1
            accumulate(tuple(new), coeff * e * sign)
    return SparsePolynomial(g.nvars, fld, out, _clean=True)


def _sorted_with_sign(seq):
    seq = list(seq)
    sign = 1
    for a in range(1, len(seq)):
        b = a
        while b > 0 and seq[b - 1] > seq[b]:
            seq[b - 1], seq[b] = seq[b], seq[b - 1]
            sign = -sign
            b -= 1
    return tuple(seq), sign


def grassmann_jacobian_generators(f: SparsePolynomial, r: int,
                                  n: int) -> list:
    """f, all off-diagonal D^i_j f, and consecutive diagonal differences.

    Consecutive differences D^i_i f - D^{i+1}_{i+1} f span all pairwise
    ones, so the list has 1 + n(n-1) + (n-1) entries.
    """
    if not f.is_homogeneous():
        raise ValueError("generator construction needs homogeneous input")
    gens = [f]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                gens.append(apply_derivation(i, j, f, r, n))
    diagonals = [apply_derivation(i, i, f, r, n) for i in range(1, n + 1)]
    for i in range(n - 1):
        gens.append(diagonals[i] - diagonals[i + 1])
    return gens


# -- graded slices of the generalized Jacobian ring --------------------


def _slice_row(mult_exp, poly, position):
    """Row of mult * poly in the ambient monomial basis, as {col: coeff}.

    Multiplying by a fixed monomial maps distinct exponents to distinct
    columns, so no coefficient merging can occur.
    """
    return {position[tuple(m + x for m, x in zip(mult_exp, e))]: c
            for e, c in poly.terms.items()}


@lru_cache(maxsize=None)
def _ambient_monomials(nvars, degree):
    mons = tuple(monomials_of_degree(nvars, degree))
    if len(mons) > AMBIENT_GUARD:
        raise ResourceLimitError(
            f"graded slice with {len(mons)} monomials exceeds the guard")
    return mons


def _graded_slice(r, n, degree, generators, fld):
    """Ambient basis plus an echelon basis of the ideal slice.

    Returns (ambient, position, basis, relation_rank, ideal_rank); the
    basis may then be extended by candidate vectors for invariant counts.
    """
    nv = len(plucker_indices(r, n))
    ambient = _ambient_monomials(nv, degree)
    position = {e: k for k, e in enumerate(ambient)}
    basis = row_basis(len(ambient), fld)

    rel_rows = []
    for rel in plucker_relations(r, n):
        rel = rel.convert(fld)
        for mult in monomials_of_degree(nv, degree - 2):
            rel_rows.append(_slice_row(mult, rel, position))
    relation_rank = basis.add_rows(rel_rows)

    gen_rows = []
    for g in generators:
        if not g:
            continue
        if not g.is_homogeneous():
            raise ValueError("ideal generators must be homogeneous")
        d = g.total_degree()
        if d > degree:
            raise ValueError(
                f"generator of degree {d} cannot land in degree {degree}")
        for mult in monomials_of_degree(nv, degree - d):
            gen_rows.append(_slice_row(mult, g, position))
    ideal_rank = basis.add_rows(gen_rows)
    return ambient, position, basis, relation_rank, ideal_rank


def graded_quotient(r: int, n: int, degree: int,
                    ideal_generators) -> GradedPieceReport:
    """Dimension of one graded piece of S^{r,n} / (ideal generators).

    The span is every multiple of a Pluecker relation landing in the slice
    together with every multiple of an ideal generator; the quotient
    dimension is the corank of that span.
    """
    generators = list(ideal_generators)
    fld = generators[0].field if generators else RATIONALS
    start = time.perf_counter()
    ambient, _, _, relation_rank, ideal_rank = _graded_slice(
        r, n, degree, generators, fld)
    elapsed = (time.perf_counter() - start) * 1000
    return GradedPieceReport(
        label=f"G({r},{n}) degree {degree}",
        rn=(r, n), degree=degree, t=None, field=fld.name,
        ambient=len(ambient), relation_rank=relation_rank,
        ideal_rank=ideal_rank,
        quotient_dim=len(ambient) - relation_rank - ideal_rank,
        elapsed_ms=elapsed)


# -- complete-intersection Jacobian ring -------------------------------


@dataclass(frozen=True)
class CIJacobianContext:
    """Variables x_1..x_m, y_1..y_c with F = sum y_j f_j.

    Bigrading: deg(x_i) = (1,0), deg(y_j) = (-d_j, 1), so F and its
    x-partials are bihomogeneous.
    """

    nx: int
    degrees: tuple
    polys: tuple      # f_1..f_c, embedded in the m+c variable ring

    @property
    def nvars(self):
        return self.nx + len(self.degrees)

    @property
    def field(self):
        return self.polys[0].field


def ci_context(fs) -> CIJacobianContext:
    """Build the bigraded context from polynomials in the x-variables."""
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one polynomial")
    nx = fs[0].nvars
    c = len(fs)
    degrees = []
    embedded = []
    for f in fs:
        if f.nvars != nx:
            raise ValueError("all polynomials must share the x-variables")
        if not f.is_homogeneous() or not f:
            raise ValueError("polynomials must be homogeneous and nonzero")
        degrees.append(f.total_degree())
        embedded.append(f.extend_variables(c))
    return CIJacobianContext(nx, tuple(degrees), tuple(embedded))


def _ci_generators(ctx: CIJacobianContext) -> list:
    """f_1..f_c and the x-partials of F = sum y_j f_j."""
    fld = ctx.field
    nv = ctx.nvars
    F = SparsePolynomial.zero(nv, fld)
    for j, f in enumerate(ctx.polys):
        F = F + f * SparsePolynomial.variable(nv, ctx.nx + j, fld)
    gens = list(ctx.polys)
    gens += [F.partial(i) for i in range(ctx.nx)]
    return gens


def _bidegree(exps, nx, degrees):
    xdeg = sum(exps[:nx])
    ydeg = exps[nx:]
    return (xdeg - sum(d * e for d, e in zip(degrees, ydeg)), sum(ydeg))


def _poly_bidegree(poly, nx, degrees):
    bids = {_bidegree(e, nx, degrees) for e in poly.terms}
    if len(bids) != 1:
        raise ValueError("polynomial is not bihomogeneous")
    return bids.pop()


def bigraded_monomials(ctx: CIJacobianContext, bidegree) -> list:
    """All monomials x^a y^b of the given bidegree, canonical order."""
    a, b = bidegree
    out = []
    if b < 0:
        return out
    c = len(ctx.degrees)
    for ybeta in monomials_of_degree(c, b):
        xdeg = a + sum(d * e for d, e in zip(ctx.degrees, ybeta))
        if xdeg < 0:
            continue
        for xalpha in monomials_of_degree(ctx.nx, xdeg):
            out.append(xalpha + ybeta)
    out.sort(key=grlex_key, reverse=True)
    if len(out) > AMBIENT_GUARD:
        raise ResourceLimitError(
            f"bigraded slice with {len(out)} monomials exceeds the guard")
    return out


def ci_bigraded_quotient(ctx: CIJacobianContext,
                         bidegree) -> GradedPieceReport:
    """Dimension of one bigraded piece of the Jacobian ring.

    The span is every product (monomial) * (generator) landing in the
    requested bidegree.
    """
    a, b = bidegree
    start = time.perf_counter()
    ambient = bigraded_monomials(ctx, bidegree)
    position = {e: k for k, e in enumerate(ambient)}
    fld = ctx.field
    basis = row_basis(len(ambient), fld)
    rows = []
    for g in _ci_generators(ctx):
        if not g:
            continue
        ga, gb = _poly_bidegree(g, ctx.nx, ctx.degrees)
        for mult in bigraded_monomials(ctx, (a - ga, b - gb)):
            rows.append(_slice_row(mult, g, position))
    ideal_rank = basis.add_rows(rows)
    elapsed = (time.perf_counter() - start) * 1000
    return GradedPieceReport(
        label=f"CI in P^{ctx.nx - 1} bidegree {bidegree}",
        rn=None, degree=(a, b), t=None, field=fld.name,
        ambient=len(ambient), relation_rank=0, ideal_rank=ideal_rank,
        quotient_dim=len(ambient) - ideal_rank,
        elapsed_ms=elapsed)


def ci_context_for_pencil(spec: PencilSpec, t, field=RATIONALS):
    """The P^5 complete-intersection model of a (2,4) pencil member.

    The six Pluecker coordinates become projective coordinates; the member
    is cut out by the quartic pencil polynomial and the Pluecker quadric.
    """
    if (spec.r, spec.n) != (2, 4):
        raise ValueError("the projective-space model is specific to (2,4)")
    f1 = evaluate_pencil(spec, t, field)
    f2 = plucker_relations(2, 4)[0].convert(field)
    return ci_context([f1, f2])


# -- invariant subspaces across specializations ------------------------


def _worker_count() -> int:
    raw = os.environ.get("GRASSPENCILS_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _one_specialization(spec, degree, candidates, span_checks, fld, t):
    r, n = spec.r, spec.n
    t_val = fld.coerce(t)
    if t_val == 0:
        raise ValueError(f"t = {t} vanishes in {fld.name}; bad specialization")
    f = evaluate_pencil(spec, t_val, fld)
    gens = grassmann_jacobian_generators(f, r, n)
    ambient, position, basis, relation_rank, ideal_rank = _graded_slice(
        r, n, degree, gens, fld)
    survivors = []
    for e in candidates:
        if basis.add_row({position[e]: 1}):
            survivors.append(e)
    checks = {monomial_name(e, r, n): basis.contains({position[e]: 1})
              for e in span_checks}
    return {
        "t": str(t), "field": fld.name,
        "ambient": len(ambient),
        "relation_rank": relation_rank, "ideal_rank": ideal_rank,
        "quotient_dim": len(ambient) - relation_rank - ideal_rank,
        "invariant_dim": len(survivors),
        "survivors": tuple(survivors),
        "span_checks": checks,
    }


def invariant_subspace(spec: PencilSpec, group=None, degree=None,
                       t_values=(2, 3, 5), primes=(),
                       include_rationals=None,
                       span_check_monomials=()) -> GradedPieceReport:
    """Consensus dimension of the invariant part of a graded slice.

    For every specialization (t over Q, and t mod every given prime) the
    graded ideal slice is built, and the invariant monomials are fed to the
    greedy rank extension in canonical order; the surviving monomials span
    the image of the invariant subspace in the quotient.  All
    specializations must agree on every reported number, otherwise
    SpecializationMismatch is raised with the divergent results attached.
    """
    r, n = spec.r, spec.n
    if degree is None:
        degree = n
    if group is None:
        group = build_group(n, r)
    if include_rationals is None:
        include_rationals = not primes
    jobs = []
    if include_rationals:
        jobs += [(RATIONALS, Fraction(t)) for t in t_values]
    for p in primes:
        if n % p == 0:
            raise ValueError(
                f"prime {p} divides n = {n}; invariant counts need the "
                "group order invertible")
        fld = PrimeField(p)
        jobs += [(fld, t) for t in t_values]
    if not jobs:
        raise ValueError("no specializations requested")

    candidates = invariant_monomials(r, n, degree, group)
    start = time.perf_counter()
    workers = _worker_count()
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda job: _one_specialization(
                    spec, degree, candidates, span_check_monomials, *job),
                jobs))
    else:
        results = [
            _one_specialization(spec, degree, candidates,
                                span_check_monomials, fld, t)
            for fld, t in jobs]
    elapsed = (time.perf_counter() - start) * 1000

    keys = ("ambient", "relation_rank", "ideal_rank", "quotient_dim",
            "invariant_dim", "survivors", "span_checks")
    reference = {k: results[0][k] for k in keys}
    disagreeing = [res for res in results
                   if {k: res[k] for k in keys} != reference]
    if disagreeing:
        raise SpecializationMismatch(
            f"{len(disagreeing)} of {len(results)} specializations disagree "
            f"for {spec.variant} on G({r},{n})", results)

    consensus = results[0]
    return GradedPieceReport(
        label=f"G({r},{n}) {spec.variant} invariant slice, degree {degree}",
        rn=(r, n), degree=degree, t=None, field="consensus",
        ambient=consensus["ambient"],
        relation_rank=consensus["relation_rank"],
        ideal_rank=consensus["ideal_rank"],
        quotient_dim=consensus["quotient_dim"],
        invariant_dim=consensus["invariant_dim"],
        survivors=consensus["survivors"],
        survivor_names=tuple(monomial_name(e, r, n)
                             for e in consensus["survivors"]),
        specializations=tuple(
            {"t": res["t"], "field": res["field"]} for res in results),
        span_checks=consensus["span_checks"] or None,
        elapsed_ms=elapsed)
