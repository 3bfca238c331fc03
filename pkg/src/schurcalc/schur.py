"""Schur and supersymmetric Schur functions as exact c-polynomials.

Two determinantal presentations are implemented: the Jacobi-Trudi form in
the complete classes s_k(E - F), and the dual form in raw c-generators
indexed by the conjugate partition.  Conversion between the monomial and
Schur bases is done by an exact linear solve against the (unitriangular)
transition matrix; an independent monomial-expansion oracle in formal
variables cross-checks it and the Littlewood-Richardson products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import invert_integer_matrix
from .partitions import Partition, enumerate_partitions, ssyt_weights
from .polynomial import (
    FAMILY_C,
    FAMILY_CPRIME,
    CPolynomial,
    monomials_of_degree,
    poly_det,
    specialize,
)


@dataclass(frozen=True)
class BundleSymbol:
    """An abstract vector bundle: a generator family plus an optional rank.

    rank None means unbounded (the universal, stable case); a finite rank
    forces c_k = 0 for k above it.
    """

    family: str = FAMILY_C
    rank: int | None = None

    def __post_init__(self):
        if self.family not in (FAMILY_C, FAMILY_CPRIME):
            raise ValueError(f"bundle family must be c or c', got {self.family!r}")
        if self.rank is not None and self.rank < 0:
            raise ValueError("rank must be nonnegative")


def chern_class(E: BundleSymbol, k: int) -> CPolynomial:
    """c_k(E): 1 for k = 0, zero for k < 0 or beyond the rank."""
    if k < 0:
        return CPolynomial.zero()
    if k == 0:
        return CPolynomial.one()
    if E.rank is not None and k > E.rank:
        return CPolynomial.zero()
    return CPolynomial.gen(E.family, k)


@lru_cache(maxsize=None)
def complete_from_elementary(k: int, E: BundleSymbol = BundleSymbol()) -> CPolynomial:
    """s_k(E) = h_k in the Chern generators of E.

    Defined by the recurrence sum_{i=0..k} (-1)^i c_i h_{k-i} = [k = 0],
    i.e. the coefficient extraction from 1 / sum c_i (-z)^i.
    """
    if k < 0:
        return CPolynomial.zero()
    if k == 0:
        return CPolynomial.one()
    total = CPolynomial.zero()
    for i in range(1, k + 1):
        ci = chern_class(E, i)
        if ci.is_zero():
            continue
        term = ci * complete_from_elementary(k - i, E)
        total = total + (term if i % 2 == 1 else -term)
    return total


@lru_cache(maxsize=None)
def supersymmetric_s(k: int, E: BundleSymbol = BundleSymbol(),
                     F: BundleSymbol | None = None) -> CPolynomial:
    """s_k(E - F), the degree-k class of the series prod(1-fz)/prod(1-ez).

    Convolution of the Chern classes of F against the complete classes of E:
    s_k(E - F) = sum_{j=0..k} (-1)^j c_j(F) h_{k-j}(E).
    """
    if k < 0:
        return CPolynomial.zero()
    if F is None:
        return complete_from_elementary(k, E)
    if F.family == E.family:
        raise ValueError("E and F must use distinct generator families")
    total = CPolynomial.zero()
    for j in range(k + 1):
        cj = chern_class(F, j)
        if cj.is_zero():
            continue
        term = cj * complete_from_elementary(k - j, E)
        total = total + (term if j % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def schur_jt(lam: Partition, E: BundleSymbol = BundleSymbol(),
             F: BundleSymbol | None = None) -> CPolynomial:
    """s_lambda(E - F) as the determinant |s_{lambda_i - i + j}(E - F)|."""
    lam = Partition(lam)
    size = len(lam)
    rows = [[supersymmetric_s(lam.parts[i] - (i + 1) + (j + 1), E, F)
             for j in range(size)] for i in range(size)]
    return poly_det(rows)


@lru_cache(maxsize=None)
def elementary_super(k: int, E: BundleSymbol = BundleSymbol(),
                     F: BundleSymbol | None = None) -> CPolynomial:
    """The elementary-type class s_{(1^k)}(E - F); the dual-form entry."""
    if k < 0:
        return CPolynomial.zero()
    return schur_jt(Partition((1,) * k), E, F)


def schur_jt_dual_form(lam: Partition, E: BundleSymbol = BundleSymbol(),
                       F: BundleSymbol | None = None) -> CPolynomial:
    """s_lambda(E - F) as the conjugate determinant in elementary-type classes.

    Agrees with schur_jt; kept as an independent cross-check of the two
    determinantal presentations.
    """
    mu = Partition(lam).conjugate()
    size = len(mu)
    rows = [[elementary_super(mu.parts[i] - (i + 1) + (j + 1), E, F)
             for j in range(size)] for i in range(size)]
    return poly_det(rows)


@lru_cache(maxsize=None)
def schur_dual_jt(lam: Partition, family: str = FAMILY_C) -> CPolynomial:
    """s_lambda in raw c-generators: |c_{mu_i - i + j}| with mu the conjugate.

    This is the defining polynomial of the Schur basis used everywhere for
    expansions; no rank bound is applied.
    """
    mu = Partition(lam).conjugate()
    size = len(mu)

    def entry(i: int, j: int) -> CPolynomial:
        k = mu.parts[i] - (i + 1) + (j + 1)
        if k < 0:
            return CPolynomial.zero()
        if k == 0:
            return CPolynomial.one()
        return CPolynomial.gen(family, k)

    rows = [[entry(i, j) for j in range(size)] for i in range(size)]
    return poly_det(rows)


class SchurExpansion:
    """A homogeneous integer combination of Schur basis elements.

    Coefficients map partitions of a common weight to nonzero integers.
    The degree is kept explicitly so the zero expansion of a known degree
    integrates and serializes unambiguously.
    """

    key_name = "partition"

    def __init__(self, coefficients: dict, degree: int | None = None):
        cleaned: dict[Partition, int] = {}
        for lam, coeff in coefficients.items():
            if coeff:
                cleaned[Partition(lam)] = coeff
        weights = {lam.weight for lam in cleaned}
        if len(weights) > 1:
            raise ValueError(f"mixed weights in expansion: {sorted(weights)}")
        if weights:
            common = weights.pop()
            if degree is not None and degree != common:
                raise ValueError(f"stated degree {degree} != common weight {common}")
            degree = common
        self.coefficients = cleaned
        self.degree = degree

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.coefficients.items(), key=lambda kv: kv[0].sort_key())

    def get(self, lam, default: int = 0) -> int:
        return self.coefficients.get(Partition(lam), default)

    def coefficient_sum(self) -> int:
        return sum(self.coefficients.values())

    def is_zero(self) -> bool:
        return not self.coefficients

    def negatives(self) -> list[tuple[Partition, int]]:
        return [(lam, c) for lam, c in self.items() if c < 0]

    def is_nonnegative(self) -> bool:
        return not self.negatives()

    def scaled(self, factor: int) -> "SchurExpansion":
        return type(self)({lam: factor * c for lam, c in self.coefficients.items()},
                          degree=self.degree)

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        merged = dict(self.coefficients)
        for lam, c in other.coefficients.items():
            merged[lam] = merged.get(lam, 0) + c
        degree = self.degree if self.degree is not None else other.degree
        return type(self)(merged, degree=degree)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SchurExpansion)
                and self.coefficients == other.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def to_json(self) -> list:
        return [{self.key_name: list(lam.parts), "coeff": str(c)}
                for lam, c in self.items()]

    def __repr__(self) -> str:
        body = ", ".join(f"{tuple(lam.parts)}: {c}" for lam, c in self.items())
        return f"{type(self).__name__}({{{body}}})"


@lru_cache(maxsize=None)
def _schur_transition_inverse(d: int) -> tuple[tuple[Partition, ...], list[list[int]]]:
    """Inverse of the (monomial x Schur) transition matrix in degree d.

    Rows and columns are both indexed by partitions of d in the global
    order: row mu is the monomial c_mu, column lam is schur_dual_jt(lam).
    The matrix is unimodular, so the inverse is integral.
    """
    partitions = tuple(enumerate_partitions(d))
    monomials = monomials_of_degree(d, FAMILY_C)
    matrix = [[schur_dual_jt(lam).coefficient(mono) for lam in partitions]
              for mono in monomials]
    return partitions, invert_integer_matrix(matrix)


def to_schur(p: CPolynomial, length_bound: int | None = None) -> SchurExpansion:
    """Expand a homogeneous single-family polynomial over the Schur basis.

    The expansion over all partitions of the degree is unique; when a
    length bound is given, any support on longer partitions makes the input
    inexpressible and raises.
    """
    families = p.families()
    if len(families) > 1:
        raise ValueError(f"polynomial mixes generator families: {sorted(families)}")
    fam = families.pop() if families else FAMILY_C
    if fam not in (FAMILY_C, FAMILY_CPRIME):
        raise ValueError("Schur expansion is defined for c-type families only")
    d = p.homogeneous_degree()
    if d is None:
        return SchurExpansion({}, degree=None)
    partitions, inverse = _schur_transition_inverse(d)
    vector = [p.coefficient(_refamily(mono, fam))
              for mono in monomials_of_degree(d, FAMILY_C)]
    coeffs = {}
    for lam, row in zip(partitions, inverse):
        value = sum(a * b for a, b in zip(row, vector))
        if value:
            coeffs[lam] = value
    if length_bound is not None:
        long = [lam for lam in coeffs if len(lam) > length_bound]
        if long:
            raise ValueError(
                f"not expressible with length bound {length_bound}: "
                f"support on {sorted(tuple(l.parts) for l in long)}"
            )
    return SchurExpansion(coeffs, degree=d)


def _refamily(mono, family):
    return tuple(((family, g[1]), e) for g, e in mono)


def from_schur(x: SchurExpansion, family: str = FAMILY_C) -> CPolynomial:
    """Inverse of to_schur: substitute the defining determinants and expand."""
    total = CPolynomial.zero()
    for lam, coeff in x.items():
        total = total + coeff * schur_dual_jt(lam, family)
    return total


def lr_multiply(lam: Partition, mu: Partition) -> SchurExpansion:
    """Littlewood-Richardson expansion of s_lam . s_mu via the Schur kernel."""
    product = schur_dual_jt(Partition(lam)) * schur_dual_jt(Partition(mu))
    return to_schur(product)


# ---------------------------------------------------------------------------
# Monomial-expansion oracle: Schur polynomials as SSYT sums in formal
# variables x_1..x_N, with greedy peeling by lexicographically-leading
# monomials.  Independent of the determinant/solver path above.
# ---------------------------------------------------------------------------

XPoly = dict[tuple[int, ...], int]


@lru_cache(maxsize=None)
def schur_monomials(lam: Partition, n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """The Schur polynomial of lam in n variables as (exponent, coeff) pairs."""
    counts: dict[tuple[int, ...], int] = {}
    for w in ssyt_weights(Partition(lam), n):
        counts[w] = counts.get(w, 0) + 1
    return tuple(sorted(counts.items()))


def xp_mul(a: XPoly, b: XPoly) -> XPoly:
    out: XPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            new = out.get(key, 0) + ca * cb
            if new:
                out[key] = new
            else:
                del out[key]
    return out


def xp_accumulate(target: XPoly, source, factor: int = 1) -> None:
    items = source.items() if isinstance(source, dict) else source
    for key, coeff in items:
        new = target.get(key, 0) + factor * coeff
        if new:
            target[key] = new
        else:
            target.pop(key, None)


def peel_schur(poly: XPoly, n: int) -> dict[Partition, int]:
    """Write a symmetric x-polynomial as a Schur combination by peeling.

    The lexicographically-leading exponent of s_nu is nu itself with
    coefficient 1, so repeatedly subtracting the Schur polynomial of the
    current leading monomial terminates and recovers the coefficients.
    """
    work = {k: v for k, v in poly.items() if v}
    out: dict[Partition, int] = {}
    while work:
        lead = max(work)
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise ValueError(f"leading exponent {lead} is not a partition; "
                             "input is not a Schur combination")
        nu = Partition(lead)
        coeff = work[lead]
        out[nu] = coeff
        xp_accumulate(work, schur_monomials(nu, n), -coeff)
    return out


def lr_oracle(lam: Partition, mu: Partition, bound: int = 8) -> SchurExpansion:
    """Littlewood-Richardson product by brute-force monomial expansion.

    Expands both factors as SSYT sums in N = |lam| + |mu| variables,
    multiplies, and peels.  Must agree with lr_multiply.
    """
    lam, mu = Partition(lam), Partition(mu)
    total = lam.weight + mu.weight
    if total > bound:
        raise ValueError(f"total weight {total} exceeds the oracle bound {bound}")
    if total == 0:
        return SchurExpansion({Partition(): 1}, degree=0)
    n = total
    a: XPoly = dict(schur_monomials(lam, n))
    b: XPoly = dict(schur_monomials(mu, n))
    return SchurExpansion(peel_schur(xp_mul(a, b), n), degree=total)


def elementary_xpoly(i: int, n: int) -> XPoly:
    """e_i(x_1..x_n); zero when i > n."""
    if i == 0:
        return {(0,) * n: 1}
    if i > n:
        return {}
    return dict(schur_monomials(Partition((1,) * i), n))


def to_schur_oracle(p: CPolynomial, nvars: int | None = None) -> SchurExpansion:
    """Independent Schur expansion: substitute c_i -> e_i(x) and peel.

    Uses as many formal variables as the degree, which is faithful for
    every partition of that weight.
    """
    d = p.homogeneous_degree()
    if d is None:
        return SchurExpansion({}, degree=None)
    n = nvars if nvars is not None else max(d, 1)
    acc: XPoly = {}
    for mono, coeff in p.terms.items():
        term: XPoly = {(0,) * n: 1}
        for (family, idx), e in mono:
            if family not in (FAMILY_C, FAMILY_CPRIME):
                raise ValueError("oracle expects a c-type polynomial")
            for _ in range(e):
                term = xp_mul(term, elementary_xpoly(idx, n))
        xp_accumulate(acc, term, coeff)
    return SchurExpansion(peel_schur(acc, n), degree=d)


# ---------------------------------------------------------------------------
# Supersymmetric splitting: s_lambda(E - F) over products s_alpha(E).s_beta(F*)
# ---------------------------------------------------------------------------


def supersymmetrize(p: CPolynomial, E: BundleSymbol, F: BundleSymbol) -> CPolynomial:
    """Transport a c-polynomial along c_i -> s_{(1^i)}(E - F).

    Under this substitution the Schur expansion of p becomes its expansion
    over the supersymmetric Schur functions s_lambda(E - F) with the same
    coefficients.
    """
    indices = {g[1] for g in p.generators()}
    assignment = {(FAMILY_C, i): elementary_super(i, E, F) for i in indices}
    return specialize(p, assignment)


def super_split_poly(p: CPolynomial) -> dict[tuple[Partition, Partition], int]:
    """Expand a (c, c')-polynomial over the basis s_alpha(E) . s_beta(F*).

    E is carried by the c family and F by the c' family; s_beta(F*) is the
    Schur determinant in the dual classes c_j(F*) = (-1)^j c_j(F).
    """
    if p.is_zero():
        return {}
    d = p.homogeneous_degree()
    groups: dict[tuple, dict] = {}
    for mono, coeff in p.terms.items():
        cpart = tuple((g, e) for g, e in mono if g[0] == FAMILY_C)
        fpart = tuple((g, e) for g, e in mono if g[0] == FAMILY_CPRIME)
        if len(cpart) + len(fpart) != len(mono):
            raise ValueError("splitting expects c/c' generators only")
        groups.setdefault(fpart, {})[cpart] = coeff
    by_alpha: dict[Partition, CPolynomial] = {}
    for fmono, cterms in groups.items():
        for alpha, coeff in to_schur(CPolynomial(cterms)).items():
            piece = CPolynomial.from_monomial(fmono, coeff)
            by_alpha[alpha] = by_alpha.get(alpha, CPolynomial.zero()) + piece
    out: dict[tuple[Partition, Partition], int] = {}
    for alpha, r_alpha in by_alpha.items():
        # c'_j -> (-1)^j c'_j is a global sign on the homogeneous slice
        sign = -1 if (d - alpha.weight) % 2 else 1
        for beta, coeff in to_schur(r_alpha).items():
            value = sign * coeff
            if value:
                out[(alpha, beta)] = value
    return out


def super_split(lam: Partition, rank_E: int | None = None,
                rank_F: int | None = None) -> dict[tuple[Partition, Partition], int]:
    """Write s_lambda(E - F) as sum b_{alpha,beta} s_alpha(E) . s_beta(F*).

    The pure-E slice beta = {} recovers the supersymmetric coefficients;
    in particular b_{lambda, {}} = 1.
    """
    E = BundleSymbol(FAMILY_C, rank_E)
    F = BundleSymbol(FAMILY_CPRIME, rank_F)
    return super_split_poly(schur_jt(Partition(lam), E, F))
