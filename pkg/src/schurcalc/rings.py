"""Cohomology rings of Grassmannians and Lagrangian Grassmannians.

Both rings are finite graded quotients of a polynomial ring in Chern
generators, with reduction onto the geometric Schubert basis done by exact
degreewise linear algebra:

* Gr(r, n): generators c_1..c_r, relations h_k = 0 for n-r < k <= n, basis
  the Schur classes of partitions in the r x (n-r) rectangle.  Reduction
  expands over the full Schur basis and drops the classes that vanish on a
  rank-r bundle inside the quotient (length > r, or first part > n-r).
* LG(n): generators c_1..c_n, relations the truncated pair classes Q_{i,i},
  basis the Q-tilde classes of strict partitions inside the staircase.
  Reduction solves the degree slice exactly; uniqueness of the basis
  coordinates is demanded per call, and the degreewise dimension identity
  provides the global certificate for the presentation.
"""

from __future__ import annotations

from functools import lru_cache

from .linalg import matrix_rank, solve_exact
from .partitions import (
    Partition,
    StrictPartition,
    enumerate_partitions,
    enumerate_strict_partitions,
    rectangle_dual,
    staircase,
    strict_complement,
)
from .polynomial import FAMILY_C, CPolynomial, monomials_of_degree, truncate_family
from .qtilde import QExpansion, qtilde, qtilde_pair
from .schur import SchurExpansion, lr_multiply, schur_dual_jt, to_schur


def _validate_input(p: CPolynomial, max_index: int, top: int, where: str) -> int | None:
    families = p.families()
    if families - {FAMILY_C}:
        raise ValueError(f"{where} expects a polynomial in the c family only")
    bad = [g for g in p.generators() if g[1] > max_index]
    if bad:
        raise ValueError(
            f"{where} expects generators c_1..c_{max_index}; got "
            f"{sorted(g[1] for g in bad)}"
        )
    degree = p.homogeneous_degree()
    if degree is not None and degree > top:
        raise ValueError(f"degree {degree} exceeds the top degree {top} of {where}")
    return degree


class GrassmannianRing:
    """H*(Gr(r, n)) with the Schur/Schubert basis of the r x (n-r) rectangle."""

    def __init__(self, r: int, n: int):
        if not 0 < r < n:
            raise ValueError("require 0 < r < n")
        self.r = r
        self.n = n
        self.cols = n - r
        self.top_degree = r * self.cols
        self.rectangle = Partition((self.cols,) * r)

    def __repr__(self) -> str:
        return f"GrassmannianRing(r={self.r}, n={self.n})"

    def basis(self, d: int) -> list[Partition]:
        return [lam for lam in enumerate_partitions(d, max_part=self.cols,
                                                    max_length=self.r)]

    def all_basis(self) -> list[Partition]:
        out = []
        for d in range(self.top_degree + 1):
            out.extend(self.basis(d))
        return out

    def basis_polynomial(self, lam: Partition) -> CPolynomial:
        """The Giambelli representative: the Schur determinant in c_1..c_r."""
        lam = Partition(lam)
        if not lam.fits_rectangle(self.r, self.cols):
            raise ValueError(f"{lam!r} is not in the {self.r}x{self.cols} rectangle")
        return truncate_family(schur_dual_jt(lam), FAMILY_C, self.r)

    def reduce(self, p: CPolynomial) -> SchurExpansion:
        """Schubert-basis expansion of the class of p.

        Expands over all Schur functions of the degree, then discards the
        indices that vanish in the quotient: length above r (Schur classes
        of a rank-r bundle) and first part above n-r (the ideal kills the
        first determinant row).
        """
        d = _validate_input(p, self.r, self.top_degree, f"Gr({self.r},{self.n})")
        full = to_schur(p)
        kept = {lam: c for lam, c in full.items()
                if lam.fits_rectangle(self.r, self.cols)}
        return SchurExpansion(kept, degree=d)

    def integrate(self, x: SchurExpansion) -> int:
        """Coefficient of the point class; defined only in the top degree."""
        if x.degree != self.top_degree:
            raise ValueError(
                f"integration needs degree {self.top_degree}, got {x.degree}"
            )
        return x.get(self.rectangle)

    def dual(self, lam: Partition) -> Partition:
        return rectangle_dual(lam, self.r, self.n)

    def basis_product(self, lam: Partition, mu: Partition) -> SchurExpansion:
        """Product of two Schubert classes: LR expansion truncated to the ring."""
        lam, mu = Partition(lam), Partition(mu)
        if lam.weight + mu.weight > self.top_degree:
            return SchurExpansion({}, degree=lam.weight + mu.weight)
        full = lr_multiply(lam, mu)
        kept = {nu: c for nu, c in full.items()
                if nu.fits_rectangle(self.r, self.cols)}
        return SchurExpansion(kept, degree=lam.weight + mu.weight)

    def pairing(self, lam: Partition, mu: Partition) -> int:
        product = self.basis_polynomial(lam) * self.basis_polynomial(mu)
        return self.integrate(self.reduce(product))

    def pairing_matrix(self, d: int):
        rows = self.basis(d)
        cols = self.basis(self.top_degree - d)
        matrix = [[self.pairing(lam, mu) for mu in cols] for lam in rows]
        return rows, cols, matrix

    def pairing_is_dual_permutation(self) -> bool:
        """Whole-ring check that the pairing matrix realizes rectangle duality."""
        for d in range(self.top_degree + 1):
            rows, cols, matrix = self.pairing_matrix(d)
            for i, lam in enumerate(rows):
                partner = self.dual(lam)
                for j, mu in enumerate(cols):
                    if matrix[i][j] != (1 if mu == partner else 0):
                        return False
        return True


class LagrangianRing:
    """H*(LG(n)) with the Q-tilde basis of strict partitions in the staircase."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("require n >= 1")
        self.n = n
        self.top_degree = n * (n + 1) // 2
        self.point_class = staircase(n)

    def __repr__(self) -> str:
        return f"LagrangianRing(n={self.n})"

    def basis(self, d: int) -> list[StrictPartition]:
        return enumerate_strict_partitions(d, self.n)

    def all_basis(self) -> list[StrictPartition]:
        out = []
        for d in range(self.top_degree + 1):
            out.extend(self.basis(d))
        return out

    def basis_polynomial(self, mu: StrictPartition) -> CPolynomial:
        """Q_mu truncated to c_1..c_n, the Giambelli representative of Y^mu."""
        mu = StrictPartition(mu)
        if mu.parts and mu.parts[0] > self.n:
            raise ValueError(f"{mu!r} is not inside the staircase of {self.n}")
        return truncate_family(qtilde(mu), FAMILY_C, self.n)

    def ideal_generator(self, i: int) -> CPolynomial:
        """The relation Q_{i,i} truncated to c_1..c_n."""
        if not 1 <= i <= self.n:
            raise ValueError(f"ideal generators are indexed 1..{self.n}")
        return truncate_family(qtilde_pair(i, i), FAMILY_C, self.n)

    def ideal_generators(self) -> list[CPolynomial]:
        return [self.ideal_generator(i) for i in range(1, self.n + 1)]

    def _monomials(self, d: int):
        return monomials_of_degree(d, FAMILY_C, max_index=self.n)

    def _ideal_columns(self, d: int) -> list[CPolynomial]:
        cols = []
        for i in range(1, self.n + 1):
            rest = d - 2 * i
            if rest < 0:
                continue
            gen = self.ideal_generator(i)
            for mono in self._monomials(rest):
                cols.append(CPolynomial.from_monomial(mono) * gen)
        return cols

    def reduce(self, p: CPolynomial) -> QExpansion:
        """Q-tilde basis expansion of p modulo the relations.

        Solves p = sum a_mu Q_mu + (ideal slice) exactly; the a_mu block
        must be unique and integral, anything else signals a broken
        presentation rather than a user error.
        """
        d = _validate_input(p, self.n, self.top_degree, f"LG({self.n})")
        if d is None:
            return QExpansion({}, degree=None)
        basis = self.basis(d)
        basis_cols = [self.basis_polynomial(mu) for mu in basis]
        all_cols = basis_cols + self._ideal_columns(d)
        monos = self._monomials(d)
        matrix = [[col.coefficient(mono) for col in all_cols] for mono in monos]
        rhs = [p.coefficient(mono) for mono in monos]
        solution = solve_exact(matrix, rhs, unique_block=(0, len(basis)))
        coeffs = {}
        for mu, value in zip(basis, solution.values):
            if value.denominator != 1:
                raise ValueError(f"non-integral coefficient {value} for {mu!r} "
                                 "(internal bug)")
            if value:
                coeffs[mu] = value.numerator
        return QExpansion(coeffs, degree=d)

    def integrate(self, x: QExpansion) -> int:
        """Coefficient of the point class Y^{staircase}; top degree only."""
        if x.degree != self.top_degree:
            raise ValueError(
                f"integration needs degree {self.top_degree}, got {x.degree}"
            )
        return x.get(self.point_class)

    def dual(self, mu: StrictPartition) -> StrictPartition:
        return strict_complement(mu, self.n)

    def restrict(self, lam: Partition) -> QExpansion:
        """Pullback of the ambient Schubert class X^lam along LG(V) in G_n(V).

        The tautological subbundles agree under the inclusion, so the class
        is the Schur polynomial of lam in c_1..c_n reduced to the Q-tilde
        basis.  Above the top degree the cohomology vanishes and the zero
        expansion is returned.
        """
        lam = Partition(lam)
        if not lam.fits_rectangle(self.n, self.n):
            raise ValueError(f"{lam!r} is not a Schubert index of G_{self.n}(V)")
        if lam.weight > self.top_degree:
            return QExpansion({}, degree=lam.weight)
        return self.reduce(truncate_family(schur_dual_jt(lam), FAMILY_C, self.n))

    def dimension_identity(self, d: int) -> dict[str, int]:
        """Degreewise certificate: #monomials = #basis + rank(ideal slice)."""
        monos = self._monomials(d)
        ideal_cols = self._ideal_columns(d)
        if ideal_cols:
            rank = matrix_rank([[col.coefficient(m) for col in ideal_cols]
                                for m in monos])
        else:
            rank = 0
        return {
            "monomials": len(monos),
            "basis": len(self.basis(d)),
            "ideal_rank": rank,
        }

    def pairing(self, mu: StrictPartition, nu: StrictPartition) -> int:
        product = self.basis_polynomial(mu) * self.basis_polynomial(nu)
        return self.integrate(self.reduce(product))

    def pairing_matrix(self, d: int):
        rows = self.basis(d)
        cols = self.basis(self.top_degree - d)
        matrix = [[self.pairing(mu, nu) for nu in cols] for mu in rows]
        return rows, cols, matrix

    def pairing_is_dual_permutation(self) -> bool:
        for d in range(self.top_degree + 1):
            rows, cols, matrix = self.pairing_matrix(d)
            for i, mu in enumerate(rows):
                partner = self.dual(mu)
                for j, nu in enumerate(cols):
                    if matrix[i][j] != (1 if nu == partner else 0):
                        return False
        return True


@lru_cache(maxsize=None)
def grassmannian(r: int, n: int) -> GrassmannianRing:
    return GrassmannianRing(r, n)


@lru_cache(maxsize=None)
def lagrangian(n: int) -> LagrangianRing:
    return LagrangianRing(n)
