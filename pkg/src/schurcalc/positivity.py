"""Schur-positivity certification and the classical singularity corpus.

A weighted homogeneous polynomial in Chern classes is numerically positive
for ample bundles exactly when it is nonzero and its Schur expansion has
nonnegative coefficients; certify() decides that criterion exactly.  The
built-in corpus stores the classical singularity-class polynomials verbatim
as expression strings (data, not code) so they can be audited line by line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import Partition, hook_contains, ssyt_weights
from .polynomial import CPolynomial
from .schur import (
    SchurExpansion,
    XPoly,
    peel_schur,
    schur_monomials,
    to_schur,
    xp_accumulate,
    xp_mul,
)

VERDICT_POSITIVE = "POSITIVE"
VERDICT_ZERO = "ZERO"
VERDICT_NOT_NONNEGATIVE = "NOT_NONNEGATIVE"


@dataclass
class PositivityReport:
    """Outcome of the positivity criterion for one polynomial."""

    polynomial: CPolynomial
    expansion: SchurExpansion
    verdict: str
    witnesses: list[tuple[Partition, int]] = field(default_factory=list)
    name: str | None = None

    @property
    def positive(self) -> bool:
        return self.verdict == VERDICT_POSITIVE

    def to_json(self) -> dict:
        out = {}
        if self.name is not None:
            out["name"] = self.name
        out["verdict"] = self.verdict
        out["expansion"] = self.expansion.to_json()
        if self.witnesses:
            out["witnesses"] = [{"partition": list(lam.parts), "coeff": str(c)}
                                for lam, c in self.witnesses]
        return out


def certify(p: CPolynomial, length_bound: int | None = None,
            name: str | None = None) -> PositivityReport:
    """Decide positivity: nonzero with a nonnegative Schur expansion."""
    if p.is_zero():
        return PositivityReport(p, SchurExpansion({}, degree=None),
                                VERDICT_ZERO, name=name)
    expansion = to_schur(p, length_bound=length_bound)
    witnesses = expansion.negatives()
    verdict = VERDICT_NOT_NONNEGATIVE if witnesses else VERDICT_POSITIVE
    return PositivityReport(p, expansion, verdict, witnesses, name=name)


@dataclass(frozen=True)
class ThomTableEntry:
    """One classical singularity class: name, printed polynomial, codimension."""

    name: str
    expression: str
    codimension: int
    source: str = "classical"

    @property
    def polynomial(self) -> CPolynomial:
        return _entry_polynomial(self.expression)


@lru_cache(maxsize=None)
def _entry_polynomial(expression: str) -> CPolynomial:
    from .parsing import evaluate_text

    return evaluate_text(expression)


# Singularity classes between equal-dimensional manifolds, as printed.
CLASSICAL_THOM_TABLE: tuple[ThomTableEntry, ...] = (
    ThomTableEntry("A_3", "c1^3 + 3*c1*c2 + 2*c3", 3),
    ThomTableEntry("A_4", "c1^4 + 6*c1^2*c2 + 2*c2^2 + 9*c1*c3 + 6*c4", 4),
    ThomTableEntry(
        "A_5",
        "c1^5 + 10*c1^3*c2 + 25*c1^2*c3 + 10*c1*c2^2 + 38*c1*c4 + 12*c2*c3 + 24*c5",
        5,
    ),
    ThomTableEntry("I_2,2", "c2^2 - c1*c3", 4),
    ThomTableEntry("I_2,3", "2*c1*c2^2 - 2*c1^2*c3 + 2*c2*c3 - 2*c1*c4", 5),
    ThomTableEntry(
        "I_2,4",
        "2*c1^2*c2^2 + 3*c2^3 - 2*c1^3*c3 + 2*c1*c2*c3 - 3*c3^2 - 5*c1^2*c4 "
        "+ 9*c2*c4 - 6*c1*c5",
        6,
    ),
)


def minimal_hook_rank(expansion: SchurExpansion) -> int:
    """Smallest k with every expansion index inside the (k, k)-hook.

    Diagnostic only: for the equal-dimension corpus the expansion support
    should sit in small symmetric hooks; nothing in the algebra relies on
    this number.
    """
    k = 0
    while not all(hook_contains(lam, k, k) for lam, _ in expansion.items()):
        k += 1
    return k


def verify_thom_table() -> list[PositivityReport]:
    """Certify every built-in classical entry; all must come out POSITIVE."""
    return [certify(entry.polynomial, name=entry.name)
            for entry in CLASSICAL_THOM_TABLE]


def schur_bundle_class(lam: Partition, mu: Partition, n: int,
                       max_roots: int = 20, max_weight: int = 4) -> SchurExpansion:
    """Expansion of s_mu of the Schur bundle S^lam(E) over the Schur basis of E.

    The Chern roots of S^lam(E) for E of rank n are the tableau weights
    sum_{cells} x_entry over the semistandard tableaux of shape lam; s_mu of
    that multiset of linear forms is a symmetric polynomial in x_1..x_n and
    is expanded by peeling.  All coefficients are nonnegative.
    """
    lam, mu = Partition(lam), Partition(mu)
    roots = ssyt_weights(lam, n)
    if len(roots) > max_roots:
        raise ValueError(f"{len(roots)} roots exceed the work bound {max_roots}")
    if mu.weight > max_weight:
        raise ValueError(f"|mu| = {mu.weight} exceeds the work bound {max_weight}")
    if mu.weight == 0:
        return SchurExpansion({Partition(): 1}, degree=0)
    if len(mu) > len(roots):
        return SchurExpansion({}, degree=mu.weight)
    # each root is the linear form sum_i w_i x_i given by a tableau weight w
    root_polys: list[XPoly] = []
    for w in roots:
        form: XPoly = {}
        for i, wi in enumerate(w):
            if wi:
                unit = tuple(1 if j == i else 0 for j in range(n))
                form[unit] = wi
        root_polys.append(form)
    acc: XPoly = {}
    for exponents, coeff in schur_monomials(mu, len(roots)):
        term: XPoly = {(0,) * n: 1}
        for var, e in enumerate(exponents):
            for _ in range(e):
                term = xp_mul(term, root_polys[var])
        xp_accumulate(acc, term, coeff)
    return SchurExpansion(peel_schur(acc, n), degree=mu.weight)
