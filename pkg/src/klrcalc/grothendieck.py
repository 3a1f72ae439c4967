"""Sparse integer polynomials in n variables and the two symmetric bases.

The signed generating polynomial of set-valued fillings serves as an
independent oracle for every counting rule: expand a product back into
the basis and read coefficients off.  The expansion peels monomials
degree by degree; within one degree the monomial of a partition occurs
in the basis element of another partition only when the latter
dominates the former, so scanning partitions largest-first makes the
change of basis triangular.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch, NotSymmetric, ResidualNonzero
from .shapes import Partition, as_partition, partitions, skew
from .tableaux import enumerate_svt, total_entries, weight


class SparseIntPolynomial:
    """Map from exponent vectors (length n) to non-zero integer coefficients.

    An optional degree cap drops every term of total degree above it;
    `multiply` preserves caps by truncation.  Coefficients are plain
    Python ints, so there is no overflow to worry about.
    """

    __slots__ = ("n", "terms", "cap")

    def __init__(self, n: int, terms=(), cap=None):
        self.n = int(n)
        self.cap = cap
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coef in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for n={self.n}")
            coef = int(coef)
            if coef == 0 or (cap is not None and sum(exp) > cap):
                continue
            merged = clean.get(exp, 0) + coef
            if merged:
                clean[exp] = merged
            else:
                clean.pop(exp, None)
        self.terms = clean

    @classmethod
    def constant(cls, n: int, value=1, cap=None):
        return cls(n, {(0,) * n: value}, cap)

    def coefficient(self, exp) -> int:
        return self.terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def max_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def homogeneous(self, degree: int) -> "SparseIntPolynomial":
        return SparseIntPolynomial(
            self.n, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def truncate(self, cap) -> "SparseIntPolynomial":
        return SparseIntPolynomial(self.n, self.terms, cap)

    def scale(self, factor: int) -> "SparseIntPolynomial":
        return SparseIntPolynomial(
            self.n, {e: factor * c for e, c in self.terms.items()}, self.cap)

    def __add__(self, other):
        if not isinstance(other, SparseIntPolynomial):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} variables vs {other.n}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            merged = out.get(e, 0) + c
            if merged:
                out[e] = merged
            else:
                out.pop(e, None)
        return SparseIntPolynomial(self.n, out, self.cap)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        if isinstance(other, SparseIntPolynomial):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"<poly n={self.n} terms={len(self.terms)} cap={self.cap}>"


def multiply(a: SparseIntPolynomial, b: SparseIntPolynomial, cap=None) -> SparseIntPolynomial:
    """Exact product, dropping terms whose total degree exceeds `cap`."""
    if a.n != b.n:
        raise DimensionMismatch(f"{a.n} variables vs {b.n}")
    if cap is None:
        caps = [c for c in (a.cap, b.cap) if c is not None]
        cap = min(caps) if caps else None
    bterms = [(sum(e), e, c) for e, c in b.terms.items()]
    out = {}
    for ea, ca in a.terms.items():
        da = sum(ea)
        for db, eb, cb in bterms:
            if cap is not None and da + db > cap:
                continue
            e = tuple(x + y for x, y in zip(ea, eb))
            merged = out.get(e, 0) + ca * cb
            if merged:
                out[e] = merged
            else:
                out.pop(e, None)
    return SparseIntPolynomial(a.n, out, cap)


def is_symmetric(p: SparseIntPolynomial) -> bool:
    """Invariance under swapping adjacent variables (the n-1 generators)."""
    for k in range(p.n - 1):
        for exp, coef in p.terms.items():
            if exp[k] == exp[k + 1]:
                continue
            swapped = list(exp)
            swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
            if p.terms.get(tuple(swapped), 0) != coef:
                return False
    return True


@lru_cache(maxsize=None)
def _g_poly(outer: tuple, inner: tuple, n: int, cap: int) -> SparseIntPolynomial:
    shape = skew(outer, inner)
    cells = shape.num_cells()
    terms = {}
    for f in enumerate_svt(shape, n, max_entries=cap):
        sign = -1 if (total_entries(f) - cells) % 2 else 1
        w = weight(f, n)
        merged = terms.get(w, 0) + sign
        if merged:
            terms[w] = merged
        else:
            terms.pop(w, None)
    return SparseIntPolynomial(n, terms, cap)


def grothendieck_poly(outer, inner, n: int, cap=None) -> SparseIntPolynomial:
    """Signed generating polynomial of the skew shape's set-valued fillings.

    A filling with t total entries in a shape of s cells contributes
    (-1)^(t-s) times the monomial of its weight; only fillings with at
    most `cap` entries are summed.  The default cap n*s is exhaustive
    because no filling can hold more.
    """
    outer = as_partition(outer)
    inner = as_partition(inner)
    cells = skew(outer, inner).num_cells()
    if cap is None:
        cap = n * cells
    if cap < cells:
        raise ValueError(f"cap {cap} is below the cell count {cells}")
    return _g_poly(outer.parts, inner.parts, int(n), int(cap))


@lru_cache(maxsize=None)
def _s_poly(outer: tuple, inner: tuple, n: int) -> SparseIntPolynomial:
    shape = skew(outer, inner)
    terms = {}
    for f in enumerate_svt(shape, n, singleton=True):
        w = weight(f, n)
        terms[w] = terms.get(w, 0) + 1
    return SparseIntPolynomial(n, terms)


def schur_poly(outer, inner, n: int) -> SparseIntPolynomial:
    """Generating polynomial of the one-entry-per-cell fillings.

    Equals the minimal-degree homogeneous component of the signed
    polynomial of the same shape.
    """
    outer = as_partition(outer)
    inner = as_partition(inner)
    skew(outer, inner)  # containment check
    return _s_poly(outer.parts, inner.parts, int(n))


@dataclass(frozen=True, eq=True)
class BasisExpansion:
    """Signed integer coordinates of a polynomial on a partition basis."""

    basis: str  # "G" or "s"
    coeffs: dict

    def coefficient(self, nu) -> int:
        return self.coeffs.get(as_partition(nu), 0)

    def items(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0].size(), kv[0].parts))


def _lowest_monomial(p: SparseIntPolynomial):
    return min(p.terms, key=lambda e: (sum(e), e))


def expand_in_g_basis(p: SparseIntPolynomial, cap=None) -> BasisExpansion:
    """Coordinates of `p` on the signed set-valued basis, by degree peeling.

    `p` must be symmetric up to the cap.  Inside each degree, partitions
    are visited in descending lexicographic order (a linear extension of
    dominance), the residual coefficient at the partition's monomial is
    recorded, and that multiple of the basis element is subtracted.  Any
    degree that does not clear completely raises ResidualNonzero.
    """
    if cap is None:
        cap = p.cap if p.cap is not None else p.max_degree()
    residual = p.truncate(cap)
    if not is_symmetric(residual):
        raise NotSymmetric(f"{p!r} is not symmetric up to degree {cap}")
    coeffs = {}
    for d in range(cap + 1):
        for nu in partitions(d, max_length=p.n):
            c = residual.coefficient(nu.pad(p.n))
            if c:
                coeffs[nu] = c
                residual = residual - grothendieck_poly(nu, (), p.n, cap).scale(c)
        left = residual.homogeneous(d)
        if not left.is_zero():
            raise ResidualNonzero(
                f"degree {d} did not clear; lowest monomial {_lowest_monomial(left)}")
    return BasisExpansion("G", coeffs)


def expand_in_schur_basis(p: SparseIntPolynomial) -> BasisExpansion:
    """Coordinates of a homogeneous symmetric `p` on the singleton basis."""
    if not is_symmetric(p):
        raise NotSymmetric(f"{p!r} is not symmetric")
    if p.is_zero():
        return BasisExpansion("s", {})
    d = min(sum(e) for e in p.terms)
    residual = p
    coeffs = {}
    for nu in partitions(d, max_length=p.n):
        c = residual.coefficient(nu.pad(p.n))
        if c:
            coeffs[nu] = c
            residual = residual - schur_poly(nu, (), p.n).scale(c)
    if not residual.is_zero():
        raise ResidualNonzero(
            f"not homogeneous of degree {d}; lowest leftover {_lowest_monomial(residual)}")
    return BasisExpansion("s", coeffs)
