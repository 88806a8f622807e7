"""Sparse multivariate polynomials with integer coefficients.

Only used by the small-case symbolic oracle (full expansion of Saito
determinants gated to low dimension), so the operation set is minimal:
ring arithmetic, memoized determinant expansion, and an exact Gram-rank
irreducibility certificate for quadratics.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ
from .matrix import ExactMatrix


class MultiPoly:
    """terms: monomial exponent tuple -> nonzero integer coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        if c == 0:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def coordinate(cls, i, nvars, coeff=1):
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {mono: coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and other.nvars == self.nvars
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def add(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(self.nvars, out)

    def neg(self):
        return MultiPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scale(self, c):
        return MultiPoly(self.nvars, {m: c * v for m, v in self.terms.items()})

    def mul(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def proportional_to(self, other) -> bool:
        """True iff self = c * other for a nonzero rational c."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if set(self.terms) != set(other.terms):
            return False
        m0 = next(iter(self.terms))
        ratio = Fraction(self.terms[m0], other.terms[m0])
        return all(Fraction(c, other.terms[m]) == ratio
                   for m, c in self.terms.items())


def product(polys, nvars):
    acc = MultiPoly.const(nvars, 1)
    for p in polys:
        acc = acc.mul(p)
    return acc


def sym_det(entries) -> MultiPoly:
    """Determinant of a square grid of MultiPoly entries.

    Laplace expansion along rows, memoized on the remaining column set;
    exponential in n but cheap for the gated sizes.
    """
    n = len(entries)
    if n == 0:
        return MultiPoly.const(0, 1)
    nvars = entries[0][0].nvars
    memo = {}

    def minor(cols):
        if not cols:
            return MultiPoly.const(nvars, 1)
        key = cols
        got = memo.get(key)
        if got is not None:
            return got
        row = n - len(cols)
        acc = MultiPoly.zero(nvars)
        for idx, c in enumerate(cols):
            e = entries[row][c]
            if e.is_zero():
                continue
            rest = cols[:idx] + cols[idx + 1:]
            term = e.mul(minor(rest))
            acc = acc.add(term if idx % 2 == 0 else term.neg())
        memo[key] = acc
        return acc

    return minor(tuple(range(n)))


def quadratic_gram_rank(p: MultiPoly) -> int:
    """Rank of the symmetric Gram matrix of a homogeneous quadratic.

    A quadratic form over C is irreducible iff its Gram rank is >= 3
    (rank 1: a square; rank 2: product of two distinct linear forms).
    """
    if p.total_degree() != 2 or not p.is_homogeneous():
        raise ValueError("expected a homogeneous quadratic")
    n = p.nvars
    g = ExactMatrix.zeros(QQ, n, n)
    for mono, c in p.terms.items():
        idx = [i for i, e in enumerate(mono) for _ in range(e)]
        i, j = idx
        if i == j:
            g.rows[i][i] = Fraction(c)
        else:
            g.rows[i][j] = Fraction(c, 2)
            g.rows[j][i] = Fraction(c, 2)
    return g.rank()
