"""Exact graded polynomials in the coefficients of a binary form.

A binary form of order n carries coefficients a0, ..., an. This module
implements the polynomial ring Q[a0, ..., an] with exact rational
arithmetic together with the two gradings that drive everything else:

    degree  g = nu_0 + nu_1 + ... + nu_n          (total degree of a term)
    weight  p = 1*nu_1 + 2*nu_2 + ... + n*nu_n    (index-weighted sum)

A polynomial is homogeneous when every term has the same degree and
isobaric when every term has the same weight. Invariants of a form are
homogeneous isobaric polynomials with n*g = 2*p, so most operations
downstream begin by asking for the grading; `analyze` answers both
questions at once, along with the defect n*g - 2*p that appears in the
ladder operator commutator identities.

Representation: a dict mapping exponent tuples (nu_0, ..., nu_n) to
nonzero Fraction coefficients; the zero polynomial is the empty dict.
Values are immutable after construction and every operation returns a
fresh polynomial, so concurrent use is safe by construction. Constants
have degree 0 and weight 0; the zero polynomial keeps its n but reports
no degree or weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence, Union

from ._backend import kernels

Rational = Fraction
Scalar = Union[int, Fraction]
Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Monomial:
    """One power product a0^nu0 * a1^nu1 * ... * an^nun over a form of order n."""

    n: int
    exponents: Exponents

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("form order must be nonnegative")
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def weight(self) -> int:
        return sum(i * e for i, e in enumerate(self.exponents))


@dataclass(frozen=True)
class GradedAnalysis:
    """Grading report: degree is present iff homogeneous, weight iff isobaric,
    and defect n*g - 2*p iff both."""

    homogeneous: bool
    degree: Optional[int]
    isobaric: bool
    weight: Optional[int]
    defect: Optional[int]


class CoeffPolynomial:
    """Polynomial in the form coefficients a0..an, exact and immutable.

    Terms are canonical: one entry per monomial, never a zero coefficient,
    all coefficients Fraction. Arithmetic between polynomials requires the
    same form order n; plain ints and Fractions lift to constants.
    """

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms: Union[Mapping, Iterable, None] = None):
        n = int(n)
        if n < 0:
            raise ValueError("form order must be nonnegative")
        canonical: dict[Exponents, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exps, coeff in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != n + 1:
                    raise ValueError(f"expected {n + 1} exponents, got {len(exps)}")
                if any(e < 0 for e in exps):
                    raise ValueError("exponents must be nonnegative")
                c = Fraction(coeff)
                if not c:
                    continue
                prev = canonical.get(exps)
                c = c if prev is None else prev + c
                if c:
                    canonical[exps] = c
                elif exps in canonical:
                    del canonical[exps]
        self._n = n
        self._terms = canonical

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "CoeffPolynomial":
        # Trusted constructor for canonical term dicts from the kernels.
        obj = object.__new__(cls)
        obj._n = n
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> "CoeffPolynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: Scalar) -> "CoeffPolynomial":
        return cls(n, {(0,) * (n + 1): Fraction(value)})

    @classmethod
    def variable(cls, n: int, i: int) -> "CoeffPolynomial":
        """The coefficient variable a_i."""
        if not 0 <= i <= n:
            raise ValueError(f"variable index {i} out of range for order {n}")
        exps = [0] * (n + 1)
        exps[i] = 1
        return cls._raw(n, {tuple(exps): Fraction(1)})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: Scalar = 1) -> "CoeffPolynomial":
        return cls(m.n, {m.exponents: Fraction(coeff)})

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        """Read-only view of the term dict."""
        return MappingProxyType(self._terms)

    def monomials(self) -> list[Monomial]:
        return [Monomial(self._n, exps) for exps in self._terms]

    def degree(self) -> Optional[int]:
        """Common total degree of all terms, or None if mixed or zero."""
        degrees = {sum(exps) for exps in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def weight(self) -> Optional[int]:
        """Common weight of all terms, or None if mixed or zero."""
        weights = {sum(i * e for i, e in enumerate(exps)) for exps in self._terms}
        return weights.pop() if len(weights) == 1 else None

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        """Exact substitution a_i -> values[i]."""
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != self._n + 1:
            raise ValueError(f"expected {self._n + 1} values, got {len(vals)}")
        return kernels.poly_eval(self._terms, vals)

    def _coerce(self, other) -> Optional["CoeffPolynomial"]:
        if isinstance(other, CoeffPolynomial):
            if other._n != self._n:
                raise ValueError(f"form order mismatch: {self._n} vs {other._n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CoeffPolynomial.constant(self._n, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CoeffPolynomial._raw(self._n, kernels.poly_add(self._terms, rhs._terms))

    __radd__ = __add__

    def __neg__(self):
        return CoeffPolynomial._raw(self._n, kernels.poly_neg(self._terms))

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CoeffPolynomial._raw(
                self._n, kernels.poly_scale(self._terms, Fraction(other))
            )
        if isinstance(other, CoeffPolynomial):
            if other._n != self._n:
                raise ValueError(f"form order mismatch: {self._n} vs {other._n}")
            return CoeffPolynomial._raw(
                self._n, kernels.poly_mul(self._terms, other._terms)
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = CoeffPolynomial.constant(self._n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffPolynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._terms.items())))

    def __str__(self) -> str:
        from .expr import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"CoeffPolynomial(n={self._n}, {str(self)!r})"


def degree_of(p: CoeffPolynomial) -> Optional[int]:
    """Common total degree of all terms of p, or None (zero polynomial: None)."""
    return p.degree()


def weight_of(p: CoeffPolynomial) -> Optional[int]:
    """Common weight of all terms of p, or None."""
    return p.weight()


def analyze(p: CoeffPolynomial) -> GradedAnalysis:
    """Grading report for p; defect = n*g - 2*p when fully graded."""
    g = p.degree()
    w = p.weight()
    defect = p.n * g - 2 * w if g is not None and w is not None else None
    return GradedAnalysis(
        homogeneous=g is not None,
        degree=g,
        isobaric=w is not None,
        weight=w,
        defect=defect,
    )
