"""Exact canonical-form arithmetic in the nth Weyl algebra over the rationals.

The algebra is generated by x1..xn and d1..dn subject to

    xi*xj = xj*xi,   di*dj = dj*di,   di*xj = xj*di + (1 if i == j else 0).

Every element has a unique canonical form: a finite rational combination of
normal monomials x^a * d^b (all x factors to the left of all d factors).
Elements are stored as a mapping from exponent data to nonzero coefficients,
so structural equality is exactly mathematical equality.

Products are normalized with the closed-form expansion

    d^b * x^a = sum over k <= min(a, b) componentwise of
                [prod_i C(b_i, k_i) * C(a_i, k_i) * k_i!] * x^(a-k) * d^(b-k)

which collapses to the single defining relation when a = b = e_i.  The test
suite validates this expansion exhaustively against a brute-force rewriter
that only ever applies the single-swap relation.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache


class Monomial:
    """Exponent data (x exponents, d exponents) of one normal monomial."""

    __slots__ = ("xi", "d", "_hash")

    def __init__(self, xi, d):
        xi = tuple(xi)
        d = tuple(d)
        if len(xi) != len(d):
            raise ValueError("x and d exponent tuples must have equal length")
        if any(e < 0 for e in xi) or any(e < 0 for e in d):
            raise ValueError("exponents must be nonnegative")
        self.xi = xi
        self.d = d
        self._hash = hash((xi, d))

    @classmethod
    def unit(cls, n):
        return cls((0,) * n, (0,) * n)

    @property
    def dimension(self):
        return len(self.xi)

    @property
    def degree(self):
        return sum(self.xi) + sum(self.d)

    @property
    def vector(self):
        """Concatenated exponent vector (x block, then d block)."""
        return self.xi + self.d

    def is_unit(self):
        return not any(self.xi) and not any(self.d)

    def __mul__(self, other):
        """Exponentwise sum: the commutative image of the product.

        The top term of the noncommutative product of two normal monomials
        is exactly this monomial, with coefficient 1.
        """
        _check_dim(self, other)
        return Monomial(
            tuple(a + b for a, b in zip(self.xi, other.xi)),
            tuple(a + b for a, b in zip(self.d, other.d)),
        )

    def divides(self, other):
        _check_dim(self, other)
        return all(a <= b for a, b in zip(self.xi, other.xi)) and all(
            a <= b for a, b in zip(self.d, other.d)
        )

    def __truediv__(self, other):
        if not other.divides(self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return Monomial(
            tuple(a - b for a, b in zip(self.xi, other.xi)),
            tuple(a - b for a, b in zip(self.d, other.d)),
        )

    def lcm(self, other):
        _check_dim(self, other)
        return Monomial(
            tuple(max(a, b) for a, b in zip(self.xi, other.xi)),
            tuple(max(a, b) for a, b in zip(self.d, other.d)),
        )

    def sort_key(self):
        """Graded-lex key; fixes the deterministic iteration order."""
        return (self.degree, self.vector)

    def __eq__(self, other):
        return (
            isinstance(other, Monomial) and self.xi == other.xi and self.d == other.d
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self.xi}, {self.d})"


def _check_dim(a, b):
    if a.dimension != b.dimension:
        raise ValueError(
            f"dimension mismatch: {a.dimension} vs {b.dimension}"
        )


class WeylElement:
    """An element of the Weyl algebra in canonical form.

    ``terms`` maps Monomial to nonzero Fraction; the zero element is the
    empty map.  Instances are never mutated after construction; all
    arithmetic returns fresh objects, so values are safe to share.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        clean = {}
        for mono, coeff in (terms or {}).items():
            if mono.dimension != n:
                raise ValueError(
                    f"monomial dimension {mono.dimension} does not match n={n}"
                )
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, n, terms):
        # trusted constructor: terms already clean (no zeros, right dims)
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    @classmethod
    def zero(cls, n):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        return cls._raw(n, {})

    @classmethod
    def one(cls, n):
        return cls._raw(n, {Monomial.unit(n): Fraction(1)}) if n >= 1 else cls.zero(n)

    @classmethod
    def from_term(cls, n, mono, coeff=1):
        coeff = Fraction(coeff)
        if not coeff:
            return cls.zero(n)
        if mono.dimension != n:
            raise ValueError(f"monomial dimension {mono.dimension} does not match n={n}")
        return cls._raw(n, {mono: coeff})

    def support(self):
        return frozenset(self.terms)

    def coefficient(self, mono):
        return self.terms.get(mono, Fraction(0))

    def sorted_terms(self, reverse=False):
        """Terms in graded-lex order of the exponents (deterministic)."""
        return sorted(
            self.terms.items(), key=lambda item: item[0].sort_key(), reverse=reverse
        )

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, 0) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return WeylElement._raw(self.n, out)

    def __sub__(self, other):
        self._check_compatible(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, 0) - coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return WeylElement._raw(self.n, out)

    def __neg__(self):
        return WeylElement._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            self._check_compatible(other)
            out = {}
            for ma, ca in self.terms.items():
                for mb, cb in other.terms.items():
                    c = ca * cb
                    for mono, k in multiply_monomials(ma, mb).terms.items():
                        acc = out.get(mono, 0) + c * k
                        if acc:
                            out[mono] = acc
                        else:
                            out.pop(mono, None)
            return WeylElement._raw(self.n, out)
        return self._scale(other)

    def __rmul__(self, other):
        # scalars commute with everything, so left and right agree
        return self._scale(other)

    def _scale(self, scalar):
        scalar = Fraction(scalar)
        if not scalar:
            return WeylElement.zero(self.n)
        return WeylElement._raw(
            self.n, {m: c * scalar for m, c in self.terms.items()}
        )

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = WeylElement.one(self.n)
        for _ in range(exponent):
            result = result * self
        return result

    def commutator(self, other):
        return self * other - other * self

    def _check_compatible(self, other):
        if not isinstance(other, WeylElement):
            raise TypeError(f"expected WeylElement, got {type(other).__name__}")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __str__(self):
        from .parsing import format_element

        return format_element(self)

    def __repr__(self):
        items = ", ".join(
            f"{m.xi}{m.d}: {c}" for m, c in self.sorted_terms(reverse=True)
        )
        return f"WeylElement(n={self.n}, {{{items}}})"


@lru_cache(maxsize=65536)
def multiply_monomials(a: Monomial, b: Monomial) -> WeylElement:
    """Canonical form of the product (x^a.xi d^a.d) * (x^b.xi d^b.d).

    Only the inner d^a.d * x^b.xi pair needs reordering; the outer factors
    shift exponents.  Results are cached, so callers must not mutate them.
    """
    _check_dim(a, b)
    n = a.dimension
    caps = [min(mu, rho) for mu, rho in zip(a.d, b.xi)]
    terms = {}
    for k in itertools.product(*(range(c + 1) for c in caps)):
        coeff = 1
        for mu, rho, ki in zip(a.d, b.xi, k):
            coeff *= math.comb(mu, ki) * math.comb(rho, ki) * math.factorial(ki)
        mono = Monomial(
            tuple(la + rho - ki for la, rho, ki in zip(a.xi, b.xi, k)),
            tuple(mu + sig - ki for mu, sig, ki in zip(a.d, b.d, k)),
        )
        terms[mono] = Fraction(coeff)
    return WeylElement._raw(n, terms)


def commutator(u, v):
    """uv - vu."""
    return u.commutator(v)


def combined_support(elements):
    """Union of the supports of a family of elements."""
    out = set()
    for w in elements:
        out.update(w.terms)
    return frozenset(out)


class WeylAlgebra:
    """Fixes the dimension n >= 1 and hands out generators and elements."""

    def __init__(self, n):
        if not isinstance(n, int) or n < 1:
            raise ValueError("the algebra dimension n must be an integer >= 1")
        self.n = n

    def xi(self, i):
        """The generator x_i, 1-based."""
        self._check_index(i)
        exps = tuple(1 if j == i - 1 else 0 for j in range(self.n))
        return WeylElement.from_term(self.n, Monomial(exps, (0,) * self.n))

    def d(self, i):
        """The generator d_i, 1-based."""
        self._check_index(i)
        exps = tuple(1 if j == i - 1 else 0 for j in range(self.n))
        return WeylElement.from_term(self.n, Monomial((0,) * self.n, exps))

    def one(self):
        return WeylElement.one(self.n)

    def zero(self):
        return WeylElement.zero(self.n)

    def monomial(self, xi_exps, d_exps):
        return Monomial(tuple(xi_exps), tuple(d_exps))

    def element(self, mapping):
        return WeylElement(self.n, mapping)

    def parse(self, text):
        from .parsing import parse_element

        return parse_element(text, self.n)

    def _check_index(self, i):
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range 1..{self.n}")

    def __repr__(self):
        return f"WeylAlgebra(n={self.n})"
