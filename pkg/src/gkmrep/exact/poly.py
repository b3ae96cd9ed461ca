"""Sparse multivariate polynomials and linear forms over the rationals."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


class InvalidWeightError(ValueError):
    """A linear form that must be nonzero is zero."""


def as_rational(value) -> Fraction:
    """Convert ints, Fractions and "p/q" strings to a Fraction.

    Floats are rejected unless they are integral; nothing here is approximate.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise TypeError(f"refusing inexact float {value!r}")
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    return str(q)


def _grlex_key(e: Exponent):
    return (sum(e), e)


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[Exponent, ...]:
    """All exponent vectors of the given total degree, in descending lex order.

    >>> monomials(2, 2)
    ((2, 0), (1, 1), (0, 2))
    """
    if degree < 0:
        return ()
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


def add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Immutable polynomial in ``nvars`` variables with rational coefficients.

    Terms are kept as a map from exponent vector to nonzero coefficient.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise DimensionError(f"exponent {e} has length {len(e)}, expected {nvars}")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent in {e}")
            c = as_rational(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "Polynomial":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        c = as_rational(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        """The coordinate x_{i+1} (0-based index ``i``)."""
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, e: Exponent, c=1) -> "Polynomial":
        return cls(len(e), {tuple(e): c})

    # inspection

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, e: Exponent) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    # arithmetic

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise DimensionError(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = add_exponents(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # evaluation and substitution

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionError(f"point of length {len(point)} for {self.nvars} variables")
        a = [as_rational(x) for x in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(a, e):
                if k:
                    term *= x**k
            total += term
        return total

    __call__ = evaluate

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace x_i by ``images[i]`` (all images share one ring)."""
        if len(images) != self.nvars:
            raise DimensionError("need one image per variable")
        if not images:
            return self
        target = images[0].nvars
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(target, 1)} for _ in images]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        out = Polynomial.zero(target)
        for e, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def permute_variables(self, images: Sequence[int]) -> "Polynomial":
        """Send x_i to x_{images[i]} (0-based); exponent vectors are permuted."""
        out = {}
        for e, c in self._terms.items():
            new = [0] * self.nvars
            for i, k in enumerate(e):
                new[images[i]] = k
            out[tuple(new)] = c
        return Polynomial._raw(self.nvars, out)

    def coefficient_vector(self, basis: Sequence[Exponent]) -> list[Fraction]:
        return [self._terms.get(e, Fraction(0)) for e in basis]

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mon = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


class LinearForm:
    """A homogeneous degree-one form sum(c_i * x_i)."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable):
        self.coefficients: tuple[Fraction, ...] = tuple(as_rational(c) for c in coefficients)

    @classmethod
    def root(cls, nvars: int, i: int, j: int) -> "LinearForm":
        """x_i - x_j with 1-based indices."""
        c = [0] * nvars
        c[i - 1] += 1
        c[j - 1] -= 1
        return cls(c)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __call__(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionError(f"point of length {len(point)} for {self.nvars} variables")
        return sum((c * as_rational(a) for c, a in zip(self.coefficients, point)), Fraction(0))

    def pairing(self, coweight: Sequence[int]) -> Fraction:
        return self(coweight)

    def __neg__(self):
        return LinearForm(-c for c in self.coefficients)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def equals_up_to_sign(self, other: "LinearForm") -> bool:
        return self == other or self == -other

    def to_polynomial(self) -> Polynomial:
        n = self.nvars
        terms = {}
        for i, c in enumerate(self.coefficients):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial._raw(n, terms)

    def __repr__(self):
        return f"LinearForm({str(self.to_polynomial())})"


def poly_arith(p: Polynomial, q, op: str) -> Polynomial:
    """Dispatch ``add``, ``mul`` or ``scale`` (q a scalar for scale)."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown op {op!r}")


def eval_poly(p: Polynomial, a: Sequence) -> Fraction:
    return p.evaluate(a)


@lru_cache(maxsize=4096)
def _restriction_table(form: tuple[Fraction, ...], degree: int):
    """Images of the degree-``degree`` monomials under restriction to ``form = 0``.

    The variable of the first nonzero coefficient k is eliminated:
    x_k = -(1/c_k) * sum_{l != k} c_l x_l. Returns (k, {monomial: {restricted: coeff}}).
    """
    n = len(form)
    k = next(i for i, c in enumerate(form) if c)
    inv = -1 / form[k]
    sub = {}
    for l, c in enumerate(form):
        if l != k and c:
            e = [0] * n
            e[l] = 1
            sub[tuple(e)] = c * inv
    xk = Polynomial._raw(n, sub)
    powers = [Polynomial.constant(n, 1)]
    table = {}
    for m in monomials(n, degree):
        while len(powers) <= m[k]:
            powers.append(powers[-1] * xk)
        rest = list(m)
        rest[k] = 0
        rest_poly = Polynomial._raw(n, {tuple(rest): Fraction(1)})
        table[m] = (powers[m[k]] * rest_poly)._terms
    return k, table


def restrict_to_hyperplane(p: Polynomial, alpha: LinearForm) -> Polynomial:
    """Restriction of ``p`` to the hyperplane ``alpha = 0``.

    The result is written in the remaining variables (the eliminated one has
    exponent zero everywhere). ``p`` may be inhomogeneous.
    """
    if alpha.nvars != p.nvars:
        raise DimensionError(f"form in {alpha.nvars} variables, polynomial in {p.nvars}")
    if alpha.is_zero():
        raise InvalidWeightError("cannot restrict to the zero form")
    out: dict[Exponent, Fraction] = {}
    for e, c in p.items():
        _, table = _restriction_table(alpha.coefficients, sum(e))
        for r, v in table[e].items():
            s = out.get(r, 0) + c * v
            if s:
                out[r] = s
            else:
                out.pop(r, None)
    return Polynomial._raw(p.nvars, out)


def divisible_by_linear(p: Polynomial, alpha: LinearForm) -> bool:
    """True iff ``p`` lies in the principal ideal generated by ``alpha``."""
    return restrict_to_hyperplane(p, alpha).is_zero()
