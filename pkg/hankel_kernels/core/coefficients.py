"""
Exact scalar arithmetic over the Gaussian rationals

GaussianRational, Polynomial and RationalFunction are immutable values;
every matrix, inner function and kernel in the package is built from them.
Floats are refused at construction so that no rank or divisibility decision
can depend on rounding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

NEG_INF = -math.inf


def _format_fraction(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """Complex number re + im*i with rational parts"""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ('re', 'im'):
            value = getattr(self, name)
            if isinstance(value, float) or isinstance(value, bool):
                raise TypeError(f"Exact coefficient expected, got {value!r}")
            object.__setattr__(self, name, Fraction(value))

    @classmethod
    def of(cls, value) -> "GaussianRational":
        """Coerce int, Fraction, exact string or GaussianRational"""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, bool) or isinstance(value, float):
            raise TypeError(f"Exact coefficient expected, got {value!r}")
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"Cannot convert {value!r} to a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """
        Parse the textual format "a/b+c/d i"

        Accepted forms include "3", "-1/2", "i", "-i", "2/3i", "1/2-1/3i".

        Raises:
            ValueError: If the text is not an exact Gaussian rational
        """
        body = text.replace(' ', '')
        if not body:
            raise ValueError("empty number")
        if any(ch in body for ch in '.eE'):
            raise ValueError(f"'{text}' is not an exact number")
        if not body.endswith('i'):
            return cls(Fraction(body))
        body = body[:-1]
        cut = max(body.rfind('+'), body.rfind('-'))
        if cut <= 0:
            real, imag = '', body
        else:
            real, imag = body[:cut], body[cut:]
        if imag in ('', '+'):
            imag = '1'
        elif imag == '-':
            imag = '-1'
        return cls(Fraction(real) if real else Fraction(0), Fraction(imag))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussianRational(Fraction(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.abs2()
        if norm == 0:
            raise ZeroDivisionError("division by exact zero")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return ONE / (self ** -exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Exact squared modulus"""
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return _format_fraction(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{_format_fraction(self.im)}i"
        if self.re == 0:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{_format_fraction(self.re)}{sign}{imag}"

    def __repr__(self):
        return f"GaussianRational('{self}')"


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I_UNIT = GaussianRational(Fraction(0), Fraction(1))


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Polynomial in z with Gaussian rational coefficients, lowest degree first"""

    coeffs: Tuple[GaussianRational, ...] = ()

    def __post_init__(self):
        coeffs = [GaussianRational.of(c) for c in self.coeffs]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def of(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return cls((GaussianRational.of(value),))

    @classmethod
    def monomial(cls, power: int, coefficient=1) -> "Polynomial":
        return cls((ZERO,) * power + (GaussianRational.of(coefficient),))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        """Monic polynomial with the given roots (repeated for multiplicity)"""
        result = ONE_POLY
        for root in roots:
            result = result * cls((-GaussianRational.of(root), ONE))
        return result

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    @property
    def order(self) -> int:
        """Multiplicity of the root at 0 (0 for the zero polynomial)"""
        return next((k for k, c in enumerate(self.coeffs) if not c.is_zero), 0)

    def without_origin_root(self) -> "Polynomial":
        """p / z**order"""
        return Polynomial(self.coeffs[self.order:])

    def coeff(self, power: int) -> GaussianRational:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return ZERO

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return None
        return Polynomial((scalar,))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(k) + other.coeff(k) for k in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO_POLY
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        """Division by a nonzero scalar only; use divmod for polynomials"""
        scalar = GaussianRational._coerce(scalar)
        if scalar is None:
            return NotImplemented
        inverse = ONE / scalar
        return Polynomial(tuple(c * inverse for c in self.coeffs))

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = ONE_POLY
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        shift = len(remainder) - len(other.coeffs)
        if shift < 0:
            return ZERO_POLY, self
        quotient = [ZERO] * (shift + 1)
        lead_inverse = ONE / other.leading
        for k in range(shift, -1, -1):
            factor = remainder[k + len(other.coeffs) - 1] * lead_inverse
            quotient[k] = factor
            if factor.is_zero:
                continue
            for j, c in enumerate(other.coeffs):
                remainder[k + j] = remainder[k + j] - factor * c
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """
        Divide, requiring a zero remainder

        Raises:
            ArithmeticError: If other does not divide self
        """
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quotient

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self / self.leading

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(c * k for k, c in enumerate(self.coeffs) if k > 0))

    def conjugate(self) -> "Polynomial":
        """Conjugate every coefficient"""
        return Polynomial(tuple(c.conjugate() for c in self.coeffs))

    def reflect(self) -> "Polynomial":
        """z^deg * conj(p)(1/z); roots move to their reflections 1/conj(root)"""
        return Polynomial(tuple(c.conjugate() for c in reversed(self.coeffs)))

    def reverse(self) -> "Polynomial":
        """z^deg * p(1/z) without conjugation"""
        return Polynomial(tuple(reversed(self.coeffs)))

    def shift(self, power: int) -> "Polynomial":
        """Multiply by z**power"""
        if self.is_zero or power == 0:
            return self
        return Polynomial((ZERO,) * power + self.coeffs)

    def __call__(self, point):
        """Exact Horner evaluation at a Gaussian rational"""
        point = GaussianRational.of(point)
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def evaluate(self, point):
        """Floating point Horner evaluation; accepts numpy arrays"""
        result = 0j * point
        for c in reversed(self.coeffs):
            result = result * point + complex(c)
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_strings(self):
        return [str(c) for c in self.coeffs]

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c.is_zero:
                continue
            text = str(c)
            if power == 0:
                terms.append(text if ('+' not in text[1:] and '-' not in text[1:]) else f"({text})")
                continue
            if text == "1":
                coefficient = ""
            elif text == "-1":
                coefficient = "-"
            elif '+' in text[1:] or '-' in text[1:] or '/' in text:
                coefficient = f"({text})*"
            else:
                coefficient = f"{text}*"
            monomial = "z" if power == 1 else f"z^{power}"
            terms.append(f"{coefficient}{monomial}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.to_strings()})"


ZERO_POLY = Polynomial(())
ONE_POLY = Polynomial((ONE,))
Z_POLY = Polynomial((ZERO, ONE))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero only when both inputs are zero)"""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial):
    """
    Extended Euclid

    Returns:
        (g, s, t) with s*a + t*b = g and g monic
    """
    r0, r1 = a, b
    s0, s1 = ONE_POLY, ZERO_POLY
    t0, t1 = ZERO_POLY, ONE_POLY
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    lead = r0.leading
    return r0 / lead, s0 / lead, t0 / lead


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        return ZERO_POLY
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def poly_gcd_all(polys: Iterable[Polynomial]) -> Polynomial:
    result = ZERO_POLY
    for p in polys:
        result = poly_gcd(result, p)
        if result.degree == 0:
            break
    return result


def poly_lcm_all(polys: Iterable[Polynomial]) -> Polynomial:
    result = ONE_POLY
    for p in polys:
        result = poly_lcm(result, p)
    return result


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """Reduced quotient num/den with monic denominator"""

    num: Polynomial = ZERO_POLY
    den: Polynomial = ONE_POLY

    def __post_init__(self):
        num = Polynomial.of(self.num)
        den = Polynomial.of(self.den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = ZERO_POLY, ONE_POLY
        else:
            if den.degree > 0:
                common = poly_gcd(num, den)
                if common.degree > 0:
                    num = num.exact_div(common)
                    den = den.exact_div(common)
            lead = den.leading
            if lead != ONE:
                num = num / lead
                den = den / lead
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    @classmethod
    def of(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls(value)
        return cls(Polynomial.of(GaussianRational.of(value)))

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        return cls(Polynomial.of(GaussianRational.of(value)))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    @property
    def constant_value(self) -> GaussianRational:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        scalar = GaussianRational._coerce(other)
        if scalar is None:
            return None
        return RationalFunction(Polynomial((scalar,)))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO_RF
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return ONE_RF / (self ** -exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def adjoint(self) -> "RationalFunction":
        """
        Circle adjoint conj(r)(1/z) as a rational function

        Agrees with the pointwise conjugate at every circle point where r is
        finite. Pole checks live in circle_analysis.circle_adjoint.
        """
        if self.is_zero:
            return self
        dp, dq = self.num.degree, self.den.degree
        p, q = self.num.reflect(), self.den.reflect()
        if dq >= dp:
            return RationalFunction(p.shift(dq - dp), q)
        return RationalFunction(p, q.shift(dp - dq))

    def __call__(self, point) -> GaussianRational:
        """Exact evaluation; ZeroDivisionError at a pole"""
        return self.num(point) / self.den(point)

    def evaluate(self, point):
        return self.num.evaluate(point) / self.den.evaluate(point)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self):
        return {"num": self.num.to_strings(), "den": self.den.to_strings()}

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


ZERO_RF = RationalFunction()
ONE_RF = RationalFunction(ONE_POLY)
Z = RationalFunction(Z_POLY)


def as_rationals(values: Sequence) -> Tuple[RationalFunction, ...]:
    return tuple(RationalFunction.of(v) for v in values)
