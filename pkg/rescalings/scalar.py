"""
Scalars: exact Gaussian rationals or binary floating complex numbers.

Every matrix is in one of two modes. Exact mode holds GaussianRational
entries and never rounds. Float mode holds Python complex entries and all
comparisons against zero go through is_zero() with a scale-relative
tolerance.
"""

import cmath
import math
import numbers
from fractions import Fraction
from typing import Any, List, Optional, Union


class GaussianRational:
    """Complex number with Fraction real and imaginary parts."""

    __slots__ = ("real", "imag")

    def __init__(self, real: Any = 0, imag: Any = 0):
        self.real = Fraction(real)
        self.imag = Fraction(imag)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    def abs2(self) -> Fraction:
        """Squared modulus, exactly."""
        return self.real * self.real + self.imag * self.imag

    def is_zero(self) -> bool:
        return self.real == 0 and self.imag == 0

    def is_real(self) -> bool:
        return self.imag == 0

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))

    def __abs__(self) -> float:
        return math.hypot(float(self.real), float(self.imag))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.real, -self.imag)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other):
        o = _lift(other)
        if o is None:
            return _float_fallback(self, other, complex.__add__)
        return GaussianRational(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __sub__(self, other):
        o = _lift(other)
        if o is None:
            return _float_fallback(self, other, complex.__sub__)
        return GaussianRational(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other):
        o = _lift(other)
        if o is None:
            return _float_fallback(self, other, complex.__rsub__)
        return o - self

    def __mul__(self, other):
        o = _lift(other)
        if o is None:
            return _float_fallback(self, other, complex.__mul__)
        return GaussianRational(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift(other)
        if o is None:
            return _float_fallback(self, other, complex.__truediv__)
        den = o.abs2()
        if den == 0:
            raise ZeroDivisionError("division by an exact zero")
        num = self * o.conjugate()
        return GaussianRational(num.real / den, num.imag / den)

    def __rtruediv__(self, other):
        o = _lift(other)
        if o is None:
            return _float_fallback(self, other, complex.__rtruediv__)
        return o / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return complex(self) ** exponent
        if exponent < 0:
            return ONE / (self ** (-exponent))
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        o = _lift(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) == complex(other)
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self):
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __repr__(self):
        return f"GaussianRational({str(self.real)!r}, {str(self.imag)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[GaussianRational, complex]

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def _lift(value) -> Optional[GaussianRational]:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, numbers.Rational) and not isinstance(value, bool):
        return GaussianRational(Fraction(value.numerator, value.denominator))
    return None


def _float_fallback(exact, other, operation):
    if isinstance(other, numbers.Complex):
        return operation(complex(exact), complex(other))
    return NotImplemented


def is_exact(value) -> bool:
    return isinstance(value, GaussianRational)


def coerce(value) -> Scalar:
    """Turn ints, Fractions, floats, complex and strings into a Scalar."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    lifted = _lift(value)
    if lifted is not None:
        return lifted
    if isinstance(value, numbers.Complex):
        return complex(value)
    raise TypeError(f"Cannot interpret {value!r} as a scalar")


def to_float(value) -> complex:
    return complex(value)


def parse_component(value) -> Union[Fraction, float]:
    """Parse one real component; decimal and p/q strings parse exactly."""
    if isinstance(value, bool):
        raise ValueError(f"Not a number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            return float(text)
    raise ValueError(f"Not a number: {value!r}")


def parse_scalar(value) -> Scalar:
    """Parse a JSON value: a real, or an [re, im] pair."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"Expected [re, im], got {value!r}")
        re_part, im_part = (parse_component(v) for v in value)
    else:
        re_part, im_part = parse_component(value), Fraction(0)

    if isinstance(re_part, Fraction) and isinstance(im_part, Fraction):
        return GaussianRational(re_part, im_part)
    return complex(float(re_part), float(im_part))


def is_zero(value, tolerance: float, scale: float = 1.0) -> bool:
    """Exact zero test in exact mode, |z| <= tolerance * scale otherwise."""
    if isinstance(value, GaussianRational):
        return value.is_zero()
    return abs(value) <= tolerance * scale


def close(a, b, tolerance: float, scale: float = 1.0) -> bool:
    return is_zero(a - b, tolerance, scale)


def is_positive_real(value, tolerance: float, scale: float = 1.0) -> bool:
    if isinstance(value, GaussianRational):
        return value.imag == 0 and value.real > 0
    return abs(value.imag) <= tolerance * scale and value.real > tolerance * scale


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Square root of a nonnegative rational when it is rational."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = math.isqrt(num), math.isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


def exact_sqrt(value: GaussianRational) -> Optional[GaussianRational]:
    """Principal square root, or None when it is not a Gaussian rational."""
    modulus = rational_sqrt(value.abs2())
    if modulus is None:
        return None
    re_part = rational_sqrt((value.real + modulus) / 2)
    im_part = rational_sqrt((modulus - value.real) / 2)
    if re_part is None or im_part is None:
        return None
    if value.imag < 0:
        im_part = -im_part
    return GaussianRational(re_part, im_part)


def sqrt(value) -> Scalar:
    """Principal square root; exact when possible."""
    if isinstance(value, GaussianRational):
        root = exact_sqrt(value)
        if root is not None:
            return root
    return cmath.sqrt(complex(value))


def magnitude(value) -> float:
    return abs(complex(value))


def max_magnitude(values) -> float:
    return max((magnitude(v) for v in values), default=0.0)


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)

    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"

    places = max(twos, fives)
    digits = abs(value.numerator) * 10**places // value.denominator
    whole, frac = divmod(digits, 10**places)
    sign = "-" if value < 0 else ""
    return f"{sign}{whole}.{frac:0{places}d}".rstrip("0")


def format_component(value) -> str:
    """Decimal string for one real component."""
    if isinstance(value, Fraction):
        return _fraction_text(value)
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def to_pair(value) -> List[str]:
    value = coerce(value)
    return [format_component(value.real), format_component(value.imag)]


def format_scalar(value) -> str:
    """Single-string form: "54", "-1/3", "2i", "0.5+0.75i", "1/3-2/3i"."""
    value = coerce(value)
    re_text = format_component(value.real)
    if value.imag == 0:
        return re_text
    im_text = format_component(value.imag) + "i"
    if value.real == 0:
        return im_text
    if not im_text.startswith("-"):
        im_text = "+" + im_text
    return re_text + im_text
