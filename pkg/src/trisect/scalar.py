"""Exact arithmetic in the number field Q(sqrt2, sqrt3).

Every element is stored as ``a + b*sqrt2 + c*sqrt3 + d*sqrt6`` with
:class:`fractions.Fraction` coefficients.  The basis is linearly independent
over Q, so equality is coefficient equality and hashing is cheap.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm
from numbers import Rational

__all__ = [
    "Scalar",
    "OutsideFieldError",
    "ZERO",
    "ONE",
    "HALF",
    "SQRT2",
    "SQRT3",
    "SQRT6",
    "sqrt_rational",
    "sqrt_scalar",
]

_RADICANDS = (1, 2, 3, 6)
_ROOTS = (1.0, 2 ** 0.5, 3 ** 0.5, 6 ** 0.5)
_START_BITS = 64


class OutsideFieldError(ArithmeticError):
    """Raised when a requested value does not live in Q(sqrt2, sqrt3)."""


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot coerce {type(v).__name__} to an exact rational")


class Scalar:
    """Immutable element of Q(sqrt2, sqrt3)."""

    __slots__ = ("a", "b", "c", "d", "_hash", "_approx")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "c", _frac(c))
        object.__setattr__(self, "d", _frac(d))
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_approx", None)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def coerce(cls, v) -> "Scalar":
        if isinstance(v, Scalar):
            return v
        return cls(v)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        return Scalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        return Scalar(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = Fraction(other)
            return Scalar(self.a * k, self.b * k, self.c * k, self.d * k)
        if not isinstance(other, Scalar):
            return NotImplemented
        # integer numerators over a common denominator keep this to 4 gcds
        (a1, b1, c1, d1), m1 = _integral(self.coeffs)
        (a2, b2, c2, d2), m2 = _integral(other.coeffs)
        # sqrt2*sqrt2=2, sqrt3*sqrt3=3, sqrt6*sqrt6=6,
        # sqrt2*sqrt3=sqrt6, sqrt2*sqrt6=2sqrt3, sqrt3*sqrt6=3sqrt2
        a = a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2
        b = a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2)
        c = a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2)
        d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2
        m = m1 * m2
        return Scalar(Fraction(a, m), Fraction(b, m), Fraction(c, m), Fraction(d, m))

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        """Multiplicative inverse, by conjugating away sqrt3 then sqrt2."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3)")
        # self = p + q*sqrt3 with p = a + b*sqrt2, q = c + d*sqrt2
        p = (self.a, self.b)
        q = (self.c, self.d)
        # norm down to Q(sqrt2): p^2 - 3 q^2
        n = _sub2(_mul2(p, p), _scale2(_mul2(q, q), 3))
        n_inv = _inv2(n)
        # (p - q sqrt3) / n
        num_p = _mul2(p, n_inv)
        num_q = _mul2(_neg2(q), n_inv)
        return Scalar(num_p[0], num_p[1], num_q[0], num_q[1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            k = Fraction(1) / Fraction(other)
            return self * k
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Scalar(other) * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, flip2: bool = False, flip3: bool = False) -> "Scalar":
        """Galois conjugate sending sqrt2 -> -sqrt2 and/or sqrt3 -> -sqrt3."""
        s2 = -1 if flip2 else 1
        s3 = -1 if flip3 else 1
        return Scalar(self.a, s2 * self.b, s3 * self.c, s2 * s3 * self.d)

    # -- ordering --------------------------------------------------------

    def approx(self) -> tuple[float, float]:
        """Float value and an upper bound on its absolute error."""
        ap = self._approx
        if ap is None:
            terms = [float(k) * r for k, r in zip(self.coeffs, _ROOTS) if k]
            mag = sum(abs(t) for t in terms)
            ap = (sum(terms), mag * 1e-14 + 1e-300)
            object.__setattr__(self, "_approx", ap)
        return ap

    def sign(self) -> int:
        """Exact sign, certified by interval refinement."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return (self.a > 0) - (self.a < 0)
        v, err = self.approx()
        if abs(v) > err:
            return 1 if v > 0 else -1
        lo, hi = None, None
        bits = _START_BITS
        while True:
            lo, hi = self._enclose(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def _enclose(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational interval [lo, hi] containing the value; width ~ 2**-bits."""
        scale = 1 << bits
        lo = Fraction(0)
        hi = Fraction(0)
        for coef, n in zip(self.coeffs, _RADICANDS):
            if not coef:
                continue
            if n == 1:
                lo += coef
                hi += coef
                continue
            r = isqrt(n * scale * scale)
            rl = Fraction(r, scale)
            rh = Fraction(r + 1, scale)
            if coef > 0:
                lo += coef * rl
                hi += coef * rh
            else:
                lo += coef * rh
                hi += coef * rl
        return lo, hi

    def _cmp(self, other) -> int:
        return (self - Scalar.coerce(other)).sign()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.a == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.a) if self.is_rational() else hash(self.coeffs)
            object.__setattr__(self, "_hash", h)
        return h

    def __lt__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return not self.is_zero()

    # -- export ----------------------------------------------------------

    def __float__(self):
        lo, hi = self._enclose(80)
        return float((lo + hi) / 2)

    def floor(self) -> int:
        """Exact floor."""
        if self.is_rational():
            return self.a.__floor__()
        # an irrational value is never an integer, so the interval settles
        bits = _START_BITS
        while True:
            lo, hi = self._enclose(bits)
            n = lo.__floor__()
            if hi.__floor__() == n:
                return n
            bits *= 2

    def to_decimal(self, digits: int) -> str:
        """Decimal string with ``digits`` fractional digits, rounded half away from zero."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        neg = self.sign() < 0
        x = -self if neg else self
        scaled = x * (10 ** digits)
        n = scaled.floor()
        if (scaled - n - Fraction(1, 2)).sign() >= 0:
            n += 1
        return _format_fixed(n, digits, neg)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        parts = []
        for coef, label in zip(self.coeffs, ("", "√2", "√3", "√6")):
            if not coef:
                continue
            if label and abs(coef) == 1:
                mag = label
            else:
                mag = f"{abs(coef)}{label}" if not label or abs(coef).denominator == 1 \
                    else f"({abs(coef)}){label}"
            parts.append(("-" if coef < 0 else "+", mag))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sgn, mag in parts[1:]:
            out += f" {sgn} {mag}"
        return out


def _format_fixed(n: int, digits: int, neg: bool) -> str:
    s = str(n).rjust(digits + 1, "0")
    body = f"{s[:-digits]}.{s[-digits:]}"
    if neg and n:
        body = "-" + body
    return body


def _integral(coeffs):
    m = lcm(*(k.denominator for k in coeffs))
    return tuple(k.numerator * (m // k.denominator) for k in coeffs), m


# arithmetic in Q(sqrt2) on (rational, rational) pairs


def _mul2(x, y):
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _sub2(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _neg2(x):
    return (-x[0], -x[1])


def _scale2(x, k):
    return (x[0] * k, x[1] * k)


def _inv2(x):
    n = x[0] * x[0] - 2 * x[1] * x[1]
    if n == 0:
        raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
    return (x[0] / n, -x[1] / n)


def sqrt_rational(q) -> Scalar:
    """Square root of a non-negative rational, if it lies in the field.

    Works when ``q = r**2 * m`` with ``m`` in {1, 2, 3, 6}; anything else
    raises :class:`OutsideFieldError`.
    """
    q = _frac(q)
    if q < 0:
        raise OutsideFieldError(f"sqrt({q}) is not real")
    if q == 0:
        return ZERO
    num, den = q.numerator * q.denominator, q.denominator
    # sqrt(num/den^2) = sqrt(num)/den
    for m in _RADICANDS:
        if num % m:
            continue
        k = num // m
        r = isqrt(k)
        if r * r == k:
            coef = Fraction(r, den)
            return Scalar(*(coef if i == _RADICANDS.index(m) else 0 for i in range(4)))
    raise OutsideFieldError(f"sqrt({q}) is outside Q(sqrt2, sqrt3)")



def _sqrt_quadratic(x0: Fraction, x1: Fraction, m: int) -> Scalar | None:
    """Root of x0 + x1*sqrt(m) of the form p + q*sqrt(m) with rational p, q."""
    disc = x0 * x0 - m * x1 * x1
    if disc < 0:
        return None
    try:
        r = sqrt_rational(disc)
    except OutsideFieldError:
        return None
    if not r.is_rational():
        return None
    root = r.coeffs[0]
    for p2 in ((x0 + root) / 2, (x0 - root) / 2):
        if p2 <= 0:
            continue
        try:
            p = sqrt_rational(p2)
        except OutsideFieldError:
            continue
        if not p.is_rational():
            continue
        pv = p.coeffs[0]
        q = x1 / (2 * pv)
        return Scalar(pv, q, 0, 0) if m == 2 else Scalar(pv, 0, q, 0) if m == 3 else Scalar(pv, 0, 0, q)
    return None


def sqrt_scalar(x) -> Scalar:
    """Non-negative square root of ``x`` when it lies in the field.

    Handles rational radicands and radicands inside Q(sqrt2), Q(sqrt3) or Q(sqrt6),
    whose roots may pick up an extra factor sqrt2, sqrt3 or sqrt6.  Other
    radicands raise :class:`OutsideFieldError`.
    """
    x = Scalar.coerce(x)
    if x.sign() < 0:
        raise OutsideFieldError(f"sqrt({x}) is not real")
    if x.is_rational():
        return sqrt_rational(x.coeffs[0])
    a, b, c, d = x.coeffs
    if b == 0 and d == 0:
        m, x1, scales = 3, c, ((1, ONE), (2, SQRT2))
    elif c == 0 and d == 0:
        m, x1, scales = 2, b, ((1, ONE), (3, SQRT3))
    elif b == 0 and c == 0:
        m, x1, scales = 6, d, ((1, ONE), (2, SQRT2), (3, SQRT3))
    else:
        raise OutsideFieldError(f"sqrt({x}) is outside Q(sqrt2, sqrt3)")
    for k, unit in scales:
        y = _sqrt_quadratic(a / k, x1 / k, m)
        if y is not None:
            root = y * unit
            return root if root.sign() >= 0 else -root
    raise OutsideFieldError(f"sqrt({x}) is outside Q(sqrt2, sqrt3)")

ZERO = Scalar(0)
ONE = Scalar(1)
HALF = Scalar(Fraction(1, 2))
SQRT2 = Scalar(0, 1)
SQRT3 = Scalar(0, 0, 1)
SQRT6 = Scalar(0, 0, 0, 1)
