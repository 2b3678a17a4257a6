"""Scalars: exact Gaussian rationals and tolerance-checked complex floats.

Exact values are stored as (a + b i) / d with Python ints, d > 0 and
gcd(a, b, d) = 1.  Approximate values wrap a Python complex together with
an absolute tolerance used by every comparison.
"""

from fractions import Fraction
from math import gcd, isqrt

DEFAULT_TOL = 1e-9


class BackendError(TypeError):
    """Raised when exact and approximate scalars meet in one computation."""


class Scalar:
    """Common base; use Exact or Approx (or the scalar() helper)."""

    __slots__ = ()

    exact = True

    def __radd__(self, other):
        return self.__add__(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return (self.one() / self) ** (-k)
        out = self.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __ne__(self, other):
        return not self == other

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "Scalar(%s)" % format_scalar(self)

    def __str__(self):
        return format_scalar(self)


class Exact(Scalar):
    __slots__ = ("a", "b", "d")

    exact = True

    def __init__(self, re_=0, im=0):
        if isinstance(re_, Exact) and im == 0:
            self.a, self.b, self.d = re_.a, re_.b, re_.d
            return
        r = Fraction(re_)
        i = Fraction(im)
        d = r.denominator * i.denominator // gcd(r.denominator, i.denominator)
        self._set(r.numerator * (d // r.denominator), i.numerator * (d // i.denominator), d)

    @classmethod
    def _raw(cls, a, b, d):
        s = object.__new__(cls)
        s._set(a, b, d)
        return s

    def _set(self, a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self.a, self.b, self.d = a, b, d

    def one(self):
        return Exact._raw(1, 0, 1)

    def _coerce(self, other):
        if isinstance(other, Exact):
            return other
        if isinstance(other, (int, Fraction)):
            return Exact(other)
        if isinstance(other, Approx) or isinstance(other, (float, complex)):
            raise BackendError("cannot mix exact and approximate scalars")
        return NotImplemented

    @property
    def real(self):
        return Fraction(self.a, self.d)

    @property
    def imag(self):
        return Fraction(self.b, self.d)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_real(self):
        return self.b == 0

    def is_one(self):
        return self.a == self.d and self.b == 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.d == o.d:
            return Exact._raw(self.a + o.a, self.b + o.b, self.d)
        return Exact._raw(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)

    def __neg__(self):
        return Exact._raw(-self.a, -self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Exact._raw(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a, self.d * o.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        # (a+bi)/d / ((c+ei)/f) = (a+bi)(c-ei) f / (d (c^2+e^2))
        n = o.a * o.a + o.b * o.b
        return Exact._raw((self.a * o.a + self.b * o.b) * o.d, (self.b * o.a - self.a * o.b) * o.d, self.d * n)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except BackendError:
            if isinstance(other, Scalar):
                raise
            return NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def conj(self):
        return Exact._raw(self.a, -self.b, self.d)

    def abs2(self):
        return Exact(Fraction(self.a * self.a + self.b * self.b, self.d * self.d))

    def to_approx(self, tol=DEFAULT_TOL):
        return Approx(complex(self.a / self.d, self.b / self.d), tol)

    def __complex__(self):
        return complex(self.a / self.d, self.b / self.d)

    def sqrt(self):
        """Exact root when one exists in Q(i), else an Approx principal root."""
        r = exact_sqrt(self)
        if r is not None:
            return r
        return self.to_approx().sqrt()


class Approx(Scalar):
    __slots__ = ("z", "tol")

    exact = False

    def __init__(self, z=0, tol=DEFAULT_TOL):
        if isinstance(z, Exact):
            z = complex(z)
        elif isinstance(z, Approx):
            tol = z.tol
            z = z.z
        self.z = complex(z)
        self.tol = tol

    def one(self):
        return Approx(1, self.tol)

    def _coerce(self, other):
        if isinstance(other, Approx):
            return other
        if isinstance(other, (int, Fraction, float, complex)):
            return Approx(complex(other), self.tol)
        if isinstance(other, Exact):
            raise BackendError("cannot mix exact and approximate scalars")
        return NotImplemented

    @property
    def real(self):
        return self.z.real

    @property
    def imag(self):
        return self.z.imag

    def is_zero(self):
        return abs(self.z) <= self.tol

    def is_real(self):
        return abs(self.z.imag) <= self.tol

    def is_one(self):
        return abs(self.z - 1) <= self.tol

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Approx(self.z + o.z, self.tol)

    def __neg__(self):
        return Approx(-self.z, self.tol)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Approx(self.z * o.z, self.tol)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.z == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Approx(self.z / o.z, self.tol)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except BackendError:
            if isinstance(other, Scalar):
                raise
            return NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return abs(self.z - o.z) <= self.tol

    # tolerance equality is not transitive, so approximate scalars are unhashable
    __hash__ = None

    def conj(self):
        return Approx(self.z.conjugate(), self.tol)

    def abs2(self):
        return Approx(abs(self.z) ** 2, self.tol)

    def to_approx(self, tol=None):
        return self if tol is None else Approx(self.z, tol)

    def __complex__(self):
        return self.z

    def sqrt(self):
        return Approx(self.z ** 0.5, self.tol)


I = Exact(0, 1)
ZERO = Exact(0)
ONE = Exact(1)


def scalar(x):
    """Coerce ints, Fractions, floats, complex numbers and literals to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Exact(x)
    if isinstance(x, (float, complex)):
        return Approx(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError("cannot make a scalar from %r" % (x,))


def _rational_sqrt(q):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def exact_sqrt(s):
    """Square root inside Q(i) (real part >= 0), or None when irrational."""
    x, y = s.real, s.imag
    if y == 0:
        if x >= 0:
            r = _rational_sqrt(x)
            return None if r is None else Exact(r)
        r = _rational_sqrt(-x)
        return None if r is None else Exact(0, r)
    m = _rational_sqrt(x * x + y * y)
    if m is None:
        return None
    p = _rational_sqrt((m + x) / 2)
    if p is None or p == 0:
        return None
    return Exact(p, y / (2 * p))


def same_backend(values):
    """Return True when values are all exact, False when all approximate."""
    kinds = {isinstance(v, Approx) for v in values if isinstance(v, Scalar)}
    if len(kinds) > 1:
        raise BackendError("cannot mix exact and approximate scalars")
    return not kinds or kinds == {False}


def lift(values, tol=DEFAULT_TOL):
    """Convert a list of scalars to approximate form."""
    return [scalar(v).to_approx(tol) if isinstance(scalar(v), Exact) else scalar(v) for v in values]


def _parse_part(t, imag_unit=False):
    if imag_unit and t in ("", "+"):
        return Fraction(1)
    if imag_unit and t == "-":
        return Fraction(-1)
    return Fraction(t)


def parse_scalar(text):
    """Parse `p/q`, `p/q+r/si`, `i`, or a decimal (approximate backend)."""
    t = text.strip().replace(" ", "")
    if not t:
        raise ValueError("empty scalar literal")
    if "." not in t and "e" not in t.lower() and "j" not in t:
        if t.endswith("i"):
            body = t[:-1]
            # split at the last sign that is not the leading one
            k = max(body.rfind("+"), body.rfind("-"))
            if k > 0:
                re_part, im_part = body[:k], body[k:]
            else:
                re_part, im_part = "", body
            try:
                re_v = Fraction(re_part) if re_part else Fraction(0)
                im_v = _parse_part(im_part, True)
            except (ValueError, ZeroDivisionError):
                raise ValueError("bad scalar literal %r" % text)
            return Exact(re_v, im_v)
        try:
            return Exact(Fraction(t))
        except (ValueError, ZeroDivisionError):
            raise ValueError("bad scalar literal %r" % text)
    try:
        return Approx(complex(t.replace("i", "j")))
    except ValueError:
        raise ValueError("bad scalar literal %r" % text)


def _fmt_frac(q):
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _fmt_float(x):
    s = format(x, ".17g")
    if s == "-0":
        s = "0"
    return s


def format_scalar(s):
    """Stable text form: exact `p/q+r/si`, approximate 17 significant digits."""
    s = scalar(s)
    if isinstance(s, Exact):
        re_, im = s.real, s.imag
        if im == 0:
            return _fmt_frac(re_)
        if im == 1:
            ims = "i"
        elif im == -1:
            ims = "-i"
        else:
            ims = _fmt_frac(im) + "i"
        if re_ == 0:
            return ims
        return _fmt_frac(re_) + ("" if ims.startswith("-") else "+") + ims
    z = s.z
    if abs(z.imag) <= 0.0:
        return _fmt_float(z.real)
    im = _fmt_float(z.imag)
    return _fmt_float(z.real) + ("" if im.startswith("-") else "+") + im + "i"
