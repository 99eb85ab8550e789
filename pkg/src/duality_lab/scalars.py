"""Exact scalar arithmetic for the symbolic layer.

Two small field-like types:

* GRat   -- Gaussian rationals p + q*i with Fraction components.
* QSqrt  -- elements a + b*sqrt(s) with GRat components a, b and a fixed
            rational s > 0 that is not a perfect square.

Both are immutable, support +, -, *, /, conjugation and exact equality,
and promote to Python complex when mixed with floats.  All exact-mode
residuals in the package are computed in these types, so "residual is
zero" means zero, not small.
"""

from fractions import Fraction


def _is_rationalish(x):
    return isinstance(x, (int, Fraction))


class GRat:
    """Gaussian rational p + q*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *a):
        raise AttributeError("GRat is immutable")

    # -- coercion ----------------------------------------------------------

    @staticmethod
    def of(x):
        if isinstance(x, GRat):
            return x
        if _is_rationalish(x):
            return GRat(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to GRat")

    def __complex__(self):
        return float(self.re) + 1j * float(self.im)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QSqrt):
            return other == self
        if isinstance(other, (complex, float)):
            return complex(self) == other
        try:
            other = GRat.of(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QSqrt):
            return other + self
        if isinstance(other, (complex, float)):
            return complex(self) + other
        other = GRat.of(other)
        return GRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GRat(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-other if not isinstance(other, (complex, float)) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSqrt):
            return other * self
        if isinstance(other, (complex, float)):
            return complex(self) * other
        other = GRat.of(other)
        return GRat(self.re * other.re - self.im * other.im,
                    self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSqrt):
            return QSqrt(self, GRat(), other.s) / other
        if isinstance(other, (complex, float)):
            return complex(self) / other
        other = GRat.of(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero GRat")
        return GRat((self.re * other.re + self.im * other.im) / d,
                    (self.im * other.re - self.re * other.im) / d)

    def __rtruediv__(self, other):
        return GRat.of(other) / self

    def conjugate(self):
        return GRat(self.re, -self.im)

    def __repr__(self):
        if self.im == 0:
            return f"GRat({self.re})"
        return f"GRat({self.re}, {self.im})"


I_UNIT = GRat(0, 1)
ONE = GRat(1)
ZERO = GRat(0)


class QSqrt:
    """Element a + b*sqrt(s) of the quadratic extension Q(i)[sqrt(s)].

    s must be a positive rational that is not the square of a rational;
    under that assumption (a, b) components compare exactly.
    """

    __slots__ = ("a", "b", "s")

    def __init__(self, a=0, b=0, s=2):
        object.__setattr__(self, "a", GRat.of(a) if not isinstance(a, GRat) else a)
        object.__setattr__(self, "b", GRat.of(b) if not isinstance(b, GRat) else b)
        object.__setattr__(self, "s", Fraction(s))
        if self.s <= 0:
            raise ValueError("adjoined square must be positive")

    def __setattr__(self, *a):
        raise AttributeError("QSqrt is immutable")

    def _coerce(self, other):
        if isinstance(other, QSqrt):
            if other.s != self.s:
                raise ValueError("mixed QSqrt extensions")
            return other
        return QSqrt(GRat.of(other), GRat(), self.s)

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) == other
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, self.s))

    def __complex__(self):
        return complex(self.a) + complex(self.b) * float(self.s) ** 0.5

    def __add__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) + other
        other = self._coerce(other)
        return QSqrt(self.a + other.a, self.b + other.b, self.s)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt(-self.a, -self.b, self.s)

    def __sub__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) - other
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) * other
        other = self._coerce(other)
        return QSqrt(self.a * other.a + self.b * other.b * GRat(self.s),
                     self.a * other.b + self.b * other.a, self.s)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) / other
        other = self._coerce(other)
        # rationalize: 1/(a + b sqrt s) = (a - b sqrt s)/(a^2 - b^2 s)
        d = other.a * other.a - other.b * other.b * GRat(other.s)
        if d.is_zero():
            raise ZeroDivisionError("division by zero QSqrt")
        num = self * QSqrt(other.a, -other.b, self.s)
        return QSqrt(num.a / d, num.b / d, self.s)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def conjugate(self):
        # complex conjugation; sqrt(s) is real
        return QSqrt(self.a.conjugate(), self.b.conjugate(), self.s)

    def __repr__(self):
        return f"QSqrt({self.a!r}, {self.b!r}, s={self.s})"


def conj(x):
    """Complex conjugate across all supported scalar types."""
    if isinstance(x, (GRat, QSqrt, complex)):
        return x.conjugate()
    if _is_rationalish(x):
        return x
    if isinstance(x, float):
        return x
    raise TypeError(f"no conjugate for {type(x).__name__}")


def is_zero(x):
    if isinstance(x, (GRat, QSqrt)):
        return x.is_zero()
    return x == 0


def to_complex(x):
    if isinstance(x, (GRat, QSqrt)):
        return complex(x)
    return complex(x)


def parse_rational(text):
    """Parse 'p/q' or 'p' into an exact Fraction.

    Used by the CLI so parameters like 3/4 stay exact end to end.
    """
    return Fraction(str(text).strip())


def solve_linear(mat, rhs):
    """Solve a small square exact linear system by Gauss-Jordan.

    mat: list of rows of scalars (GRat/QSqrt/Fraction), rhs: list of rows
    (each a list, so multiple right-hand sides solve at once).  Returns
    the solution rows.  Raises ValueError on a singular matrix.
    """
    n = len(mat)
    a = [list(row) for row in mat]
    b = [list(row) for row in rhs]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not is_zero(a[r][col]):
                piv = r
                break
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        b[col] = [x / inv for x in b[col]]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if is_zero(f):
                continue
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            b[r] = [x - f * y for x, y in zip(b[r], b[col])]
    return b
