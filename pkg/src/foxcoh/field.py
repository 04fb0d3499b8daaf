"""Exact arithmetic in F = Q(sqrt3, sqrt5) and in the quaternions over F.

An element of F is stored as four integer numerators over one common
positive denominator, with respect to the basis (1, sqrt3, sqrt5, sqrt15).
The rational coordinates are exposed as :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Rational = Fraction

# (e_a * e_b) = coeff * e_c for the basis 1, sqrt3, sqrt5, sqrt15
_SQUARES = (1, 3, 5, 15)


def _normalize(nums, den):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        nums = [-n for n in nums]
        den = -den
    g = den
    for n in nums:
        if n:
            g = gcd(g, n)
            if g == 1:
                break
    if not any(nums):
        return (0, 0, 0, 0), 1
    if g != 1:
        nums = [n // g for n in nums]
        den //= g
    return tuple(nums), den


class FieldElement:
    """Element c0 + c1*sqrt3 + c2*sqrt5 + c3*sqrt15 of F."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        coords = [Fraction(c) for c in (c0, c1, c2, c3)]
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in coords]
        self._n, self._d = _normalize(nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, nums, den):
        obj = object.__new__(cls)
        obj._n, obj._d = _normalize(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to FieldElement")

    # coordinates

    @property
    def c0(self) -> Fraction:
        return Fraction(self._n[0], self._d)

    @property
    def c1(self) -> Fraction:
        return Fraction(self._n[1], self._d)

    @property
    def c2(self) -> Fraction:
        return Fraction(self._n[2], self._d)

    @property
    def c3(self) -> Fraction:
        return Fraction(self._n[3], self._d)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(n, self._d) for n in self._n)

    def is_zero(self) -> bool:
        return self._n == (0, 0, 0, 0)

    def is_rational(self) -> bool:
        return self._n[1] == self._n[2] == self._n[3] == 0

    def __bool__(self):
        return not self.is_zero()

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._d))
            else:
                self._hash = hash((self._n, self._d))
        return self._hash

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    # arithmetic

    def __neg__(self):
        return FieldElement._raw([-n for n in self._n], self._d)

    def __add__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b = self._d, other._d
        if a == b:
            return FieldElement._raw([x + y for x, y in zip(self._n, other._n)], a)
        return FieldElement._raw(
            [x * b + y * a for x, y in zip(self._n, other._n)], a * b
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement._raw([n * other for n in self._n], self._d)
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = other._n
        c0 = a0 * b0 + 3 * a1 * b1 + 5 * a2 * b2 + 15 * a3 * b3
        c1 = a0 * b1 + a1 * b0 + 5 * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + 3 * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return FieldElement._raw([c0, c1, c2, c3], self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        """Multiplicative inverse, via the two quadratic norms."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F")
        n0, n1, n2, n3 = self._n
        # self * den = u + v*sqrt5 with u = n0 + n1 sqrt3, v = n2 + n3 sqrt3
        # (u + v sqrt5)(u - v sqrt5) = s + t sqrt3
        s = n0 * n0 + 3 * n1 * n1 - 5 * (n2 * n2 + 3 * n3 * n3)
        t = 2 * n0 * n1 - 10 * n2 * n3
        norm = s * s - 3 * t * t
        # (u - v sqrt5)(s - t sqrt3)
        conj = FieldElement._raw([n0, n1, -n2, -n3], 1)
        other = FieldElement._raw([s, -t, 0, 0], 1)
        prod = conj * other
        return FieldElement._raw([n * self._d for n in prod._n], prod._d * norm)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero in F")
            return FieldElement._raw(list(self._n), self._d * other)
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElement.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # real embedding

    def sign(self) -> int:
        """Exact sign under sqrt3 ~ 1.732, sqrt5 ~ 2.236.

        Brackets each irrational by dyadic rationals and doubles the
        precision until the enclosing interval excludes zero.
        """
        if self.is_zero():
            return 0
        n0, n1, n2, n3 = self._n
        if not (n1 or n2 or n3):
            return 1 if n0 > 0 else -1
        bits = 16
        while True:
            scale = 1 << bits
            lo = hi = n0 * scale
            for n, sq in ((n1, 3), (n2, 5), (n3, 15)):
                if not n:
                    continue
                r = isqrt(sq << (2 * bits))  # r <= sqrt(sq) * scale < r + 1
                if n > 0:
                    lo += n * r
                    hi += n * (r + 1)
                else:
                    lo += n * (r + 1)
                    hi += n * r
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def approx(self) -> float:
        """Floating point value; for display and debugging only."""
        return float(
            self.c0 + self.c1 * 3**0.5 + self.c2 * 5**0.5 + self.c3 * 15**0.5
        )

    def __repr__(self):
        return f"FieldElement({', '.join(str(c) for c in self.coords)})"

    def __str__(self):
        from .entry import format_field

        return format_field(self)


ZERO = FieldElement(0)
ONE = FieldElement(1)
SQRT3 = FieldElement(0, 1)
SQRT5 = FieldElement(0, 0, 1)
SQRT15 = FieldElement(0, 0, 0, 1)


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def field_sign(a: FieldElement) -> int:
    return a.sign()


class Quaternion:
    """w + x i + y j + z k with coefficients in F, using ij = k."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=ZERO, x=ZERO, y=ZERO, z=ZERO):
        self.w = FieldElement.coerce(w)
        self.x = FieldElement.coerce(x)
        self.y = FieldElement.coerce(y)
        self.z = FieldElement.coerce(z)

    @classmethod
    def coerce(cls, value) -> Quaternion:
        if isinstance(value, Quaternion):
            return value
        return cls(FieldElement.coerce(value))

    @property
    def parts(self):
        return (self.w, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.parts)

    def is_complex(self) -> bool:
        return self.y.is_zero() and self.z.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __add__(self, other):
        other = Quaternion.coerce(other)
        return Quaternion(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Quaternion.coerce(other))

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return Quaternion(*(c * other for c in self.parts))
        if not isinstance(other, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.parts
        a2, b2, c2, d2 = other.parts
        if self.is_complex() and other.is_complex():
            return Quaternion(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2)
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        # scalars from F are central
        if isinstance(other, (int, Fraction, FieldElement)):
            return self * other
        return NotImplemented

    def conjugate(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> FieldElement:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> Quaternion:
        n = self.norm2()
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero quaternion")
        inv = n.inverse()
        return Quaternion(*(c * inv for c in self.conjugate().parts))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self * FieldElement.coerce(other).inverse()
        return self * Quaternion.coerce(other).inverse()

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self):
        from .entry import format_quaternion

        return format_quaternion(self)


QZERO = Quaternion()
QONE = Quaternion(ONE)
QI = Quaternion(ZERO, ONE)
QJ = Quaternion(ZERO, ZERO, ONE)
QK = Quaternion(ZERO, ZERO, ZERO, ONE)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def quat_inv(q: Quaternion) -> Quaternion:
    return q.inverse()
