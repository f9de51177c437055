"""Half-planes ``a*x + b*y <= bound`` (or ``<`` when open) with integer normals."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

from scramble_attack.errors import InvalidParametersError
from scramble_attack.exact_geometry.lattice_sums import floor_sum

Number = int | Fraction


@dataclass(frozen=True, order=True)
class HalfPlane:
    """``{(x, y) : a*x + b*y <= bound}``, strict when ``closed`` is false.

    Build through ``make``/``at_least`` so ``(a, b)`` is a primitive integer vector; equal
    half-planes then compare equal.
    """

    a: int
    b: int
    bound: Fraction
    closed: bool = True

    def __post_init__(self) -> None:
        if self.a == 0 and self.b == 0:
            raise InvalidParametersError("a half-plane needs a nonzero normal (a, b)")

    @classmethod
    def make(cls, a: Number, b: Number, bound: Number, closed: bool = True) -> "HalfPlane":
        """``a*x + b*y <= bound``, normalised."""
        a, b, bound = Fraction(a), Fraction(b), Fraction(bound)
        scale = lcm(a.denominator, b.denominator)
        ia, ib = int(a * scale), int(b * scale)
        g = gcd(ia, ib)
        if g == 0:
            raise InvalidParametersError("a half-plane needs a nonzero normal (a, b)")
        return cls(ia // g, ib // g, bound * scale / g, closed)

    @classmethod
    def at_least(cls, a: Number, b: Number, bound: Number, closed: bool = True) -> "HalfPlane":
        """``a*x + b*y >= bound``, stored as its negation."""
        return cls.make(-Fraction(a), -Fraction(b), -Fraction(bound), closed)

    def evaluate(self, x: Number, y: Number) -> Fraction:
        """``a*x + b*y - bound``; non-positive inside the closure."""
        return self.a * Fraction(x) + self.b * Fraction(y) - self.bound

    def side(self, x: Rational, y: Rational) -> int:
        """Sign of ``evaluate(x, y)`` without building fractions."""
        xn, xd = x.numerator, x.denominator
        yn, yd = y.numerator, y.denominator
        bn, bd = self.bound.numerator, self.bound.denominator
        value = (self.a * xn * yd + self.b * yn * xd) * bd - bn * xd * yd
        return (value > 0) - (value < 0)

    def contains(self, x: Rational, y: Rational) -> bool:
        s = self.side(x, y)
        return s < 0 or (s == 0 and self.closed)

    def translate(self, dx: int, dy: int) -> "HalfPlane":
        return HalfPlane(self.a, self.b, self.bound + self.a * dx + self.b * dy, self.closed)

    def x_at(self, y: Fraction) -> Fraction:
        """Abscissa of the boundary line at ordinate ``y``; needs ``a != 0``."""
        return (self.bound - self.b * y) / self.a

    # row scans below: the constraint restricts integer x on integer row y

    def row_holds(self, y: int) -> bool:
        """For horizontal boundaries (``a == 0``): whether row ``y`` is inside."""
        lhs = self.b * y * self.bound.denominator
        return lhs <= self.bound.numerator if self.closed else lhs < self.bound.numerator

    def x_upper(self, y: int) -> int:
        """Largest integer x allowed on row ``y``; needs ``a > 0``."""
        n, d = self.bound.numerator, self.bound.denominator
        return (n - self.b * d * y - (0 if self.closed else 1)) // (self.a * d)

    def x_lower(self, y: int) -> int:
        """Smallest integer x allowed on row ``y``; needs ``a < 0``."""
        n, d = self.bound.numerator, self.bound.denominator
        u, v = self.b * d * y - n, -self.a * d
        return -(-u // v) if self.closed else u // v + 1

    def sum_x_upper(self, y0: int, count: int) -> int:
        """``sum(x_upper(y) for y in range(y0, y0 + count))`` in logarithmic time."""
        n, d = self.bound.numerator, self.bound.denominator
        offset = n - self.b * d * y0 - (0 if self.closed else 1)
        return floor_sum(count, self.a * d, -self.b * d, offset)

    def sum_x_lower(self, y0: int, count: int) -> int:
        """``sum(x_lower(y) for y in range(y0, y0 + count))`` in logarithmic time."""
        n, d = self.bound.numerator, self.bound.denominator
        v = -self.a * d
        if self.closed:
            return floor_sum(count, v, self.b * d, self.b * d * y0 - n + v - 1)
        return floor_sum(count, v, self.b * d, self.b * d * y0 - n) + count
