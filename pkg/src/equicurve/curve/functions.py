"""Elements a(x) + b(x) y of the function field k(x, y)."""

from __future__ import annotations

from ..algebra import FieldElement, Poly, RatFunc
from ..errors import ZeroFunction
from .model import HyperellipticModel


def _rf(model: HyperellipticModel, v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, Poly):
        return RatFunc(v)
    return RatFunc.const(model.field, v)


class FunctionRep:
    """u = a + b y with a, b in k(x); arithmetic reduces with y^2 = h y + f."""

    __slots__ = ("model", "a", "b")

    def __init__(self, model: HyperellipticModel, a=0, b=0):
        self.model = model
        self.a = _rf(model, a)
        self.b = _rf(model, b)

    # -- constructors --
    @classmethod
    def x(cls, model: HyperellipticModel) -> "FunctionRep":
        return cls(model, RatFunc.x(model.field))

    @classmethod
    def y(cls, model: HyperellipticModel) -> "FunctionRep":
        return cls(model, 0, 1)

    @classmethod
    def const(cls, model: HyperellipticModel, c) -> "FunctionRep":
        return cls(model, c)

    @classmethod
    def from_poly(cls, model: HyperellipticModel, a: Poly, b: Poly | None = None) -> "FunctionRep":
        return cls(model, a, b if b is not None else 0)

    # -- predicates --
    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement, Poly, RatFunc)):
            other = FunctionRep(self.model, other)
        return isinstance(other, FunctionRep) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        if self.b.is_zero():
            return f"FunctionRep({self.a})"
        if self.a.is_zero():
            return f"FunctionRep(({self.b})*y)"
        return f"FunctionRep({self.a} + ({self.b})*y)"

    # -- arithmetic --
    def _lift(self, other) -> "FunctionRep":
        if isinstance(other, FunctionRep):
            return other
        return FunctionRep(self.model, other)

    def __add__(self, other):
        o = self._lift(other)
        return FunctionRep(self.model, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FunctionRep(self.model, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        h, f = RatFunc(self.model.hpoly), RatFunc(self.model.f)
        bb = self.b * o.b
        # (a + b y)(c + d y) = ac + bd f + (ad + bc + bd h) y
        return FunctionRep(self.model, self.a * o.a + bb * f, self.a * o.b + self.b * o.a + bb * h)

    __rmul__ = __mul__

    def conj(self) -> "FunctionRep":
        """Image under the hyperelliptic involution y -> h - y."""
        return FunctionRep(self.model, self.a + self.b * RatFunc(self.model.hpoly), -self.b)

    def norm(self) -> RatFunc:
        """u * conj(u) = a^2 + a b h - b^2 f, an element of k(x)."""
        h, f = RatFunc(self.model.hpoly), RatFunc(self.model.f)
        return self.a * self.a + self.a * self.b * h - self.b * self.b * f

    def inverse(self) -> "FunctionRep":
        if self.is_zero():
            raise ZeroFunction("inverse of zero")
        n = self.norm()
        c = self.conj()
        return FunctionRep(self.model, c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = FunctionRep(self.model, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def common_denominator(self) -> Poly:
        """Monic lcm of the denominators of a and b."""
        da, db = self.a.den, self.b.den
        from ..algebra import poly_gcd

        return (da * db).exact_div(poly_gcd(da, db)).monic()

    def map_field(self, model: HyperellipticModel, embed) -> "FunctionRep":
        big = model.field
        return FunctionRep(model, self.a.map_field(embed, big), self.b.map_field(embed, big))
