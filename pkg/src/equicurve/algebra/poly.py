"""Univariate polynomials and rational functions over a :class:`FieldSpec`."""

from __future__ import annotations

from functools import reduce

from ..errors import FieldMismatch, ZeroPolynomial
from .field import FieldElement, FieldSpec, lcm


def _code(field: FieldSpec, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise FieldMismatch(f"{c!r} not in {field}")
        return c.code
    return int(c)


class Poly:
    """Dense polynomial, coefficients stored as field codes in ascending degree."""

    __slots__ = ("field", "c")

    def __init__(self, field: FieldSpec, coeffs=()):
        c = [_code(field, x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.c = tuple(c)

    @classmethod
    def _raw(cls, field: FieldSpec, c: list[int]) -> "Poly":
        while c and c[-1] == 0:
            c.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.c = tuple(c)
        return obj

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls._raw(field, [0, 1])

    @classmethod
    def const(cls, field: FieldSpec, value) -> "Poly":
        code = field(value).code if isinstance(value, int) else _code(field, value)
        return cls._raw(field, [code])

    @classmethod
    def from_ints(cls, field: FieldSpec, ints) -> "Poly":
        """Integers are read as integers (reduced mod p), not as field codes."""
        return cls._raw(field, [field.from_int(int(n)) for n in ints])

    @classmethod
    def from_roots(cls, field: FieldSpec, roots) -> "Poly":
        out = cls.const(field, 1)
        for r in roots:
            out = out * cls._raw(field, [field.neg(_code(field, r)), 1])
        return out

    # -- basic properties --
    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.c]

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    @property
    def lc(self) -> FieldElement:
        if not self.c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.c[-1])

    def coeff(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.c[i] if 0 <= i < len(self.c) else 0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.c == other.c
        if isinstance(other, (int, FieldElement)):
            return self == Poly.const(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.c))

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, c in enumerate(self.c):
            if c:
                coef = "" if (c == 1 and i) else str(c)
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(coef + ("*" if coef and mono else "") + mono)
        return " + ".join(reversed(terms))

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly.const(self.field, other)
        return NotImplemented

    # -- ring operations --
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F = self.field
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = F.add(out[i], y)
        return Poly._raw(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(F, [F.neg(x) for x in self.c])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F = self.field
        a, b = self.c, other.c
        if not a or not b:
            return Poly._raw(F, [])
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(F, out)

    __rmul__ = __mul__

    def scale(self, s) -> "Poly":
        F = self.field
        s = F(s).code if isinstance(s, int) else _code(F, s)
        return Poly._raw(F, [F.mul(s, x) for x in self.c])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        a = list(self.c)
        db = other.deg
        inv_lc = F.inv(other.c[-1])
        if len(a) - 1 < db:
            return Poly._raw(F, []), self
        quot = [0] * (len(a) - db)
        bc = other.c
        for shift in range(len(a) - 1 - db, -1, -1):
            coef = F.mul(a[shift + db], inv_lc)
            quot[shift] = coef
            if coef:
                for i, y in enumerate(bc):
                    a[shift + i] = F.sub(a[shift + i], F.mul(coef, y))
        return Poly._raw(F, quot), Poly._raw(F, a[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        F = self.field
        inv = F.inv(self.c[-1])
        return Poly._raw(F, [F.mul(inv, x) for x in self.c])

    def derivative(self) -> "Poly":
        F = self.field
        return Poly._raw(F, [F.mul(F.from_int(i), x) for i, x in enumerate(self.c)][1:])

    def __call__(self, point):
        F = self.field
        x = _code(F, point) if not isinstance(point, int) else F.from_int(point)
        acc = 0
        for c in reversed(self.c):
            acc = F.add(F.mul(acc, x), c)
        return FieldElement(F, acc)

    def compose(self, other: "Poly") -> "Poly":
        result = Poly._raw(self.field, [])
        for c in reversed(self.c):
            result = result * other + Poly._raw(self.field, [c])
        return result

    def taylor(self, point, n: int | None = None) -> list[int]:
        """Codes of the coefficients of f(point + s) in s (first ``n`` of them)."""
        F = self.field
        a = _code(F, point)
        c = list(self.c)
        out = []
        limit = len(c) if n is None else min(n, len(c))
        # repeated synthetic division by (x - a)
        for _ in range(limit):
            if not c:
                break
            acc = 0
            nxt = [0] * (len(c) - 1)
            for i in range(len(c) - 1, -1, -1):
                acc = F.add(F.mul(acc, a), c[i])
                if i:
                    nxt[i - 1] = acc
            out.append(acc)
            c = nxt
        if n is not None:
            out.extend([0] * (n - len(out)))
        return out

    def valuation_at(self, point) -> int:
        """Multiplicity of ``point`` as a root (the order of vanishing)."""
        if self.is_zero():
            raise ZeroPolynomial("valuation of the zero polynomial")
        F = self.field
        a = _code(F, point)
        lin = Poly._raw(F, [F.neg(a), 1])
        v, f = 0, self
        while True:
            q, r = divmod(f, lin)
            if not r.is_zero():
                return v
            v, f = v + 1, q

    def reversed_poly(self, n: int) -> "Poly":
        """t^n f(1/t); requires n >= deg f."""
        if self.deg > n:
            raise ValueError("reversal degree below polynomial degree")
        c = [0] * (n + 1)
        for i, x in enumerate(self.c):
            c[n - i] = x
        return Poly._raw(self.field, c)

    def map_field(self, embed, big: FieldSpec) -> "Poly":
        return Poly._raw(big, [embed(x) for x in self.c])

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly.const(self.field, 1)
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            e >>= 1
        return result

    def roots(self) -> list[tuple[FieldElement, int]]:
        """Roots in the coefficient field with multiplicities, sorted by code."""
        if self.is_zero():
            raise ZeroPolynomial("roots of the zero polynomial")
        F = self.field
        if self.deg <= 0:
            return []
        x = Poly.x(F)
        g = poly_gcd(self, x.powmod(F.q, self) - x)
        found = _split_linear(g)
        out = []
        for r in sorted(found, key=lambda e: e.code):
            out.append((r, self.valuation_at(r)))
        return out

    def factor_degrees(self) -> list[int]:
        """Degrees of the distinct irreducible factors (one entry per factor)."""
        if self.is_zero():
            raise ZeroPolynomial("factor degrees of the zero polynomial")
        F = self.field
        rem = self.monic()
        x = Poly.x(F)
        degrees = []
        i = 0
        while rem.deg > 0:
            i += 1
            # factors of degree < i are gone, so g is the product of the degree-i ones
            g = poly_gcd(rem, x.powmod(F.q**i, rem) - x)
            if g.deg > 0:
                degrees.extend([i] * (g.deg // i))
                while True:
                    h = poly_gcd(rem, g)
                    if h.deg <= 0:
                        break
                    rem = rem.exact_div(h)
        return degrees

    def splitting_degree(self) -> int:
        """Smallest d such that the polynomial splits into linear factors over GF(q^d)."""
        if self.is_zero():
            raise ZeroPolynomial("splitting degree of the zero polynomial")
        return reduce(lcm, self.factor_degrees(), 1)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (the zero polynomial only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_squarefree(f: Poly) -> bool:
    """True iff f has no repeated roots over the algebraic closure."""
    if f.is_zero():
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    return poly_gcd(f, f.derivative()).deg == 0


def _split_linear(g: Poly) -> list[FieldElement]:
    """Roots of a monic squarefree product of distinct linear factors."""
    F = g.field
    if g.deg <= 0:
        return []
    if g.deg == 1:
        return [FieldElement(F, F.neg(F.mul(g.c[0], F.inv(g.c[1]))))]
    x = Poly.x(F)
    for d in range(F.q):
        shifted = x + FieldElement(F, d)
        if F.p == 2:
            # absolute trace of (d + x) * basis element, done with each basis element a^j
            for j in range(F.k):
                a = Poly.const(F, FieldElement(F, F.pow(F.primitive_code(), j) if F.k > 1 else 1))
                term = (shifted * a) % g
                acc = term
                for _ in range(F.k - 1):
                    term = (term * term) % g
                    acc = acc + term
                h = poly_gcd(g, acc)
                if 0 < h.deg < g.deg:
                    return _split_linear(h) + _split_linear(g.exact_div(h))
        else:
            h = poly_gcd(g, shifted.powmod((F.q - 1) // 2, g) - 1)
            if 0 < h.deg < g.deg:
                return _split_linear(h) + _split_linear(g.exact_div(h))
    # exhaustive fallback, only reachable for tiny fields
    return [e for e in F.elements() if g(e).code == 0]  # pragma: no cover


class RatFunc:
    """Rational function num/den in reduced form with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, _reduced: bool = False):
        if den is None:
            den = Poly.const(num.field, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly.const(num.field, 1)
            else:
                g = poly_gcd(num, den)
                if g.deg > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc
            if lc.code != 1:
                inv = lc.inverse()
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def field(self) -> FieldSpec:
        return self.num.field

    @classmethod
    def const(cls, field: FieldSpec, value) -> "RatFunc":
        return cls(Poly.const(field, value), _reduced=True)

    @classmethod
    def x(cls, field: FieldSpec) -> "RatFunc":
        return cls(Poly.x(field), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.deg == 0

    def _lift(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other, _reduced=True)
        if isinstance(other, (int, FieldElement)):
            return RatFunc.const(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e, _reduced=True)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return f"({self.num})/({self.den})"

    def compose(self, inner: Poly) -> "RatFunc":
        return RatFunc(self.num.compose(inner), self.den.compose(inner))

    def map_field(self, embed, big: FieldSpec) -> "RatFunc":
        return RatFunc(self.num.map_field(embed, big), self.den.map_field(embed, big), _reduced=True)

    def valuation_at(self, point) -> int:
        if self.is_zero():
            raise ZeroPolynomial("valuation of zero")
        return self.num.valuation_at(point) - self.den.valuation_at(point)

    def valuation_at_infinity(self) -> int:
        if self.is_zero():
            raise ZeroPolynomial("valuation of zero")
        return self.den.deg - self.num.deg

    def __call__(self, point) -> FieldElement:
        d = self.den(point)
        if not d:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num(point) / d
