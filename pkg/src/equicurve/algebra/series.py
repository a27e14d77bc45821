"""Truncated Laurent/power series with pessimistic precision tracking.

A series is ``sum_{i>=start} c_i t^i`` known modulo ``t^prec``.  ``start`` is
0 for ordinary power series.
"""

from __future__ import annotations

from ..errors import NoSimpleRoot, PrecisionExhausted
from .field import FieldElement, FieldSpec
from .poly import Poly, RatFunc


class PowerSeries:
    __slots__ = ("field", "start", "coeffs", "prec")

    def __init__(self, field: FieldSpec, coeffs, prec: int, start: int = 0):
        c = [x.code if isinstance(x, FieldElement) else int(x) for x in coeffs]
        keep = max(0, prec - start)
        c = c[:keep]
        # strip leading zeros into the offset so start is the true valuation when known
        while c and c[0] == 0:
            c.pop(0)
            start += 1
        self.field = field
        self.start = start
        self.coeffs = tuple(c)
        self.prec = prec

    @classmethod
    def from_poly(cls, f: Poly, prec: int) -> "PowerSeries":
        return cls(f.field, f.c, prec)

    def coeff(self, i: int) -> int:
        """Code of the t^i coefficient; errors beyond the known precision."""
        if i >= self.prec:
            raise PrecisionExhausted(f"coefficient t^{i} unknown (precision {self.prec})")
        j = i - self.start
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def valuation(self) -> int | None:
        """Exact valuation, or None if every known coefficient vanishes."""
        return self.start if self.coeffs else None

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        F = self.field
        prec = min(self.prec, other.prec)
        lo = min(self.start, other.start)
        out = [0] * max(0, prec - lo)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.start + i - lo
                if k < len(out):
                    out[k] = F.add(out[k], c)
        return PowerSeries(F, out, prec, lo)

    def __neg__(self) -> "PowerSeries":
        F = self.field
        return PowerSeries(F, [F.neg(c) for c in self.coeffs], self.prec, self.start)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return self + (-other)

    def __mul__(self, other) -> "PowerSeries":
        F = self.field
        if isinstance(other, (int, FieldElement)):
            s = F(other).code if isinstance(other, int) else other.code
            return PowerSeries(F, [F.mul(s, c) for c in self.coeffs], self.prec, self.start)
        # exact zeros are not representable, so the unknown tail of each factor bounds precision
        va = self.start if self.coeffs else self.prec
        vb = other.start if other.coeffs else other.prec
        prec = min(va + other.prec, vb + self.prec)
        lo = self.start + other.start
        n = max(0, prec - lo)
        out = [0] * n
        a, b = self.coeffs, other.coeffs
        for i, x in enumerate(a):
            if not x or i >= n:
                continue
            for j, y in enumerate(b):
                if i + j >= n:
                    break
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return PowerSeries(F, out, prec, lo)

    __rmul__ = __mul__

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by t^k."""
        return PowerSeries(self.field, self.coeffs, self.prec + k, self.start + k)

    def truncate(self, prec: int) -> "PowerSeries":
        return PowerSeries(self.field, self.coeffs, min(prec, self.prec), self.start)

    def inverse(self) -> "PowerSeries":
        """1/s for a series whose valuation is known."""
        if not self.coeffs:
            raise PrecisionExhausted("cannot invert a series with unknown valuation")
        F = self.field
        v = self.start
        rel = self.prec - v  # relative precision of the unit part
        u = self.coeffs
        inv0 = F.inv(u[0])
        out = [inv0]
        for n in range(1, rel):
            acc = 0
            for i in range(1, min(n, len(u) - 1) + 1):
                acc = F.add(acc, F.mul(u[i], out[n - i]))
            out.append(F.neg(F.mul(acc, inv0)))
        return PowerSeries(F, out, rel - v, -v)

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        return self * other.inverse()

    def __repr__(self):
        terms = [f"{c}*t^{self.start + i}" for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(terms) or "0") + f" + O(t^{self.prec})"


def expand_ratfunc(r: RatFunc, point, prec: int) -> PowerSeries:
    """Laurent expansion of r at x = point (t = x - point), or at infinity (t = 1/x)
    when ``point`` is None, correct modulo t^prec."""
    F = r.field
    if r.is_zero():
        return PowerSeries(F, [], prec)
    if point is None:
        dn, dd = r.num.deg, r.den.deg
        v = dd - dn
        rel = max(prec - v, 0)
        num = PowerSeries(F, r.num.reversed_poly(dn).c, rel)
        den = PowerSeries(F, r.den.reversed_poly(dd).c, rel)
        return (num / den).shift(v) if rel else PowerSeries(F, [], prec)
    vn = r.num.valuation_at(point)
    vd = r.den.valuation_at(point)
    v = vn - vd
    rel = max(prec - v, 0)
    if rel == 0:
        return PowerSeries(F, [], prec)
    num = r.num.taylor(point, vn + rel)[vn:]
    den = r.den.taylor(point, vd + rel)[vd:]
    q = PowerSeries(F, num, rel) / PowerSeries(F, den, rel)
    return q.shift(v)


def series_quadratic_root(h: PowerSeries, s: PowerSeries, init) -> PowerSeries:
    """The root z of z^2 - h z = s with z(0) = init, lifted coefficient by coefficient.

    Requires h, s to be power series and init a simple residue root
    (2*init - h(0) != 0); raises NoSimpleRoot otherwise.
    """
    F = s.field
    z0 = init.code if isinstance(init, FieldElement) else int(init)
    prec = min(s.prec, h.prec)
    if prec <= 0:
        return PowerSeries(F, [], 0)
    h0, s0 = h.coeff(0), s.coeff(0)
    residue = F.sub(F.sub(F.mul(z0, z0), F.mul(h0, z0)), s0)
    if residue != 0:
        raise NoSimpleRoot("initial value is not a root of the residue equation")
    deriv = F.sub(F.mul(F.from_int(2), z0), h0)
    if deriv == 0:
        raise NoSimpleRoot("residue root is not simple")
    dinv = F.inv(deriv)
    z = [z0]
    hc = [h.coeff(i) for i in range(prec)]
    sc = [s.coeff(i) for i in range(prec)]
    for n in range(1, prec):
        acc = sc[n]
        for i in range(1, n):
            acc = F.sub(acc, F.mul(z[i], z[n - i]))
        for i in range(1, n + 1):
            acc = F.add(acc, F.mul(hc[i], z[n - i]))
        z.append(F.mul(acc, dinv))
    return PowerSeries(F, z, prec)


def series_sqrt(s: PowerSeries, init) -> PowerSeries:
    """Square root of s with constant term init (odd characteristic)."""
    F = s.field
    if F.p == 2:
        raise NoSimpleRoot("square roots are never simple in characteristic 2")
    if s.prec > 0 and s.coeff(0) == 0:
        raise NoSimpleRoot("s(0) = 0: the square root is not a power series unit")
    return series_quadratic_root(PowerSeries(F, [], s.prec), s, init)


def series_artin_schreier_root(s: PowerSeries, h: PowerSeries, init) -> PowerSeries:
    """Root of z^2 - h z = s with z(0) = init (requires h(0) != 0 in characteristic 2)."""
    return series_quadratic_root(h, s, init)
