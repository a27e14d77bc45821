"""Valuations, local expansions and divisors of functions.

At ramified and inert places the valuation of a + b y follows from the
valuations of a and b on the x-line (the two terms cannot cancel).  At split
places y is Hensel-lifted to a power series in the local parameter and the
expansion of u is examined directly.
"""

from __future__ import annotations

from ..algebra import FieldElement, Poly, PowerSeries, RatFunc, expand_ratfunc, series_quadratic_root
from ..errors import NeedsExtension, PrecisionExhausted, ZeroFunction
from .functions import FunctionRep
from .model import HyperellipticModel
from .places import FIN_INERT, FIN_RAM, FIN_SPLIT, INF_INERT, INF_RAM, INF_SPLIT, Divisor, Place, places_over


def _v_at(r: RatFunc, a: int | None) -> int | None:
    """Valuation on the x-line at a (None = infinity); None for the zero function."""
    if r.is_zero():
        return None
    if a is None:
        return r.valuation_at_infinity()
    return r.valuation_at(a)


def _vmin(*vals):
    vals = [v for v in vals if v is not None]
    return min(vals)


def y_series(model: HyperellipticModel, P: Place, prec: int) -> PowerSeries:
    """Expansion of y at a finite split place (t = x - a), or of w = y / x^(g+1)
    at an infinite split place (t = 1/x), modulo t^prec."""
    F = model.field
    if P.kind == FIN_SPLIT:
        a = F.from_code(P.a)
        shift = Poly(F, [a.code, 1])
        hs = PowerSeries(F, model.hpoly.compose(shift).c, prec)
        fs = PowerSeries(F, model.f.compose(shift).c, prec)
    elif P.kind == INF_SPLIT:
        hs = PowerSeries(F, model.inf_h.c, prec)
        fs = PowerSeries(F, model.inf_f.c, prec)
    else:
        raise ValueError(f"no power-series expansion of y at {P}")
    return series_quadratic_root(hs, fs, P.y)


def local_expansion(model: HyperellipticModel, u: FunctionRep, P: Place, prec: int) -> PowerSeries:
    """Laurent expansion of u at a split place in its standard local parameter
    (x - a at finite places, 1/x at infinity), correct modulo t^prec."""
    if not P.is_split:
        raise ValueError(f"{P} is not split; expansions are only used at split places")
    g = model.genus
    a_pt = P.a if P.is_finite else None
    shift_y = 0 if P.is_finite else g + 1  # y = t^-(g+1) w at infinity
    out = PowerSeries(model.field, [], prec)
    if not u.a.is_zero():
        out = expand_ratfunc(u.a, a_pt, prec)
    if not u.b.is_zero():
        vb = _v_at(u.b, a_pt)
        need = prec - vb + shift_y  # precision of the unit factor
        bs = expand_ratfunc(u.b, a_pt, prec + shift_y)
        ys = y_series(model, P, max(need, 1)).shift(-shift_y)
        out = out + bs * ys
    return out.truncate(prec)


def valuation_bound(model: HyperellipticModel, u: FunctionRep, P: Place) -> int:
    """An upper bound for v_P(u) from the norm: v_P(u) <= v(N u) - min(v(a), v(b y))."""
    a_pt = P.a if P.is_finite else None
    n = _v_at(u.norm(), a_pt)
    vy = 0 if P.is_finite else -(model.genus + 1)
    va = _v_at(u.a, a_pt)
    vb = _v_at(u.b, a_pt)
    low = _vmin(va, None if vb is None else vb + vy)
    return n - low


def valuation(model: HyperellipticModel, u: FunctionRep, P: Place) -> int:
    """Exact valuation v_P(u)."""
    if u.is_zero():
        raise ZeroFunction("valuation of the zero function")
    F = model.field
    g = model.genus
    kind = P.kind
    a, b = u.a, u.b
    if kind in (FIN_RAM, INF_RAM):
        if kind == FIN_RAM:
            c = P.a
            if model.h is None:
                return _vmin(_mul2(_v_at(a, c)), _odd(_v_at(b, c), 1))
            alpha = a + b * F.from_code(P.y)
            return _vmin(_mul2(_v_at(alpha, c)), _odd(_v_at(b, c), 1))
        if model.h is None:
            return _vmin(_mul2(_v_at(a, None)), _odd(_v_at(b, None), -(2 * g + 1)))
        xg = RatFunc(Poly.x(F) ** (g + 1))
        beta = b * xg
        alpha = a + beta * F.from_code(P.y)
        return _vmin(_mul2(_v_at(alpha, None)), _odd(_v_at(beta, None), 1))
    if kind == FIN_INERT:
        return _vmin(_v_at(a, P.a), _v_at(b, P.a))
    if kind == INF_INERT:
        vb = _v_at(b, None)
        return _vmin(_v_at(a, None), None if vb is None else vb - (g + 1))
    # split place: expand past the norm bound
    bound = valuation_bound(model, u, P)
    s = local_expansion(model, u, P, bound + 1)
    v = s.valuation()
    if v is None:
        raise PrecisionExhausted(f"valuation of {u} at {P} not determined to order {bound}")
    return v


def _mul2(v):
    return None if v is None else 2 * v


def _odd(v, off):
    return None if v is None else 2 * v + off


def norm_valuation(model: HyperellipticModel, u: FunctionRep, P: Place) -> int:
    """v_Q(N u) at the point Q of the x-line below P.

    This is v_P(u) at a ramified place, 2 v_P(u) at an inert place and
    v_P(u) + v_P'(u) at a split pair {P, P'}.
    """
    a_pt = P.a if P.is_finite else None
    return _v_at(u.norm(), a_pt)


def evaluate(model: HyperellipticModel, u: FunctionRep, P: Place) -> FieldElement:
    """u(P) for a degree-one place where u is regular."""
    F = model.field
    if P.degree != 1:
        raise NeedsExtension(f"{P} has residue degree 2", 2)
    if P.is_finite:
        c = F.from_code(P.a)
        if u.a.den(c) and u.b.den(c):
            return u.a(c) + u.b(c) * F.from_code(P.y)
    v = valuation(model, u, P) if not u.is_zero() else None
    if v is None or v > 0:
        return F.zero
    if v < 0:
        raise ZeroDivisionError(f"{u} has a pole at {P}")
    if P.is_split:
        return F.from_code(local_expansion(model, u, P, 1).coeff(0))
    g = model.genus
    if P.kind == FIN_RAM:
        c = F.from_code(P.a)
        alpha = u.a + u.b * F.from_code(P.y) if model.h is not None else u.a
        return alpha(c) if not alpha.is_zero() else F.zero
    # ramified infinity: the value is the limit of alpha as x -> infinity
    if model.h is None:
        alpha = u.a
    else:
        alpha = u.a + u.b * RatFunc(Poly.x(F) ** (g + 1)) * F.from_code(P.y)
    if alpha.is_zero() or alpha.valuation_at_infinity() > 0:
        return F.zero
    return alpha.num.lc / alpha.den.lc


def _poly_roots_needed(polys: list[Poly]) -> tuple[list[int], int]:
    """Codes of all roots of the given non-zero polynomials, with the extension
    degree needed to make them rational (1 when they already are)."""
    from ..algebra.field import lcm

    codes: set[int] = set()
    need = 1
    for p in polys:
        if p.deg <= 0:
            continue
        need = lcm(need, p.splitting_degree())
        if need == 1:
            codes.update(r.code for r, _ in p.roots())
    return sorted(codes), need


def principal_divisor(model: HyperellipticModel, u: FunctionRep) -> Divisor:
    """div(u), over the working field; NeedsExtension if its support is not rational."""
    if u.is_zero():
        raise ZeroFunction("divisor of the zero function")
    polys = [u.a.num, u.a.den, u.b.num, u.b.den, u.norm().num, u.norm().den]
    polys = [p for p in polys if not p.is_zero()]
    xs, need = _poly_roots_needed(polys)
    if need > 1:
        raise NeedsExtension(f"support of div(u) needs GF(q^{need})", need)
    out = {}
    for a in xs:
        for P in places_over(model, a):
            out[P] = valuation(model, u, P)
    for P in places_over(model, None):
        out[P] = valuation(model, u, P)
    return Divisor(out)


def local_parameter(model: HyperellipticModel, P: Place) -> FunctionRep:
    """A uniformizer at P."""
    F = model.field
    g = model.genus
    x = FunctionRep.x(model)
    y = FunctionRep.y(model)
    if P.kind in (FIN_SPLIT, FIN_INERT):
        return x - F.from_code(P.a)
    if P.kind == FIN_RAM:
        return y - F.from_code(P.y)
    if P.kind in (INF_SPLIT, INF_INERT):
        return x.inverse()
    if model.h is None:
        return x**g / y
    return y / x ** (g + 1) - F.from_code(P.y)
