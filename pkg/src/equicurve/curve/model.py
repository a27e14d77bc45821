"""Hyperelliptic models y^2 = f(x) (odd characteristic) and y^2 - h(x) y = f(x)
(characteristic 2) over a finite field."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..algebra import FieldElement, FieldSpec, Poly, embedding, field_make, poly_gcd, poly_squarefree
from ..errors import GenusTooSmall, NotSmooth, WrongCharacteristic


@dataclass(frozen=True, eq=False)
class HyperellipticModel:
    """A smooth hyperelliptic curve given by a standard affine equation.

    ``h`` is None for the odd-characteristic form.  The genus is derived and
    the model validated on construction.
    """

    field: FieldSpec
    f: Poly
    h: Poly | None = None

    def __post_init__(self):
        object.__setattr__(self, "genus", curve_validate(self))

    # -- constructors --
    @classmethod
    def odd(cls, field: FieldSpec, f) -> "HyperellipticModel":
        return cls(field, f if isinstance(f, Poly) else Poly(field, f))

    @classmethod
    def char2(cls, field: FieldSpec, h, f) -> "HyperellipticModel":
        h = h if isinstance(h, Poly) else Poly(field, h)
        f = f if isinstance(f, Poly) else Poly(field, f)
        return cls(field, f, h)

    @classmethod
    def from_ints(cls, p: int, k: int, f, h=None) -> "HyperellipticModel":
        F = field_make(p, k)
        fp = Poly(F, [int(c) % F.q for c in f]) if k > 1 else Poly.from_ints(F, f)
        if h is None:
            return cls(F, fp)
        hp = Poly(F, [int(c) % F.q for c in h]) if k > 1 else Poly.from_ints(F, h)
        return cls(F, fp, hp)

    # -- identity --
    def __eq__(self, other):
        return (
            isinstance(other, HyperellipticModel)
            and self.field == other.field
            and self.f == other.f
            and self.h == other.h
        )

    def __hash__(self):
        return hash((self.field, self.f, self.h))

    def __repr__(self):
        if self.h is None:
            return f"y^2 = {self.f} over {self.field}"
        return f"y^2 - ({self.h})*y = {self.f} over {self.field}"

    # -- basic data --
    @property
    def p(self) -> int:
        return self.field.p

    @property
    def form(self) -> str:
        return "odd" if self.h is None else "char2"

    @cached_property
    def hpoly(self) -> Poly:
        """h(x), the zero polynomial in odd characteristic."""
        return self.h if self.h is not None else Poly(self.field, [])

    @cached_property
    def branch_poly(self) -> Poly:
        """Polynomial whose roots are the finite branch points of x."""
        return self.f if self.h is None else self.h

    @cached_property
    def inf_h(self) -> Poly:
        """t^{g+1} h(1/t): the chart at infinity is w^2 - H(t) w = F(t) with y = w x^{g+1}."""
        return self.hpoly.reversed_poly(self.genus + 1) if self.h is not None else Poly(self.field, [])

    @cached_property
    def inf_f(self) -> Poly:
        return self.f.reversed_poly(2 * self.genus + 2)

    @cached_property
    def infinity_type(self) -> str:
        """'ramified', 'split' or 'inert' for the places above x = infinity."""
        g = self.genus
        if self.h is None:
            if self.f.deg == 2 * g + 1:
                return "ramified"
            return "split" if self.f.lc.is_square() else "inert"
        if self.hpoly.deg < g + 1:
            return "ramified"
        return "split" if self.infinity_roots() else "inert"

    def residue_roots(self, a) -> list[int]:
        """Codes of the y-values over the finite point x = a (sorted)."""
        return _quadratic_roots(self.field, self.hpoly(a).code, self.f(a).code)

    def infinity_roots(self) -> list[int]:
        """Codes of the leading coefficients w = lim y/x^{g+1} at infinity (sorted)."""
        return _quadratic_roots(self.field, self.inf_h.coeff(0).code, self.inf_f.coeff(0).code)

    def is_branch_point(self, a) -> bool:
        return self.branch_poly(a).code == 0

    def splitting_degree(self) -> int:
        """Degree of the smallest extension over which every branch point and every
        place above a branch point or infinity is rational."""
        d = self.branch_poly.splitting_degree()
        if self.infinity_type == "inert":
            return 2 * d if d % 2 else d
        return d

    def base_change(self, d: int) -> tuple["HyperellipticModel", object]:
        """The same curve over GF(q^d), with the embedding of coefficient codes."""
        big = field_make(self.p, self.field.k * d)
        emb = embedding(self.field, big)
        f = self.f.map_field(emb, big)
        h = None if self.h is None else self.h.map_field(emb, big)
        return HyperellipticModel(big, f, h), emb

    def split(self) -> tuple["HyperellipticModel", object]:
        return self.base_change(self.splitting_degree())

    def to_json(self) -> dict:
        out = {"p": self.p, "k": self.field.k}
        if self.h is None:
            out["model"] = "odd"
            out["f"] = list(self.f.c)
        else:
            out["model"] = "char2"
            out["h"] = list(self.h.c)
            out["f"] = list(self.f.c)
        return out


def _quadratic_roots(F: FieldSpec, h: int, f: int) -> list[int]:
    """Roots z of z^2 - h z - f = 0 in F, as sorted codes."""
    if F.p != 2:
        # z = (h +- sqrt(h^2 + 4f)) / 2
        disc = F.add(F.mul(h, h), F.mul(F.from_int(4), f))
        r = F.sqrt(disc)
        if r is None:
            return []
        half = F.inv(2)
        roots = {F.mul(F.add(h, r), half), F.mul(F.sub(h, r), half)}
        return sorted(roots)
    if h == 0:
        return [F.sqrt(f)]
    z2 = Poly(F, [F.neg(f), F.neg(h), 1])
    return sorted(r.code for r, _ in z2.roots())


def model_genus(field: FieldSpec, f: Poly, h: Poly | None = None) -> int:
    """Check smoothness of y^2 = f or y^2 - h y = f and return the genus (any value >= 0)."""
    F = field
    if f.is_zero():
        raise NotSmooth("f must be non-zero")
    if h is None:
        if F.p == 2:
            raise WrongCharacteristic("odd-characteristic model over a field of characteristic 2")
        if not poly_squarefree(f):
            raise NotSmooth("f has a repeated zero")
        return max(-(-f.deg // 2) - 1, 0)
    if F.p != 2:
        raise WrongCharacteristic("Artin-Schreier model requires characteristic 2")
    if h.is_zero():
        raise NotSmooth("h must be non-zero")
    hd, fd = h.derivative(), f.derivative()
    if poly_gcd(h, hd * hd * f + fd * fd).deg > 0:
        raise NotSmooth("h'(x)^2 f(x) + f'(x)^2 and h(x) share a zero")
    g = max(h.deg - 1, -(-f.deg // 2) - 1, 0)
    if h.deg < g + 1:
        # chart at infinity: w^2 + H w = F with H(0) = 0 must be smooth at t = 0
        F0, F1 = f.coeff(2 * g + 2), f.coeff(2 * g + 1)
        H1 = h.coeff(g)
        w0 = F0.sqrt()
        if not (F1 + H1 * w0):
            raise NotSmooth("model is singular at infinity; reduce it by y -> y + c x^(g+1)")
    return g


def curve_validate(model: HyperellipticModel) -> int:
    """Check smoothness of the model and return its genus, which must be at least 2."""
    g = model_genus(model.field, model.f, model.h)
    if g < 2:
        raise GenusTooSmall(f"the model has genus {g} < 2")
    return g


def as_element(field: FieldSpec, value) -> FieldElement:
    if isinstance(value, FieldElement):
        return field(value)
    return field.from_code(int(value))
