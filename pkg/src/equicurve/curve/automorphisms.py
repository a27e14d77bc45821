"""The hyperelliptic involution and affine automorphisms x -> alpha x + beta, y -> lambda y.

Automorphisms act on functions by pullback: ``apply_automorphism(phi, u)`` is
u o phi.  For the affine kind, x o phi = alpha x + beta and y o phi = lambda y,
so phi sends the point (x0, y0) to (alpha x0 + beta, lambda y0).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import Poly, RatFunc
from ..errors import InvalidAutomorphism, NotAGroup
from .functions import FunctionRep
from .model import HyperellipticModel
from .places import FIN_INERT, FIN_RAM, FIN_SPLIT, INF_INERT, INF_RAM, INF_SPLIT, Divisor, Place, places_over


@dataclass(frozen=True)
class CurveAutomorphism:
    """Codes (alpha, beta, lam) of an affine automorphism in odd characteristic,
    or the involution y -> y + h in characteristic 2 (``char2_involution``)."""

    alpha: int = 1
    beta: int = 0
    lam: int = 1
    char2_involution: bool = False

    @property
    def kind(self) -> str:
        if self.char2_involution:
            return "involution"
        return "affine"

    def is_identity(self) -> bool:
        return not self.char2_involution and (self.alpha, self.beta, self.lam) == (1, 0, 1)

    def to_json(self) -> dict:
        if self.char2_involution:
            return {"kind": "involution"}
        return {"kind": "affine", "alpha": self.alpha, "beta": self.beta, "lambda": self.lam}

    @classmethod
    def from_json(cls, model: HyperellipticModel, data: dict) -> "CurveAutomorphism":
        kind = data.get("kind")
        if kind == "involution":
            return hyperelliptic_involution(model)
        if kind in ("affine", "diagonal"):
            F = model.field
            if model.field.k == 1:
                vals = [F(int(data.get(k, d))).code for k, d in (("alpha", 1), ("beta", 0), ("lambda", 1))]
            else:
                vals = [int(data.get(k, d)) for k, d in (("alpha", 1), ("beta", 0), ("lambda", 1))]
            phi = cls(*vals)
            automorphism_validate(model, phi)
            return phi
        raise InvalidAutomorphism(f"unknown automorphism kind {kind!r}")

    def __repr__(self):
        if self.char2_involution:
            return "sigma"
        return f"Aut(x->{self.alpha}x+{self.beta}, y->{self.lam}y)"


def identity() -> CurveAutomorphism:
    return CurveAutomorphism()


def hyperelliptic_involution(model: HyperellipticModel) -> CurveAutomorphism:
    if model.h is None:
        return CurveAutomorphism(1, 0, model.field.neg(1))
    return CurveAutomorphism(char2_involution=True)


def is_hyperelliptic_involution(model: HyperellipticModel, phi: CurveAutomorphism) -> bool:
    return phi == hyperelliptic_involution(model)


def automorphism_validate(model: HyperellipticModel, phi: CurveAutomorphism) -> None:
    F = model.field
    if phi.char2_involution:
        if model.h is None:
            raise InvalidAutomorphism("y -> y + h(x) needs a characteristic-2 model")
        return
    if model.h is not None:
        if phi.is_identity():
            return
        raise InvalidAutomorphism("affine automorphisms are only supported in odd characteristic")
    for c in (phi.alpha, phi.beta, phi.lam):
        if not 0 <= c < F.q:
            raise InvalidAutomorphism(f"coefficient code {c} outside {F}")
    if phi.alpha == 0 or phi.lam == 0:
        raise InvalidAutomorphism("alpha and lambda must be non-zero")
    lin = Poly(F, [phi.beta, phi.alpha])
    if model.f.compose(lin) != model.f.scale(F.from_code(F.mul(phi.lam, phi.lam))):
        raise InvalidAutomorphism(f"f(alpha x + beta) != lambda^2 f(x) for {phi}")


def compose(phi: CurveAutomorphism, psi: CurveAutomorphism, model: HyperellipticModel) -> CurveAutomorphism:
    """The automorphism whose pullback is phi^* o psi^* (apply psi^* first, then phi^*)."""
    if phi.char2_involution or psi.char2_involution:
        if phi.is_identity():
            return psi
        if psi.is_identity():
            return phi
        if phi.char2_involution and psi.char2_involution:
            return identity()
        raise InvalidAutomorphism("cannot compose the characteristic-2 involution with an affine map")
    F = model.field
    a1, b1, l1 = phi.alpha, phi.beta, phi.lam
    a2, b2, l2 = psi.alpha, psi.beta, psi.lam
    # psi^* x = a2 x + b2, then phi^* gives a2 (a1 x + b1) + b2
    return CurveAutomorphism(F.mul(a1, a2), F.add(F.mul(a2, b1), b2), F.mul(l1, l2))


def apply_automorphism(model: HyperellipticModel, phi: CurveAutomorphism, u: FunctionRep) -> FunctionRep:
    """Pullback u o phi."""
    F = model.field
    if phi.char2_involution:
        # y -> y + h
        return FunctionRep(model, u.a + u.b * RatFunc(model.hpoly), u.b)
    lin = Poly(F, [phi.beta, phi.alpha])
    a = u.a.compose(lin)
    b = u.b.compose(lin) * F.from_code(phi.lam)
    return FunctionRep(model, a, b)


def place_image(model: HyperellipticModel, phi: CurveAutomorphism, P: Place) -> Place:
    """phi(P), so that (u o phi)(P) = u(phi(P))."""
    F = model.field
    g = model.genus
    if phi.char2_involution:
        if P.kind == FIN_SPLIT:
            hy = model.hpoly(F.from_code(P.a)).code
            return Place(FIN_SPLIT, P.a, F.add(P.y, hy))
        if P.kind == INF_SPLIT:
            target = F.add(P.y, model.inf_h.coeff(0).code)
            return next(Q for Q in places_over(model, None) if Q.y == target)
        return P
    a_img = None if P.a is None else F.add(F.mul(phi.alpha, P.a), phi.beta)
    if P.kind in (FIN_RAM, FIN_SPLIT):
        return Place(P.kind, a_img, F.mul(phi.lam, P.y))
    if P.kind == FIN_INERT:
        return Place(FIN_INERT, a_img)
    if P.kind in (INF_RAM, INF_INERT):
        return P
    target = F.mul(phi.lam, F.inv(F.pow(phi.alpha, g + 1)))
    target = F.mul(target, P.y)
    return next(Q for Q in places_over(model, None) if Q.y == target)


def divisor_image(model: HyperellipticModel, phi: CurveAutomorphism, D: Divisor) -> Divisor:
    return Divisor({place_image(model, phi, P): n for P, n in D.items()})


def is_invariant(model: HyperellipticModel, group, D: Divisor) -> bool:
    return all(divisor_image(model, phi, D) == D for phi in group)


def group_closure(model: HyperellipticModel, gens, limit: int = 10000) -> list[CurveAutomorphism]:
    """All elements of the group generated by ``gens`` (identity first, then in
    discovery order)."""
    for phi in gens:
        automorphism_validate(model, phi)
    elems = [identity()]
    seen = {identity()}
    frontier = [identity()]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = compose(a, s, model)
                if b not in seen:
                    seen.add(b)
                    elems.append(b)
                    nxt.append(b)
                    if len(elems) > limit:
                        raise NotAGroup("generated group exceeds the enumeration limit")
        frontier = nxt
    return elems


def check_group(model: HyperellipticModel, group) -> None:
    """Raise NotAGroup unless ``group`` is closed under composition and contains the identity."""
    elems = set(group)
    if identity() not in elems:
        raise NotAGroup("group must contain the identity")
    for phi in elems:
        automorphism_validate(model, phi)
    for phi in elems:
        for psi in elems:
            if compose(phi, psi, model) not in elems:
                raise NotAGroup(f"{phi} o {psi} is not in the group")


def order(model: HyperellipticModel, phi: CurveAutomorphism) -> int:
    n, cur = 1, phi
    while not cur.is_identity():
        cur = compose(cur, phi, model)
        n += 1
    return n
