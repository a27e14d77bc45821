"""Holomorphic polydifferentials on hyperelliptic curves.

An m-fold differential is stored as u * omega with u = a(x) + b(x) y and
omega = dx^m / y^m (odd characteristic) or dx^m / h(x)^m (characteristic 2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Matrix, Poly
from .curve import (
    CurveAutomorphism,
    Divisor,
    FunctionRep,
    HyperellipticModel,
    apply_automorphism,
    infinity_divisor,
    principal_divisor,
    ramification_of_x,
)
from .errors import GenusTooSmall, NeedsExtension, QuotientNotRational
from .ramification import canonical_divisor, profile_from_curve, rationalize
from .rrspace import ActionOnSpace, action_on_rr, invariant_dim_concrete, invariant_dim_polydiff, rr_basis


@dataclass(frozen=True)
class PolyDifferential:
    m: int
    coefficient: FunctionRep
    i: int | None = None
    with_y: bool = False

    def label(self) -> str:
        core = "" if self.i in (None, 0) else ("x" if self.i == 1 else f"x^{self.i}")
        if self.with_y:
            core += "y"
        return (core or "1") + "*omega"

    def to_json(self) -> dict:
        return {"i": self.i, "with_y": self.with_y, "m": self.m}


def dx_divisor(model: HyperellipticModel) -> Divisor:
    """div(dx) = R - 2 D_inf, with R the ramification divisor of x."""
    return ramification_of_x(model) - infinity_divisor(model) * 2


def omega_divisor(model: HyperellipticModel, m: int) -> Divisor:
    """div(omega) = m div(dx) - m div(y) (odd) or - m div(h) (characteristic 2)."""
    den = FunctionRep.y(model) if model.h is None else FunctionRep.from_poly(model, model.h)
    return (dx_divisor(model) - principal_divisor(model, den)) * m


def polydiff_divisor(model: HyperellipticModel, w: PolyDifferential) -> Divisor:
    """Divisor of a polydifferential; the model must have rational branch points."""
    return principal_divisor(model, w.coefficient) + omega_divisor(model, w.m)


def basis_polydiff(model: HyperellipticModel, m: int) -> list[PolyDifferential]:
    """The monomial basis x^i omega, x^i y omega of H^0(X, Omega^m)."""
    g = model.genus
    if g < 2:
        raise GenusTooSmall(f"genus {g} < 2")
    if m < 1:
        raise ValueError("m must be positive")
    F = model.field
    out = []
    top_plain = g - 1 if m == 1 else m * (g - 1)
    top_y = -1 if m == 1 else (m - 1) * (g - 1) - 2
    for i in range(top_plain + 1):
        out.append(PolyDifferential(m, FunctionRep.from_poly(model, Poly(F, [0] * i + [1])), i, False))
    for i in range(top_y + 1):
        out.append(
            PolyDifferential(m, FunctionRep.from_poly(model, Poly(F, []), Poly(F, [0] * i + [1])), i, True)
        )
    return out


def expected_size(g: int, m: int) -> int:
    return g if m == 1 else (2 * m - 1) * (g - 1)


def check_holomorphic(model: HyperellipticModel, basis: list[PolyDifferential]) -> list[bool]:
    """Effectivity of each basis element's divisor, computed over an extension
    where its support is rational (the splitting field, enlarged on demand)."""
    d = model.splitting_degree()
    flags = []
    for w in basis:
        while True:
            big, emb = model.base_change(d) if d > 1 else (model, lambda c: c)
            bw = PolyDifferential(w.m, w.coefficient.map_field(big, emb), w.i, w.with_y)
            try:
                flags.append(polydiff_divisor(big, bw).is_effective())
                break
            except NeedsExtension as exc:
                d *= exc.degree
    return flags


def omega_factor(model: HyperellipticModel, phi: CurveAutomorphism, m: int) -> int:
    """Code of c with phi^* omega = c omega."""
    F = model.field
    if phi.char2_involution:
        return 1
    return F.pow(F.mul(phi.alpha, F.inv(phi.lam)), m)


def _coords(model: HyperellipticModel, basis: list[PolyDifferential], u: FunctionRep) -> list[int]:
    if not (u.a.is_poly() and u.b.is_poly()):
        raise ValueError("image coefficient is not a polynomial in x, y")
    a, b = u.a.num, u.b.num
    out = []
    for w in basis:
        out.append((b if w.with_y else a).coeff(w.i).code)
    n_plain = sum(1 for w in basis if not w.with_y)
    n_y = len(basis) - n_plain
    if a.deg >= n_plain or b.deg >= n_y:
        raise ValueError("image is outside the span of the basis")
    return out


def action_on_polydiff(model: HyperellipticModel, group, m: int, basis=None) -> ActionOnSpace:
    """Matrices of the pullback action on the monomial basis (columns = images)."""
    basis = basis if basis is not None else basis_polydiff(model, m)
    F = model.field
    mats = []
    for phi in group:
        c = F.from_code(omega_factor(model, phi, m))
        cols = [_coords(model, basis, apply_automorphism(model, phi, w.coefficient) * c) for w in basis]
        mats.append(Matrix(F, [list(r) for r in zip(*cols)], len(basis)))
    return ActionOnSpace(tuple(group), tuple(mats), len(basis))


def crosscheck_mKX(model: HyperellipticModel, group, m: int) -> dict:
    """Compare dim L(m K_X), the explicit basis size, and the invariant dimensions
    from L(m K_X), from the basis action and from the closed form."""
    group = tuple(group)
    prof = profile_from_curve(model, group)
    if prof.g_Y != 0:
        raise QuotientNotRational(f"quotient genus {prof.g_Y}; need g_Y = 0")
    cover, _ = rationalize(model, group)
    bm, bg = cover.model, cover.group
    K = canonical_divisor(bm, bg)
    rr = rr_basis(bm, K * m)
    inv_rr = invariant_dim_concrete(action_on_rr(bm, bg, rr))
    basis = basis_polydiff(model, m)
    inv_basis = invariant_dim_concrete(action_on_polydiff(model, group, m, basis))
    formula = invariant_dim_polydiff(prof, m)
    report = {
        "m": m,
        "rr_dim": rr.dim,
        "basis_size": len(basis),
        "invariant_rr": inv_rr,
        "invariant_basis": inv_basis,
        "invariant_formula": formula,
    }
    report["ok"] = rr.dim == len(basis) and inv_rr == inv_basis == formula
    return report
