"""Riemann-Roch spaces L(D) on hyperelliptic curves, group actions on them, and
the closed-form dimension of their invariant subspaces.

Every u in L(D) can be written (A + B y) / d with A, B polynomials and d a fixed
denominator built from the finite part of D: the affine ring k[x, y] is
integrally closed.  The conditions v_P(u) >= -n_P are linear in the
coefficients of A and B, so L(D) is a kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Matrix, Poly, RatFunc, kernel_basis, nullity, solve, vstack
from .config import RunConfig
from .curve import Divisor, FunctionRep, HyperellipticModel, Place, apply_automorphism, places_over
from .curve.local import y_series
from .curve.places import FIN_INERT, FIN_RAM, FIN_SPLIT, INF_INERT, INF_RAM, INF_SPLIT
from .errors import BoundExceeded, DegreeTooSmall, GenusTooSmall, NotInvariant
from .ramification import InvariantDivisorSpec, RamificationProfile, deg_floor


@dataclass(frozen=True)
class Ansatz:
    """u = (A + B y) / den with deg A <= da, deg B <= db."""

    den: Poly
    da: int
    db: int

    @property
    def size(self) -> int:
        return (self.da + 1) + (self.db + 1)

    def function(self, model: HyperellipticModel, vec) -> FunctionRep:
        F = model.field
        A = Poly(F, vec[: self.da + 1])
        B = Poly(F, vec[self.da + 1 :])
        return FunctionRep(model, RatFunc(A, self.den), RatFunc(B, self.den))

    def coordinates(self, u: FunctionRep) -> tuple[int, ...] | None:
        """Coefficient vector of u, or None if u does not fit the ansatz."""
        A = u.a * self.den
        B = u.b * self.den
        if not (A.is_poly() and B.is_poly()):
            return None
        A, B = A.num, B.num
        if A.deg > self.da or B.deg > self.db:
            return None
        return tuple(A.coeff(i).code for i in range(self.da + 1)) + tuple(B.coeff(j).code for j in range(self.db + 1))


@dataclass(frozen=True)
class RRBasis:
    model: HyperellipticModel
    divisor: Divisor
    ansatz: Ansatz
    vectors: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def basis(self) -> list[FunctionRep]:
        return [self.ansatz.function(self.model, v) for v in self.vectors]

    def coordinates(self, u: FunctionRep) -> tuple[int, ...]:
        """Coordinates of u in the basis; NotInvariant if u is not in L(D)."""
        F = self.model.field
        if self.dim == 0:
            if u.is_zero():
                return ()
            raise NotInvariant(f"{u} is not in L(D) = 0")
        w = self.ansatz.coordinates(u)
        if w is None:
            raise NotInvariant(f"{u} is not in L(D)")
        cols = Matrix(F, list(zip(*self.vectors)))
        c = solve(cols, w)
        if c is None:
            raise NotInvariant(f"{u} is not in L(D)")
        return c


@dataclass(frozen=True)
class ActionOnSpace:
    """Matrices of the given automorphisms on a space with a fixed basis.

    Column j of a matrix holds the coordinates of the image of basis vector j.
    """

    generators: tuple
    matrices: tuple[Matrix, ...]
    dim: int

    def is_trivial(self) -> bool:
        return all(M.is_identity() for M in self.matrices)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _place_conditions(model: HyperellipticModel, P: Place, r: int, ans: Ansatz) -> list[list[int]]:
    """Linear conditions on the ansatz coefficients expressing v_P(A + B y) >= r."""
    F = model.field
    g = model.genus
    na, nb = ans.da + 1, ans.db + 1
    rows: list[list[int]] = []

    def unit(i: int) -> list[int]:
        row = [0] * (na + nb)
        row[i] = 1
        return row

    if P.is_finite:
        c = P.a
        # coefficient of (x - c)^k in x^i is binom(i, k) c^(i-k): columns of Taylor shifts
        def taylor_rows(kmax: int, scale_b: int | None, only_b: bool = False) -> list[list[int]]:
            out = []
            if kmax <= 0:
                return out
            basis_a = [Poly(F, [0] * i + [1]).taylor(c, kmax) for i in range(na)]
            basis_b = [Poly(F, [0] * j + [1]).taylor(c, kmax) for j in range(nb)]
            for k in range(kmax):
                row = [0] * (na + nb)
                if not only_b:
                    for i in range(na):
                        row[i] = basis_a[i][k]
                if scale_b is not None:
                    for j in range(nb):
                        row[na + j] = F.mul(scale_b, basis_b[j][k])
                out.append(row)
            return out

        if P.kind == FIN_RAM:
            b0 = P.y if model.h is not None else 0
            # alpha = A + b0 B must vanish to order ceil(r/2); B to order ceil((r-1)/2)
            rows += taylor_rows(_ceil_div(r, 2), b0 if b0 else None)
            rows += taylor_rows(_ceil_div(r - 1, 2), 1, only_b=True)
        elif P.kind == FIN_INERT:
            rows += taylor_rows(r, None)
            rows += taylor_rows(r, 1, only_b=True)
        elif P.kind == FIN_SPLIT:
            if r > 0:
                ys = y_series(model, P, r)
                yc = [ys.coeff(k) for k in range(r)]
                basis_a = [Poly(F, [0] * i + [1]).taylor(c, r) for i in range(na)]
                basis_b = [Poly(F, [0] * j + [1]).taylor(c, r) for j in range(nb)]
                for k in range(r):
                    row = [0] * (na + nb)
                    for i in range(na):
                        row[i] = basis_a[i][k]
                    for j in range(nb):
                        acc = 0
                        for s in range(k + 1):
                            if basis_b[j][s] and yc[k - s]:
                                acc = F.add(acc, F.mul(basis_b[j][s], yc[k - s]))
                        row[na + j] = acc
                    rows.append(row)
        return rows

    # places at infinity: valuations on the x-line are -deg
    if P.kind == INF_RAM:
        if model.h is None:
            top_a = (-r) // 2  # 2(-deg A) >= r
            top_b = (-r - (2 * g + 1)) // 2
            rows += [unit(i) for i in range(na) if i > top_a]
            rows += [unit(na + j) for j in range(nb) if j > top_b]
        else:
            w0 = P.y
            top_alpha = (-r) // 2
            top_beta = (1 - r) // 2  # bound on deg(B x^(g+1))
            rows += [unit(na + j) for j in range(nb) if j + g + 1 > top_beta]
            # coefficient of x^k in alpha = A + w0 B x^(g+1)
            for k in range(max(na, nb + g + 1)):
                if k <= top_alpha:
                    continue
                row = [0] * (na + nb)
                if k < na:
                    row[k] = 1
                j = k - g - 1
                if 0 <= j < nb and w0:
                    row[na + j] = w0
                if any(row):
                    rows.append(row)
        return rows
    if P.kind == INF_INERT:
        rows += [unit(i) for i in range(na) if -i < r]
        rows += [unit(na + j) for j in range(nb) if -j - (g + 1) < r]
        return rows
    assert P.kind == INF_SPLIT
    # t = 1/x: x^i = t^-i and y = t^-(g+1) w(t)
    low = min(-(na - 1), -(nb - 1) - (g + 1))
    if r <= low:
        return rows
    wprec = r + (nb - 1) + (g + 1)
    ws = y_series(model, P, max(wprec, 1))
    wc = [ws.coeff(k) for k in range(max(wprec, 1))]
    for k in range(low, r):
        row = [0] * (na + nb)
        if 0 <= -k < na:
            row[-k] = 1
        for j in range(nb):
            idx = k + j + g + 1  # t^-j * t^-(g+1) * w_idx t^idx contributes to t^k
            if 0 <= idx < len(wc):
                row[na + j] = wc[idx]
        if any(row):
            rows.append(row)
    return rows


def _ansatz(model: HyperellipticModel, D: Divisor) -> Ansatz:
    F = model.field
    den = Poly.const(F, 1)
    xs = sorted({P.a for P in D.support() if P.is_finite})
    for c in xs:
        k = max(max(_ceil_div(D.coeff(P), P.e) for P in places_over(model, c)), 0)
        if k:
            den = den * Poly(F, [F.neg(c), 1]) ** k
    T = max(D.coeff(P) + P.e * den.deg for P in places_over(model, None))
    e_inf = places_over(model, None)[0].e
    top = T // e_inf if T >= 0 else -1
    return Ansatz(den, top, top)


def rr_basis(model: HyperellipticModel, D: Divisor, config: RunConfig | None = None) -> RRBasis:
    """Deterministic basis of L(D) = {u : v_P(u) >= -n_P for all P}."""
    cfg = config or RunConfig()
    g = model.genus
    if D.degree > cfg.rr_degree_factor * g + 16:
        raise BoundExceeded(f"deg D = {D.degree} exceeds {cfg.rr_degree_factor}g+16")
    ans = _ansatz(model, D)
    if ans.da < 0 and ans.db < 0:
        return RRBasis(model, D, ans, ())
    places = []
    for c in sorted({P.a for P in D.support() if P.is_finite}):
        places.extend(places_over(model, c))
    places.extend(places_over(model, None))
    rows = []
    for P in places:
        vd = P.e * ans.den.valuation_at(P.a) if P.is_finite else -P.e * ans.den.deg
        r = -D.coeff(P) + vd
        rows.extend(_place_conditions(model, P, r, ans))
    if not rows:
        rows = [[0] * ans.size]
    M = Matrix(model.field, rows)
    return RRBasis(model, D, ans, tuple(kernel_basis(M)))


def rr_dim(model: HyperellipticModel, D: Divisor) -> int:
    return rr_basis(model, D).dim


def action_on_rr(model: HyperellipticModel, group, rr: RRBasis) -> ActionOnSpace:
    """Matrix of each automorphism (pullback) on the computed basis of L(D)."""
    from .curve import divisor_image

    mats = []
    basis = rr.basis
    for phi in group:
        if divisor_image(model, phi, rr.divisor) != rr.divisor:
            raise NotInvariant(f"D is not invariant under {phi}")
        cols = [rr.coordinates(apply_automorphism(model, phi, u)) for u in basis]
        mats.append(Matrix(model.field, [list(r) for r in zip(*cols)] if cols else [], rr.dim))
    return ActionOnSpace(tuple(group), tuple(mats), rr.dim)


def invariant_dim_concrete(action: ActionOnSpace) -> int:
    """Dimension of the joint fixed space: nullity of the stacked (M_i - I)."""
    if action.dim == 0:
        return 0
    if not action.matrices:
        return action.dim
    F = action.matrices[0].field
    ident = Matrix.identity(F, action.dim)
    return nullity(vstack([M - ident for M in action.matrices]))


def dimD_bound(profile: RamificationProfile) -> int:
    """2 g_X - 2 - sum over ramification points of sum_{j >= 1} (|G_j| - 1)."""
    return 2 * profile.g_X - 2 - profile.higher_ramification_total()


def dimD_hypothesis(profile: RamificationProfile, spec: InvariantDivisorSpec) -> bool:
    return spec.degree(profile) > dimD_bound(profile)


def invariant_dim_formula(profile: RamificationProfile, spec: InvariantDivisorSpec, force: bool = False) -> int:
    """dim L(D)^G = 1 - g_Y + deg(D)/n - sum_Q frac(n_Q / e_Q), valid above the degree bound."""
    deg = spec.degree(profile)
    if not force and deg <= dimD_bound(profile):
        raise DegreeTooSmall(f"deg D = {deg} is not above the bound {dimD_bound(profile)}")
    value = 1 - profile.g_Y + Fraction(deg, profile.n) - spec.fractional_sum(profile)
    assert value.denominator == 1 and value == 1 - profile.g_Y + deg_floor(profile, spec)
    return int(value)


def polydiff_dims(profile: RamificationProfile, m: int) -> dict:
    """Both closed forms for dim H^0(X, Omega^m)^G (the second only for m = 1)."""
    if profile.g_X < 2:
        raise GenusTooSmall(f"g_X = {profile.g_X} < 2")
    if m < 1:
        raise ValueError("m must be positive")
    general = (2 * m - 1) * (profile.g_Y - 1) + sum((m * b.delta) // b.e for b in profile.branch)
    out = {"general": general}
    if m == 1:
        out["tame"] = profile.g_Y if profile.is_tame else None
        out["wild_sum"] = profile.g_Y - 1 + sum(b.delta // b.e for b in profile.branch if b.is_wild)
    return out


def invariant_dim_polydiff(profile: RamificationProfile, m: int) -> int:
    d = polydiff_dims(profile, m)
    if m == 1:
        if profile.is_tame:
            return d["tame"]
        if d["wild_sum"] != d["general"]:  # pragma: no cover - algebraic identity
            raise AssertionError("the two closed forms for m = 1 disagree")
        return d["wild_sum"]
    return d["general"]
