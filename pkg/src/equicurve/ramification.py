"""Ramification data of a quotient map X -> Y = X/G.

Profiles can be written down abstractly (group order, quotient genus, and per
branch point the orders of the lower ramification groups) or derived from a
concrete hyperelliptic curve with a finite group of automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.field import lcm
from .curve import (
    CurveAutomorphism,
    Divisor,
    HyperellipticModel,
    Place,
    apply_automorphism,
    check_group,
    local_parameter,
    place_image,
    places_over,
    valuation,
)
from .curve.places import base_change_divisor
from .errors import (
    BadFiltration,
    EquicurveError,
    HurwitzInconsistent,
    NeedsExtension,
    NotFaithful,
    NotInvariant,
    QuotientNotRational,
)


@dataclass(frozen=True)
class BranchRecord:
    """One branch point Q of Y: ramification index and the orders of G_0(P), G_1(P), ...
    for P above Q (trailing trivial groups dropped)."""

    e: int
    filtration: tuple[int, ...]
    label: str | None = None

    @classmethod
    def tame(cls, e: int, label: str | None = None) -> "BranchRecord":
        return cls(e, (e,) if e > 1 else (), label)

    @property
    def delta(self) -> int:
        """Exponent of the different: sum over j of (|G_j| - 1)."""
        return sum(o - 1 for o in self.filtration)

    @property
    def is_wild(self) -> bool:
        return self.delta > self.e - 1

    def to_json(self) -> dict:
        out = {"e": self.e, "filtration": list(self.filtration)}
        if self.label is not None:
            out["label"] = self.label
        return out


@dataclass(frozen=True)
class RamificationProfile:
    n: int
    g_Y: int
    branch: tuple[BranchRecord, ...] = ()
    p: int | None = None
    g_X: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "branch", tuple(self.branch))
        object.__setattr__(self, "g_X", profile_validate(self))

    @property
    def deg_R(self) -> int:
        return sum((self.n // b.e) * b.delta for b in self.branch)

    @property
    def is_tame(self) -> bool:
        return not any(b.is_wild for b in self.branch)

    @property
    def wild(self) -> list[int]:
        """Indices of the branch points in S (not tamely ramified)."""
        return [i for i, b in enumerate(self.branch) if b.is_wild]

    def higher_ramification_total(self) -> int:
        """sum over ramification points P of X of sum_{j >= 1} (|G_j(P)| - 1)."""
        return sum((self.n // b.e) * sum(o - 1 for o in b.filtration[1:]) for b in self.branch)

    def to_json(self) -> dict:
        out = {"n": self.n, "gY": self.g_Y, "branch": [b.to_json() for b in self.branch]}
        if self.p is not None:
            out["p"] = self.p
        return out

    @classmethod
    def from_json(cls, data: dict) -> "RamificationProfile":
        try:
            n = int(data["n"])
            g_Y = int(data["gY"])
            recs = []
            for b in data.get("branch", []):
                e = int(b["e"])
                if b.get("tame"):
                    recs.append(BranchRecord.tame(e, b.get("label")))
                else:
                    recs.append(BranchRecord(e, tuple(int(o) for o in b["filtration"]), b.get("label")))
            p = data.get("p")
        except (KeyError, TypeError, ValueError) as exc:
            raise EquicurveError(f"malformed profile JSON: {exc}") from None
        return cls(n, g_Y, tuple(recs), None if p is None else int(p))


@dataclass(frozen=True)
class InvariantDivisorSpec:
    """A G-invariant divisor by its coefficients n_Q on Y.

    ``branch_coeffs[i]`` belongs to ``profile.branch[i]``; ``free_orbits`` lists
    (n_Q, count) for unramified orbits (of size n).
    """

    branch_coeffs: tuple[int, ...]
    free_orbits: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branch_coeffs", tuple(int(c) for c in self.branch_coeffs))
        object.__setattr__(self, "free_orbits", tuple((int(a), int(b)) for a, b in self.free_orbits if a and b))

    def check(self, profile: RamificationProfile) -> None:
        if len(self.branch_coeffs) != len(profile.branch):
            raise EquicurveError(
                f"{len(self.branch_coeffs)} branch coefficients for {len(profile.branch)} branch points"
            )
        if any(c < 0 for _, c in self.free_orbits):
            raise EquicurveError("orbit counts must be non-negative")

    def degree(self, profile: RamificationProfile) -> int:
        self.check(profile)
        n = profile.n
        return sum((n // b.e) * c for b, c in zip(profile.branch, self.branch_coeffs)) + sum(
            n * nq * cnt for nq, cnt in self.free_orbits
        )

    def fractional_sum(self, profile: RamificationProfile) -> Fraction:
        """sum over Q of the fractional part of n_Q / e_Q."""
        self.check(profile)
        return sum((Fraction(c % b.e, b.e) for b, c in zip(profile.branch, self.branch_coeffs)), Fraction(0))

    def to_json(self) -> dict:
        return {
            "branch_coeffs": list(self.branch_coeffs),
            "free_orbits": [{"nQ": a, "count": b} for a, b in self.free_orbits],
        }

    @classmethod
    def from_json(cls, data: dict) -> "InvariantDivisorSpec":
        try:
            return cls(
                tuple(int(c) for c in data.get("branch_coeffs", [])),
                tuple((int(o["nQ"]), int(o["count"])) for o in data.get("free_orbits", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise EquicurveError(f"malformed divisor spec JSON: {exc}") from None


def _is_power_of(x: int, p: int) -> bool:
    while x % p == 0 and x > 1:
        x //= p
    return x == 1


def profile_validate(profile: RamificationProfile) -> int:
    """Check the profile and return g_X from Hurwitz's formula."""
    n, g_Y, p = profile.n, profile.g_Y, profile.p
    if n < 1:
        raise HurwitzInconsistent("group order must be positive")
    if g_Y < 0:
        raise HurwitzInconsistent("quotient genus must be non-negative")
    for b in profile.branch:
        f = b.filtration
        if b.e < 2:
            raise BadFiltration(f"branch point with e = {b.e} is not ramified")
        if n % b.e:
            raise BadFiltration(f"e = {b.e} does not divide n = {n}")
        if not f or f[0] != b.e:
            raise BadFiltration(f"|G_0| must equal e = {b.e}, got {list(f)}")
        if any(o < 1 or n % o for o in f):
            raise BadFiltration(f"filtration orders {list(f)} must divide n = {n}")
        if any(f[i] < f[i + 1] for i in range(len(f) - 1)):
            raise BadFiltration(f"filtration {list(f)} is not non-increasing")
        if any(f[i] % f[i + 1] for i in range(len(f) - 1)):
            raise BadFiltration(f"filtration {list(f)}: each group must contain the next")
        if f[-1] == 1:
            raise BadFiltration("trailing trivial groups must be omitted")
        if p is not None:
            tame = b.e % p != 0
            if tame and len(f) > 1:
                raise BadFiltration(f"e = {b.e} is prime to p = {p} but G_1 is non-trivial")
            if not tame:
                if len(f) < 2:
                    raise BadFiltration(f"p = {p} divides e = {b.e} but G_1 is trivial")
                pe = 1
                while b.e % (pe * p) == 0:
                    pe *= p
                if f[1] != pe:
                    raise BadFiltration(f"|G_1| = {f[1]} must be the p-part {pe} of e")
                if any(not _is_power_of(o, p) for o in f[1:]):
                    raise BadFiltration(f"higher ramification groups {list(f[1:])} must be p-groups")
    total = n * (2 * g_Y - 2) + sum((n // b.e) * b.delta for b in profile.branch)
    if total % 2:
        raise HurwitzInconsistent(f"2 g_X - 2 = {total} is odd")
    g_X = total // 2 + 1
    if g_X < 0:
        raise HurwitzInconsistent(f"Hurwitz gives negative genus {g_X}")
    return g_X


# ---------------------------------------------------------------- concrete mode


@dataclass(frozen=True)
class ConcreteCover:
    """A curve with a finite automorphism group over a field where every place
    with non-trivial stabilizer is rational."""

    model: HyperellipticModel
    group: tuple[CurveAutomorphism, ...]
    extension: int
    embed: object
    base: HyperellipticModel


def embed_automorphism(phi: CurveAutomorphism, emb) -> CurveAutomorphism:
    if phi.char2_involution:
        return phi
    return CurveAutomorphism(emb(phi.alpha), emb(phi.beta), emb(phi.lam))


def fixed_place_extension(model: HyperellipticModel, group) -> int:
    """Degree of an extension over which all branch points, the places at
    infinity and the places above every x-fixed point of the group are rational."""
    F = model.field
    d = model.splitting_degree()
    for phi in group:
        if phi.char2_involution or phi.alpha == 1:
            continue
        x0 = F.mul(phi.beta, F.inv(F.sub(1, phi.alpha)))
        if any(P.degree == 2 for P in places_over(model, x0)):
            d = lcm(d, 2)
    return d


def rationalize(model: HyperellipticModel, group, divisor: Divisor | None = None):
    """Base-change (model, group[, divisor]) so that fixed places are rational.

    Returns (cover, divisor_or_None).
    """
    group = tuple(group)
    _check_faithful(model, group)
    d = fixed_place_extension(model, group)
    if divisor is not None and any(P.degree == 2 for P in divisor.support()):
        d = lcm(d, 2)
    if d == 1:
        return ConcreteCover(model, group, 1, lambda c: c, model), divisor
    big, emb = model.base_change(d)
    bgroup = tuple(embed_automorphism(phi, emb) for phi in group)
    bD = None if divisor is None else base_change_divisor(divisor, model, big, emb)
    return ConcreteCover(big, bgroup, d, emb, model), bD


def _check_faithful(model, group) -> None:
    if len(set(group)) != len(group):
        raise NotFaithful("group list contains repeated automorphisms")
    check_group(model, group)


def _stabilizer(model, group, P: Place):
    return [phi for phi in group if place_image(model, phi, P) == P]


def lower_ramification(model: HyperellipticModel, stab, P: Place) -> dict:
    """i(s) = v_P(s^* t - t) for the non-identity elements s of the stabilizer of P."""
    t = local_parameter(model, P)
    out = {}
    for s in stab:
        if s.is_identity():
            continue
        diff = apply_automorphism(model, s, t) - t
        out[s] = valuation(model, diff, P)
    return out


def _filtration(stab_size: int, ivals: dict) -> tuple[int, ...]:
    if stab_size == 1:
        return ()
    top = max(ivals.values())
    return tuple(1 + sum(1 for i in ivals.values() if i >= j + 1) for j in range(top))


def _orbits(model, group, places):
    """Partition of the given places into G-orbits (each orbit sorted)."""
    seen = set()
    orbits = []
    for P in sorted(places):
        if P in seen:
            continue
        orb = sorted({place_image(model, phi, P) for phi in group})
        seen.update(orb)
        orbits.append(orb)
    return orbits


def _candidate_fixed_places(model, group) -> list[Place]:
    """Every place that can have a non-trivial stabilizer: places over branch
    points, over infinity, and over x-fixed points of the group elements."""
    F = model.field
    xs = {r.code for r, _ in model.branch_poly.roots()}
    for phi in group:
        if phi.char2_involution or phi.is_identity():
            continue
        if phi.alpha != 1:
            xs.add(F.mul(phi.beta, F.inv(F.sub(1, phi.alpha))))
        elif phi.beta == 0:
            # x is fixed pointwise; phi = (1, 0, lam) fixes exactly the places with y = 0
            xs.update(r.code for r, _ in model.f.roots())
    out = []
    for a in sorted(xs):
        out.extend(places_over(model, a))
    out.extend(places_over(model, None))
    return out


def ramification_points(cover: ConcreteCover) -> list[tuple[Place, int, tuple[int, ...]]]:
    """(P, e_P, filtration) for every ramification point of X -> X/G."""
    model, group = cover.model, cover.group
    out = []
    for P in sorted(set(_candidate_fixed_places(model, group))):
        stab = _stabilizer(model, group, P)
        if len(stab) == 1:
            continue
        if P.degree != 1:  # pragma: no cover - excluded by rationalize
            raise NeedsExtension(f"fixed place {P} is not rational", 2)
        ivals = lower_ramification(model, stab, P)
        out.append((P, len(stab), _filtration(len(stab), ivals)))
    return out


def profile_from_cover(cover: ConcreteCover) -> RamificationProfile:
    model, group = cover.model, cover.group
    n = len(group)
    pts = ramification_points(cover)
    info = {P: (e, filt) for P, e, filt in pts}
    records = []
    for orb in _orbits(model, group, list(info)):
        e, filt = info[orb[0]]
        records.append(BranchRecord(e, filt, orb[0].id))
    deg_R = sum((n // r.e) * r.delta for r in records)
    total = 2 * model.genus - 2 - deg_R
    if total % n or (total // n + 2) % 2:
        raise HurwitzInconsistent(f"no integer quotient genus: 2g_X-2-deg R = {total}, n = {n}")
    g_Y = (total // n + 2) // 2
    return RamificationProfile(n, g_Y, tuple(records), model.p)


def profile_from_curve(model: HyperellipticModel, group) -> RamificationProfile:
    """Ramification profile of X -> X/G, extending the field as needed."""
    cover, _ = rationalize(model, group)
    return profile_from_cover(cover)


def ramification_divisor(model: HyperellipticModel, group) -> Divisor:
    """R = sum of delta_P [P]; requires the ramification points to be rational."""
    cover = _rational_cover(model, group)
    return Divisor({P: sum(o - 1 for o in filt) for P, _, filt in ramification_points(cover)})


def _rational_cover(model, group) -> ConcreteCover:
    cover, _ = rationalize(model, group)
    if cover.extension > 1:
        raise NeedsExtension(f"ramification points need GF(q^{cover.extension})", cover.extension)
    return cover


def pullback_orbit(model: HyperellipticModel, group, P: Place) -> Divisor:
    """pi^*([pi(P)]) = sum over the orbit of P of e_P [P']."""
    orb = {place_image(model, phi, P) for phi in group}
    e = len(group) // len(orb)
    return Divisor({Q: e for Q in orb})


def canonical_divisor(model: HyperellipticModel, group) -> Divisor:
    """K_X = pi^*(K_Y) + R with K_Y = -2 [image of the first place at infinity]."""
    group = tuple(group)
    prof = profile_from_curve(model, group)
    if prof.g_Y != 0:
        raise QuotientNotRational(f"quotient has genus {prof.g_Y}; concrete mode needs g_Y = 0")
    R = ramification_divisor(model, group)
    P_inf = places_over(model, None)[0]
    return pullback_orbit(model, group, P_inf) * (-2) + R


def divisor_to_spec(cover: ConcreteCover, D: Divisor, profile: RamificationProfile | None = None) -> InvariantDivisorSpec:
    """Y-side coefficients of a G-invariant divisor D (on cover.model, all places rational)."""
    model, group = cover.model, cover.group
    if profile is None:
        profile = profile_from_cover(cover)
    for P, nP in D.items():
        if P.degree != 1:
            raise NeedsExtension(f"{P} is not rational; rationalize the divisor first", 2)
        for phi in group:
            if D.coeff(place_image(model, phi, P)) != nP:
                raise NotInvariant(f"D is not invariant: {P} and its image under {phi} differ")
    label_index = {b.label: i for i, b in enumerate(profile.branch)}
    branch = [0] * len(profile.branch)
    free: dict[int, int] = {}
    for orb in _orbits(model, group, D.support()):
        nq = D.coeff(orb[0])
        if orb[0].id in label_index:
            branch[label_index[orb[0].id]] = nq
        elif len(orb) == len(group):
            free[nq] = free.get(nq, 0) + 1
        else:
            # ramified orbit whose representative is not the labelled place
            lab = next((q.id for q in orb if q.id in label_index), None)
            if lab is None:
                raise EquicurveError(f"orbit {orb} is ramified but not in the profile")
            branch[label_index[lab]] = nq
    return InvariantDivisorSpec(tuple(branch), tuple(sorted(free.items())))


def concrete_divisor_spec(model: HyperellipticModel, group, D: Divisor):
    """(profile, spec, cover, D over the cover's field) for an invariant divisor on a concrete curve."""
    cover, bD = rationalize(model, group, D)
    prof = profile_from_cover(cover)
    return prof, divisor_to_spec(cover, bD, prof), cover, bD


def pushforward_floor(profile: RamificationProfile, spec: InvariantDivisorSpec) -> dict:
    """Coefficients floor(n_Q / e_Q) of floor(pi_* D / n) and its degree."""
    spec.check(profile)
    branch = [c // b.e for b, c in zip(profile.branch, spec.branch_coeffs)]
    free = [(nq, cnt) for nq, cnt in spec.free_orbits]
    return {"branch": branch, "free_orbits": free, "degree": deg_floor(profile, spec)}


def deg_floor(profile: RamificationProfile, spec: InvariantDivisorSpec) -> int:
    spec.check(profile)
    return sum(c // b.e for b, c in zip(profile.branch, spec.branch_coeffs)) + sum(
        nq * cnt for nq, cnt in spec.free_orbits
    )


def multiple_of_R_spec(profile: RamificationProfile, m: int) -> InvariantDivisorSpec:
    """The Y-side data of m R (n_Q = m delta_Q)."""
    return InvariantDivisorSpec(tuple(m * b.delta for b in profile.branch))

