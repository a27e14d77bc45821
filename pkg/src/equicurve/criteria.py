"""Triviality and faithfulness criteria for group actions on L(D) and on
spaces of polydifferentials.

Each predicate returns a :class:`Verdict` naming the clause that decided it.
Clause labels follow the theorem labels used throughout the reports
("trivialD", "trivialD2", "trivialD3", "trivialD4(a)".."(d)", "faithful1",
"faithful2", "trivialPoly", "m=1").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import matrix_group_order
from .algebra.field import is_prime
from .errors import DegreeTooSmall, GenusTooSmall, HypothesisViolated
from .ramification import InvariantDivisorSpec, RamificationProfile, profile_from_curve

TRIVIAL = "trivial"
FAITHFUL = "faithful"
NON_FAITHFUL_NON_TRIVIAL = "non_faithful_non_trivial"
NON_TRIVIAL = "non_trivial"
OUTSIDE = "outside_hypotheses"


@dataclass(frozen=True)
class Verdict:
    result: str
    clause: str
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"result": self.result, "clause": self.clause, "detail": dict(self.detail)}


def _not_trivial(n: int, clause: str, detail: dict) -> Verdict:
    """A non-trivial action of a group of prime order is faithful; otherwise only
    non-triviality is known."""
    if is_prime(n):
        return Verdict(FAITHFUL, clause, {**detail, "prime_order": True})
    return Verdict(NON_TRIVIAL, clause, detail)


def trivial_action_iff(profile: RamificationProfile, spec: InvariantDivisorSpec) -> Verdict:
    """Above degree 2g_X - 2, G acts trivially on L(D) iff
    (n - 1) deg D = n (g_X - g_Y - sum_Q frac(n_Q / e_Q))."""
    deg = spec.degree(profile)
    gX, gY, n = profile.g_X, profile.g_Y, profile.n
    if deg <= 2 * gX - 2:
        raise DegreeTooSmall(f"deg D = {deg} <= 2g_X - 2 = {2 * gX - 2}")
    frac = spec.fractional_sum(profile)
    lhs = (n - 1) * deg
    rhs = n * (gX - gY - frac)
    detail = {"lhs": _num(lhs), "rhs": _num(rhs), "deg": deg}
    if Fraction(lhs) == rhs:
        return Verdict(TRIVIAL, "trivialD", detail)
    return _not_trivial(n, "trivialD", detail)


def _num(x) -> int | str:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def trivial_deg_ge_2g(profile: RamificationProfile, spec: InvariantDivisorSpec) -> Verdict:
    """For deg D >= 2 g_X: trivial iff deg D = 2 g_X, n = 2, g_Y = 0 and every
    ramification point has even coefficient."""
    deg = spec.degree(profile)
    gX, n = profile.g_X, profile.n
    if deg < 2 * gX or n < 2 or gX < 1:
        raise HypothesisViolated(f"needs deg D >= 2g_X, n >= 2, g_X >= 1 (deg {deg}, n {n}, g_X {gX})")
    checks = {
        "deg_eq_2g": deg == 2 * gX,
        "n_eq_2": n == 2,
        "gY_eq_0": profile.g_Y == 0,
        "ramified_coeffs_even": all(c % 2 == 0 for c in spec.branch_coeffs),
    }
    failing = [k for k, ok in checks.items() if not ok]
    if not failing:
        return Verdict(TRIVIAL, "trivialD2", {"checks": checks})
    return _not_trivial(n, "trivialD2", {"checks": checks, "failing": failing})


def trivial_deg_2gm1(profile: RamificationProfile, spec: InvariantDivisorSpec) -> Verdict:
    """For deg D = 2 g_X - 1: trivial iff g_Y = 0 and either n = 2 with exactly one
    ramification point of odd coefficient, or n = 3, g_X = 2 and every
    ramification point has coefficient divisible by 3."""
    deg = spec.degree(profile)
    gX, n = profile.g_X, profile.n
    if deg != 2 * gX - 1 or n < 2 or gX < 2:
        raise HypothesisViolated(f"needs deg D = 2g_X - 1, n >= 2, g_X >= 2 (deg {deg}, n {n}, g_X {gX})")
    # each branch point of a group of order 2 has exactly one point above it
    odd_points = sum((n // b.e) for b, c in zip(profile.branch, spec.branch_coeffs) if c % 2)
    branch_one = profile.g_Y == 0 and n == 2 and odd_points == 1
    branch_two = profile.g_Y == 0 and n == 3 and gX == 2 and all(c % 3 == 0 for c in spec.branch_coeffs)
    detail = {"gY": profile.g_Y, "n": n, "odd_ramified_points": odd_points}
    if branch_one:
        return Verdict(TRIVIAL, "trivialD3(n=2)", detail)
    if branch_two:
        return Verdict(TRIVIAL, "trivialD3(n=3)", detail)
    return _not_trivial(n, "trivialD3", detail)


def faithful_sufficient(profile: RamificationProfile, spec: InvariantDivisorSpec) -> Verdict:
    """Sufficient conditions for a faithful action on L(D), by degree and by the
    parity of the coefficients at ramification points."""
    deg = spec.degree(profile)
    gX = profile.g_X
    coeffs = spec.branch_coeffs
    detail = {"deg": deg, "gX": gX}
    if gX < 2:
        return Verdict(OUTSIDE, "trivialD4", {**detail, "reason": "g_X < 2"})
    if deg >= 2 * gX + 1:
        return Verdict(FAITHFUL, "trivialD4(a)", detail)
    if deg == 2 * gX and all(c % 2 for c in coeffs):
        return Verdict(FAITHFUL, "trivialD4(b)", detail)
    if deg == 2 * gX - 1 and gX >= 3 and all(c % 2 == 0 for c in coeffs):
        return Verdict(FAITHFUL, "trivialD4(c)", detail)
    if deg == 2 * gX - 1 and gX == 2 and all(c % 2 == 0 and c % 3 for c in coeffs):
        return Verdict(FAITHFUL, "trivialD4(d)", detail)
    return Verdict(OUTSIDE, "trivialD4", {**detail, "reason": "no sufficient condition applies"})


def faithful_polydiff(profile: RamificationProfile, m: int, has_hyperelliptic_involution: bool) -> Verdict:
    """Faithfulness of G on H^0(X, Omega^m)."""
    gX, n = profile.g_X, profile.n
    if gX < 2:
        raise GenusTooSmall(f"g_X = {gX} < 2")
    if m < 1:
        raise ValueError("m must be positive")
    detail = {"m": m, "gX": gX, "n": n, "hyperelliptic_involution": has_hyperelliptic_involution}
    if n == 1:
        return Verdict(FAITHFUL, "trivial group", detail)
    if m == 1:
        if not has_hyperelliptic_involution:
            return Verdict(FAITHFUL, "faithful1", detail)
        if profile.p is None:
            return Verdict(OUTSIDE, "faithful1", {**detail, "reason": "characteristic unknown"})
        if profile.p != 2:
            return Verdict(FAITHFUL, "faithful1", {**detail, "p": profile.p})
        if n == 2:
            return Verdict(TRIVIAL, "faithful1/p=2", {**detail, "p": 2, "also": "m=1"})
        return Verdict(NON_FAITHFUL_NON_TRIVIAL, "faithful1/p=2", {**detail, "p": 2})
    if profile.g_Y == 0 and n == 2 and gX == 2 and m == 2:
        return Verdict(TRIVIAL, "trivialPoly", detail)
    if has_hyperelliptic_involution and m == 2 and gX == 2:
        return Verdict(NON_FAITHFUL_NON_TRIVIAL, "faithful2", detail)
    return Verdict(FAITHFUL, "faithful2", detail)


def has_hyperelliptic_involution(model, group) -> bool:
    """Whether some element of order 2 has a quotient of genus 0 (Hurwitz from its fixed places)."""
    from .curve import compose, group_closure

    for phi in group:
        if phi.is_identity() or not compose(phi, phi, model).is_identity():
            continue
        if profile_from_curve(model, group_closure(model, [phi])).g_Y == 0:
            return True
    return False


def verdict_from_matrices(action, n: int) -> str:
    """Trivial, faithful or neither, read off the action matrices of all n group elements."""
    if action.is_trivial():
        return TRIVIAL
    if not action.matrices or action.dim == 0:
        return TRIVIAL
    if matrix_group_order(list(action.matrices)) == n:
        return FAITHFUL
    return NON_FAITHFUL_NON_TRIVIAL


def agrees(verdict: Verdict, matrix_result: str) -> bool:
    """Whether a predicate verdict is consistent with the matrix facts."""
    if verdict.result == OUTSIDE:
        return True
    if verdict.result == NON_TRIVIAL:
        return matrix_result != TRIVIAL
    return verdict.result == matrix_result


def divisor_verdict(profile: RamificationProfile, spec: InvariantDivisorSpec) -> Verdict:
    """The sharpest applicable criterion for the action on L(D)."""
    deg = spec.degree(profile)
    gX = profile.g_X
    suff = faithful_sufficient(profile, spec)
    if suff.result != OUTSIDE:
        return suff
    if gX >= 1 and deg >= 2 * gX:
        return trivial_deg_ge_2g(profile, spec)
    if gX >= 2 and deg == 2 * gX - 1:
        return trivial_deg_2gm1(profile, spec)
    if deg > 2 * gX - 2:
        return trivial_action_iff(profile, spec)
    return Verdict(OUTSIDE, "trivialD", {"deg": deg, "reason": "deg D <= 2g_X - 2"})
