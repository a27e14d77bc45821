"""Cross-validation of the closed-form formulas against linear algebra on a
concrete curve.  Shared by the ``check`` command and the test suite."""

from __future__ import annotations

import random

from .config import RunConfig, default_seed
from .criteria import (
    divisor_verdict,
    faithful_polydiff,
    has_hyperelliptic_involution,
    agrees,
    verdict_from_matrices,
)
from .curve import (
    Divisor,
    HyperellipticModel,
    group_closure,
    hyperelliptic_involution,
    order,
    place_image,
    rational_points,
)
from .deformation import GroupRepresentation, check_duality, check_groups_hypothesis, deformation_dim
from .differentials import action_on_polydiff, basis_polydiff, check_holomorphic, crosscheck_mKX, expected_size
from .errors import DegreeTooSmall
from .ramification import divisor_to_spec, profile_from_cover, rationalize
from .rrspace import action_on_rr, invariant_dim_concrete, invariant_dim_formula, invariant_dim_polydiff, rr_basis


def default_group(model: HyperellipticModel, gens=None) -> list:
    """Closure of ``gens``, or of the hyperelliptic involution when none are given."""
    gens = list(gens) if gens else [hyperelliptic_involution(model)]
    return group_closure(model, gens)


def rational_orbits(model: HyperellipticModel, group) -> list[list]:
    _, pts = rational_points(model, 1)
    seen, out = set(), []
    for P in pts:
        if P in seen:
            continue
        orb = sorted({place_image(model, phi, P) for phi in group})
        seen.update(orb)
        out.append(orb)
    return out


def invariant_divisor_sweep(model: HyperellipticModel, group, count: int, seed: int, lo=None, hi=None):
    """Random G-invariant divisors with lo < deg D <= hi (default 2g-2 < deg <= 8g).

    Divisors are supported on orbits of rational places of the rationalized
    cover; returns (cover, divisors).
    """
    cover, _ = rationalize(model, group)
    g = model.genus
    lo = 2 * g - 2 if lo is None else lo
    hi = 8 * g if hi is None else hi
    orbits = rational_orbits(cover.model, cover.group)
    rng = random.Random(seed)
    found: list[Divisor] = []
    seen = set()
    attempts = 0
    while len(found) < count and attempts < 200 * count:
        attempts += 1
        chosen = rng.sample(orbits, min(len(orbits), rng.randint(1, 3)))
        entries = {}
        for orb in chosen:
            c = rng.randint(-2, 2 * g + 2)
            for P in orb:
                entries[P] = c
        D = Divisor(entries)
        if lo < D.degree <= hi and D not in seen:
            seen.add(D)
            found.append(D)
    return cover, found


def group_shape(model: HyperellipticModel, group) -> dict | None:
    """Shape data proving dim M^G = dim M_G: N = G when p does not divide |G|,
    N = 1 when G is cyclic; None if neither applies."""
    n = len(group)
    if n % model.p:
        return {"N": n, "cyclicQuotient": 1}
    if any(order(model, phi) == n for phi in group):
        return {"N": 1, "cyclicQuotient": n}
    return None


def _item(name: str, ok: bool, **detail) -> dict:
    return {"name": name, "ok": bool(ok), **detail}


def run_checks(model: HyperellipticModel, group, config: RunConfig | None = None, sweep: int = 8, ms=range(1, 6)) -> dict:
    """Every cross-validation the library knows for (model, G); returns a JSON-ready report."""
    cfg = config or RunConfig()
    seed = cfg.seed if cfg.seed is not None else default_seed()
    group = list(group)
    n = len(group)
    cover, _ = rationalize(model, group)
    profile = profile_from_cover(cover)
    items = []

    lhs = 2 * model.genus - 2
    rhs = n * (2 * profile.g_Y - 2) + profile.deg_R
    items.append(_item("hurwitz", lhs == rhs and profile.g_X == model.genus, lhs=lhs, rhs=rhs, gX=profile.g_X))

    # Riemann-Roch and the invariant dimension on random invariant divisors
    bm, bg = cover.model, cover.group
    _, divisors = invariant_divisor_sweep(model, group, sweep, seed)
    for D in divisors:
        rr = rr_basis(bm, D, cfg)
        spec = divisor_to_spec(cover, D, profile)
        act = action_on_rr(bm, bg, rr)
        inv = invariant_dim_concrete(act)
        try:
            formula = invariant_dim_formula(profile, spec)
        except DegreeTooSmall:
            formula = None
        verdict = divisor_verdict(profile, spec)
        matrix = verdict_from_matrices(act, n)
        ok = rr.dim == D.degree + 1 - model.genus and (formula is None or formula == inv) and agrees(verdict, matrix)
        items.append(
            _item(
                "divisor",
                ok,
                divisor=D.to_json(),
                degree=D.degree,
                rr_dim=rr.dim,
                invariant=inv,
                invariant_formula=formula,
                verdict=verdict.result,
                clause=verdict.clause,
                matrix_result=matrix,
            )
        )

    # polydifferentials
    has_hyp = has_hyperelliptic_involution(model, group)
    reps = []
    for m in ms:
        basis = basis_polydiff(model, m)
        holo = all(check_holomorphic(model, basis))
        act = action_on_polydiff(model, group, m, basis)
        if act.dim:
            reps.append(GroupRepresentation(model.field, act.dim, act.matrices, n))
        inv = invariant_dim_concrete(act)
        formula = invariant_dim_polydiff(profile, m)
        detail = {"m": m, "basis_size": len(basis), "invariant": inv, "invariant_formula": formula, "holomorphic": holo}
        ok = holo and len(basis) == expected_size(model.genus, m) and inv == formula
        if profile.g_Y == 0:
            cross = crosscheck_mKX(model, group, m)
            detail["rr_dim_mK"] = cross["rr_dim"]
            detail["invariant_rr_mK"] = cross["invariant_rr"]
            ok = ok and cross["ok"]
        verdict = faithful_polydiff(profile, m, has_hyp)
        matrix = verdict_from_matrices(act, n)
        detail.update(verdict=verdict.result, clause=verdict.clause, matrix_result=matrix)
        items.append(_item("polydiff", ok and agrees(verdict, matrix), **detail))

    # deformation
    dd = deformation_dim(profile)
    hyp = check_groups_hypothesis(reps, profile.p, group_shape(model, group))
    dual_ok = all(check_duality(r) for r in reps)
    items.append(
        _item(
            "deformation",
            dd["dim"] == dd["crosscheck"] and dual_ok,
            dim=dd["dim"],
            crosscheck=dd["crosscheck"],
            hypothesis=hyp["hypothesis"],
            duality=dual_ok,
        )
    )
    return {
        "curve": model.to_json(),
        "group_order": n,
        "profile": profile.to_json(),
        "seed": seed,
        "checks": items,
        "ok": all(it["ok"] for it in items),
    }
