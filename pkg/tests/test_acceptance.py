"""Acceptance criteria 1-9: exact oracle-vs-formula agreement within time limits.

Each test records a one-line PASS/FAIL summary, printed at the end of the run
by the hook in conftest.py.
"""

from __future__ import annotations

import io
import json
import time
from contextlib import contextmanager

import pytest

import corpus
from equicurve.algebra import Matrix, Poly
from equicurve.cli import main
from equicurve.criteria import (
    FAITHFUL,
    TRIVIAL,
    agrees,
    faithful_polydiff,
    faithful_sufficient,
    has_hyperelliptic_involution,
    trivial_action_iff,
    trivial_deg_ge_2g,
    verdict_from_matrices,
)
from equicurve.curve import Divisor, curve_validate, infinity_divisor, model_genus, rational_points
from equicurve.deformation import check_duality, deformation_dim, inv_coinv_dims, z3_squared_example
from equicurve.differentials import action_on_polydiff, basis_polydiff, check_holomorphic, expected_size
from equicurve.goppa import auto_points, code_action, goppa_build, min_distance_bruteforce, rr_action_faithful
from equicurve.ramification import (
    BranchRecord,
    RamificationProfile,
    concrete_divisor_spec,
    divisor_to_spec,
    profile_from_cover,
    profile_from_curve,
)
from equicurve.rrspace import (
    action_on_rr,
    dimD_bound,
    dimD_hypothesis,
    invariant_dim_concrete,
    invariant_dim_formula,
    invariant_dim_polydiff,
    rr_basis,
)
from equicurve.verify import default_group, invariant_divisor_sweep

RESULTS: dict[int, str] = {}
SEED = 20240601


@contextmanager
def criterion(number: int, title: str, limit: float | None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        RESULTS[number] = f"criterion {number} FAIL  {title}"
        raise
    elapsed = time.perf_counter() - start
    ok = limit is None or elapsed < limit
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    RESULTS[number] = f"criterion {number} {'PASS' if ok else 'FAIL'}  {title}: {elapsed:.2f} s{budget}"
    assert ok, f"took {elapsed:.2f} s, limit {limit} s"


def _sweeps():
    """30 random invariant divisors with 2g-2 < deg <= 8g on each of C1 and C2."""
    out = []
    for model in (corpus.c1(), corpus.c2()):
        G = default_group(model)
        cover, divisors = invariant_divisor_sweep(model, G, 30, SEED)
        out.append((model, G, cover, divisors))
    return out


def test_criterion_1_genus_bookkeeping():
    with criterion(1, "genus bookkeeping", 1.0):
        for model in (corpus.c1(), corpus.c2()):
            assert curve_validate(model) == 2
            prof = profile_from_curve(model, default_group(model))
            assert 2 * prof.g_X - 2 == prof.n * (2 * prof.g_Y - 2) + prof.deg_R == 2
            assert prof.n * (2 * prof.g_Y - 2) == -4 and prof.deg_R == 6
        F = corpus.c2().field
        for r in (3, 5, 7, 9):
            assert model_genus(F, Poly(F, [0] * r + [1]), Poly(F, [1])) == (r - 1) // 2


def test_criterion_2_riemann_roch():
    with criterion(2, "oracle vs Riemann-Roch on >= 50 invariant divisors", 30.0):
        total = 0
        for model, _, cover, divisors in _sweeps():
            g = model.genus
            for D in divisors:
                assert 2 * g - 2 < D.degree <= 8 * g
                assert rr_basis(cover.model, D).dim == D.degree + 1 - g
                total += 1
        assert total >= 50


def test_criterion_3_invariant_dimension_formula():
    with criterion(3, "oracle vs invariant-dimension formula", 60.0):
        checked = wild_low = 0
        for model, _, cover, divisors in _sweeps():
            prof = profile_from_cover(cover)
            for D in divisors:
                spec = divisor_to_spec(cover, D, prof)
                if not dimD_hypothesis(prof, spec):
                    continue
                inv = invariant_dim_concrete(action_on_rr(cover.model, cover.group, rr_basis(cover.model, D)))
                assert inv == invariant_dim_formula(prof, spec)
                checked += 1
        # wild C2: the degree bound is negative, so low-degree divisors are covered too
        c2 = corpus.c2()
        cover, low = invariant_divisor_sweep(c2, default_group(c2), 12, SEED, lo=-3, hi=2)
        prof = profile_from_cover(cover)
        assert dimD_bound(prof) == -3
        for D in low:
            spec = divisor_to_spec(cover, D, prof)
            inv = invariant_dim_concrete(action_on_rr(cover.model, cover.group, rr_basis(cover.model, D)))
            assert inv == invariant_dim_formula(prof, spec)
            wild_low += 1
        assert checked >= 50 and wild_low >= 10


def test_criterion_4_polydifferential_dimensions():
    with criterion(4, "polydifferential bases and invariant dimensions", 60.0):
        genera = set()
        for name, model in corpus.sweep_models().items():
            G = default_group(model)
            prof = profile_from_curve(model, G)
            genera.add((model.genus, model.p == 2))
            for m in range(1, 6):
                basis = basis_polydiff(model, m)
                assert len(basis) == (model.genus if m == 1 else (2 * m - 1) * (model.genus - 1)) == expected_size(model.genus, m)
                assert all(check_holomorphic(model, basis)), (name, m)
                act = action_on_polydiff(model, G, m, basis)
                assert invariant_dim_concrete(act) == invariant_dim_polydiff(prof, m), (name, m)
        assert {(g, c) for g in (2, 3, 4) for c in (False, True)} <= genera
        c1, c2 = corpus.c1(), corpus.c2()
        assert invariant_dim_concrete(action_on_polydiff(c1, default_group(c1), 2)) == 3
        assert invariant_dim_concrete(action_on_polydiff(c2, default_group(c2), 1)) == 2


def test_criterion_5_faithfulness_table():
    with criterion(5, "faithfulness verdicts vs generated matrix groups", 60.0):
        cases = [(name, m, default_group(m)) for name, m in corpus.sweep_models().items()]
        c1 = corpus.c1()
        cases += [(f"C1/{name}", c1, G) for name, G in corpus.c1_groups().items()]
        non_faithful = set()
        for name, model, G in cases:
            prof = profile_from_curve(model, G)
            hyp = has_hyperelliptic_involution(model, G)
            for m in range(1, 6):
                verdict = faithful_polydiff(prof, m, hyp)
                matrix = verdict_from_matrices(action_on_polydiff(model, G, m), len(G))
                assert agrees(verdict, matrix), (name, m, verdict, matrix)
                expected_non_faithful = hyp and ((m == 1 and model.p == 2) or (m == 2 and model.genus == 2))
                assert (matrix != FAITHFUL) == expected_non_faithful, (name, m, matrix)
                if matrix != FAITHFUL:
                    non_faithful.add((name, m))
        assert ("C2", 1) in non_faithful and ("C1", 2) in non_faithful and ("C1/sigma,tau", 2) in non_faithful


def test_criterion_6_triviality_criteria():
    with criterion(6, "triviality criteria on C1", None):
        c1 = corpus.c1()
        G = default_group(c1)
        prof, spec, cover, D2 = concrete_divisor_spec(c1, G, infinity_divisor(c1) * 2)
        v = trivial_action_iff(prof, spec)
        assert v.result == TRIVIAL and v.detail["lhs"] == v.detail["rhs"] == 4
        assert trivial_deg_ge_2g(prof, spec).result == TRIVIAL
        sigma = [phi for phi in G if not phi.is_identity()]
        act = action_on_rr(c1, sigma, rr_basis(c1, D2))
        assert act.matrices[0] == Matrix.identity(c1.field, 3)
        prof, spec, _, D3 = concrete_divisor_spec(c1, G, infinity_divisor(c1) * 3)
        v = faithful_sufficient(prof, spec)
        assert (v.result, v.clause) == (FAITHFUL, "trivialD4(a)")
        M = action_on_rr(c1, sigma, rr_basis(c1, D3)).matrices[0]
        # basis 1, x, x^2, x^3, y: fixed on k(x), sign change on y
        assert M == Matrix.from_ints(c1.field, [[1 if i == j else 0 for j in range(5)] for i in range(4)] + [[0, 0, 0, 0, -1]])


def test_criterion_7_goppa():
    with criterion(7, "Goppa codes and the induced action", 120.0):
        c1 = corpus.c1()
        G = default_group(c1)
        D = infinity_divisor(c1) * 2
        E = [P for P in rational_points(c1)[1] if P.is_finite and P.y == 0]
        code = goppa_build(c1, D, E)
        assert (code.n, code.k) == (6, 3)
        d = min_distance_bruteforce(code)
        assert d == 4 and d >= code.n - D.degree
        act = code_action(c1, G, code)
        assert act.stable and all(p == tuple(range(6)) for p in act.permutations)
        big, bD, pts, ext = auto_points(c1, infinity_divisor(c1) * 3)
        assert big.field.q == 49 and len(pts) > 6
        bG = default_group(big)
        big_code = goppa_build(big, bD, pts)
        act = code_action(big, bG, big_code)
        assert act.lemma_applies and act.code_action_faithful and rr_action_faithful(big, bG, big_code)


def test_criterion_8_deformation():
    with criterion(8, "deformation dimension and the invariants/coinvariants example", 5.0):
        profiles = [profile_from_curve(m, default_group(m)) for m in corpus.sweep_models().values()]
        profiles.append(RamificationProfile(2, 1, (BranchRecord.tame(2), BranchRecord.tame(2))))
        values = [deformation_dim(p) for p in profiles]
        assert all(v["dim"] == v["crosscheck"] for v in values)
        assert values[0] == {"dim": 3, "crosscheck": 3} and values[1] == {"dim": 3, "crosscheck": 3}
        assert values[-1] == {"dim": 2, "crosscheck": 2}
        rep = z3_squared_example()
        assert inv_coinv_dims(rep) == (1, 2) and check_duality(rep)


def test_criterion_9_determinism(tmp_path):
    with criterion(9, "check report is byte-identical across runs", None):
        path = tmp_path / "C1.json"
        path.write_text(json.dumps(corpus.C1_JSON))
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            assert main(["check", "--curve", str(path)], buf, io.StringIO()) == 0
            outs.append(buf.getvalue().encode())
        assert outs[0] == outs[1] and json.loads(outs[0])["ok"]
