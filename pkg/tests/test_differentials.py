from __future__ import annotations

import pytest

import corpus
from equicurve.algebra import Matrix
from equicurve.curve import hyperelliptic_involution
from equicurve.differentials import (
    action_on_polydiff,
    basis_polydiff,
    check_holomorphic,
    crosscheck_mKX,
    expected_size,
)
from equicurve.errors import GenusTooSmall, QuotientNotRational
from equicurve.ramification import BranchRecord, RamificationProfile, profile_from_curve
from equicurve.rrspace import invariant_dim_concrete, invariant_dim_polydiff


def _labels(basis):
    return [w.label() for w in basis]


def test_reference_bases(C1, C2):
    assert _labels(basis_polydiff(C1, 1)) == ["1*omega", "x*omega"]
    assert _labels(basis_polydiff(C1, 2)) == ["1*omega", "x*omega", "x^2*omega"]
    assert _labels(basis_polydiff(C1, 3)) == ["1*omega", "x*omega", "x^2*omega", "x^3*omega", "y*omega"]
    assert _labels(basis_polydiff(C2, 2)) == ["1*omega", "x*omega", "x^2*omega"]


def test_expected_sizes():
    assert [expected_size(2, m) for m in range(1, 6)] == [2, 3, 5, 7, 9]
    assert [expected_size(4, m) for m in range(1, 4)] == [4, 9, 15]


def test_errors(C1):
    with pytest.raises(ValueError):
        basis_polydiff(C1, 0)
    with pytest.raises(GenusTooSmall):
        invariant_dim_polydiff(RamificationProfile(2, 0, (BranchRecord.tame(2),) * 4), 1)


def _sigma_matrix(model, m):
    return action_on_polydiff(model, [hyperelliptic_involution(model)], m).matrices[0]


def test_reference_actions(C1, C2):
    F = C1.field
    assert _sigma_matrix(C1, 2).is_identity()
    assert _sigma_matrix(C1, 3) == Matrix.from_ints(
        F, [[-1 if i == j and i < 4 else (1 if i == j else 0) for j in range(5)] for i in range(5)]
    )
    assert _sigma_matrix(C1, 1) == Matrix.from_ints(F, [[-1, 0], [0, -1]])
    assert _sigma_matrix(C2, 1).is_identity()


@pytest.mark.parametrize("name", list(corpus.sweep_models()))
def test_sweep_bases(name):
    model = corpus.sweep_models()[name]
    G = corpus.sigma_group(model)
    prof = profile_from_curve(model, G)
    for m in range(1, 6):
        basis = basis_polydiff(model, m)
        assert len(basis) == expected_size(model.genus, m)
        assert all(check_holomorphic(model, basis))
        act = action_on_polydiff(model, G, m, basis)
        assert invariant_dim_concrete(act) == invariant_dim_polydiff(prof, m)


def test_crosscheck_reference(C1, G1, C2, G2):
    r = crosscheck_mKX(C1, G1, 2)
    assert (r["rr_dim"], r["basis_size"], r["invariant_rr"], r["invariant_formula"]) == (3, 3, 3, 3)
    r = crosscheck_mKX(C2, G2, 1)
    assert (r["rr_dim"], r["basis_size"], r["invariant_rr"], r["invariant_formula"]) == (2, 2, 2, 2)
    r = crosscheck_mKX(C1, G1, 1)
    assert r["ok"] and r["invariant_basis"] == 0


@pytest.mark.parametrize("group", ["tau", "sigma,tau"])
def test_crosscheck_larger_groups(group):
    model = corpus.c1()
    G = corpus.c1_groups()[group]
    for m in range(1, 4):
        assert crosscheck_mKX(model, G, m)["ok"]


def test_elliptic_quotient():
    # x -> -x has quotient y^2 = u^3 - 1 of genus 1: no rational K_Y, but the
    # basis action still matches the closed form
    model = corpus.c1()
    G = corpus.c1_groups()["x->-x"]
    prof = profile_from_curve(model, G)
    assert prof.g_Y == 1 and len(prof.branch) == 2
    with pytest.raises(QuotientNotRational):
        crosscheck_mKX(model, G, 2)
    for m in range(1, 6):
        assert invariant_dim_concrete(action_on_polydiff(model, G, m)) == invariant_dim_polydiff(prof, m)
