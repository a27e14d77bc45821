from __future__ import annotations

import itertools

import pytest

from equicurve.curve import Divisor, infinity_divisor, places_over, rational_points
from equicurve.errors import BoundExceeded, NoCodewords, SupportOverlap
from equicurve.goppa import auto_points, code_action, goppa_build, min_distance_bruteforce, rr_action_faithful
from equicurve.verify import default_group


def weierstrass(C1):
    return [P for P in rational_points(C1)[1] if P.is_finite and P.y == 0]


def _weight_oracle(code) -> int:
    """Minimum weight over every non-zero message, with no projective shortcut."""
    F = code.field
    rows = code.generator.rows
    best = code.n
    for msg in itertools.product(range(F.q), repeat=len(rows)):
        if not any(msg):
            continue
        word = [0] * code.n
        for c, row in zip(msg, rows):
            for i, r in enumerate(row):
                word[i] = F.add(word[i], F.mul(c, r))
        w = sum(1 for x in word if x)
        if w:
            best = min(best, w)
    return best


def test_weierstrass_code(C1, G1):
    E = weierstrass(C1)
    assert len(E) == 6
    code = goppa_build(C1, infinity_divisor(C1) * 2, E)
    assert (code.n, code.k) == (6, 3)
    # the generator rows are 1, a, a^2 evaluated at the six points
    assert code.generator.to_lists() == [[1] * 6, [P.a for P in E], [P.a * P.a % 7 for P in E]]
    d = min_distance_bruteforce(code)
    assert d == 4 == _weight_oracle(code)
    assert d >= code.n - infinity_divisor(C1).degree * 2
    act = code_action(C1, G1, code)
    assert act.stable and all(p == tuple(range(6)) for p in act.permutations)
    assert not rr_action_faithful(C1, G1, code)


def test_support_overlap(C1):
    D = infinity_divisor(C1) * 2 + Divisor({weierstrass(C1)[0]: 1})
    with pytest.raises(SupportOverlap):
        goppa_build(C1, D, weierstrass(C1))


def test_constant_code_has_full_distance(C1):
    E = weierstrass(C1)[:4]
    code = goppa_build(C1, Divisor({}), E)
    assert code.k == 1 and min_distance_bruteforce(code) == 4


def test_zero_dimensional_code(C1):
    code = goppa_build(C1, infinity_divisor(C1) * -1, weierstrass(C1))
    assert code.k == 0
    with pytest.raises(NoCodewords):
        min_distance_bruteforce(code)


def test_codeword_bound(C1):
    code = goppa_build(C1, infinity_divisor(C1) * 2, weierstrass(C1))
    with pytest.raises(BoundExceeded):
        min_distance_bruteforce(code, max_codewords=10)


def test_gf49_certificate(C1, G1):
    # over GF(7) only six points lie off D_inf, which does not beat deg D = 6
    assert len(rational_points(C1)[1]) - 2 == 6
    big, bD, pts, d = auto_points(C1, infinity_divisor(C1) * 3)
    assert d == 2 and big.field.q == 49 and len(pts) > 6
    G = default_group(big)
    code = goppa_build(big, bD, pts)
    act = code_action(big, G, code)
    assert act.lemma_applies and act.stable and act.permutations_distinct and act.code_action_faithful
    assert rr_action_faithful(big, G, code)


def test_boundary_point_count_is_not_certified(C1, G1):
    # |E| = deg D: injectivity of evaluation is not guaranteed
    D = infinity_divisor(C1) * 3
    E = [P for P in rational_points(C1)[1] if P not in D.support()][:6]
    code = goppa_build(C1, D, E)
    assert not code_action(C1, G1, code).lemma_applies


def test_alist_export(C1):
    code = goppa_build(C1, infinity_divisor(C1) * 2, weierstrass(C1))
    lines = code.to_alist().splitlines()
    assert lines[0] == "6 3 7" and len(lines) == 4
