import random

import pytest

from conftest import box
from quadsq.errors import DomainError
from quadsq.oracle import OmegaInt, brute_force, check_one, cross_check, exhaustive_bound
from quadsq.quadfield import FieldSpec, QuadInt


def _is_witness(alpha, pair):
    x, y = pair
    return x * x + y * y == alpha


def test_alternative_witnesses_are_valid():
    G, F = FieldSpec(-6), FieldSpec(6)
    assert _is_witness(G(1, 2), (G(3, 1), G(-2, 1)))
    assert _is_witness(F(11, 4), (F(2, 1), F(1)))


def test_examples():
    G, F = FieldSpec(-6), FieldSpec(6)
    assert brute_force(G, G(1, 2), 10) == (G(-2, 1), G(3, 1))
    assert brute_force(F, F(11, 4), 10) == (F(-1), F(2, 1))
    assert brute_force(G, G(5, 1), 200) is None


def test_errors():
    with pytest.raises(DomainError):
        brute_force(FieldSpec(6), QuadInt(0, 0, 6), 5)
    with pytest.raises(DomainError):
        brute_force(FieldSpec(6), QuadInt(1, 0, 6), -1)
    with pytest.raises(DomainError):
        exhaustive_bound(QuadInt(1, 0, -6))


@pytest.mark.parametrize("m", [-6, 6, -2, 3])
def test_witness_validity(m):
    rng = random.Random(m)
    for _ in range(300):
        x = QuadInt(rng.randint(-9, 9), rng.randint(-9, 9), m)
        y = QuadInt(rng.randint(-9, 9), rng.randint(-9, 9), m)
        alpha = x * x + y * y
        if alpha.is_zero():
            continue
        hit = brute_force(m, alpha, 9)
        assert hit is not None and _is_witness(alpha, hit)


@pytest.mark.parametrize("m", [-6, 6])
def test_determinism_and_monotonicity(m):
    for alpha in box(m, 10):
        found = None
        for bound in (0, 1, 2, 4, 8, 16, 40):
            hit = brute_force(m, alpha, bound)
            assert hit == brute_force(m, alpha, bound)
            if found is not None:
                assert hit == found, (alpha, bound)
            found = found or hit


def test_large_values_use_exact_path():
    F = FieldSpec(6)
    x, y = F(10**12, 3), F(5, 7)
    alpha = x * x + y * y
    hit = brute_force(F, alpha, 8)
    assert hit is not None and _is_witness(alpha, hit)


def test_exhaustive_bound():
    assert exhaustive_bound(QuadInt(1, 1, 6)) == 0
    b = exhaustive_bound(QuadInt(5, 2, 6))
    assert b >= 3 and brute_force(6, QuadInt(5, 2, 6), b) is None


def test_maximal_order():
    # -1 is a sum of two squares in Z[(1+sqrt(-3))/2]
    hit = brute_force(-3, QuadInt(-1, 0, -3), 5)
    assert hit is not None and all(isinstance(t, OmegaInt) for t in hit)
    (X1, X2), (Y1, Y2) = hit[0].doubled(), hit[1].doubled()
    assert X1 * X1 - 3 * X2 * X2 + Y1 * Y1 - 3 * Y2 * Y2 == -4
    assert X1 * X2 + Y1 * Y2 == 0


def test_omega_str():
    assert str(OmegaInt(1, -2, -3)) == "1-2*w"
    assert str(OmegaInt(4, 0, -3)) == "4"


@pytest.mark.parametrize("m", [-6, 6])
def test_cross_check_small(m):
    rep = cross_check(m, 5, [10, 50], jobs=1)
    assert len(rep.rows) == 120
    assert rep.contradictions == []
    assert rep.not_totally_positive == []
    assert sum(rep.counts.values()) == 120


def test_cross_check_range_one():
    rep = cross_check(-6, 1, [10], jobs=1)
    assert len(rep.rows) == 8 and not rep.contradictions


def test_cross_check_parallel_matches_serial():
    a = cross_check(6, 6, [10, 50], jobs=1)
    b = cross_check(6, 6, [10, 50], jobs=2)
    assert [r.to_json() for r in a.rows] == [r.to_json() for r in b.rows]


def test_cross_check_rejects():
    with pytest.raises(DomainError):
        cross_check(-5, 2, [10])
    with pytest.raises(DomainError):
        cross_check(6, 2, [])


def test_check_one_row():
    row = check_one(-6, 1, 2, (10, 50))
    assert row.to_json() == {
        "alpha": [1, 2],
        "verdict": "Solvable",
        "reasons": ["P1_NONEMPTY(5)"],
        "witness": [[-2, 1], [3, 1]],
        "bound_used": 10,
    }
    assert check_one(-6, 5, 1, (10,)).to_json()["witness"] is None


def test_summary_shape():
    s = cross_check(-6, 2, [10], jobs=1).summary()
    assert list(s) == ["m", "range", "bounds", "elements", "counts", "max_witness_bound",
                       "contradictions", "unknown", "not_totally_positive"]
    assert s["elements"] == 24
