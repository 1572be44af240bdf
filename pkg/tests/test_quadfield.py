import itertools

import pytest
from hypothesis import given, strategies as st

from quadsq.errors import DomainError
from quadsq.quadfield import (
    FieldSpec,
    NormProfile,
    QuadInt,
    SplitType,
    add,
    conj,
    mul,
    norm,
    norm_profile,
    solve_square_pair,
    splitting_type,
    sqrt_in_ring,
    totally_positive,
)

coef = st.integers(-100, 100)
RADICANDS = [-6, 6, -2, 2, -1, 3, -10, 10, 7, -14, 22]


@pytest.mark.parametrize("m", [0, 1, 4, -4, 12, 5, -3, 13])
def test_fieldspec_rejects(m):
    with pytest.raises(DomainError):
        FieldSpec(m)


def test_examples():
    F, G = FieldSpec(6), FieldSpec(-6)
    assert mul(F(1, 1), F(1, 1)) == F(7, 2)
    assert conj(G(3, 1)) == G(3, -1)
    assert add(G(0), G(4, -9)) == G(4, -9)
    assert norm(G(1, 2)) == 25
    assert norm(F(5, 2)) == 1
    assert norm(F(0)) == 0


def test_mismatched_fields():
    with pytest.raises(DomainError):
        QuadInt(1, 1, 6) + QuadInt(1, 1, -6)
    with pytest.raises(DomainError):
        mul(QuadInt(1, 1, 6), QuadInt(1, 1, 2))


@pytest.mark.parametrize(
    "p, m, want",
    [(5, -6, SplitType.SPLIT), (2, -6, SplitType.RAMIFIED), (13, -6, SplitType.INERT),
     (3, 6, SplitType.RAMIFIED), (5, 6, SplitType.SPLIT), (7, 6, SplitType.INERT)],
)
def test_splitting_type(p, m, want):
    assert splitting_type(p, FieldSpec(m)) is want


def test_sqrt_examples():
    assert sqrt_in_ring(QuadInt(7, 2, 6)) == QuadInt(1, 1, 6)
    assert sqrt_in_ring(QuadInt(2, 0, 6)) is None
    assert sqrt_in_ring(QuadInt(0, 0, 6)) == QuadInt(0, 0, 6)
    assert sqrt_in_ring(QuadInt(-6, 0, -6)) == QuadInt(0, 1, -6)
    assert sqrt_in_ring(QuadInt(-1, 0, -6)) is None


def test_totally_positive_examples():
    assert totally_positive(QuadInt(5, 2, 6))
    assert not totally_positive(QuadInt(1, 1, 6))
    assert totally_positive(QuadInt(1, 0, 6))
    with pytest.raises(DomainError):
        totally_positive(QuadInt(1, 0, -6))


def test_totally_positive_matches_floats():
    for a, b in itertools.product(range(-30, 31), repeat=2):
        x = QuadInt(a, b, 6)
        s = 6**0.5
        assert totally_positive(x) == (a + b * s > 0 and a - b * s > 0)


@pytest.mark.parametrize(
    "x, want",
    [
        (QuadInt(1, 2, -6), NormProfile(0, 0, ((5, 2),), 0, 1)),
        (QuadInt(5, 2, -6), NormProfile(0, 0, ((7, 2),), 0, 5)),
        (QuadInt(5, 2, 6), NormProfile(0, 0, (), 0, 5)),
        (QuadInt(-18, 1, -6), NormProfile(1, 1, ((5, 1), (11, 1)), 2, -2)),
    ],
)
def test_norm_profile(x, want):
    assert norm_profile(x) == want


def test_norm_profile_errors():
    with pytest.raises(DomainError):
        norm_profile(QuadInt(0, 1, -6))
    with pytest.raises(DomainError):
        norm_profile(QuadInt(0, 0, 6))


def test_norm_profile_invariants():
    for a, b in itertools.product(range(-25, 26), repeat=2):
        if a == 0:
            continue
        for m in (-6, 6):
            x = QuadInt(a, b, m)
            if x.norm() == 0:
                continue
            pr = norm_profile(x)
            assert pr.value() == abs(x.norm())
            assert 3**pr.s3 * pr.a1 == a and pr.a1 % 3


@pytest.mark.parametrize("m", [-6, 6])
@given(coef, coef, coef, coef)
def test_norm_multiplicative(m, a, b, c, d):
    x, y = QuadInt(a, b, m), QuadInt(c, d, m)
    assert (x * y).norm() == x.norm() * y.norm()


@pytest.mark.parametrize("m", [-6, 6])
@given(coef, coef, coef, coef)
def test_conj_is_ring_involution(m, a, b, c, d):
    x, y = QuadInt(a, b, m), QuadInt(c, d, m)
    assert conj(conj(x)) == x
    assert conj(x * y) == conj(x) * conj(y)
    assert conj(x + y) == conj(x) + conj(y)
    assert x * conj(x) == QuadInt(x.norm(), 0, m)


@pytest.mark.parametrize("m", RADICANDS)
def test_sqrt_of_squares(m):
    for y1, y2 in itertools.product(range(-50, 51), repeat=2):
        y = QuadInt(y1, y2, m)
        r = sqrt_in_ring(y * y)
        assert r is not None and r * r == y * y and r in (y, -y)


def test_solve_square_pair_against_naive():
    for m in (-6, 6, -2, 3):
        squares = {}
        for y1, y2 in itertools.product(range(-12, 13), repeat=2):
            squares.setdefault((y1 * y1 + m * y2 * y2, 2 * y1 * y2), set()).add((y1, y2))
        for c1 in range(-40, 41):
            for c2 in range(-40, 41):
                got = set(solve_square_pair(c1, c2, m))
                want = squares.get((c1, c2), set())
                # naive table is complete for these small targets
                assert got == want, (m, c1, c2)


@given(coef, coef, coef, coef)
def test_sums_of_two_squares_totally_positive(a, b, c, d):
    x, y = QuadInt(a, b, 6), QuadInt(c, d, 6)
    s = x * x + y * y
    if not s.is_zero():
        assert totally_positive(s) or s.norm() == 0


def test_parse_and_json():
    assert QuadInt.parse("-3, 4", -6) == QuadInt(-3, 4, -6)
    assert QuadInt.parse("7", 6) == QuadInt(7, 0, 6)
    assert QuadInt(2, -1, 6).to_json() == [2, -1]
    with pytest.raises(DomainError):
        QuadInt.parse("1,2,3", 6)
    with pytest.raises(DomainError):
        QuadInt.parse("x,2", 6)


def test_pow_and_exact_div():
    eps = QuadInt(5, 2, 6)
    assert eps**3 == eps * eps * eps
    assert (eps**3).exact_div(eps) == eps**2
    assert QuadInt(1, 0, 6).exact_div(QuadInt(2, 0, 6)) is None
