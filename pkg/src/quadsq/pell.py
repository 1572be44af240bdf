"""Continued fractions of sqrt(D), fundamental units and small-norm Pell solutions."""

from __future__ import annotations

import math
from dataclasses import dataclass

from quadsq.errors import DomainError
from quadsq.quadfield import QuadInt, check_radicand

# Extra brute-force scan of y used as a cross-check of the convergent search.
DEFAULT_SCAN_BOUND = 10**6
MAX_I0 = 64


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    N: int

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "N": self.N}


@dataclass(frozen=True)
class UnitInfo:
    eps: QuadInt
    unit_norm: int

    def to_json(self) -> dict:
        return {"eps": self.eps.to_json(), "norm": self.unit_norm}


@dataclass(frozen=True)
class EtaDecomposition:
    omega: QuadInt
    eta: QuadInt
    i0: int


def _check_nonsquare(D: int) -> None:
    if D < 2 or math.isqrt(D) ** 2 == D:
        raise DomainError(f"D must be a non-square integer >= 2, got {D}")


def cf_sqrt(D: int) -> tuple[int, list[int]]:
    """Periodic continued fraction sqrt(D) = [a0; period]."""
    _check_nonsquare(D)
    a0 = math.isqrt(D)
    m, d, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return a0, period


def convergents(D: int, count: int):
    """First `count` convergents (p, q) of sqrt(D)."""
    a0, period = cf_sqrt(D)
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    yield p, q
    for k in range(count - 1):
        a = period[k % len(period)]
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        yield p, q


def fundamental_unit(D: int) -> UnitInfo:
    """Smallest unit > 1 of Z[sqrt(D)], from the convergent closing the first period."""
    _, period = cf_sqrt(D)
    *_, (x, y) = convergents(D, len(period))
    n = x * x - D * y * y
    expected = (-1) ** len(period)
    if n != expected:
        raise ArithmeticError(f"period convergent of sqrt({D}) has norm {n}")
    return UnitInfo(QuadInt(x, y, D), n)


def solve_small_norm(D: int, N: int, scan_bound: int = 0) -> PellSolution | None:
    """Least positive solution of x^2 - D*y^2 = N for |N| in {1, 2}.

    Solutions with |N| < sqrt(D) are convergents, so two periods suffice.  For
    small D that bound fails, and a direct scan of y up to the y of the least
    norm-one unit settles it (every solution class has a member below it).
    `scan_bound` > 0 adds a brute scan of y as a cross-check.
    """
    if abs(N) not in (1, 2):
        raise DomainError(f"only |N| in (1, 2) is supported, got {N}")
    _, period = cf_sqrt(D)
    best = None
    for x, y in convergents(D, 2 * len(period) + 1):
        if x * x - D * y * y == N:
            best = PellSolution(x, y, N)
            break
    if N * N >= D:
        unit = fundamental_unit(D)
        eps = unit.eps if unit.unit_norm == 1 else unit.eps * unit.eps
        unit_y = eps.b
        for y in range(1, unit_y + 1):
            if best is not None and y >= best.y:
                break
            x2 = N + D * y * y
            x = math.isqrt(x2) if x2 >= 0 else -1
            if x >= 0 and x * x == x2:
                best = PellSolution(x, y, N)
                break
    if scan_bound:
        for y in range(1, scan_bound + 1):
            if best is not None and y >= best.y:
                break
            x2 = N + D * y * y
            x = math.isqrt(x2) if x2 >= 0 else -1
            if x >= 0 and x * x == x2:
                raise ArithmeticError(f"scan found ({x}, {y}) below the convergent solution")
    return best


def gamma(d: int) -> int:
    """2 when d = 3 mod 4, else 1."""
    return 2 if d % 4 == 3 else 1


def solve_eq2(d: int) -> PellSolution | None:
    """Least solution of x^2 - d*y^2 = -gamma(d) over Z."""
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    check_radicand(d)
    return solve_small_norm(d, -gamma(d))


def eta_decomposition(D: int) -> EtaDecomposition | None:
    """omega = x0 + y0*sqrt(D) of norm +-2, eta = omega^2/2, and i0 with eta = eps^i0.

    D must be 2d with d odd and squarefree.  The solution of norm -2 is tried
    first; None when neither +-2 is a norm.
    """
    if D % 2 or (D // 2) % 2 == 0:
        raise DomainError(f"D must be twice an odd number, got {D}")
    check_radicand(D)
    sol = solve_small_norm(D, -2) or solve_small_norm(D, 2)
    if sol is None:
        return None
    omega = QuadInt(sol.x, sol.y, D)
    sq = omega * omega
    if sq.a % 2 or sq.b % 2:
        raise ArithmeticError("omega^2 has odd coordinates")
    eta = QuadInt(sq.a // 2, sq.b // 2, D)
    eps = fundamental_unit(D).eps
    one = QuadInt(1, 0, D)
    cur, i0 = eta, 0
    # eta > 1 since omega > sqrt(2), so only positive powers occur
    while cur != one:
        nxt = cur.exact_div(eps)
        i0 += 1
        if nxt is None or i0 > MAX_I0:
            raise ArithmeticError(f"eta is not a power of eps within {MAX_I0} steps")
        cur = nxt
    return EtaDecomposition(omega, eta, i0)
