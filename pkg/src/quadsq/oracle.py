"""Brute-force search for x^2 + y^2 = alpha and batch cross-checks of `decide`.

The search enumerates x in a box and tests alpha - x^2 for an exact square
root, so a failed search is evidence, never a proof of unsolvability.
"""

from __future__ import annotations

import functools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from quadsq.errors import DomainError
from quadsq.quadfield import FieldSpec, QuadInt, check_radicand, solve_square_pair, totally_positive

DEFAULT_SCHEDULE = (10, 50, 200, 500)
_INT64_SAFE = 2**31


@dataclass(frozen=True)
class OmegaInt:
    """x1 + x2*w with w = (1 + sqrt(m))/2, for m = 1 mod 4."""

    x1: int
    x2: int
    m: int

    def to_json(self) -> list[int]:
        return [self.x1, self.x2]

    def doubled(self) -> tuple[int, int]:
        """(X1, X2) with self = (X1 + X2*sqrt(m))/2."""
        return 2 * self.x1 + self.x2, self.x2

    def __str__(self):
        if self.x2 == 0:
            return str(self.x1)
        sign = "+" if self.x2 > 0 else "-"
        return f"{self.x1}{sign}{abs(self.x2)}*w"


@functools.lru_cache(maxsize=8)
def _box(bound: int, m: int, maximal: bool):
    """Box |x1|, |x2| <= bound in witness order (max-norm, L1, x1, x2), with the
    coordinates (Q, P) of x^2, scaled by 4 in the maximal-order case."""
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    x1, x2 = np.meshgrid(r, r, indexing="ij")
    x1, x2 = x1.ravel(), x2.ravel()
    a1, a2 = np.abs(x1), np.abs(x2)
    order = np.lexsort((x2, x1, a1 + a2, np.maximum(a1, a2)))
    x1, x2 = x1[order], x2[order]
    if maximal:
        X1, X2 = 2 * x1 + x2, x2
    else:
        X1, X2 = x1, x2
    return x1, x2, X1 * X1 + m * X2 * X2, 2 * X1 * X2


def _perfect_square_mask(v: np.ndarray) -> np.ndarray:
    ok = v >= 0
    r = np.rint(np.sqrt(np.where(ok, v, 0).astype(np.float64))).astype(np.int64)
    return ok & (r * r == v)


def _root(m: int, c1: int, c2: int, maximal: bool):
    for y1, y2 in solve_square_pair(int(c1), int(c2), m):
        if not maximal:
            return y1, y2
        if (y1 - y2) % 2 == 0:
            return y1, y2
    return None


def _wrap(m: int, x1: int, x2: int, root, maximal: bool):
    y1, y2 = root
    if maximal:
        return OmegaInt(x1, x2, m), OmegaInt((y1 - y2) // 2, y2, m)
    return QuadInt(x1, x2, m), QuadInt(y1, y2, m)


def _verify(alpha: QuadInt, x, y) -> bool:
    if isinstance(x, QuadInt):
        return x * x + y * y == alpha
    m = alpha.m
    X1, X2 = x.doubled()
    Y1, Y2 = y.doubled()
    return (
        X1 * X1 + m * X2 * X2 + Y1 * Y1 + m * Y2 * Y2 == 4 * alpha.a
        and 2 * (X1 * X2 + Y1 * Y2) == 4 * alpha.b
    )


def brute_force(f: FieldSpec | int, alpha: QuadInt, bound: int):
    """First (x, y) with x^2 + y^2 = alpha and |x1|, |x2| <= bound, or None.

    Candidates x are taken in order of (max(|x1|,|x2|), |x1|+|x2|, x1, x2), so
    a witness found at one bound is the witness at every larger bound.  For a
    radicand m = 1 mod 4 the search runs over the maximal order, coordinates
    in the basis (1, (1 + sqrt(m))/2), and returns OmegaInt pairs.
    """
    m = f.m if isinstance(f, FieldSpec) else check_radicand(f)
    if alpha.is_zero():
        raise DomainError("alpha must be nonzero")
    if bound < 0:
        raise DomainError("bound must be non-negative")
    maximal = m % 4 == 1
    A, Bc = (4 * alpha.a, 4 * alpha.b) if maximal else (alpha.a, alpha.b)
    if Bc % 2:
        # the sqrt(m)-coordinate of x^2 + y^2 is always even
        return None
    scale = 3 * bound + 1
    big = abs(A) + abs(Bc) + scale * scale * (abs(m) + 1)
    if big < _INT64_SAFE:
        x1, x2, Q, P = _box(bound, m, maximal)
        c1, c2 = A - Q, Bc - P
        idx = np.nonzero(_perfect_square_mask(c1 * c1 - m * c2 * c2))[0]
        candidates = ((int(x1[i]), int(x2[i]), int(c1[i]), int(c2[i])) for i in idx)
    else:
        r = range(-bound, bound + 1)
        pts = sorted(((u1, u2) for u1 in r for u2 in r), key=lambda t: (max(abs(t[0]), abs(t[1])), abs(t[0]) + abs(t[1]), t))
        candidates = _python_candidates(m, alpha, pts, maximal)
    for u1, u2, c1_, c2_ in candidates:
        root = _root(m, c1_, c2_, maximal)
        if root is None:
            continue
        x, y = _wrap(m, u1, u2, root, maximal)
        if not _verify(alpha, x, y):
            raise ArithmeticError(f"invalid witness {x}, {y} for {alpha}")
        return x, y
    return None


def exhaustive_bound(alpha: QuadInt) -> int:
    """Box size that makes brute_force complete for a real field.

    Every solution of x^2 + y^2 = alpha has |x| at most sqrt(alpha) in each
    real embedding, hence |x1|, |x2| <= sqrt(a + |b|*sqrt(m)).
    """
    if alpha.m < 0:
        raise DomainError("only real fields have a finite search box")
    if not totally_positive(alpha):
        return 0
    top = alpha.a + math.isqrt(alpha.b * alpha.b * alpha.m) + 1
    return math.isqrt(top) + 1


def _python_candidates(m, alpha, pts, maximal):
    for u1, u2 in pts:
        if maximal:
            X1, X2 = 2 * u1 + u2, u2
            c1, c2 = 4 * alpha.a - X1 * X1 - m * X2 * X2, 4 * alpha.b - 2 * X1 * X2
        else:
            c1, c2 = alpha.a - u1 * u1 - m * u2 * u2, alpha.b - 2 * u1 * u2
        yield u1, u2, c1, c2


@dataclass
class ScanRow:
    alpha: QuadInt
    verdict: str
    reasons: list[str]
    witness: tuple | None
    bound_used: int | None
    contradiction: str | None = None

    def to_json(self) -> dict:
        w = None if self.witness is None else [self.witness[0].to_json(), self.witness[1].to_json()]
        return {
            "alpha": self.alpha.to_json(),
            "verdict": self.verdict,
            "reasons": self.reasons,
            "witness": w,
            "bound_used": self.bound_used,
        }


@dataclass
class CrossCheckReport:
    m: int
    coeff_range: int
    schedule: tuple[int, ...]
    rows: list[ScanRow] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {"Solvable": 0, "Unsolvable": 0, "UnknownByCriterion": 0}
        for r in self.rows:
            out[r.verdict] += 1
        return out

    @property
    def contradictions(self) -> list[ScanRow]:
        return [r for r in self.rows if r.contradiction]

    @property
    def unknown(self) -> list[ScanRow]:
        return [r for r in self.rows if r.verdict == "UnknownByCriterion"]

    @property
    def max_witness_bound(self) -> int | None:
        bounds = [r.bound_used for r in self.rows if r.bound_used is not None]
        return max(bounds) if bounds else None

    @property
    def not_totally_positive(self) -> list[ScanRow]:
        if self.m < 0:
            return []
        return [r for r in self.rows if r.verdict == "Solvable" and not totally_positive(r.alpha)]

    def summary(self) -> dict:
        return {
            "m": self.m,
            "range": self.coeff_range,
            "bounds": list(self.schedule),
            "elements": len(self.rows),
            "counts": self.counts,
            "max_witness_bound": self.max_witness_bound,
            "contradictions": [r.to_json() | {"kind": r.contradiction} for r in self.contradictions],
            "unknown": [r.alpha.to_json() for r in self.unknown],
            "not_totally_positive": [r.alpha.to_json() for r in self.not_totally_positive],
        }


def check_one(m: int, a: int, b: int, schedule: tuple[int, ...]) -> ScanRow:
    from quadsq.criteria import decide

    alpha = QuadInt(a, b, m)
    dec = decide(m, alpha)
    row = ScanRow(alpha, dec.verdict.value, list(dec.reasons), None, None)
    if dec.verdict.value == "Solvable":
        for bound in schedule:
            hit = brute_force(m, alpha, bound)
            if hit is not None:
                row.witness, row.bound_used = hit, bound
                break
        else:
            row.contradiction = "NO_WITNESS"
    else:
        hit = brute_force(m, alpha, schedule[-1])
        if hit is not None:
            row.witness, row.bound_used = hit, schedule[-1]
            if dec.verdict.value == "Unsolvable":
                row.contradiction = "WITNESS_FOR_UNSOLVABLE"
    return row


def _check_chunk(args):
    m, pairs, schedule = args
    return [check_one(m, a, b, schedule) for a, b in pairs]


def default_jobs() -> int:
    env = os.environ.get("QUADSQ_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def cross_check(
    f: FieldSpec | int,
    coeff_range: int,
    bound_schedule=DEFAULT_SCHEDULE,
    jobs: int | None = None,
) -> CrossCheckReport:
    """Run decide and the brute-force oracle over every nonzero a + b*sqrt(m), |a|, |b| <= coeff_range."""
    m = f.m if isinstance(f, FieldSpec) else FieldSpec(f).m
    from quadsq.criteria import DECIDABLE_FIELDS

    if m not in DECIDABLE_FIELDS:
        raise DomainError(f"cross_check needs m in {DECIDABLE_FIELDS}")
    schedule = tuple(sorted(bound_schedule))
    if not schedule or schedule[0] <= 0:
        raise DomainError("bound schedule must be positive")
    R = coeff_range
    pairs = [(a, b) for a in range(-R, R + 1) for b in range(-R, R + 1) if (a, b) != (0, 0)]
    jobs = jobs or default_jobs()
    report = CrossCheckReport(m, coeff_range, schedule)
    if jobs <= 1 or len(pairs) < 64:
        report.rows = _check_chunk((m, pairs, schedule))
        return report
    step = max(1, len(pairs) // (jobs * 8))
    chunks = [(m, pairs[i : i + step], schedule) for i in range(0, len(pairs), step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rows in pool.map(_check_chunk, chunks):
            report.rows.extend(rows)
    return report
