"""Decision layer for x^2 + y^2 = alpha over Z[sqrt(-6)] and Z[sqrt(6)].

Other radicands only get a report of which structural results apply to them;
no verdict is ever guessed outside m = +-6.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from quadsq.arith import factorize, is_prime, jacobi, quartic2
from quadsq.errors import DomainError
from quadsq.localsolve import local_sum2, locally_solvable_everywhere
from quadsq.pell import gamma, solve_eq2
from quadsq.quadfield import FieldSpec, NormProfile, QuadInt, check_radicand, norm_profile

__all__ = [
    "Decision",
    "DMembership",
    "PrimeClass",
    "TheoremTag",
    "Verdict",
    "applicable_results",
    "classify_D",
    "decide",
    "gamma",
    "parity_sum",
    "prime_class",
]

DECIDABLE_FIELDS = (-6, 6)
# brute-force bound for the a = 0 fallback
FALLBACK_BOUND = 200


@dataclass(frozen=True)
class DMembership:
    witnesses: tuple[tuple[int, str], ...]

    def __bool__(self):
        return bool(self.witnesses)

    def to_json(self) -> dict:
        return {"in_D": bool(self.witnesses), "witnesses": [[p, c] for p, c in self.witnesses]}


def classify_D(d: int) -> DMembership:
    """All (p, class) with p | d placing (d, p) in D1, D2 or D3."""
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    check_radicand(d)
    out = []
    for p, _ in factorize(d).factors:
        if d % 8 != 7 and p % 8 == 7:
            out.append((p, "D1"))
        if d % 4 in (1, 2) and p % 8 == 3:
            out.append((p, "D2"))
        if d % 8 == 3 and p % 8 == 5:
            out.append((p, "D3"))
    return DMembership(tuple(out))


@dataclass(frozen=True)
class TheoremTag:
    tag: str
    params: dict = field(default_factory=dict)

    def __str__(self):
        if not self.params:
            return self.tag
        inner = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.tag}({inner})"

    def to_json(self) -> dict:
        return {"tag": self.tag, "params": dict(self.params)}


def applicable_results(m: int) -> list[TheoremTag]:
    """Which of the known structural results cover Q(sqrt(m))."""
    check_radicand(m)
    tags = []
    if m < 0:
        d = -m
        if d >= 2 and solve_eq2(d) is not None:
            tags.append(TheoremTag("PropIma_case1"))
        minus_one = QuadInt(-1, 0, m)
        if not locally_solvable_everywhere(m, minus_one)[0]:
            tags.append(TheoremTag("PropIma_case2"))
        for p, cls in classify_D(d).witnesses if d >= 2 else ():
            tags.append(TheoremTag("Thm01", {"p": p, "class": cls}))
        if d % 2 == 0 and (d // 2) % 4 == 3:
            tags.append(TheoremTag("PropMinus2p", {"d0": d // 2}))
    elif m % 2 == 0 and is_prime(m // 2) and (m // 2) % 8 == 3:
        tags.append(TheoremTag("Thm02", {"p": m // 2}))
    return tags or [TheoremTag("Unclassified")]


class PrimeClass(enum.Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    NEUTRAL = "Neutral"


def _check_field(field_d: int) -> None:
    if field_d not in DECIDABLE_FIELDS:
        raise DomainError(f"decision procedure exists only for m in {DECIDABLE_FIELDS}, got {field_d}")


def prime_class(field_d: int, p: int) -> PrimeClass:
    """Class of a prime p not dividing 6, for Q(sqrt(field_d)), field_d = -6 or 6."""
    _check_field(field_d)
    if p in (2, 3) or not is_prime(p):
        raise DomainError(f"prime_class needs a prime other than 2, 3; got {p}")
    minus_one = jacobi(-1, p)
    rad = jacobi(field_d, p)
    two = jacobi(2, p)
    if minus_one == 1 and rad == 1 and two == -1:
        return PrimeClass.P1
    if minus_one == 1 and rad == -1 and two == -1:
        return PrimeClass.P2
    # (2/p)_4 only makes sense once (-1/p) = (2/p) = 1, i.e. p = 1 mod 8
    if minus_one == 1 and rad == 1 and two == 1 and quartic2(p) == -1:
        return PrimeClass.P3
    return PrimeClass.NEUTRAL


def parity_sum(profile: NormProfile, field_d: int) -> int:
    """(s1/2 + sum over P2 of e/2 + sum over P3 of e) mod 2."""
    _check_field(field_d)
    if profile.s1 % 2:
        raise AssertionError(f"s1 = {profile.s1} is odd")
    total = profile.s1 // 2
    for p, e in profile.odd_primes:
        cls = prime_class(field_d, p)
        if cls is PrimeClass.P2:
            if e % 2:
                raise AssertionError(f"P2 prime {p} has odd exponent {e}")
            total += e // 2
        elif cls is PrimeClass.P3:
            total += e
    return total % 2


def residue_class(field_d: int, profile: NormProfile) -> int:
    """Residue mod 8 that selects the target parity.

    For -6 this is a1 mod 8.  For +6 it is a mod 8 = 3^s3 * a1 mod 8: each
    factor 3 swaps the classes +-1 and +-3, and stripping it (as for -6, where
    multiplication by 3 preserves {1, 3} and {-1, -3}) gives wrong verdicts,
    e.g. alpha = 3 would come out solvable.
    """
    if field_d == 6:
        return profile.a1 * pow(3, profile.s3, 8) % 8
    return profile.a1 % 8


def required_parity(field_d: int, r: int) -> int | None:
    """Parity the sum must have for residue r mod 8; None for even r."""
    r %= 8
    if r % 2 == 0:
        return None
    if field_d == -6:
        return 0 if r in (1, 3) else 1
    return 0 if r in (1, 7) else 1


class Verdict(str, enum.Enum):
    SOLVABLE = "Solvable"
    UNSOLVABLE = "Unsolvable"
    UNKNOWN = "UnknownByCriterion"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    reasons: tuple[str, ...]
    witness: tuple[QuadInt, QuadInt] | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "reasons": list(self.reasons)}


def _oracle_fallback(field_d: int, alpha: QuadInt, reasons: list[str]) -> Decision:
    from quadsq.oracle import brute_force

    hit = brute_force(FieldSpec(field_d), alpha, FALLBACK_BOUND)
    if hit is not None:
        reasons.append(f"WITNESS({FALLBACK_BOUND})")
        return Decision(Verdict.SOLVABLE, tuple(reasons), hit)
    return Decision(Verdict.UNKNOWN, tuple(reasons))


def decide(field_d: int, alpha: QuadInt) -> Decision:
    """Is alpha a sum of two squares of Z[sqrt(field_d)], field_d = -6 or 6?"""
    _check_field(field_d)
    if alpha.m != field_d:
        raise DomainError(f"alpha lives in Z[sqrt({alpha.m})], not Z[sqrt({field_d})]")
    if alpha.is_zero():
        raise DomainError("alpha must be nonzero")
    ok, verdicts = locally_solvable_everywhere(field_d, alpha)
    if not ok:
        failed = [f"LOCAL_FAIL({v.prime})" for v in verdicts if not v.solvable]
        return Decision(Verdict.UNSOLVABLE, tuple(failed))
    reasons = ["LOCAL_OK"]
    if alpha.a == 0:
        reasons.append("A_ZERO_FALLBACK")
        return _oracle_fallback(field_d, alpha, reasons)
    profile = norm_profile(alpha)
    p1 = [p for p, _ in profile.odd_primes if prime_class(field_d, p) is PrimeClass.P1]
    if p1:
        return Decision(Verdict.SOLVABLE, (f"P1_NONEMPTY({p1[0]})",))
    total = parity_sum(profile, field_d)
    r = residue_class(field_d, profile)
    want = required_parity(field_d, r)
    if want is None:
        reasons.append(f"A1_EVEN_FALLBACK({profile.a1})")
        return _oracle_fallback(field_d, alpha, reasons)
    code = f"PARITY({total},{r})"
    verdict = Verdict.SOLVABLE if total == want else Verdict.UNSOLVABLE
    return Decision(verdict, (code,))
