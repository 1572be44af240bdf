"""Exact arithmetic in Z[sqrt(m)] for squarefree m = 2, 3 mod 4."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from quadsq.arith import factorize, is_squarefree, jacobi
from quadsq.errors import DomainError


def check_radicand(m: int) -> int:
    """Validate a squarefree radicand (any residue mod 4); returns m."""
    if m in (0, 1) or not is_squarefree(m):
        raise DomainError(f"radicand must be squarefree and not 0 or 1, got {m}")
    return m


@dataclass(frozen=True)
class FieldSpec:
    """The field Q(sqrt(m)) whose integer ring is Z[sqrt(m)]."""

    m: int

    def __post_init__(self):
        check_radicand(self.m)
        if self.m % 4 == 1:
            raise DomainError(f"m = {self.m} is 1 mod 4; only Z[sqrt(m)] rings are supported")

    @property
    def real(self) -> bool:
        return self.m > 0

    def __call__(self, a: int, b: int = 0) -> QuadInt:
        return QuadInt(a, b, self.m)

    def __str__(self):
        return f"Q(sqrt({self.m}))"


@dataclass(frozen=True)
class QuadInt:
    """a + b*sqrt(m)."""

    a: int
    b: int
    m: int

    @classmethod
    def parse(cls, text: str, m: int) -> QuadInt:
        """Parse the CLI form "a,b" (a bare "a" means b = 0)."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) == 1:
            parts.append("0")
        if len(parts) != 2:
            raise DomainError(f"expected 'a,b', got {text!r}")
        try:
            return cls(int(parts[0]), int(parts[1]), m)
        except ValueError:
            raise DomainError(f"expected integers in {text!r}") from None

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    def _check(self, other: QuadInt) -> None:
        if not isinstance(other, QuadInt):
            raise TypeError(f"expected QuadInt, got {type(other).__name__}")
        if other.m != self.m:
            raise DomainError(f"mixed fields: sqrt({self.m}) and sqrt({other.m})")

    def _coerce(self, other) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(other, 0, self.m)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return QuadInt(self.a + other.a, self.b + other.b, self.m)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.m)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return QuadInt(a * c + self.m * b * d, a * d + b * c, self.m)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not ring elements in general")
        out, base = QuadInt(1, 0, self.m), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def exact_div(self, other: QuadInt) -> QuadInt | None:
        """self / other if the quotient lies in Z[sqrt(m)], else None."""
        other = self._coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero element")
        num = self * other.conj()
        if num.a % n or num.b % n:
            return None
        return QuadInt(num.a // n, num.b // n, self.m)

    def conj(self) -> QuadInt:
        return QuadInt(self.a, -self.b, self.m)

    def norm(self) -> int:
        return self.a * self.a - self.m * self.b * self.b

    def trace(self) -> int:
        return 2 * self.a

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.m})"
        if self.a == 0:
            return f"{self.b}*{root}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*{root}"


def add(x: QuadInt, y: QuadInt) -> QuadInt:
    return x + y


def mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def conj(x: QuadInt) -> QuadInt:
    return x.conj()


def norm(x: QuadInt) -> int:
    return x.norm()


class SplitType(enum.Enum):
    SPLIT = "Split"
    INERT = "Inert"
    RAMIFIED = "Ramified"


def splitting_type(p: int, f: FieldSpec | int) -> SplitType:
    """Decomposition of the rational prime p in the maximal order of Q(sqrt(m))."""
    m = f.m if isinstance(f, FieldSpec) else check_radicand(f)
    if p == 2:
        if m % 4 != 1:
            return SplitType.RAMIFIED
        return SplitType.SPLIT if m % 8 == 1 else SplitType.INERT
    if m % p == 0:
        return SplitType.RAMIFIED
    return SplitType.SPLIT if jacobi(m, p) == 1 else SplitType.INERT


def solve_square_pair(c1: int, c2: int, m: int) -> list[tuple[int, int]]:
    """All integer (y1, y2) with y1^2 + m*y2^2 = c1 and 2*y1*y2 = c2.

    These are the square roots of c1 + c2*sqrt(m) read coordinatewise.  For
    c2 != 0, y2^2 is a root of m*Y^2 - c1*Y + c2^2/4, whose discriminant is
    the norm c1^2 - m*c2^2, so only isqrt calls are needed.
    """
    out: list[tuple[int, int]] = []
    if c2 == 0:
        if c1 == 0:
            return [(0, 0)]
        # y2 = 0 or y1 = 0
        if c1 > 0:
            r = math.isqrt(c1)
            if r * r == c1:
                out.append((r, 0))
        if c1 % m == 0 and c1 // m > 0:
            r = math.isqrt(c1 // m)
            if r * r == c1 // m:
                out.append((0, r))
        return sorted(out + [(-u, -v) for u, v in out], reverse=True)
    if c2 % 2:
        return []
    disc = c1 * c1 - m * c2 * c2
    if disc < 0:
        return []
    s = math.isqrt(disc)
    if s * s != disc:
        return []
    for num in {c1 + s, c1 - s}:
        if num % (2 * m):
            continue
        Y = num // (2 * m)
        if Y <= 0:
            continue
        y2 = math.isqrt(Y)
        if y2 * y2 != Y or (c2 // 2) % y2:
            continue
        y1 = c2 // 2 // y2
        if y1 * y1 + m * Y == c1:
            out.append((y1, y2))
            out.append((-y1, -y2))
    return sorted(set(out), reverse=True)


def sqrt_in_ring(c: QuadInt) -> QuadInt | None:
    """A square root of c in Z[sqrt(m)], or None.

    The two roots are +-y; the one returned has its first nonzero coordinate
    positive.
    """
    roots = solve_square_pair(c.a, c.b, c.m)
    if not roots:
        return None
    y1, y2 = roots[0]
    return QuadInt(y1, y2, c.m)


def totally_positive(x: QuadInt) -> bool:
    """Both real embeddings a +- b*sqrt(m) are > 0 (exact integer test)."""
    if x.m < 0:
        raise DomainError("total positivity needs a real field")
    return x.a > 0 and x.a * x.a > x.m * x.b * x.b


@dataclass(frozen=True)
class NormProfile:
    s1: int
    s2: int
    odd_primes: tuple[tuple[int, int], ...]
    s3: int
    a1: int

    def value(self) -> int:
        out = 2**self.s1 * 3**self.s2
        for p, e in self.odd_primes:
            out *= p**e
        return out


def norm_profile(x: QuadInt) -> NormProfile:
    """Exponents of |N(x)| at 2, 3 and the other primes, plus a = 3^s3 * a1."""
    n = x.norm()
    if n == 0:
        raise DomainError("norm profile of zero")
    if x.a == 0:
        raise DomainError("profile undefined: a = 0 leaves a1 undefined")
    fac = factorize(abs(n))
    s3, a1 = 0, x.a
    while a1 % 3 == 0:
        a1 //= 3
        s3 += 1
    odd = tuple((p, e) for p, e in fac.factors if p not in (2, 3))
    return NormProfile(fac.exponent(2), fac.exponent(3), odd, s3, a1)
