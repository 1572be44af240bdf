"""Local solvability of x^2 + y^2 = alpha and of x^2 - d*y^2 = -gamma(d).

Every completion of Q(sqrt(m)) at a prime p is modelled as either Z_p (split
primes, one copy per root of t^2 = m) or Z_p[theta] with theta^2 = t*theta + n
(inert and ramified primes).  Elements of Z_p[theta] that come from the global
ring are kept as exact integer pairs; only split completions need a truncated
p-adic root.

The search refines residue classes of one variable x modulo powers of the
uniformizer pi and asks whether A + B*x^2 is a square.  A nonzero c with
v(c) = t is a square iff c = s^2 mod pi^(t + k0) for some s, k0 = 2*v(2) + 1
(local square theorem), so every class x mod pi^j with j >= v(A + B*x^2) +
k0 - v(B) is uniformly square or uniformly not, and can be settled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from quadsq.arith import factorize, jacobi, sqrt_mod_prime_power
from quadsq.errors import DomainError, UndecidedError
from quadsq.pell import gamma
from quadsq.quadfield import FieldSpec, QuadInt, check_radicand, totally_positive

_PRECISION_SLACK = 5


@dataclass(frozen=True)
class LocalVerdict:
    prime: int | str
    solvable: bool
    precision_used: int
    # (x, y) certificate per completion; y is the square root implied by the
    # local square theorem and is not materialised.
    witnesses: tuple = field(default=(), compare=False, repr=False)

    def to_json(self) -> dict:
        return {"prime": self.prime, "solvable": self.solvable, "precision": self.precision_used}


class _Zp:
    """Z_p, elements are ints read modulo p^prec."""

    e = 1
    f = 1

    def __init__(self, p: int, prec: int, root: int | None = None):
        self.p = p
        self.prec = prec
        self.mod = p**prec
        self.root = root  # image of sqrt(m) for split completions
        self.v2 = 1 if p == 2 else 0
        self.pi = p
        self.one = 1
        self.zero = 0
        self.residues = list(range(p))

    def embed(self, x: QuadInt | int) -> int:
        if isinstance(x, int):
            return x % self.mod
        return (x.a + x.b * self.root) % self.mod

    def add(self, x, y):
        return (x + y) % self.mod

    def mul(self, x, y):
        return x * y % self.mod

    def scale(self, x, k: int):
        return x * k % self.mod

    def val(self, x) -> int | None:
        x %= self.mod
        if x == 0:
            return None
        v = 0
        while x % self.p == 0:
            x //= self.p
            v += 1
        return v

    def pi_pow(self, j: int):
        return pow(self.p, j, self.mod)

    def unit_is_square(self, c, t: int) -> bool:
        u = (c % self.mod) // self.p**t
        if self.p == 2:
            return u % 8 == 1
        return jacobi(u, self.p) == 1


class _QuadExt:
    """Z_p[theta], theta^2 = t*theta + n, as the completion at an inert or ramified p.

    Elements are exact integer pairs (a, b) meaning a + b*theta.
    """

    def __init__(self, p: int, t: int, n: int, ramified: bool, uniformizer: tuple[int, int]):
        self.p = p
        self.t = t
        self.n = n
        self.ramified = ramified
        self.e = 2 if ramified else 1
        self.f = 1 if ramified else 2
        self.v2 = self.e if p == 2 else 0
        self.pi = uniformizer
        self.one = (1, 0)
        self.zero = (0, 0)
        if ramified:
            self.residues = [(z, 0) for z in range(p)]
        else:
            self.residues = [(z1, z2) for z1 in range(p) for z2 in range(p)]

    def embed_sqrt_m(self, x: QuadInt | int):
        """Image of a + b*sqrt(m) when theta = sqrt(m)."""
        if isinstance(x, int):
            return (x, 0)
        return (x.a, x.b)

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def mul(self, x, y):
        a, b = x
        c, d = y
        bd = b * d
        return (a * c + bd * self.n, a * d + b * c + bd * self.t)

    def scale(self, x, k: int):
        return (x[0] * k, x[1] * k)

    def norm(self, x) -> int:
        a, b = x
        return a * a + a * b * self.t - self.n * b * b

    def val(self, x) -> int | None:
        nm = self.norm(x)
        if nm == 0:
            return None
        v = 0
        while nm % self.p == 0:
            nm //= self.p
            v += 1
        return v // self.f

    def pi_pow(self, j: int):
        out = self.one
        for _ in range(j):
            out = self.mul(out, self.pi)
        return out

    def unit_is_square(self, c, t: int) -> bool:
        p = self.p
        if p == 2:
            return _is_square_by_search(self, c, t)
        if not self.ramified:
            # u = c / p^(t) is a unit; squares of F_{p^2} are the elements of square norm
            a, b = c[0] // p**t, c[1] // p**t
            return jacobi(a * a - self.n * b * b, p) == 1
        # theta = sqrt(m), p | m: c = m^(t/2) * u, residue of u is (a / p^(t/2)) * m'^(-t/2)
        j = t // 2
        mp = self.n // p
        return jacobi((c[0] // p**j) * pow(mp, j, p), p) == 1


def _is_square_by_search(ring, c, t: int) -> bool:
    """Local square theorem by enumeration: c = s^2 mod pi^(t + k0) for some s of valuation t/2."""
    k0 = 2 * ring.v2 + 1
    depth = max(ring.v2 + 1, (t + k0 + 1) // 2 - t // 2)
    base = ring.pi_pow(t // 2)
    pis = [ring.pi_pow(i) for i in range(depth)]
    for digits in itertools.product(ring.residues, repeat=depth):
        if digits[0] == ring.zero:
            continue
        w = ring.zero
        for d, pw in zip(digits, pis):
            w = ring.add(w, ring.mul(d, pw))
        s = ring.mul(base, w)
        diff = ring.add(c, ring.scale(ring.mul(s, s), -1))
        v = ring.val(diff)
        if v is None or v >= t + k0:
            return True
    return False


def is_local_square(ring, c) -> bool:
    t = ring.val(c)
    if t is None:
        return True
    if t % 2:
        return False
    return ring.unit_is_square(c, t)


def completions(m: int, p: int, prec: int) -> list:
    """Local rings of Q(sqrt(m)) at p, with the embedding of Z[sqrt(m)] attached as `.embed`."""
    if p == 2 and m % 4 == 1:
        if m % 8 == 1:
            r = sqrt_mod_prime_power(m, 2, prec + 1)
            return [_Zp(2, prec, r), _Zp(2, prec, -r)]
        # unramified: theta = (1 + sqrt(m))/2, sqrt(m) = 2*theta - 1
        ring = _QuadExt(2, 1, (m - 1) // 4, False, (2, 0))
        ring.embed = lambda x: (x, 0) if isinstance(x, int) else (x.a - x.b, 2 * x.b)
        return [ring]
    if p == 2:
        pi = (0, 1) if m % 4 == 2 else (1, 1)
        ring = _QuadExt(2, 0, m, True, pi)
        ring.embed = ring.embed_sqrt_m
        return [ring]
    if m % p == 0:
        ring = _QuadExt(p, 0, m, True, (0, 1))
        ring.embed = ring.embed_sqrt_m
        return [ring]
    if jacobi(m, p) == 1:
        r = sqrt_mod_prime_power(m, p, prec)
        return [_Zp(p, prec, r), _Zp(p, prec, -r)]
    ring = _QuadExt(p, 0, m, False, (p, 0))
    ring.embed = ring.embed_sqrt_m
    return [ring]


def _search(ring, A, B, max_level: int):
    """Is A + B*x^2 a square for some x in the ring?

    Returns (x, level) for a certificate, or (None, level) when every class has
    been ruled out.  Raises UndecidedError past max_level.
    """
    vB = ring.val(B)
    k0 = 2 * ring.v2 + 1
    # root of A + B*x^2 = 0 in the ring: then y = 0 works
    neg_ab = ring.scale(ring.mul(A, B), -1)
    vA = ring.val(A)
    if vA is None:
        return ring.zero, 0
    if vA >= vB and is_local_square(ring, neg_ab):
        return "root", 0
    frontier = [(ring.zero, 0)]
    deepest = 0
    while frontier:
        nxt = []
        for x, j in frontier:
            c = ring.add(A, ring.mul(B, ring.mul(x, x)))
            if is_local_square(ring, c):
                return x, max(deepest, j)
            t = ring.val(c)
            if t is not None and j + vB >= t + k0:
                continue
            if j + 1 > max_level:
                raise UndecidedError(ring.p, max_level)
            step = ring.pi_pow(j)
            for z in ring.residues:
                nxt.append((ring.add(x, ring.mul(z, step)), j + 1))
            deepest = max(deepest, j + 1)
        frontier = nxt
    return None, deepest


def _radicand(f: FieldSpec | int) -> int:
    return f.m if isinstance(f, FieldSpec) else check_radicand(f)


def _k_max(p: int, n: int) -> int:
    """Precision cap in powers of p: ord_p(4) + ord_p(|n|) + 5."""
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return (2 if p == 2 else 0) + v + _PRECISION_SLACK


def _solvable_at(m: int, A_global, B_global, p: int, kmax: int):
    prec = 4 * kmax + 16
    certs = []
    used = 0
    for ring in completions(m, p, prec):
        A = ring.embed(A_global)
        B = ring.embed(B_global)
        x, level = _search(ring, A, B, ring.e * kmax)
        used = max(used, -(-level // ring.e))
        if x is None:
            return False, max(used, 1), ()
        certs.append(x)
    return True, max(used, 1), tuple(certs)


def local_sum2(f: FieldSpec | int, alpha: QuadInt, p: int, shortcut: bool = True) -> LocalVerdict:
    """x^2 + y^2 = alpha over the completion(s) of the integer ring at p.

    Accepts a bare radicand m = 1 mod 4 too, in which case the completions are
    those of the maximal order (alpha still given in Z[sqrt(m)] coordinates).
    """
    m = _radicand(f)
    if alpha.is_zero():
        raise DomainError("alpha must be nonzero")
    nm = alpha.norm()
    if shortcut and (2 * m * nm) % p:
        return LocalVerdict(p, True, 1)
    kmax = _k_max(p, nm)
    ok, used, certs = _solvable_at(m, alpha, -1, p, kmax)
    return LocalVerdict(p, ok, used, certs)


def real_check(f: FieldSpec | int, alpha: QuadInt) -> LocalVerdict:
    m = _radicand(f)
    if m < 0:
        return LocalVerdict("real", True, 0)
    return LocalVerdict("real", alpha.is_zero() or totally_positive(alpha), 0)


def relevant_primes(m: int, alpha: QuadInt) -> list[int]:
    return [p for p, _ in factorize(2 * m * alpha.norm()).factors]


def locally_solvable_everywhere(f: FieldSpec | int, alpha: QuadInt) -> tuple[bool, list[LocalVerdict]]:
    """Real place plus every p | 2*m*N(alpha); all other primes are unramified
    with alpha a unit, where x^2 + y^2 represents every unit."""
    m = _radicand(f)
    if alpha.is_zero():
        raise DomainError("alpha must be nonzero")
    verdicts = [real_check(m, alpha)]
    for p in relevant_primes(m, alpha):
        verdicts.append(local_sum2(m, alpha, p))
    return all(v.solvable for v in verdicts), verdicts


def zp_solvable_eq2(d: int, p: int) -> bool:
    """x^2 - d*y^2 = -gamma(d) over Z_p: is d*y^2 - gamma(d) a square for some y?"""
    check_radicand(d)
    g = gamma(d)
    kmax = _k_max(p, d * g)
    ring = _Zp(p, 4 * kmax + 16)
    x, _ = _search(ring, (-g) % ring.mod, d % ring.mod, kmax)
    return x is not None
