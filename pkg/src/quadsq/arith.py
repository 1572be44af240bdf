"""Integer primitives: powers, primality, factorization, residue symbols."""

from __future__ import annotations

import math
from dataclasses import dataclass

from quadsq.errors import DomainError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Strong-pseudoprime bases above are a proof of primality below this bound.
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
_TRIAL_LIMIT = 1000


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise DomainError("exponent must be non-negative")
    return pow(base, exp, modulus)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and math.isqrt(n) ** 2 == n:
            return False
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def halve(v: int) -> int:
        return (v + n if v % 2 else v) // 2 % n

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = halve(P * U + V), halve(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality of |n|.

    Deterministic Miller-Rabin below 3.3e24; above that the Baillie-PSW
    combination, which has no known counterexample.
    """
    n = abs(n)
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _SMALL_PRIMES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def _brent_rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    # Fixed seeds keep factorize deterministic.
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    g = _brent_rho(n)
    _split(g, out)
    _split(n // g, out)


def factorize(n: int) -> Factorization:
    if n == 0:
        raise DomainError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    p = 2
    while p <= _TRIAL_LIMIT and p * p <= n:
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        _split(n, found)
    return Factorization(sign, tuple(sorted(found.items())))


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol for an odd prime p (0 when p | a)."""
    return jacobi(a, p)


def quartic2(p: int) -> int:
    """Quartic residue symbol (2/p)_4 for a prime p = 1 mod 8, as +1 or -1."""
    if p % 8 != 1 or not is_prime(p):
        raise DomainError(f"quartic symbol of 2 undefined for p={p}")
    r = pow(2, (p - 1) // 4, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise ArithmeticError(f"2^((p-1)/4) mod {p} = {r} is not +-1")


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise DomainError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(n).factors)


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of a modulo the odd prime p, or None (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_mod_prime_power(a: int, p: int, k: int) -> int | None:
    """Root of x^2 = a mod p^k for a a unit mod p, lifted p-adically.

    For p = 2 the unit must be 1 mod 8; the returned root is odd.
    """
    mod = p**k
    if a % p == 0:
        raise DomainError("sqrt_mod_prime_power needs a p-adic unit")
    if p == 2:
        if a % 8 != 1 and k >= 3:
            return None
        r = 1
        for j in range(3, k):
            # r^2 = a mod 2^j; fix the next bit.
            if (r * r - a) % 2 ** (j + 1):
                r += 2 ** (j - 1)
        return r % mod if k > 0 else 0
    r = sqrt_mod_prime(a, p)
    if r is None:
        return None
    pj = p
    for _ in range(1, k):
        pj *= p
        # Newton step: r <- r - (r^2 - a) / (2r)
        r = (r - (r * r - a) * pow(2 * r, -1, pj)) % pj
    return r % mod
