"""Exact integer/rational arithmetic kernels.

Everything here is deterministic and pure: p-adic valuations of factorials,
the prime-power common denominators of scaled falling factorials, lcm(1..k),
the trinomial-coefficient lcm g_k, and the real-valued growth constants
chi(b) and rho(b).  Divisibility data is always exact integers; reals appear
only in reported constants and are computed with mpmath at a configurable
number of decimal digits (default 50).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable

import mpmath

from .errors import NotPrime

DEFAULT_DIGITS = 50

Rat = Fraction

#: witnesses making Miller-Rabin deterministic below 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def parse_rat(text: str) -> Fraction:
    """Parse the wire form "p/q" or "p" into an exact rational."""
    return Fraction(text.strip())


def format_rat(x: Fraction) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin witnesses below 3.3e24,
    trial division above; inputs here are tiny in practice)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        i = 41
        while i * i <= n:
            if n % i == 0:
                return False
            i += 2
        return True
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(b: int) -> list[int]:
    """Distinct prime divisors of b >= 1, ascending."""
    if b < 1:
        raise ValueError("b must be >= 1")
    out = []
    d = 2
    while d * d <= b:
        if b % d == 0:
            out.append(d)
            while b % d == 0:
                b //= d
        d += 1 if d == 2 else 2
    if b > 1:
        out.append(b)
    return out


def primes_upto(n: int) -> list[int]:
    """All primes <= n via a sieve."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    p = 2
    while p * p <= n:
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, n + 1, p))
        p += 1
    return [i for i in range(2, n + 1) if flags[i]]


def prime_pi(n: int) -> int:
    """pi(n), the number of primes <= n."""
    return len(primes_upto(n))


def denominator(x: Fraction) -> int:
    """Smallest positive b with b*x an integer."""
    return x.denominator


def common_denominator(xs: Iterable[Fraction]) -> int:
    """lcm of the denominators of xs; 1 for the empty collection."""
    out = 1
    for x in xs:
        out = lcm(out, x.denominator)
    return out


def tau_p(p: int, k: int) -> int:
    """Legendre sum: the exponent of the prime p in k!.

    tau_p(k) = floor(k/p) + floor(k/p^2) + ...  <= k/(p-1).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 0:
        raise ValueError("k must be >= 0")
    total, q = 0, p
    while q <= k:
        total += k // q
        q *= p
    return total


def prime_power_product(b: int, k: int) -> int:
    """prod over primes p | b of p^tau_p(k); the exact common denominator of
    the integers b^n <lambda>_n / n!, n <= k, for den(lambda) = b."""
    out = 1
    for p in prime_factors(b):
        out *= p ** tau_p(p, k)
    return out


def chi(b: int, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """chi(b) = sum over primes p | b of ln(p)/(p-1)."""
    with mpmath.workdps(digits):
        return +mpmath.fsum(mpmath.log(p) / (p - 1) for p in prime_factors(b))


def lcm_upto(k: int) -> int:
    """d_k = lcm(1, 2, ..., k); d_0 = 1."""
    out = 1
    for i in range(2, k + 1):
        out = lcm(out, i)
    return out


def _digit_sum(n: int, p: int) -> int:
    s = 0
    while n:
        s += n % p
        n //= p
    return s


@lru_cache(maxsize=None)
def _max_digit_sum_tables(p: int, limit: int) -> tuple[list[int], list[int]]:
    """(best2, best3) where bestj[n] = max of base-p digit sums of a
    decomposition of n into j non-negative parts."""
    s = [_digit_sum(n, p) for n in range(limit + 1)]
    best2 = [0] * (limit + 1)
    for n in range(limit + 1):
        best2[n] = max(s[a] + s[n - a] for a in range(n // 2 + 1))
    best3 = [0] * (limit + 1)
    for n in range(limit + 1):
        best3[n] = max(s[a] + best2[n - a] for a in range(n + 1))
    return best2, best3


def g_k_exponent(p: int, k: int) -> int:
    """Exponent of the prime p in g_k, i.e. the maximum over k0+k1+k2 = k of
    tau_p(k) - tau_p(k0) - tau_p(k1) - tau_p(k2).

    Uses tau_p(n) = (n - S_p(n))/(p-1), so the maximum equals
    (max digit-sum decomposition - S_p(k)) / (p-1).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    _, best3 = _max_digit_sum_tables(p, k)
    return (best3[k] - _digit_sum(k, p)) // (p - 1)


def g_k(k: int) -> int:
    """lcm of the trinomial coefficients k!/(k0! k1! k2!), k0+k1+k2 = k."""
    out = 1
    for p in primes_upto(k):
        out *= p ** g_k_exponent(p, k)
    return out


def g_k_by_enumeration(k: int) -> int:
    """Independent oracle for g_k: direct lcm over all trinomials."""
    from math import factorial

    fk = factorial(k)
    out = 1
    for k0 in range(k + 1):
        for k1 in range(k - k0 + 1):
            k2 = k - k0 - k1
            out = lcm(out, fk // (factorial(k0) * factorial(k1) * factorial(k2)))
    return out


def totient(b: int) -> int:
    """Euler's phi: the count of 1 <= n <= b coprime to b."""
    if b < 1:
        raise ValueError("b must be >= 1")
    return sum(1 for n in range(1, b + 1) if gcd(n, b) == 1)


def rho_exact(b: int) -> Fraction:
    """(b/phi(b)) * sum of 1/n over 1 <= n <= b coprime to b, exactly."""
    if b < 1:
        raise ValueError("b must be >= 1")
    coprime = [n for n in range(1, b + 1) if gcd(n, b) == 1]
    harm = sum((Fraction(1, n) for n in coprime), Fraction(0))
    return Fraction(b, len(coprime)) * harm


def rho(b: int, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """rho(b) of the averaged coprime harmonic sum, as a high-precision real."""
    r = rho_exact(b)
    with mpmath.workdps(digits):
        return mpmath.mpf(r.numerator) / r.denominator
