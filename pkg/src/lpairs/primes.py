"""Exact integer arithmetic on primes and prime powers.

Everything here is deliberately integer-only: prime-power detection and
the distance function on rationals must never suffer float
misclassification.
"""

from __future__ import annotations

import numpy as np

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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


def primes_upto(n: int) -> list[int]:
    """All primes <= n, ascending (simple numpy sieve)."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


def _integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) computed exactly."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0, k >= 1")
    if n in (0, 1) or k == 1:
        return n
    r = int(round(n ** (1.0 / k)))
    while r ** k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def prime_power(n: int):
    """Return (p, k) with n = p**k, p prime, k >= 1; or None."""
    if n < 2:
        return None
    for k in range(n.bit_length(), 0, -1):
        r = _integer_root(n, k)
        if r ** k == n and is_prime(r):
            return r, k
    return None


def prime_powers_upto(limit: int) -> list[int]:
    """All prime powers p**k <= limit, ascending."""
    out = []
    for p in primes_upto(limit):
        v = p
        while v <= limit:
            out.append(v)
            v *= p
    out.sort()
    return out
