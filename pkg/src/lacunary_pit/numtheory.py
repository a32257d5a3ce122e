"""Deterministic prime generation and exact integer logarithms."""

from __future__ import annotations

from itertools import islice
from typing import Iterator

# Deterministic Miller-Rabin: these bases are exact for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981
_SMALL_PRIMES = _MR_BASES


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Raises ValueError above the range where the fixed witness set is proven.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sieve_segment(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi) by a segmented sieve of Eratosthenes."""
    lo = max(lo, 2)
    if hi <= lo:
        return []
    root = int((hi - 1) ** 0.5) + 1
    while root * root < hi:
        root += 1
    base = bytearray([1]) * (root + 1)
    base[0:2] = b"\x00\x00"
    for i in range(2, int(root ** 0.5) + 1):
        if base[i]:
            base[i * i :: i] = bytearray(len(base[i * i :: i]))
    seg = bytearray([1]) * (hi - lo)
    for p in range(2, root + 1):
        if not base[p]:
            continue
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start >= hi:
            continue
        seg[start - lo :: p] = bytearray(len(seg[start - lo :: p]))
    return [lo + i for i, flag in enumerate(seg) if flag]


def iter_primes_from(start: int) -> Iterator[int]:
    """Yield primes >= start in increasing order, indefinitely."""
    lo = max(start, 2)
    width = 1 << 15
    # Segments stay cheap while the sieving primes fit in memory; past that,
    # fall back to per-candidate primality testing.
    while lo < (1 << 40):
        hi = lo + width
        yield from _sieve_segment(lo, hi)
        lo = hi
        width = min(width * 2, 1 << 20)
    n = lo
    while True:
        if is_prime(n):
            yield n
        n += 1


def primes_at_least(min_value: int, count: int) -> list[int]:
    """The `count` smallest primes >= min_value, ascending."""
    if count < 0:
        raise ValueError("count must be non-negative")
    return list(islice(iter_primes_from(min_value), count))


def ceil_log2(n: int) -> int:
    """Smallest k with 2**k >= n."""
    if n < 1:
        raise ValueError("ceil_log2 is defined for n >= 1")
    return (n - 1).bit_length()


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi is defined for n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
