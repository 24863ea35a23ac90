"""Exact integer arithmetic primitives.

Factorization, totient, multiplicative order, squarefree kernels,
quadratic discriminants, Kronecker symbols and the Wieferich test.
Everything here is deterministic: the large-factor splitter uses
Brent's cycle method with an RNG seeded from the input itself.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from math import gcd


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Trial division covers every prime below _TRIAL_BOUND^2 = 10^6 on its own.
_TRIAL_BOUND = 1000


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]


_TRIAL_PRIMES = _small_primes(_TRIAL_BOUND)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of composite n (n odd, not a prime power edge)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _factor_into(n: int, out: dict[int, int]) -> None:
    """Accumulate the prime factorization of n >= 1 into out."""
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    # Composite with no factor below 10^3: split recursively, seeded by n.
    rng = random.Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack.append(d)
        stack.append(m // d)


@dataclass(frozen=True)
class FactoredInteger:
    """An integer together with the full prime factorization of |value|."""

    value: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes increasing
    sign: int

    def __post_init__(self) -> None:
        prod = self.sign
        for p, e in self.factors:
            prod *= p**e
        if prod != self.value:
            raise AssertionError(f"inconsistent factorization of {self.value}")

    @property
    def abs_value(self) -> int:
        return abs(self.value)

    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def factorize(n: int) -> FactoredInteger:
    """Full prime factorization of a nonzero integer.

    Deterministic: trial division by primes below 10^3 (complete for
    |n| < 10^6), then Brent/Miller-Rabin splitting seeded from the
    remaining cofactor.
    """
    if n == 0:
        raise DomainError("cannot factor 0")
    sign = 1 if n > 0 else -1
    acc: dict[int, int] = {}
    if abs(n) > 1:
        _factor_into(abs(n), acc)
    return FactoredInteger(n, tuple(sorted(acc.items())), sign)


def euler_phi(n: FactoredInteger | int) -> int:
    """Euler totient of a positive integer."""
    if isinstance(n, int):
        n = factorize(n)
    if n.value < 1:
        raise DomainError(f"totient needs a positive integer, got {n.value}")
    result = 1
    for p, e in n.factors:
        result *= p ** (e - 1) * (p - 1)
    return result


def multiplicative_order(g: int, p: int, p_minus_1: FactoredInteger | None = None) -> int:
    """Order of g in (Z/pZ)^*, p prime.

    Starts at p-1 and strips prime factors while the power stays 1.
    """
    if g % p == 0:
        raise DomainError(f"{g} is divisible by {p}")
    if p_minus_1 is None:
        p_minus_1 = factorize(p - 1)
    if p_minus_1.value != p - 1:
        raise DomainError(f"expected a factorization of {p - 1}, got {p_minus_1.value}")
    k = p - 1
    for q, _ in p_minus_1.factors:
        while k % q == 0 and pow(g, k // q, p) == 1:
            k //= q
    return k


def squarefree_kernel(g: int) -> int:
    """g divided by its largest square divisor; sign preserved."""
    if abs(g) < 2:
        raise DomainError(f"squarefree kernel needs |g| >= 2, got {g}")
    f = factorize(g)
    kernel = f.sign
    for p, e in f.factors:
        if e % 2:
            kernel *= p
    return kernel


def quad_discriminant(g: int) -> int:
    """Discriminant of Q(sqrt(g)): k if k = 1 (mod 4) else 4k, k the kernel.

    Throughout the package, "the discriminant divides M" means |disc|
    divides M (which forces 4 | M whenever disc = 0 mod 4).
    """
    if g == 0:
        raise DomainError("discriminant of Q(sqrt(0)) undefined")
    k = squarefree_kernel(g) if abs(g) >= 2 else g
    if k == 1:
        raise DomainError(f"{g} is a perfect square; Q(sqrt(g)) = Q")
    return k if k % 4 == 1 else 4 * k


def power_index(g: int) -> int:
    """Largest h with g = b^h for an integer b; odd when g < 0."""
    if abs(g) < 2:
        raise DomainError(f"power index needs |g| >= 2, got {g}")
    f = factorize(g)
    h = 0
    for _, e in f.factors:
        h = gcd(h, e)
    if g < 0:
        while h % 2 == 0:
            h //= 2
    return h


def iroot(n: int, k: int) -> int:
    """Exact integer k-th root of n; raises if n is not a perfect k-th power."""
    if n < 0:
        if k % 2 == 0:
            raise DomainError(f"{n} has no real {k}-th root")
        return -iroot(-n, k)
    if n in (0, 1) or k == 1:
        return n
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    raise DomainError(f"{n} is not a perfect {k}-th power")


def kronecker_symbol(D: int, a: int) -> int:
    """Kronecker symbol (D | a), the fully multiplicative extension of Legendre."""
    if a == 0:
        return 1 if D in (1, -1) else 0
    if D == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if a < 0:
        a = -a
        if D < 0:
            result = -result
    # (D | 2) factors
    t = 0
    while a % 2 == 0:
        a //= 2
        t += 1
    if t:
        if D % 2 == 0:
            return 0
        if t % 2 and D % 8 in (3, 5):
            result = -result
    # Now a is odd and positive: Jacobi with reciprocity.
    D %= a
    while D:
        while D % 2 == 0:
            D //= 2
            if a % 8 in (3, 5):
                result = -result
        D, a = a, D
        if D % 4 == 3 and a % 4 == 3:
            result = -result
        D %= a
    return result if a == 1 else 0


def is_wieferich(p: int) -> bool:
    """True iff 2^(p-1) = 1 (mod p^2), for an odd prime p."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    return pow(2, p - 1, p * p) == 1
