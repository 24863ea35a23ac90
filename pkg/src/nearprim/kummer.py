"""Exact degrees of radical-cyclotomic fields and their entanglement data.

Computes [Q(zeta_M, g^(1/n)) : Q] for n | M, the degree of the compositum
with an extra cyclotomic layer, degrees of intersection fields
Q(zeta_d) cap Q(zeta_n, g^(1/n)), rational quadratic subfields, and the
test for whether a residue class a (mod d) is compatible with g being an
n-th power residue (the Frobenius-class existence test).

The degree is phi(M) * n / d where d, the Kummer index, is the largest
divisor of n such that g is a d-th power in Q(zeta_M).  The index is
computed from the shape g = sign * g0^H (g0 > 1 not a perfect power):
odd parts of the index come only from rational roots, while the 2-part
is decided by whether elements sqrt(kappa) * zeta_{2^j} (kappa the
squarefree kernel of g0) land in Q(zeta_M), a finite character check.
The classical quartic anomaly (-4 w^4 is a fourth power wherever i
lives) is the first instance of this family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd

from .arith import (
    DomainError,
    euler_phi,
    factorize,
    kronecker_symbol,
    power_index,
    quad_discriminant,
    squarefree_kernel,
)


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1 if n else 0


def _odd_part(n: int) -> int:
    return n >> _v2(n)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _check_radicand(g: int) -> None:
    if g in (-1, 0, 1):
        raise DomainError(f"radicand must lie outside {{-1, 0, 1}}, got {g}")


# ---------------------------------------------------------------------------
# Radicand shape


@dataclass(frozen=True)
class _RadicalParts:
    sign: int  # +1 or -1
    base: int  # g0 > 1, not a perfect power
    height: int  # |g| = base ** height
    kernel: int  # squarefree kernel of base (>= 2)

    @property
    def two_exp(self) -> int:
        """v2 of the height."""
        return _v2(self.height)

    @property
    def odd_height(self) -> int:
        return _odd_part(self.height)


def _radical_parts(g: int) -> _RadicalParts:
    _check_radicand(g)
    f = factorize(abs(g))
    height = 0
    for _, e in f.factors:
        height = gcd(height, e)
    base = 1
    kernel = 1
    for p, e in f.factors:
        base *= p ** (e // height)
        if (e // height) % 2:
            kernel *= p
    return _RadicalParts(1 if g > 0 else -1, base, height, kernel)


# ---------------------------------------------------------------------------
# Membership of sqrt(kappa) * zeta_{2^zpow}^t in Q(zeta_M)


def _kernel_disc(kappa: int) -> int:
    """Discriminant of Q(sqrt(kappa)); 1 for the trivial kernel."""
    return 1 if kappa == 1 else quad_discriminant(kappa)


def _root_sign(rot: int, modulus: int) -> int | None:
    """Value of zeta_modulus^rot when it is real: 1, -1, or None."""
    rot %= modulus
    if rot == 0:
        return 1
    if 2 * rot == modulus:
        return -1
    return None


def _eta_in_cyclotomic(kappa: int, zpow: int, t: int, M: int) -> bool:
    """Is sqrt(kappa) * zeta_{2^zpow}^t in Q(zeta_M)?"""
    D = _kernel_disc(kappa)
    level = _lcm(_lcm(M, 1 << zpow), abs(D))
    # sigma_c for c = 1 mod M, c coprime to level, must all fix the element.
    for c in range(1, level + 1, M):
        if gcd(c, level) != 1:
            continue
        s = _root_sign(t * (c - 1), 1 << zpow)
        if s is None or kronecker_symbol(D, c) * s != 1:
            return False
    return True


def _two_power_feasible(M: int, k: int, parts: _RadicalParts) -> bool:
    """Is g a 2^k-th power in Q(zeta_M)?  (k-th layer only.)"""
    if k == 0:
        return True
    a = parts.two_exp
    if k <= a:
        if parts.sign == 1:
            return True
        # need a primitive 2^(k+1)-th root of unity
        m_tilde = M if M % 2 == 0 else 2 * M
        return m_tilde % (1 << (k + 1)) == 0
    if k == a + 1:
        if parts.sign == 1:
            zpow, ts = a + 1, range(0, 1 << (a + 1))
        else:
            zpow, ts = a + 2, range(1, 1 << (a + 2), 2)
        return any(_eta_in_cyclotomic(parts.kernel, zpow, t, M) for t in ts)
    # Quartic roots of the squarefree kernel never lie in abelian fields.
    return False


# ---------------------------------------------------------------------------
# Kummer index and degree


@dataclass(frozen=True)
class KummerTrace:
    """Intermediates of the index computation, surfaced by the CLI."""

    index: int  # d: largest divisor of n with g a d-th power in Q(zeta_M)
    h: int  # power index of g (odd when g < 0)
    d0: int  # gcd(n, h)
    e: int  # extra 2-exponent: d = d0 * 2^e


def kummer_index(M: int, n: int, g: int) -> KummerTrace:
    """Largest divisor d of n such that g is a d-th power in Q(zeta_M)."""
    if n < 1 or M < 1 or M % n != 0:
        raise DomainError(f"need n | M, got n={n}, M={M}")
    _check_radicand(g)
    parts = _radical_parts(g)
    d_odd = gcd(_odd_part(n), parts.odd_height)
    two = 0
    for k in range(_v2(n), -1, -1):
        if _two_power_feasible(M, k, parts):
            two = k
            break
    d = d_odd << two
    h = power_index(g)
    d0 = gcd(n, h)
    return KummerTrace(d, h, d0, two - _v2(d0))


def kummer_degree(M: int, n: int, g: int) -> int:
    """[Q(zeta_M, g^(1/n)) : Q] for n | M."""
    return euler_phi(M) * n // kummer_index(M, n, g).index


def kn_degree(d: int, n: int, g: int) -> int:
    """[Q(zeta_d, zeta_n, g^(1/n)) : Q] = [Q(zeta_lcm(d,n), g^(1/n)) : Q]."""
    if d < 1 or n < 1:
        raise DomainError("levels must be positive")
    return kummer_degree(_lcm(d, n), n, g)


@dataclass(frozen=True)
class RadicalFieldSpec:
    """The field Q(zeta_M, g^(1/n)) with n | M."""

    M: int
    n: int
    g: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.M < 1 or self.M % self.n != 0:
            raise DomainError(f"need n | M, got n={self.n}, M={self.M}")
        _check_radicand(self.g)

    def degree(self) -> int:
        return kummer_degree(self.M, self.n, self.g)


# ---------------------------------------------------------------------------
# Rational square classes of Q(zeta_N) and of Q(zeta_n, g^(1/n))


def _class_kernel(m: int) -> int:
    """Squarefree kernel as a square-class label (1 = trivial class)."""
    if m == 0:
        raise DomainError("0 has no square class")
    if abs(m) == 1:
        return m
    return squarefree_kernel(m)


def _cyclotomic_class_generators(N: int) -> list[int]:
    """Generators of the rational square classes represented in Q(zeta_N)."""
    gens: list[int] = []
    for p, _ in factorize(N).factors:
        if p == 2:
            continue
        gens.append(p if p % 4 == 1 else -p)
    if N % 4 == 0:
        gens.append(-1)
    if N % 8 == 0:
        gens.append(2)
    return gens


def _span_contains(generators: list[int], target: int) -> bool:
    """Membership of a square class in the group generated, over GF(2)."""
    primes: set[int] = set()
    items = [g for g in generators if g != 1] + [target]
    vecs: list[int] = []
    for m in items:
        if abs(m) > 1:
            primes.update(factorize(abs(m)).distinct_primes())
    bit = {p: i + 1 for i, p in enumerate(sorted(primes))}  # bit 0 = sign
    for m in items:
        v = 1 if m < 0 else 0
        if abs(m) > 1:
            for p in factorize(abs(m)).distinct_primes():
                v |= 1 << bit[p]
        vecs.append(v)
    *gen_vecs, tgt = vecs
    pivots: dict[int, int] = {}
    for v in gen_vecs:
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                break
    while tgt:
        top = tgt.bit_length() - 1
        if top not in pivots:
            return False
        tgt ^= pivots[top]
    return True


@dataclass(frozen=True)
class _AbelianClosure:
    """The maximal abelian subfield of Q(zeta_n, g^(1/n)).

    Either a plain cyclotomic field Q(zeta_level), or its quadratic
    extension by sqrt(kappa) * zeta_{2^zpow} (zpow = 0 meaning sqrt(kappa)).
    """

    n: int
    level: int  # conductor bound: the closure sits inside Q(zeta_level)
    cyc: int  # the cyclotomic part is Q(zeta_cyc)
    kappa: int = 1  # 1: no sliver beyond the cyclotomic part
    zpow: int = 0

    def fixes(self, c: int) -> bool:
        """Does sigma_c act trivially on the closure (c coprime to level)?"""
        if (c - self.cyc % self.cyc) % self.cyc != 1 % self.cyc:
            pass
        if c % self.cyc != 1 % self.cyc:
            return False
        if self.kappa == 1 and self.zpow == 0:
            return True
        s = _root_sign(c - 1, 1 << self.zpow) if self.zpow else 1
        if s is None:
            return False
        return kronecker_symbol(_kernel_disc(self.kappa), c) * s == 1


def _abelian_closure(n: int, g: int) -> _AbelianClosure:
    parts = _radical_parts(g)
    a = parts.two_exp
    sliver2 = min(_v2(n), a + 1)
    if sliver2 <= a:
        cyc = _lcm(n, 1 << (sliver2 + 1)) if parts.sign == -1 else n
        return _AbelianClosure(n, cyc, cyc)
    # sliver2 == a + 1: a genuine square-root layer on top of rational powers
    D = abs(_kernel_disc(parts.kernel))
    if parts.sign == 1:
        return _AbelianClosure(n, _lcm(n, D), n, parts.kernel, 0)
    zpow = a + 2
    return _AbelianClosure(n, _lcm(_lcm(n, 1 << zpow), D), n, parts.kernel, zpow)


def quadratic_subfield_test(m: int, n: int, g: int) -> bool:
    """Is sqrt(m) an element of Q(zeta_n, g^(1/n))?  m squarefree, m != 1."""
    if m == 1 or m == 0:
        raise DomainError(f"m must be a squarefree integer != 1, got {m}")
    if abs(m) > 1 and squarefree_kernel(m) != m:
        raise DomainError(f"{m} is not squarefree")
    _check_radicand(g)
    if n < 1:
        raise DomainError("n must be positive")
    closure = _abelian_closure(n, g)
    gens = _cyclotomic_class_generators(closure.cyc)
    gens.extend(_sliver_class_generators(closure))
    return _span_contains(gens, m)


def _sliver_class_generators(closure: _AbelianClosure) -> list[int]:
    """Rational square classes contributed by the non-cyclotomic sliver."""
    if closure.kappa == 1 and closure.zpow == 0:
        return []
    kappa, n = closure.kappa, closure.n
    if closure.zpow == 0:  # sqrt(kappa) itself
        return [kappa]
    # sliver sqrt(kappa) * zeta_{2^(a+2)}; its square is kappa * zeta_{2^(a+1)}
    a1 = closure.zpow - 1  # a + 1
    if _v2(n) >= a1 + 1:
        return [kappa]
    # v2(n) == a + 1 exactly
    if a1 == 1:
        return [_class_kernel(-kappa)]
    if a1 == 2:
        return [_class_kernel(2 * kappa)]
    return []  # zeta_{2^(a+1)} carries no rational square class here


# ---------------------------------------------------------------------------
# Intersection fields and Frobenius-class existence


@dataclass(frozen=True)
class IntersectionQuery:
    """The field Q(zeta_d) cap Q(zeta_n, g^(1/n))."""

    d: int
    n: int
    g: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.n < 1:
            raise DomainError("d and n must be positive")
        _check_radicand(self.g)

    def degree(self) -> int:
        return intersection_degree(self.d, self.n, self.g)


def intersection_degree(d: int, n: int, g: int) -> int:
    """[Q(zeta_d) cap Q(zeta_n, g^(1/n)) : Q], via the compositum identity."""
    if d < 1 or n < 1:
        raise DomainError("d and n must be positive")
    _check_radicand(g)
    num = euler_phi(d) * kummer_degree(n, n, g)
    den = kummer_degree(_lcm(d, n), n, g)
    if num % den:
        raise AssertionError(f"degree ratio not integral for d={d}, n={n}, g={g}")
    return num // den


def frobenius_class_exists(d: int, a: int, n: int, g: int) -> bool:
    """Can a prime be = a (mod d) while g is an n-th power residue mod p?

    True iff sigma_a restricts to the identity on the intersection field
    Q(zeta_d) cap Q(zeta_n, g^(1/n)); decided by lifting a to characters
    of the maximal abelian subfield of Q(zeta_n, g^(1/n)).
    """
    if d < 1 or n < 1:
        raise DomainError("d and n must be positive")
    a %= d
    if gcd(a, d) != 1:
        raise DomainError(f"need gcd(a, d) = 1, got a={a}, d={d}")
    _check_radicand(g)
    if d == 1:
        return True
    closure = _abelian_closure(n, g)
    N = _lcm(d, closure.level)
    for c in range(a, N + 1, d):
        if gcd(c, N) == 1 and closure.fixes(c):
            return True
    return False


@dataclass(frozen=True)
class LemmaCheck:
    """Comparison of intersection degrees at levels t and q*t."""

    equal: bool
    precondition_ok: bool  # gcd(q, 2*d*g*t) == 1
    degree_t: int
    degree_qt: int


def lemma_invariance_check(d: int, t: int, q: int, g: int) -> LemmaCheck:
    """Check [I_qt : Q] = [I_t : Q]; flags the coprimality hypothesis.

    The equality is guaranteed when gcd(q, 2dgt) = 1.  When the
    hypothesis fails the degrees are still computed so counterexamples
    can be exhibited.
    """
    if d < 1 or t < 1 or q < 1:
        raise DomainError("d, t, q must be positive")
    _check_radicand(g)
    ok = gcd(q, 2 * d * g * t) == 1
    deg_t = intersection_degree(d, t, g)
    deg_qt = intersection_degree(d, q * t, g)
    return LemmaCheck(deg_t == deg_qt, ok, deg_t, deg_qt)
