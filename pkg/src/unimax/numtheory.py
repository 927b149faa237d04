"""Exact integer and number-theoretic predicates.

Everything here is plain arbitrary-precision integer arithmetic: prime
tests are deterministic, searches are exhaustive over finite ranges, and
the r-part formulas carry a built-in cross-check against direct valuation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witness set)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Find a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}. Exact for all inputs."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        # small trial division first; rho for the rest
        root = math.isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return dict(sorted(out.items()))


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(factorize(n))


@dataclass(frozen=True)
class RPart:
    """The largest power r^exponent dividing some integer."""

    r: int
    exponent: int

    def __post_init__(self) -> None:
        if not is_prime(self.r):
            raise ValueError(f"r = {self.r} is not prime")
        if self.exponent < 0:
            raise ValueError("exponent must be >= 0")

    @property
    def value(self) -> int:
        return self.r**self.exponent

    def __int__(self) -> int:
        return self.value


def r_valuation(n: int, r: int) -> RPart:
    """Largest power of the prime r dividing n >= 1."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not is_prime(r):
        raise ValueError(f"r = {r} is not prime")
    e = 0
    while n % r == 0:
        n //= r
        e += 1
    return RPart(r, e)


def rpart(n: int, r: int) -> int:
    """Convenience: the integer value of the r-part of n."""
    return r_valuation(n, r).value


def mult_order(q: int, r: int) -> int:
    """Multiplicative order of q modulo the prime r; divides r - 1."""
    if not is_prime(r):
        raise ValueError(f"r = {r} is not prime")
    if q % r == 0:
        raise ValueError(f"r = {r} divides q = {q}")
    qm = q % r
    # start from r-1 and strip prime factors while the power stays 1
    d = r - 1
    for p in factorize(r - 1):
        while d % p == 0 and pow(qm, d // p, r) == 1:
            d //= p
    return d


@dataclass(frozen=True)
class PrimePowerQ:
    """A prime power q = p^f."""

    p: int
    f: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.f < 1:
            raise ValueError("f must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.f

    def __int__(self) -> int:
        return self.q

    @classmethod
    def from_q(cls, q: int) -> "PrimePowerQ":
        pf = is_prime_power(q)
        if pf is None:
            raise ValueError(f"q = {q} is not a prime power")
        return cls(*pf)


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, f) with n = p^f, or None."""
    if n < 2:
        return None
    if is_prime(n):
        return (n, 1)
    for f in range(2, n.bit_length() + 1):
        p = round(n ** (1.0 / f))
        for cand in (p - 1, p, p + 1):
            if cand >= 2 and cand**f == n and is_prime(cand):
                return (cand, f)
    return None


class Sign(Enum):
    PLUS = 1
    MINUS = -1

    @classmethod
    def of(cls, eps: "int | Sign") -> "Sign":
        if isinstance(eps, Sign):
            return eps
        return cls(eps)


def _moebius(n: int) -> int:
    mu = 1
    for p, e in factorize(n).items():
        if e > 1:
            return 0
        mu = -mu
    return mu


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def cyclotomic_value(d: int, q: int) -> int:
    """Phi_d(q) as an exact integer (q >= 2, d >= 1)."""
    num = 1
    den = 1
    for e in _divisors(d):
        mu = _moebius(d // e)
        if mu == 1:
            num *= q**e - 1
        elif mu == -1:
            den *= q**e - 1
    assert num % den == 0
    return num // den


def ppd(q: PrimePowerQ | int, d: int) -> frozenset[int]:
    """Primitive prime divisors of q^d - 1.

    Primes r with r | q^d - 1 but r not dividing q^e - 1 for 1 <= e < d.
    Empty exactly in the Zsigmondy exception cases: (q, d) = (2, 6) and
    d = 2 with q a Mersenne prime.
    """
    if d < 2:
        raise ValueError("ppd requires d >= 2")
    qq = int(q)
    # every primitive prime divisor divides the cyclotomic factor
    out = set()
    for r in factorize(cyclotomic_value(d, qq)):
        if mult_order(qq, r) == d:
            out.add(r)
    return frozenset(out)


def rpart_q_pow(
    q: PrimePowerQ | int,
    d: int,
    minus: bool,
    eps: int | Sign,
    r: int,
    self_check: bool = True,
) -> RPart:
    """The r-part of q^d - eps (minus=True) or q^d + eps (minus=False).

    Closed-form case analysis for a prime r dividing q - eps; cross-checked
    against direct valuation whenever q^d is small enough (~4096 bits).
    """
    qq = int(q)
    e = Sign.of(eps).value
    if d < 1:
        raise ValueError("d must be >= 1")
    if (qq - e) % r != 0:
        raise ValueError(f"r = {r} does not divide q - eps = {qq - e}")
    if r == 2:
        if not minus:
            # q^d + eps with eps = +-1 and 2 | q - eps means q odd;
            # q^d + eps == q^d - (-eps) handled by flipping the sign.
            return rpart_q_pow(qq, d, True, -e, r, self_check)
        if d % 2 == 1:
            out = rpart(qq - e, 2)
        elif e == 1:
            out = rpart(qq * qq - 1, 2) * rpart(d // 2, 2)
        else:
            out = 2
    else:
        if minus:
            if d % 2 == 0 and e == -1:
                out = 1
            else:
                out = rpart(qq - e, r) * rpart(d, r)
        else:
            if d % 2 == 0 and e == -1:
                out = rpart(qq - e, r) * rpart(d, r)
            else:
                out = 1
    if self_check and qq**d < 1 << 4096:
        literal = qq**d - e if minus else qq**d + e
        direct = rpart(literal, r)
        if direct != out:
            raise AssertionError(
                f"r-part formula mismatch: q={qq} d={d} minus={minus} "
                f"eps={e} r={r}: formula {out} vs direct {direct}"
            )
    return r_valuation(out, r)


def alpha_cond(m: int, eps: int | Sign, q: PrimePowerQ, r: int, *, odd_only: bool = False) -> bool:
    """True iff (q^{1/k})^m is not congruent to eps mod r for every prime
    k dividing f with k != r (restricted to odd k when odd_only is set).

    Vacuously true when the index set is empty (e.g. f = 1).
    """
    e = Sign.of(eps).value
    for k in prime_divisors(q.f):
        if k == r:
            continue
        if odd_only and k == 2:
            continue
        q0 = q.p ** (q.f // k)
        if pow(q0, m, r) == e % r:
            return False
    return True


def beta_cond(m: int, eps: int | Sign, q: PrimePowerQ, r: int) -> bool:
    """alpha_cond restricted to the odd primes dividing f."""
    return alpha_cond(m, eps, q, r, odd_only=True)


class PrimeShape(Enum):
    MERSENNE = "mersenne"
    FERMAT = "fermat"
    NEITHER = "neither"
    NOT_PRIME = "not_prime"


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def prime_shape(n: int) -> PrimeShape:
    """Mersenne / Fermat / neither classification of a prime.

    2 reports Fermat (2 = 2^0 + 1 degenerately); callers exclude it via
    their own lower bounds on q.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not is_prime(n):
        return PrimeShape.NOT_PRIME
    if _is_power_of_two(n + 1):
        return PrimeShape.MERSENNE
    if _is_power_of_two(n - 1):
        return PrimeShape.FERMAT
    return PrimeShape.NEITHER


@lru_cache(maxsize=None)
def in_scriptP(r: int) -> bool:
    """True iff the prime r equals (q^d - 1)/(q - 1) = 1 + q + ... + q^{d-1}
    for some prime power q >= 2 and d >= 2. Decided by exhaustive search.
    """
    if not is_prime(r):
        raise ValueError(f"r = {r} is not prime")
    for q in range(2, r):
        if is_prime_power(q) is None:
            continue
        total = 1 + q
        while total < r:
            total = total * q + 1
        if total == r:
            return True
        if q + 1 >= r:
            break
    return False


def is_square_mod(a: int, p: int) -> bool:
    """Euler criterion: is a a square modulo the odd prime p?"""
    if not is_prime(p) or p == 2:
        raise ValueError(f"p = {p} must be an odd prime")
    if a % p == 0:
        raise ValueError(f"p = {p} divides a = {a}")
    return pow(a % p, (p - 1) // 2, p) == 1
