"""GF(p^f) arithmetic on integer-encoded elements.

An element sum a_i x^i (0 <= a_i < p) is encoded as the integer
sum a_i p^i, so field elements are plain ints in range(q). The modulus is
the lexicographically least monic irreducible polynomial of degree f,
which makes every construction reproducible without external tables.
"""

from __future__ import annotations

from functools import lru_cache

from .numtheory import factorize, is_prime


def _poly_from_int(n: int, p: int) -> list[int]:
    out = []
    while n:
        out.append(n % p)
        n //= p
    return out


def _poly_to_int(coeffs: list[int], p: int) -> int:
    n = 0
    for c in reversed(coeffs):
        n = n * p + c
    return n


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while any(b):
        a, b = b, _poly_mod(a, b, p)
        while a and a[-1] == 0:
            a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(m: list[int], p: int) -> bool:
    """Monic degree-f polynomial irreducibility over GF(p)."""
    f = len(m) - 1
    x = [0, 1]
    # x^(p^f) == x mod m
    t = _poly_powmod(x, p**f, m, p)
    lhs = _poly_mod([(ti - xi) % p for ti, xi in zip(t + [0] * 2, x + [0] * len(t))], m, p)
    if any(lhs):
        return False
    for k in factorize(f):
        t = _poly_powmod(x, p ** (f // k), m, p)
        diff = [(a - b) % p for a, b in zip(t + [0] * 2, x + [0] * len(t))]
        while diff and diff[-1] == 0:
            diff.pop()
        g = _poly_gcd(m, diff, p)
        if len(g) - 1 != 0:
            return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree f over GF(p).

    Lexicographic on the coefficient tuple (a_0, a_1, ..., a_{f-1}, 1).
    """
    if f == 1:
        return (0, 1)
    for enc in range(p**f):
        coeffs = _poly_from_int(enc, p)
        coeffs += [0] * (f - len(coeffs))
        m = coeffs + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field GF(p^f) with integer-encoded elements 0..q-1."""

    def __init__(self, p: int, f: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if f < 1:
            raise ValueError("f must be >= 1")
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = list(least_irreducible(p, f))
        self._mul_table: list[int] | None = None
        if self.q <= 256:
            # dense tables make the projective-action builders fast
            tbl = [0] * (self.q * self.q)
            for a in range(self.q):
                pa = _poly_from_int(a, p)
                for b in range(a, self.q):
                    val = _poly_to_int(
                        _poly_mod(_poly_mul(pa, _poly_from_int(b, p), p), self.modulus, p), p
                    )
                    tbl[a * self.q + b] = val
                    tbl[b * self.q + a] = val
            self._mul_table = tbl

    def add(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while a:
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        pa = _poly_from_int(a, self.p)
        pb = _poly_from_int(b, self.p)
        return _poly_to_int(_poly_mod(_poly_mul(pa, pb, self.p), self.modulus, self.p), self.p)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        e %= self.q - 1
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, k: int = 1) -> int:
        """a ** (p^k)."""
        return self.pow(a, self.p**k)

    def elements(self):
        return range(self.q)

    @property
    def primitive_element(self) -> int:
        """Least generator of the multiplicative group."""
        n = self.q - 1
        if n == 1:
            return 1
        prime_facs = list(factorize(n))
        for a in range(2, self.q):
            if all(self.pow(a, n // r) != 1 for r in prime_facs):
                return a
        raise AssertionError("no primitive element found")

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.q - 1
        d = n
        for r in factorize(n):
            while d % r == 0 and self.pow(a, d // r) == 1:
                d //= r
        return d

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1
