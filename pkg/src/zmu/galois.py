"""Exact GF(p^nu) arithmetic with quotient and difference tables.

Elements are polynomials a_0 + a_1 t + ... + a_{nu-1} t^{nu-1} over GF(p),
encoded by the integer sum(a_i p^i).  That integer order is the canonical
order used everywhere: writing an element as pi + z with pi in the subgroup
S of zero-constant-term polynomials and z in GF(p), elements sort by
(index of pi, z).  For prime fields the order is 0, 1, ..., p - 1.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .cyclic_core import ResidueSet, Scheme

__all__ = ["Field", "FieldError", "build_field", "is_prime", "prime_power",
           "quotient_table", "difference_table", "position_residue",
           "position_scheme"]


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """(p, nu) with q = p^nu, or FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    nu, r = 0, q
    while r % p == 0:
        r //= p
        nu += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, nu


def _polymod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over GF(p); coefficient lists low degree first."""
    num = num[:]
    inv = pow(den[-1], p - 2, p)
    while len(num) >= len(den) and any(num):
        if num[-1] == 0:
            num.pop()
            continue
        factor = num[-1] * inv % p
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(f_low: list[int], p: int) -> bool:
    nu = len(f_low) - 1
    for d in range(1, nu // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            if not _polymod(f_low, g, p):
                return False
    return True


def _smallest_irreducible(p: int, nu: int) -> tuple[int, ...]:
    # monic; remaining coefficients compared from degree nu-1 down to 0
    for coeffs in product(range(p), repeat=nu):
        f_high = (1,) + coeffs
        if _is_irreducible(list(reversed(f_high)), p):
            return f_high
    raise FieldError(f"no irreducible polynomial of degree {nu} over GF({p})")


class Field:
    """GF(p^nu) = GF(p)[t]/(f) with a fixed primitive element y.

    ``f`` is given high-degree coefficient first and must be monic; ``y`` is
    an element index.  Defaults: the lexicographically smallest monic
    irreducible polynomial and the smallest primitive element.
    """

    def __init__(self, p: int, nu: int = 1, f: Sequence[int] | None = None, y: int | None = None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if nu < 1:
            raise FieldError("extension degree must be >= 1")
        self.p, self.nu, self.q = p, nu, p ** nu
        if f is None:
            f = _smallest_irreducible(p, nu)
        f = tuple(int(c) % p for c in f)
        if len(f) != nu + 1 or f[0] != 1:
            raise FieldError(f"reduction polynomial must be monic of degree {nu}")
        if not _is_irreducible(list(reversed(f)), p):
            raise FieldError(f"polynomial {f} is reducible over GF({p})")
        self.f = f
        q = self.q
        self._digits = [self._to_digits(x) for x in range(q)]
        self.add = np.array([[self._from_digits([(a + b) % p for a, b in zip(self._digits[x], self._digits[z])])
                              for z in range(q)] for x in range(q)], dtype=np.int64)
        self.neg = np.array([self._from_digits([(-a) % p for a in self._digits[x]]) for x in range(q)])
        f_low = list(reversed(f))
        self.mul = np.zeros((q, q), dtype=np.int64)
        for x in range(q):
            for z in range(x, q):
                prod = [0] * (2 * nu - 1)
                for i, a in enumerate(self._digits[x]):
                    if a:
                        for j, b in enumerate(self._digits[z]):
                            prod[i + j] = (prod[i + j] + a * b) % p
                rem = _polymod(prod, f_low, p)
                self.mul[x, z] = self.mul[z, x] = self._from_digits(rem + [0] * (nu - len(rem)))
        if y is None:
            y = next(x for x in range(1, q) if self._order(x) == q - 1)
        elif not 0 < y < q or self._order(y) != q - 1:
            raise FieldError(f"element {y} is not primitive in GF({q})")
        self.y = y
        self.exp = [1]
        for _ in range(q - 2):
            self.exp.append(int(self.mul[self.exp[-1], y]))
        self.log = {x: i for i, x in enumerate(self.exp)}

    def _to_digits(self, x: int) -> list[int]:
        return [(x // self.p ** i) % self.p for i in range(self.nu)]

    def _from_digits(self, digits) -> int:
        return sum(int(d) * self.p ** i for i, d in enumerate(digits))

    def _order(self, x: int) -> int:
        k, z = 1, x
        while z != 1:
            z = int(self.mul[z, x])
            k += 1
            if k > self.q:
                return 0
        return k

    def sub(self, x: int, z: int) -> int:
        return int(self.add[x, self.neg[z]])

    def power(self, k: int) -> int:
        return self.exp[k % (self.q - 1)]

    def split(self, x: int) -> tuple[int, int]:
        """(index of pi in S, z) with x = pi + z."""
        return x // self.p, x % self.p

    def coefficients(self, x: int) -> tuple[int, ...]:
        """Coefficients a_0..a_{nu-1} of element x."""
        return tuple(self._digits[x])

    def __repr__(self):
        return f"Field(p={self.p}, nu={self.nu}, f={self.f}, y={self.y})"


def build_field(p: int, nu: int = 1, f: Sequence[int] | None = None, y: int | None = None) -> Field:
    return Field(p, nu, f, y)


def quotient_table(F: Field) -> np.ndarray:
    """Entry (i, j) = y^(i - j), rows/columns in the order 1, y, ..., y^(q-2)."""
    n = F.q - 1
    return np.array([[F.power(i - j) for j in range(n)] for i in range(n)], dtype=np.int64)


def difference_table(F: Field) -> np.ndarray:
    """Entry (i, j) = x_i - x_j in the canonical element order."""
    return F.add[:, F.neg]


def position_residue(F: Field, x: int) -> int:
    """The i with x = y^(-i): the circulant support of x's position in the quotient table."""
    if x == 0 or not 0 <= x < F.q:
        raise FieldError("position_residue needs a nonzero field element")
    return (-F.log[x]) % (F.q - 1)


def position_scheme(F: Field, x: int) -> Scheme:
    """Z_p-scheme of order p^(nu-1) whose blow-up is x's position matrix in the difference table.

    Write x = pi + z.  Cells where the difference table of S holds pi get the
    singleton {-z mod p}; the others stay blank.
    """
    p, s = F.p, F.q // F.p
    pi, z = F.split(x)
    grid = []
    for i in range(s):
        row = []
        for j in range(s):
            d = F.sub(i * p, j * p)
            row.append(ResidueSet(p, ((-z) % p,)) if d == pi * p else None)
        grid.append(row)
    return Scheme(p, grid)
