"""Exact coefficient arithmetic.

Two small commutative rings carry every number in this package:

* :class:`LaurentPoly` -- Laurent polynomials in ``q`` over the integers,
  the value ring of the MOY calculus and of graded Euler characteristics.
* :class:`ABCScalar` -- polynomials in the deformation parameters
  ``a, b, c`` (of degrees 2, 4, 6), the ground ring of the universal
  sl(3) theory.

Python integers are arbitrary precision, so they serve directly as the
BigInt coefficient type.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPoly:
    """An exact Laurent polynomial in ``q`` with integer coefficients.

    Immutable.  Zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        c = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, v in items:
            v = c.get(e, 0) + v
            if v:
                c[e] = v
            elif e in c:
                del c[e]
        self._c = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q_power(cls, e: int, coeff: int = 1) -> "LaurentPoly":
        return cls({e: coeff})

    @classmethod
    def from_int(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ``ValueError`` when the division has a remainder.

        Used to police integrality of quantum binomials.
        """
        other = _coerce(other)
        if not other._c:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self._c:
            return LaurentPoly.zero()
        rem = dict(self._c)
        quot: dict[int, int] = {}
        d_lo, d_hi = min(other._c), max(other._c)
        d_lead = other._c[d_hi]
        # exactness forces the quotient to live between these exponents
        floor = min(rem) - d_lo
        while rem:
            e_hi = max(rem)
            c_hi = rem[e_hi]
            e, v = e_hi - d_hi, c_hi // d_lead
            if c_hi % d_lead or e < floor:
                raise ValueError("inexact Laurent division")
            quot[e] = quot.get(e, 0) + v
            for de, dv in other._c.items():
                k = de + e
                w = rem.get(k, 0) - dv * v
                if w:
                    rem[k] = w
                elif k in rem:
                    del rem[k]
        return LaurentPoly(quot)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def degrees(self) -> tuple[int, int]:
        """(min exponent, max exponent); raises on zero."""
        if not self._c:
            raise ValueError("zero polynomial has no degree span")
        return min(self._c), max(self._c)

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def has_nonnegative_coeffs(self) -> bool:
        return all(v >= 0 for v in self._c.values())

    def is_palindromic(self) -> bool:
        """Invariance under q -> 1/q."""
        return all(self._c.get(-e) == v for e, v in self._c.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    # -- text form ---------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                term = str(v)
            else:
                mag = "q" if e == 1 else f"q^{e}"
                if v == 1:
                    term = mag
                elif v == -1:
                    term = "-" + mag
                else:
                    term = f"{v}*{mag}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the textual rendering produced by ``str``."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        out: dict[int, int] = {}
        for m in re.finditer(
            r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?(q(?:\^(-?\d+))?)?", text
        ):
            sign, num, qpart, exp = m.groups()
            if not num and not qpart:
                continue
            v = int(num) if num else 1
            if sign == "-":
                v = -v
            e = 0
            if qpart:
                e = int(exp) if exp is not None else 1
            out[e] = out.get(e, 0) + v
        return cls(out)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.from_int(x)
    raise TypeError(f"cannot coerce {type(x)!r} into LaurentPoly")


def quantum_int(n: int) -> LaurentPoly:
    """The balanced quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError("quantum_int requires n >= 0")
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def quantum_factorial(n: int) -> LaurentPoly:
    out = LaurentPoly.one()
    for k in range(1, n + 1):
        out = out * quantum_int(k)
    return out


def quantum_binom(n: int, k: int) -> LaurentPoly:
    """The balanced quantum binomial [n choose k], computed by exact division."""
    if not 0 <= k <= n:
        raise ValueError("quantum_binom requires 0 <= k <= n")
    num = quantum_factorial(n)
    den = quantum_factorial(k) * quantum_factorial(n - k)
    return num.exact_div(den)


# degrees of the sl(3) deformation parameters
ABC_DEGREES = (2, 4, 6)


class ABCScalar:
    """A polynomial in a, b, c over the integers, with deg a,b,c = 2,4,6.

    Keys are exponent triples ``(i, j, k)`` for ``a^i b^j c^k``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int, int], int]
                 | Iterable[tuple[tuple[int, int, int], int]] = ()):
        c = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for m, v in items:
            v = c.get(m, 0) + v
            if v:
                c[tuple(m)] = v
            elif m in c:
                del c[m]
        self._c = c

    @classmethod
    def zero(cls) -> "ABCScalar":
        return cls()

    @classmethod
    def one(cls) -> "ABCScalar":
        return cls({(0, 0, 0): 1})

    @classmethod
    def from_int(cls, n: int) -> "ABCScalar":
        return cls({(0, 0, 0): n})

    @classmethod
    def gen(cls, name: str) -> "ABCScalar":
        i = "abc".index(name)
        m = [0, 0, 0]
        m[i] = 1
        return cls({tuple(m): 1})

    def __add__(self, other):
        other = _coerce_abc(other)
        c = dict(self._c)
        for m, v in other._c.items():
            w = c.get(m, 0) + v
            if w:
                c[m] = w
            elif m in c:
                del c[m]
        return ABCScalar(c)

    __radd__ = __add__

    def __neg__(self):
        return ABCScalar({m: -v for m, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce_abc(other))

    def __rsub__(self, other):
        return _coerce_abc(other) + (-self)

    def __mul__(self, other):
        other = _coerce_abc(other)
        c: dict[tuple[int, int, int], int] = {}
        for m1, v1 in self._c.items():
            for m2, v2 in other._c.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                w = c.get(m, 0) + v1 * v2
                if w:
                    c[m] = w
                elif m in c:
                    del c[m]
        return ABCScalar(c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def degree(self) -> int:
        """Top q-degree (a, b, c have degrees 2, 4, 6); -1 for zero."""
        if not self._c:
            return -1
        return max(2 * i + 4 * j + 6 * k for i, j, k in self._c)

    def is_homogeneous(self) -> bool:
        degs = {2 * i + 4 * j + 6 * k for i, j, k in self._c}
        return len(degs) <= 1

    def constant_term(self) -> int:
        return self._c.get((0, 0, 0), 0)

    def specialize(self, a: int, b: int, c: int) -> int:
        return sum(v * a**i * b**j * c**k for (i, j, k), v in self._c.items())

    def coeffs(self) -> dict[tuple[int, int, int], int]:
        return dict(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ABCScalar.from_int(other)
        if not isinstance(other, ABCScalar):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for m in sorted(self._c):
            v = self._c[m]
            names = "".join(
                n if e == 1 else f"{n}^{e}"
                for n, e in zip("abc", m) if e
            )
            if not names:
                term = str(v)
            elif v == 1:
                term = names
            elif v == -1:
                term = "-" + names
            else:
                term = f"{v}*{names}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def __repr__(self):
        return f"ABCScalar({self})"


def _coerce_abc(x) -> ABCScalar:
    if isinstance(x, ABCScalar):
        return x
    if isinstance(x, int):
        return ABCScalar.from_int(x)
    raise TypeError(f"cannot coerce {type(x)!r} into ABCScalar")
