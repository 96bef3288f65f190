"""Integer Laurent polynomials in one variable.

The carrier type for every polynomial invariant in the package.  Exponents
are plain integers; callers that need half-integer exponents (the Jones
polynomial of a link) work on a doubled exponent scale and say so in their
output formatting.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Stored as a mapping exponent -> nonzero coefficient.  Zero coefficients
    are never kept, so equality is plain dict equality.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if v:
                c[e] = c.get(e, 0) + v
                if not c[e]:
                    del c[e]
        self._c = c

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def term(coeff: int, exp: int = 0) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    # -- ring ops ----------------------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
            if not c[e]:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: v for e, v in c.items() if v}
        return out

    def scale(self, k: int) -> "LaurentPoly":
        if not k:
            return LaurentPoly()
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: k * v for e, v in self._c.items()}
        return out

    def shift(self, de: int) -> "LaurentPoly":
        """Multiply by x**de."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + de: v for e, v in self._c.items()}
        return out

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) == 1:
                ((e, v),) = self._c.items()
                if v in (1, -1):
                    return LaurentPoly({n * e: v ** (abs(n) % 2) if v == -1 else 1})
            raise ValueError("negative powers only for unit monomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_power(self, k: int) -> "LaurentPoly":
        """x -> x**k (k may be negative: x -> x**-1 gives the mirror image)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e * k: v for e, v in self._c.items()}
        return out

    def __call__(self, x: int):
        """Evaluate at a nonzero integer (or Fraction) point."""
        from fractions import Fraction

        total = Fraction(0)
        for e, v in self._c.items():
            total += v * Fraction(x) ** e
        return total if total.denominator != 1 else int(total)

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    @property
    def min_exp(self) -> int:
        return min(self._c) if self._c else 0

    @property
    def max_exp(self) -> int:
        return max(self._c) if self._c else 0

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if the division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("laurent division by zero")
        num = {e - self.min_exp: v for e, v in self._c.items()}
        den = {e - other.min_exp: v for e, v in other._c.items()}
        if not num:
            return LaurentPoly()
        dd = max(den)
        lead = den[dd]
        q: dict[int, int] = {}
        rem = dict(num)
        while rem:
            nd = max(rem)
            if nd < dd:
                raise ValueError("inexact laurent division")
            c, r = divmod(rem[nd], lead)
            if r:
                raise ValueError("inexact laurent division")
            q[nd - dd] = c
            for e, v in den.items():
                k = nd - dd + e
                rem[k] = rem.get(k, 0) - c * v
                if not rem[k]:
                    del rem[k]
        return LaurentPoly(q).shift(self.min_exp - other.min_exp)

    # -- equality / ordering -------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._c.items())))

    # -- formatting ----------------------------------------------------------
    def format(self, var: str = "t", exp_scale: int = 1) -> str:
        """Render with exponents divided by exp_scale (2 for half-integer scales).

        Stable sorted ordering, suitable for bit-exact report diffing.
        """
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, v in sorted(self._c.items()):
            if exp_scale != 1 and e % exp_scale == 0:
                es = str(e // exp_scale)
            elif exp_scale != 1:
                es = f"{e}/{exp_scale}"
            else:
                es = str(e)
            if e == 0:
                term = str(v)
            else:
                coeff = "" if v == 1 else ("-" if v == -1 else str(v) + "*")
                term = f"{coeff}{var}^{es}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()})"


def alexander_normalize(p: LaurentPoly) -> LaurentPoly:
    """Symmetric normalized form: p(t) = p(1/t) and p(1) = 1.

    Multiplies by +-t^k.  Raises ValueError if p(1) is not a unit, which
    cannot happen for an Alexander polynomial of a knot.
    """
    if p.is_zero():
        return p
    center = p.min_exp + p.max_exp
    if center % 2:
        # Shift onto the even-center lattice so the symmetric form exists on
        # integer exponents; Alexander polynomials of knots always allow it.
        raise ValueError("polynomial has no symmetric integer-exponent form")
    q = p.shift(-center // 2)
    if q.substitute_power(-1) != q:
        raise ValueError("polynomial is not symmetric after centering")
    at_one = q(1)
    if at_one == 1:
        return q
    if at_one == -1:
        return q.scale(-1)
    raise ValueError(f"p(1) = {at_one}, not a unit")
