"""Laurent polynomials in one variable ``q`` with integer coefficients.

Every Grothendieck group in this package is a module over ``Z[q, q^-1]``,
so this type is the common currency of the shuffle side and the K-theory
side. Coefficients are Python ints; nothing here ever touches a float.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Union

__all__ = [
    "LaurentQ",
    "Q",
    "ONE",
    "ZERO",
    "q_int",
    "q_factorial",
    "shift_multiset",
    "bar",
]

Scalar = Union[int, "LaurentQ"]


class LaurentQ:
    """An element of ``Z[q, q^-1]``.

    Stored as a sorted tuple of ``(exponent, coefficient)`` pairs with no
    zero coefficients, which makes values hashable and comparisons cheap.

    >>> f = LaurentQ({2: 1, 0: 1})
    >>> f
    LaurentQ('1 + q^2')
    >>> f.bar()
    LaurentQ('q^-2 + 1')
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = 0):
        if isinstance(coeffs, int):
            items = [(0, coeffs)]
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("LaurentQ exponents and coefficients must be int")
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def _raw(cls, terms: tuple[int, int]) -> "LaurentQ":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentQ":
        """Return ``coefficient * q**exponent``."""
        return cls._raw(((exponent, coefficient),) if coefficient else ())

    # -- inspection -----------------------------------------------------

    def coefficients(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def __getitem__(self, exponent: int) -> int:
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``+-q^k``, the units of the ring."""
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of zero")
        return self._terms[-1][0]

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of zero")
        return self._terms[0][0]

    def is_bar_symmetric(self) -> bool:
        return self == self.bar()

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentQ | None":
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, int):
            return LaurentQ.monomial(0, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentQ._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            f, d = other._terms[0]
            return LaurentQ._raw(tuple((e + f, c * d) for e, c in self._terms))
        if len(self._terms) == 1:
            return other * self
        acc: dict[int, int] = {}
        for e, c in self._terms:
            for f, d in other._terms:
                acc[e + f] = acc.get(e + f, 0) + c * d
        return LaurentQ._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units can be raised to negative powers")
            e, c = self._terms[0]
            return LaurentQ.monomial(e * k, c ** abs(k))
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentQ":
        """Multiply by ``q**k``."""
        return LaurentQ._raw(tuple((e + k, c) for e, c in self._terms))

    def bar(self) -> "LaurentQ":
        """The bar involution ``q -> q^-1``."""
        return LaurentQ._raw(tuple((-e, c) for e, c in reversed(self._terms)))

    def divexact(self, other: "LaurentQ") -> "LaurentQ":
        """Exact division in ``Z[q, q^-1]``; raises ``ValueError`` otherwise."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero LaurentQ")
        if not self._terms:
            return ZERO
        rem = dict(self._terms)
        top, lead = other._terms[-1]
        floor = self._terms[0][0] - other._terms[0][0]
        out: dict[int, int] = {}
        while rem:
            e = max(rem)
            k = e - top
            if k < floor or rem[e] % lead:
                raise ValueError(f"{self} is not divisible by {other}")
            m = rem[e] // lead
            out[k] = m
            for f, d in other._terms:
                v = rem.get(f + k, 0) - m * d
                if v:
                    rem[f + k] = v
                else:
                    rem.pop(f + k, None)
        return LaurentQ(out)

    def evaluate(self, value):
        """Evaluate at a nonzero number; ints stay exact via ``Fraction``."""
        if isinstance(value, int):
            value = Fraction(value)
        return sum((c * value ** e for e, c in self._terms), Fraction(0) if isinstance(value, Fraction) else 0)

    # -- comparison and hashing ------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(("LaurentQ", self._terms))

    # -- display and serialization ------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentQ({str(self)!r})"

    def to_json(self) -> dict[str, str]:
        """``{exponent-string: coefficient-string}`` in ascending order."""
        return {str(e): str(c) for e, c in self._terms}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentQ":
        return cls({int(e): int(c) for e, c in data.items()})

    @classmethod
    def parse(cls, text: str) -> "LaurentQ":
        """Parse the output of ``str``, e.g. ``'-q^-1 + 2 + 3*q^2'``."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return ZERO
        if text[0] not in "+-":
            text = "+" + text
        acc: dict[int, int] = {}
        i = 0
        while i < len(text):
            sign = -1 if text[i] == "-" else 1
            j = i + 1
            # a term ends at the next +/- that is not an exponent sign
            while j < len(text) and not (text[j] in "+-" and text[j - 1] != "^"):
                j += 1
            term = text[i + 1:j]
            if "q" in term:
                coef_s, _, exp_s = term.partition("q")
                coef = int(coef_s.rstrip("*")) if coef_s else 1
                exp = int(exp_s[1:]) if exp_s else 1
            else:
                coef, exp = int(term), 0
            acc[exp] = acc.get(exp, 0) + sign * coef
            i = j
        return cls(acc)


ZERO = LaurentQ._raw(())
ONE = LaurentQ._raw(((0, 1),))
Q = LaurentQ._raw(((1, 1),))


def bar(f: LaurentQ) -> LaurentQ:
    """Functional form of :meth:`LaurentQ.bar`."""
    return f.bar()


def q_int(n: int) -> LaurentQ:
    """Balanced quantum integer ``[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)``.

    >>> str(q_int(3))
    'q^-2 + 1 + q^2'
    """
    if n < 0:
        return -q_int(-n)
    return LaurentQ({n - 1 - 2 * k: 1 for k in range(n)})


def q_factorial(n: int) -> LaurentQ:
    """``[n]! = [1][2]...[n]``."""
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out


def shift_multiset(p: int) -> list[int]:
    """Exponents of ``prod_{k<p} (1 + q^2 + ... + q^{2k})`` with multiplicity.

    >>> shift_multiset(3)
    [0, 2, 2, 4, 4, 6]
    """
    if p < 1:
        raise ValueError("shift_multiset needs p >= 1")
    poly = ONE
    for k in range(p):
        poly = poly * LaurentQ({2 * j: 1 for j in range(k + 1)})
    return [e for e, c in poly.items() for _ in range(c)]
