"""Dense univariate polynomials with exact integer coefficients.

A polynomial is an immutable tuple of Python ints, index = power, with
trailing zeros stripped, so ``IntPolynomial(())`` is the zero polynomial.
The variable name only affects printing.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Iterable, Sequence


class IntPolynomial:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "q"):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)
        self.var = var

    # construction helpers

    @classmethod
    def const(cls, c: int, var: str = "q") -> "IntPolynomial":
        return cls((c,), var)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1, var: str = "q") -> "IntPolynomial":
        return cls([0] * power + [coeff], var)

    @classmethod
    def x(cls, var: str = "q") -> "IntPolynomial":
        return cls((0, 1), var)

    @classmethod
    def falling(cls, j: int, var: str = "d") -> "IntPolynomial":
        """d(d-1)...(d-j+1)."""
        p = cls((1,), var)
        for i in range(j):
            p = p * cls((-i, 1), var)
        return p

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial.const(other).coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # arithmetic

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return IntPolynomial(res, self.var)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial((), self.var)
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return IntPolynomial(res, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,), self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, c: int) -> "IntPolynomial":
        """Divide every coefficient by the integer ``c``; must divide exactly."""
        out = []
        for x in self.coeffs:
            quo, rem = divmod(x, c)
            if rem:
                raise ArithmeticError(f"{c} does not divide coefficient {x}")
            out.append(quo)
        return IntPolynomial(out, self.var)

    # evaluation and substitution

    def __call__(self, x):
        """Horner evaluation; ``x`` may be an int or another polynomial."""
        if isinstance(x, IntPolynomial):
            return self.compose(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a: int = 1) -> "IntPolynomial":
        """p(x + a), by exact composition."""
        return self.compose(IntPolynomial((a, 1), self.var))

    def negate_var(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial(
            [c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)], self.var
        )

    def with_var(self, var: str) -> "IntPolynomial":
        return IntPolynomial(self.coeffs, var)

    # serialization

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence, var: str = "q") -> "IntPolynomial":
        return cls([int(c) for c in data], var)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        # ascending order, e.g. "12 + 18q + 8q^2 + q^3"
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{k}"
            mag = abs(c)
            body = mono if (mag == 1 and mono) else f"{mag}{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def binomial(d: int, j: int) -> int:
    """C(d, j) for any integer d, via the falling factorial."""
    if j < 0:
        return 0
    num = 1
    for i in range(j):
        num *= d - i
    return num // factorial(j)


def multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    total = sum(counts)
    out = 1
    for c in counts:
        out *= comb(total, c)
        total -= c
    return out
