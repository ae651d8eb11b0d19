"""The q-chromatic symmetric function in the monomial basis.

``psi_q(g)`` stores, for every partition lam of n, the polynomial
sum over ordered set partitions (I_1, ..., I_k) of V with block sizes lam
of q ** (rk g|I_1 + ... + rk g|I_k).  Its principal specialization is kept
in the binomial basis ``sum_j c_j(q) * C(d, j)`` so all arithmetic is integral.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from .errors import BudgetError, ValidationError
from .graph import Graph
from .poly import IntPolynomial, binomial, multinomial

PSI_BUDGET = 10

Partition = tuple[int, ...]


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Integer partitions of n, parts nonincreasing, in reverse lex order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def _induced_ranks(g: Graph) -> list[int]:
    """rank[mask] = |mask| - #components of the subgraph induced on mask."""
    n = g.n
    adj = g.adjacency_masks()
    rank = [0] * (1 << n)
    for mask in range(1, 1 << n):
        comps = 0
        rest = mask
        while rest:
            low = rest & -rest
            seen = frontier = low
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                nb = adj[b.bit_length() - 1] & mask & ~seen
                seen |= nb
                frontier |= nb
            rest &= ~seen
            comps += 1
        rank[mask] = mask.bit_count() - comps
    return rank


def _masks_by_size(n: int) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1 << n):
        out[mask.bit_count()].append(mask)
    return out


def _zeta_alpha(n: int, rank: list[int], by_size: list[list[int]], alpha) -> IntPolynomial:
    # states: used-vertex mask -> coefficient list indexed by q-power
    states: dict[int, list[int]] = {0: [1]}
    for size in alpha:
        nxt: dict[int, list[int]] = {}
        for used, poly in states.items():
            for block in by_size[size]:
                if block & used:
                    continue
                r = rank[block]
                key = used | block
                tgt = nxt.get(key)
                if tgt is None:
                    tgt = nxt[key] = []
                need = len(poly) + r
                if len(tgt) < need:
                    tgt.extend([0] * (need - len(tgt)))
                for k, c in enumerate(poly):
                    tgt[k + r] += c
        states = nxt
    return IntPolynomial(states.get((1 << n) - 1, []), "q")


def zeta_q_alpha(g: Graph, alpha: Sequence[int]) -> IntPolynomial:
    """Coefficient of M_alpha: sum over set compositions of type alpha."""
    alpha = tuple(int(a) for a in alpha)
    if any(a < 1 for a in alpha) or sum(alpha) != g.n:
        raise ValidationError(f"{alpha} is not a composition of n={g.n}")
    return _zeta_alpha(g.n, _induced_ranks(g), _masks_by_size(g.n), alpha)


def _check_budget(g: Graph, budget: int | None) -> None:
    limit = PSI_BUDGET if budget is None else budget
    if g.n > limit:
        raise BudgetError(
            f"psi_q enumerates set compositions of {g.n} vertices; budget is n <= {limit}"
        )


@dataclass
class MonomialExpansion:
    weight: int
    terms: dict[Partition, IntPolynomial] = field(default_factory=dict)

    def coefficient(self, lam: Sequence[int]) -> IntPolynomial:
        return self.terms.get(tuple(sorted(lam, reverse=True)), IntPolynomial((), "q"))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialExpansion):
            return NotImplemented
        return self.weight == other.weight and self.terms == other.terms

    def __str__(self) -> str:
        parts = []
        for lam in sorted(self.terms):
            c = self.terms[lam]
            s = str(c).replace(" ", "")
            if len([x for x in c if x]) > 1:
                s = f"({s})"
            parts.append(f"{s}*m[{','.join(map(str, lam))}]")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict[str, list[str]]:
        return {",".join(map(str, lam)): self.terms[lam].to_json() for lam in sorted(self.terms)}


def psi_q(g: Graph, budget: int | None = None) -> MonomialExpansion:
    _check_budget(g, budget)
    rank = _induced_ranks(g)
    by_size = _masks_by_size(g.n)
    out = MonomialExpansion(g.n)
    for lam in partitions(g.n):
        c = _zeta_alpha(g.n, rank, by_size, lam)
        if not c.is_zero():
            out.terms[lam] = c
    return out


def ps_monomial(lam: Sequence[int]) -> tuple[int, int]:
    """ps(m_lam)(d) = coeff * C(d, j); returns (coeff, j).

    j is the number of parts and coeff the multinomial over the
    multiplicities of the distinct part values.
    """
    if not lam:
        raise ValidationError("empty partition")
    mult = Counter(lam).values()
    return multinomial(mult), sum(mult)


@dataclass
class BinomialFormPolynomial:
    """sum_j terms[j](q) * C(d, j)."""

    terms: dict[int, IntPolynomial] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinomialFormPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def evaluate(self, q_sub: IntPolynomial, d0: int) -> IntPolynomial:
        out = IntPolynomial((), q_sub.var)
        for j, c in self.terms.items():
            out = out + c.compose(q_sub) * binomial(d0, j)
        return out

    def by_q_power(self) -> list[IntPolynomial]:
        """Expand to the d-power basis: entry k is the coefficient of q^k,
        a polynomial in d with integer coefficients."""
        top = max((c.degree for c in self.terms.values()), default=-1)
        out = []
        for k in range(top + 1):
            acc: dict[int, Fraction] = {}
            for j, c in self.terms.items():
                if c[k]:
                    for p, a in enumerate(IntPolynomial.falling(j, "d")):
                        acc[p] = acc.get(p, Fraction(0)) + Fraction(c[k] * a, factorial(j))
            coeffs = []
            for p in range(max(acc, default=-1) + 1):
                v = acc.get(p, Fraction(0))
                if v.denominator != 1:
                    raise ArithmeticError("chi_q has a non-integral coefficient in d")
                coeffs.append(v.numerator)
            out.append(IntPolynomial(coeffs, "d"))
        return out

    def to_json(self) -> dict[str, list[str]]:
        return {str(j): self.terms[j].to_json() for j in sorted(self.terms)}

    def __str__(self) -> str:
        parts = []
        for j in sorted(self.terms):
            parts.append(f"({self.terms[j]})*C(d,{j})")
        return " + ".join(parts) if parts else "0"


def chi_q(g: Graph, budget: int | None = None) -> BinomialFormPolynomial:
    """Principal specialization of psi_q, in the binomial basis."""
    out: dict[int, IntPolynomial] = {}
    for lam, c in psi_q(g, budget).terms.items():
        coeff, j = ps_monomial(lam)
        out[j] = out.get(j, IntPolynomial((), "q")) + c * coeff
    return BinomialFormPolynomial({j: c for j, c in sorted(out.items()) if not c.is_zero()})


def chi_q_eval(
    g: Graph, q_sub: IntPolynomial | None = None, d0: int = -1, budget: int | None = None
) -> IntPolynomial:
    """chi_q(g, d0) with q replaced by ``q_sub`` (default: q itself)."""
    if q_sub is None:
        q_sub = IntPolynomial.x("q")
    return chi_q(g, budget).evaluate(q_sub, d0)


def hook_coefficient(g: Graph, budget: int | None = None) -> IntPolynomial:
    """Coefficient of m_{3,1^(n-3)} in psi_q(g)."""
    if g.n < 3:
        raise ValidationError("m_{3,1^(n-3)} needs n >= 3")
    _check_budget(g, budget)
    return zeta_q_alpha(g, (3,) + (1,) * (g.n - 3))
