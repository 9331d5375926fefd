"""Non-attacking fillings and the combinatorial (HHL-type) formula.

A filling of the extended diagram of mu assigns a colour sigma_{i,j} in
{1..n} to every square (i, j) with 0 <= j <= mu_i, where the basement row
is pinned to sigma_{i,0} = i.  It is non-attacking when entries differ on
every attacking pair of squares ((i,j) attacks (i',j') iff i < i' and
j - j' is 0 or 1).  The polynomial is the sum

  f_mu = sum over non-attacking sigma of
         x^sigma t^{Delta(sigma)}
         prod over descents (1-t)/(1 - q^{l+1} t^{a+1})
         prod over ascents  q^{l+1} t^a (1-t)/(1 - q^{l+1} t^{a+1})

with x^sigma the product of x_{sigma_{i,j}} over non-basement squares,
descents/ascents the squares where sigma increases/decreases from the
square below, (l, a) leg and arm lengths, and Delta the signed count of
ordered triples ((i,j), (i',j-1), (i',j)), i < i': positive when
sigma_{i',j} > sigma_{i,j} > sigma_{i',j-1}, negative when the chain runs
the other way, with sigma_{i',j} read as +infinity if (i', j) is outside
the diagram.

The map M from cylinder configurations sends a configuration to the
filling whose column a lists the rows visited by the colour-a path:
sigma_{a,j} = row of colour a in lattice column j.  It is a weight
preserving bijection onto non-attacking fillings; ``weight_match_check``
verifies this square by square, including the individual factor-group
identities the matching splits into.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .compositions import Composition, arm, attacks, leg, omega_norm, v_param
from .matrixprod import LatticeConfig, config_weight, config_weight_parts, enumerate_configs
from .qt import QTRational
from .reports import CheckReport
from .xpoly import XPolynomial

__all__ = [
    "Filling",
    "enumerate_fillings",
    "descent_ascent",
    "ordered_triples",
    "triple_delta",
    "hhl_summand",
    "f_hhl",
    "bijection_M",
    "bijection_M_inverse",
    "weight_match_check",
]

INFINITY = float("inf")


@dataclass(frozen=True)
class Filling:
    """A filling of the extended diagram: columns[i-1][j] = sigma_{i,j}."""

    mu: Composition
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.columns) != self.mu.n:
            raise ValueError("one entry column per diagram column required")
        for i, column in enumerate(self.columns, start=1):
            if len(column) != self.mu.part(i) + 1:
                raise ValueError(f"column {i} must hold {self.mu.part(i) + 1} entries")
            if column[0] != i:
                raise ValueError(f"basement entry of column {i} must be {i}")

    def entry(self, i: int, j: int) -> int:
        """sigma_{i,j} for a square of the extended diagram."""
        return self.columns[i - 1][j]

    def is_non_attacking(self) -> bool:
        squares = self.mu.extended_diagram()
        for s, s2 in itertools.combinations(squares, 2):
            if attacks(s, s2) and self.entry(*s) == self.entry(*s2):
                return False
        return True

    def x_monomial(self) -> tuple[int, ...]:
        """Exponent vector of x^sigma (basement squares excluded)."""
        exps = [0] * self.mu.n
        for i in range(1, self.mu.n + 1):
            for j in range(1, self.mu.part(i) + 1):
                exps[self.entry(i, j) - 1] += 1
        return tuple(exps)


def enumerate_fillings(mu: Composition) -> Iterator[Filling]:
    """All non-attacking fillings, built column by column left to right.

    When square (i, j) is filled, the attack constraints against earlier
    columns i' < i forbid exactly the entries sigma_{i',j} and
    sigma_{i',j+1}; those forbidden sets are looked up directly from the
    partially built filling.
    """
    n = mu.n

    def fill(columns: list[tuple[int, ...]], i: int) -> Iterator[Filling]:
        if i > n:
            yield Filling(mu, tuple(columns))
            return
        height = mu.part(i)

        def cells(j: int, current: list[int]) -> Iterator[Filling]:
            if j > height:
                columns.append(tuple(current))
                yield from fill(columns, i + 1)
                columns.pop()
                return
            forbidden = set()
            for prev in range(i - 1):
                column = columns[prev]
                if j < len(column):
                    forbidden.add(column[j])
                if j + 1 < len(column):
                    forbidden.add(column[j + 1])
            if j == 1:
                # (i, 1) attacks the fixed basement (i', 0) of every later column
                forbidden.update(range(i + 1, n + 1))
            for value in range(1, n + 1):
                if value not in forbidden:
                    current.append(value)
                    yield from cells(j + 1, current)
                    current.pop()

        yield from cells(1, [i])

    yield from fill([], 1)


def descent_ascent(sigma: Filling) -> tuple[set, set]:
    """The descent and ascent square sets of a filling.

    A diagram square (i, j) is a descent when sigma_{i,j} > sigma_{i,j-1}
    and an ascent when sigma_{i,j} < sigma_{i,j-1}.
    """
    descents, ascents = set(), set()
    for i in range(1, sigma.mu.n + 1):
        for j in range(1, sigma.mu.part(i) + 1):
            here, below = sigma.entry(i, j), sigma.entry(i, j - 1)
            if here > below:
                descents.add((i, j))
            elif here < below:
                ascents.add((i, j))
    return descents, ascents


def ordered_triples(sigma: Filling) -> tuple[int, int]:
    """Counts (positive, negative) of ordered triples.

    A triple consists of squares (i, j) in dg(mu), (i', j-1) in the
    extended diagram and (i', j), for i < i'; the entry sigma_{i',j} is
    taken to be +infinity when (i', j) lies outside dg(mu).
    """
    mu = sigma.mu
    plus = minus = 0
    for i in range(1, mu.n + 1):
        for i2 in range(i + 1, mu.n + 1):
            for j in range(1, mu.part(i) + 1):
                if j - 1 > mu.part(i2):
                    continue
                mid = sigma.entry(i, j)
                low = sigma.entry(i2, j - 1)
                high = sigma.entry(i2, j) if j <= mu.part(i2) else INFINITY
                if high > mid > low:
                    plus += 1
                elif high < mid < low:
                    minus += 1
    return plus, minus


def triple_delta(sigma: Filling) -> int:
    """Delta(sigma) = ord_+ - ord_-, the exponent of the global t factor."""
    plus, minus = ordered_triples(sigma)
    return plus - minus


def hhl_summand(sigma: Filling) -> XPolynomial:
    """The weight of one non-attacking filling in the combinatorial sum."""
    mu = sigma.mu
    one = QTRational.one()
    t = QTRational.t()
    descents, ascents = descent_ascent(sigma)
    coeff = QTRational.monomial(0, triple_delta(sigma))
    for s in descents:
        la, aa = leg(mu, s), arm(mu, s)
        coeff = coeff * (one - t) / (one - QTRational.monomial(la + 1, aa + 1))
    for s in ascents:
        la, aa = leg(mu, s), arm(mu, s)
        coeff = (
            coeff
            * QTRational.monomial(la + 1, aa)
            * (one - t)
            / (one - QTRational.monomial(la + 1, aa + 1))
        )
    return XPolynomial(mu.n, {sigma.x_monomial(): coeff})


def f_hhl(mu: Composition) -> XPolynomial:
    """The nonsymmetric Macdonald polynomial via the combinatorial sum."""
    total = XPolynomial.zero(mu.n)
    for sigma in enumerate_fillings(mu):
        total = total + hhl_summand(sigma)
    return total


# ---------------------------------------------------------------------------
# The bijection between lattice configurations and fillings.
# ---------------------------------------------------------------------------


def bijection_M(xi: LatticeConfig, mu: Composition) -> Filling:
    """Map a mu-legal configuration to its filling: column a of the
    filling lists the rows visited by the colour-a path."""
    if not xi.is_legal(mu):
        raise ValueError(f"configuration {xi.columns} is not {mu}-legal")
    columns = []
    for a in range(1, mu.n + 1):
        columns.append(tuple(xi.row_of(a, j) for j in range(mu.part(a) + 1)))
    return Filling(mu, tuple(columns))


def bijection_M_inverse(sigma: Filling) -> LatticeConfig:
    """The unique configuration mapping to sigma: k^{(j)}_{sigma_{a,j}} = a."""
    mu = sigma.mu
    n = mu.n
    columns = []
    for j in range(mu.maxpart + 1):
        column = [0] * n
        for a in range(1, n + 1):
            if j <= mu.part(a):
                row = sigma.entry(a, j)
                if column[row - 1]:
                    raise ValueError(
                        f"two colours land on row {row} of lattice column {j}"
                    )
                column[row - 1] = a
        columns.append(tuple(column))
    return LatticeConfig(tuple(columns))


def weight_match_check(mu: Composition) -> CheckReport:
    """Verify config_weight(xi) = hhl_summand(M(xi)) for every configuration,
    together with the factor-group identities the matching decomposes into:

      x factors        prod x_{sigma_{p,j+1}}          = x^sigma
      normalisation    Omega_mu * prod 1/(1 - v t^f)   = 1
      row changes      prod (1-t)/(1 - v t^{f+1})      = descent/ascent denominators
      upward moves     prod t^g * prod t^h (upward)    = t^{ord_+}
      downward moves   prod v t^h (downward)           = t^{-ord_-} * ascent numerators
    """
    report = CheckReport(f"weight-match mu={mu}")
    one = QTRational.one()
    t = QTRational.t()
    for xi in enumerate_configs(mu):
        sigma = bijection_M(xi, mu)
        parts = config_weight_parts(xi, mu)
        report.count()
        if parts.x_exponents != sigma.x_monomial():
            report.fail(f"x factors differ on {xi.columns}")
        report.count()
        if not (omega_norm(mu) * parts.phi).is_one():
            report.fail(f"Omega cancellation fails on {xi.columns}")
        descents, ascents = descent_ascent(sigma)
        denom = one
        for s in descents | ascents:
            la, aa = leg(mu, s), arm(mu, s)
            denom = denom * (one - t) / (one - QTRational.monomial(la + 1, aa + 1))
        report.count()
        if parts.move_denominators != denom:
            report.fail(f"descent/ascent denominators differ on {xi.columns}")
        plus, minus = ordered_triples(sigma)
        report.count()
        if parts.t_g * parts.up_t_h != QTRational.monomial(0, plus):
            report.fail(f"t^ord_+ mismatch on {xi.columns}")
        ascent_numerator = QTRational.monomial(0, -minus)
        for s in ascents:
            ascent_numerator = ascent_numerator * QTRational.monomial(
                leg(mu, s) + 1, arm(mu, s)
            )
        report.count()
        if parts.down_v_t_h != ascent_numerator:
            report.fail(f"downward-move factor mismatch on {xi.columns}")
        report.count()
        if config_weight(xi, mu) != hhl_summand(sigma):
            report.fail(f"total weights differ on {xi.columns}")
    return report
