"""Matrix-product evaluation of nonsymmetric Macdonald polynomials.

The cylinder partition function with twist parameters v_ij factorises over
lattice columns.  One column with left edge colours I = (i_1..i_n) (bottom
to top), right edge colours J = (j_1..j_n) and top exit set P has the
closed-form component

  prod_{p>l, p in PuQ, l in Q} 1(a_p != b_l)
  * prod_{p in P} t^{g(p)}
  * prod_{p in Q} x_{b_p}
  * prod_{p in PuQ} 1/(1 - v_p t^{f(p)})
  * prod_{p in Q, a_p != b_p} v_p^{1(a_p > b_p)} t^{h(p)} (1-t)
        / (1 - v_p t^{f(p)+1})

where P holds the colours entering left and exiting through the top, Q
those exiting right, a_p / b_p the rows where colour p crosses the left /
right edge, and

  f(p) = #{l in Q : l < p}
  g(p) = #{l in Q : l < p, a_p < b_l}
  h(p) = #{l in Q : l < p, b_l in (a_p, b_p)}   (cyclic interval).

The geometric series over cylinder wrap counts are already resummed into
the 1/(1 - v t^f) factors, so nothing is ever truncated.

A full lattice configuration xi records the colour on every vertical edge
(column j = 0..N, row i = 1..n); its weight is the product of its N+1
column components times the normalisation Omega_mu, and

  f_mu = sum over mu-legal configurations of weight(xi).

Permuted basements: f^rho is the same sum with colour rho_r entering row
r instead of colour r.  The module also provides the rotation constant
kappa, the per-configuration cyclic relation Z_l / Z_r = q^{mu_i}
t^{gamma_{i,0}}, the frozen-configuration normalisation, and the q = 0
Hall-Littlewood evaluation through a direct row-operator route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .compositions import Composition, gamma, omega_norm, v_param
from .lattice import row_operator_expand
from .qt import QTRational
from .reports import CheckReport
from .xpoly import XPolynomial, compose_vars
from . import xpoly as _xp

__all__ = [
    "LatticeConfig",
    "colour_data",
    "coordinates",
    "exponents_fgh",
    "column_component",
    "enumerate_configs",
    "config_weight",
    "config_weight_parts",
    "f_matrix_product",
    "hall_littlewood_q0",
    "kappa_ratio",
    "cyclic_check",
    "frozen_coefficient",
    "verify_exchange_basement",
    "verify_basement_cyclic",
]

RowVars = Sequence[tuple[int, QTRational]]


class InadmissiblePair(ValueError):
    """Column boundary vectors violating the admissibility condition."""


@dataclass(frozen=True)
class LatticeConfig:
    """A cylinder configuration: columns[j][i-1] is the colour on the
    vertical edge at lateral coordinate j, height i."""

    columns: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.columns[0])

    def row_of(self, colour: int, j: int) -> int:
        """The 1-based row occupied by ``colour`` in column j."""
        return self.columns[j].index(colour) + 1

    def is_legal(self, mu: Composition, basement: Sequence[int] | None = None) -> bool:
        """mu-legality: continuity/termination, basement, no down-crossings."""
        n = mu.n
        if len(self.columns) != mu.maxpart + 1 or self.n != n:
            return False
        base = tuple(basement) if basement is not None else tuple(range(1, n + 1))
        if self.columns[0] != base:
            return False
        for a in range(1, n + 1):
            for j, column in enumerate(self.columns):
                occupied = column.count(a)
                if occupied != (1 if j <= mu.part(a) else 0):
                    return False
        for j in range(len(self.columns) - 1):
            for i in range(n):
                here, there = self.columns[j][i], self.columns[j + 1][i]
                if here > there >= 1:
                    return False
        return True


# ---------------------------------------------------------------------------
# Colour data, coordinates and the closed-form column component.
# ---------------------------------------------------------------------------


def _multiplicities(vec: Sequence[int], n: int) -> list[int]:
    mult = [0] * (n + 1)
    for colour in vec:
        mult[colour] += 1
    return mult


def colour_data(I: Sequence[int], J: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """The sets (P, Q): colours entering left that exit top resp. right.

    Raises InadmissiblePair unless every colour >= 1 appears at most once
    in I and no more often in J than in I.
    """
    n = len(I)
    if len(J) != n:
        raise InadmissiblePair("boundary vectors of different length")
    mult_i = _multiplicities(I, n)
    mult_j = _multiplicities(J, n)
    for colour in range(1, n + 1):
        if not 1 >= mult_i[colour] >= mult_j[colour] >= 0:
            raise InadmissiblePair(
                f"colour {colour} has multiplicities {mult_i[colour]} -> {mult_j[colour]}"
            )
    P = frozenset(c for c in range(1, n + 1) if mult_i[c] == 1 and mult_j[c] == 0)
    Q = frozenset(c for c in range(1, n + 1) if mult_i[c] == 1 and mult_j[c] == 1)
    return P, Q


def coordinates(I: Sequence[int], J: Sequence[int]) -> tuple[dict[int, int], dict[int, int]]:
    """Rows where each colour crosses the boundaries: i_{a_p} = p, j_{b_p} = p."""
    P, Q = colour_data(I, J)
    a = {p: I.index(p) + 1 for p in P | Q}
    b = {p: J.index(p) + 1 for p in Q}
    return a, b


def _cyclic_interval(a: int, b: int, n: int) -> set[int]:
    if a < b:
        return set(range(a + 1, b))
    if a > b:
        return set(range(a + 1, n + 1)) | set(range(1, b))
    return set()


def exponents_fgh(
    P: frozenset[int],
    Q: frozenset[int],
    a: dict[int, int],
    b: dict[int, int],
    n: int,
) -> tuple[dict[int, int], dict[int, int], dict[int, int]]:
    """The combinatorial exponents f, g, h of a column boundary."""
    qs = sorted(Q)
    f = {p: sum(1 for l in qs if l < p) for p in P | Q}
    g = {p: sum(1 for l in qs if l < p and a[p] < b[l]) for p in P | Q}
    h = {
        p: sum(1 for l in qs if l < p and b[l] in _cyclic_interval(a[p], b[p], n))
        for p in Q
    }
    return f, g, h


def column_component(
    I: Sequence[int],
    J: Sequence[int],
    v: dict[int, QTRational],
    row_vars: RowVars | None = None,
    nvars: int | None = None,
) -> XPolynomial:
    """The closed-form column operator component for boundary (I, J).

    ``v`` maps colours to twist parameters; any colour outside P u Q must
    map to zero (hypothesis of the closed form).  ``row_vars[r-1] =
    (variable, scalar)`` is the spectral variable carried by physical row
    r, defaulting to x_r with scalar 1.  The result is a single monomial
    in the x alphabet with a Q(q,t) coefficient.
    """
    n = len(I)
    nvars = nvars or n
    P, Q = colour_data(I, J)
    zero = QTRational.zero()
    for colour in range(1, n + 1):
        if colour not in P and colour not in Q:
            if not v.get(colour, zero).is_zero():
                raise ValueError(
                    f"nonzero twist parameter for colour {colour} outside P u Q"
                )
    a, b = coordinates(I, J)
    for p in sorted(P | Q):
        for l in sorted(Q):
            if p > l and a[p] == b[l]:
                return XPolynomial.zero(nvars)
    f, g, h = exponents_fgh(P, Q, a, b, n)
    one = QTRational.one()
    t = QTRational.t()
    coeff = one
    for p in P:
        coeff = coeff * t ** g[p]
    for p in sorted(P | Q):
        coeff = coeff / (one - v[p] * t ** f[p])
    exps = [0] * nvars
    for p in Q:
        row = b[p]
        if row_vars is None:
            exps[row - 1] += 1
        else:
            var, scalar = row_vars[row - 1]
            exps[var - 1] += 1
            coeff = coeff * scalar
        if a[p] != b[p]:
            piece = t ** h[p] * (one - t) / (one - v[p] * t ** (f[p] + 1))
            if a[p] > b[p]:
                piece = piece * v[p]
            coeff = coeff * piece
    return XPolynomial(nvars, {tuple(exps): coeff})


# ---------------------------------------------------------------------------
# Configuration enumeration and weights.
# ---------------------------------------------------------------------------


def enumerate_configs(
    mu: Composition, basement: Sequence[int] | None = None
) -> Iterator[LatticeConfig]:
    """All mu-legal cylinder configurations, column by column.

    The search state is the injective placement of the still-active
    colours Q_j = {p : mu_p > j} into rows; moving from column j to j+1 a
    colour may only land on a row whose previous occupant is absent or of
    weakly smaller colour (the no-down-crossing rule).
    """
    n = mu.n
    base = tuple(basement) if basement is not None else tuple(range(1, n + 1))
    if sorted(base) != list(range(1, n + 1)):
        raise ValueError(f"basement {base} is not a permutation of 1..{n}")
    N = mu.maxpart

    def extend(columns: list[tuple[int, ...]], j: int) -> Iterator[LatticeConfig]:
        if j == N:
            yield LatticeConfig(tuple(columns))
            return
        survivors = sorted(p for p in range(1, n + 1) if mu.part(p) > j)
        previous = columns[-1]

        def place(idx: int, column: list[int]) -> Iterator[LatticeConfig]:
            if idx == len(survivors):
                columns.append(tuple(column))
                yield from extend(columns, j + 1)
                columns.pop()
                return
            colour = survivors[idx]
            for row in range(n):
                if column[row] == 0 and previous[row] <= colour:
                    column[row] = colour
                    yield from place(idx + 1, column)
                    column[row] = 0

        yield from place(0, [0] * n)

    yield from extend([base], 0)


def _column_boundaries(xi: LatticeConfig) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    empty = (0,) * xi.n
    for j, column in enumerate(xi.columns):
        nxt = xi.columns[j + 1] if j + 1 < len(xi.columns) else empty
        yield column, nxt


def config_weight(
    xi: LatticeConfig,
    mu: Composition,
    v_fn: Callable[[Composition, int, int], QTRational] | None = None,
) -> XPolynomial:
    """The weight of one configuration: Omega_mu times the product of its
    column components (a single monomial in x with Q(q,t) coefficient)."""
    vf = v_fn or v_param
    n = mu.n
    weight = XPolynomial.constant(n, omega_norm(mu))
    for j, (left, right) in enumerate(_column_boundaries(xi)):
        v = {p: vf(mu, p, j) for p in range(1, n + 1)}
        weight = weight * column_component(left, right, v)
    return weight


@dataclass(frozen=True)
class ConfigWeightParts:
    """The factors of a configuration weight, grouped as in the
    column-component formula (before multiplying by Omega_mu)."""

    x_exponents: tuple[int, ...]              # prod x_{b_p} over all columns
    t_g: QTRational                           # prod over P of t^{g(p)}
    phi: QTRational                           # prod 1/(1 - v t^f)
    move_denominators: QTRational             # prod (1-t)/(1 - v t^{f+1}), row changes
    up_t_h: QTRational                        # prod t^h over upward row changes
    down_v_t_h: QTRational                    # prod v t^h over downward row changes

    def total(self, mu: Composition) -> XPolynomial:
        coeff = (
            omega_norm(mu)
            * self.t_g
            * self.phi
            * self.move_denominators
            * self.up_t_h
            * self.down_v_t_h
        )
        return XPolynomial(mu.n, {self.x_exponents: coeff})


def config_weight_parts(xi: LatticeConfig, mu: Composition) -> ConfigWeightParts:
    """Factor breakdown of config_weight, for term-by-term weight matching."""
    n = mu.n
    one = QTRational.one()
    t = QTRational.t()
    t_g = phi = move = up = down = one
    exps = [0] * n
    for j, (left, right) in enumerate(_column_boundaries(xi)):
        P, Q = colour_data(left, right)
        a, b = coordinates(left, right)
        f, g, h = exponents_fgh(P, Q, a, b, n)
        v = {p: v_param(mu, p, j) for p in P | Q}
        for p in P:
            t_g = t_g * t ** g[p]
        for p in sorted(P | Q):
            phi = phi / (one - v[p] * t ** f[p])
        for p in Q:
            exps[b[p] - 1] += 1
            if a[p] != b[p]:
                move = move * (one - t) / (one - v[p] * t ** (f[p] + 1))
                if a[p] > b[p]:
                    down = down * v[p] * t ** h[p]
                else:
                    up = up * t ** h[p]
    return ConfigWeightParts(tuple(exps), t_g, phi, move, up, down)


def f_matrix_product(
    mu: Composition, rho: Sequence[int] | None = None
) -> XPolynomial:
    """The matrix-product polynomial f_mu (or permuted-basement f^rho_mu).

    Sums config_weight over all legal configurations with colour rho_r
    entering row r; rho defaults to the identity, giving the nonsymmetric
    Macdonald polynomial itself.
    """
    total = XPolynomial.zero(mu.n)
    for xi in enumerate_configs(mu, basement=rho):
        total = total + config_weight(xi, mu)
    return total


def hall_littlewood_q0(mu: Composition) -> XPolynomial:
    """The q = 0 polynomial <empty| C_1(x_1) .. C_n(x_n) |mu>.

    Evaluated directly by acting with the row operators on the composition
    state (no cylinder wrapping contributes at q = 0), which keeps the
    route independent of the column-component machinery.
    """
    n = mu.n
    N = mu.maxpart
    t = QTRational.t()
    start = tuple(
        tuple(1 if mu.part(i) == j else 0 for i in range(1, n + 1))
        for j in range(N + 1)
    )
    amplitudes: dict[tuple, XPolynomial] = {start: XPolynomial.one(n)}
    for colour in range(n, 0, -1):
        nxt: dict[tuple, XPolynomial] = {}
        xvar = XPolynomial.variable(n, colour)
        for state, amp in amplitudes.items():
            for out, coeff, xdeg in row_operator_expand(colour, state, t):
                term = amp.scale(coeff) * xvar**xdeg
                cur = nxt.get(out)
                nxt[out] = term if cur is None else cur + term
        amplitudes = {s: p for s, p in nxt.items() if not p.is_zero()}
    empty = tuple((0,) * n for _ in range(N + 1))
    return amplitudes.get(empty, XPolynomial.zero(n))


# ---------------------------------------------------------------------------
# Rotation constant and the cyclic relation.
# ---------------------------------------------------------------------------


def kappa_ratio(
    I: Sequence[int], J: Sequence[int], v: dict[int, QTRational]
) -> QTRational:
    """The constant relating a column component to its rotated version:

      kappa = t^{#{a in P : a > j_n} 1(j_n >= 1)}
            / t^{#{a in Q : a < i_n} 1(i_n in P)}
            * v_{i_n}^{1(i_n in Q)} / v_{j_n}^{1(j_n >= 1)}

    written in terms of the colour data and the top edge states i_n, j_n.
    """
    P, Q = colour_data(I, J)
    t = QTRational.t()
    i_top, j_top = I[-1], J[-1]
    result = QTRational.one()
    if j_top >= 1:
        result = result * t ** sum(1 for c in P if c > j_top)
        vj = v.get(j_top, QTRational.zero())
        if vj.is_zero():
            raise ZeroDivisionError(
                f"rotation constant undefined: v_{j_top} = 0 with j_n = {j_top} >= 1"
            )
        result = result / vj
    if i_top in P:
        result = result / t ** sum(1 for c in Q if c < i_top)
    if i_top in Q:
        result = result * v[i_top]
    return result


def _cyclic_partition_functions(
    xi: LatticeConfig,
    mu: Composition,
    i: int,
    v_fn: Callable[[Composition, int, int], QTRational] | None = None,
) -> tuple[XPolynomial, XPolynomial]:
    """The fixed-internal-state partition functions (Z_l, Z_r) for colour i.

    Z_l places the colour-i row on top with spectral variable q x_i; Z_r
    places it at the bottom with variable x_i.  Both reuse the internal
    edge states of xi, whose rows are indexed by entering colour.
    """
    vf = v_fn or v_param
    n = mu.n
    one, q = QTRational.one(), QTRational.q()
    others = [c for c in range(1, n + 1) if c != i]
    order_l = others + [i]
    order_r = [i] + others
    vars_l: list[tuple[int, QTRational]] = [(c, one) for c in others] + [(i, q)]
    vars_r: list[tuple[int, QTRational]] = [(c, one) for c in order_r]

    def build(order: list[int], row_vars: RowVars) -> XPolynomial:
        weight = XPolynomial.one(n)
        empty = (0,) * n
        for j, column in enumerate(xi.columns):
            nxt = xi.columns[j + 1] if j + 1 < len(xi.columns) else empty
            left = tuple(column[c - 1] for c in order)
            right = tuple(nxt[c - 1] for c in order)
            v = {p: vf(mu, p, j) for p in range(1, n + 1)}
            weight = weight * column_component(left, right, v, row_vars=row_vars)
        return weight

    return build(order_l, vars_l), build(order_r, vars_r)


def cyclic_check(
    mu: Composition,
    i: int,
    v_fn: Callable[[Composition, int, int], QTRational] | None = None,
) -> CheckReport:
    """Verify Z_l = q^{mu_i} t^{gamma_{i,0}} Z_r for every legal internal
    configuration (the refined, per-configuration cyclic relation)."""
    if not 1 <= i <= mu.n:
        raise IndexError(f"colour {i} out of range 1..{mu.n}")
    report = CheckReport(f"cyclic mu={mu} i={i}")
    ratio = QTRational.monomial(mu.part(i), gamma(mu, i, 0))
    for xi in enumerate_configs(mu):
        z_left, z_right = _cyclic_partition_functions(xi, mu, i, v_fn=v_fn)
        report.count()
        if z_right.is_zero():
            report.fail(f"Z_r vanishes on legal configuration {xi.columns}")
        elif z_left != z_right.scale(ratio):
            report.fail(
                f"Z_l/Z_r != q^mu_i t^gamma on configuration {xi.columns}: "
                f"{z_left} vs {ratio} * {z_right}"
            )
    return report


# ---------------------------------------------------------------------------
# Frozen-configuration normalisation.
# ---------------------------------------------------------------------------


def frozen_coefficient(mu: Composition) -> tuple[QTRational, QTRational]:
    """Coeff[x^mu] of the unnormalised matrix product, two ways.

    Route one evaluates the unique frozen configuration (each colour runs
    straight along its own row before exiting); route two is the closed
    product 1/Omega_mu.  Returns (from_configuration, from_omega); the two
    must agree.
    """
    n = mu.n
    frozen = LatticeConfig(
        tuple(
            tuple(i if mu.part(i) >= j else 0 for i in range(1, n + 1))
            for j in range(mu.maxpart + 1)
        )
    )
    weight = XPolynomial.one(n)
    for j, (left, right) in enumerate(_column_boundaries(frozen)):
        v = {p: v_param(mu, p, j) for p in range(1, n + 1)}
        weight = weight * column_component(left, right, v)
    from_config = weight.coefficient(tuple(mu.parts))
    from_omega = omega_norm(mu).inverse()
    return from_config, from_omega


# ---------------------------------------------------------------------------
# Basement exchange and cyclic shifts (permuted-basement identities).
# ---------------------------------------------------------------------------


def verify_exchange_basement(mu: Composition, i: int, rho: Sequence[int]) -> CheckReport:
    """Check T_i^{-1} f^rho = t^{-1} f^{s_i rho} for rho_i < rho_{i+1}."""
    from .hecke import apply_T

    rho = list(rho)
    if not 1 <= i <= mu.n - 1:
        raise IndexError(f"index {i} out of range 1..{mu.n - 1}")
    if not rho[i - 1] < rho[i]:
        raise ValueError(f"exchange requires rho_{i} < rho_{i + 1}, got {rho}")
    report = CheckReport(f"exchange-basement mu={mu} i={i} rho={rho}")
    swapped = list(rho)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    lhs = apply_T(f_matrix_product(mu, rho), i, inverse=True)
    rhs = f_matrix_product(mu, swapped).scale(QTRational.t().inverse())
    report.count()
    if lhs != rhs:
        report.fail(f"T_{i}^-1 f^{rho} != t^-1 f^{swapped}")
    return report


def verify_basement_cyclic(mu: Composition, rho: Sequence[int]) -> CheckReport:
    """Check f^rho(x_1,..,q x_n) = t^{n-2 rho_n+1} y_{rho_n} f^{w rho}(x_n,x_1,..)."""
    from .compositions import eigenvalue_y

    rho = list(rho)
    n = mu.n
    report = CheckReport(f"basement-cyclic mu={mu} rho={rho}")
    one, q = QTRational.one(), QTRational.q()
    lhs = compose_vars(
        f_matrix_product(mu, rho),
        [(k, one) for k in range(1, n)] + [(n, q)],
    )
    rotated = [rho[-1]] + rho[:-1]
    # evaluate f^{w rho} on the rotated alphabet (x_n, x_1, .., x_{n-1}):
    # argument slot 1 receives x_n, slot k >= 2 receives x_{k-1}
    images = [(n, one)] + [(k, one) for k in range(1, n)]
    rhs = compose_vars(f_matrix_product(mu, rotated), images)
    factor = QTRational.monomial(0, n - 2 * rho[-1] + 1) * eigenvalue_y(mu, rho[-1])
    report.count()
    if lhs != rhs.scale(factor):
        report.fail(f"cyclic basement shift fails for rho={rho}")
    return report
