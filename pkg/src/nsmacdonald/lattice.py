"""The rank-n lattice model: face weights, Yang-Baxter, row operators.

Colours live in {0,..,n} with 0 meaning "no path".  A face carries an
occupation vector on its bottom and top edges (how many paths of each
colour pass vertically) and a single colour on its left and right edges.
Weights are zero unless colour is conserved: bottom + e_left = top +
e_right, with e_0 = 0.

The nonzero face weights (I the bottom vector, i < j colours >= 1,
I[a..b] the partial sum I_a + .. + I_b):

  (I, 0; I, 0)             1
  (I, i; I, i)             x t^{I[i+1..n]}
  (I, 0; I - e_i, i)       x (1 - t^{I_i}) t^{I[i+1..n]}
  (I, i; I + e_i, 0)       1
  (I, i; I + e_i - e_j, j) x (1 - t^{I_j}) t^{I[j+1..n]}
  (I, j; I + e_j - e_i, i) 0

The x dependence is structural: a face contributes one factor of x exactly
when its right edge carries a colour >= 1, so weights are returned as a
coefficient plus an x-degree flag rather than as polynomials.

The fundamental R-matrix R_z(i, j; k, l) (bottom, left; top, right) is
  R_z(i,i;i,i) = 1   and, for i < j,
  R_z(j,i;j,i) = t(1-z)/(1-tz)      R_z(i,j;i,j) = (1-z)/(1-tz)
  R_z(j,i;i,j) = (1-t)/(1-tz)       R_z(i,j;j,i) = (1-t)z/(1-tz),
all other patterns vanishing.  Together they satisfy the RLL relation
(Yang-Baxter equation), which ``ybe_check`` certifies at exact rational
sample points and ``ybe_check_symbolic`` certifies as a polynomial
identity in (x, y) over Q(t) after clearing the 1 - t y/x denominators.

Weight functions are generic over the coefficient field: pass Fraction
values for fast exact evaluation at sample points, or QTRational for
fully symbolic work.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .qt import QTRational
from .reports import CheckReport
from .xpoly import XPolynomial

__all__ = [
    "StructuredWeight",
    "l_weight",
    "r_weight",
    "ybe_check",
    "ybe_check_symbolic",
    "row_operator_elem",
    "row_operator_expand",
    "exchange_check",
    "capped_states",
]

Occupation = tuple[int, ...]
State = tuple[Occupation, ...]


@dataclass(frozen=True)
class StructuredWeight:
    """A face weight split as coefficient * x^xdeg, with xdeg in {0, 1}."""

    coeff: object
    xdeg: int

    def is_zero(self) -> bool:
        return _is_zero(self.coeff)


def _is_zero(value) -> bool:
    if isinstance(value, QTRational):
        return value.is_zero()
    return value == 0


def l_weight(I: Sequence[int], j: int, K: Sequence[int], l: int, t=None) -> StructuredWeight:
    """The face weight L(I, j; K, l) over the coefficient ring of ``t``.

    ``t`` defaults to the symbolic QTRational t; pass a Fraction for
    numeric work.  Conservation violations and the forbidden
    colour-crossing pattern return weight zero.
    """
    if t is None:
        t = QTRational.t()
    n = len(I)
    if len(K) != n:
        raise ValueError("occupation vectors of different rank")
    if min(I) < 0 or min(K) < 0 or not 0 <= j <= n or not 0 <= l <= n:
        raise ValueError("malformed face labels")
    one = t**0
    zero = one - one
    # conservation: I + e_j = K + e_l
    diff = list(K)
    if j:
        diff[j - 1] -= 1
    if l:
        diff[l - 1] += 1
    if tuple(diff) != tuple(I):
        return StructuredWeight(zero, 0)
    if j == 0 and l == 0:
        return StructuredWeight(one, 0)
    if j == l:
        return StructuredWeight(t ** _suffix(I, j), 1)
    if j == 0:  # path of colour l peels off downwards: I -> I - e_l
        return StructuredWeight((one - t ** I[l - 1]) * t ** _suffix(I, l), 1)
    if l == 0:  # path of colour j joins upwards: I -> I + e_j
        return StructuredWeight(one, 0)
    if j < l:
        return StructuredWeight((one - t ** I[l - 1]) * t ** _suffix(I, l), 1)
    return StructuredWeight(zero, 1)  # j > l >= 1 is the forbidden crossing


def _suffix(I: Sequence[int], colour: int) -> int:
    return sum(I[colour:])


def r_weight(i: int, j: int, k: int, l: int, z, t):
    """R_z(i, j; k, l) with bottom i, left j, top k, right l.

    ``z`` and ``t`` must live in the same coefficient field (Fractions or
    QTRationals).  Raises ZeroDivisionError at the pole 1 - t z = 0.
    """
    one = t**0
    if i == j == k == l:
        return one
    zero = one - one
    if i == k and j == l and i != j:
        denom = one - t * z
        if _is_zero(denom):
            raise ZeroDivisionError("R-matrix pole: 1 - t z = 0")
        if j < i:  # R(j', i'; j', i') pattern with i' < j': here bottom > left
            return t * (one - z) / denom
        return (one - z) / denom
    if i == l and j == k and i != j:
        denom = one - t * z
        if _is_zero(denom):
            raise ZeroDivisionError("R-matrix pole: 1 - t z = 0")
        if j < i:  # bottom i larger: R(j', i'; i', j') with i' < j'
            return (one - t) / denom
        return (one - t) * z / denom
    return zero


# ---------------------------------------------------------------------------
# Yang-Baxter (RLL) verification.
# ---------------------------------------------------------------------------


def _vec_add(v: Occupation | None, colour: int, delta: int) -> Occupation | None:
    if v is None:
        return None
    if colour == 0:
        return v
    out = list(v)
    out[colour - 1] += delta
    if out[colour - 1] < 0:
        return None
    return tuple(out)


def _rll_sides(I, J, i1, i2, j1, j2, x, y, t, lw) -> tuple[object, object]:
    """Both sides of the RLL relation, evaluated in the field of x, y, t."""
    n = len(I)
    one = t**0
    z = y / x
    lhs = one - one
    rhs = one - one
    for k1 in range(n + 1):
        for k2 in range(n + 1):
            r = r_weight(i2, i1, k2, k1, z, t)
            if not _is_zero(r):
                K = _vec_add(_vec_add(I, k1, +1), j1, -1)
                if K is not None:
                    w1 = lw(I, k1, K, j1, t)
                    if not w1.is_zero():
                        w2 = lw(K, k2, J, j2, t)
                        if not w2.is_zero():
                            lhs = lhs + r * w1.coeff * x**w1.xdeg * w2.coeff * y**w2.xdeg
            r = r_weight(k2, k1, j2, j1, z, t)
            if not _is_zero(r):
                K = _vec_add(_vec_add(I, i2, +1), k2, -1)
                if K is not None:
                    w1 = lw(I, i2, K, k2, t)
                    if not w1.is_zero():
                        w2 = lw(K, i1, J, k1, t)
                        if not w2.is_zero():
                            rhs = rhs + w1.coeff * y**w1.xdeg * w2.coeff * x**w2.xdeg * r
    return lhs, rhs


def _occupations(n: int, cap: int) -> list[Occupation]:
    return [tuple(v) for v in itertools.product(range(cap + 1), repeat=n)]


DEFAULT_SAMPLE_POINTS = [
    (Fraction(2), Fraction(3), Fraction(5)),
    (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)),
    (Fraction(-2), Fraction(3, 2), Fraction(7)),
    (Fraction(5), Fraction(-1, 3), Fraction(2, 3)),
    (Fraction(3, 7), Fraction(11, 2), Fraction(-4)),
]


def ybe_check(
    n: int,
    occupation_cap: int = 2,
    sample_points: Sequence[tuple[Fraction, Fraction, Fraction]] | None = None,
    l_weight_fn: Callable | None = None,
    nonconserving_samples: int = 200,
    seed: int = 0,
) -> CheckReport:
    """Certify the RLL relation at exact rational sample points.

    Runs over every boundary (i1, i2, j1, j2, I, J with entries <= cap)
    compatible with colour conservation; any nonzero term on either side
    forces I + e_{i1} + e_{i2} = J + e_{j1} + e_{j2}, so non-conserving
    boundaries hold trivially (a random sample of them is evaluated as
    well, as insurance that the implementation agrees).  Sample points at
    the pole 1 - t y/x = 0 are reported and skipped.
    """
    points = list(sample_points) if sample_points is not None else DEFAULT_SAMPLE_POINTS
    lw = l_weight_fn or l_weight
    report = CheckReport(f"ybe n={n} cap={occupation_cap}")
    colours = range(n + 1)
    occupations = _occupations(n, occupation_cap)
    usable = []
    for x, y, t in points:
        if x == 0 or 1 - t * y / x == 0:
            report.note(f"pole at sample point (x={x}, y={y}, t={t}); skipped")
        else:
            usable.append((x, y, t))
    boundaries = []
    for I in occupations:
        for i1, i2, j1, j2 in itertools.product(colours, repeat=4):
            J = _vec_add(_vec_add(_vec_add(_vec_add(I, i1, +1), i2, +1), j1, -1), j2, -1)
            if J is not None and max(J, default=0) <= occupation_cap:
                boundaries.append((I, J, i1, i2, j1, j2))
    for I, J, i1, i2, j1, j2 in boundaries:
        for x, y, t in usable:
            lhs, rhs = _rll_sides(I, J, i1, i2, j1, j2, x, y, t, lw)
            report.count()
            if lhs != rhs:
                report.fail(
                    f"RLL mismatch at I={I} J={J} colours=({i1},{i2};{j1},{j2}) "
                    f"point (x={x}, y={y}, t={t}): {lhs} != {rhs}"
                )
    rng = random.Random(seed)
    checked_nonconserving = 0
    attempts = 0
    while checked_nonconserving < nonconserving_samples and attempts < 50 * nonconserving_samples:
        attempts += 1
        I = rng.choice(occupations)
        J = rng.choice(occupations)
        i1, i2, j1, j2 = (rng.randrange(n + 1) for _ in range(4))
        target = _vec_add(_vec_add(I, i1, +1), i2, +1)
        other = _vec_add(_vec_add(J, j1, +1), j2, +1)
        if target == other:
            continue
        x, y, t = usable[checked_nonconserving % len(usable)]
        lhs, rhs = _rll_sides(I, J, i1, i2, j1, j2, x, y, t, lw)
        report.count()
        checked_nonconserving += 1
        if lhs != 0 or rhs != 0:
            report.fail(
                f"non-conserving boundary I={I} J={J} colours=({i1},{i2};{j1},{j2}) "
                f"gave nonzero side"
            )
    report.note(
        f"{len(boundaries)} conserving boundaries x {len(usable)} points; "
        f"{checked_nonconserving} random non-conserving boundaries spot-checked"
    )
    return report


def _rhat_xy(i: int, j: int, k: int, l: int) -> XPolynomial:
    """(x - t y) R_{y/x}(i, j; k, l) as a polynomial in (x, y) over Q(q,t)."""
    one, t = QTRational.one(), QTRational.t()
    x = XPolynomial.variable(2, 1)
    y = XPolynomial.variable(2, 2)
    if i == j == k == l:
        return x - y.scale(t)
    if i == k and j == l and i != j:
        return (x - y).scale(t) if j < i else x - y
    if i == l and j == k and i != j:
        return x.scale(one - t) if j < i else y.scale(one - t)
    return XPolynomial.zero(2)


def ybe_check_symbolic(n: int = 1, occupation_cap: int = 2) -> CheckReport:
    """Certify RLL fully symbolically as polynomials in (x, y) over Q(t).

    Both sides are multiplied by (x - t y), which clears every R-matrix
    denominator; the L weights contribute monomials in x or y.  Intended
    for n = 1 (the sweep over larger n uses sample points).
    """
    report = CheckReport(f"ybe-symbolic n={n} cap={occupation_cap}")
    t = QTRational.t()
    x = XPolynomial.variable(2, 1)
    y = XPolynomial.variable(2, 2)
    colours = range(n + 1)
    for I in _occupations(n, occupation_cap):
        for i1, i2, j1, j2 in itertools.product(colours, repeat=4):
            J = _vec_add(_vec_add(_vec_add(_vec_add(I, i1, +1), i2, +1), j1, -1), j2, -1)
            if J is None or max(J, default=0) > occupation_cap + 2:
                continue
            lhs = XPolynomial.zero(2)
            rhs = XPolynomial.zero(2)
            for k1 in colours:
                for k2 in colours:
                    rpoly = _rhat_xy(i2, i1, k2, k1)
                    if not rpoly.is_zero():
                        K = _vec_add(_vec_add(I, k1, +1), j1, -1)
                        if K is not None:
                            w1 = l_weight(I, k1, K, j1, t)
                            w2 = l_weight(K, k2, J, j2, t)
                            if not (w1.is_zero() or w2.is_zero()):
                                mono = (x**w1.xdeg) * (y**w2.xdeg)
                                lhs = lhs + (rpoly * mono).scale(w1.coeff * w2.coeff)
                    rpoly = _rhat_xy(k2, k1, j2, j1)
                    if not rpoly.is_zero():
                        K = _vec_add(_vec_add(I, i2, +1), k2, -1)
                        if K is not None:
                            w1 = l_weight(I, i2, K, k2, t)
                            w2 = l_weight(K, i1, J, k1, t)
                            if not (w1.is_zero() or w2.is_zero()):
                                mono = (y**w1.xdeg) * (x**w2.xdeg)
                                rhs = rhs + (rpoly * mono).scale(w1.coeff * w2.coeff)
            report.count()
            if lhs != rhs:
                report.fail(
                    f"symbolic RLL mismatch at I={I} J={J} "
                    f"colours=({i1},{i2};{j1},{j2}): {lhs} != {rhs}"
                )
    return report


# ---------------------------------------------------------------------------
# Row operators.
# ---------------------------------------------------------------------------


def row_operator_expand(
    colour: int, top_state: State, t=None
) -> list[tuple[State, object, int]]:
    """Expand C_colour(x) applied to the ket carrying ``top_state``.

    The row operator maps the state on top of the row to states along its
    bottom; colour enters on the left and 0 exits on the right.  Returns
    triples (bottom_state, coefficient, x_degree); internal vertical edges
    are chosen face by face, and every returned element is nonzero.
    """
    if t is None:
        t = QTRational.t()
    n = len(top_state[0]) if top_state else 0
    if not 1 <= colour <= n:
        raise ValueError(f"row colour {colour} out of range 1..{n}")
    one = t**0
    results: list[tuple[State, object, int]] = []

    def walk(site: int, left: int, bottoms: list[Occupation], coeff, xdeg: int):
        if site == len(top_state):
            if left == 0:
                results.append((tuple(bottoms), coeff, xdeg))
            return
        top = top_state[site]
        for right in range(n + 1):
            # bottom + e_left = top + e_right, applied in one step so a
            # pass-through (left == right) never trips the >= 0 check
            vec = list(top)
            if left:
                vec[left - 1] -= 1
            if right:
                vec[right - 1] += 1
            if min(vec) < 0:
                continue
            bottom = tuple(vec)
            w = l_weight(bottom, left, top, right, t)
            if w.is_zero():
                continue
            bottoms.append(bottom)
            walk(site + 1, right, bottoms, coeff * w.coeff, xdeg + w.xdeg)
            bottoms.pop()

    walk(0, colour, [], one, 0)
    return results


def row_operator_elem(colour: int, in_state: State, out_state: State, t=None):
    """One row matrix element as (coeff, xdeg): paths enter along the
    bottom edge (``in_state``), colour enters on the left, and paths leave
    along the top edge (``out_state``), so the element vanishes unless
    out = in + e_colour as totals.

    The element is always a monomial in x: the internal vertical edges of
    the row are forced by conservation, so either the walk succeeds with a
    unique weight or the element is zero.
    """
    if t is None:
        t = QTRational.t()
    n = len(in_state[0]) if in_state else 0
    if len(in_state) != len(out_state):
        raise ValueError("state shapes differ")
    one = t**0
    zero = one - one
    left = colour
    coeff = one
    xdeg = 0
    for top, bottom in zip(out_state, in_state):
        # conservation fixes the right edge: bottom + e_left = top + e_right
        diff = [b - a for a, b in zip(top, bottom)]
        if left:
            diff[left - 1] += 1
        total = sum(diff)
        if total == 0 and all(d == 0 for d in diff):
            right = 0
        elif total == 1 and diff.count(1) == 1 and diff.count(0) == n - 1:
            right = diff.index(1) + 1
        else:
            return zero, 0
        w = l_weight(bottom, left, top, right, t)
        if w.is_zero():
            return zero, 0
        coeff = coeff * w.coeff
        xdeg += w.xdeg
        left = right
    if left != 0:
        return zero, 0
    return coeff, xdeg


def row_operator_elem_poly(colour: int, in_state: State, out_state: State) -> XPolynomial:
    """The same matrix element as a polynomial in the single symbol x."""
    coeff, xdeg = row_operator_elem(colour, in_state, out_state)
    return XPolynomial(1, {(xdeg,): coeff})


def capped_states(n: int, nsites: int, cap: int) -> list[State]:
    """All states of nsites occupation vectors with entries <= cap."""
    site_choices = _occupations(n, cap)
    return [tuple(combo) for combo in itertools.product(site_choices, repeat=nsites)]


def _product_elems(
    left: tuple[int, int], right: tuple[int, int], in_state: State
) -> dict[State, XPolynomial]:
    """Matrix elements of C_left C_right applied to |in_state>.

    ``left`` and ``right`` are (colour, variable) pairs with variable 1
    for x and 2 for y; the right operator acts first.  Returns a map from
    out states to polynomials in (x, y) over Q(q,t).
    """
    t = QTRational.t()
    out: dict[State, XPolynomial] = {}
    for mid, coeff_r, deg_r in row_operator_expand(right[0], in_state, t):
        for final, coeff_l, deg_l in row_operator_expand(left[0], mid, t):
            exps = [0, 0]
            exps[left[1] - 1] += deg_l
            exps[right[1] - 1] += deg_r
            term = XPolynomial(2, {tuple(exps): coeff_l * coeff_r})
            cur = out.get(final)
            out[final] = term if cur is None else cur + term
    return {state: poly for state, poly in out.items() if not poly.is_zero()}


def exchange_check(i: int, j: int, n: int, N: int = 1, cap: int = 1) -> CheckReport:
    """Certify the row-operator exchange relation for colours (i, j).

    The applicable relation (commutation for i = j, the t-twisted
    relations otherwise) is verified component-wise between all capped
    in-states and every reachable out-state, as an exact identity of
    polynomials in (x, y) over Q(t) after clearing the x - y denominator.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("colours out of range")
    report = CheckReport(f"exchange i={i} j={j} n={n} N={N} cap={cap}")
    one, t = QTRational.one(), QTRational.t()
    x = XPolynomial.variable(2, 1)
    y = XPolynomial.variable(2, 2)
    x_minus_y = x - y
    x_minus_ty = x - y.scale(t)
    for in_state in capped_states(n, N + 1, cap):
        a = _product_elems((i, 1), (j, 2), in_state)  # C_i(x) C_j(y)
        b = _product_elems((j, 2), (i, 1), in_state)  # C_j(y) C_i(x)
        c = _product_elems((j, 1), (i, 2), in_state)  # C_j(x) C_i(y)
        outs = set(a) | set(b) | set(c)
        for out in sorted(outs):
            ea = a.get(out, XPolynomial.zero(2))
            eb = b.get(out, XPolynomial.zero(2))
            ec = c.get(out, XPolynomial.zero(2))
            if i == j:
                lhs = ea
                rhs = eb
            elif i < j:
                lhs = (ea * x_minus_y).scale(t)
                rhs = eb * x_minus_ty - (ec * x).scale(one - t)
            else:
                lhs = ea * x_minus_y
                rhs = eb * x_minus_ty - (ec * y).scale(one - t)
            report.count()
            if lhs != rhs:
                report.fail(
                    f"exchange mismatch for in={in_state} out={out}: {lhs} != {rhs}"
                )
    return report
