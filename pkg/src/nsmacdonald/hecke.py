"""The polynomial representation of the affine Hecke algebra.

Generators act on XPolynomial via the divided difference
delta_i(p) = (p - s_i p)/(x_i - x_{i+1}):

  T_i p       = t p - (x_i - t x_{i+1}) delta_i(p)
  T_i^{-1} p  = t^{-1} (p - (x_i - t x_{i+1}) delta_i(p))
  omega p     = p(x_2,..,x_n, q x_1)

and the Cherednik-Dunkl operators are the words

  Y_i = T_{i-1} .. T_1 . omega . T_{n-1}^{-1} .. T_i^{-1},

composed right to left (T_i^{-1} acts first).  Their joint eigenfunctions
are the nonsymmetric Macdonald polynomials; the eigenvalue of Y_i on the
eigenfunction labelled by mu is eigenvalue_y(mu, i).

The operators act directly on polynomials rather than through matrices:
the spaces involved are small but their monomial bases vary, and the
direct action avoids any basis bookkeeping.

Tilde variants (the reversed-alphabet conventions) are included so the
reversal identity Y_{n-i+1} = rev . Ytilde_i . rev can be verified, where
rev evaluates a polynomial on the reversed alphabet.
"""

from __future__ import annotations

import random
from typing import Callable

from .compositions import Composition, eigenvalue_y
from .qt import QTRational
from .reports import CheckReport
from .xpoly import (
    XPolynomial,
    compose_vars,
    cyclic_omega,
    divided_difference_div,
    reverse_alphabet,
    swap_vars,
)

__all__ = [
    "apply_T",
    "apply_Y",
    "apply_T_tilde",
    "apply_Y_tilde",
    "verify_hecke_relations",
    "verify_eigen",
    "random_polynomial",
]


def _hecke_core(p: XPolynomial, i: int, coeff_lo: QTRational) -> XPolynomial:
    # (x_i - t x_{i+1}) delta_i(p), shared by T_i and T_i^{-1}
    n = p.nvars
    delta = divided_difference_div(p, i)
    factor = XPolynomial.variable(n, i) - XPolynomial.variable(n, i + 1).scale(
        coeff_lo
    )
    return factor * delta


def apply_T(p: XPolynomial, i: int, inverse: bool = False) -> XPolynomial:
    """Act with the Hecke generator T_i (or T_i^{-1}) on p."""
    if not 1 <= i <= p.nvars - 1:
        raise IndexError(f"generator index {i} out of range 1..{p.nvars - 1}")
    t = QTRational.t()
    core = _hecke_core(p, i, t)
    if inverse:
        return (p - core).scale(t.inverse())
    return p.scale(t) - core


def apply_Y(p: XPolynomial, i: int) -> XPolynomial:
    """Act with the Cherednik-Dunkl operator Y_i on p."""
    n = p.nvars
    if not 1 <= i <= n:
        raise IndexError(f"operator index {i} out of range 1..{n}")
    out = p
    for k in range(i, n):
        out = apply_T(out, k, inverse=True)
    out = cyclic_omega(out)
    for k in range(1, i):
        out = apply_T(out, k)
    return out


# -- reversed-alphabet (tilde) conventions -----------------------------------


def apply_T_tilde(p: XPolynomial, i: int, inverse: bool = False) -> XPolynomial:
    """The tilde Hecke generator: t p - (t x_i - x_{i+1}) delta_i(p)."""
    if not 1 <= i <= p.nvars - 1:
        raise IndexError(f"generator index {i} out of range 1..{p.nvars - 1}")
    t = QTRational.t()
    n = p.nvars
    delta = divided_difference_div(p, i)
    factor = XPolynomial.variable(n, i).scale(t) - XPolynomial.variable(n, i + 1)
    core = factor * delta
    if inverse:
        return (p - core).scale(t.inverse())
    return p.scale(t) - core


def omega_tilde(p: XPolynomial) -> XPolynomial:
    """(omega~ h)(x_1,..,x_n) = h(q x_n, x_1,..,x_{n-1})."""
    n = p.nvars
    one = QTRational.one()
    images = [(n, QTRational.q())] + [(k, one) for k in range(1, n)]
    return compose_vars(p, images)


def apply_Y_tilde(p: XPolynomial, i: int) -> XPolynomial:
    """Y~_i = T~_i .. T~_{n-1} . omega~ . T~_1^{-1} .. T~_{i-1}^{-1}."""
    n = p.nvars
    if not 1 <= i <= n:
        raise IndexError(f"operator index {i} out of range 1..{n}")
    out = p
    for k in range(i - 1, 0, -1):
        out = apply_T_tilde(out, k, inverse=True)
    out = omega_tilde(out)
    for k in range(n - 1, i - 1, -1):
        out = apply_T_tilde(out, k)
    return out


# -- randomized relation suites ------------------------------------------------


def random_polynomial(
    nvars: int, rng: random.Random, max_deg: int = 2, nterms: int = 4
) -> XPolynomial:
    """A random sparse polynomial with small monomial q,t coefficients."""
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        coeff = QTRational.monomial(
            rng.randint(0, 2), rng.randint(0, 2), rng.randint(-4, 4)
        )
        if not coeff.is_zero():
            terms[exps] = coeff
    poly = XPolynomial(nvars, terms)
    if poly.is_zero():
        return XPolynomial.one(nvars)
    return poly


def verify_hecke_relations(n: int, samples: int = 5, seed: int = 0) -> CheckReport:
    """Certify the defining relations on random polynomials, exactly.

    Checks, for each sampled p with coefficients kept symbolic in Q(q,t):
    the quadratic relation (T_i - t)(T_i + 1) p = 0, the braid relation,
    commutation of distant generators, and [Y_i, Y_j] p = 0.  Violations
    are recorded with the witness polynomial.
    """
    if n < 2:
        raise ValueError("need at least two variables")
    report = CheckReport(f"hecke-relations n={n}")
    rng = random.Random(seed)
    t = QTRational.t()
    for _ in range(samples):
        p = random_polynomial(n, rng)
        for i in range(1, n):
            tp = apply_T(p, i)
            quad = apply_T(tp, i) + tp - tp.scale(t) - p.scale(t)
            report.count()
            if not quad.is_zero():
                report.fail(f"(T_{i}-t)(T_{i}+1) != 0 on witness {p}")
            report.count()
            if apply_T(apply_T(p, i), i, inverse=True) != p:
                report.fail(f"T_{i}^-1 T_{i} != id on witness {p}")
        for i in range(1, n - 1):
            lhs = apply_T(apply_T(apply_T(p, i), i + 1), i)
            rhs = apply_T(apply_T(apply_T(p, i + 1), i), i + 1)
            report.count()
            if lhs != rhs:
                report.fail(f"braid relation fails at i={i} on witness {p}")
        for i in range(1, n):
            for j in range(i + 2, n):
                report.count()
                if apply_T(apply_T(p, j), i) != apply_T(apply_T(p, i), j):
                    report.fail(f"[T_{i},T_{j}] != 0 on witness {p}")
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                report.count()
                if apply_Y(apply_Y(p, j), i) != apply_Y(apply_Y(p, i), j):
                    report.fail(f"[Y_{i},Y_{j}] != 0 on witness {p}")
    return report


def verify_eigen(f: XPolynomial, mu: Composition) -> CheckReport:
    """Check Y_i f = y_i(mu) f exactly for every i.

    Per-operator failures report the first differing coefficient in graded
    lex order.
    """
    if f.nvars != mu.n:
        raise ValueError(f"alphabet size {f.nvars} does not match {mu}")
    report = CheckReport(f"eigen mu={mu}")
    for i in range(1, mu.n + 1):
        diff = apply_Y(f, i) - f.scale(eigenvalue_y(mu, i))
        report.count()
        if not diff.is_zero():
            exps, coeff = diff.leading_term()
            report.fail(
                f"Y_{i} f != y_{i} f; first differing coefficient at "
                f"x^{exps}: {coeff}"
            )
    return report


def reversal_identity_holds(p: XPolynomial, i: int) -> bool:
    """Whether Y_{n-i+1} p equals the tilde action through the reversed
    alphabet, rev(Y~_i(rev p))."""
    n = p.nvars
    lhs = apply_Y(p, n - i + 1)
    rhs = reverse_alphabet(apply_Y_tilde(reverse_alphabet(p), i))
    return lhs == rhs
