"""Sparse polynomials in x_1..x_n over the field Q(q,t).

A polynomial is a dict mapping dense exponent vectors (one entry per
variable) to nonzero QTRational coefficients.  The alphabet size ``nvars``
is fixed per polynomial; mixing alphabets raises AlphabetMismatch.

Besides ring arithmetic, this module provides the variable manipulations
needed by the affine Hecke operators acting on polynomials:

  swap_vars          exchange x_i and x_{i+1}
  compose_vars       substitute each variable by a scalar multiple of a
                     (possibly different) variable; covers the cyclic shift
                     h(x_1,..,x_n) -> h(x_2,..,x_n, q x_1), alphabet
                     reversal, and q-dilations
  divided_difference_div
                     the exact quotient (p - s_i p)/(x_i - x_{i+1})

Values are immutable; operations are pure functions.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .qt import QTRational

__all__ = [
    "XPolynomial",
    "AlphabetMismatch",
    "swap_vars",
    "cyclic_omega",
    "compose_vars",
    "divided_difference_div",
    "coefficient_of",
]


class AlphabetMismatch(ValueError):
    """Operation on polynomials over different alphabets x_1..x_n."""


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class XPolynomial:
    """Polynomial in x_1..x_n with QTRational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[tuple[int, ...], QTRational] | None = None,
    ):
        if nvars < 1:
            raise ValueError("alphabet must contain at least one variable")
        clean: dict[tuple[int, ...], QTRational] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise AlphabetMismatch(
                        f"exponent vector {exps} has length {len(exps)}, expected {nvars}"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if not coeff.is_zero():
                    clean[tuple(exps)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("XPolynomial is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "XPolynomial":
        return _raw(nvars, {})

    @staticmethod
    def one(nvars: int) -> "XPolynomial":
        return _raw(nvars, {(0,) * nvars: QTRational.one()})

    @staticmethod
    def constant(nvars: int, coeff: QTRational) -> "XPolynomial":
        if coeff.is_zero():
            return _raw(nvars, {})
        return _raw(nvars, {(0,) * nvars: coeff})

    @staticmethod
    def variable(nvars: int, i: int) -> "XPolynomial":
        """The single variable x_i (i is 1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[i - 1] = 1
        return _raw(nvars, {tuple(exps): QTRational.one()})

    @staticmethod
    def monomial(
        nvars: int, exps: Sequence[int], coeff: QTRational | None = None
    ) -> "XPolynomial":
        coeff = QTRational.one() if coeff is None else coeff
        return XPolynomial(nvars, {tuple(exps): coeff})

    # -- queries -----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> QTRational:
        key = tuple(exps)
        if len(key) != self.nvars:
            raise AlphabetMismatch(
                f"exponent vector has length {len(key)}, expected {self.nvars}"
            )
        return self.terms.get(key, QTRational.zero())

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def leading_term(self) -> tuple[tuple[int, ...], QTRational]:
        """Greatest term under graded lex on exponent vectors."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms, key=_grlex_key)
        return key, self.terms[key]

    def support(self) -> set[tuple[int, ...]]:
        return set(self.terms)

    # -- ring arithmetic -------------------------------------------------------------

    def _check(self, other: "XPolynomial") -> None:
        if self.nvars != other.nvars:
            raise AlphabetMismatch(
                f"alphabet sizes differ: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        self._check(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            cur = out.get(exps)
            new = coeff if cur is None else cur + coeff
            if new.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = new
        return _raw(self.nvars, out)

    def __sub__(self, other: "XPolynomial") -> "XPolynomial":
        return self + (-other)

    def __neg__(self) -> "XPolynomial":
        return _raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "XPolynomial") -> "XPolynomial":
        self._check(other)
        if not self.terms or not other.terms:
            return _raw(self.nvars, {})
        out: dict[tuple[int, ...], QTRational] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                cur = out.get(key)
                new = prod if cur is None else cur + prod
                if new.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = new
        return _raw(self.nvars, out)

    def scale(self, coeff: QTRational) -> "XPolynomial":
        if coeff.is_zero():
            return _raw(self.nvars, {})
        if coeff.is_one():
            return self
        return _raw(self.nvars, {e: c * coeff for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "XPolynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = XPolynomial.one(self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparisons ---------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        cached = self._hash
        if cached is None:
            cached = hash((self.nvars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", cached)
        return cached

    # -- display and serialisation ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], QTRational]]:
        """Terms ascending in graded lex order (deterministic output order)."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=_grlex_key)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            mono = "".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                pieces.append(f"({coeff})")
            elif coeff.is_one():
                pieces.append(mono)
            else:
                pieces.append(f"({coeff})*{mono}")
        return " + ".join(pieces)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exps": list(exps), "coeff": coeff.to_json()}
                for exps, coeff in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "XPolynomial":
        return XPolynomial(
            int(data["nvars"]),
            {
                tuple(int(e) for e in item["exps"]): QTRational.from_json(item["coeff"])
                for item in data["terms"]
            },
        )

    def to_latex(self) -> str:
        """Human-readable LaTeX, terms in ascending graded lex order."""
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            mono = "".join(
                f"x_{{{i + 1}}}" if e == 1 else f"x_{{{i + 1}}}^{{{e}}}"
                for i, e in enumerate(exps)
                if e
            )
            body = _coeff_latex(coeff, bare=not mono)
            pieces.append((body + " " + mono).strip() if mono else body)
        text = pieces[0]
        for body in pieces[1:]:
            if body.startswith("-"):
                text += " - " + body[1:]
            else:
                text += " + " + body
        return text


def _poly_latex(poly) -> str:
    out = ""
    for qe, te, coeff in poly.sorted_terms():
        mono = ""
        if qe:
            mono += "q" if qe == 1 else f"q^{{{qe}}}"
        if te:
            mono += "t" if te == 1 else f"t^{{{te}}}"
        if not mono:
            body = str(coeff)
        elif coeff == 1:
            body = mono
        elif coeff == -1:
            body = "-" + mono
        else:
            body = f"{coeff} {mono}"
        if not out:
            out = body
        elif body.startswith("-"):
            out += " - " + body[1:]
        else:
            out += " + " + body
    return out


def _coeff_latex(coeff: QTRational, bare: bool) -> str:
    if coeff.den.is_one():
        num = _poly_latex(coeff.num)
        if not bare:
            if num == "1":
                return ""
            if num == "-1":
                return "-"
            if len(coeff.num.terms) > 1:
                return f"\\left({num}\\right)"
        return num
    return f"\\frac{{{_poly_latex(coeff.num)}}}{{{_poly_latex(coeff.den)}}}"


def _raw(nvars: int, terms: dict[tuple[int, ...], QTRational]) -> XPolynomial:
    poly = XPolynomial.__new__(XPolynomial)
    object.__setattr__(poly, "nvars", nvars)
    object.__setattr__(poly, "terms", terms)
    object.__setattr__(poly, "_hash", None)
    return poly


# ---------------------------------------------------------------------------
# Variable manipulations.
# ---------------------------------------------------------------------------


def xp_arith(a: XPolynomial, b: XPolynomial, op: str) -> XPolynomial:
    """Dispatch {add, sub, mul} on polynomials over the same alphabet."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def coefficient_of(poly: XPolynomial, exps: Sequence[int]) -> QTRational:
    """The exact coefficient of the monomial x^exps (0 if absent)."""
    return poly.coefficient(exps)


def swap_vars(poly: XPolynomial, i: int) -> XPolynomial:
    """Exchange x_i and x_{i+1} (i is 1-based, 1 <= i <= nvars-1)."""
    if not 1 <= i <= poly.nvars - 1:
        raise IndexError(f"swap index {i} out of range 1..{poly.nvars - 1}")
    a, b = i - 1, i
    out = {}
    for exps, coeff in poly.terms.items():
        if exps[a] == exps[b]:
            key = exps
        else:
            swapped = list(exps)
            swapped[a], swapped[b] = swapped[b], swapped[a]
            key = tuple(swapped)
        out[key] = coeff
    return _raw(poly.nvars, out)


def compose_vars(
    poly: XPolynomial, images: Sequence[tuple[int, QTRational]]
) -> XPolynomial:
    """Substitute variable k by scalar * x_target, for each k.

    ``images[k-1] = (target, scalar)`` sends every occurrence of x_k to
    scalar * x_target (target 1-based).  Distinct variables may share a
    target, so this covers non-injective substitutions as well.
    """
    n = poly.nvars
    if len(images) != n:
        raise AlphabetMismatch(f"expected {n} images, got {len(images)}")
    for target, _scalar in images:
        if not 1 <= target <= n:
            raise IndexError(f"substitution target {target} out of range 1..{n}")
    out: dict[tuple[int, ...], QTRational] = {}
    for exps, coeff in poly.terms.items():
        new_exps = [0] * n
        new_coeff = coeff
        for k, e in enumerate(exps):
            if e == 0:
                continue
            target, scalar = images[k]
            new_exps[target - 1] += e
            if not scalar.is_one():
                new_coeff = new_coeff * scalar**e
        key = tuple(new_exps)
        cur = out.get(key)
        new = new_coeff if cur is None else cur + new_coeff
        if new.is_zero():
            out.pop(key, None)
        else:
            out[key] = new
    return _raw(n, out)


def cyclic_omega(poly: XPolynomial) -> XPolynomial:
    """The cyclic generator: (omega h)(x_1,..,x_n) = h(x_2,..,x_n, q x_1).

    On monomials the exponent vector (v_1,..,v_n) becomes (v_n, v_1,..,v_{n-1})
    and the wrapped exponent v_n contributes a factor q^{v_n}.
    """
    n = poly.nvars
    one = QTRational.one()
    images = [(k + 1, one) for k in range(1, n)] + [(1, QTRational.q())]
    return compose_vars(poly, images)


def q_dilate(poly: XPolynomial) -> XPolynomial:
    """Substitute x_i -> q x_i for every variable simultaneously."""
    qv = QTRational.q()
    return compose_vars(poly, [(k, qv) for k in range(1, poly.nvars + 1)])


def reverse_alphabet(poly: XPolynomial) -> XPolynomial:
    """Substitute x_i -> x_{n+1-i}: evaluate p on the reversed alphabet."""
    n = poly.nvars
    one = QTRational.one()
    return compose_vars(poly, [(n - k, one) for k in range(n)])


def specialize_q(poly: XPolynomial, qval) -> XPolynomial:
    """Set q to an exact rational value in every coefficient."""
    out = {}
    for exps, coeff in poly.terms.items():
        new = coeff.substitute_q(qval)
        if not new.is_zero():
            out[exps] = new
    return _raw(poly.nvars, out)


def divided_difference_div(poly: XPolynomial, i: int) -> XPolynomial:
    """The exact polynomial (p - s_i p)/(x_i - x_{i+1}).

    The numerator is antisymmetric in (x_i, x_{i+1}), so the quotient is
    computed term by term from the telescoping identity
    (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a)/(x_i - x_{i+1}) =
    x_i^b x_{i+1}^b * sum_{k=0}^{a-b-1} x_i^{a-b-1-k} x_{i+1}^k   (a > b),
    which leaves no remainder by construction.
    """
    n = poly.nvars
    if not 1 <= i <= n - 1:
        raise IndexError(f"index {i} out of range 1..{n - 1}")
    a, b = i - 1, i
    out: dict[tuple[int, ...], QTRational] = {}
    for exps, coeff in poly.terms.items():
        ea, eb = exps[a], exps[b]
        if ea == eb:
            continue
        if ea < eb:
            # the mirrored term contributes with the opposite sign; handle
            # each unordered pair once from its ea > eb representative
            ea, eb = eb, ea
            coeff = -coeff
        base = list(exps)
        for k in range(ea - eb):
            base[a] = eb + (ea - eb - 1 - k)
            base[b] = eb + k
            key = tuple(base)
            cur = out.get(key)
            new = coeff if cur is None else cur + coeff
            if new.is_zero():
                out.pop(key, None)
            else:
                out[key] = new
    return _raw(n, out)
