"""Exact arithmetic in the coefficient field Q(q,t).

Three layers, from the ground up:

  Fraction      -- arbitrary-precision rationals (stdlib ``fractions``);
                   always stored with gcd(|num|, den) = 1 and den >= 1.
  QTPolynomial  -- sparse bivariate polynomials in (q, t) over Q, stored as
                   a dict mapping (qexp, texp) -> Fraction with no zero
                   coefficients.
  QTRational    -- elements of the field Q(q,t), stored as a reduced pair
                   num/den of QTPolynomials.

Canonical form of a QTRational: gcd(num, den) = 1 and den is normalised so
that its lexicographically greatest term (q-degree major, t-degree minor)
has coefficient 1.  Equal field elements therefore have identical stored
representations, which makes equality, hashing and serialisation trivial.

Negative exponents of q or t (needed e.g. for eigenvalue monomials
q^a t^b with b < 0) are represented by placing the offending monomial in
the denominator; QTPolynomial itself only ever stores exponents >= 0.

All values are immutable after construction and all operations are pure,
so they can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

__all__ = [
    "Fraction",
    "QTPolynomial",
    "QTRational",
    "QTDivisionByZero",
    "VanishingDenominator",
    "ExactDivisionError",
    "qt_gcd",
]


class QTDivisionByZero(ZeroDivisionError):
    """Division of field elements by zero."""


class VanishingDenominator(ZeroDivisionError):
    """Evaluation of a QTRational at a point where its denominator vanishes."""

    def __init__(self, qval: Fraction, tval: Fraction):
        super().__init__(f"denominator vanishes at q={qval}, t={tval}")
        self.point = (qval, tval)


class ExactDivisionError(ArithmeticError):
    """Polynomial division that was required to be exact left a remainder."""


def _lex_key(term: tuple[int, int]) -> tuple[int, int]:
    # q-degree major, t-degree minor
    return term


class QTPolynomial:
    """A polynomial in (q, t) with Fraction coefficients, sparsely stored."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                frac = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if frac != 0:
                    qe, te = key
                    if qe < 0 or te < 0:
                        raise ValueError(f"negative exponent in term {key}")
                    clean[(qe, te)] = frac
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QTPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "QTPolynomial":
        return _POLY_ZERO

    @staticmethod
    def one() -> "QTPolynomial":
        return _POLY_ONE

    @staticmethod
    def constant(value: Scalar) -> "QTPolynomial":
        return QTPolynomial({(0, 0): Fraction(value)})

    @staticmethod
    def monomial(qexp: int, texp: int, coeff: Scalar = 1) -> "QTPolynomial":
        return QTPolynomial({(qexp, texp): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, 0): Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def leading_term(self) -> tuple[tuple[int, int], Fraction]:
        """Greatest term in the fixed lex order (q major, t minor)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms, key=_lex_key)
        return key, self.terms[key]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QTPolynomial") -> "QTPolynomial":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return _poly_raw(out)

    def __sub__(self, other: "QTPolynomial") -> "QTPolynomial":
        if not other.terms:
            return self
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, 0) - coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return _poly_raw(out)

    def __neg__(self) -> "QTPolynomial":
        return _poly_raw({key: -coeff for key, coeff in self.terms.items()})

    def __mul__(self, other: "QTPolynomial") -> "QTPolynomial":
        if not self.terms or not other.terms:
            return _POLY_ZERO
        out: dict[tuple[int, int], Fraction] = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                key = (qa + qb, ta + tb)
                new = out.get(key, 0) + ca * cb
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return _poly_raw(out)

    def __pow__(self, exponent: int) -> "QTPolynomial":
        if exponent < 0:
            raise ValueError("QTPolynomial only supports nonnegative powers")
        result = _POLY_ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Scalar) -> "QTPolynomial":
        frac = Fraction(factor)
        if frac == 0:
            return _POLY_ZERO
        return _poly_raw({key: coeff * frac for key, coeff in self.terms.items()})

    def shift(self, qexp: int, texp: int) -> "QTPolynomial":
        """Multiply by the monomial q^qexp t^texp (exponents >= 0)."""
        if qexp == 0 and texp == 0:
            return self
        return _poly_raw(
            {(qe + qexp, te + texp): c for (qe, te), c in self.terms.items()}
        )

    # -- comparisons, hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        cached = self._hash
        if cached is None:
            cached = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", cached)
        return cached

    # -- evaluation and division -------------------------------------------

    def eval(self, qval: Scalar, tval: Scalar) -> Fraction:
        qv, tv = Fraction(qval), Fraction(tval)
        total = Fraction(0)
        for (qe, te), coeff in self.terms.items():
            total += coeff * qv**qe * tv**te
        return total

    def substitute_q(self, qval: Scalar) -> "QTPolynomial":
        """Collapse q to an exact rational value, keeping t symbolic."""
        qv = Fraction(qval)
        out: dict[tuple[int, int], Fraction] = {}
        for (qe, te), coeff in self.terms.items():
            new = out.get((0, te), 0) + coeff * qv**qe
            if new:
                out[(0, te)] = new
            else:
                out.pop((0, te), None)
        return _poly_raw(out)

    def div_exact(self, divisor: "QTPolynomial") -> "QTPolynomial":
        """Exact polynomial quotient self / divisor.

        Raises ExactDivisionError if divisor does not divide self exactly.
        """
        if divisor.is_zero():
            raise ExactDivisionError("division by the zero polynomial")
        if self.is_zero():
            return _POLY_ZERO
        if divisor.is_one():
            return self
        if divisor.is_monomial():
            (dq, dt), dc = divisor.leading_term()
            out = {}
            for (qe, te), coeff in self.terms.items():
                if qe < dq or te < dt:
                    raise ExactDivisionError("monomial does not divide term")
                out[(qe - dq, te - dt)] = coeff / dc
            return _poly_raw(out)
        remainder = dict(self.terms)
        (dq, dt), dc = divisor.leading_term()
        quotient: dict[tuple[int, int], Fraction] = {}
        while remainder:
            (rq, rt) = max(remainder, key=_lex_key)
            if rq < dq or rt < dt:
                raise ExactDivisionError("nonzero remainder in exact division")
            factor = remainder[(rq, rt)] / dc
            mono = (rq - dq, rt - dt)
            quotient[mono] = quotient.get(mono, Fraction(0)) + factor
            for (qe, te), coeff in divisor.terms.items():
                key = (qe + mono[0], te + mono[1])
                new = remainder.get(key, 0) - factor * coeff
                if new:
                    remainder[key] = new
                else:
                    remainder.pop(key, None)
        return _poly_raw(quotient)

    # -- display and serialisation ------------------------------------------

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        """Terms as (qexp, texp, coeff), descending in the fixed lex order."""
        return [
            (qe, te, self.terms[(qe, te)])
            for (qe, te) in sorted(self.terms, key=_lex_key, reverse=True)
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for qe, te, coeff in self.sorted_terms():
            mono = ""
            if qe:
                mono += "q" if qe == 1 else f"q^{qe}"
            if te:
                mono += "t" if te == 1 else f"t^{te}"
            if not mono:
                body = str(coeff)
            elif coeff == 1:
                body = mono
            elif coeff == -1:
                body = "-" + mono
            else:
                body = f"{coeff}*{mono}"
            pieces.append(body)
        text = pieces[0]
        for body in pieces[1:]:
            text += " - " + body[1:] if body.startswith("-") else " + " + body
        return text

    __repr__ = __str__

    def to_json(self) -> list[list]:
        return [[qe, te, str(c)] for qe, te, c in self.sorted_terms()]

    @staticmethod
    def from_json(data: Iterable[Iterable]) -> "QTPolynomial":
        return QTPolynomial({(int(qe), int(te)): Fraction(c) for qe, te, c in data})


def _poly_raw(terms: dict[tuple[int, int], Fraction]) -> QTPolynomial:
    # internal fast constructor: terms already clean (no zeros, valid keys)
    poly = QTPolynomial.__new__(QTPolynomial)
    object.__setattr__(poly, "terms", terms)
    object.__setattr__(poly, "_hash", None)
    return poly


_POLY_ZERO = QTPolynomial()
_POLY_ONE = QTPolynomial({(0, 0): 1})


# ---------------------------------------------------------------------------
# Bivariate gcd via content / primitive-part recursion over Z[q][t].
#
# The gcd of polynomials over Q is only defined up to a scalar, so both
# inputs are first cleared to integer coefficients; all the inner PRS
# arithmetic then runs on plain ints, which is far cheaper than Fractions.
# ---------------------------------------------------------------------------

from functools import lru_cache
from math import gcd as _int_gcd

_IUni = dict[int, int]  # integer polynomial in q


def _iuni_content(p: _IUni) -> int:
    c = 0
    for v in p.values():
        c = _int_gcd(c, v)
        if c == 1:
            return 1
    return c


def _iuni_primitive(p: _IUni) -> _IUni:
    if not p:
        return p
    c = _iuni_content(p)
    if p[max(p)] < 0:
        c = -c
    if c == 1:
        return p
    return {e: v // c for e, v in p.items()}


def _iuni_mul(a: _IUni, b: _IUni) -> _IUni:
    out: _IUni = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = ea + eb
            new = out.get(key, 0) + ca * cb
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def _iuni_scale(a: _IUni, c: int) -> _IUni:
    return {e: v * c for e, v in a.items()} if c else {}


def _iuni_pseudo_rem(a: _IUni, b: _IUni) -> _IUni:
    db = max(b)
    lb = b[db]
    rem = dict(a)
    while rem:
        dr = max(rem)
        if dr < db:
            break
        lr = rem[dr]
        new: _IUni = {e: v * lb for e, v in rem.items()}
        for e, v in b.items():
            key = e + dr - db
            merged = new.get(key, 0) - lr * v
            if merged:
                new[key] = merged
            else:
                new.pop(key, None)
        rem = new
    return rem


def _iuni_abs(p: _IUni) -> _IUni:
    if p and p[max(p)] < 0:
        return {e: -v for e, v in p.items()}
    return p


def _iuni_gcd(a: _IUni, b: _IUni) -> _IUni:
    """Full gcd in Z[q] (content included), positive leading coefficient."""
    if not a:
        return _iuni_abs(b)
    if not b:
        return _iuni_abs(a)
    ca, cb = abs(_iuni_content(a)), abs(_iuni_content(b))
    pa, pb = _iuni_primitive(a), _iuni_primitive(b)
    if max(pa, default=-1) < max(pb, default=-1):
        pa, pb = pb, pa
    while pb:
        rem = _iuni_pseudo_rem(pa, pb)
        pa, pb = pb, _iuni_primitive(rem)
    return _iuni_scale(pa, _int_gcd(ca, cb))


def _iuni_div_exact(a: _IUni, b: _IUni) -> _IUni:
    quot: _IUni = {}
    rem = dict(a)
    db = max(b)
    lb = b[db]
    while rem:
        dr = max(rem)
        if dr < db or rem[dr] % lb:
            raise ExactDivisionError("inexact division in Z[q]")
        factor = rem[dr] // lb
        quot[dr - db] = factor
        for e, v in b.items():
            key = e + dr - db
            merged = rem.get(key, 0) - factor * v
            if merged:
                rem[key] = merged
            else:
                rem.pop(key, None)
    return quot


_ITq = dict[int, _IUni]  # polynomial in t with Z[q] coefficients


def _to_int_tq(poly: QTPolynomial) -> _ITq:
    """Clear denominators and view as a polynomial in t over Z[q]."""
    scale = 1
    for coeff in poly.terms.values():
        scale = scale * (coeff.denominator // _int_gcd(scale, coeff.denominator))
    out: _ITq = {}
    for (qe, te), coeff in poly.terms.items():
        out.setdefault(te, {})[qe] = int(coeff * scale)
    return out


def _int_tq_content(coeffs: _ITq) -> _IUni:
    content: _IUni = {}
    for uni in coeffs.values():
        content = _iuni_gcd(content, uni)
        if max(content, default=-1) == 0 and abs(content.get(0, 0)) == 1:
            break
    return content


def _int_tq_divide(coeffs: _ITq, divisor: _IUni) -> _ITq:
    if max(divisor) == 0:
        c = divisor[0]
        if c in (1, -1):
            return coeffs if c == 1 else {te: _iuni_scale(u, -1) for te, u in coeffs.items()}
        return {te: {e: v // c for e, v in u.items()} for te, u in coeffs.items()}
    return {te: _iuni_div_exact(u, divisor) for te, u in coeffs.items()}


def _int_tq_pseudo_rem(a: _ITq, b: _ITq) -> _ITq:
    da, db = max(a), max(b)
    lead_b = b[db]
    rem = a
    while rem:
        dr = max(rem)
        if dr < db:
            break
        lead_r = rem[dr]
        new: _ITq = {}
        for te, uni in rem.items():
            scaled = _iuni_mul(lead_b, uni)
            if scaled:
                new[te] = scaled
        for te, uni in b.items():
            key = te + dr - db
            piece = _iuni_mul(lead_r, uni)
            target = new.get(key, {})
            merged = dict(target)
            for e, v in piece.items():
                cur = merged.get(e, 0) - v
                if cur:
                    merged[e] = cur
                else:
                    merged.pop(e, None)
            if merged:
                new[key] = merged
            else:
                new.pop(key, None)
        rem = new
    return rem


def qt_gcd(a: QTPolynomial, b: QTPolynomial) -> QTPolynomial:
    """Greatest common divisor in Q[q,t], normalised to lex-leading coefficient 1.

    Computed by content / primitive-part recursion over the integers (the
    gcd over Q is unchanged by clearing denominators); the result divides
    both inputs exactly.  Both inputs zero is rejected.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        return _monic_lex(b)
    if b.is_zero():
        return _monic_lex(a)
    if a.is_monomial() or b.is_monomial():
        mono, other = (a, b) if a.is_monomial() else (b, a)
        (mq, mt), _ = mono.leading_term()
        gq = min([mq] + [qe for (qe, _te) in other.terms])
        gt = min([mt] + [te for (_qe, te) in other.terms])
        return QTPolynomial.monomial(gq, gt)
    return _gcd_cached(a, b)


@lru_cache(maxsize=1 << 14)
def _gcd_cached(a: QTPolynomial, b: QTPolynomial) -> QTPolynomial:
    ta, tb = _to_int_tq(a), _to_int_tq(b)
    ca, cb = _int_tq_content(ta), _int_tq_content(tb)
    pa, pb = _int_tq_divide(ta, ca), _int_tq_divide(tb, cb)
    if max(pa) < max(pb):
        pa, pb = pb, pa
    while pb:
        if max(pb) == 0 and max(pb[0], default=-1) == 0:
            # constant in both q and t: the primitive parts are coprime
            pa = {0: {0: 1}}
            break
        rem = _int_tq_pseudo_rem(pa, pb)
        if not rem:
            pa = pb
            break
        pa, pb = pb, _int_tq_divide(rem, _int_tq_content(rem))
    content_gcd = _iuni_gcd(ca, cb)
    terms: dict[tuple[int, int], Fraction] = {}
    for te, uni in pa.items():
        for qe, v in _iuni_mul(uni, content_gcd).items():
            terms[(qe, te)] = Fraction(v)
    return _monic_lex(_poly_raw(terms))


def _monic_lex(poly: QTPolynomial) -> QTPolynomial:
    _, lead = poly.leading_term()
    if lead == 1:
        return poly
    return poly.scale(1 / lead)


# ---------------------------------------------------------------------------
# The field Q(q,t).
# ---------------------------------------------------------------------------


class QTRational:
    """An element of Q(q,t) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: QTPolynomial, den: QTPolynomial | None = None):
        if den is None:
            den = _POLY_ONE
        if den.is_zero():
            raise QTDivisionByZero("zero denominator in Q(q,t)")
        num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("QTRational is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "QTRational":
        return _ZERO

    @staticmethod
    def one() -> "QTRational":
        return _ONE

    @staticmethod
    def q() -> "QTRational":
        return _Q

    @staticmethod
    def t() -> "QTRational":
        return _T

    @staticmethod
    def from_scalar(value: Scalar) -> "QTRational":
        frac = Fraction(value)
        if frac == 0:
            return _ZERO
        if frac == 1:
            return _ONE
        return _make_raw(QTPolynomial.constant(frac), _POLY_ONE)

    @staticmethod
    def monomial(qexp: int, texp: int, coeff: Scalar = 1) -> "QTRational":
        """The element coeff * q^qexp * t^texp; negative exponents allowed."""
        frac = Fraction(coeff)
        if frac == 0:
            return _ZERO
        nq, nt = max(qexp, 0), max(texp, 0)
        dq, dt = max(-qexp, 0), max(-texp, 0)
        return _make_raw(
            QTPolynomial.monomial(nq, nt, frac), QTPolynomial.monomial(dq, dt)
        )

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    # -- field arithmetic ----------------------------------------------------

    def __add__(self, other: "QTRational") -> "QTRational":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            num = self.num + other.num
            if num.is_zero():
                return _ZERO
            return QTRational(num, self.den)
        if self.den.is_one():
            return _make_raw(self.num * other.den + other.num, other.den)
        if other.den.is_one():
            return _make_raw(self.num + other.num * self.den, self.den)
        g = qt_gcd(self.den, other.den)
        if g.is_one():
            num = self.num * other.den + other.num * self.den
            if num.is_zero():
                return _ZERO
            return _make_raw(num, self.den * other.den)
        da = self.den.div_exact(g)
        db = other.den.div_exact(g)
        num = self.num * db + other.num * da
        if num.is_zero():
            return _ZERO
        h = qt_gcd(num, g)
        if not h.is_one():
            num = num.div_exact(h)
            g = g.div_exact(h)
        return _normalise(num, da * db * g)

    def __sub__(self, other: "QTRational") -> "QTRational":
        return self + (-other)

    def __neg__(self) -> "QTRational":
        if self.num.is_zero():
            return self
        return _make_raw(-self.num, self.den)

    def __mul__(self, other: "QTRational") -> "QTRational":
        if self.num.is_zero() or other.num.is_zero():
            return _ZERO
        n1, d1 = self.num, self.den
        n2, d2 = other.num, other.den
        if not d2.is_one():
            g = qt_gcd(n1, d2)
            if not g.is_one():
                n1, d2 = n1.div_exact(g), d2.div_exact(g)
        if not d1.is_one():
            g = qt_gcd(n2, d1)
            if not g.is_one():
                n2, d1 = n2.div_exact(g), d1.div_exact(g)
        return _normalise(n1 * n2, d1 * d2)

    def __truediv__(self, other: "QTRational") -> "QTRational":
        return self * other.inverse()

    def inverse(self) -> "QTRational":
        if self.num.is_zero():
            raise QTDivisionByZero("inverse of zero in Q(q,t)")
        return _normalise(self.den, self.num)

    def __pow__(self, exponent: int) -> "QTRational":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = _ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparisons, hashing -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        cached = self._hash
        if cached is None:
            cached = hash((self.num, self.den))
            object.__setattr__(self, "_hash", cached)
        return cached

    # -- evaluation -------------------------------------------------------------

    def eval(self, qval: Scalar, tval: Scalar) -> Fraction:
        """Exact value at an exact rational point (qval, tval)."""
        qv, tv = Fraction(qval), Fraction(tval)
        den = self.den.eval(qv, tv)
        if den == 0:
            raise VanishingDenominator(qv, tv)
        return self.num.eval(qv, tv) / den

    def substitute_q(self, qval: Scalar) -> "QTRational":
        """The specialised element with q set to an exact rational value."""
        den = self.den.substitute_q(qval)
        if den.is_zero():
            raise QTDivisionByZero(f"denominator vanishes identically at q={qval}")
        return QTRational(self.num.substitute_q(qval), den)

    # -- display and serialisation ------------------------------------------------

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @staticmethod
    def from_json(data: Mapping) -> "QTRational":
        return QTRational(
            QTPolynomial.from_json(data["num"]), QTPolynomial.from_json(data["den"])
        )


def field_arith(a: QTRational, b: QTRational, op: str) -> QTRational:
    """Dispatch {add, sub, mul, div} on field elements (exact, canonical)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise QTDivisionByZero("division by zero in Q(q,t)")
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def qt_eval(a: QTRational, qval: Scalar, tval: Scalar) -> Fraction:
    """Evaluate a field element at an exact rational point."""
    return a.eval(qval, tval)


def _reduce(num: QTPolynomial, den: QTPolynomial) -> tuple[QTPolynomial, QTPolynomial]:
    if num.is_zero():
        return _POLY_ZERO, _POLY_ONE
    if not den.is_one():
        g = qt_gcd(num, den)
        if not g.is_one():
            num = num.div_exact(g)
            den = den.div_exact(g)
    _, lead = den.leading_term()
    if lead != 1:
        inv = 1 / lead
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _normalise(num: QTPolynomial, den: QTPolynomial) -> "QTRational":
    # num/den with gcd(num, den) already 1: only the leading-coefficient
    # normalisation of the denominator remains.
    _, lead = den.leading_term()
    if lead != 1:
        inv = 1 / lead
        num = num.scale(inv)
        den = den.scale(inv)
    return _make_raw(num, den)


def _make_raw(num: QTPolynomial, den: QTPolynomial) -> QTRational:
    value = QTRational.__new__(QTRational)
    object.__setattr__(value, "num", num)
    object.__setattr__(value, "den", den)
    object.__setattr__(value, "_hash", None)
    return value


_ZERO = _make_raw(_POLY_ZERO, _POLY_ONE)
_ONE = _make_raw(_POLY_ONE, _POLY_ONE)
_Q = _make_raw(QTPolynomial.monomial(1, 0), _POLY_ONE)
_T = _make_raw(QTPolynomial.monomial(0, 1), _POLY_ONE)
