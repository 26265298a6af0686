"""Exact scalars: the rationals and cyclotomic fields Q(zeta_n).

Rational values are always ``gmpy2.mpq``.  Elements of Q(zeta_n) that are
not rational are :class:`CycloElement` instances holding a dense coefficient
tuple in the power basis of zeta modulo the n-th cyclotomic polynomial.
Arithmetic results collapse back to ``mpq`` whenever they are rational, so a
value has exactly one representation and equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

import mpmath
from gmpy2 import mpq


class DivisionByZero(ZeroDivisionError):
    pass


class FieldMismatch(TypeError):
    pass


class ReconstructionFailed(ArithmeticError):
    pass


ZERO = mpq(0)
ONE = mpq(1)


def _totient(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num, den):
    # integer polynomials, low degree first, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n):
    # zeta^k for 0 <= k < 2*deg - 1 expressed in the power basis
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    table = []
    for k in range(max(2 * deg - 1, 1)):
        vec = [0] * (k + 1)
        vec[k] = 1
        for top in range(k, deg - 1, -1):
            c = vec[top]
            if c:
                for j, a in enumerate(phi):
                    vec[top - deg + j] -= c * a
        table.append(tuple(mpq(v) for v in (vec + [0] * deg)[:deg]))
    return tuple(table)


class FieldSpec:
    """The base field: ``FieldSpec("rationals")`` or ``FieldSpec("cyclotomic", n)``."""

    __slots__ = ("kind", "order", "degree")

    def __init__(self, kind="rationals", order=1):
        if kind not in ("rationals", "cyclotomic"):
            raise ValueError(f"unknown field kind {kind!r}")
        order = int(order)
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        if kind == "rationals":
            order = 1
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "degree", _totient(order))

    def __setattr__(self, key, value):
        raise AttributeError("FieldSpec is immutable")

    @classmethod
    def rationals(cls):
        return cls("rationals")

    @classmethod
    def cyclotomic(cls, n):
        return cls("cyclotomic", n)

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.kind == other.kind
                and self.order == other.order)

    def __hash__(self):
        return hash((self.kind, self.order))

    def __repr__(self):
        if self.kind == "rationals":
            return "FieldSpec('rationals')"
        return f"FieldSpec('cyclotomic', {self.order})"

    def to_dict(self):
        if self.kind == "rationals":
            return {"kind": "rationals"}
        return {"kind": "cyclotomic", "order": self.order}

    @classmethod
    def from_dict(cls, d):
        return cls(d.get("kind", "rationals"), d.get("order", 1))

    # -- elements -----------------------------------------------------------

    @property
    def zero(self):
        return ZERO

    @property
    def one(self):
        return ONE

    @property
    def zeta(self):
        """The chosen primitive root of unity (exp(2 pi i / n))."""
        return self.from_coeffs([0, 1] + [0] * (self.degree - 2)) if self.degree > 1 \
            else self.from_coeffs(self._zeta_rational())

    def _zeta_rational(self):
        return [1] if self.order == 1 else [-1]

    def from_coeffs(self, coeffs):
        coeffs = [mpq(c) for c in coeffs]
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        if self.degree == 1 or not any(coeffs[1:]):
            return coeffs[0]
        return CycloElement(self.order, tuple(coeffs))

    def coeffs(self, x):
        x = self.coerce(x)
        if isinstance(x, CycloElement):
            return x.coeffs
        return (x,) + (ZERO,) * (self.degree - 1)

    def coerce(self, x):
        if isinstance(x, CycloElement):
            if x.order != self.order or self.kind != "cyclotomic":
                raise FieldMismatch(f"element of Q(zeta_{x.order}) used in {self!r}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise TypeError("floats are not exact scalars")
        return mpq(x)

    def contains(self, x):
        try:
            self.coerce(x)
            return True
        except (FieldMismatch, TypeError, ValueError):
            return False

    def power_of_zeta(self, k):
        k %= self.order
        if self.degree == 1:
            return ONE if self.order == 1 or k % 2 == 0 else -ONE
        table = _reduction_table(self.order)
        if k >= len(table):
            return self.power_of_zeta(k - 1) * self.zeta
        return self.from_coeffs(table[k])

    # -- text form ----------------------------------------------------------

    def format(self, x):
        x = self.coerce(x)
        if not isinstance(x, CycloElement):
            return _fmt_q(x)
        parts = []
        for k, c in enumerate(x.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_fmt_q(mag)}*{mono}"
            else:
                body = _fmt_q(mag)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    _TERM = re.compile(r"^(?:(\d+(?:/\d+)?)(?:\*?(z)(?:\^(\d+))?)?|(z)(?:\^(\d+))?)$")

    def parse(self, s):
        text = s.replace(" ", "")
        if not text:
            raise ValueError("empty scalar")
        text = re.sub(r"(?<=[^+\-^*/])-", "+-", text)
        coeffs = [ZERO] * self.degree
        for raw in text.split("+"):
            if not raw:
                raise ValueError(f"malformed scalar {s!r}")
            sign = 1
            while raw and raw[0] in "+-":
                if raw[0] == "-":
                    sign = -sign
                raw = raw[1:]
            m = self._TERM.match(raw)
            if not m:
                raise ValueError(f"malformed scalar {s!r}")
            if m.group(4):
                coef, power = ONE, int(m.group(5) or 1)
            else:
                coef = mpq(m.group(1))
                power = int(m.group(3) or 1) if m.group(2) else 0
            if power and self.kind != "cyclotomic":
                raise ValueError(f"{s!r} uses z over the rationals")
            term = sign * coef * self.power_of_zeta(power) if power else sign * coef
            for k, c in enumerate(self.coeffs(term)):
                coeffs[k] += c
        return self.from_coeffs(coeffs)

    # -- complex embedding --------------------------------------------------

    def embed(self, x, prec=256):
        """Value of x under zeta -> exp(2 pi i / n), as an mpmath mpc."""
        with mpmath.workprec(prec + 20):
            cs = self.coeffs(x)
            z = mpmath.expjpi(mpmath.mpf(2) / self.order)
            acc = mpmath.mpc(0)
            p = mpmath.mpc(1)
            for c in cs:
                if c:
                    acc += mpmath.mpf(c.numerator) / c.denominator * p
                p *= z
            return acc


def _fmt_q(q):
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _mul_coeffs(order, a, b):
    deg = len(a)
    prod = [ZERO] * (2 * deg - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    out = list(prod[:deg])
    table = _reduction_table(order)
    for k in range(deg, 2 * deg - 1):
        c = prod[k]
        if c:
            for j, t in enumerate(table[k]):
                if t:
                    out[j] += c * t
    return out


def _collapse(order, coeffs):
    if not any(coeffs[1:]):
        return coeffs[0]
    return CycloElement(order, tuple(coeffs))


class CycloElement:
    """An irrational element of Q(zeta_order)."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs):
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("CycloElement is immutable")

    def _other(self, y):
        if isinstance(y, CycloElement):
            if y.order != self.order:
                raise FieldMismatch(f"Q(zeta_{self.order}) vs Q(zeta_{y.order})")
            return y.coeffs
        if isinstance(y, (int, type(ZERO), Fraction)):
            y = mpq(y)
            return (y,) + (ZERO,) * (len(self.coeffs) - 1)
        return None

    def __add__(self, y):
        yc = self._other(y)
        if yc is None:
            return NotImplemented
        return _collapse(self.order, [a + b for a, b in zip(self.coeffs, yc)])

    __radd__ = __add__

    def __sub__(self, y):
        yc = self._other(y)
        if yc is None:
            return NotImplemented
        return _collapse(self.order, [a - b for a, b in zip(self.coeffs, yc)])

    def __rsub__(self, y):
        yc = self._other(y)
        if yc is None:
            return NotImplemented
        return _collapse(self.order, [b - a for a, b in zip(self.coeffs, yc)])

    def __neg__(self):
        return CycloElement(self.order, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, y):
        if isinstance(y, CycloElement):
            if y.order != self.order:
                raise FieldMismatch(f"Q(zeta_{self.order}) vs Q(zeta_{y.order})")
            return _collapse(self.order, _mul_coeffs(self.order, self.coeffs, y.coeffs))
        if isinstance(y, (int, type(ZERO), Fraction)):
            y = mpq(y)
            if not y:
                return ZERO
            return CycloElement(self.order, tuple(a * y for a in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        # solve (mult-by-self) x = e_0 over Q
        deg = len(self.coeffs)
        cols = []
        for k in range(deg):
            basis = [ZERO] * deg
            basis[k] = ONE
            cols.append(_mul_coeffs(self.order, self.coeffs, basis))
        mat = [[cols[j][i] for j in range(deg)] + [ONE if i == 0 else ZERO]
               for i in range(deg)]
        for c in range(deg):
            piv = next(r for r in range(c, deg) if mat[r][c])
            mat[c], mat[piv] = mat[piv], mat[c]
            inv = 1 / mat[c][c]
            mat[c] = [v * inv for v in mat[c]]
            for r in range(deg):
                if r != c and mat[r][c]:
                    f = mat[r][c]
                    mat[r] = [a - f * b for a, b in zip(mat[r], mat[c])]
        return _collapse(self.order, [mat[i][deg] for i in range(deg)])

    def __truediv__(self, y):
        if isinstance(y, CycloElement):
            return self * y.inverse()
        if isinstance(y, (int, type(ZERO), Fraction)):
            if not y:
                raise DivisionByZero("division by zero")
            return self * (1 / mpq(y))
        return NotImplemented

    def __rtruediv__(self, y):
        if isinstance(y, (int, type(ZERO), Fraction)):
            return self.inverse() * mpq(y)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, y):
        if isinstance(y, CycloElement):
            return self.order == y.order and self.coeffs == y.coeffs
        if isinstance(y, (int, type(ZERO), Fraction)):
            return False  # canonical: rational values are never CycloElement
        return NotImplemented

    def __ne__(self, y):
        r = self.__eq__(y)
        return r if r is NotImplemented else not r

    def __bool__(self):
        return True

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("cyclo", self.order, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"CycloElement({self.order}, {FieldSpec('cyclotomic', self.order).format(self)!r})"


def inv(a):
    if isinstance(a, CycloElement):
        return a.inverse()
    if not a:
        raise DivisionByZero("inverse of zero")
    return 1 / mpq(a)


def field_arith(a, b, op, field=None):
    """Exact field operation; ``op`` is one of add, sub, mul, div, inv, eq."""
    if field is not None:
        a = field.coerce(a)
        if op != "inv":
            b = field.coerce(b)
    elif isinstance(a, CycloElement) and isinstance(b, CycloElement) and a.order != b.order:
        raise FieldMismatch(f"Q(zeta_{a.order}) vs Q(zeta_{b.order})")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(b, CycloElement):
            return a * b.inverse()
        if not b:
            raise DivisionByZero("division by zero")
        return a / mpq(b) if not isinstance(a, CycloElement) else a / b
    if op == "inv":
        return inv(a)
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


class ComplexBall:
    """A disc in C: center (mpc) and radius (mpf)."""

    __slots__ = ("center", "radius")

    def __init__(self, center, radius):
        # keep mp values untouched: converting would round to the ambient precision
        self.center = center if isinstance(center, mpmath.mpc) else mpmath.mpc(center)
        self.radius = radius if isinstance(radius, mpmath.mpf) else mpmath.mpf(radius)

    def contains(self, z):
        return abs(mpmath.mpc(z) - self.center) <= self.radius

    def __repr__(self):
        return f"ComplexBall({mpmath.nstr(self.center, 15)}, {mpmath.nstr(self.radius, 5)})"


def _round_rational(x, height_bound):
    # nearest rational with denominator <= height_bound, from an exact binary value
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if not man:
        return ZERO
    frac = Fraction(int(man) << int(exp)) if exp >= 0 else Fraction(int(man), 1 << int(-exp))
    if sign:
        frac = -frac
    r = frac.limit_denominator(height_bound)
    if abs(r.numerator) > height_bound * max(1, r.denominator) * 2 ** 20:
        raise ReconstructionFailed("coordinate exceeds height bound")
    return mpq(r.numerator, r.denominator)


def reconstruct_exact(approx, field, height_bound=10 ** 6, precision_bits=256):
    """Find the field element of small height inside the ball ``approx``.

    Raises :class:`ReconstructionFailed` when no candidate of denominator at
    most ``height_bound`` lies in the ball.  A returned element is only a
    candidate: callers must still verify it exactly (e.g. by substitution).
    """
    if not isinstance(approx, ComplexBall):
        approx = ComplexBall(approx, mpmath.mpf(2) ** (-precision_bits // 2))
    with mpmath.workprec(precision_bits + 20):
        c = approx.center
        deg = field.degree
        try:
            if deg == 1:
                coords = [_round_rational(c.real, height_bound)]
            elif deg == 2:
                z = field.embed(field.zeta, precision_bits)
                c1 = c.imag / z.imag
                c0 = c.real - c1 * z.real
                coords = [_round_rational(c0, height_bound), _round_rational(c1, height_bound)]
            else:
                coords = _pslq_coords(c, field, height_bound, precision_bits)
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise ReconstructionFailed(str(exc)) from None
        cand = field.from_coeffs(coords)
        err = abs(field.embed(cand, precision_bits) - c)
        slack = approx.radius + mpmath.mpf(2) ** (-precision_bits + 8)
        if err > slack:
            raise ReconstructionFailed(
                f"no element of height <= {height_bound} within the ball around "
                f"{mpmath.nstr(c, 12)}")
        return cand


def _pslq_coords(c, field, height_bound, prec):
    # one real combination Re + g*Im with g generic; the ball check rejects spurious relations
    if abs(c) < mpmath.mpf(2) ** (-(prec // 2)):
        return [ZERO] * field.degree
    z = field.embed(field.zeta, prec)
    for g in (mpmath.sqrt(2) + mpmath.pi / 7, mpmath.sqrt(3) - mpmath.e / 5):
        vec = [c.real + g * c.imag]
        if abs(vec[0]) < mpmath.mpf(2) ** (-(prec // 2)):
            continue
        p = mpmath.mpc(1)
        for _ in range(field.degree):
            vec.append(p.real + g * p.imag)
            p *= z
        rel = mpmath.pslq(vec, maxcoeff=height_bound * 10 ** 3, maxsteps=10 ** 5)
        if rel is None or rel[0] == 0:
            raise ReconstructionFailed("no integer relation found")
        d = rel[0]
        return [mpq(-r, d) for r in rel[1:]]
    raise ReconstructionFailed("degenerate real projection")
