"""Exact arithmetic in the field Q(i, sqrt2, sqrt3, sqrt5).

An element is stored as a sparse, sorted tuple of ``(m, re, im)`` terms meaning
``sum (re + i*im) * sqrt(m)`` over the square-free radicals
``m in {1, 2, 3, 5, 6, 10, 15, 30}``.  Rationals are ``gmpy2.mpq`` and are kept
in lowest terms, so two values are equal exactly when their term tuples are.

Text syntax (``parse`` / ``str``)::

    (1/2 + 3/4*i)*r6 - 2
"""
from __future__ import annotations

import ast
import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

RADICALS = (1, 2, 3, 5, 6, 10, 15, 30)
_PRIMES = (2, 3, 5)


class UnsupportedRadical(ValueError):
    pass


class ScalarParseError(ValueError):
    pass


def _radical_product(m1: int, m2: int) -> tuple[int, int]:
    """sqrt(m1)*sqrt(m2) = factor*sqrt(m)."""
    g = math.gcd(m1, m2)
    return g, (m1 // g) * (m2 // g)


_MUL = {(a, b): _radical_product(a, b) for a in RADICALS for b in RADICALS}
_ZERO = mpq(0)


def _to_mpq(x) -> mpq:
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Rational)) or type(x).__name__ == "mpq":
        return mpq(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class ExactScalar:
    """Element of Q(i, sqrt2, sqrt3, sqrt5); immutable."""

    __slots__ = ("_t", "_hash")

    def __init__(self, value=0, imag=0):
        if isinstance(value, ExactScalar):
            self._t = value._t
        else:
            re, im = _to_mpq(value), _to_mpq(imag)
            self._t = ((1, re, im),) if (re or im) else ()
        self._hash = None

    @classmethod
    def _raw(cls, terms: tuple) -> "ExactScalar":
        obj = object.__new__(cls)
        obj._t = terms
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, terms: dict) -> "ExactScalar":
        """Build from ``{m: (re, im)}``; ``m`` must be a supported radical."""
        out = []
        for m in sorted(terms):
            if m not in RADICALS:
                raise UnsupportedRadical(m)
            re, im = terms[m]
            re, im = _to_mpq(re), _to_mpq(im)
            if re or im:
                out.append((m, re, im))
        return cls._raw(tuple(out))

    # -- coefficient access -------------------------------------------------
    def coefficients(self) -> tuple:
        """The 16 rationals ``(re_1, im_1, re_2, im_2, ..., re_30, im_30)``."""
        d = {m: (re, im) for m, re, im in self._t}
        out = []
        for m in RADICALS:
            re, im = d.get(m, (_ZERO, _ZERO))
            out.extend((Fraction(int(re.numerator), int(re.denominator)),
                        Fraction(int(im.numerator), int(im.denominator))))
        return tuple(out)

    @property
    def terms(self) -> tuple:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def is_gaussian(self) -> bool:
        """True when the value lies in Q(i)."""
        return not self._t or (len(self._t) == 1 and self._t[0][0] == 1)

    def is_rational(self) -> bool:
        return not self._t or (len(self._t) == 1 and self._t[0][0] == 1 and not self._t[0][2])

    def gaussian_parts(self) -> tuple[mpq, mpq]:
        if not self._t:
            return _ZERO, _ZERO
        if not self.is_gaussian():
            raise ValueError(f"{self} is not in Q(i)")
        return self._t[0][1], self._t[0][2]

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactScalar):
            return other
        try:
            return ExactScalar(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._t:
            return self
        if not self._t:
            return other
        d = {m: (re, im) for m, re, im in self._t}
        for m, re, im in other._t:
            if m in d:
                r0, i0 = d[m]
                d[m] = (r0 + re, i0 + im)
            else:
                d[m] = (re, im)
        return ExactScalar._raw(tuple((m, re, im) for m, (re, im) in sorted(d.items()) if re or im))

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar._raw(tuple((m, -re, -im) for m, re, im in self._t))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) == 1 and len(b) == 1:
            m1, r1, i1 = a[0]
            m2, r2, i2 = b[0]
            g, m = _MUL[m1, m2]
            re, im = r1 * r2 - i1 * i2, r1 * i2 + i1 * r2
            if g != 1:
                re, im = re * g, im * g
            return ExactScalar._raw(((m, re, im),) if (re or im) else ())
        d = {}
        for m1, r1, i1 in a:
            for m2, r2, i2 in b:
                g, m = _MUL[m1, m2]
                re, im = r1 * r2 - i1 * i2, r1 * i2 + i1 * r2
                if g != 1:
                    re, im = re * g, im * g
                if m in d:
                    r0, i0 = d[m]
                    d[m] = (r0 + re, i0 + im)
                else:
                    d[m] = (re, im)
        return ExactScalar._raw(tuple((m, re, im) for m, (re, im) in sorted(d.items()) if re or im))

    __rmul__ = __mul__

    def _galois(self, flips: int) -> "ExactScalar":
        """Apply sqrt(p) -> -sqrt(p) for each prime p whose bit is set in ``flips``."""
        out = []
        for m, re, im in self._t:
            s = 1
            for bit, p in enumerate(_PRIMES):
                if flips >> bit & 1 and m % p == 0:
                    s = -s
            out.append((m, re, im) if s > 0 else (m, -re, -im))
        return ExactScalar._raw(tuple(out))

    def inv(self) -> "ExactScalar":
        if not self._t:
            raise ZeroDivisionError("inverse of zero")
        # product of the seven non-trivial Galois conjugates fixing i
        cof = ONE
        if not self.is_gaussian():
            for flips in range(1, 8):
                cof = cof * self._galois(flips)
        norm = self * cof
        re, im = norm.gaussian_parts()
        den = re * re + im * im
        return cof * ExactScalar._raw(((1, re / den, -im / den),))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "ExactScalar":
        """Complex conjugation; radicals are real and stay fixed."""
        return ExactScalar._raw(tuple((m, re, -im) for m, re, im in self._t))

    def conjugate(self) -> "ExactScalar":
        return self.conj()

    def real(self) -> "ExactScalar":
        return ExactScalar._raw(tuple((m, re, _ZERO) for m, re, im in self._t if re))

    def imag(self) -> "ExactScalar":
        return ExactScalar._raw(tuple((m, im, _ZERO) for m, re, im in self._t if im))

    # -- comparison / hashing -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self._t == other._t
        try:
            return self._t == ExactScalar(other)._t
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._t) if not self.is_rational() else hash(
                Fraction(int(self._t[0][1].numerator), int(self._t[0][1].denominator))
                if self._t else 0)
        return self._hash

    # -- conversion ---------------------------------------------------------
    def to_approx(self) -> "ApproxScalar":
        z = 0j
        for m, re, im in self._t:
            z += complex(float(re), float(im)) * math.sqrt(m)
        return ApproxScalar(z.real, z.imag)

    def __complex__(self):
        return complex(self.to_approx())

    def __repr__(self):
        return f"ExactScalar({str(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)


def radical(m: int) -> ExactScalar:
    """Positive square root of ``m`` for ``m`` in {2, 3, 5, 6, 10, 15, 30}."""
    if m not in RADICALS or m == 1:
        raise UnsupportedRadical(f"sqrt({m}) is not a basis radical")
    return ExactScalar._raw(((m, mpq(1), _ZERO),))


def exact(x) -> ExactScalar:
    """Coerce ints, rationals, strings and ExactScalars."""
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return ExactScalar(x)


@dataclass(frozen=True)
class ApproxScalar:
    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("non-finite approximate scalar")

    def __complex__(self):
        return complex(self.re, self.im)

    def __abs__(self):
        return abs(complex(self))

    def __sub__(self, other):
        return complex(self) - complex(other)

    def __rsub__(self, other):
        return complex(other) - complex(self)


# -- text syntax -------------------------------------------------------------

def _fmt_q(q: mpq) -> str:
    return str(int(q.numerator)) if q.denominator == 1 else f"{int(q.numerator)}/{int(q.denominator)}"


def format_scalar(x: ExactScalar) -> str:
    parts = []
    for m, re, im in x._t:
        for val, unit in ((re, ""), (im, "i")):
            if not val:
                continue
            factors = [u for u in (unit, f"r{m}" if m != 1 else "") if u]
            mag = abs(val)
            if factors:
                body = "*".join(factors) if mag == 1 else _fmt_q(mag) + "*" + "*".join(factors)
            else:
                body = _fmt_q(mag)
            parts.append(("-" if val < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_NAMES = {"i": I, **{f"r{m}": None for m in RADICALS if m != 1}}


def parse_scalar(text: str) -> ExactScalar:
    """Parse the exact scalar syntax: rationals, ``i``, ``r2`` ... ``r30``, ``+ - * /``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ScalarParseError(f"bad scalar {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return ExactScalar(node.value)
        if isinstance(node, ast.Name):
            if node.id == "i":
                return I
            if node.id.startswith("r") and node.id[1:].isdigit() and int(node.id[1:]) in RADICALS[1:]:
                return radical(int(node.id[1:]))
            raise ScalarParseError(f"unknown symbol {node.id!r} in {text!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            lhs, rhs = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return lhs + rhs
            if isinstance(node.op, ast.Sub):
                return lhs - rhs
            if isinstance(node.op, ast.Mult):
                return lhs * rhs
            if isinstance(node.op, ast.Div):
                if not rhs:
                    raise ScalarParseError(f"division by zero in {text!r}")
                return lhs / rhs
            if isinstance(node.op, ast.Pow) and isinstance(node.right, ast.Constant):
                return lhs ** node.right.value
        raise ScalarParseError(f"unsupported syntax in {text!r}")

    return ev(tree)


def approx_complex(x) -> complex:
    """Float value of an exact or float scalar."""
    if isinstance(x, ExactScalar):
        return complex(x)
    return complex(x)


def isclose(x, y, tol=1e-12) -> bool:
    return cmath.isclose(approx_complex(x), approx_complex(y), abs_tol=tol)
