"""SL8 invariants of 4-vectors through a 28x28 matrix of quadratic forms.

``A(psi)`` acts on bivectors: ``x`` goes to the functional ``vol_dual(x ^ psi)`` on
bivectors, which is then contracted into ``psi``.  The degree-d generator is
``f_d = tr A^(d/2)`` for d in 2, 6, 8, 10, 12, 14, 18.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import numpy as np

from .canonical import QubitState, a_state, embed, is_sov, unembed
from .exterior import DIM, MultiVector, rank, sort_sign, subsets
from .scalars import ZERO, ExactScalar, exact

DEGREES = (2, 6, 8, 10, 12, 14, 18)
GENERATOR_DEGREES = (2, 6, 8, 12)
N_BIV = len(subsets(2))


class SingularSystem(ArithmeticError):
    """The interpolation sample does not determine the polynomial."""


@lru_cache(maxsize=None)
def _tables():
    """Sparse incidence data for the two linear maps composing A(psi).

    beta:  rank U -> [(row S, col T, sign)] with e_T ^ e_U ^ e_S = sign * vol
    gamma: rank U -> [(row R, col S, sign)] with e_U = sign * e_S ^ e_R
    """
    full = set(range(1, DIM + 1))
    biv = subsets(2)
    beta, gamma = [], []
    for u in subsets(4):
        rest = sorted(full - set(u))
        b = []
        for t in biv:
            if not set(t) <= set(rest):
                continue
            s = tuple(x for x in rest if x not in t)
            sign, _ = sort_sign(t + u + s)
            b.append((rank(s), rank(t), sign))
        beta.append(tuple(b))
        g = []
        for s in biv:
            if not set(s) <= set(u):
                continue
            r = tuple(x for x in u if x not in s)
            sign, _ = sort_sign(s + r)
            g.append((rank(r), rank(s), sign))
        gamma.append(tuple(g))
    return tuple(beta), tuple(gamma)


def _linear_part(psi: MultiVector, table) -> np.ndarray:
    exact_regime = psi.is_exact
    if exact_regime:
        out = np.empty((N_BIV, N_BIV), dtype=object)
        out.fill(ZERO)
    else:
        out = np.zeros((N_BIV, N_BIV), dtype=complex)
    for u, c in enumerate(psi.coeffs):
        if not c:
            continue
        for r, col, sign in table[u]:
            out[r, col] = out[r, col] + c if sign > 0 else out[r, col] - c
    return out


def katanova_matrix(psi: MultiVector) -> np.ndarray:
    """28x28 matrix on bivectors (lexicographic pair order), quadratic in ``psi``."""
    if psi.grade != 4:
        raise ValueError("katanova_matrix needs a grade-4 multivector")
    beta, gamma = _tables()
    return _linear_part(psi, gamma) @ _linear_part(psi, beta)


def _trace(m):
    acc = m[0, 0]
    for i in range(1, m.shape[0]):
        acc = acc + m[i, i]
    return acc


def _trace_product(x, y):
    """tr(x @ y) without forming the product."""
    acc = ZERO if x.dtype == object else 0j
    for i in range(x.shape[0]):
        for j in range(x.shape[1]):
            a = x[i, j]
            if a:
                b = y[j, i]
                if b:
                    acc = acc + a * b
    return acc


def all_invariants(psi: MultiVector) -> dict:
    """{d: f_d(psi)} for all seven generator degrees."""
    a1 = katanova_matrix(psi)
    a2 = a1 @ a1
    a3 = a2 @ a1
    a4 = a2 @ a2
    a5 = a4 @ a1
    return {
        2: _trace(a1),
        6: _trace_product(a1, a2),
        8: _trace_product(a2, a2),
        10: _trace_product(a2, a3),
        12: _trace_product(a3, a3),
        14: _trace_product(a3, a4),
        18: _trace_product(a4, a5),
    }


def invariant(psi: MultiVector, d: int):
    if d not in DEGREES:
        raise ValueError(f"degree must be one of {DEGREES}")
    a1 = katanova_matrix(psi)
    n = d // 2
    if n == 1:
        return _trace(a1)
    half = n // 2
    left = _matrix_power(a1, half)
    right = left if n - half == half else left @ a1
    return _trace_product(left, right)


def _matrix_power(m, n):
    out = m
    for _ in range(n - 1):
        out = out @ m
    return out


@dataclass(frozen=True)
class InvariantQuadruple:
    f2: ExactScalar
    f6: ExactScalar
    f8: ExactScalar
    f12: ExactScalar

    def as_tuple(self) -> tuple:
        return (self.f2, self.f6, self.f8, self.f12)

    def __iter__(self):
        return iter(self.as_tuple())


def _quad(values: dict) -> InvariantQuadruple:
    return InvariantQuadruple(*(exact(values[d]) for d in GENERATOR_DEGREES))


def restricted_invariants(phi: QubitState) -> InvariantQuadruple:
    a1 = katanova_matrix(embed(phi))
    a2 = a1 @ a1
    a3 = a2 @ a1
    return InvariantQuadruple(
        exact(_trace(a1)), exact(_trace_product(a1, a2)),
        exact(_trace_product(a2, a2)), exact(_trace_product(a3, a3)),
    )


# -- the three relations among restricted generators --------------------------------

# Degree-18 coefficients that differ from an exact refit over random SOV states;
# keyed by exponents of (f2, f6, f8, f12).
PRINTED_F18 = {
    (5, 0, 1, 0): -(2**7) * 3**2 * 5 * 8989,
    (3, 0, 0, 1): 2**10 * 5**2 * 7**2 * 13513,
    (0, 1, 0, 1): 2**12 * 5 * 71 * 127 * 1409,
}
REFIT_F18 = {
    (5, 0, 1, 0): -(2**7) * 3**2 * 5 * 89891,
    (3, 0, 0, 1): 2**13 * 3**4 * 5**2 * 419,
    (0, 1, 0, 1): 2**18 * 3**8 * 5 * 7,
}
VARIANTS = ("printed", "refit")


def _identity_sides(f: dict, variant: str = "printed", c18: dict | None = None) -> list:
    """(name, lhs, rhs) triples; ``c18`` overrides the three variant coefficients."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if c18 is None:
        c18 = PRINTED_F18 if variant == "printed" else REFIT_F18
    f2, f6, f8, f10, f12, f14, f18 = (f[d] for d in DEGREES)
    i1 = (
        2**9 * 3**4 * f10,
        f2 * (7 * f2**4 - 2**5 * 7 * 9 * f2 * f6 + 2**6 * 3**5 * f8),
    )
    i2 = (
        2**14 * 3**7 * 5 * f14,
        2**5 * 7 * 11 * 317 * f2**4 * f6
        - 11 * 251 * f2**7
        - 2**10 * 3**2 * 7 * 11 * 13 * f2 * f6**2
        + 2**11 * 3**4 * 7 * 71 * f2 * f12
        + 2**11 * 3**5 * 7 * 11 * f6 * f8
        - 2**6 * 3**2 * 7 * 11 * 103 * f2**3 * f8,
    )
    i3 = (
        2**19 * 3**9 * 5**2 * f18,
        -(5**2) * 13903 * f2**9
        + 2**7 * 5 * 89 * 1609 * f2**6 * f6
        + c18[5, 0, 1, 0] * f2**5 * f8
        + 2**12 * 3**2 * 37 * 109 * f2**3 * f6**2
        + c18[3, 0, 0, 1] * f2**3 * f12
        - 2**15 * 3**6 * 349 * f2**2 * f6 * f8
        + 2**12 * 3**9 * 331 * f2 * f8**2
        - 2**21 * 3**5 * 5 * f6**3
        + c18[0, 1, 0, 1] * f6 * f12,
    )
    return [("f10", *i1), ("f14", *i2), ("f18", *i3)]


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: ExactScalar
    rhs: ExactScalar

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def residual(self) -> ExactScalar:
        return self.lhs - self.rhs


def verify_appendix_identities(psi: MultiVector, variant: str = "printed") -> list:
    """Evaluate both sides of the degree 10, 14 and 18 relations on an SOV vector.

    ``variant="refit"`` swaps in the three degree-18 coefficients recovered by
    exact interpolation (see ``REFIT_F18``); the other coefficients are shared.
    """
    if not is_sov(psi):
        unembed(psi)  # raises NotSOV with the offending indices
    f = {d: exact(v) for d, v in all_invariants(psi).items()}
    return [IdentityCheck(name, exact(l), exact(r)) for name, l, r in _identity_sides(f, variant)]


# -- genericity polynomial ----------------------------------------------------------

def f_product(a, b, c, d):
    """Product of all pairwise differences of the squares of a, b, c, d."""
    sq = [exact(x) ** 2 for x in (a, b, c, d)]
    acc = exact(1)
    for i in range(4):
        for j in range(i + 1, 4):
            acc = acc * (sq[i] - sq[j])
    return acc


def _weighted_monomials(weight: int) -> tuple:
    """Exponent tuples (i, j, k, l) with 2i + 6j + 8k + 12l = weight."""
    out = []
    for l in range(weight // 12 + 1):
        for k in range((weight - 12 * l) // 8 + 1):
            for j in range((weight - 12 * l - 8 * k) // 6 + 1):
                rest = weight - 12 * l - 8 * k - 6 * j
                if rest % 2 == 0:
                    out.append((rest // 2, j, k, l))
    return tuple(sorted(out, reverse=True))


MONOMIALS_24 = _weighted_monomials(24)


def _eval_monomials(q: InvariantQuadruple, monomials) -> list:
    vals = q.as_tuple()
    out = []
    for exps in monomials:
        acc = exact(1)
        for v, e in zip(vals, exps):
            if e:
                acc = acc * v**e
        out.append(acc)
    return out


@dataclass(frozen=True)
class GenericityPolynomial:
    """P(z1, z2, z3, z4) with P(f2', f6', f8', f12') = f^2 on the 4-dim subspace."""

    monomials: tuple
    coefficients: tuple

    def __call__(self, q: InvariantQuadruple) -> ExactScalar:
        acc = ZERO
        for c, m in zip(self.coefficients, _eval_monomials(q, self.monomials)):
            if c:
                acc = acc + m * c
        return acc

    def terms(self):
        return [(m, c) for m, c in zip(self.monomials, self.coefficients) if c]

    def __str__(self):
        names = ("z1", "z2", "z3", "z4")
        parts = []
        for exps, c in self.terms():
            mono = "*".join(f"{n}^{e}" if e > 1 else n for n, e in zip(names, exps) if e)
            parts.append(f"({c})*{mono}")
        return " + ".join(parts) or "0"


def _solve_rational(rows: list, rhs: list) -> list:
    """Exact Gaussian elimination on a square-or-tall rational system."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_row = 0
    pivots = []
    for col in range(n):
        p = next((r for r in range(piv_row, len(aug)) if aug[r][col] != 0), None)
        if p is None:
            raise SingularSystem(f"no pivot in column {col}")
        aug[piv_row], aug[p] = aug[p], aug[piv_row]
        inv = 1 / aug[piv_row][col]
        aug[piv_row] = [x * inv for x in aug[piv_row]]
        for r in range(len(aug)):
            if r != piv_row and aug[r][col] != 0:
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[piv_row])]
        pivots.append(col)
        piv_row += 1
    for r in range(piv_row, len(aug)):
        if aug[r][n] != 0:
            raise SingularSystem("inconsistent overdetermined system")
    return [aug[i][n] for i in range(n)]


def _random_a_point(rng: random.Random) -> tuple:
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4))


def interpolate_genericity(seed: int = 0, extra: int = 4) -> GenericityPolynomial:
    """Fit f(a,b,c,d)^2 by the 16 weighted monomials, at random rational points."""
    rng = random.Random(seed)
    n = len(MONOMIALS_24)
    rows, rhs = [], []
    for _ in range(n + extra):
        pt = _random_a_point(rng)
        q = restricted_invariants(a_state(*pt))
        rows.append([_as_fraction(v) for v in _eval_monomials(q, MONOMIALS_24)])
        rhs.append(_as_fraction(f_product(*pt) ** 2))
    coeffs = _solve_rational(rows, rhs)
    return GenericityPolynomial(MONOMIALS_24, tuple(exact(c) for c in coeffs))


def _as_fraction(x: ExactScalar) -> Fraction:
    if not x.is_rational():
        raise ValueError("expected a rational value")
    re, _ = x.gaussian_parts()
    return Fraction(int(re.numerator), int(re.denominator))


@lru_cache(maxsize=1)
def genericity_polynomial() -> GenericityPolynomial:
    return interpolate_genericity()


def is_generic(phi: QubitState) -> bool:
    """Sufficient test for the generic set: semisimple with nonvanishing P."""
    from .jordan import is_semisimple

    if not genericity_polynomial()(restricted_invariants(phi)):
        return False
    return is_semisimple(embed(phi))
