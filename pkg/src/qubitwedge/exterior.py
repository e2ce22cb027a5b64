"""Graded exterior algebra of an 8-dimensional space.

Basis 1-vectors are numbered 1..8.  A grade-k element is a dense array of
``C(8, k)`` coefficients indexed by the lexicographic rank of the sorted
k-subset.  Coefficients are either ``ExactScalar`` (object arrays) or
``complex128``; every operation keeps the regime of its inputs.

Inner products are conjugate-linear in the first argument.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .scalars import ZERO, exact

DIM = 8


class GradeOverflow(ValueError):
    pass


class GradeUnderflow(ValueError):
    pass


class GradeMismatch(ValueError):
    pass


@lru_cache(maxsize=None)
def subsets(k: int) -> tuple:
    """Sorted k-subsets of {1..8} in rank order."""
    return tuple(combinations(range(1, DIM + 1), k))


@lru_cache(maxsize=None)
def _rank_table(k: int) -> dict:
    return {s: r for r, s in enumerate(subsets(k))}


def rank(s) -> int:
    return _rank_table(len(s))[tuple(s)]


def sort_sign(idx) -> tuple[int, tuple]:
    """Sign of the permutation sorting ``idx`` and the sorted tuple; sign 0 on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, tuple(sorted(idx))
    sign = 1
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] > idx[b]:
                sign = -sign
    return sign, tuple(sorted(idx))


def _is_exact_array(arr: np.ndarray) -> bool:
    return arr.dtype == object


def zeros(k: int, exact_regime: bool = True) -> np.ndarray:
    n = comb(DIM, k)
    if exact_regime:
        out = np.empty(n, dtype=object)
        out.fill(ZERO)
        return out
    return np.zeros(n, dtype=complex)


class MultiVector:
    """Homogeneous element of the exterior algebra."""

    __slots__ = ("grade", "coeffs")

    def __init__(self, grade: int, coeffs=None, *, exact_regime: bool = True):
        if not 0 <= grade <= DIM:
            raise ValueError(f"grade {grade} out of range")
        self.grade = grade
        if coeffs is None:
            self.coeffs = zeros(grade, exact_regime)
        else:
            arr = np.asarray(coeffs)
            if arr.shape != (comb(DIM, grade),):
                raise ValueError(f"grade {grade} needs {comb(DIM, grade)} coefficients, got {arr.shape}")
            if arr.dtype == object or arr.dtype.kind in "iu":
                arr = np.array([exact(c) for c in arr.tolist()] + [None], dtype=object)[:-1]
            else:
                arr = arr.astype(complex)
            self.coeffs = arr

    # -- construction ---------------------------------------------------------
    @classmethod
    def basis(cls, *idx, coeff=1, exact_regime: bool = True) -> "MultiVector":
        """``coeff * e_{idx}`` with the indices sign-normalized into sorted order."""
        if len(idx) == 1 and not isinstance(idx[0], int):
            idx = tuple(idx[0])
        sign, s = sort_sign(idx)
        mv = cls(len(idx), exact_regime=exact_regime)
        if sign:
            c = exact(coeff) if exact_regime else complex(coeff)
            mv.coeffs[rank(s)] = c if sign > 0 else -c
        return mv

    @classmethod
    def from_dict(cls, grade: int, terms: dict, exact_regime: bool = True) -> "MultiVector":
        mv = cls(grade, exact_regime=exact_regime)
        for idx, c in terms.items():
            mv = mv + cls.basis(*idx, coeff=c, exact_regime=exact_regime)
        return mv

    @property
    def is_exact(self) -> bool:
        return _is_exact_array(self.coeffs)

    def support(self) -> list:
        """Sorted index tuples with non-zero coefficient."""
        subs = subsets(self.grade)
        return [subs[r] for r in np.flatnonzero([bool(c) for c in self.coeffs])]

    def items(self):
        subs = subsets(self.grade)
        for r, c in enumerate(self.coeffs):
            if c:
                yield subs[r], c

    def __getitem__(self, idx):
        sign, s = sort_sign(idx)
        if not sign:
            return ZERO if self.is_exact else 0j
        c = self.coeffs[rank(s)]
        return c if sign > 0 else -c

    def to_float(self) -> "MultiVector":
        if not self.is_exact:
            return self
        return MultiVector(self.grade, np.array([complex(c) for c in self.coeffs], dtype=complex))

    def conj(self) -> "MultiVector":
        if self.is_exact:
            return MultiVector(self.grade, np.array([c.conj() for c in self.coeffs] + [None], dtype=object)[:-1])
        return MultiVector(self.grade, self.coeffs.conj())

    # -- vector space ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        if other.grade != self.grade:
            raise GradeMismatch(f"cannot add grades {self.grade} and {other.grade}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return _wrap(self.grade, self.coeffs + other.coeffs)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return _wrap(self.grade, self.coeffs - other.coeffs)

    def __neg__(self):
        return _wrap(self.grade, -self.coeffs)

    def __mul__(self, scalar):
        if isinstance(scalar, MultiVector):
            return NotImplemented
        if self.is_exact:
            scalar = exact(scalar)
        return _wrap(self.grade, self.coeffs * scalar)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultiVector) or other.grade != self.grade:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(bool(c) for c in self.coeffs)

    def norm2(self):
        """Squared norm, exact when the coefficients are exact."""
        if self.is_exact:
            acc = ZERO
            for c in self.coeffs:
                if c:
                    acc = acc + c.conj() * c
            return acc
        return float(np.vdot(self.coeffs, self.coeffs).real)

    def __repr__(self):
        terms = " + ".join(f"({c})e{''.join(map(str, s))}" for s, c in self.items())
        return f"MultiVector[{self.grade}]({terms or '0'})"


def _wrap(grade: int, arr: np.ndarray) -> MultiVector:
    mv = MultiVector.__new__(MultiVector)
    mv.grade = grade
    mv.coeffs = arr
    return mv


# -- products -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _wedge_table(j: int, k: int) -> dict:
    """(rank S, rank T) -> (rank of S u T, sign) for disjoint S, T."""
    table = {}
    for rs, s in enumerate(subsets(j)):
        for rt, t in enumerate(subsets(k)):
            sign, u = sort_sign(s + t)
            if sign:
                table[rs, rt] = (rank(u), sign)
    return table


def wedge(u: MultiVector, v: MultiVector) -> MultiVector:
    if u.grade + v.grade > DIM:
        raise GradeOverflow(f"grade {u.grade} + {v.grade} exceeds {DIM}")
    exact_regime = u.is_exact and v.is_exact
    out = zeros(u.grade + v.grade, exact_regime)
    table = _wedge_table(u.grade, v.grade)
    un = [(r, c) for r, c in enumerate(u.coeffs) if c]
    vn = [(r, c) for r, c in enumerate(v.coeffs) if c]
    for rs, a in un:
        for rt, b in vn:
            hit = table.get((rs, rt))
            if hit is not None:
                r, sign = hit
                out[r] = out[r] + a * b if sign > 0 else out[r] - a * b
    return _wrap(u.grade + v.grade, out)


@lru_cache(maxsize=None)
def _interior_table(j: int, k: int) -> dict:
    """(rank S, rank T) -> (rank of T minus S, sign) where e_T = sign * e_S ^ e_{T-S}."""
    table = {}
    for rt, t in enumerate(subsets(k)):
        for rs, s in enumerate(subsets(j)):
            if set(s) <= set(t):
                rest = tuple(x for x in t if x not in s)
                sign, _ = sort_sign(s + rest)
                table[rs, rt] = (rank(rest), sign)
    return table


def interior(a: MultiVector, psi: MultiVector, conjugate: bool = True) -> MultiVector:
    """Left contraction of ``psi`` by ``a``.

    With ``conjugate=True`` this is the partial inner product (conjugate-linear in
    ``a``), adjoint to left wedge by ``a``.  With ``conjugate=False`` ``a`` is read
    as a functional in the dual basis and the contraction is bilinear.
    """
    if a.grade > psi.grade:
        raise GradeUnderflow(f"cannot contract grade {a.grade} into grade {psi.grade}")
    exact_regime = a.is_exact and psi.is_exact
    out = zeros(psi.grade - a.grade, exact_regime)
    table = _interior_table(a.grade, psi.grade)
    an = [(r, (c.conj() if exact_regime else np.conj(c)) if conjugate else c)
          for r, c in enumerate(a.coeffs) if c]
    pn = [(r, c) for r, c in enumerate(psi.coeffs) if c]
    for rs, x in an:
        for rt, y in pn:
            hit = table.get((rs, rt))
            if hit is not None:
                r, sign = hit
                out[r] = out[r] + x * y if sign > 0 else out[r] - x * y
    return _wrap(psi.grade - a.grade, out)


def inner(a: MultiVector, b: MultiVector):
    """Hermitian inner product, conjugate-linear in ``a``."""
    if a.grade != b.grade:
        raise GradeMismatch("inner product of different grades")
    return interior(a, b).coeffs[0]


@lru_cache(maxsize=None)
def _vol_table(k: int) -> tuple:
    """For each rank S of grade 8-k: (rank of complement, sign with e_{S^c} ^ e_S = sign vol)."""
    out = []
    full = tuple(range(1, DIM + 1))
    for s in subsets(DIM - k):
        c = tuple(x for x in full if x not in s)
        sign, _ = sort_sign(c + s)
        out.append((rank(c), sign))
    return tuple(out)


def vol_dual(x: MultiVector) -> MultiVector:
    """Coefficients y with ``x ^ e_S = y_S e_{12345678}``, as a grade 8-k array."""
    out = zeros(DIM - x.grade, x.is_exact)
    for r, (rc, sign) in enumerate(_vol_table(x.grade)):
        c = x.coeffs[rc]
        if c:
            out[r] = c if sign > 0 else -c
    return _wrap(DIM - x.grade, out)


def pairing(y: MultiVector, x: MultiVector):
    """Bilinear pairing of a functional ``y`` with ``x`` of the same grade."""
    if y.grade != x.grade:
        raise GradeMismatch("pairing needs equal grades")
    acc = ZERO if (x.is_exact and y.is_exact) else 0j
    for a, b in zip(y.coeffs, x.coeffs):
        if a and b:
            acc = acc + a * b
    return acc


# -- matrices -----------------------------------------------------------------------

def matrix8(rows) -> np.ndarray:
    """8x8 exact matrix (object array of ExactScalar) from nested values."""
    arr = np.empty((DIM, DIM), dtype=object)
    for i in range(DIM):
        for j in range(DIM):
            arr[i, j] = exact(rows[i][j])
    return arr


def identity8() -> np.ndarray:
    return matrix8([[1 if i == j else 0 for j in range(DIM)] for i in range(DIM)])


def diag8(values) -> np.ndarray:
    values = list(values)
    return matrix8([[values[i] if i == j else 0 for j in range(DIM)] for i in range(DIM)])


def unit8(i: int, j: int) -> np.ndarray:
    """Matrix unit E_ij (1-based indices)."""
    return matrix8([[1 if (r, c) == (i - 1, j - 1) else 0 for c in range(DIM)] for r in range(DIM)])


def _columns(g: np.ndarray) -> list:
    return [[(r + 1, g[r, s]) for r in range(DIM) if g[r, s]] for s in range(DIM)]


def _wedge_columns(cols, s) -> dict:
    """g e_{s1} ^ ... ^ g e_{sk} as {sorted tuple: coeff}."""
    acc = {(): None}
    for x in s:
        new = {}
        for t, c in acc.items():
            for r, v in cols[x - 1]:
                if r in t:
                    continue
                pos = sum(1 for y in t if y > r)
                key = tuple(sorted(t + (r,)))
                val = v if c is None else c * v
                if pos & 1:
                    val = -val
                new[key] = new[key] + val if key in new else val
        acc = new
    return acc


def compound(g: np.ndarray, psi: MultiVector) -> MultiVector:
    """Induced action of ``g`` on the grade of ``psi``."""
    if not psi.is_exact or g.dtype != object:
        cg = compound_matrix(np.asarray(g, dtype=complex), psi.grade)
        return _wrap(psi.grade, cg @ np.asarray(psi.coeffs, dtype=complex))
    if psi.grade == 0:
        return psi
    cols = _columns(g)
    out = zeros(psi.grade, True)
    subs = subsets(psi.grade)
    for r, c in enumerate(psi.coeffs):
        if not c:
            continue
        for t, v in _wedge_columns(cols, subs[r]).items():
            rt = rank(t)
            out[rt] = out[rt] + c * v
    return _wrap(psi.grade, out)


def compound_matrix(g: np.ndarray, k: int) -> np.ndarray:
    """The C(8,k) x C(8,k) matrix of k x k minors of ``g`` (rows T, columns S)."""
    subs = subsets(k)
    n = len(subs)
    if g.dtype == object:
        cols = _columns(g)
        out = np.empty((n, n), dtype=object)
        out.fill(ZERO)
        for rs, s in enumerate(subs):
            for t, v in _wedge_columns(cols, s).items():
                out[rank(t), rs] = v
        return out
    if k == 0:
        return np.ones((1, 1), dtype=complex)
    idx = np.array(subs) - 1
    sub = g[idx[:, None, :, None], idx[None, :, None, :]]
    return np.linalg.det(sub)


def derivation_action(x: np.ndarray, psi: MultiVector) -> MultiVector:
    """Infinitesimal action: X(v1^...^vk) = sum_i v1^...^Xv_i^...^vk."""
    exact_regime = psi.is_exact and x.dtype == object
    out = zeros(psi.grade, exact_regime)
    cols = [[(r + 1, x[r, s]) for r in range(DIM) if x[r, s]] for s in range(DIM)]
    subs = subsets(psi.grade)
    table = _rank_table(psi.grade)
    for rk, c in enumerate(psi.coeffs):
        if not c:
            continue
        s = subs[rk]
        for slot, col in enumerate(s):
            for r, v in cols[col - 1]:
                if r != col and r in s:
                    continue
                sign, t = sort_sign(s[:slot] + (r,) + s[slot + 1:])
                rt = table[t]
                out[rt] = out[rt] + c * v if sign > 0 else out[rt] - c * v
    return _wrap(psi.grade, out)
