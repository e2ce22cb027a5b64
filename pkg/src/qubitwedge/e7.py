"""The Lie algebra e7 realized as sl8 + (grade-4 multivectors).

Brackets:

* ``[X, Y] = XY - YX`` on sl8,
* ``[X, psi]`` is the derivation action of X on the 4-vector,
* ``[phi, psi]`` is the traceless part of the endomorphism ``M(phi, psi)`` whose
  transpose sends a covector ``a`` to ``vol_dual(phi ^ (a -| psi))``.

The overall scale of the last bracket is pinned by ``[e1234, e5678] =
diag(1,1,1,1,-1,-1,-1,-1)/2`` and comes out as 1.

Coordinates: the 63 entries of a traceless matrix in row-major order with the
(8, 8) entry dropped, followed by the 70 grade-4 ranks.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exterior import (
    DIM,
    MultiVector,
    derivation_action,
    interior,
    rank,
    sort_sign,
    subsets,
    vol_dual,
    wedge,
    zeros,
)
from .scalars import ZERO, ExactScalar, exact

SL8_INDEX = tuple((i, j) for i in range(DIM) for j in range(DIM) if (i, j) != (DIM - 1, DIM - 1))
N_EVEN = len(SL8_INDEX)
N_ODD = len(subsets(4))
N_E7 = N_EVEN + N_ODD
KAPPA = 1


def _zero_matrix(exact_regime=True) -> np.ndarray:
    if exact_regime:
        out = np.empty((DIM, DIM), dtype=object)
        out.fill(ZERO)
        return out
    return np.zeros((DIM, DIM), dtype=complex)


def trace(x: np.ndarray):
    acc = x[0, 0]
    for i in range(1, DIM):
        acc = acc + x[i, i]
    return acc


def traceless(x: np.ndarray) -> np.ndarray:
    t = trace(x)
    if not t:
        return x
    out = x.copy()
    shift = t / 8 if x.dtype == object else t / 8.0
    for i in range(DIM):
        out[i, i] = out[i, i] - shift
    return out


@dataclass(frozen=True, eq=False)
class E7Element:
    """Pair (traceless 8x8 matrix, grade-4 multivector)."""

    even: np.ndarray
    odd: MultiVector

    def __post_init__(self):
        if self.even.shape != (DIM, DIM):
            raise ValueError("even part must be 8x8")
        if self.odd.grade != 4:
            raise ValueError("odd part must have grade 4")
        t = trace(self.even)
        if (t if self.even.dtype == object else abs(t) > 1e-12):
            raise ValueError("even part must be traceless")

    @classmethod
    def from_matrix(cls, x) -> "E7Element":
        x = np.asarray(x)
        if x.dtype != object and x.dtype.kind in "iu":
            x = np.array([[exact(v) for v in row] for row in x.tolist()], dtype=object)
        return cls(x, MultiVector(4, exact_regime=x.dtype == object))

    @classmethod
    def from_multivector(cls, psi: MultiVector) -> "E7Element":
        return cls(_zero_matrix(psi.is_exact), psi)

    @classmethod
    def zero(cls) -> "E7Element":
        return cls(_zero_matrix(), MultiVector(4))

    @property
    def is_exact(self) -> bool:
        return self.even.dtype == object and self.odd.is_exact

    def __add__(self, other):
        return E7Element(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other):
        return E7Element(self.even - other.even, self.odd - other.odd)

    def __neg__(self):
        return E7Element(-self.even, -self.odd)

    def __mul__(self, c):
        c = exact(c) if self.is_exact else c
        return E7Element(self.even * c, self.odd * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, E7Element):
            return NotImplemented
        return bool(np.all(self.even == other.even)) and self.odd == other.odd

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(bool(v) for v in self.even.flat) and self.odd.is_zero()

    def coords(self) -> np.ndarray:
        ev = [self.even[i, j] for i, j in SL8_INDEX]
        return np.array(ev + list(self.odd.coeffs) + [None], dtype=object)[:-1] if self.is_exact \
            else np.array(ev + list(self.odd.coeffs), dtype=complex)

    @classmethod
    def from_coords(cls, v) -> "E7Element":
        v = list(v)
        if len(v) != N_E7:
            raise ValueError(f"need {N_E7} coordinates")
        exact_regime = not isinstance(v[0], (complex, float, np.complexfloating, np.floating))
        if exact_regime:
            v = [exact(c) for c in v]
        x = _zero_matrix(exact_regime)
        for (i, j), c in zip(SL8_INDEX, v[:N_EVEN]):
            x[i, j] = c
        acc = ZERO if exact_regime else 0j
        for i in range(DIM - 1):
            acc = acc - x[i, i]
        x[DIM - 1, DIM - 1] = acc
        odd = np.array(v[N_EVEN:] + [None], dtype=object)[:-1] if exact_regime else np.array(v[N_EVEN:], dtype=complex)
        return cls(x, MultiVector(4, odd))


def basis_element(b: int) -> E7Element:
    """The b-th coordinate basis vector of e7."""
    if b < N_EVEN:
        i, j = SL8_INDEX[b]
        x = _zero_matrix()
        x[i, j] = ExactScalar(1)
        if i == j:
            x[DIM - 1, DIM - 1] = ExactScalar(-1)
        return E7Element.from_matrix(x)
    psi = MultiVector(4)
    psi.coeffs[b - N_EVEN] = ExactScalar(1)
    return E7Element.from_multivector(psi)


def m_endomorphism(phi: MultiVector, psi: MultiVector) -> np.ndarray:
    """M(phi, psi): entry (k, j) is vol_dual(phi ^ (e_k* -| psi)) evaluated on e_j."""
    exact_regime = phi.is_exact and psi.is_exact
    m = _zero_matrix(exact_regime)
    for k in range(1, DIM + 1):
        alpha = MultiVector.basis(k, exact_regime=exact_regime)
        w = vol_dual(wedge(phi, interior(alpha, psi, conjugate=False)))
        for j in range(DIM):
            m[k - 1, j] = w.coeffs[j]
    return m


def p_bracket_direct(phi: MultiVector, psi: MultiVector) -> np.ndarray:
    """[phi, psi] in sl8 computed straight from the wedge/contraction construction."""
    return traceless(m_endomorphism(phi, psi)) * KAPPA


@lru_cache(maxsize=None)
def _p_table() -> dict:
    """(rank S, rank T) -> {(i, j): Fraction} for [e_S, e_T]; zero unless |S & T| <= 1."""
    table = {}
    subs = subsets(4)
    for rs, s in enumerate(subs):
        es = MultiVector.basis(*s)
        for rt, t in enumerate(subs):
            if len(set(s) & set(t)) > 1:
                continue
            x = p_bracket_direct(es, MultiVector.basis(*t))
            entries = {(i, j): x[i, j] for i in range(DIM) for j in range(DIM) if x[i, j]}
            if entries:
                table[rs, rt] = entries
    return table


def p_bracket(phi: MultiVector, psi: MultiVector) -> np.ndarray:
    """[phi, psi] in sl8 via the cached basis brackets."""
    exact_regime = phi.is_exact and psi.is_exact
    out = _zero_matrix(exact_regime)
    table = _p_table()
    pn = [(r, c) for r, c in enumerate(phi.coeffs) if c]
    qn = [(r, c) for r, c in enumerate(psi.coeffs) if c]
    for rs, a in pn:
        for rt, b in qn:
            entries = table.get((rs, rt))
            if entries is None:
                continue
            ab = a * b
            for (i, j), v in entries.items():
                out[i, j] = out[i, j] + ab * (v if exact_regime else complex(v))
    return out


def bracket(a: E7Element, b: E7Element) -> E7Element:
    even = a.even @ b.even - b.even @ a.even if a.is_exact else a.even.dot(b.even) - b.even.dot(a.even)
    even = even + p_bracket(a.odd, b.odd)
    odd = derivation_action(a.even, b.odd) - derivation_action(b.even, a.odd)
    return E7Element(even, odd)


def theta(a: E7Element) -> E7Element:
    return E7Element(a.even, -a.odd)


# Diagonal twist making the involution agree with e_ijkl -> e_{9-l,9-k,9-j,9-i}
# on every basis 4-vector with one index from each pair {s, 9-s}.
SIGMA_TWIST = (1, 1, 1, 1, -1, -1, -1, -1)


@lru_cache(maxsize=None)
def _sigma_signs() -> tuple:
    """Sign carried by e_S -> e_{S^c}, indexed by the rank of S."""
    out = []
    full = set(range(1, DIM + 1))
    for s in subsets(4):
        comp = tuple(sorted(full - set(s)))
        sign, _ = sort_sign(s + comp)
        for t in comp:
            sign *= SIGMA_TWIST[t - 1]
        out.append((rank(comp), sign))
    return tuple(out)


def sigma_odd(psi: MultiVector) -> MultiVector:
    out = zeros(4, psi.is_exact)
    for r, (rc, sign) in enumerate(_sigma_signs()):
        c = psi.coeffs[r]
        if c:
            out[rc] = c if sign > 0 else -c
    return MultiVector(4, out)


def sigma_even(x: np.ndarray) -> np.ndarray:
    """X -> -D X^T D with D = diag(SIGMA_TWIST); equals -X^T on diagonal matrices."""
    out = -x.T.copy()
    for i in range(DIM):
        for j in range(DIM):
            if SIGMA_TWIST[i] != SIGMA_TWIST[j]:
                out[i, j] = -out[i, j]
    return out


def sigma(a: E7Element) -> E7Element:
    """Involutive automorphism commuting with theta; sends diagonal H to -H."""
    return E7Element(sigma_even(a.even), sigma_odd(a.odd))


def _unit_on_basis(i: int, j: int, t: tuple) -> tuple:
    """E_ij (0-based) applied as a derivation to e_t: (sorted subset, sign) or None."""
    a, b = i + 1, j + 1
    if b not in t:
        return None
    if a == b:
        return t, 1
    if a in t:
        return None
    sign, u = sort_sign(tuple(a if x == b else x for x in t))
    return u, sign


def _even_on_odd(a: int, t: tuple) -> dict:
    """Coordinates (over the 70 odd ranks) of [basis_a, e_t] for an sl8 basis index a."""
    i, j = SL8_INDEX[a]
    out: dict = {}
    terms = [(i, j, 1)] + ([(DIM - 1, DIM - 1, -1)] if i == j else [])
    for p, q, c in terms:
        hit = _unit_on_basis(p, q, t)
        if hit is not None:
            r = rank(hit[0])
            out[r] = out.get(r, 0) + c * hit[1]
    return {r: v for r, v in out.items() if v}


@lru_cache(maxsize=None)
def structure_constants() -> tuple:
    """For each basis index a: tuple of (column b, row r, coefficient) of ad(basis_a)."""
    subs = subsets(4)
    ptab = _p_table()
    out = []
    for a in range(N_E7):
        entries = []
        for b in range(N_E7):
            if a < N_EVEN and b < N_EVEN:
                col = [(r, ExactScalar(c)) for r, c in _commutator_coords(a, b)]
            elif a < N_EVEN:
                col = [(N_EVEN + r, ExactScalar(c)) for r, c in _even_on_odd(a, subs[b - N_EVEN]).items()]
            elif b < N_EVEN:
                col = [(N_EVEN + r, ExactScalar(-c)) for r, c in _even_on_odd(b, subs[a - N_EVEN]).items()]
            else:
                x = ptab.get((a - N_EVEN, b - N_EVEN))
                if x is None:
                    continue
                col = _matrix_coords(x)
            entries.extend((b, r, c) for r, c in col)
        out.append(tuple(entries))
    return tuple(out)


def _matrix_coords(entries: dict) -> list:
    """Sparse coordinates of a traceless matrix given as {(i, j): value}."""
    out = []
    for b, (i, j) in enumerate(SL8_INDEX):
        v = entries.get((i, j))
        if v:
            out.append((b, v))
    return out


def _unit_int(b: int) -> np.ndarray:
    i, j = SL8_INDEX[b]
    m = np.zeros((DIM, DIM), dtype=np.int64)
    m[i, j] = 1
    if i == j:
        m[DIM - 1, DIM - 1] = -1
    return m


def _commutator_coords(a: int, b: int) -> list:
    x, y = _unit_int(a), _unit_int(b)
    c = x @ y - y @ x
    return [(k, int(c[i, j])) for k, (i, j) in enumerate(SL8_INDEX) if c[i, j]]


def ad_sparse(a: E7Element) -> dict:
    """ad(a) as {(row, col): ExactScalar} over the e7 coordinates."""
    out: dict = {}
    sc = structure_constants()
    for idx, coeff in enumerate(a.coords()):
        if not coeff:
            continue
        for b, r, c in sc[idx]:
            v = coeff * c
            key = (r, b)
            if key in out:
                v = out[key] + v
                if v:
                    out[key] = v
                else:
                    del out[key]
            else:
                out[key] = v
    return out


def ad_matrix(a: E7Element) -> np.ndarray:
    """Dense 133x133 adjoint matrix: ad_matrix(a) @ coords(b) = coords([a, b])."""
    m = np.empty((N_E7, N_E7), dtype=object)
    m.fill(ZERO)
    for (r, c), v in ad_sparse(a).items():
        m[r, c] = v
    return m
