"""Jordan-Chevalley decomposition of 4-vectors viewed inside e7.

The semisimple part of ``ad(psi)`` is a polynomial in ``ad(psi)``.  Applying it to
a regular diagonal ``H`` gives ``[psi_s, H] = -h_S (psi_s)_S`` coordinatewise, so one
Krylov space (that of ``H``) is enough: its minimal polynomial ``mu`` is lifted to
``q`` with ``q(ad psi)`` semisimple by Newton iteration modulo ``mu``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .e7 import N_EVEN, N_E7, SL8_INDEX, E7Element, ad_sparse, p_bracket
from .exterior import MultiVector, subsets
from .linalg import InconsistentState, krylov_minpoly, poly_apply, rows_from_entries, semisimple_polynomial
from .scalars import exact

# Diagonal of a regular element: no sum of four distinct entries vanishes.
H_REGULAR = (1, 2, 4, 8, 16, 32, 64, -127)


class FieldRestriction(ValueError):
    """Coefficients outside the Gaussian rationals."""


@dataclass(frozen=True, eq=False)
class JordanSplit:
    semisimple_part: MultiVector
    nilpotent_part: MultiVector

    def __iter__(self):
        return iter((self.semisimple_part, self.nilpotent_part))


def _check_field(psi: MultiVector) -> None:
    if psi.grade != 4:
        raise ValueError("Jordan decomposition is implemented for grade-4 inputs")
    if not psi.is_exact:
        raise FieldRestriction("exact coefficients required")
    for c in psi.coeffs:
        if c and not c.is_gaussian():
            raise FieldRestriction(f"coefficient {c} is not a Gaussian rational")


def _denominator(psi: MultiVector) -> int:
    den = 1
    for c in psi.coeffs:
        if c:
            re, im = c.gaussian_parts()
            den = lcm(den, int(re.denominator), int(im.denominator))
    return den


def _h_vector() -> dict:
    """Coordinates of diag(H_REGULAR) in the e7 basis (the (8,8) entry is implied)."""
    return {b: exact(H_REGULAR[i]) for b, (i, j) in enumerate(SL8_INDEX) if i == j}


def _h_weights() -> list:
    return [sum(H_REGULAR[t - 1] for t in s) for s in subsets(4)]


def jordan_decompose(psi: MultiVector) -> JordanSplit:
    """Exact split psi = psi_s + psi_n with commuting semisimple and nilpotent parts."""
    _check_field(psi)
    if psi.is_zero():
        return JordanSplit(MultiVector(4), MultiVector(4))
    den = _denominator(psi)
    scaled = psi * den                      # Gaussian-integer coordinates
    rows = rows_from_entries(ad_sparse(E7Element.from_multivector(scaled)))
    v = _h_vector()
    q = semisimple_polynomial(krylov_minpoly(rows, v))
    image = poly_apply(rows, q, v)          # [scaled_s, H]
    if any(k < N_EVEN for k in image):
        raise InconsistentState("semisimple image has an sl8 component")
    weights = _h_weights()
    semi = MultiVector(4)
    inv_den = exact(1) / den
    for k, c in image.items():
        r = k - N_EVEN
        semi.coeffs[r] = -c * inv_den / weights[r]
    nil = psi - semi
    if not _commute(semi, nil):
        raise InconsistentState("parts of the Jordan split do not commute")
    return JordanSplit(semi, nil)


def _commute(a: MultiVector, b: MultiVector) -> bool:
    m = p_bracket(a, b)
    return not any(x for x in m.flat)


def is_semisimple(psi: MultiVector) -> bool:
    return jordan_decompose(psi).nilpotent_part.is_zero()


def is_nilpotent(psi: MultiVector) -> bool:
    return jordan_decompose(psi).semisimple_part.is_zero()


def nilpotency_index(psi: MultiVector, limit: int = N_E7) -> int:
    """Smallest k with ad(psi)^k = 0, or 0 when psi is not nilpotent within ``limit``."""
    rows = rows_from_entries(ad_sparse(E7Element.from_multivector(psi)))
    from .linalg import matvec

    vecs = [{b: exact(1)} for b in range(N_E7)]
    for k in range(1, limit + 1):
        vecs = [w for w in (matvec(rows, v) for v in vecs) if w]
        if not vecs:
            return k
    return 0
