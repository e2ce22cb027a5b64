"""Factor SU(8) unitaries that keep a generic embedded state single-occupancy.

Such a unitary is a permutation of the four 2x2 diagonal blocks with unitary
blocks.  It splits as ``U = U' S`` with ``U'`` a local SU(2)^4 operator followed by
a qubit permutation and ``S`` a block scalar ``diag(l1 I2, ..., l4 I2)`` with
``l1 l2 l3 l4 = 1``; ``S`` fixes every single-occupancy 4-vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .canonical import LocalOperator, QubitState, embed, perm_sign
from .exterior import DIM, MultiVector, compound, interior, subsets

DEFAULT_TOL = 1e-8


class NotBlockPermutation(ValueError):
    def __init__(self, block_norms: np.ndarray, reason: str = ""):
        self.block_norms = block_norms
        msg = "matrix is not a permutation of 2x2 blocks"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg + "; block norms:\n" + np.array2string(block_norms, precision=3))


class NotGeneric(ValueError):
    pass


class NotSOVImage(ValueError):
    pass


class NotUnitary(ValueError):
    pass


def _float_mv(psi: MultiVector) -> MultiVector:
    return psi if not psi.is_exact else psi.to_float()


def partial_inner_products(psi: MultiVector) -> list:
    """The four grade-2 contractions <e_{2k-1,2k} | psi>."""
    psi = _float_mv(psi)
    return [interior(MultiVector.basis(2 * k + 1, 2 * k + 2, exact_regime=False), psi) for k in range(4)]


def is_sov_approx(psi: MultiVector, tol: float = DEFAULT_TOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    psi = _float_mv(psi)
    scale = np.linalg.norm(psi.coeffs)
    if scale == 0:
        return True
    return all(np.linalg.norm(c.coeffs) <= tol * scale for c in partial_inner_products(psi))


def block(u: np.ndarray, r: int, c: int) -> np.ndarray:
    return u[2 * r:2 * r + 2, 2 * c:2 * c + 2]


def block_norms(u: np.ndarray) -> np.ndarray:
    """Frobenius norms of the 16 blocks, scaled so a unitary block has norm 1."""
    scale = np.linalg.norm(u) / np.sqrt(DIM)
    out = np.empty((4, 4))
    for r in range(4):
        for c in range(4):
            out[r, c] = np.linalg.norm(block(u, r, c)) / (np.sqrt(2) * scale)
    return out


@dataclass(frozen=True, eq=False)
class BlockPermFactorization:
    """``U = P(blocks) @ diag(l_k I2)`` where column block k of P holds ``blocks[k]``
    in row block ``perm[k]``."""

    perm: tuple
    blocks: tuple
    lambdas: tuple
    residual: float

    def unitary_part(self) -> np.ndarray:
        out = np.zeros((DIM, DIM), dtype=complex)
        for k, g in enumerate(self.blocks):
            r = self.perm[k]
            out[2 * r:2 * r + 2, 2 * k:2 * k + 2] = g
        return out

    def scalar_part(self) -> np.ndarray:
        return np.diag(np.repeat(np.asarray(self.lambdas, dtype=complex), 2))

    def reassemble(self) -> np.ndarray:
        return self.unitary_part() @ self.scalar_part()

    def local_operator(self) -> LocalOperator:
        """The qubit-level operator whose 8x8 realization is ``unitary_part()``."""
        gates = [np.array(g, dtype=complex) for g in self.blocks]
        if perm_sign(self.perm) < 0:
            gates[0] = -gates[0]
        return LocalOperator(tuple(gates), tuple(self.perm))


def _check_unitary(u: np.ndarray, tol: float) -> None:
    if u.shape != (DIM, DIM):
        raise ValueError("expected an 8x8 matrix")
    if not np.all(np.isfinite(u)):
        raise ValueError("matrix has non-finite entries")
    err = np.linalg.norm(u.conj().T @ u - np.eye(DIM))
    if err > max(tol, 1e-12) * DIM:
        raise NotUnitary(f"U^dagger U deviates from the identity by {err:.3e}")


def factor_block_perm(u, tol: float = DEFAULT_TOL) -> BlockPermFactorization:
    u = np.asarray(u, dtype=complex)
    _check_unitary(u, tol)
    norms = block_norms(u)
    big = norms > np.sqrt(max(1 - tol, 0.0))
    small = norms < tol
    if not np.all(big | small):
        raise NotBlockPermutation(norms, "blocks neither negligible nor unitary")
    if not (np.all(big.sum(axis=0) == 1) and np.all(big.sum(axis=1) == 1)):
        raise NotBlockPermutation(norms, "not one dominant block per row and column")
    perm = tuple(int(np.argmax(big[:, k])) for k in range(4))
    raw = [block(u, perm[k], k) for k in range(4)]
    lambdas = [np.sqrt(np.linalg.det(b) + 0j) for b in raw]
    total = np.prod(lambdas)
    if abs(total - 1) > abs(total + 1):
        lambdas[0] = -lambdas[0]
        total = -total
    if abs(total - 1) > max(tol, 1e-12) * 10:
        raise NotBlockPermutation(norms, f"block determinants multiply to {total:.6g}, not 1 (det U != 1)")
    blocks = tuple(b / lam for b, lam in zip(raw, lambdas))
    fac = BlockPermFactorization(perm, blocks, tuple(complex(l) for l in lambdas), 0.0)
    residual = float(np.linalg.norm(fac.reassemble() - u))
    return BlockPermFactorization(perm, blocks, fac.lambdas, residual)


def theorem3_factor(u, phi: QubitState, tol: float = DEFAULT_TOL, generic: bool | None = None) -> BlockPermFactorization:
    """Factor ``u`` given that it maps the generic state ``embed(phi)`` back into W.

    ``generic`` lets a caller pass a precomputed genericity verdict.
    """
    from .invariants import is_generic

    u = np.asarray(u, dtype=complex)
    if generic is None:
        generic = is_generic(phi)
    if not generic:
        raise NotGeneric("state fails the genericity test (not semisimple or P vanishes)")
    w = embed(phi).to_float()
    image = compound(u, w)
    if not is_sov_approx(image, tol):
        raise NotSOVImage("U maps the embedded state outside the single-occupancy subspace")
    fac = factor_block_perm(u, tol)
    lifted = compound(fac.unitary_part(), w)
    residual = max(fac.residual, float(np.linalg.norm(lifted.coeffs - image.coeffs)))
    return BlockPermFactorization(fac.perm, fac.blocks, fac.lambdas, residual)


def scalar_action_defect(lambdas, w: MultiVector) -> float:
    """|S w - w| for S = diag(l_k I2) on a 4-vector."""
    s = np.diag(np.repeat(np.asarray(lambdas, dtype=complex), 2))
    w = _float_mv(w)
    return float(np.linalg.norm(compound(s, w).coeffs - w.coeffs))


# -- the minor equations behind the block structure --------------------------

def pair_minors(x: np.ndarray, k: int) -> dict:
    """D_ij = x[2k-1, i] x[2k, j] - x[2k-1, j] x[2k, i] for i < j (1-based k, i, j)."""
    r0, r1 = x[2 * k - 2], x[2 * k - 1]
    return {(i, j): r0[i - 1] * r1[j - 1] - r0[j - 1] * r1[i - 1]
            for i, j in combinations(range(1, DIM + 1), 2)}


def contraction_equations(x: np.ndarray, alpha: MultiVector, k: int) -> dict:
    """Coefficients of v_i ^ v_j in <u_{2k-1} ^ u_{2k} | phi> for phi = X . alpha.

    The pairs (2m-1, 2m) never occur, leaving 24 equations; all vanish exactly
    when the image of ``alpha`` is single-occupancy in that block.
    """
    d = pair_minors(x, k)
    out = {pq: 0j for pq in combinations(range(1, DIM + 1), 2)
           if not (pq[0] % 2 == 1 and pq[1] == pq[0] + 1)}
    coeffs = _float_mv(alpha).coeffs
    for r, s in enumerate(subsets(4)):
        c = coeffs[r]
        if not c:
            continue
        for p, q in combinations(s, 2):
            rest = tuple(t for t in s if t not in (p, q))
            sign = _parity((p, q) + rest)
            if rest in out:
                out[rest] += sign * c * d[p, q]
    return out


def _parity(seq) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


# -- random test material ------------------------------------------------------

def random_su2(rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=4)
    a /= np.linalg.norm(a)
    return np.array([[a[0] + 1j * a[1], -a[2] + 1j * a[3]], [a[2] + 1j * a[3], a[0] - 1j * a[1]]])


def random_local_unitary(rng: np.random.Generator) -> LocalOperator:
    perm = tuple(int(p) for p in rng.permutation(4))
    return LocalOperator(tuple(random_su2(rng) for _ in range(4)), perm)


def haar_su8(rng: np.random.Generator) -> np.ndarray:
    z = (rng.normal(size=(DIM, DIM)) + 1j * rng.normal(size=(DIM, DIM))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return q / np.linalg.det(q) ** (1 / DIM)
