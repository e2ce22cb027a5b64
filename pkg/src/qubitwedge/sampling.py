"""Seeded random exact objects: small rationals, states, local operators, e7 elements."""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .canonical import LocalOperator, QubitState, a_state
from .e7 import E7Element
from .exterior import DIM, MultiVector
from .scalars import I, ONE, ZERO, ExactScalar, exact

BOUND = 9


def rational(rng: random.Random, bound: int = BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def nonzero_rational(rng: random.Random, bound: int = BOUND) -> Fraction:
    while True:
        q = rational(rng, bound)
        if q:
            return q


def gaussian(rng: random.Random, bound: int = BOUND) -> ExactScalar:
    return exact(rational(rng, bound)) + I * exact(rational(rng, bound))


def qubit_state(rng: random.Random, complex_entries: bool = True) -> QubitState:
    draw = gaussian if complex_entries else (lambda r: exact(rational(r)))
    return QubitState([draw(rng) for _ in range(16)])


def multivector(rng: random.Random, grade: int = 4, density: float = 1.0) -> MultiVector:
    mv = MultiVector(grade)
    for r in range(len(mv.coeffs)):
        if rng.random() < density:
            mv.coeffs[r] = gaussian(rng)
    return mv


def traceless_matrix(rng: random.Random, density: float = 1.0) -> np.ndarray:
    m = np.empty((DIM, DIM), dtype=object)
    m.fill(ZERO)
    for i in range(DIM):
        for j in range(DIM):
            if rng.random() < density:
                m[i, j] = gaussian(rng)
    tr = ZERO
    for i in range(DIM - 1):
        tr = tr + m[i, i]
    m[DIM - 1, DIM - 1] = -tr
    return m


def e7_element(rng: random.Random, density: float = 0.3) -> E7Element:
    return E7Element(traceless_matrix(rng, density), multivector(rng, 4, density))


def _shear(t: ExactScalar, upper: bool) -> np.ndarray:
    m = np.empty((2, 2), dtype=object)
    m[0, 0] = m[1, 1] = ONE
    m[0, 1], m[1, 0] = (t, ZERO) if upper else (ZERO, t)
    return m


def sl2(rng: random.Random, shears: int = 3) -> np.ndarray:
    """Exact determinant-one 2x2 matrix as a product of small Gaussian shears."""
    g = _shear(ZERO, True)
    for k in range(shears):
        t = exact(Fraction(rng.randint(-3, 3), rng.randint(1, 2))) + I * exact(rng.randint(-1, 1))
        g = g @ _shear(t, k % 2 == 0)
    return g


def local_operator(rng: random.Random, permute: bool = True) -> LocalOperator:
    perm = list(range(4))
    if permute:
        rng.shuffle(perm)
    return LocalOperator(tuple(sl2(rng) for _ in range(4)), tuple(perm))


def sl8(rng: random.Random, shears: int = 6) -> np.ndarray:
    """Exact determinant-one 8x8 matrix as a product of elementary shears."""
    g = np.empty((DIM, DIM), dtype=object)
    g.fill(ZERO)
    for i in range(DIM):
        g[i, i] = ONE
    for _ in range(shears):
        i, j = rng.sample(range(DIM), 2)
        e = np.empty((DIM, DIM), dtype=object)
        e.fill(ZERO)
        for k in range(DIM):
            e[k, k] = ONE
        e[i, j] = exact(Fraction(rng.randint(-2, 2), rng.randint(1, 2)))
        g = g @ e
    return g


def generic_a_point(rng: random.Random) -> tuple:
    """(a, b, c, d) with pairwise distinct squares."""
    while True:
        pt = tuple(rational(rng) for _ in range(4))
        sq = {x * x for x in pt}
        if len(sq) == 4:
            return pt


def generic_state(rng: random.Random) -> QubitState:
    """A local SL operator applied to a generic Cartan state."""
    return local_operator(rng).apply(a_state(*generic_a_point(rng)))
