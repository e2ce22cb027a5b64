from fractions import Fraction

import pytest

from qubitwedge.linalg import (
    connected_components, dense_rank, hessenberg_charpoly, krylov_minpoly, monic, poly_divmod,
    poly_gcd, poly_inv_mod, poly_mul, rows_from_entries, semisimple_polynomial, squarefree_part,
)
from qubitwedge.scalars import ONE, ZERO, exact


def P(*cs):
    return [exact(c) for c in cs]


def test_divmod_and_gcd():
    p = poly_mul(P(-1, 1), P(-2, 1))       # (x-1)(x-2)
    q = poly_mul(P(-1, 1), P(3, 1))        # (x-1)(x+3)
    assert poly_gcd(p, q) == P(-1, 1)
    quo, rem = poly_divmod(p, P(-1, 1))
    assert quo == P(-2, 1) and rem == []
    with pytest.raises(ZeroDivisionError):
        poly_divmod(p, [])


def test_squarefree_part():
    p = poly_mul(poly_mul(P(-1, 1), P(-1, 1)), P(2, 1))
    assert squarefree_part(p) == monic(poly_mul(P(-1, 1), P(2, 1)))


def test_inverse_mod():
    m = P(1, 0, 1)                         # x^2 + 1
    inv = poly_inv_mod(P(1, 1), m)
    assert poly_divmod(poly_mul(inv, P(1, 1)), m)[1] == [ONE]


def test_semisimple_polynomial_kills_nilpotent_part():
    # mu = (x-1)^2 (x+2): q(A) is the semisimple part of any A with this minimal polynomial
    mu = poly_mul(poly_mul(P(-1, 1), P(-1, 1)), P(2, 1))
    q = semisimple_polynomial(mu)
    # A = [[1,1,0],[0,1,0],[0,0,-2]]; q(A) should equal diag(1,1,-2)
    a = {0: {0: exact(1), 1: exact(1)}, 1: {1: exact(1)}, 2: {2: exact(-2)}}
    from qubitwedge.linalg import poly_apply

    cols = [poly_apply(a, q, {j: ONE}) for j in range(3)]
    assert cols == [{0: exact(1)}, {1: exact(1)}, {2: exact(-2)}]


def test_krylov_minpoly():
    a = {0: {1: ONE}, 1: {}}               # nilpotent Jordan block
    assert krylov_minpoly(a, {1: ONE}) == [ZERO, ZERO, ONE]
    assert krylov_minpoly(a, {0: ONE}) == [ZERO, ONE]


def test_dense_rank_and_charpoly():
    m = [[exact(Fraction(a)) for a in row] for row in ([2, 1, 0], [1, 2, 0], [0, 0, 0])]
    assert dense_rank(m) == 2
    # det(xI - m) = x (x-1)(x-3)
    assert hessenberg_charpoly(m) == P(0, 3, -4, 1)


def test_connected_components():
    rows = rows_from_entries({(0, 2): ONE, (3, 4): ONE})
    assert connected_components(rows, 5) == [[0, 2], [1], [3, 4]]
