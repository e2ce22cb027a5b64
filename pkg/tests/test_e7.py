import random

import numpy as np
import pytest

from qubitwedge import sampling
from qubitwedge.canonical import NILPOTENT_LABELS, cartan_basis, nilpotent_triple
from qubitwedge.e7 import (
    N_E7, N_EVEN, N_ODD, E7Element, ad_matrix, ad_sparse, basis_element, bracket,
    m_endomorphism, p_bracket, p_bracket_direct, sigma, sigma_odd, theta, trace, traceless,
)
from qubitwedge.exterior import MultiVector, diag8, identity8, unit8, vol_dual, wedge
from qubitwedge.linalg import dense_rank
from qubitwedge.scalars import ZERO, exact


def e(*idx, coeff=1):
    return MultiVector.basis(*idx, coeff=coeff)


def test_dimensions():
    assert (N_EVEN, N_ODD, N_E7) == (63, 70, 133)


def test_coords_roundtrip(rng):
    a = sampling.e7_element(rng)
    assert E7Element.from_coords(a.coords()) == a
    for b in (0, 7, 62, 63, 132):
        v = basis_element(b).coords()
        assert [k for k, c in enumerate(v) if c] == [b]


def test_traceless():
    x = traceless(diag8([1, 1, 1, 1, 1, 1, 1, 1]))
    assert all(not c for c in x.flat)
    assert trace(traceless(unit8(3, 3))) == 0


def test_even_bracket_is_commutator():
    a = E7Element.from_matrix(unit8(1, 2))
    b = E7Element.from_matrix(unit8(2, 1))
    assert bracket(a, b) == E7Element.from_matrix(unit8(1, 1) - unit8(2, 2))


def test_even_acts_on_odd_as_derivation():
    h = E7Element.from_matrix(unit8(2, 1))
    psi = E7Element.from_multivector(e(1, 3, 5, 7))
    assert bracket(h, psi) == E7Element.from_multivector(e(2, 3, 5, 7))
    assert bracket(psi, h) == -E7Element.from_multivector(e(2, 3, 5, 7))


def test_odd_bracket_examples():
    x = p_bracket(e(1, 2, 3, 4), e(5, 6, 7, 8))
    half = exact(1) / 2
    assert [x[i, i] for i in range(8)] == [half] * 4 + [-half] * 4
    # so (H, E, F) = ([E, F], e1234, e5678) is an sl2 triple
    E = E7Element.from_multivector(e(1, 2, 3, 4))
    assert bracket(E7Element.from_matrix(x), E) == E * 2
    # supports sharing two indices bracket to zero
    assert all(not c for c in p_bracket(e(1, 2, 3, 4), e(1, 2, 5, 6)).flat)
    # sharing one index gives a matrix unit
    y = p_bracket(e(1, 2, 3, 4), e(4, 5, 6, 7))
    assert [(i, j) for i in range(8) for j in range(8) if y[i, j]] == [(3, 7)]


def test_cached_p_bracket_matches_direct(rng):
    for _ in range(5):
        a, b = sampling.multivector(rng, 4, 0.3), sampling.multivector(rng, 4, 0.3)
        assert np.all(p_bracket(a, b) == p_bracket_direct(a, b))


def test_m_endomorphism_symmetrised_is_scalar(rng):
    for _ in range(5):
        a, b = sampling.multivector(rng, 4, 0.4), sampling.multivector(rng, 4, 0.4)
        s = m_endomorphism(a, b) + m_endomorphism(b, a)
        vol = vol_dual(wedge(a, b)).coeffs[0]
        assert np.all(s == identity8() * (-vol))


@pytest.mark.parametrize("seed", range(4))
def test_jacobi(seed):
    rng = random.Random(seed)
    for _ in range(5):
        a, b, c = (sampling.e7_element(rng) for _ in range(3))
        jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        assert jac.is_zero()


def test_antisymmetry(rng):
    a, b = sampling.e7_element(rng), sampling.e7_element(rng)
    assert bracket(a, b) == -bracket(b, a)


def test_theta_sigma_automorphisms(rng):
    for _ in range(5):
        a, b = sampling.e7_element(rng), sampling.e7_element(rng)
        ab = bracket(a, b)
        assert theta(ab) == bracket(theta(a), theta(b))
        assert sigma(ab) == bracket(sigma(a), sigma(b))
        assert sigma(sigma(a)) == a
        assert theta(sigma(a)) == sigma(theta(a))


def test_sigma_negates_diagonal():
    h = E7Element.from_matrix(diag8([1, 2, 3, 4, 5, 6, 7, -28]))
    assert sigma(h) == -h


def test_sigma_on_single_occupancy_basis():
    # e_ijkl -> e_{9-l,9-k,9-j,9-i} whenever one index is taken from each pair {s, 9-s}
    assert sigma_odd(e(1, 2, 3, 4)) == e(5, 6, 7, 8)
    assert sigma_odd(e(1, 2, 3, 5)) == e(4, 6, 7, 8)


def test_cartan_basis_commutes():
    ps = cartan_basis()
    for p in ps:
        for q in ps:
            assert all(not c for c in p_bracket(p, q).flat)


def test_ad_matrix_matches_bracket(rng):
    a = sampling.e7_element(rng, density=0.2)
    m = ad_matrix(a)
    for _ in range(3):
        b = sampling.e7_element(rng, density=0.2)
        lhs = [sum((m[r, c] * x for c, x in enumerate(b.coords()) if x and m[r, c]), ZERO) for r in range(N_E7)]
        assert E7Element.from_coords(lhs) == bracket(a, b)


def test_ad_sparse_agrees_with_dense(rng):
    a = sampling.e7_element(rng, density=0.2)
    dense = ad_matrix(a)
    for (r, c), v in ad_sparse(a).items():
        assert dense[r, c] == v


def test_minimal_orbit_rank():
    # a highest-weight vector spans the 34-dimensional minimal orbit tangent space
    m = ad_matrix(E7Element.from_multivector(e(1, 2, 3, 4)))
    assert dense_rank([list(row) for row in m]) == 34


@pytest.mark.parametrize("label", NILPOTENT_LABELS)
def test_normal_triples(label):
    h, en, f = nilpotent_triple(label)
    H, E, F = E7Element.from_matrix(h), E7Element.from_multivector(en), E7Element.from_multivector(f)
    assert bracket(H, E) == E * 2
    assert bracket(H, F) == F * -2
    assert bracket(E, F) == H
