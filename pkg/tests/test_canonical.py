import random

import pytest

from qubitwedge import sampling
from qubitwedge.canonical import (
    FAMILY_ARITY, KETS, NILPOTENT_LABELS, SOV_SUBSETS, LocalOperator, NotSOV, QubitState,
    UnknownFamily, UnknownLabel, a_state, appendix_c_fixture, cartan_basis, embed,
    family_representative, gate, is_sov, ket_subset, local_to_matrix8, nilpotent_triple,
    pauli_stabilizer_generators, perm_sign, unembed,
)
from qubitwedge.exterior import MultiVector, compound
from qubitwedge.scalars import I


def test_ket_subsets():
    assert ket_subset("0000") == (1, 3, 5, 7)
    assert ket_subset("1111") == (2, 4, 6, 8)
    assert ket_subset("0101") == (1, 4, 5, 8)
    assert len(set(SOV_SUBSETS)) == 16


def test_embed_basis_kets():
    for k in KETS:
        phi = QubitState.from_kets({k: 1})
        assert embed(phi) == MultiVector.basis(*ket_subset(k))


def test_cartan_spanning_vectors():
    p = cartan_basis()
    assert embed(a_state(1, 0, 0, 0)) == p[1]
    assert embed(a_state(0, 1, 0, 0)) == p[3]
    assert embed(a_state(0, 0, 1, 0)) == p[4]
    assert embed(a_state(0, 0, 0, 1)) == -p[5]


def test_roundtrip(rng):
    for _ in range(20):
        phi = sampling.qubit_state(rng)
        psi = embed(phi)
        assert is_sov(psi)
        assert unembed(psi) == phi
        assert psi.norm2() == phi.norm2()


def test_unembed_rejects_off_support():
    psi = MultiVector.basis(1, 2, 3, 4) + MultiVector.basis(1, 3, 5, 7)
    with pytest.raises(NotSOV) as info:
        unembed(psi)
    assert info.value.offending == [(1, 2, 3, 4)]
    with pytest.raises(ValueError):
        unembed(MultiVector.basis(1, 3, 5))


def test_unknown_family_and_label():
    with pytest.raises(UnknownFamily):
        family_representative(4, 1)
    with pytest.raises(UnknownLabel):
        nilpotent_triple(3)
    with pytest.raises(UnknownFamily):
        appendix_c_fixture(7)


def test_family_arity():
    for fam, n in FAMILY_ARITY.items():
        family_representative(fam, *range(1, n + 1))
        with pytest.raises((TypeError, ValueError)):
            family_representative(fam, *range(n + 1))


def test_family_linear_in_parameters(rng):
    for fam, n in FAMILY_ARITY.items():
        if fam == 1:
            continue
        zero = family_representative(fam, *([0] * n))
        p = [sampling.rational(rng) for _ in range(n)]
        q = [sampling.rational(rng) for _ in range(n)]
        lhs = family_representative(fam, *[x + y for x, y in zip(p, q)]) - zero
        rhs = (family_representative(fam, *p) - zero) + (family_representative(fam, *q) - zero)
        assert lhs == rhs


def test_family1_is_cartan():
    assert family_representative(1, 1, 2, 3, 4) == a_state(1, 2, 3, 4)


def test_local_operator_identity_and_swap(rng):
    phi = sampling.qubit_state(rng)
    assert LocalOperator.identity().apply(phi) == phi
    swapped = LocalOperator.swap(1, 2).apply(QubitState.from_kets({"1000": 1}))
    assert swapped == QubitState.from_kets({"0100": 1})


def test_local_operator_composition(rng):
    phi = sampling.qubit_state(rng)
    a, b = sampling.local_operator(rng), sampling.local_operator(rng)
    assert a.then(b).apply(phi) == b.apply(a.apply(phi))


def test_determinants(rng):
    assert all(d == 1 for d in sampling.local_operator(rng).determinants())


def test_perm_sign():
    assert perm_sign((0, 1, 2, 3)) == 1
    assert perm_sign((1, 0, 2, 3)) == -1
    assert perm_sign((1, 2, 3, 0)) == -1


@pytest.mark.parametrize("seed", range(6))
def test_local_to_matrix8_equivariance(seed):
    rng = random.Random(seed)
    op = sampling.local_operator(rng)
    phi = sampling.qubit_state(rng)
    assert compound(local_to_matrix8(op), embed(phi)) == embed(op.apply(phi))


def test_named_gates_are_special():
    for name in ("I", "isy", "isz", "M", "Minv", "A", "B", "C"):
        g = gate(name)
        assert g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0] == 1
    prod = gate("M") @ gate("Minv")
    assert prod[0, 0] == 1 and prod[0, 1] == 0


@pytest.mark.parametrize("family", [2, 3, 6, 9, 10])
def test_intertwiners(family, rng):
    for it in appendix_c_fixture(family):
        for _ in range(4):
            params = [sampling.rational(rng) for _ in range(FAMILY_ARITY[family])]
            lhs = it.operator.apply(family_representative(family, *params))
            assert lhs == family_representative(family, *it.mapped(*params)), it.description


def test_pauli_generators_fix_cartan():
    for g in pauli_stabilizer_generators():
        for p in cartan_basis():
            assert compound(g, p) == p


def test_pauli_group_orders():
    from qubitwedge.verify import stabilizer_group_orders

    assert stabilizer_group_orders(pauli_stabilizer_generators()) == (256, 64)


def test_nilpotent_triples_are_graded():
    for label in NILPOTENT_LABELS:
        h, e, f = nilpotent_triple(label)
        assert all(not h[i, j] for i in range(8) for j in range(8) if i != j)
        assert not e.is_zero() and not f.is_zero()


def test_qubit_state_arithmetic():
    phi = QubitState.from_kets({"0000": 1, "1111": I})
    assert phi["1111"] == I
    assert (phi - phi).is_zero()
    assert phi * 2 == phi + phi
    assert phi.norm2() == 2
    assert QubitState.zero().is_zero()
