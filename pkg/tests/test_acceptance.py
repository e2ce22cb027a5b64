"""Acceptance criteria 1-10.

Each test records one PASS/FAIL line, printed immediately (visible with ``-s``)
and again in the terminal summary.  Tolerances and budgets are fixed here.
"""
import random
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE
from qubitwedge import sampling
from qubitwedge.canonical import (
    FAMILY_ARITY, NILPOTENT_LABELS, a_state, appendix_c_fixture, cartan_basis, embed,
    family_representative, is_sov, local_to_matrix8, nilpotent_triple, pauli_stabilizer_generators,
    unembed,
)
from qubitwedge.classify import FINGERPRINT_TABLE, fixture_fingerprints, identify_class, slocc_equivalent
from qubitwedge.e7 import N_E7, E7Element, ad_sparse, bracket, p_bracket, sigma, theta
from qubitwedge.exterior import compound
from qubitwedge.factor import NotBlockPermutation, NotSOVImage, haar_su8, random_local_unitary, theorem3_factor
from qubitwedge.invariants import (
    _random_a_point, f_product, genericity_polynomial, is_generic, restricted_invariants,
    verify_appendix_identities,
)
from qubitwedge.jordan import jordan_decompose
from qubitwedge.linalg import hessenberg_charpoly
from qubitwedge.scalars import ZERO
from qubitwedge.verify import stabilizer_group_orders

JACOBI_TRIPLES = 200
BUDGET_1 = 120.0
IDENTITY_STATES, IDENTITY_A_POINTS, BUDGET_3 = 50, 20, 600.0
ROUNDTRIPS_4 = 100
JORDAN_DRAWS, CHARPOLY_BUDGET = 20, 60.0
DECIDER_DRAWS, FALSE_PAIRS, DRESSINGS = 20, 50, 50
INTERPOLATION_CHECKS = 100
FACTOR_SAMPLES, FACTOR_RESIDUAL, BUDGET_10 = 200, 1e-9, 300.0
MIXED = sorted(f for f in FAMILY_ARITY if f != 1)


def record(n, ok, detail):
    verdict = "PASS" if ok else "FAIL"
    ACCEPTANCE[n] = (verdict, detail)
    print(f"\ncriterion {n}: {verdict}  {detail}")


def _params(rng, family):
    return [sampling.rational(rng) for _ in range(FAMILY_ARITY[family])]


# -- 1 ----------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_1_bracket():
    rng = random.Random("criterion-1")
    start = time.perf_counter()
    jacobi = 0
    for _ in range(JACOBI_TRIPLES):
        a, b, c = (sampling.e7_element(rng) for _ in range(3))
        jacobi += (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero()
    auto = 0
    pairs = 50
    for _ in range(pairs):
        a, b = sampling.e7_element(rng), sampling.e7_element(rng)
        ab = bracket(a, b)
        auto += (theta(ab) == bracket(theta(a), theta(b)) and sigma(ab) == bracket(sigma(a), sigma(b))
                 and sigma(sigma(a)) == a and theta(theta(a)) == a)
    elapsed = time.perf_counter() - start
    ok = jacobi == JACOBI_TRIPLES and auto == pairs and elapsed <= BUDGET_1
    record(1, ok, f"Jacobi {jacobi}/{JACOBI_TRIPLES}, theta/sigma automorphism {auto}/{pairs}, "
                  f"{elapsed:.1f}s (budget {BUDGET_1:.0f}s)")
    assert ok


# -- 2 ----------------------------------------------------------------------------

def test_criterion_2_triples():
    good = 0
    for label in NILPOTENT_LABELS:
        h, e, f = nilpotent_triple(label)
        assert f == sigma(E7Element.from_multivector(e)).odd
        H, E, F = E7Element.from_matrix(h), E7Element.from_multivector(e), E7Element.from_multivector(f)
        good += bracket(H, E) == E * 2 and bracket(H, F) == F * -2 and bracket(E, F) == H
    ok = good == len(NILPOTENT_LABELS) == 8
    record(2, ok, f"{good}/8 triples exact")
    assert ok


# -- 3 ----------------------------------------------------------------------------

@pytest.fixture(scope="module")
def identity_results():
    rng = random.Random("criterion-3")
    states = [embed(sampling.qubit_state(rng)) for _ in range(IDENTITY_STATES)]
    states += [embed(a_state(*sampling.generic_a_point(rng))) for _ in range(IDENTITY_A_POINTS)]
    start = time.perf_counter()
    printed = [verify_appendix_identities(s) for s in states]
    refit = [verify_appendix_identities(s, variant="refit") for s in states]
    elapsed = time.perf_counter() - start
    counts = {name: sum(c[k].holds for c in printed) for k, name in enumerate(("f10", "f14", "f18"))}
    counts["f18 refit"] = sum(c[2].holds for c in refit)
    record(3, all(v == len(states) for k, v in counts.items() if k != "f18 refit") and elapsed <= BUDGET_3,
           f"as printed: f10 {counts['f10']}/{len(states)}, f14 {counts['f14']}/{len(states)}, "
           f"f18 {counts['f18']}/{len(states)}; refit f18 {counts['f18 refit']}/{len(states)}; "
           f"{elapsed:.1f}s (budget {BUDGET_3:.0f}s); see decisions ledger")
    return counts, len(states), elapsed


def test_criterion_3_degree_10_14_and_refit(identity_results):
    counts, n, elapsed = identity_results
    assert counts["f10"] == counts["f14"] == n
    assert counts["f18 refit"] == n
    assert elapsed <= BUDGET_3


@pytest.mark.xfail(strict=True, reason="three printed degree-18 coefficients disagree with exact values; "
                                       "ledgered in notes/decisions.md")
def test_criterion_3_degree_18_as_printed(identity_results):
    counts, n, _ = identity_results
    assert counts["f18"] == n


# -- 4 ----------------------------------------------------------------------------

def test_criterion_4_embedding():
    p = cartan_basis()
    spans = [embed(a_state(*row)) for row in np.eye(4, dtype=int).tolist()]
    fixtures = spans == [p[1], p[3], p[4], -p[5]]
    rng = random.Random("criterion-4")
    trips = 0
    for _ in range(ROUNDTRIPS_4):
        phi = sampling.qubit_state(rng)
        psi = embed(phi)
        trips += is_sov(psi) and unembed(psi) == phi
    ok = fixtures and trips == ROUNDTRIPS_4
    record(4, ok, f"spanning vectors -> p2, p4, p5, -p6: {fixtures}; round trips {trips}/{ROUNDTRIPS_4}")
    assert ok


# -- 5 ----------------------------------------------------------------------------

def _charpoly_seconds(psi):
    m = [[ZERO] * N_E7 for _ in range(N_E7)]
    for (i, j), c in ad_sparse(E7Element.from_multivector(psi)).items():
        m[i][j] = c
    start = time.perf_counter()
    poly = hessenberg_charpoly(m)
    return poly, time.perf_counter() - start


def test_criterion_5_jordan():
    rng = random.Random("criterion-5")
    good = total = 0
    worst = 0.0
    for fam in MIXED:
        zero = family_representative(fam, *([0] * FAMILY_ARITY[fam]))
        for _ in range(JORDAN_DRAWS):
            phi = family_representative(fam, *_params(rng, fam))
            semi, nil = jordan_decompose(embed(phi))
            commute = not any(x for x in p_bracket(semi, nil).flat)
            poly, secs = _charpoly_seconds(embed(phi))
            worst = max(worst, secs)
            good += semi == embed(phi - zero) and nil == embed(zero) and commute and len(poly) == N_E7 + 1
            total += 1
    ok = good == total and worst <= CHARPOLY_BUDGET
    record(5, ok, f"exact splits {good}/{total}; slowest 133x133 characteristic polynomial "
                  f"{worst:.2f}s (budget {CHARPOLY_BUDGET:.0f}s)")
    assert ok


# -- 6 ----------------------------------------------------------------------------

def test_criterion_6_nilpotent_separation():
    fps = fixture_fingerprints()
    distinct = len(set(fps.values())) == len(fps) == 9
    table_ok = fps == FINGERPRINT_TABLE
    expected = {2: 1, 3: 2, 6: 6, 9: 20, 10: 5}
    direct = {fam: identify_class(embed(family_representative(fam, *([0] * FAMILY_ARITY[fam]))))
              for fam in expected}
    direct_ok = all(direct[f] == (expected[f], f) for f in expected)
    via_triples = {fam: identify_class(nilpotent_triple(label)[1]) for fam, label in ((12, 50), (14, 44), (16, 9))}
    triples_ok = all(via_triples[f][1] == f for f in via_triples)
    ok = distinct and table_ok and direct_ok and triples_ok
    labels = ", ".join(f"{f}->{direct[f][0]}" for f in expected) + ", " + \
        ", ".join(f"{f}->{via_triples[f][0]}" for f in via_triples)
    record(6, ok, f"9 fingerprints distinct: {distinct}; family->orbit {labels}")
    assert ok


# -- 7 ----------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_7_decider():
    rng = random.Random("criterion-7")
    start = time.perf_counter()
    gen_ok = gen_total = 0
    for fam in MIXED:
        for it in appendix_c_fixture(fam):
            for _ in range(DECIDER_DRAWS):
                p = _params(rng, fam)
                a = family_representative(fam, *p)
                b = family_representative(fam, *it.mapped(*p))
                gen_ok += slocc_equivalent(a, b).equivalent
                gen_total += 1
    false_ok = 0
    pairs = []
    while len(pairs) < FALSE_PAIRS:
        fam = rng.choice(MIXED)
        a = family_representative(fam, *_params(rng, fam))
        b = family_representative(fam, *_params(rng, fam))
        if restricted_invariants(a) != restricted_invariants(b):
            pairs.append((a, b))
            false_ok += not slocc_equivalent(a, b).equivalent
    dressed_ok = 0
    for k in range(DRESSINGS):
        fam = MIXED[k % len(MIXED)]
        p = _params(rng, fam)
        a = family_representative(fam, *p)
        it = appendix_c_fixture(fam)[k % len(appendix_c_fixture(fam))]
        # alternate equivalent and inequivalent inputs
        b = family_representative(fam, *it.mapped(*p)) if k % 2 == 0 else family_representative(fam, *_params(rng, fam))
        before = slocc_equivalent(a, b).equivalent
        da = sampling.local_operator(rng).apply(a)
        db = sampling.local_operator(rng).apply(b)
        dressed_ok += slocc_equivalent(da, db).equivalent == before
    elapsed = time.perf_counter() - start
    ok = gen_ok == gen_total and false_ok == FALSE_PAIRS and dressed_ok == DRESSINGS
    record(7, ok, f"generator pairs equivalent {gen_ok}/{gen_total}; unequal-invariant pairs "
                  f"inequivalent {false_ok}/{FALSE_PAIRS}; verdict stable under dressing "
                  f"{dressed_ok}/{DRESSINGS}; {elapsed:.1f}s")
    assert ok


# -- 8 ----------------------------------------------------------------------------

def test_criterion_8_stabilizer():
    gens = pauli_stabilizer_generators()
    fixed = sum(compound(g, p) == p for g in gens for p in cartan_basis())
    order, induced = stabilizer_group_orders(gens)
    ok = fixed == len(gens) * 7 and induced == 64
    record(8, ok, f"generator/p_i fixed {fixed}/{len(gens) * 7}; group order {order}, modulo center {induced}")
    assert ok


# -- 9 ----------------------------------------------------------------------------

def test_criterion_9_interpolation():
    poly = genericity_polynomial()          # fitted from seed 0
    sample_rng = random.Random(0)
    used = {_random_a_point(sample_rng) for _ in range(len(poly.monomials) + 4)}
    rng = random.Random("criterion-9")
    good = checked = 0
    while checked < INTERPOLATION_CHECKS:
        pt = tuple(sampling.rational(rng) for _ in range(4))
        if pt in used:
            continue
        used.add(pt)
        checked += 1
        good += poly(restricted_invariants(a_state(*pt))) == f_product(*pt) ** 2
    ok = good == INTERPOLATION_CHECKS
    record(9, ok, f"P = f^2 on {good}/{INTERPOLATION_CHECKS} fresh points")
    assert ok


# -- 10 ---------------------------------------------------------------------------

def test_criterion_10_factor():
    rng = random.Random("criterion-10")
    nrng = np.random.default_rng(10)
    start = time.perf_counter()
    states = [sampling.generic_state(rng) for _ in range(4)]
    generic = all(is_generic(phi) for phi in states)
    worst, factored = 0.0, 0
    for t in range(FACTOR_SAMPLES):
        op = random_local_unitary(nrng)
        fac = theorem3_factor(local_to_matrix8(op), states[t % 4], generic=True)
        worst = max(worst, fac.residual)
        factored += fac.residual <= FACTOR_RESIDUAL and fac.perm == op.perm
    rejected = 0
    for t in range(FACTOR_SAMPLES):
        try:
            theorem3_factor(haar_su8(nrng), states[t % 4], generic=True)
        except (NotSOVImage, NotBlockPermutation):
            rejected += 1
    elapsed = time.perf_counter() - start
    ok = generic and factored == FACTOR_SAMPLES and rejected == FACTOR_SAMPLES and elapsed <= BUDGET_10
    record(10, ok, f"factored {factored}/{FACTOR_SAMPLES} (worst residual {worst:.1e}, limit "
                   f"{FACTOR_RESIDUAL:.0e}); Haar rejected {rejected}/{FACTOR_SAMPLES}; "
                   f"{elapsed:.1f}s (budget {BUDGET_10:.0f}s)")
    assert ok
