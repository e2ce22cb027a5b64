"""Replayable check groups behind the ``verify`` subcommand.

Every group is deterministic for a given seed.  A group result lists the inputs
that failed so a run can be reproduced exactly.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import sampling
from .canonical import (
    FAMILY_ARITY, NILPOTENT_LABELS, a_state, appendix_c_fixture, cartan_basis, embed,
    family_representative, local_to_matrix8, nilpotent_triple, pauli_stabilizer_generators,
)
from .e7 import E7Element, bracket, m_endomorphism, sigma, theta
from .exterior import compound, compound_matrix, identity8, vol_dual, wedge
from .factor import (
    NotBlockPermutation, NotSOVImage, haar_su8, random_local_unitary, theorem3_factor,
)
from .invariants import (
    f_product, interpolate_genericity, is_generic, restricted_invariants,
    verify_appendix_identities,
)
from .jordan import jordan_decompose


@dataclass
class GroupResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, what: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(what)

    def lines(self, timings: bool = False) -> list:
        head = f"[{'PASS' if self.ok else 'FAIL'}] {self.name}: {self.passed} passed, {self.failed} failed"
        if timings:
            head += f" ({self.seconds:.2f}s)"
        return [head] + [f"  note: {n}" for n in self.notes] + [f"  failed: {f}" for f in self.failures]


def _e7_axioms(res: GroupResult, rng: random.Random, count: int) -> None:
    for t in range(count):
        a, b, c = (sampling.e7_element(rng) for _ in range(3))
        jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        res.record(jac.is_zero(), f"jacobi triple #{t}")
    for t in range(max(1, count // 4)):
        a, b = sampling.e7_element(rng), sampling.e7_element(rng)
        ab = bracket(a, b)
        res.record(bracket(b, a) == -ab, f"antisymmetry pair #{t}")
        for name, f in (("theta", theta), ("sigma", sigma)):
            res.record(f(ab) == bracket(f(a), f(b)), f"{name} automorphism pair #{t}")
        res.record(theta(sigma(a)) == sigma(theta(a)), f"theta/sigma commute #{t}")
        res.record(sigma(sigma(a)) == a, f"sigma involution #{t}")
        phi, psi = sampling.multivector(rng, 4, 0.3), sampling.multivector(rng, 4, 0.3)
        s = m_endomorphism(phi, psi) + m_endomorphism(psi, phi)
        vol = vol_dual(wedge(phi, psi)).coeffs[0]
        res.record(bool(np.all(s == identity8() * (-vol))), f"M(phi,psi)+M(psi,phi) trace identity #{t}")


def _triples(res: GroupResult, rng, count) -> None:
    for label in NILPOTENT_LABELS:
        h, e, f = nilpotent_triple(label)
        H, E, F = E7Element.from_matrix(h), E7Element.from_multivector(e), E7Element.from_multivector(f)
        res.record(bracket(H, E) == E * 2, f"label {label}: [H,E]=2E")
        res.record(bracket(H, F) == F * -2, f"label {label}: [H,F]=-2F")
        res.record(bracket(E, F) == H, f"label {label}: [E,F]=H")


def _appendix_a(res: GroupResult, rng, count) -> None:
    states = [("random", t, embed(sampling.qubit_state(rng))) for t in range(count)]
    states += [("a-point", t, embed(a_state(*sampling.generic_a_point(rng)))) for t in range(20)]
    refit_ok = 0
    for kind, t, psi in states:
        for chk in verify_appendix_identities(psi):
            res.record(chk.holds, f"{chk.name} on {kind} state #{t}")
        refit_ok += all(c.holds for c in verify_appendix_identities(psi, variant="refit"))
    res.notes.append(f"refit degree-18 relation holds on {refit_ok}/{len(states)} states")


def _stabilizer(res: GroupResult, rng, count) -> None:
    gens = pauli_stabilizer_generators()
    ps = cartan_basis()
    for gi, g in enumerate(gens):
        for pi, p in enumerate(ps):
            res.record(compound(g, p) == p, f"generator {gi} fixes p{pi + 1}")
    order, induced = stabilizer_group_orders(gens)
    res.notes.append(f"group order {order}, induced on 4-vectors {induced}")
    res.record(order == 256, f"group order {order} != 256")
    res.record(induced == 64, f"order modulo center {induced} != 64")


def stabilizer_group_orders(gens) -> tuple:
    """(order of the generated matrix group, number of distinct induced actions on 4-vectors)."""
    mats = [np.array([[complex(x) for x in row] for row in g]) for g in gens]
    key = lambda m: tuple(np.round(m, 9).ravel().tolist())
    seen = {key(np.eye(8, dtype=complex)): np.eye(8, dtype=complex)}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for m in frontier:
            for g in mats:
                p = g @ m
                k = key(p)
                if k not in seen:
                    seen[k] = p
                    nxt.append(p)
        frontier = nxt
    induced = {key(compound_matrix(m, 4)) for m in seen.values()}
    return len(seen), len(induced)


def _intertwiners(res: GroupResult, rng, count) -> None:
    for fam in sorted(FAMILY_ARITY):
        if fam == 1:
            continue
        for k, it in enumerate(appendix_c_fixture(fam)):
            for t in range(count):
                params = [sampling.rational(rng) for _ in range(FAMILY_ARITY[fam])]
                ok = it.operator.apply(family_representative(fam, *params)) == family_representative(fam, *it.mapped(*params))
                res.record(ok, f"family {fam} generator {k} params {params}")


def _jordan_fixtures(res: GroupResult, rng, count) -> None:
    for fam in sorted(FAMILY_ARITY):
        if fam == 1:
            continue
        zero = family_representative(fam, *([0] * FAMILY_ARITY[fam]))
        for t in range(count):
            params = [sampling.rational(rng) for _ in range(FAMILY_ARITY[fam])]
            phi = family_representative(fam, *params)
            semi, nil = jordan_decompose(embed(phi))
            ok = semi == embed(phi - zero) and nil == embed(zero)
            res.record(ok, f"family {fam} params {params}")


def _interpolation(res: GroupResult, rng, count) -> None:
    poly = interpolate_genericity(seed=rng.randrange(2**31))
    for t in range(count):
        pt = tuple(sampling.rational(rng) for _ in range(4))
        res.record(poly(restricted_invariants(a_state(*pt))) == f_product(*pt) ** 2, f"point {pt}")


def _factor_roundtrip(res: GroupResult, rng, count) -> None:
    nrng = np.random.default_rng(rng.randrange(2**32))
    phis = [sampling.generic_state(rng) for _ in range(4)]
    for k, phi in enumerate(phis):
        res.record(is_generic(phi), f"sample state #{k} is not generic")
    worst = 0.0
    for t in range(count):
        op = random_local_unitary(nrng)
        try:
            fac = theorem3_factor(local_to_matrix8(op), phis[t % len(phis)], generic=True)
            ok = fac.residual <= 1e-9 and fac.perm == op.perm
            worst = max(worst, fac.residual)
        except ValueError:
            ok = False
        res.record(ok, f"local unitary #{t}")
    for t in range(count):
        try:
            theorem3_factor(haar_su8(nrng), phis[t % len(phis)], generic=True)
            ok = False
        except (NotSOVImage, NotBlockPermutation):
            ok = True
        res.record(ok, f"Haar unitary #{t} was accepted")
    res.notes.append(f"worst residual {worst:.2e}")


GROUPS = {
    "e7-axioms": (_e7_axioms, 200),
    "triples": (_triples, 0),
    "appendix-a": (_appendix_a, 50),
    "stabilizer": (_stabilizer, 0),
    "intertwiners": (_intertwiners, 20),
    "jordan-fixtures": (_jordan_fixtures, 20),
    "interpolation": (_interpolation, 100),
    "factor-roundtrip": (_factor_roundtrip, 200),
}


def run_group(name: str, seed: int = 0, count: int | None = None) -> GroupResult:
    if name not in GROUPS:
        raise KeyError(f"unknown verify group {name!r}; choose from {', '.join(GROUPS)}")
    fn, default = GROUPS[name]
    res = GroupResult(name)
    rng = random.Random(f"{name}:{seed}")
    start = time.perf_counter()
    fn(res, rng, default if count is None else count)
    res.seconds = time.perf_counter() - start
    return res
