"""Nilpotent fingerprints and the SLOCC equivalence decision for four qubits."""
from __future__ import annotations

from dataclasses import dataclass, field

from .canonical import ORBIT_TO_FAMILY, QubitState, embed, nilpotent_triple
from .e7 import N_EVEN, N_E7, E7Element, ad_sparse
from .exterior import MultiVector
from .invariants import InvariantQuadruple, restricted_invariants
from .jordan import jordan_decompose
from .linalg import connected_components, dense_mul, dense_rank, is_zero_matrix, restrict, rows_from_entries

MAX_POWER = 8


class NotNilpotent(ValueError):
    pass


class UnrecognizedOrbit(LookupError):
    pass


class ZeroState(ValueError):
    pass


@dataclass(frozen=True)
class NilpotentFingerprint:
    """Rank data of the powers of ad(n) on e7.

    ``ranks[k-1]`` is rank ad(n)^k; ``ranks_even`` / ``ranks_odd`` restrict the
    domain to sl8 / to the 4-vectors.  The kernel dimensions of ad(n) on the two
    pieces follow from the first entries.
    """

    ranks: tuple
    ranks_even: tuple
    ranks_odd: tuple

    @property
    def kernel_even(self) -> int:
        return N_EVEN - self.ranks_even[0]

    @property
    def kernel_odd(self) -> int:
        return (N_E7 - N_EVEN) - self.ranks_odd[0]

    def as_tuple(self) -> tuple:
        return (self.ranks, self.ranks_even, self.ranks_odd)

    def __str__(self):
        return (f"ranks={list(self.ranks)} sl8={list(self.ranks_even)} p={list(self.ranks_odd)} "
                f"ker_sl8={self.kernel_even} ker_p={self.kernel_odd}")


def fingerprint(n: MultiVector) -> NilpotentFingerprint:
    """Rank data of ad(n), computed blockwise on the connected components of its support."""
    if n.grade != 4:
        raise ValueError("fingerprint needs a grade-4 multivector")
    rows = rows_from_entries(ad_sparse(E7Element.from_multivector(n)))
    total, even, odd = ([0] * MAX_POWER for _ in range(3))
    for comp in connected_components(rows, N_E7):
        if len(comp) == 1 and comp[0] not in rows:
            continue
        block = restrict(rows, comp)
        even_cols = [k for k, j in enumerate(comp) if j < N_EVEN]
        odd_cols = [k for k, j in enumerate(comp) if j >= N_EVEN]
        power = block
        k = 1
        while not is_zero_matrix(power):
            if k > len(comp):
                raise NotNilpotent("ad(n) has a nonzero eigenvalue")
            if k <= MAX_POWER:
                total[k - 1] += dense_rank(power)
                even[k - 1] += _column_rank(power, even_cols)
                odd[k - 1] += _column_rank(power, odd_cols)
            power = dense_mul(power, block)
            k += 1
    return NilpotentFingerprint(tuple(total), tuple(even), tuple(odd))


def _column_rank(m: list, cols: list) -> int:
    return dense_rank([[r[k] for k in cols] for r in m]) if cols else 0


# Computed from the stored normal triples by ``fixture_fingerprints()``; the test suite
# recomputes them and compares.
ZERO_FINGERPRINT = NilpotentFingerprint(*((0,) * MAX_POWER,) * 3)
def _fp(total, even, odd):
    pad = lambda t: tuple(t) + (0,) * (MAX_POWER - len(t))
    return NilpotentFingerprint(pad(total), pad(even), pad(odd))


FINGERPRINT_TABLE = {
    "zero": ZERO_FINGERPRINT,
    1: _fp((34, 1), (17,), (17, 1)),
    2: _fp((52, 10), (26, 4), (26, 6)),
    5: _fp((64, 19, 2), (32, 8, 1), (32, 11, 1)),
    6: _fp((66, 34, 2, 1), (33, 16, 1), (33, 18, 1, 1)),
    9: _fp((66, 34, 2, 1), (33, 14, 1, 1), (33, 20, 1)),
    20: _fp((84, 59, 34, 10, 2, 1), (42, 28, 17, 4, 1), (42, 31, 17, 6, 1, 1)),
    44: _fp((94, 64, 34, 19, 4, 2), (47, 30, 17, 9, 2), (47, 34, 17, 10, 2, 2)),
    50: _fp((96, 80, 64, 49, 34, 19, 4, 3), (48, 38, 32, 23, 17, 8, 2, 1), (48, 42, 32, 26, 17, 11, 2, 2)),
}


def fixture_fingerprints() -> dict:
    """Label -> fingerprint, recomputed from the stored normal-triple representatives."""
    out = {"zero": ZERO_FINGERPRINT}
    for label in ORBIT_TO_FAMILY:
        out[label] = fingerprint(nilpotent_triple(label)[1])
    return out


CLASS_FAMILY = {"zero": 1, **ORBIT_TO_FAMILY}


def identify_class(n: MultiVector, table: dict | None = None) -> tuple:
    """(orbit label, family number) of a nilpotent 4-vector in the image of the embedding."""
    return lookup_fingerprint(fingerprint(n), table)


def lookup_fingerprint(fp: NilpotentFingerprint, table: dict | None = None) -> tuple:
    table = FINGERPRINT_TABLE if table is None else table
    for label, ref in table.items():
        if ref == fp:
            return label, CLASS_FAMILY[label]
    raise UnrecognizedOrbit(f"no single-occupancy nilpotent orbit has fingerprint {fp}")


@dataclass(frozen=True)
class StateAnalysis:
    fingerprint: NilpotentFingerprint
    quadruple: InvariantQuadruple
    label: object
    family: int
    semisimple_part: MultiVector = field(compare=False)
    nilpotent_part: MultiVector = field(compare=False)


def analyze(phi: QubitState) -> StateAnalysis:
    if phi.is_zero():
        raise ZeroState("the zero state has no SLOCC class")
    semi, nil = jordan_decompose(embed(phi))
    fp = fingerprint(nil)
    label, family = lookup_fingerprint(fp)
    return StateAnalysis(fp, restricted_invariants(phi), label, family, semi, nil)


@dataclass(frozen=True)
class DecisionReport:
    equivalent: bool
    fingerprints: tuple
    quadruples: tuple
    labels: tuple
    families: tuple

    def lines(self) -> list:
        out = [f"equivalent: {'yes' if self.equivalent else 'no'}"]
        for k, name in enumerate(("A", "B")):
            q = self.quadruples[k]
            out.append(f"{name}.class: {self.labels[k]}")
            out.append(f"{name}.family: {self.families[k]}")
            out.append(f"{name}.fingerprint: {self.fingerprints[k]}")
            out.append(f"{name}.f2: {q.f2}")
            out.append(f"{name}.f6: {q.f6}")
            out.append(f"{name}.f8: {q.f8}")
            out.append(f"{name}.f12: {q.f12}")
        return out


def slocc_equivalent(phi: QubitState, psi: QubitState) -> DecisionReport:
    """Equivalent under local SL(2)^4 and qubit permutations iff the nilpotent
    fingerprints and the restricted invariant quadruples both agree."""
    a, b = analyze(phi), analyze(psi)
    same = a.fingerprint == b.fingerprint and a.quadruple == b.quadruple
    return DecisionReport(
        same,
        (a.fingerprint, b.fingerprint),
        (a.quadruple, b.quadruple),
        (a.label, b.label),
        (a.family, b.family),
    )
