"""Four-qubit states, the single-occupancy embedding and the fixed tables.

Qubit k (1..4) lives in the block ``V_k = span(e_{2k-1}, e_{2k})`` and the ket
``|ijkl>`` is sent to ``e_{1+i} ^ e_{3+j} ^ e_{5+k} ^ e_{7+l}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .exterior import DIM, MultiVector, diag8, rank, sort_sign, subsets
from .scalars import I, ZERO, ExactScalar, exact, radical


class NotSOV(ValueError):
    """A 4-vector has weight outside the single-occupancy subspace."""

    def __init__(self, offending):
        self.offending = list(offending)
        labels = ", ".join("e" + "".join(map(str, s)) for s in self.offending)
        super().__init__(f"not a single-occupancy vector; offending basis elements: {labels}")


class UnknownFamily(KeyError):
    pass


class UnknownLabel(KeyError):
    pass


KETS = tuple("".join(bits) for bits in product("01", repeat=4))


def _ket_index(ket: str) -> int:
    if len(ket) != 4 or set(ket) - {"0", "1"}:
        raise ValueError(f"bad ket label {ket!r}")
    return int(ket, 2)


class QubitState:
    """Sixteen amplitudes in binary order |0000>, |0001>, ..., |1111>."""

    __slots__ = ("amps",)

    def __init__(self, amps):
        amps = list(amps)
        if len(amps) != 16:
            raise ValueError("a 4-qubit state has 16 amplitudes")
        if all(isinstance(a, (complex, float, np.complexfloating, np.floating)) for a in amps):
            self.amps = tuple(complex(a) for a in amps)
        else:
            self.amps = tuple(exact(a) for a in amps)

    @classmethod
    def from_kets(cls, terms: dict) -> "QubitState":
        amps = [ZERO] * 16
        for ket, c in terms.items():
            amps[_ket_index(ket)] = amps[_ket_index(ket)] + exact(c)
        return cls(amps)

    @classmethod
    def zero(cls) -> "QubitState":
        return cls([ZERO] * 16)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.amps[0], ExactScalar)

    def __getitem__(self, ket) -> ExactScalar:
        if isinstance(ket, str):
            ket = _ket_index(ket)
        return self.amps[ket]

    def __add__(self, other):
        return QubitState([a + b for a, b in zip(self.amps, other.amps)])

    def __sub__(self, other):
        return QubitState([a - b for a, b in zip(self.amps, other.amps)])

    def __neg__(self):
        return QubitState([-a for a in self.amps])

    def __mul__(self, c):
        c = exact(c) if self.is_exact else complex(c)
        return QubitState([a * c for a in self.amps])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QubitState):
            return NotImplemented
        return self.amps == other.amps

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(bool(a) for a in self.amps)

    def norm2(self):
        if self.is_exact:
            acc = ZERO
            for a in self.amps:
                acc = acc + a.conj() * a
            return acc
        return sum(abs(a) ** 2 for a in self.amps)

    def to_array(self) -> np.ndarray:
        return np.array([complex(a) for a in self.amps], dtype=complex)

    def __repr__(self):
        terms = " + ".join(f"({a})|{k}>" for k, a in zip(KETS, self.amps) if a)
        return f"QubitState({terms or '0'})"


# -- embedding ---------------------------------------------------------------------

def ket_subset(ket: str | int) -> tuple:
    """Basis 4-subset hit by a computational basis ket."""
    if isinstance(ket, int):
        ket = KETS[ket]
    return tuple(2 * k + 1 + int(b) for k, b in enumerate(ket))


SOV_SUBSETS = tuple(ket_subset(k) for k in KETS)
SOV_RANKS = tuple(rank(s) for s in SOV_SUBSETS)


def embed(phi: QubitState) -> MultiVector:
    """Isometric embedding of the qubit space onto the single-occupancy 4-vectors."""
    mv = MultiVector(4, exact_regime=phi.is_exact)
    for r, a in zip(SOV_RANKS, phi.amps):
        mv.coeffs[r] = a
    return mv


def is_sov(psi: MultiVector) -> bool:
    return not _non_sov_support(psi)


def _non_sov_support(psi: MultiVector) -> list:
    allowed = set(SOV_RANKS)
    subs = subsets(4)
    return [subs[r] for r, c in enumerate(psi.coeffs) if c and r not in allowed]


def unembed(psi: MultiVector) -> QubitState:
    if psi.grade != 4:
        raise ValueError("only grade-4 multivectors embed qubit states")
    bad = _non_sov_support(psi)
    if bad:
        raise NotSOV(bad)
    return QubitState([psi.coeffs[r] for r in SOV_RANKS])


# -- Cartan subspace ------------------------------------------------------------

_CARTAN_TERMS = (
    ((1, 2, 3, 4), (5, 6, 7, 8)),
    ((1, 3, 5, 7), (6, 8, 2, 4)),
    ((1, 5, 6, 2), (8, 4, 3, 7)),
    ((1, 6, 8, 3), (4, 7, 5, 2)),
    ((1, 8, 4, 5), (7, 2, 6, 3)),
    ((1, 4, 7, 6), (2, 3, 8, 5)),
    ((1, 7, 2, 8), (3, 5, 4, 6)),
)


def cartan_basis() -> tuple:
    """The seven spanning 4-vectors p1..p7 of the Cartan subspace."""
    return tuple(MultiVector.basis(*s) + MultiVector.basis(*t) for s, t in _CARTAN_TERMS)


def a_state(a, b, c, d) -> QubitState:
    """a(|0000>+|1111>) + b(|0011>+|1100>) + c(|0101>+|1010>) + d(|0110>+|1001>)."""
    a, b, c, d = map(exact, (a, b, c, d))
    return QubitState.from_kets({
        "0000": a, "1111": a, "0011": b, "1100": b,
        "0101": c, "1010": c, "0110": d, "1001": d,
    })


# -- families with non-trivial Jordan decomposition ---------------------------------

FAMILY_ARITY = {1: 4, 2: 3, 3: 2, 6: 2, 9: 1, 10: 1}
NILPOTENT_ONLY_FAMILIES = (12, 14, 16)


def _family2(a, b, c):
    h = Fraction(1, 2)
    t = {}
    for ket in ("0000", "1111"):
        t[ket] = (a + c - I) * h
    for ket in ("0011", "1100"):
        t[ket] = (a - c + I) * h
    for ket in ("0101", "1010"):
        t[ket] = (b + c + I) * h
    for ket in ("0110", "1001"):
        t[ket] = (b - c - I) * h
    for ket in ("0001", "0111", "1000", "1110"):
        t[ket] = I * h
    for ket in ("0010", "0100", "1011", "1101"):
        t[ket] = -I * h
    return t


def _family3(a, b):
    h = Fraction(1, 2)
    t = {}
    for ket in ("0000", "1111", "0011", "1100"):
        t[ket] = a * h
    for ket in ("0101", "1010"):
        t[ket] = (b + 1) * h
    for ket in ("0110", "1001"):
        t[ket] = (b - 1) * h
    for ket in ("1101", "0010"):
        t[ket] = exact(h)
    for ket in ("0001", "1110"):
        t[ket] = exact(-h)
    return t


def _family6(a, b):
    h = Fraction(1, 2)
    t = {}
    for ket in ("0000", "1111"):
        t[ket] = (a + b) * h
    for ket in ("0101", "1010"):
        t[ket] = b
    t["1001"] = I
    t["0110"] = -I
    for ket in ("0011", "1100"):
        t[ket] = (a - b) * h
    for ket in ("0010", "0100", "1011", "1101"):
        t[ket] = exact(h)
    for ket in ("0001", "0111", "1000", "1110"):
        t[ket] = exact(-h)
    return t


def _family9(a):
    t = {ket: a for ket in ("0000", "0101", "1010", "1111")}
    t["0100"] = -2 * I
    t["1001"] = 2 * I
    t["1110"] = 2 * I
    return t


def _family10(a):
    h = Fraction(1, 2)
    t = {}
    for ket in ("0000", "1111", "0011", "1100"):
        t[ket] = (a + I) * h
    for ket in ("0101", "1010"):
        t[ket] = (a - I + 1) * h
    for ket in ("0110", "1001"):
        t[ket] = (a - I - 1) * h
    for ket in ("1101", "0010"):
        t[ket] = (I + 1) * h
    for ket in ("0001", "1110"):
        t[ket] = (I - 1) * h
    for ket in ("0100", "0111", "1000", "1011"):
        t[ket] = -I * h
    return t


_FAMILIES = {2: _family2, 3: _family3, 6: _family6, 9: _family9, 10: _family10}


def family_representative(no: int, *params) -> QubitState:
    """Representative of a parametrized family; family 1 is ``a_state``."""
    if len(params) == 1 and isinstance(params[0], (list, tuple)):
        params = tuple(params[0])
    if no not in FAMILY_ARITY:
        raise UnknownFamily(f"no qubit representative for family {no}")
    if len(params) != FAMILY_ARITY[no]:
        raise ValueError(f"family {no} takes {FAMILY_ARITY[no]} parameters, got {len(params)}")
    params = tuple(exact(p) for p in params)
    if no == 1:
        return a_state(*params)
    return QubitState.from_kets(_FAMILIES[no](*params))


# -- nilpotent sl2-triples -----------------------------------------------------

def _mv(terms):
    return MultiVector.from_dict(4, terms)


def _h(values, den=1):
    return diag8([Fraction(v, den) for v in values])


def _triple_data():
    r2, r3, r6, r10 = radical(2), radical(3), radical(6), radical(10)
    return {
        1: (_h((1, 1, 1, 1, -1, -1, -1, -1), 2), _mv({(1, 2, 3, 4): 1})),
        2: (_h((1, 1, 0, 0, 0, 0, -1, -1)), _mv({(1, 2, 3, 5): I, (1, 2, 4, 6): I})),
        5: (_h((3, 1, 1, 1, -1, -1, -1, -3), 2),
            _mv({(1, 3, 4, 7): I, (1, 2, 3, 5): I, (1, 2, 4, 6): I})),
        6: (_h((1, 1, 1, 1, -1, -1, -1, -1)),
            _mv({(1, 3, 4, 7): I, (1, 2, 3, 5): I, (2, 3, 4, 8): I, (1, 2, 4, 6): I})),
        9: (_h((2, 0, 0, 0, 0, 0, 0, -2)), _mv({(1, 2, 3, 4): r2, (1, 5, 6, 7): I * r2})),
        20: (_h((2, 2, 1, 1, -1, -1, -2, -2)),
             _mv({(1, 3, 4, 7): I * r3, (2, 3, 4, 8): I * r3, (1, 2, 5, 6): 2})),
        44: (_h((2, 2, 2, 0, 0, -2, -2, -2)),
             _mv({(1, 3, 5, 7): 1, (2, 3, 5, 8): 2, (1, 2, 5, 6): 1,
                  (1, 3, 4, 7): I * r3, (1, 2, 4, 6): -I * r3})),
        50: (_h((4, 2, 2, 2, -2, -2, -2, -4)),
             _mv({(1, 3, 5, 7): r6, (1, 4, 6, 7): r6, (1, 2, 5, 6): r6, (2, 3, 4, 8): I * r10})),
    }


# Orbit number in the classical list of nilpotent 4-vectors in eight dimensions -> qubit family number
ORBIT_TO_FAMILY = {1: 2, 2: 3, 5: 10, 6: 6, 9: 16, 20: 9, 44: 14, 50: 12}
NILPOTENT_LABELS = tuple(ORBIT_TO_FAMILY)


def nilpotent_triple(label: int):
    """(H, E, F) with F the image of E under the involution sigma."""
    from .e7 import sigma_odd

    data = _triple_data()
    if label not in data:
        raise UnknownLabel(f"no nilpotent single-occupancy orbit labelled {label}")
    h, e = data[label]
    return h, e, sigma_odd(e)


# -- local operators ----------------------------------------------------------

def _mat2(rows) -> np.ndarray:
    out = np.empty((2, 2), dtype=object)
    for i in range(2):
        for j in range(2):
            out[i, j] = exact(rows[i][j])
    return out


def perm_sign(perm) -> int:
    return sort_sign(perm)[0]


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """``g1 (x) g2 (x) g3 (x) g4`` followed by moving qubit k to position ``perm[k]``.

    ``perm`` is 0-based.  Exact operators use object arrays, float ones complex.
    """

    gates: tuple
    perm: tuple = (0, 1, 2, 3)

    def __post_init__(self):
        if len(self.gates) != 4 or sorted(self.perm) != [0, 1, 2, 3]:
            raise ValueError("need four 2x2 gates and a permutation of 0..3")

    @classmethod
    def identity(cls) -> "LocalOperator":
        eye = _mat2([[1, 0], [0, 1]])
        return cls((eye, eye, eye, eye))

    @classmethod
    def swap(cls, i: int, j: int) -> "LocalOperator":
        """Swap of qubits i and j (1-based) with identity gates."""
        perm = list(range(4))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        eye = _mat2([[1, 0], [0, 1]])
        return cls((eye, eye, eye, eye), tuple(perm))

    @property
    def is_exact(self) -> bool:
        return all(g.dtype == object for g in self.gates)

    def then(self, other: "LocalOperator") -> "LocalOperator":
        """Apply ``self`` first, then ``other``."""
        gates = [None] * 4
        for k in range(4):
            # qubit k: gate self.gates[k], lands at self.perm[k], then other's gate there
            gates[k] = other.gates[self.perm[k]] @ self.gates[k] if self.is_exact == other.is_exact \
                else np.asarray(other.gates[self.perm[k]], dtype=complex) @ np.asarray(self.gates[k], dtype=complex)
        perm = tuple(other.perm[self.perm[k]] for k in range(4))
        return LocalOperator(tuple(gates), perm)

    def determinants(self) -> tuple:
        return tuple(g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0] for g in self.gates)

    def apply(self, phi: QubitState) -> QubitState:
        exact_regime = phi.is_exact and self.is_exact
        amps = [ZERO if exact_regime else 0j] * 16
        cols = [[[(y, g[y, x]) for y in range(2) if g[y, x]] for x in range(2)] for g in self.gates]
        for idx, a in enumerate(phi.amps):
            if not a:
                continue
            bits = [(idx >> (3 - k)) & 1 for k in range(4)]
            partial = [((), a)]
            for k in range(4):
                partial = [(ys + (y,), c * v) for ys, c in partial for y, v in cols[k][bits[k]]]
            for ys, c in partial:
                out_bits = [0] * 4
                for k in range(4):
                    out_bits[self.perm[k]] = ys[k]
                j = out_bits[0] * 8 + out_bits[1] * 4 + out_bits[2] * 2 + out_bits[3]
                amps[j] = amps[j] + c
        return QubitState(amps)

    __call__ = apply


def local_to_matrix8(op: LocalOperator) -> np.ndarray:
    """8x8 matrix on V realizing ``op`` on embedded states.

    Block k carries ``gates[k]`` and is moved to block ``perm[k]``.  Odd qubit
    permutations also negate block 1 so that re-sorting the wedge factors does not
    flip the sign: ``compound(local_to_matrix8(op), embed(phi)) == embed(op(phi))``.
    """
    exact_regime = op.is_exact
    if exact_regime:
        out = np.empty((DIM, DIM), dtype=object)
        out.fill(ZERO)
    else:
        out = np.zeros((DIM, DIM), dtype=complex)
    sign = perm_sign(op.perm)
    for k, g in enumerate(op.gates):
        tgt = op.perm[k]
        for y in range(2):
            for x in range(2):
                v = g[y, x] if exact_regime else complex(g[y, x])
                if k == 0 and sign < 0:
                    v = -v
                out[2 * tgt + y, 2 * k + x] = v
    return out


# -- named 2x2 gates -----------------------------------------------------------

def gate(name: str) -> np.ndarray:
    r2inv = radical(2) / 2
    table = {
        "I": [[1, 0], [0, 1]],
        "isy": [[0, 1], [-1, 0]],           # i * sigma_y
        "isz": [[I, 0], [0, -I]],           # i * sigma_z
        "M": [[r2inv, I * r2inv], [I * r2inv, r2inv]],
        "Minv": [[r2inv, -I * r2inv], [-I * r2inv, r2inv]],
        "A": [[r2inv, -I * r2inv], [-I * r2inv, r2inv]],
        "B": [[I * r2inv, r2inv], [-r2inv, -I * r2inv]],
        "C": [[-I * r2inv, -r2inv], [r2inv, I * r2inv]],
    }
    return _mat2(table[name])


def _op(names, perm=(0, 1, 2, 3), transpose=False) -> LocalOperator:
    gates = tuple(gate(n).T.copy() if transpose else gate(n) for n in names)
    return LocalOperator(gates, tuple(perm))


def _swap_perm(i, j):
    perm = list(range(4))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return tuple(perm)


@dataclass(frozen=True)
class Intertwiner:
    """A local operator and the parameter substitution it realizes on a family."""

    family: int
    operator: LocalOperator = field(compare=False)
    parameter_map: object = field(compare=False)
    description: str = ""

    def mapped(self, *params):
        return tuple(exact(p) for p in self.parameter_map(*map(exact, params)))


def appendix_c_fixture(family: int) -> list:
    """Symmetry generators of each mixed family, realized by local operators."""
    h = Fraction(1, 2)
    fixtures = {
        2: [
            # the printed gates act on row vectors; as column operators they are transposed
            Intertwiner(2, _op("AABC", transpose=True).then(LocalOperator.swap(3, 4)),
                        lambda a, b, c: (b, -a, c), "A(x)A(x)B(x)C (row convention) then swap qubits 3,4"),
            Intertwiner(2, LocalOperator.swap(2, 3),
                        lambda a, b, c: ((a + b) * h + c, (a + b) * h - c, (a - b) * h),
                        "swap qubits 2,3"),
        ],
        3: [
            Intertwiner(3, _op(("I", "I", "isy", "isy")), lambda a, b: (a, -b), "I(x)I(x)iY(x)iY"),
            Intertwiner(3, _op(("Minv", "Minv", "M", "M")), lambda a, b: (b, a), "M^-1(x)M^-1(x)M(x)M"),
        ],
        6: [
            Intertwiner(6, LocalOperator.swap(2, 3),
                        lambda a, b: ((a + 3 * b) * h, (a - b) * h), "swap qubits 2,3"),
            Intertwiner(6, _op(("I", "I", "isy", "isy")).then(LocalOperator.swap(1, 2)),
                        lambda a, b: (a, -b), "I(x)I(x)iY(x)iY then swap qubits 1,2"),
        ],
        9: [Intertwiner(9, _op(("I", "isz", "I", "isz")), lambda a: (-a,), "I(x)iZ(x)I(x)iZ")],
        10: [Intertwiner(10, _op("MMMM"), lambda a: (-a,), "M(x)M(x)M(x)M")],
    }
    if family not in fixtures:
        raise UnknownFamily(f"no intertwiners listed for family {family}")
    return fixtures[family]


# -- Pauli stabilizer of the Cartan subspace ------------------------------------

def _pauli8(letters: str) -> np.ndarray:
    """Kronecker product of three Paulis on V = C^2 (x) C^2 (x) C^2 (first factor most significant)."""
    mats = {
        "I": np.array([[1, 0], [0, 1]], dtype=object),
        "X": np.array([[0, 1], [1, 0]], dtype=object),
        "Z": np.array([[1, 0], [0, -1]], dtype=object),
    }
    out = np.array([[1]], dtype=object)
    for ch in letters:
        out = np.kron(out, mats[ch])
    res = np.empty((DIM, DIM), dtype=object)
    for i in range(DIM):
        for j in range(DIM):
            res[i, j] = exact(int(out[i, j]))
    return res


def pauli_stabilizer_generators() -> list:
    """Generators of the three-qubit Pauli group inside SL8, including the central i*I."""
    gens = [_pauli8(s) for s in ("XII", "IXI", "IIX", "ZII", "IZI", "IIZ")]
    central = np.empty((DIM, DIM), dtype=object)
    central.fill(ZERO)
    for i in range(DIM):
        central[i, i] = I
    return gens + [central]
