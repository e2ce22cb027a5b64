"""Line-oriented text formats for qubit states, 4-vectors and 8x8 unitaries.

Qubit state:   16 lines ``ijkl : <scalar>`` in binary order (omitted kets are 0).
4-vector:      ``grade=4`` then ``i j k l : <scalar>`` lines in lexicographic order.
Unitary:       8 rows of 8 whitespace-separated ``re,im`` entries.

Blank lines and lines starting with ``#`` are ignored on input.
"""
from __future__ import annotations

import numpy as np

from .canonical import KETS, QubitState
from .exterior import MultiVector, rank, sort_sign, subsets
from .scalars import ZERO, ExactScalar, ScalarParseError, format_scalar, parse_scalar


class FormatError(ValueError):
    pass


def _lines(text: str) -> list:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def _format(x, regime: str) -> str:
    if regime == "float":
        z = complex(x)
        return f"{z.real!r},{z.imag!r}"
    if not isinstance(x, ExactScalar):
        raise FormatError("exact output requested for a float value")
    return format_scalar(x)


def _parse(text: str):
    text = text.strip()
    if "," in text:
        try:
            re, im = (float(t) for t in text.split(","))
        except ValueError:
            raise FormatError(f"bad float pair {text!r}") from None
        return complex(re, im)
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise FormatError(str(exc)) from None


def is_fermionic_text(text: str) -> bool:
    lines = _lines(text)
    return bool(lines) and lines[0].replace(" ", "").startswith("grade=")


# -- qubit states --------------------------------------------------------------

def dump_qubit_state(phi: QubitState, regime: str = "exact") -> str:
    return "".join(f"{k} : {_format(a, regime)}\n" for k, a in zip(KETS, phi.amps))


def load_qubit_state(text: str) -> QubitState:
    amps = [None] * 16
    for ln in _lines(text):
        if ":" not in ln:
            raise FormatError(f"expected 'ijkl : scalar', got {ln!r}")
        ket, val = (t.strip() for t in ln.split(":", 1))
        if len(ket) != 4 or set(ket) - {"0", "1"}:
            raise FormatError(f"bad ket label {ket!r}")
        idx = int(ket, 2)
        if amps[idx] is not None:
            raise FormatError(f"ket {ket} given twice")
        amps[idx] = _parse(val)
    float_regime = any(isinstance(a, complex) for a in amps)
    zero = 0j if float_regime else ZERO
    amps = [zero if a is None else a for a in amps]
    if float_regime:
        amps = [complex(a) for a in amps]
    return QubitState(amps)


# -- 4-vectors ----------------------------------------------------------------

def dump_multivector(psi: MultiVector, regime: str = "exact", skip_zero: bool = False) -> str:
    out = [f"grade={psi.grade}"]
    for s, c in zip(subsets(psi.grade), psi.coeffs):
        if skip_zero and not c:
            continue
        out.append(" ".join(map(str, s)) + " : " + _format(c if c else (ZERO if regime == "exact" else 0j), regime))
    return "\n".join(out) + "\n"


def load_multivector(text: str) -> MultiVector:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty multivector file")
    head = lines[0].replace(" ", "")
    if not head.startswith("grade="):
        raise FormatError("multivector file must start with 'grade=k'")
    try:
        grade = int(head.split("=", 1)[1])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}") from None
    if not 0 <= grade <= 8:
        raise FormatError("grade must be between 0 and 8")
    entries = {}
    for ln in lines[1:]:
        if ":" not in ln:
            raise FormatError(f"expected 'i j k l : scalar', got {ln!r}")
        idx, val = ln.split(":", 1)
        try:
            s = tuple(int(t) for t in idx.split())
        except ValueError:
            raise FormatError(f"bad index list {idx!r}") from None
        if len(s) != grade or any(not 1 <= t <= 8 for t in s):
            raise FormatError(f"indices {idx.strip()!r} do not fit grade {grade}")
        sign, srt = sort_sign(s)
        if not sign:
            raise FormatError(f"repeated index in {idx.strip()!r}")
        if srt in entries:
            raise FormatError(f"basis element {srt} given twice")
        v = _parse(val)
        entries[srt] = v if sign > 0 else -v
    float_regime = any(isinstance(v, complex) for v in entries.values())
    mv = MultiVector(grade, exact_regime=not float_regime)
    for s, v in entries.items():
        mv.coeffs[rank(s)] = v
    return mv


# -- unitaries ---------------------------------------------------------------------

def dump_unitary(u: np.ndarray) -> str:
    return "".join(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row) + "\n"
                   for row in np.asarray(u, dtype=complex))


def load_unitary(text: str) -> np.ndarray:
    rows = _lines(text)
    if len(rows) != 8:
        raise FormatError(f"unitary file needs 8 rows, found {len(rows)}")
    out = np.empty((8, 8), dtype=complex)
    for i, row in enumerate(rows):
        cells = row.split()
        if len(cells) != 8:
            raise FormatError(f"row {i + 1} needs 8 entries, found {len(cells)}")
        for j, cell in enumerate(cells):
            try:
                re, im = (float(t) for t in cell.split(","))
            except ValueError:
                raise FormatError(f"bad entry {cell!r} in row {i + 1}") from None
            out[i, j] = complex(re, im)
    if not np.all(np.isfinite(out)):
        raise FormatError("unitary has non-finite entries")
    return out
