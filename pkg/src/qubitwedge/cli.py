"""Command-line interface.

Exit codes: 0 success or "equivalent", 1 a negative verdict or failed check,
2 bad input.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path

from . import formats
from .canonical import FAMILY_ARITY, NotSOV, UnknownFamily, embed, family_representative, unembed
from .classify import UnrecognizedOrbit, ZeroState, analyze, slocc_equivalent
from .factor import NotBlockPermutation, NotGeneric, NotSOVImage, NotUnitary, theorem3_factor
from .invariants import DEGREES, all_invariants, restricted_invariants
from .jordan import FieldRestriction, jordan_decompose
from .scalars import ScalarParseError, exact, format_scalar, parse_scalar
from .verify import GROUPS, run_group

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_state(path: str):
    text = _read(path)
    if formats.is_fermionic_text(text):
        return unembed(formats.load_multivector(text))
    return formats.load_qubit_state(text)


def _load_4vector(path: str):
    text = _read(path)
    if formats.is_fermionic_text(text):
        psi = formats.load_multivector(text)
        if psi.grade != 4:
            raise InputError("expected a grade-4 multivector")
        return psi
    return embed(formats.load_qubit_state(text))


def _require_exact(obj, what: str):
    if not obj.is_exact:
        raise InputError(f"{what} must use exact scalars")
    return obj


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") or not text else text + "\n")


# -- subcommands ---------------------------------------------------------------------

def cmd_embed(args, out) -> int:
    phi = formats.load_qubit_state(_read(args.state))
    _emit(out, formats.dump_multivector(embed(phi), args.format, skip_zero=args.sparse))
    return EXIT_OK


def cmd_unembed(args, out) -> int:
    psi = formats.load_multivector(_read(args.state))
    _emit(out, formats.dump_qubit_state(unembed(psi), args.format))
    return EXIT_OK


def cmd_invariants(args, out) -> int:
    psi = _require_exact(_load_4vector(args.state), "state")
    if args.all:
        vals = all_invariants(psi)
        for d in DEGREES:
            _emit(out, f"f{d}: {format_scalar(exact(vals[d]))}")
        return EXIT_OK
    q = restricted_invariants(unembed(psi))
    for name, v in zip(("f2", "f6", "f8", "f12"), q):
        _emit(out, f"{name}: {format_scalar(v)}")
    return EXIT_OK


def cmd_jordan(args, out) -> int:
    psi = _require_exact(_load_4vector(args.state), "state")
    semi, nil = jordan_decompose(psi)
    _emit(out, "# semisimple part")
    _emit(out, formats.dump_multivector(semi, skip_zero=args.sparse))
    _emit(out, "# nilpotent part")
    _emit(out, formats.dump_multivector(nil, skip_zero=args.sparse))
    return EXIT_OK


def cmd_classify(args, out) -> int:
    phi = _require_exact(_load_state(args.state), "state")
    a = analyze(phi)
    _emit(out, f"class: {a.label}")
    _emit(out, f"family: {a.family}")
    _emit(out, f"fingerprint: {a.fingerprint}")
    for name, v in zip(("f2", "f6", "f8", "f12"), a.quadruple):
        _emit(out, f"{name}: {format_scalar(v)}")
    _emit(out, f"semisimple: {'yes' if a.nilpotent_part.is_zero() else 'no'}")
    _emit(out, f"nilpotent: {'yes' if a.semisimple_part.is_zero() else 'no'}")
    return EXIT_OK


def cmd_equiv(args, out) -> int:
    a = _require_exact(_load_state(args.state_a), "first state")
    b = _require_exact(_load_state(args.state_b), "second state")
    rep = slocc_equivalent(a, b)
    lines = rep.lines() if args.report else rep.lines()[:1]
    for ln in lines:
        _emit(out, ln)
    return EXIT_OK if rep.equivalent else EXIT_NEGATIVE


def cmd_factor(args, out) -> int:
    u = formats.load_unitary(_read(args.unitary))
    phi = _require_exact(_load_state(args.state), "state")
    try:
        fac = theorem3_factor(u, phi, tol=args.tol)
    except (NotGeneric, NotSOVImage, NotBlockPermutation) as exc:
        _emit(out, f"not factored: {type(exc).__name__}: {exc}")
        return EXIT_NEGATIVE
    _emit(out, "permutation: " + " ".join(str(p + 1) for p in fac.perm))
    for k, g in enumerate(fac.blocks):
        rows = "; ".join(" ".join(f"{z.real:.15g},{z.imag:.15g}" for z in row) for row in g)
        _emit(out, f"block{k + 1}: {rows}")
    _emit(out, "lambdas: " + " ".join(f"{z.real:.15g},{z.imag:.15g}" for z in fac.lambdas))
    _emit(out, f"residual: {fac.residual:.3e}")
    return EXIT_OK


def cmd_rep(args, out) -> int:
    try:
        params = [parse_scalar(p) for p in args.params]
    except ScalarParseError as exc:
        raise InputError(str(exc)) from None
    if args.family in FAMILY_ARITY and len(params) != FAMILY_ARITY[args.family]:
        raise InputError(f"family {args.family} takes {FAMILY_ARITY[args.family]} parameters")
    phi = family_representative(args.family, *params)
    text = formats.dump_multivector(embed(phi), skip_zero=True) if args.fermionic else formats.dump_qubit_state(phi)
    _emit(out, text)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = list(GROUPS) if args.group in (None, "all") else [args.group]
    if args.jobs < 1:
        raise InputError("--jobs must be at least 1")
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(run_group, n, args.seed, args.count) for n in names]
            results = (f.result() for f in futures)
            return _report(results, args, out)
    return _report((run_group(n, seed=args.seed, count=args.count) for n in names), args, out)


def _report(results, args, out) -> int:
    # results arrive in group order, so the report is independent of --jobs
    ok = True
    for res in results:
        ok &= res.ok
        for ln in res.lines(timings=args.timings):
            _emit(out, ln)
        out.flush()
    return EXIT_OK if ok else EXIT_NEGATIVE


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qubitwedge", description="Four qubits as four fermions in eight modes.")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("--format", choices=("exact", "float"), default="exact", help="scalar output regime")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the top-level value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized suites")
    common.add_argument("--format", choices=("exact", "float"), default=argparse.SUPPRESS,
                        help="scalar output regime")
    sub = p.add_subparsers(dest="command", required=True)
    add = partial(sub.add_parser, parents=[common])

    s = add("embed", help="qubit state file -> 4-vector file")
    s.add_argument("state")
    s.add_argument("--sparse", action="store_true", help="omit zero lines")
    s.set_defaults(func=cmd_embed)

    s = add("unembed", help="single-occupancy 4-vector file -> qubit state file")
    s.add_argument("state")
    s.set_defaults(func=cmd_unembed)

    s = add("invariants", help="restricted invariants f2, f6, f8, f12")
    s.add_argument("state", help="qubit state or 4-vector file")
    s.add_argument("--all", action="store_true", help="all seven SL8 invariants")
    s.set_defaults(func=cmd_invariants)

    s = add("jordan", help="semisimple and nilpotent parts")
    s.add_argument("state", help="qubit state or 4-vector file")
    s.add_argument("--sparse", action="store_true", help="omit zero lines")
    s.set_defaults(func=cmd_jordan)

    s = add("classify", help="nilpotent class, fingerprint and invariants of a state")
    s.add_argument("state")
    s.set_defaults(func=cmd_classify)

    s = add("equiv", help="decide SLOCC equivalence (exit 0 equivalent, 1 not)")
    s.add_argument("state_a")
    s.add_argument("state_b")
    s.add_argument("--report", action="store_true", help="print the full decision report")
    s.set_defaults(func=cmd_equiv)

    s = add("factor", help="factor a unitary keeping a generic state single-occupancy")
    s.add_argument("unitary")
    s.add_argument("state")
    s.add_argument("--tol", type=float, default=1e-8)
    s.set_defaults(func=cmd_factor)

    s = add("rep", help="family representative")
    s.add_argument("--family", type=int, required=True)
    s.add_argument("--params", nargs="*", default=[], help="exact scalars, e.g. 1/2 i r2")
    s.add_argument("--fermionic", action="store_true", help="emit the embedded 4-vector instead")
    s.set_defaults(func=cmd_rep)

    s = add("verify", help="replay check groups")
    s.add_argument("group", nargs="?", choices=list(GROUPS) + ["all"])
    s.add_argument("--count", type=int, default=None, help="override the sample count")
    s.add_argument("--timings", action="store_true", help="append wall-clock timings")
    s.add_argument("--jobs", type=int, default=1, help="run groups in this many processes")
    s.set_defaults(func=cmd_verify)
    return p


_INPUT_ERRORS = (
    InputError, formats.FormatError, ScalarParseError, NotSOV, UnknownFamily, ZeroState,
    FieldRestriction, NotUnitary, UnrecognizedOrbit, ValueError,
)


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except _INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
