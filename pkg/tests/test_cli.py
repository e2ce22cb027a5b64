import io
from fractions import Fraction
import random
import subprocess
import sys

import numpy as np
import pytest

from qubitwedge import sampling
from qubitwedge.canonical import embed, family_representative, local_to_matrix8
from qubitwedge.cli import main
from qubitwedge.factor import haar_su8, random_local_unitary
from qubitwedge.formats import (
    dump_multivector, dump_qubit_state, dump_unitary, load_multivector, load_qubit_state,
)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_embed_unembed_roundtrip(write, rng):
    phi = sampling.qubit_state(rng)
    code, text = run("embed", write("s.txt", dump_qubit_state(phi)))
    assert code == 0 and load_multivector(text) == embed(phi)
    code, back = run("unembed", write("m.txt", text))
    assert code == 0 and load_qubit_state(back) == phi


def test_embed_sparse(write):
    code, text = run("embed", "--sparse", write("s.txt", "0000 : 1\n"))
    assert text == "grade=4\n1 3 5 7 : 1\n"


def test_unembed_non_sov_exits_2(write, capsys):
    code, _ = run("unembed", write("m.txt", "grade=4\n1 2 3 4 : 1\n"))
    assert code == 2
    assert "NotSOV" in capsys.readouterr().err


def test_invariants(write):
    code, text = run("invariants", write("s.txt", "0000 : 1\n1111 : 1\n"))
    assert code == 0
    assert text.splitlines()[0] == "f2: 12"
    code, text = run("invariants", "--all", write("s.txt", "0000 : 1\n1111 : 1\n"))
    assert [ln.split(":")[0] for ln in text.splitlines()] == ["f2", "f6", "f8", "f10", "f12", "f14", "f18"]


def test_jordan(write):
    phi = family_representative(3, 2, 5)
    code, text = run("jordan", "--sparse", write("s.txt", dump_qubit_state(phi)))
    assert code == 0
    _, semi_txt, nil_txt = text.split("# ")
    zero = family_representative(3, 0, 0)
    assert load_multivector(semi_txt.split("\n", 1)[1]) == embed(phi - zero)
    assert load_multivector(nil_txt.split("\n", 1)[1]) == embed(zero)


def test_classify(write):
    code, text = run("classify", write("s.txt", dump_qubit_state(family_representative(9, 1))))
    assert code == 0
    assert "class: 20" in text and "family: 9" in text and "semisimple: no" in text


def test_equiv_exit_codes(write):
    a = write("a.txt", dump_qubit_state(family_representative(3, 2, 5)))
    b = write("b.txt", dump_qubit_state(family_representative(3, 5, 2)))
    c = write("c.txt", dump_qubit_state(family_representative(3, 2, 7)))
    assert run("equiv", a, b) == (0, "equivalent: yes\n")
    code, text = run("equiv", "--report", a, c)
    assert code == 1 and text.startswith("equivalent: no\n") and "B.family: 3" in text


def test_equiv_accepts_fermionic_input(write):
    phi = family_representative(10, 3)
    a = write("a.txt", dump_qubit_state(phi))
    b = write("b.txt", dump_multivector(embed(phi), skip_zero=True))
    assert run("equiv", a, b)[0] == 0


def test_factor(write):
    nrng = np.random.default_rng(5)
    phi = sampling.generic_state(random.Random(5))
    s = write("s.txt", dump_qubit_state(phi))
    op = random_local_unitary(nrng)
    code, text = run("factor", write("u.txt", dump_unitary(local_to_matrix8(op))), s)
    assert code == 0
    assert text.splitlines()[0] == "permutation: " + " ".join(str(p + 1) for p in op.perm)
    assert float(text.splitlines()[-1].split()[-1]) <= 1e-9
    code, text = run("factor", write("h.txt", dump_unitary(haar_su8(nrng))), s)
    assert code == 1 and text.startswith("not factored")
    code, _ = run("factor", write("n.txt", dump_unitary(2 * np.eye(8))), s)
    assert code == 2


def test_rep():
    code, text = run("rep", "--family", "9", "--params", "1/2")
    assert code == 0 and load_qubit_state(text) == family_representative(9, Fraction(1, 2))
    code, text = run("rep", "--family", "2", "--params", "1", "2", "3", "--fermionic")
    assert code == 0 and text.startswith("grade=4")
    assert run("rep", "--family", "9", "--params", "1", "2")[0] == 2
    assert run("rep", "--family", "4")[0] == 2
    assert run("rep", "--family", "9", "--params", "r7")[0] == 2


def test_float_format(write):
    code, text = run("--format", "float", "embed", "--sparse", write("s.txt", "0000 : 1/2\n"))
    assert text == "grade=4\n1 3 5 7 : 0.5,0.0\n"
    code2, text2 = run("embed", "--sparse", "--format", "float", write("s.txt", "0000 : 1/2\n"))
    assert text2 == text


def test_exact_only_commands_reject_float(write):
    assert run("invariants", write("s.txt", "0000 : 1.0,0.0\n"))[0] == 2


def test_verify_deterministic():
    a = run("verify", "triples", "--seed", "7")
    b = run("--seed", "7", "verify", "triples")
    assert a == b and a[0] == 0


def test_verify_appendix_reports_failures():
    code, text = run("verify", "appendix-a", "--count", "2", "--seed", "7")
    assert code == 1
    assert "failed: f18 on random state #0" in text
    assert "refit degree-18 relation holds on 22/22 states" in text


def test_usage_errors(capsys):
    assert run()[0] == 2
    assert run("embed", "/nonexistent/file")[0] == 2
    assert run("verify", "nonsense")[0] == 2
    assert run("--help")[0] == 0


def test_module_entry_point(tmp_path):
    p = tmp_path / "s.txt"
    p.write_text("0000 : 1\n")
    res = subprocess.run([sys.executable, "-m", "qubitwedge", "embed", "--sparse", str(p)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "grade=4\n1 3 5 7 : 1\n"
