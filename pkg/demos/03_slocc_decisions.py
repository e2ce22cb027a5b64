"""Deciding SLOCC equivalence of four-qubit states exactly.

A state splits into commuting semisimple and nilpotent parts inside e7.  Two
states from the same family are equivalent exactly when the nilpotent parts lie
in the same orbit (read off from rank data of ad powers) and the four invariants
agree.
"""
from qubitwedge import family_representative, jordan_decompose, embed, slocc_equivalent
from qubitwedge.classify import analyze
from qubitwedge.canonical import appendix_c_fixture, unembed

phi = family_representative(3, 2, 5)
semi, nil = jordan_decompose(embed(phi))
print("family 3 with (a, b) = (2, 5)")
print("  semisimple part:", unembed(semi))
print("  nilpotent part: ", unembed(nil))
print("  nilpotent part is the a = b = 0 member:", unembed(nil) == family_representative(3, 0, 0))

a = analyze(phi)
print(f"  nilpotent orbit {a.label}, family {a.family}")
print(f"  fingerprint {a.fingerprint}")

print("\nsymmetries of family 3 and the decider's verdicts:")
for it in appendix_c_fixture(3):
    image = it.operator.apply(phi)
    mapped = it.mapped(2, 5)
    print(f"  {it.description}: (2, 5) -> {tuple(str(x) for x in mapped)}; "
          f"realized exactly: {image == family_representative(3, *mapped)}; "
          f"equivalent: {slocc_equivalent(phi, image).equivalent}")

print("\n(3, 4) against states with the same a^2 + b^2 = 25, hence the same f2:")
base = family_representative(3, 3, 4)
for other in ((5, 0), (-4, 3), (4, -3)):
    rep = slocc_equivalent(base, family_representative(3, *other))
    same_f2 = rep.quadruples[0].f2 == rep.quadruples[1].f2
    print(f"  vs {other}: f2 equal: {same_f2}; {'equivalent' if rep.equivalent else 'not equivalent'}")
