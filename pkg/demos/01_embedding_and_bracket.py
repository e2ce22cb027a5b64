"""Four qubits as four fermions in eight modes.

Qubit k owns the mode pair (2k-1, 2k); a ket picks one mode from each pair, so
every basis ket becomes a basis 4-vector.  Inside e7 = sl8 + wedge^4, these
4-vectors bracket into sl8 and the Cartan states generate a commuting family.
"""
from qubitwedge import E7Element, a_state, bracket, cartan_basis, embed, nilpotent_triple
from qubitwedge.canonical import QubitState, unembed
from qubitwedge.e7 import p_bracket

ghz = QubitState.from_kets({"0000": 1, "1111": 1})
print("GHZ embeds as", embed(ghz))
print("and comes back unchanged:", unembed(embed(ghz)) == ghz)

p = cartan_basis()
print("\nGHZ is the Cartan vector p2:", embed(ghz) == p[1])
print("a(0000+1111)+b(0011+1100)+c(0101+1010)+d(0110+1001) = a p2 + b p4 + c p5 - d p6:",
      embed(a_state(2, 3, 5, 7)) == p[1] * 2 + p[3] * 3 + p[4] * 5 - p[5] * 7)

commuting = all(not any(x for x in p_bracket(u, v).flat) for u in p for v in p)
print("the seven p_i commute pairwise:", commuting)

print("\nnormal sl2-triples of the nilpotent orbits that meet single-occupancy states:")
for label in (1, 2, 5, 6, 9, 20, 44, 50):
    h, e, f = nilpotent_triple(label)
    H, E, F = E7Element.from_matrix(h), E7Element.from_multivector(e), E7Element.from_multivector(f)
    ok = bracket(H, E) == E * 2 and bracket(H, F) == F * -2 and bracket(E, F) == H
    print(f"  orbit {label:2d}: H = diag{tuple(str(h[i, i]) for i in range(8))}  triple exact: {ok}")
