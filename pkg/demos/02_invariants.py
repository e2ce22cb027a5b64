"""Polynomial invariants from a 28x28 matrix that is quadratic in the state.

Traces of its powers give SL8-invariant polynomials of degrees 2..18; on qubit
states the degrees 10, 14, 18 are polynomials in the degrees 2, 6, 8, 12.
"""
import random

from qubitwedge import embed, katanova_matrix, restricted_invariants, sampling, verify_appendix_identities
from qubitwedge.canonical import a_state
from qubitwedge.exterior import compound
from qubitwedge.invariants import all_invariants, f_product, genericity_polynomial

rng = random.Random(1)
phi = sampling.qubit_state(rng)
print("random Gaussian-rational state; invariant matrix shape:", katanova_matrix(embed(phi)).shape)
q = restricted_invariants(phi)
for name, v in zip(("f2", "f6", "f8", "f12"), q):
    print(f"  {name} = {v}")

op = sampling.local_operator(rng)
print("unchanged by a random local SL operator with a qubit permutation:",
      restricted_invariants(op.apply(phi)) == q)
g = sampling.sl8(rng)
print("all seven unchanged by a random SL8 matrix on the 4-vector:",
      all_invariants(compound(g, embed(phi))) == all_invariants(embed(phi)))

print("\nrelations expressing f10, f14, f18:")
for variant in ("printed", "refit"):
    checks = verify_appendix_identities(embed(phi), variant=variant)
    print(f"  {variant:8s}", ", ".join(f"{c.name}: {'holds' if c.holds else 'fails'}" for c in checks))
print("  (the printed degree-18 relation has three wrong coefficients; the refit values are exact)")

P = genericity_polynomial()
print("\nweight-24 polynomial P with P(f2, f6, f8, f12) = prod (x_i^2 - x_j^2)^2 on Cartan states:")
print(" ", P)
pt = (1, 2, 3, 5)
print(f"  check at {pt}:", P(restricted_invariants(a_state(*pt))) == f_product(*pt) ** 2)
