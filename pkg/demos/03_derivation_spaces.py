# %% Derivation and Jordan-derivation spaces as nullspaces
from lauder import (
    derivation_space,
    generalized_derivation_space,
    generalized_jordan_space,
    inner_derivation,
    jordan_derivation_space,
    zoo_context,
    zoo_get,
)

for name in ("M2", "T2", "Qdual", "Q2", "colalg2"):
    alg = zoo_get(name).algebra
    print(f"{name:8s} dim Der = {derivation_space(alg).dim}   dim Der_J = {jordan_derivation_space(alg).dim}")

# %%
# Every derivation of M2 is inner: ad(E12), ad(E21), ad(E11) already span Der(M2).
from lauder import MapSpace

M2 = zoo_get("M2").algebra
inner = MapSpace.spanned_by([inner_derivation(M2, M2.basis(i)) for i in range(4)], 4)
print("inner derivations of M2 fill Der(M2):", inner == derivation_space(M2))

# %%
# On a Lau product with theta, phi, gamma not all equal, a Jordan
# derivation need not be a derivation.
ctx = zoo_context("colalg2-Q2-mixed")
J = generalized_jordan_space(ctx)
D = generalized_derivation_space(ctx)
print("dim Der_J =", J.dim, " dim Der =", D.dim)
(d,) = J.basis
for row in d.to_json():
    print("  ", row)
