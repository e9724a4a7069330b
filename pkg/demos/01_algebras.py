# %% Structure-constant algebras and their characters
from lauder import right_identities, radical, zoo_get, zoo_list
from lauder.algebra import Algebra, check_associativity, two_sided_identity, verify_character, Character

for name in zoo_list():
    e = zoo_get(name)
    print(f"{name:8s} dim={e.algebra.dim}  tags={sorted(e.tags)}")

# %%
# colalg2 is spanned by the matrices [[1,0],[0,0]] and [[0,0],[1,0]].
# It has right identities but no two-sided one; they form an affine line.
A = zoo_get("colalg2").algebra
R = right_identities(A)
print("particular right identity:", [str(x) for x in R.particular])
print("free directions:", [[str(x) for x in v] for v in R.directions.basis])
print("two-sided identity:", two_sided_identity(A))
print("a few samples:", [[str(x) for x in u] for u in R.sample(4)])

# %%
# Radicals: T2 (upper triangular) has E12 in its radical, M2 has none.
for name in ("T2", "M2", "Qdual"):
    print(name, "radical basis:", [[str(x) for x in v] for v in radical(zoo_get(name).algebra).basis])

# %%
# Characters are nonzero multiplicative functionals.
Q2 = zoo_get("Q2").algebra
for v in ([1, 0], [0, 1], [1, 1]):
    bad = verify_character(Q2, Character.of(v))
    print(v, "ok" if not bad else f"{len(bad)} violations")

# %%
# A table that breaks associativity is caught with the offending triple.
broken = Algebra.from_table(["x", "y"], {(0, 1): {0: 1}, (1, 0): {1: 1}})
for v in check_associativity(broken)[:3]:
    print(v.where, v.message)
