# %% Building a theta-Lau product
from lauder import lau, lau_multiply, unitization, zoo_get
from lauder.lau import LauError

A = zoo_get("colalg2").algebra
Q2 = zoo_get("Q2")
ctx = lau(A, Q2.algebra, Q2.character("chi1"), Q2.character("chi2"))
print("labels:", ctx.product.labels)

# %%
# (a, b)(x, y) = (ax + theta(y) a + theta(b) x, by)
X = (1, 2, 3, 0)
Y = (0, 1, 1, 5)
print("X ._theta Y =", [str(c) for c in lau_multiply(ctx, "theta", X, Y)])
print("X ._phi   Y =", [str(c) for c in lau_multiply(ctx, "phi", X, Y)])

# %%
# With B = Q and theta = id the product is just the unitization of A.
Q = zoo_get("Q")
M2 = zoo_get("M2").algebra
u = lau(M2, Q.algebra, Q.character("id"))
print("same structure constants as unitization(M2):", u.product.sc == unitization(M2).sc)

# %%
# theta = 0 gives the direct product, which is refused unless asked for.
from lauder import Character

try:
    lau(M2, Q.algebra, Character.of([0]))
except LauError as exc:
    print("refused:", exc)
print("direct product dim:", lau(M2, Q.algebra, Character.of([0]), Q.character("id"), direct=True).dim)
