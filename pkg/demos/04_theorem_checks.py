# %% Checking the characterization results on every zoo context
from lauder.theorems import (
    CLAIMS,
    decompose,
    der_j,
    reconstruct,
    right_identity_samples,
    verify_context,
)
from lauder.zoo import zoo_context, zoo_contexts

# %%
# Any generalized Jordan derivation splits into a pair (d_A, d_B) and is
# rebuilt from that pair, whichever right identity u is used.
ctx = zoo_context("colalg2-T2-mixed")
for u in right_identity_samples(ctx.A, 2):
    for d in der_j(ctx).basis:
        dec = decompose(ctx, d, u)
        assert reconstruct(ctx, dec.d_A, dec.d_B, u) == d
print("reconstruction exact on", der_j(ctx).dim, "basis maps")

# %%
short = {"pass": "ok", "fail": "FAIL", "hypothesis-not-met": "-"}
print(f"{'context':22s}" + "".join(f"{c:>8s}" for c in CLAIMS))
for name, ctx in zoo_contexts():
    report = verify_context(ctx)
    print(f"{name:22s}" + "".join(f"{short[c['status']]:>8s}" for c in report["claims"]))

# %%
# A report carries witnesses and notes; here the dichotomy on a context
# where the A-side is only right-unital.
import json

r = verify_context(zoo_context("colalg2-T2-split"), ["Cor2.3"])
print(json.dumps(r["claims"][0], indent=1)[:600])
