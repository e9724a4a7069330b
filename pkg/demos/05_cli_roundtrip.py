# %% Driving the lauder command from Python
# Everything here is also available as `lauder ...` in a shell.
import json
import tempfile
from pathlib import Path

from lauder.cli import main

out = Path(tempfile.mkdtemp())
main(["zoo", "export", "cor25-M2-Q2", "--out", str(out)])
print(sorted(p.name for p in out.iterdir()))

# %%
print("check:", main(["check", str(out / "M2.json")]))
main(["solve", "--kind", "lau-jder", "--ctx", str(out / "cor25-M2-Q2.ctx.json"), "--out", str(out / "jder.json")])
print(json.loads((out / "jder.json").read_text()))

# %%
# Exit code 4: the theorem's hypotheses fail (B = Qdual is not semisimple).
code = main(["verify", "--ctx", "nonss-colalg2-Qdual", "--claims", "Thm2.6", "--out", str(out / "r.json")])
print("exit", code, json.loads((out / "r.json").read_text())["claims"][0]["notes"])
