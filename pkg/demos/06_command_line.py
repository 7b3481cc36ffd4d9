"""
Certificates on the command line
================================

Every command writes plain files: graph matrices and JSON documents bound
to their input by a sha256 digest.  This script drives the CLI through
its Python entry point inside a temporary directory.
"""

# %%
import json
import tempfile
from pathlib import Path

from c5pair.cli import main

work = Path(tempfile.mkdtemp())


def run(*argv):
    code = main([str(a) for a in argv])
    print(f"  -> exit {code}")
    return code


# %%
run("gen", "planted", "--n", 600, "--seed", 0, "-o", work / "t.txt", "--structure-out", work / "s.json")
run("structure", "verify", work / "t.txt", work / "s.json")
run("pair", "find", work / "t.txt", work / "s.json", "-o", work / "pair.json")
run("pair", "verify", work / "t.txt", work / "pair.json")

# %%
# Tampering with the certificate makes verification fail with exit 13.
doc = json.loads((work / "pair.json").read_text())
doc["B"].append(doc["A"][0])
(work / "pair.json").write_text(json.dumps(doc))
run("pair", "verify", work / "t.txt", work / "pair.json")

# %%
run("gen", "outsimp", "--n", 40, "--seed", 3, "-o", work / "d.txt")
run("split", work / "d.txt", "-o", work / "split.json")
run("verify", work / "d.txt", work / "split.json")

# %%
run("experiment", "eh-stats", "--gen", "planted,c5free", "--n", "150", "--seeds", "0-1", "--c", "1/10")
