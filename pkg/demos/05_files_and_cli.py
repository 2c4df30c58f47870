"""
Lattice files and the command line
==================================

Lattices travel as JSON with exact rational strings. The same commands
are available as ``hermlat <command>`` once the package is installed.
"""

import json
import os
import tempfile

from hermlat.cli import emit_report, run_command
from hermlat.lattice_io import dumps_lattice, parse_lattice_file
from hermlat.paperlab.catalog import make_named_hermitian

text = dumps_lattice(make_named_hermitian("Ex9"))
print(text)

path = os.path.join(tempfile.mkdtemp(), "ex9.json")
with open(path, "w") as fh:
    fh.write(text)
print(parse_lattice_file(path))

# hermlat verify ex9.json --json
r = run_command(["verify", path, "--json"])
doc = json.loads(emit_report(r, "json"))
print("exit", r.exit_code, "theorem", doc["theorem_id"], "k", doc["k"], "bound", doc["bound"])

# Shipped files can be named directly
print(emit_report(run_command(["invariants", "u-u2-e8m2.json"])).decode())
print(emit_report(run_command(["isometry", "b-minus1.json", "e8.json"])).decode())

# hermlat paper-suite: one line per claim, last line is the overall result
out = emit_report(run_command(["paper-suite"])).decode().splitlines()
print("\n".join(out[:5]), "\n...\n" + out[-1])
