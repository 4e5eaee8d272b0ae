# Every non-Hartogs verdict carries a witness anyone can re-check with integer arithmetic.
#
# The same check is available from the shell:
#   semitoric check --json fixtures/y1_semiabelian.json > cert.json
#   semitoric validate cert.json

import json
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from semitoric import Fan, SemiabelianProblem, decide, verify_witness

Y1 = Fan(2, rays=((1, 0), (-1, 0), (0, 1)), cones=((0, 2), (1, 2)))

# full lattice, but a 3-torsion point kills every character with l_1 not divisible by 3
p = SemiabelianProblem(2, None, torsion=((Fraction(1, 3), Fraction(0)),), fan=Y1)
v = decide(p)
print("L basis:", v.L.basis)             # ((3, 0), (0, 1))
print("witness:", v.witness)

w = v.witness
print("nonzero:", any(w))
print("in L:", w in v.L, "coords", v.L.coordinates(w))
print("in C:", [sum(a * b for a, b in zip(f, w)) for f in v.C.ineqs], ">= 0")
print(verify_witness(w, v.L, v.C))

# a wrong witness is rejected
print(verify_witness((1, 0), v.L, v.C))

root = Path(__file__).resolve().parent.parent
fixture = root / "fixtures" / "y1_semiabelian.json"
out = subprocess.run([sys.executable, "-m", "semitoric", "check", "--json", str(fixture)],
                     capture_output=True, text=True)
print("exit code:", out.returncode)   # 1 = not Hartogs
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write(out.stdout)
check = subprocess.run([sys.executable, "-m", "semitoric", "validate", fh.name],
                       capture_output=True, text=True)
print(check.stdout.strip())
print(json.loads(out.stdout)["C"]["rays"])
