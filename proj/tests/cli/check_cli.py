"""Exit codes, output snippets and golden reports of the liesym CLI.

usage: check_cli.py <liesym binary> <source dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
SRC = pathlib.Path(sys.argv[2])
failures = []


def run(*args):
    p = subprocess.run([BIN, *args], capture_output=True, text=True, cwd=SRC)
    return p.returncode, p.stdout, p.stderr


def check(label, args, code, needles=(), json_out=False):
    rc, out, err = run(*args)
    problems = []
    if rc != code:
        problems.append(f"exit {rc}, wanted {code}; stderr: {err.strip()}")
    for n in needles:
        if n not in out:
            problems.append(f"missing {n!r}")
    if json_out:
        try:
            json.loads(out)
        except ValueError as e:
            problems.append(f"stdout is not JSON: {e}")
    print(("ok   " if not problems else "FAIL ") + label)
    for p in problems:
        print("     " + p)
    if problems:
        failures.append(label)
    return out


check("verify hpz fixture", ["verify", "--equation", "hpz", "--fixture", "hpz"], 0,
      ["all residuals zero: yes", "delta5 NONZERO"])
check("verify heat translation", ["verify", "--equation", "heat", "--generator",
                                  "xi_t=0; xi_x=1; xi_y=0; eta=0"], 0, ["residual: 0"])
check("verify hpz x*d_x", ["verify", "--equation", "hpz", "--generator",
                           "xi_t=0; xi_x=x; xi_y=0; eta=0"], 1, ["all residuals zero: no"])
check("verify literal reading", ["verify", "--equation", "hpz", "--fixture", "hpz-literal"], 1)
check("verify parse error", ["verify", "--equation", "hpz", "--generator", "xi_t=("], 2)
check("verify nonzero absent component", ["verify", "--equation", "heat", "--generator",
                                          "xi_t=0; xi_x=1; xi_y=1; eta=0"], 2)

check("find hpz", ["find", "--equation", "hpz", "--params", "R=5,S=4,V=1,W=1"], 0,
      ["dimension: 6", "span equals the delta1..delta6 fixture at this binding: yes"])
check("find heat", ["find", "--equation", "heat"], 0, ["dimension: 6", "profile:"])
check("find reduced-3.2", ["find", "--equation", "reduced-3.2", "--params", "R=5,S=4,V=1,W=1"], 0,
      ["dimension: 6", "profile:", "a order 3, b order 2, f order 1"])
check("find complex exponents", ["find", "--equation", "hpz", "--params", "R=1,S=1,V=1,W=1"], 2)
check("find irrational exponents", ["find", "--equation", "hpz", "--params", "R=3,S=1,V=1,W=1"], 2)
check("find unknown equation", ["find", "--equation", "nope"], 2)
check("find json", ["find", "--equation", "hpz", "--format", "json"], 0, ['"residual_checks"'], json_out=True)

check("reduce delta3", ["reduce", "--equation", "hpz", "--generator", "delta3"], 0,
      ["reduced equation: R*z - z_t - 1/2*omega*r*z_r + 1/2*R*r*z_r + 4*W*z_rr + 2*V*omega*z_rr + 2*R*V*z_rr = 0",
       "verdict: agrees term by term"])
check("reduce time", ["reduce", "--equation", "hpz", "--generator", "time"], 0,
      ["reduced equation: 1/2*R*z + R*x*z_x + S*y*z_x - x*z_y + W*z_xx + V*z_xy = 0",
       "comparison with stationary-2.6: match"])
for g in ("delta4", "delta5", "delta6"):
    check(f"reduce {g}", ["reduce", "--equation", "hpz", "--generator", g], 0,
          ["certificate: no-residual-xy", "verdict: agrees term by term"])
check("reduce delta1 refused", ["reduce", "--equation", "hpz", "--generator", "delta1"], 2)
check("reduce singular binding", ["reduce", "--equation", "hpz", "--generator", "delta5",
                                  "--params", "R=5,S=4,V=1,W=-5"], 2)
check("reduce json", ["reduce", "--equation", "hpz", "--generator", "delta5", "--format", "json"], 0,
      ['"certificate": "no-residual-xy"'], json_out=True)

check("classify w5", ["classify", "--basis", "fixtures/w5.json"], 0, ["W5 (Heisenberg-Weyl, dim 5)"])
check("classify hpz", ["classify", "--basis", "fixtures/hpz.json"], 0, ["A1 ⊕ₛ W5"])
check("classify heat", ["classify", "--basis", "fixtures/heat.json"], 0, ["sl(2,ℝ) ⊕ₛ W3"])
check("classify sl2", ["classify", "--basis", "fixtures/sl2.json"], 0, ["sl(2,ℝ)", "A3,8"])
check("classify reduced-3.2", ["classify", "--equation", "reduced-3.2"], 0, ["sl(2,ℝ) ⊕ₛ W3"])
check("classify missing file", ["classify", "--basis", "fixtures/none.json"], 2)
check("classify json", ["classify", "--basis", "fixtures/w5.json", "--format", "json"], 0, json_out=True)
check("error as json", ["find", "--equation", "nope", "--format", "json"], 2, ['"exit_code": 2'], json_out=True)
check("bad flag", ["find", "--frobnicate"], 2)

# determinism and golden copies
first = check("report json", ["report", "--format", "json"], 0, json_out=True)
second = run("report", "--format", "json")[1]
if first != second:
    print("FAIL report json is not byte-identical across runs")
    failures.append("determinism")
for fmt, golden in (("json", "report.json"), ("text", "report.txt")):
    with tempfile.TemporaryDirectory() as d:
        out = pathlib.Path(d) / golden
        rc, _, err = run("report", "--format", fmt, "--out", str(out))
        expected = (SRC / "tests" / "golden" / golden).read_text()
        if rc != 0 or out.read_text() != expected:
            print(f"FAIL golden {golden} differs (exit {rc})")
            failures.append(f"golden {golden}")
        else:
            print(f"ok   golden {golden}")

if failures:
    print(f"{len(failures)} CLI check(s) failed")
    sys.exit(1)
print("all CLI checks passed")
