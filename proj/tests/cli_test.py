"""End-to-end checks of the rrclosure command line."""
import json
import subprocess
import sys

EXE = sys.argv[1]
STAIRCASE_17_28 = "y^28 + x^2*y^26 + x^10*y^14 + x^11*y^12 + x^15*y^5 + x^17"
BELOW_LINE = "x^7 + x^6*y + x*y^10 + y^14"
failures = []


def run(*args):
    return subprocess.run([EXE, *args], capture_output=True, text=True)


def expect(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")


def expect_exit(name, proc, code):
    expect(name, proc.returncode == code, f"exit {proc.returncode}, wanted {code}\n{proc.stdout}{proc.stderr}")


p = run("closure", STAIRCASE_17_28)
expect_exit("closure 17,28", p, 0)
expect("closure 17,28", "closure:         y^28 + x^2*y^26 + x^5*y^24 + x^7*y^22 + x^8*y^20 + "
       "x^10*y^14 + x^11*y^12 + x^13*y^10 + x^15*y^5 + x^17\n" in p.stdout, p.stdout)

p = run("closure", "x^2 + y^3", "--format", "json-doc")
expect_exit("closure json", p, 0)
doc = json.loads(p.stdout)
expect("closure json", doc["closure"] == [[0, 3], [2, 0]] and doc["is_ratliff_rush"] is True, p.stdout)
expect("closure json keys", list(doc) == ["input", "hypothesis", "S", "T", "ideal_S", "ideal_T", "closure",
                                          "is_ratliff_rush", "reduction_bound", "quick_check"], list(doc))

first = run("closure", STAIRCASE_17_28, "--format", "json-doc").stdout
second = run("closure", "[[17,0],[15,5],[11,12],[10,14],[2,26],[0,28]]", "--format", "json-doc").stdout
expect("json byte-identical", first == second and first != "", "documents differ")

p = run("closure", BELOW_LINE)
expect_exit("hypothesis refused", p, 2)
expect("hypothesis refused", "(1,10) deficit 14" in p.stdout and "(6,1) deficit 7" in p.stdout, p.stdout)
expect_exit("check below line", run("check", BELOW_LINE), 2)
expect_exit("check 17,28", run("check", STAIRCASE_17_28), 0)

expect_exit("parse error", run("closure", "x^2 + zz"), 1)
expect_exit("not primary", run("closure", "x^2 + x*y"), 1)
expect_exit("bad flag", run("closure", "x^2 + y^3", "--format", "yaml"), 1)
expect_exit("overflow", run("closure", "x^18446744073709551615 + y^2 + x^9223372036854775808*y"), 4)

p = run("oracle", STAIRCASE_17_28)
expect_exit("oracle 17,28", p, 0)
expect("oracle 17,28", p.stdout.rstrip().endswith("MATCH"), p.stdout)
p = run("oracle", STAIRCASE_17_28, "--max-power", "1")
expect_exit("oracle short chain", p, 3)
expect("oracle short chain", "MISMATCH" in p.stdout, p.stdout)
p = run("oracle", "--seed", "5", "--count", "25")
expect_exit("oracle seeded", p, 0)
expect("oracle seeded", p.stdout.count("MATCH") == 25 and "MISMATCH" not in p.stdout, p.stdout)

p = run("powers", "x^7 + x^5*y^2 + y^5", "--upto", "5")
expect_exit("powers", p, 0)
expect("powers", p.stdout.count("ratliff_rush: true") == 5, p.stdout)
p = run("powers", "x^35 + x^33*y^2 + x^4*y^26 + y^28", "--upto", "1")
expect("powers four-gens", "I^1 ratliff_rush: false" in p.stdout, p.stdout)

p = run("family", "crispin", "5", "2")
expect_exit("family crispin", p, 0)
expect("family crispin", p.stdout.splitlines()[0] == "y^5 + x^3*y^2 + x^4*y + x^5", p.stdout)
p = run("family", "sigma", "20", "17", "2:4", "3:2", "3:1")
expect_exit("family sigma", p, 0)
expect("family sigma", len(json.loads(p.stdout.splitlines()[1])) == 9, p.stdout)
p = run("family", "gap", "8", "8")
gap = p.stdout.splitlines()[0]
expect("family gap", len(json.loads(p.stdout.splitlines()[1])) == 6, p.stdout)
expect_exit("family bad sigma", run("family", "sigma", "20", "17", "2:4"), 1)
expect_exit("family three rejected", run("family", "three", "7", "14", "6", "1"), 2)

# family output fed back through closure matches the library result
p = run("closure", gap)
expect("family round trip", "closure:         y^8 + x^2*y^6 + x^4*y^4 + x^6*y^2 + x^8\n" in p.stdout, p.stdout)

p = run("intclosure", "5", "5")
expect("intclosure", p.stdout.splitlines()[0] == "y^5 + x*y^4 + x^2*y^3 + x^3*y^2 + x^4*y + x^5", p.stdout)

p = run("staircase", "x^2 + y^3")
expect("staircase ascii", p.stdout == "3 |o##\n2 |..#\n1 |..#\n0 |..o\n  +---\n   x = 0..2\n", repr(p.stdout))
p = run("staircase", STAIRCASE_17_28, "--overlay")
expect("staircase overlay", "/" in p.stdout.split("legend")[0], p.stdout)
p = run("staircase", "x^2 + y^3", "--format", "svg")
expect("staircase svg", p.stdout.startswith("<svg") and 'viewBox="0 0 40 50"' in p.stdout, p.stdout)
p = run("staircase", "x^2 + y^3", "--format", "pairs")
expect("staircase pairs", json.loads(p.stdout)["ideal"] == [[0, 3], [2, 0]], p.stdout)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
