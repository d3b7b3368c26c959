"""End-to-end checks of the dwb command line: examples, errors, schema, determinism."""

import json
import os
import subprocess
import sys
import time

import jsonschema

BIN = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
MODE = sys.argv[3] if len(sys.argv) > 3 else "plumbing"

failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("WORKBENCH_BOUND", None)
    if env:
        full_env.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def report(*args, env=None):
    proc = run(*args, env=env)
    if proc.returncode not in (0, 1):
        raise AssertionError(f"{args}: exit {proc.returncode}: {proc.stderr}")
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, SCHEMA)
    if doc["exit_status"] != proc.returncode:
        raise AssertionError(f"{args}: exit {proc.returncode} but report says {doc['exit_status']}")
    return doc


def case(name):
    def wrap(fn):
        try:
            fn()
            print(f"ok   {name}")
        except Exception as exc:  # noqa: BLE001
            failures.append(name)
            print(f"FAIL {name}: {exc}")
        return fn
    return wrap


def expect(cond, msg):
    if not cond:
        raise AssertionError(msg)


def statuses(doc):
    return {c["name"]: c["status"] for c in doc["checks"]}


if MODE == "verify-exit":
    start = time.monotonic()
    proc = run("verify-all", "--profile", "quick")
    took = time.monotonic() - start
    doc = json.loads(proc.stdout)
    for c in doc["checks"]:
        if c["status"] == "fail":
            print(f"fail: {c['name']}: {c['details'][:200]}")
    print(f"exit {proc.returncode} after {took:.1f} s")
    sys.exit(0 if proc.returncode == 0 and took <= 60 else 1)


@case("pell s=t n=3")
def _():
    doc = report("pell", "--s", "t", "--n", "3")
    expect(doc["result"]["pair"]["f"] == "-3*t + 4*t^3", doc["result"])
    expect(doc["result"]["pair"]["g"] == "-1 + 4*t^2", doc["result"])


@case("pell s=t n=0")
def _():
    pair = report("pell", "--s", "t", "--n", "0")["result"]["pair"]
    expect((pair["f"], pair["g"]) == ("1", "0"), pair)


@case("pell law check to 20")
def _():
    doc = report("pell", "--s", "t", "--check-laws", "--bound", "20")
    expect(doc["exit_status"] == 0, doc["checks"])
    expect(doc["result"]["divisibility_pairs"] == 400, doc["result"])


@case("defsys exp 2^3 = 8")
def _():
    res = report("defsys", "exp", "--base", "2", "--result", "8", "--exp", "3")["result"]
    expect(res["verdict"] == "accepted" and res["fold_count"] == 1, res)
    expect(res["witnesses"][0]["n"] == "3", res["witnesses"])


@case("defsys singlefold 1/2 refuted")
def _():
    res = report("defsys", "singlefold-int", "--c", "1/2", "--bound", "50")["result"]
    expect(res["verdict"] == "refuted_to_bound" and res["bound"] == 50, res)


@case("defsys nonneg -1 accepted with measured anomaly")
def _():
    doc = report("defsys", "nonneg", "--d", "-1")
    expect(doc["result"]["verdict"] == "accepted", doc["result"])
    expect("measured" in statuses(doc).values(), doc["checks"])
    expect(doc["result"]["notes"], doc["result"])


@case("defsys odd-int construct 5")
def _():
    doc = report("defsys", "odd-int", "--construct", "5")
    expect(doc["exit_status"] == 0 and doc["result"]["verdict"] == "accepted", doc["checks"])


@case("WORKBENCH_BOUND sets default bounds")
def _():
    res = report("defsys", "singlefold-int", "--c", "2", env={"WORKBENCH_BOUND": "3"})["result"]
    expect(res["bound"] == 3, res)
    res = report("defsys", "singlefold-int", "--c", "2", "--bound", "7", env={"WORKBENCH_BOUND": "3"})["result"]
    expect(res["bound"] == 7, res)


@case("cyclo approx 3:2,5:1")
def _():
    res = report("cyclo", "approx", "--indices", "3:2,5:1")["result"]
    expect(res["c"] == "26", res)
    expect([r["order"] for r in res["records"]] == [1, 1], res["records"])


@case("cyclo phi and congruent")
def _():
    expect(report("cyclo", "phi", "--n", "12")["result"]["phi"] == "1 - T^2 + T^4", "phi_12")
    res = report("cyclo", "congruent", "--d", "2", "--sign", "-1", "--count", "1")["result"]
    expect(res["indices"] == [20], res)


@case("qform report 1 7 isotropic")
def _():
    res = report("qform", "report", "--a", "1", "--b", "7")["result"]
    expect(res["globally_isotropic"] and res["anisotropic_places"] == [], res)


@case("qform report 2 5 anisotropic at 5")
def _():
    res = report("qform", "report", "--a", "2", "--b", "5")["result"]
    expect("p:5" in res["anisotropic_places"] and not res["globally_isotropic"], res)


@case("qform symbol agrees with the oracle")
def _():
    doc = report("qform", "symbol", "--a", "2", "--b", "5", "--place", "5")
    expect(doc["result"]["symbol"] == -1 and doc["exit_status"] == 0, doc)


@case("par find then eval")
def _():
    t = report("par", "find", "--n", "7")["result"]["tuple"]
    args = ["par", "eval"] + sum([[f"--{k}", t[k]] for k in "nbcdgv"], [])
    doc = report(*args)
    expect(doc["result"]["accepted"], doc["result"])
    t["v"] = str(int(t["v"]) + 1)
    args = ["par", "eval"] + sum([[f"--{k}", t[k]] for k in "nbcdgv"], [])
    expect(not report(*args)["result"]["accepted"], "perturbed v accepted")


@case("par theta examples")
def _():
    expect(report("par", "theta", "--n", "7")["result"]["poly"] == "T", "theta(7)")
    expect(report("par", "theta-inverse", "--poly", "T+1")["result"]["n"] == "28", "theta^-1(T+1)")


@case("errors exit nonzero with a message")
def _():
    for args in (["pell", "--s", "t+(", "--n", "1"], ["defsys", "bogus"], ["pell", "--s", "3", "--n", "2"],
                 ["cyclo", "approx", "--indices", "3:4"], ["par", "theta", "--n", "0"], ["frobnicate"]):
        proc = run(*args)
        expect(proc.returncode not in (0, 1), f"{args} exited {proc.returncode}")
        expect(proc.stderr.strip() or proc.stdout.strip(), f"{args} printed nothing")


@case("timing flag adds elapsed")
def _():
    expect("elapsed" not in report("cyclo", "phi", "--n", "5"), "elapsed without --timing")
    expect(report("cyclo", "phi", "--n", "5", "--timing")["elapsed"] >= 0, "elapsed missing")


@case("text format")
def _():
    proc = run("qform", "report", "--a", "2", "--b", "5", "--format", "text")
    expect(proc.returncode == 0 and "reciprocity" in proc.stdout, proc.stdout)


@case("verify-all json is schema-valid and covers every criterion")
def _():
    doc = report("verify-all", "--profile", "quick", "--format", "json")
    expect(len(doc["result"]["criteria"]) == 13, doc["result"])
    names = [c["name"] for c in doc["checks"]]
    expect(names == sorted(names), "checks not sorted")


@case("verify-all --seed 7 twice is byte-identical")
def _():
    a = run("verify-all", "--seed", "7")
    b = run("verify-all", "--seed", "7")
    expect(a.stdout == b.stdout and a.returncode == b.returncode, "reports differ")


print(f"{len(failures)} failing")
sys.exit(1 if failures else 0)
