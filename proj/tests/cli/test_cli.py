#!/usr/bin/env python3
# Copyright 2026 The tightcut Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exit codes and JSON output of the tightcut binary.

usage: test_cli.py PATH_TO_TIGHTCUT
"""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
SAMPLE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data", "mc10_sample.g6")
failures = 0


def run(args, stdin=None):
    p = subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def expect(name, args, code, stdin=None, check=None):
    global failures
    rc, out, err = run(args, stdin)
    ok = rc == code
    detail = ""
    if ok and check is not None:
        try:
            check(out)
        except Exception as e:  # noqa: BLE001
            ok, detail = False, f": {e}"
    print(f"{'ok  ' if ok else 'FAIL'} {name} (exit {rc}, want {code}){detail}")
    if not ok:
        failures += 1
        sys.stdout.write(err[-2000:])


def parses(out):
    doc = json.loads(out)
    assert doc["version"], "missing version"
    assert "findings" in doc, "missing findings"
    return doc


def essential_with_u1u2(out):
    doc = parses(out)
    f = doc["findings"]
    assert f["verdict"] == "essential-gs-cut", f["verdict"]
    labels = sorted(f["essential"]["barriers"][0]["barrier"]["labels"])
    assert labels == ["u1", "u2"], labels


def barrier_cut(out):
    assert parses(out)["findings"]["verdict"] == "barrier-cut"


def whole_sample(out):
    f = parses(out)["findings"]
    assert f["graphs"] == 500 and f["tight_cuts"] > 0, (f["graphs"], f["tight_cuts"])


def brick_number_two(out):
    f = parses(out)["findings"]
    assert f["agree"] is True and f["brick_number"] == 2, (f["agree"], f["brick_number"])
    assert len(f["runs"]) == 10, len(f["runs"])


with tempfile.TemporaryDirectory() as tmp:
    bad = os.path.join(tmp, "bad.g6")
    with open(bad, "w") as fh:
        fh.write("C~\n!!!\n")
    empty = os.path.join(tmp, "empty.g6")
    open(empty, "w").close()
    k4 = os.path.join(tmp, "k4.g6")
    with open(k4, "w") as fh:
        fh.write("C~\n")

    expect("analyze k4", ["analyze", "--builtin", "k4"], 0)
    expect("analyze k4 json", ["--json", "analyze", "--builtin", "k4"], 0, check=parses)
    expect("analyze graph6 file", ["analyze", "--input", k4, "--format", "graph6"], 0)
    expect("malformed graph6", ["analyze", "--input", bad, "--format", "graph6"], 2)
    expect("unknown builtin", ["analyze", "--builtin", "k9"], 2)
    expect("unknown option", ["analyze", "--frobnicate"], 2)
    expect("non-tight shore", ["classify", "--builtin", "c6", "--shore", "v1,v2,v4"], 3)
    expect("trivial shore", ["classify", "--builtin", "k4", "--shore", "v1"], 3)
    expect("even shore", ["classify", "--builtin", "c6", "--shore", "v1,v2"], 3)
    expect("unknown vertex", ["classify", "--builtin", "c6", "--shore", "v1,v2,zz"], 3)
    expect("essential GS-cut", ["--json", "classify", "--builtin", "hprime:4", "--shore", "v1,v2,v3"], 0,
           check=essential_with_u1u2)
    expect("barrier-cut", ["--json", "classify", "--builtin", "c6", "--shore", "v1,v2,v3"], 0, check=barrier_cut)
    expect("decompose repeats", ["--json", "decompose", "--builtin", "h:1", "--repeats", "10"], 0,
           check=brick_number_two)
    expect("decompose elp-first", ["decompose", "--builtin", "petersen", "--strategy", "elp-first"], 0)
    expect("bad strategy", ["decompose", "--builtin", "k4", "--strategy", "greedy"], 1)
    expect("verify counterexample", ["verify", "--max-n", "6", "--theorems", "3.3", "--jobs", "1"], 5)
    expect("verify clean", ["verify", "--max-n", "6", "--theorems", "1.1,1.2,1.3", "--jobs", "1"], 0)
    expect("verify graph6 file needs no cap", ["--json", "verify", "--input", SAMPLE, "--theorems", "1.3"], 0,
           check=whole_sample)
    expect("verify empty corpus", ["verify", "--input", empty, "--theorems", "3.3"], 0)
    expect("verify bad claim", ["verify", "--max-n", "4", "--theorems", "9.9"], 1)
    expect("gen json", ["gen", "--builtin", "petersen", "--format", "json"], 0, check=lambda o: json.loads(o))

    cx = os.path.join(tmp, "cx")
    expect("counterexample files", ["verify", "--max-n", "6", "--theorems", "3.3", "--counterexamples", cx], 5)
    written = sorted(os.listdir(cx)) if os.path.isdir(cx) else []
    if not written:
        print("FAIL counterexample directory is empty")
        failures += 1
    else:
        with open(os.path.join(cx, written[0])) as fh:
            json.load(fh)
        print(f"ok   counterexample files ({len(written)} written, first parses)")

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
