#!/usr/bin/env python3
# Rewrites corpus/golden/*.json from the current binary. Review the diff before committing.
import json, pathlib, subprocess, sys

binary, corpus = sys.argv[1], pathlib.Path(sys.argv[2]).resolve()
golden = corpus / "golden"
golden.mkdir(exist_ok=True)
for case in json.loads((corpus / "cases.json").read_text()):
    args = [a.replace("{corpus}", str(corpus)) for a in case["args"]]
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != case["exit"]:
        sys.exit(f"{case['name']}: exit {proc.returncode}, expected {case['exit']}")
    text = proc.stdout.replace(str(corpus), "{corpus}")
    (golden / f"{case['name']}.json").write_text(text)
    print(case["name"], json.loads(text)["status"])
