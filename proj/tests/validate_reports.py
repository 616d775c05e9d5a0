"""Runs the CLI over the corpus and validates every JSON output against the schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

filtra, source = sys.argv[1], pathlib.Path(sys.argv[2])
schema = source / "schema"
report = json.loads((schema / "report.schema.json").read_text())
summary = json.loads((schema / "summary.schema.json").read_text())

with tempfile.TemporaryDirectory() as out:
    rc = subprocess.run([filtra, "corpus", str(source / "corpus"), "--out", out, "--stable-output"],
                        stdout=subprocess.DEVNULL).returncode
    outs = pathlib.Path(out)
    doc = json.loads((outs / "summary.json").read_text())
    jsonschema.validate(doc, summary)
    assert rc == doc["exit_code"], (rc, doc["exit_code"])
    n = 0
    for p in sorted(outs.glob("*.json")):
        if p.name == "summary.json":
            continue
        jsonschema.validate(json.loads(p.read_text()), report)
        n += 1
    assert n == len(doc["jobs"]), (n, len(doc["jobs"]))

    # an error report must validate too
    bad = outs / "bad.json"
    bad.write_text(json.dumps({"ring": {"vars": ["x"], "relations": ["x^^2"]},
                               "filtration": {"type": "adic", "ideal": ["x"]},
                               "reduction": {"type": "explicit", "gens": ["x"]}}))
    errdir = outs / "err"
    rc = subprocess.run([filtra, "verify", str(bad), "--out", str(errdir), "--report", "json"],
                        stderr=subprocess.DEVNULL).returncode
    assert rc == 1, rc
    jsonschema.validate(json.loads((errdir / "bad.json").read_text()), report)

jsonschema.validate(json.loads((source / "golden" / "summary.json").read_text()), summary)
print(f"validated {n} reports and the summaries")
