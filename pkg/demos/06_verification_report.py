"""
Running the checks
==================

Every check re-derives one statement over a corpus and reports rows of
PASS / FAIL / SKIPPED; a FAIL carries a counterexample graph.
"""

import json

from resdom import verify

report = verify.run_all("SMOKE", timing=False)
print(report["run_id"], report["summary"])
for row in report["checks"]:
    if row["status"] == "FAIL":
        print(json.dumps(row, indent=2, sort_keys=True))
        print("recomputed:", verify.reverify(row["counterexample"], row["params"]["k"]))
