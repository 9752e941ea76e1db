#!/usr/bin/env python3
"""Run every verification sweep at its acceptance bounds.

Prints one text report per suite and exits nonzero if any sweep fails.
Pass --json PATH to also write the combined reports as a JSON array.
"""

import argparse
import json
import sys
import time

import hopflike as hk
from hopflike.compositions import Composition


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", help="also write all reports to this file")
    args = parser.parse_args()

    sweeps = [
        ("simplicial identities", lambda: hk.verify_simplicial_identities(6)),
        ("merge relations", lambda: hk.check_relation_family("dd", 8, 4)),
        ("split relations", lambda: hk.check_relation_family("ss", 8, 4)),
        ("shuffle relations", lambda: hk.check_relation_family("tautau", 4, 4)),
        ("mixed relations (summed)", lambda: hk.check_mixed_relations(6, 3)),
        ("worked diagrams", lambda: hk.check_worked_examples(8)),
        ("Hopf compatibility", lambda: hk.check_hopf_compat(8)),
        (
            "square condition (summed)",
            lambda: hk.check_square_condition(
                Composition([1, 1]), Composition([1, 1]), "summed"
            ),
        ),
        ("bidegree (1,2) defect", lambda: hk.check_bidegree12(8)),
    ]
    reports = []
    for name, run in sweeps:
        start = time.monotonic()
        result = run()
        elapsed = time.monotonic() - start
        batch = result if isinstance(result, list) else [result]
        reports.extend(batch)
        for report in batch:
            print(report.to_text())
            print(f"elapsed: {elapsed:.2f}s")
            print()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([r.to_json_dict() for r in reports], fh, indent=2)
        print(f"wrote {args.json}")
    failed = [r.suite for r in reports if not r.passed]
    if failed:
        print("FAILED:", ", ".join(failed))
        return 1
    print(f"all {len(reports)} suites passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
