#!/usr/bin/env python3
"""Regenerate the recorded fixtures under tests/data.

The per-matrix counterexample report is frozen byte-for-byte; rerun this
after any deliberate change to report formatting and review the diff.
"""

import sys
from pathlib import Path

import hopflike as hk
from hopflike.compositions import Composition


def main() -> int:
    data = Path(__file__).resolve().parent.parent / "tests" / "data"
    data.mkdir(parents=True, exist_ok=True)
    report = hk.check_square_condition(
        Composition([1, 1]), Composition([1, 1]), "per-k"
    )
    target = data / "square_per_k_11.json"
    target.write_text(report.to_json() + "\n", encoding="utf-8")
    print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
