"""Structured results for identity sweeps.

Every verification returns a :class:`VerificationReport`.  The JSON form
is deterministic: keys appear in a fixed order and the ``millis`` field
is 0 unless timing was explicitly requested, so byte-identical runs
stay byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Failure:
    instance: str
    witness: str
    left: str
    right: str

    def to_json_dict(self):
        return {
            "instance": self.instance,
            "witness": self.witness,
            "left": self.left,
            "right": self.right,
        }


@dataclass
class VerificationReport:
    suite: str
    bounds: dict
    checked: int = 0
    failures: list = field(default_factory=list)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, instance, witness, left, right):
        self.failures.append(Failure(instance, witness, left, right))

    def to_json_dict(self):
        return {
            "suite": self.suite,
            "bounds": {k: self.bounds[k] for k in sorted(self.bounds)},
            "checked": self.checked,
            "failures": [f.to_json_dict() for f in self.failures],
            "millis": self.millis,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            "bounds: " + " ".join(f"{k}={self.bounds[k]}" for k in sorted(self.bounds)),
            f"checked: {self.checked}",
            f"failures: {len(self.failures)}",
        ]
        for f in self.failures:
            lines.append(f"  FAIL {f.instance}")
            lines.append(f"       witness: {f.witness}")
            lines.append(f"       left:  {f.left}")
            lines.append(f"       right: {f.right}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)
