from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a verification suite: per-relation instance counts and failure lines."""

    suite: str
    checked: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def record(self, relation: str, instance: str, ok: bool):
        self.checked[relation] += 1
        if not ok:
            self.failures.append(f"FAIL relation={relation} instance={instance}")

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"suite={self.suite} relation={r} instances={c}" for r, c in self.checked.items()]
        out += [f"NOTE {x}" for x in self.notes]
        out += self.failures
        out.append(f"{'PASS' if self.ok else 'FAIL'} suite={self.suite} failures={len(self.failures)}")
        return out

    def __str__(self):
        return "\n".join(self.lines())
