"""Uniform pass/fail reporting for the command-line surface."""

import json
from dataclasses import dataclass, field


@dataclass
class CheckItem:
    name: str
    passed: bool | None  # None marks an informational row that never gates
    witness: str | None = None

    @property
    def gating(self):
        return self.passed is not None


@dataclass
class CheckReport:
    subject: str
    items: list = field(default_factory=list)

    def add(self, name, passed, witness=None):
        if witness is not None and not isinstance(witness, str):
            witness = repr(witness)
        self.items.append(CheckItem(name, bool(passed), witness))

    def info(self, name, value):
        self.items.append(CheckItem(name, None, str(value)))

    @property
    def overall(self):
        return all(item.passed for item in self.items if item.gating)

    def render_text(self):
        lines = [f"subject: {self.subject}"]
        for item in self.items:
            if not item.gating:
                lines.append(f"  [INFO] {item.name} = {item.witness}")
                continue
            mark = "PASS" if item.passed else "FAIL"
            line = f"  [{mark}] {item.name}"
            if item.witness and not item.passed:
                line += f"  witness={item.witness}"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def render_json(self):
        return json.dumps({
            "subject": self.subject,
            "items": [
                {"name": i.name, "passed": i.passed, "witness": i.witness}
                for i in self.items
            ],
            "overall": self.overall,
        }, indent=2) + "\n"

    def render(self, fmt):
        return self.render_json() if fmt == "json" else self.render_text()
