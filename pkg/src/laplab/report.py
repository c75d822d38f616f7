"""Machine-checkable verdicts."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class TheoremReport:
    """Verdict for one claim on one instance.

    ``conclusion_holds`` only carries meaning when ``hypothesis_met`` is true.
    ``undetermined`` marks a hypothesis that could not be decided (for
    example a capped path search); such reports are never counted as
    violations.
    """

    theorem_id: str
    instance: str
    hypothesis_met: bool
    conclusion_holds: bool
    witness: dict[str, Any] = field(default_factory=dict)
    exact_verified: bool = False
    undetermined: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def violated(self) -> bool:
        return self.hypothesis_met and not self.conclusion_holds and not self.undetermined

    @property
    def ok(self) -> bool:
        return not self.violated

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "hypothesis_met": self.hypothesis_met,
            "conclusion_holds": self.conclusion_holds,
            "undetermined": self.undetermined,
            "exact_verified": self.exact_verified,
            "witness": jsonable(self.witness),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if hasattr(obj, "item"):  # numpy scalar
        return obj.item()
    if hasattr(obj, "tolist"):
        return obj.tolist()
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)
