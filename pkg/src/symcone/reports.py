"""Machine-readable check results."""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np


def _plain(v):
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, (np.floating, np.integer, np.bool_)):
        return v.item()
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


@dataclass
class CheckReport:
    property: str
    passed: bool
    max_residual: float = 0.0
    witness: Optional[np.ndarray] = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.passed)

    def to_dict(self):
        out = {"property": self.property, "pass": bool(self.passed),
               "max_residual": float(self.max_residual)}
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        out.update(_plain(self.details))
        return out
