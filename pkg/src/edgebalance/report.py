"""Run reports with lossless JSON and CSV serialization.

Floats serialize through ``repr`` (the json module's default), which
round-trips binary64 exactly; re-parsing a report's JSON reproduces an
equal report.
"""

import csv
import hashlib
import io
import json
from dataclasses import asdict, dataclass, fields


def shape_digest(shape_dict: dict) -> str:
    """Stable hex digest of a shape's canonical JSON form."""
    canonical = json.dumps(shape_dict, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


_POINT_FIELDS = ("balance_point", "composite_centroid", "mc_centroid", "mc_std_error")


@dataclass(frozen=True)
class RunReport:
    """Everything one excision run consumed and produced.

    ``distance``/``relative_distance`` come from the exact verification and
    are None when only Monte Carlo verification ran; the ``mc_*`` fields are
    None unless sampling ran.  ``passed`` aggregates whichever checks ran.
    """

    command: str
    shape_digest: str
    dimension: int
    beta: float
    scale_ratio: float
    tolerance: float
    balance_point: tuple[float, ...]
    polynomial_residual: float
    passed: bool
    elapsed_seconds: float
    composite_centroid: tuple[float, ...] | None = None
    distance: float | None = None
    relative_distance: float | None = None
    seed: int | None = None
    samples: int | None = None
    mc_centroid: tuple[float, ...] | None = None
    mc_std_error: tuple[float, ...] | None = None
    mc_accepted: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        for key in _POINT_FIELDS:
            if data.get(key) is not None:
                data[key] = tuple(data[key])
        return cls(**data)

    def to_csv(self) -> str:
        """Single-row CSV; vector fields are space-joined reprs."""
        names = [f.name for f in fields(self)]
        row = []
        for name in names:
            value = getattr(self, name)
            if isinstance(value, tuple):
                row.append(" ".join(repr(x) for x in value))
            elif isinstance(value, float):
                row.append(repr(value))
            elif value is None:
                row.append("")
            else:
                row.append(str(value))
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(names)
        writer.writerow(row)
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if isinstance(value, tuple):
                value = " ".join(repr(x) for x in value)
            elif isinstance(value, float):
                value = repr(value)
            lines.append(f"{f.name} {value}")
        return "\n".join(lines)
