"""
Run reports, rational rendering and CSV surprise traces.
"""

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from falsilab.constants import CSV_COLUMNS, DECIMAL_PLACES
from falsilab.schemas.results import SurpriseReport
from falsilab.utils.logger import setup_logger

logger = setup_logger(__name__)


def decimal(value: Union[Fraction, float]) -> str:
    return f"{float(value):.{DECIMAL_PLACES}f}"


def render_rational(value: Fraction) -> str:
    """'p/q (0.xxxxxx)'."""
    return f"{value} ({decimal(value)})"


def render_subset(subset: Iterable[int]) -> str:
    return "{" + ",".join(map(str, subset)) + "}"


def inputs_digest(inputs: Dict[str, Any], class_text: str = "") -> str:
    """SHA-256 over the canonical JSON of the flags plus the class file text."""
    payload = json.dumps(inputs, sort_keys=True, default=str) + "\n" + class_text
    return hashlib.sha256(payload.encode()).hexdigest()


class RunReport(BaseModel):
    """One CLI invocation: everything except `timing` is deterministic."""

    model_config = ConfigDict(frozen=True)

    command: str
    # Full command line after the program name
    argv: List[str] = Field(default_factory=list)
    inputs_digest: str
    results: Dict[str, str] = Field(default_factory=dict)
    witnesses: Dict[str, List[int]] = Field(default_factory=dict)
    timing: Dict[str, Any] = Field(default_factory=dict)

    def lines(self) -> List[str]:
        return [f"{key}={value}" for key, value in self.results.items()]

    def write(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.model_dump_json(indent=2) + "\n")
        logger.info(f"Report written to {path}")


def trace_frame(reports: Sequence[SurpriseReport], exact: bool = False) -> pd.DataFrame:
    """One row per prefix length; decimals by default, 'p/q' strings when exact."""
    render = str if exact else decimal
    rows = [
        {
            "n": report.n,
            "mu": render(report.mu),
            "surprise": render(report.surprise),
            "co_surprise": render(report.co_surprise),
            "crucial": "true" if report.crucial_experiment else "false",
        }
        for report in reports
    ]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def write_trace_csv(reports: Sequence[SurpriseReport], path: Union[str, Path], exact: bool = False) -> Path:
    path = Path(path)
    trace_frame(reports, exact).to_csv(path, index=False)
    logger.info(f"Wrote {len(reports)} trace rows to {path}")
    return path
