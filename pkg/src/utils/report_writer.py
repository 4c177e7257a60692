import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union
import pandas as pd

from src.exceptions import InvalidArgumentError
from src.poset import FusionStatus


"""Renders result tables and documents as text, CSV or JSON.

A table is a DataFrame in which a column "<name>_status" qualifies the cells of
column "<name>". Text output renders exceeded cells as "?" and drops the status
columns; CSV and JSON keep them.

Usage: Import render_table, render_document, write_output
"""


logger = logging.getLogger(__name__)

FORMATS = ("text", "csv", "json")
STATUS_SUFFIX = "_status"
STATUS_MARKS = {FusionStatus.BUDGET_EXCEEDED.value: "?", FusionStatus.NO_MAXIMUM.value: "-"}


def status_columns(frame: pd.DataFrame) -> List[str]:
    return [c for c in frame.columns if c.endswith(STATUS_SUFFIX) and c[: -len(STATUS_SUFFIX)] in frame.columns]


def has_exceeded(frame: pd.DataFrame) -> bool:
    return any((frame[c] == FusionStatus.BUDGET_EXCEEDED.value).any() for c in status_columns(frame))


def _text_frame(frame: pd.DataFrame) -> pd.DataFrame:
    shown = frame.copy()
    for status in status_columns(frame):
        column = status[: -len(STATUS_SUFFIX)]
        values = shown[column].astype(object)
        marks = frame[status].map(STATUS_MARKS)
        shown[column] = values.where(marks.isna(), marks)
    shown = shown.drop(columns=status_columns(frame))
    return shown.astype(object).where(shown.notna(), "")


def render_table(frame: pd.DataFrame, fmt: str = "text") -> str:
    if fmt == "text":
        return _text_frame(frame).to_string(index=False) + "\n"
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    if fmt == "json":
        records = json.loads(frame.to_json(orient="records"))
        return json.dumps(records, indent=2, sort_keys=True) + "\n"
    raise InvalidArgumentError(f"Unknown format {fmt!r}; expected one of {FORMATS}")


def _flatten(document: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for key, value in document.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = " ".join(v if isinstance(v, str) else json.dumps(v) for v in value)
        else:
            flat[name] = value
    return flat


def render_document(document: Dict[str, Any], fmt: str = "text") -> str:
    """A single result: JSON as is, text as "key: value" lines, CSV as one flattened row."""
    if fmt == "json":
        return json.dumps(document, indent=2, sort_keys=True) + "\n"
    flat = _flatten(document)
    if fmt == "text":
        return "".join(f"{key}: {'' if value is None else value}\n" for key, value in flat.items())
    if fmt == "csv":
        return pd.DataFrame([flat]).to_csv(index=False, lineterminator="\n")
    raise InvalidArgumentError(f"Unknown format {fmt!r}; expected one of {FORMATS}")


def write_output(text: str, out: Optional[Union[str, Path]] = None) -> None:
    if out is None:
        print(text, end="")
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {len(text)} characters to {path}")
