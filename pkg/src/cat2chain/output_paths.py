"""Helpers to derive dataset-aware output paths."""

from __future__ import annotations

import re
from pathlib import Path

GENERIC_NAMES = {"", ".", "data", "results", "fixtures", "input", "inputs"}


def _sanitize_dataset_name(value: str) -> str:
    cleaned = re.sub(r"[^a-zA-Z0-9_-]+", "-", value.strip().lower()).strip("-")
    return cleaned or "default"


def infer_dataset_name(path: str | Path) -> str:
    """Dataset name from an input document: its stem, or its folder for generic stems."""
    p = Path(path)
    for candidate in (p.stem, p.parent.name):
        normalized = _sanitize_dataset_name(candidate)
        if normalized not in GENERIC_NAMES and normalized != "default":
            return normalized
    return "default"


def resolve_output_template(template: str, dataset: str) -> str:
    """Render an output path template with the inferred dataset name."""
    if "{dataset}" in template:
        return template.format(dataset=dataset)
    return template


def chain_output_filename(normalized: bool) -> str:
    return "chain_normalized.json" if normalized else "chain_alternating.json"


def homotopy_report_filename() -> str:
    return "homotopy_report.md"


def default_output_path(template: str, input_path: str | Path, filename: str) -> Path:
    return Path(resolve_output_template(template, infer_dataset_name(input_path))) / filename
