"""Markdown reports for nerve counts and homotopy verification transcripts."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import pandas as pd

from ..chfunctor import PrismRow, TranscriptRow
from ..nerve import SimplicialSetTrunc


def _markdown_table(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "_No data available._"

    columns = [str(col) for col in frame.columns]
    header = "| " + " | ".join(columns) + " |"
    separator = "| " + " | ".join(["---"] * len(columns)) + " |"
    rows: list[str] = []
    for _, row in frame.iterrows():
        rows.append("| " + " | ".join(str(row[col]) for col in frame.columns) + " |")
    return "\n".join([header, separator, *rows])


def nerve_counts_frame(x: SimplicialSetTrunc) -> pd.DataFrame:
    nondegenerate = x.nondegenerate_counts()
    return pd.DataFrame(
        {
            "dimension": list(range(x.max_dim + 1)),
            "simplices": x.counts(),
            "nondegenerate": nondegenerate,
        }
    )


def nerve_counts_table(x: SimplicialSetTrunc) -> str:
    return _markdown_table(nerve_counts_frame(x))


def transcript_frame(rows: Sequence[TranscriptRow]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"degree": r.degree, "defect_nonzero": r.defect_nonzero, "verdict": r.verdict} for r in rows],
        columns=["degree", "defect_nonzero", "verdict"],
    )


def prism_frame(rows: Sequence[PrismRow]) -> pd.DataFrame:
    def _terms(entries: tuple[tuple[str, int], ...]) -> str:
        return " ".join(f"{'+' if coeff > 0 else '-'}{abs(coeff) if abs(coeff) != 1 else ''}{label}"
                        for label, coeff in entries) or "0"

    return pd.DataFrame(
        [{"morphism": r.morphism, "B": r.b, "A": r.a, "h1": _terms(r.entries)} for r in rows],
        columns=["morphism", "B", "A", "h1"],
    )


def generate_report(
    transcript: Sequence[TranscriptRow],
    prisms: Sequence[PrismRow],
    normalized: Sequence[TranscriptRow] | None = None,
) -> str:
    """Markdown transcript of a homotopy check."""
    frame = transcript_frame(transcript)
    ok = bool((frame["defect_nonzero"] == 0).all()) if not frame.empty else True
    lines: list[str] = [
        "# cat2chain Homotopy Report",
        "",
        f"**Verdict**: {'Ok' if ok else 'Violation'}",
        "",
        "## Alternating complex",
        _markdown_table(frame),
        "",
    ]
    if normalized is not None:
        lines.extend(["## Normalized complex", _markdown_table(transcript_frame(normalized)), ""])
    lines.extend(["## Degree 1: B - A", _markdown_table(prism_frame(prisms)), ""])
    return "\n".join(lines)


def save_report(report: str, output_path: Path) -> None:
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(report, encoding="utf-8")
