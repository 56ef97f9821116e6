from __future__ import annotations

from pathlib import Path

from cat2chain import catalog
from cat2chain.chfunctor import (
    PrismRow,
    TranscriptRow,
    ch_category,
    ch_nat_transf,
    homotopy_transcript,
    prism_decomposition,
)
from cat2chain.nerve import nerve
from cat2chain.tools import report


def test_nerve_counts_frame() -> None:
    frame = report.nerve_counts_frame(nerve(catalog.cyclic_group(2), 3))

    assert list(frame["simplices"]) == [1, 2, 4, 8]
    assert list(frame["nondegenerate"]) == [1, 1, 1, 1]


def test_prism_frame_renders_signed_terms() -> None:
    rows = [
        PrismRow("f", "(c, d)", "(a, b)", (("(a, b)", -1), ("(c, d)", 1))),
        PrismRow("id_x", "(c, id_2)", "(id_0, c)", (("(c, x)", 2),)),
        PrismRow("id_y", "(b, id_3)", "(id_1, b)", ()),
    ]

    frame = report.prism_frame(rows)

    assert list(frame["h1"]) == ["-(a, b) +(c, d)", "+2(c, x)", "0"]


def test_generate_report_for_arrow_to_square() -> None:
    _, _, alpha = catalog.arrow_to_square_functors()
    source = ch_category(alpha.source.source, 3)
    target = ch_category(alpha.source.target, 3)
    h = ch_nat_transf(alpha, 3, source, target)

    text = report.generate_report(homotopy_transcript(h), prism_decomposition(alpha, h, source, target))

    assert text.startswith("# cat2chain Homotopy Report")
    assert "**Verdict**: Ok" in text
    assert "| f | (c, d) | (a, b) | -(a, b) +(c, d) |" in text
    assert "## Normalized complex" not in text


def test_generate_report_flags_violations(tmp_path: Path) -> None:
    transcript = [TranscriptRow(0, 0, "Ok"), TranscriptRow(1, 3, "Violation")]
    out = tmp_path / "reports" / "homotopy_report.md"

    report.save_report(report.generate_report(transcript, [], normalized=transcript), out)

    text = out.read_text(encoding="utf-8")
    assert "**Verdict**: Violation" in text
    assert "## Normalized complex" in text
    assert "_No data available._" in text
