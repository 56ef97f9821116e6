from __future__ import annotations

import json
from pathlib import Path

import pytest

from cat2chain import cli
from cat2chain.chain import ChainComplex

DATA = Path(__file__).resolve().parents[1] / "data"


def _data(name: str) -> str:
    return str(DATA / name)


def test_validate_reports_ok_and_violations(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["validate", _data("walking_arrow.json"), _data("broken_unit_law.json")])

    out = capsys.readouterr().out
    assert code == cli.EXIT_FINDING
    assert "walking_arrow.json: Ok (2 objects, 3 morphisms, 4 composites)" in out
    assert "broken_unit_law.json: Invalid category" in out
    assert "unit_law(f, right)" in out


def test_nerve_counts(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["nerve", _data("bz2.json"), "--max-dim", "4"])

    out = capsys.readouterr().out
    assert code == cli.EXIT_OK
    assert "counts: [1, 2, 4, 8, 16]" in out
    assert "nondegenerate: [1, 1, 1, 1, 1]" in out


def test_nerve_listing(capsys: pytest.CaptureFixture[str]) -> None:
    cli.main(["nerve", _data("walking_arrow.json"), "--max-dim", "1", "--list"])

    out = capsys.readouterr().out
    assert "dimension 1:\n  [0] (f)\n  [1] (id_x)\n  [2] (id_y)" in out


def test_homology_marks_undetermined_degree(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["homology", _data("walking_arrow.json"), "--max-dim", "4"])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "b0=1 b1=0 b2=0 (b3=?)"


def test_homology_normalized_discrete(capsys: pytest.CaptureFixture[str]) -> None:
    cli.main(["homology", _data("discrete3.json"), "--max-dim", "3", "--normalized"])

    assert capsys.readouterr().out.strip() == "b0=3 b1=0 (b2=?)"


def test_homology_rejects_small_truncation(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["homology", _data("walking_arrow.json"), "--max-dim", "1"])

    assert code == cli.EXIT_FINDING
    assert "truncation must be at least 2" in capsys.readouterr().err


def test_chain_writes_explicit_output(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out = tmp_path / "chain.json"

    code = cli.main(["chain", _data("walking_arrow.json"), "--max-dim", "3", "--output", str(out)])

    assert code == cli.EXIT_OK
    assert "dims [2, 3, 4, 5]" in capsys.readouterr().out
    complex_ = ChainComplex.from_document(json.loads(out.read_text(encoding="utf-8")))
    assert complex_.dims() == [2, 3, 4, 5]


def test_chain_uses_config_output_template(tmp_path: Path) -> None:
    cfg = tmp_path / "config.toml"
    cfg.write_text(f'[output]\ndata_dir = "{tmp_path.as_posix()}/{{dataset}}"\n', encoding="utf-8")

    code = cli.main(["chain", _data("bz2.json"), "--max-dim", "3", "--normalized", "--config", str(cfg)])

    assert code == cli.EXIT_OK
    written = json.loads((tmp_path / "bz2" / "chain_normalized.json").read_text(encoding="utf-8"))
    assert [len(labels) for labels in written["bases"]] == [1, 1, 1, 1]


def test_coskeletal(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["coskeletal", _data("commutative_square.json")])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "Ok (dimensions 3)"


def test_diamond(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["diamond", _data("example_graph.json"), "--g", "(1,0,0,1)", "--f", "(0,0,1,0)"])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "(0, 0, 1, 1)"


def test_diamond_rejects_non_composable_pair(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["diamond", _data("example_graph.json"), "--g", "(0,0,0,0)", "--f", "(1,0,0,0)"])

    assert code == cli.EXIT_FINDING
    assert "Not composable" in capsys.readouterr().err


def test_solve_comp_graph_and_random_graphs(capsys: pytest.CaptureFixture[str]) -> None:
    args = ["solve-comp", _data("example_graph.json"), "--random-graphs", "5", "--seed", "2"]

    first = cli.main(args)
    first_out = capsys.readouterr().out
    second = cli.main(args)
    second_out = capsys.readouterr().out

    assert first == second == cli.EXIT_OK
    assert first_out == second_out
    lines = first_out.strip().splitlines()
    assert lines[0] == "Unique; equals diamond: yes"
    assert len(lines) == 6
    assert all(line.endswith("Unique; equals diamond: yes") for line in lines)


def test_solve_comp_needs_an_input(capsys: pytest.CaptureFixture[str]) -> None:
    assert cli.main(["solve-comp"]) == cli.EXIT_INPUT
    assert "needs a graph document" in capsys.readouterr().err


def test_eh_check_confirms_cyclic_addition(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["eh-check", _data("z3_add.json"), "--no-progress"])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "Confirmed: operations coincide and commute; unit 0"


def test_eh_check_reports_interchange_violation(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["eh-check", _data("left_absorbing.json"), "--no-progress"])

    assert code == cli.EXIT_FINDING
    assert capsys.readouterr().out.strip() == "InterchangeViolation: (e + a) o (b + e) != e o b + a o e"


def test_eh_check_exhaustive_sweep(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["eh-check", "--exhaustive-size", "2", "--no-progress"])

    out = capsys.readouterr().out
    assert code == cli.EXIT_OK
    assert "size 1: 1 pairs, 1 satisfy interchange, 1 confirmed, 0 counterexamples" in out
    assert "size 2: 16 pairs, 4 satisfy interchange, 4 confirmed, 0 counterexamples" in out


def test_eh_check_sampled_sweep(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["eh-check", "--samples", "50", "--sample-size", "3", "--seed", "1", "--no-progress"])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.startswith("sampled size 3: 50 pairs")


def test_homotopy_transcript_and_report(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    report = tmp_path / "report.md"
    args = [
        "homotopy",
        _data("walking_arrow.json"),
        _data("commutative_square.json"),
        _data("arrow_to_square_F.json"),
        _data("arrow_to_square_G.json"),
        _data("arrow_to_square_alpha.json"),
        "--max-dim",
        "3",
        "--normalized",
        "--report",
        str(report),
    ]

    code = cli.main(args)

    captured = capsys.readouterr()
    assert code == cli.EXIT_OK
    assert "degree 0: defect nonzero entries 0 -> Ok" in captured.out
    assert "normalized degree 2: defect nonzero entries 0 -> Ok" in captured.out
    assert "h1(f) = B - A with B = (c, d), A = (a, b): -(a, b) +(c, d)" in captured.out
    assert "Saved report" in captured.err
    assert "**Verdict**: Ok" in report.read_text(encoding="utf-8")


def test_homotopy_rejects_unnatural_components(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    alpha = tmp_path / "alpha.json"
    alpha.write_text(json.dumps({"components": {"x": "a", "y": "b"}}), encoding="utf-8")
    args = [
        "homotopy",
        _data("walking_arrow.json"),
        _data("commutative_square.json"),
        _data("arrow_to_square_F.json"),
        _data("arrow_to_square_G.json"),
        str(alpha),
    ]

    assert cli.main(args) == cli.EXIT_FINDING
    assert "component_boundary" in capsys.readouterr().err


def test_missing_input_is_an_input_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["nerve", str(tmp_path / "missing.json")])

    assert code == cli.EXIT_INPUT
    assert "[cat2chain] input error" in capsys.readouterr().err


def test_invalid_json_is_an_input_error(tmp_path: Path) -> None:
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")

    assert cli.main(["validate", str(path)]) == cli.EXIT_INPUT


def test_bad_config_is_an_input_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cfg = tmp_path / "config.toml"
    cfg.write_text("[plots]\n", encoding="utf-8")

    assert cli.main(["nerve", _data("bz2.json"), "--config", str(cfg)]) == cli.EXIT_INPUT
    assert "config error" in capsys.readouterr().err


def test_main_uses_parse_args(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    args = cli._parse_args(["coskeletal", _data("bz2.json")])
    monkeypatch.setattr(cli, "_parse_args", lambda argv=None: args)

    assert cli.main() == cli.EXIT_OK
    assert "Ok" in capsys.readouterr().out


def test_homology_output_is_deterministic(capsys: pytest.CaptureFixture[str]) -> None:
    cli.main(["homology", _data("commutative_square.json"), "--max-dim", "5"])
    first = capsys.readouterr().out
    cli.main(["homology", _data("commutative_square.json"), "--max-dim", "5"])
    second = capsys.readouterr().out

    assert first == second == "b0=1 b1=0 b2=0 b3=0 (b4=?)\n"


@pytest.mark.parametrize(
    "document",
    [
        {"objects": "x"},
        {"objects": ["x"], "morphisms": [{"id": "i"}], "identities": {"x": "i"}, "compose": []},
    ],
)
def test_malformed_category_is_an_input_error(
    tmp_path: Path, capsys: pytest.CaptureFixture[str], document: dict[str, object]
) -> None:
    path = tmp_path / "malformed.json"
    path.write_text(json.dumps(document), encoding="utf-8")

    assert cli.main(["homology", str(path)]) == cli.EXIT_INPUT
    assert "[cat2chain] input error" in capsys.readouterr().err
    assert cli.main(["validate", str(path), _data("walking_arrow.json")]) == cli.EXIT_INPUT


def test_malformed_transformation_is_an_input_error(tmp_path: Path) -> None:
    alpha = tmp_path / "alpha.json"
    alpha.write_text(json.dumps({"components": ["x", "y"]}), encoding="utf-8")
    args = [
        "homotopy",
        _data("walking_arrow.json"),
        _data("commutative_square.json"),
        _data("arrow_to_square_F.json"),
        _data("arrow_to_square_G.json"),
        str(alpha),
    ]

    assert cli.main(args) == cli.EXIT_INPUT


def test_eh_check_samples_sizes_above_three(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    cfg = tmp_path / "config.toml"
    cfg.write_text("[eckmann_hilton]\nsamples = 30\n", encoding="utf-8")

    code = cli.main(["eh-check", "--exhaustive-size", "4", "--no-progress", "--config", str(cfg)])

    lines = capsys.readouterr().out.strip().splitlines()
    assert code == cli.EXIT_OK
    assert [line.split(":")[0] for line in lines] == ["size 1", "size 2", "size 3", "sampled size 4"]
    assert lines[-1].startswith("sampled size 4: 30 pairs")
    assert lines[-1].endswith("0 counterexamples")


def test_nerve_markdown_table(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["nerve", _data("bz2.json"), "--max-dim", "2", "--markdown"])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "| dimension | simplices | nondegenerate |",
        "| --- | --- | --- |",
        "| 0 | 1 | 1 |",
        "| 1 | 2 | 1 |",
        "| 2 | 4 | 1 |",
    ]


def test_diamond_rejects_wrong_length_vector(capsys: pytest.CaptureFixture[str]) -> None:
    code = cli.main(["diamond", _data("example_graph.json"), "--g", "(1,0)", "--f", "(0,0,1,0)"])

    assert code == cli.EXIT_INPUT
    assert "--g must have 4 entries" in capsys.readouterr().err
