from pathlib import Path

from enumeration.formats import write_graphs
from families.catalog import lookup
from graphs.canonical import canonical_code


def test_solve_named_graphs(cli):  # pyright: ignore[reportMissingParameterType]
    result = cli("solve", "--name", "dodecahedron", "--name", "petersen")
    assert result.status == 0
    assert [record["graph"] for record in result.records] == ["dodecahedron", "Petersen"]
    assert [record["data"]["phi"] for record in result.records] == [6, 3]
    assert result.records[0]["data"]["forest_size"] == 14
    assert all(record["holds"] and record["schema"] == 1 for record in result.records)


def test_solve_minus_edge(cli):  # pyright: ignore[reportMissingParameterType]
    result = cli("solve", "--name", "C5", "--minus-edge", "0")
    assert result.status == 0
    assert result.records[0]["data"]["phi"] == 0
    assert result.records[0]["data"]["minus_edge"] == 0


def test_solve_required(cli):  # pyright: ignore[reportMissingParameterType]
    record = cli("solve", "--name", "K4", "--required", "2").records[0]
    assert record["data"]["phi"] == 2
    assert 2 in record["data"]["fvs"]
    assert record["data"]["required"] == [2]


def test_solve_file_input(cli, tmp_path: Path):  # pyright: ignore[reportMissingParameterType]
    path = tmp_path / "input.medge"
    _ = write_graphs([lookup("theta"), lookup("Q3")], path, "medge")
    result = cli("solve", "--input", str(path))
    assert result.status == 0
    assert [record["graph"] for record in result.records] == [
        canonical_code(lookup("theta")).hex(),
        canonical_code(lookup("Q3")).hex(),
    ]
    assert [record["data"]["phi"] for record in result.records] == [1, 3]


def test_solve_usage_errors(cli):  # pyright: ignore[reportMissingParameterType]
    result = cli("solve", "--name", "no-such-graph")
    assert result.status == 2
    assert "no-such-graph" in result.stderr
    assert result.records == []

    assert cli("solve").status == 2
    assert cli("solve", "--name", "K4", "--minus-edge", "9").status == 2


def test_solve_rejects_bad_files(cli, tmp_path: Path):  # pyright: ignore[reportMissingParameterType]
    binary = tmp_path / "binary.medge"
    _ = binary.write_bytes(b"\xff\xfe\n")
    result = cli("solve", "--input", str(binary))
    assert result.status == 2
    assert "Line 1: input is not valid UTF-8" in result.stderr

    k5 = tmp_path / "k5.g6"
    _ = k5.write_text("D~{\n")
    result = cli("solve", "--input", str(k5), "--input-format", "graph6")
    assert result.status == 2
    assert "Line 1: graph is not subcubic" in result.stderr
