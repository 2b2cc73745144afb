"""Command-line surface: artifacts, filters, determinism, exit codes."""

import json
from pathlib import Path

import pytest

from bipeel.cli import EXIT_INPUT, EXIT_OK, EXIT_USAGE, RunConfig, main, run
from helpers import TWIN_BLOCK_EDGES


@pytest.fixture
def edge_file(tmp_path: Path) -> Path:
    path = tmp_path / "twin.edges"
    path.write_text("".join(f"{a} {b}\n" for a, b in TWIN_BLOCK_EDGES))
    return path


def read_csv(path: Path) -> list[str]:
    return path.read_text().splitlines()


def test_count_subcommand(edge_file, tmp_path, capsys):
    code = main(["count", str(edge_file), "--output-dir", str(tmp_path / "out")])
    assert code == EXIT_OK
    assert (tmp_path / "out" / "counts.txt").read_text() == "butterflies=11\n"
    assert "butterflies=11" in capsys.readouterr().out


def test_tip_artifacts(edge_file, tmp_path, capsys):
    out = tmp_path / "out"
    code = main(
        ["tip", str(edge_file), "--output-dir", str(out), "--members", "--timings"]
    )
    assert code == EXIT_OK
    values = dict(
        line.split("\t") for line in read_csv(out / "tip_values.tsv")
    )
    assert values == {"A": "2", "B": "3", "C": "3", "D": "3", "E": "3", "F": "2"}
    rows = read_csv(out / "tip_profiles.csv")
    assert rows[0] == "node_id,parent_id,kind,k,u_size,v_size,edges,density"
    assert len(rows) == 3  # header + k=3 child + k=2 root
    assert any(",tip,3,4,6,14," in row for row in rows)
    timings = json.loads((out / "timings.json").read_text())
    assert {"load_s", "counting_s", "peeling_s", "total_s"} <= set(timings)
    members = read_csv(out / "tip_members.tsv")
    assert len(members) == 4 + 6  # child members + root members
    output = capsys.readouterr().out
    assert "max tip value: 3" in output
    assert "histogram" in output


def test_wing_artifacts(edge_file, tmp_path):
    out = tmp_path / "out"
    assert main(["wing", str(edge_file), "--output-dir", str(out)]) == EXIT_OK
    values = read_csv(out / "wing_values.tsv")
    assert "C\t4\t1" in values and "D\t3\t1" in values
    assert sum(line.endswith("\t2") for line in values) == 16
    rows = read_csv(out / "wing_profiles.csv")
    assert len(rows) == 4  # header + two k=2 blocks + k=1 root
    root = [row for row in rows[1:] if row.split(",")[1] == ""]
    assert len(root) == 1 and root[0].endswith("0.500000")


def test_profile_filters_select_rows_only(edge_file, tmp_path):
    loose = tmp_path / "loose"
    tight = tmp_path / "tight"
    main(["wing", str(edge_file), "--output-dir", str(loose)])
    main(
        [
            "wing",
            str(edge_file),
            "--output-dir",
            str(tight),
            "--min-density",
            "0.6",
            "--min-u",
            "3",
            "--min-v",
            "3",
        ]
    )
    all_rows = set(read_csv(loose / "wing_profiles.csv")[1:])
    kept_rows = set(read_csv(tight / "wing_profiles.csv")[1:])
    assert kept_rows < all_rows
    assert len(kept_rows) == 2  # the two dense blocks


def test_byte_identical_reruns(edge_file, tmp_path):
    first = tmp_path / "a"
    second = tmp_path / "b"
    for out in (first, second):
        for algo in ("tip", "wing", "core", "frac-core", "nucleus23"):
            assert (
                main([algo, str(edge_file), "--output-dir", str(out)]) == EXIT_OK
            )
    for name in [p.name for p in first.iterdir()]:
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_hierarchy_subcommand(edge_file, tmp_path):
    out = tmp_path / "out"
    code = main(
        [
            "hierarchy",
            str(edge_file),
            "--algorithm",
            "tip",
            "--output-dir",
            str(out),
            "--members",
        ]
    )
    assert code == EXIT_OK
    assert (out / "tip_profiles.csv").exists()
    assert (out / "tip_members.tsv").exists()
    assert not (out / "tip_values.tsv").exists()


def test_baseline_subcommands_write_values(edge_file, tmp_path):
    out = tmp_path / "out"
    for algo, filename in [
        ("core", "core_values.tsv"),
        ("frac-core", "frac_core_values.tsv"),
        ("nucleus23", "nucleus23_values.tsv"),
    ]:
        assert main([algo, str(edge_file), "--output-dir", str(out)]) == EXIT_OK
        assert (out / filename).exists()
    frac = read_csv(out / "frac_core_values.tsv")
    assert all(len(line.split("\t")) == 2 for line in frac)


def test_primary_side_right(edge_file, tmp_path, capsys):
    code = main(
        [
            "tip",
            str(edge_file),
            "--primary-side",
            "right",
            "--output-dir",
            str(tmp_path / "out"),
        ]
    )
    assert code == EXIT_OK
    assert "|U|=6 |V|=6" in capsys.readouterr().out


def test_usage_errors_exit_one(edge_file, tmp_path, capsys):
    assert (
        main(
            [
                "tip",
                str(edge_file),
                "--min-density",
                "1.5",
                "--output-dir",
                str(tmp_path),
            ]
        )
        == EXIT_USAGE
    )
    with pytest.raises(SystemExit) as exit_info:
        main(["unknown-algo", str(edge_file)])
    assert exit_info.value.code == EXIT_USAGE
    capsys.readouterr()


def test_input_errors_exit_two(tmp_path, capsys):
    missing = tmp_path / "missing.edges"
    assert main(["tip", str(missing)]) == EXIT_INPUT
    bad = tmp_path / "bad.edges"
    bad.write_text("a b c\n")
    assert main(["tip", str(bad), "--output-dir", str(tmp_path)]) == EXIT_INPUT
    empty = tmp_path / "empty.edges"
    empty.write_text("# only comments\n")
    assert main(["count", str(empty), "--output-dir", str(tmp_path)]) == EXIT_INPUT
    capsys.readouterr()


def test_fetch_unknown_dataset_exits_two(capsys):
    assert main(["fetch", "not-a-dataset"]) == EXIT_INPUT
    err = capsys.readouterr().err
    assert "condmat" in err  # error lists the known registry


def test_run_config_validation():
    config = RunConfig(input_path="x", algorithm="quantum")
    with pytest.raises(ValueError):
        config.validate()
    config = RunConfig(input_path="x", min_u=-1)
    with pytest.raises(ValueError):
        config.validate()
