import json

import pytest

from cyclecones.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_identities_small_scan(capsys):
    code, out, err = run(capsys, "identities", "--n", "10", "--max-m", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "check,m,n,lhs,rhs,equal"
    assert lines[1] == "coefficient,1,10,-504/1,-504/1,true"
    assert lines[2] == "primitive,1,10,-504/1,-504/1,true"
    assert len(lines) == 1 + 2 * 3
    assert all(line.endswith("true") for line in lines[1:])


def test_identities_single_record(capsys):
    code, out, _ = run(capsys, "identities", "--n", "10", "--max-m", "1")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 2
    assert all("-504/1,-504/1" in r for r in rows)


def test_identities_json(capsys):
    code, out, _ = run(
        capsys, "identities", "--n", "10", "--max-m", "2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["all_equal"] is True
    assert doc["weight"] == 6 and doc["physical"] is True
    assert len(doc["records"]) == 4
    assert list(doc) == sorted(doc)


def test_identities_usage_errors(capsys):
    code, _, err = run(capsys, "identities", "--n", "11", "--max-m", "5")
    assert code == 2 and "error" in err
    code, _, err = run(
        capsys, "identities", "--n", "10", "--weight", "6", "--max-m", "2"
    )
    assert code == 2
    code, _, err = run(capsys, "identities", "--weight", "7", "--max-m", "2")
    assert code == 2


def test_converge_empty_table(capsys):
    code, out, _ = run(capsys, "converge", "--n", "10", "--max-m", "0")
    assert code == 0
    assert out == "m,distance_num,distance_den,distance_float\n"


def test_converge_weight_6_zeros(capsys):
    code, out, _ = run(capsys, "converge", "--n", "10", "--max-m", "4")
    assert code == 0
    rows = out.splitlines()[1:]
    assert rows == [f"{m},0,1,0.0" for m in range(1, 5)]


def test_converge_precision_guard_before_work(capsys):
    code, _, err = run(
        capsys, "converge", "--n", "10", "--max-m", "50", "--precision", "10"
    )
    assert code == 2
    assert "precision" in err


def test_converge_nonphysical_weight_notice(capsys):
    code, out, err = run(capsys, "converge", "--weight", "16", "--max-m", "2")
    assert code == 0
    assert "non-physical" in err


def test_converge_full_vs_primitive(capsys):
    code, full, _ = run(
        capsys, "converge", "--weight", "18", "--max-m", "4", "--full"
    )
    assert code == 0
    code, prim, _ = run(
        capsys, "converge", "--weight", "18", "--max-m", "4", "--primitive"
    )
    assert code == 0
    assert full.splitlines()[:4] == prim.splitlines()[:4]  # header + 1..3
    assert full.splitlines()[4] != prim.splitlines()[4]  # m = 4 differs


def test_cone_report(capsys):
    code, out, _ = run(capsys, "cone", "--n", "10", "--max-m", "20")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 1 and doc["pointed"] is True
    assert doc["generator_count"] == 21
    assert doc["extremal_rays"] == [["-1/1"]]
    assert doc["extremal_stable"] is True
    assert list(doc) == sorted(doc)


def test_cone_dim_2(capsys):
    code, out, _ = run(capsys, "cone", "--n", "34", "--max-m", "40")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 2 == doc["expected_dim"]
    assert doc["pointed"] is True and doc["extremal_stable"] is True


def test_cache_round_trip(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    code, cold, err_cold = run(
        capsys, "converge", "--n", "34", "--max-m", "8", "--cache-dir", cache
    )
    assert code == 0
    files = list((tmp_path / "cache").iterdir())
    assert len(files) == 1 and files[0].name == "miller_k18_N9.txt"
    code, warm, err_warm = run(
        capsys, "converge", "--n", "34", "--max-m", "8", "--cache-dir", cache
    )
    assert code == 0
    assert warm == cold
    assert err_warm == ""

    # reuse across commands: cone at the same precision hits the same file
    code, _, err = run(
        capsys, "cone", "--n", "34", "--max-m", "8", "--cache-dir", cache
    )
    assert code == 0
    assert len(list((tmp_path / "cache").iterdir())) == 1

    # corrupt cache: warn, recompute, byte-identical output
    files[0].write_text("truncated nonsense")
    code, again, err = run(
        capsys, "converge", "--n", "34", "--max-m", "8", "--cache-dir", cache
    )
    assert code == 0
    assert again == cold
    assert "corrupt" in err


def test_lattice_build(capsys):
    code, out, _ = run(capsys, "lattice", "build", "--n", "10")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["gram"]) == 12
    assert doc["signature"] == [10, 2]


def test_lattice_moment(capsys):
    code, out, _ = run(
        capsys,
        "lattice", "moment", "--n", "10",
        "--vectors", "[[1,1,0,0,0,0,0,0,0,0,0,0],[0,0,1,2,0,0,0,0,0,0,0,0]]",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"] == [[2, 0], [0, 4]]
    assert doc["norms"] == [1, 2]
    assert doc["positive_definite"] is True


def test_lattice_reduce(capsys):
    code, out, _ = run(
        capsys, "lattice", "reduce", "--n", "10", "--doubled", "[[4,3],[3,4]]"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["reduced_rows"] == [[2, 1], [1, 4]]
    assert doc["det"] == "7/4"

    code, _, err = run(
        capsys, "lattice", "reduce", "--n", "10", "--doubled", "[[2,2],[2,2]]"
    )
    assert code == 2 and "positive definite" in err


def test_lattice_family(capsys):
    code, out, _ = run(
        capsys, "lattice", "family", "--n", "10", "--m", "3", "--jmax", "5"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["dets_strictly_increasing"] is True
    assert [e["det"] for e in doc["entries"]] == [
        "3/1", "12/1", "27/1", "48/1", "75/1"
    ]
    assert all(e["span_matches_base"] for e in doc["entries"])


def test_determinism(capsys):
    runs = [
        run(capsys, "cone", "--n", "34", "--max-m", "12")[1]
        for _ in range(2)
    ]
    assert runs[0] == runs[1]


def test_usage_error_exit_code_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["nonsense-command"])
    assert exc.value.code == 2
