import json

import pytest

from src import cli, verify
from src.cli import main
from src.errors import OracleDisagreement


def run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_classify_table(capsys):
    assert main(["classify", "--n", "4", "--d", "2", "--perm", "2413"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split()[:3] == ["perm", "d", "n"]
    assert lines[1].split()[:7] == ["2413", "2", "4", "2,1", "yes", "no", "yes"]


def test_classify_json_by_partition(capsys):
    code, record = run_json(capsys, ["classify", "--n", "4", "--d", "2", "--partition", "2,2", "--format", "json"])
    assert code == 0
    assert record["perm"] == "3412"
    assert (record["toric"], record["smooth"], record["gorenstein"], record["dim"]) == (False, True, True, 4)


def test_classify_by_word(capsys):
    code, record = run_json(capsys, ["classify", "--n", "4", "--d", "2", "--word", "1,3,2", "--format", "json"])
    assert code == 0
    assert record["perm"] == "2413"


def test_classify_rejects_non_grassmannian(capsys):
    assert main(["classify", "--n", "4", "--d", "2", "--perm", "2143"]) == 2
    assert "NotGrassmannian" in capsys.readouterr().err


def test_classify_needs_a_variety(capsys):
    assert main(["classify", "--n", "4", "--d", "2"]) == 2
    assert main(["classify", "--n", "13", "--d", "2", "--perm", "2413"]) == 2


def test_fan_grassmannian(capsys):
    code, record = run_json(capsys, ["fan", "--n", "4", "--d", "2", "--perm", "2314"])
    assert code == 0
    assert record["rays"] == [[1, 0], [-1, 1], [0, -1]]
    assert record["max_cones"] == [[0, 1], [0, 2], [1, 2]]


def test_fan_flag_from_word(capsys):
    code, record = run_json(capsys, ["fan", "--n", "4", "--space", "flag", "--word", "1,3,2"])
    assert code == 0
    assert record["space"] == "flag"
    assert len(record["rays"]) == 6
    assert len(record["max_cones"]) == 8


def test_fan_flag_from_perm(capsys):
    code, record = run_json(capsys, ["fan", "--n", "4", "--d", "2", "--space", "flag", "--perm", "2413"])
    assert code == 0
    assert record["rays"][3:] == [[-1, 0, 1], [0, -1, 1], [0, 0, -1]]


def test_fan_not_toric(capsys):
    assert main(["fan", "--n", "4", "--d", "2", "--partition", "2,2"]) == 3
    assert "NotToric" in capsys.readouterr().err
    assert main(["fan", "--n", "3", "--space", "flag", "--word", "1,2,1"]) == 3


def test_fan_to_file(tmp_path, capsys):
    out = tmp_path / "fans" / "w2.json"
    assert main(["fan", "--n", "4", "--d", "2", "--perm", "2413", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert len(json.loads(out.read_text())["max_cones"]) == 5


def test_verify_fano(capsys):
    code, payload = run_json(capsys, ["verify-fano", "--dmax", "2", "--samples", "500", "--sweep", "4"])
    assert code == 0
    assert [r["d"] for r in payload["results"]] == [1, 2]
    assert all(r["status"] == "pass" for r in payload["results"])
    assert all(row["ok"] for row in payload["sweep"])


def test_verify_fano_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(verify, "is_complete_sampled", lambda f, samples, seed: False)
    assert main(["verify-fano", "--dmax", "1", "--samples", "10"]) == 4
    assert "error: d=1 status=fail" in capsys.readouterr().err


def test_verify_fano_dmax_cap(capsys):
    assert main(["verify-fano", "--dmax", "7"]) == 2


@pytest.mark.parametrize("flag, value", [("--seed", "-1"), ("--samples", "-5"), ("--samples", "0")])
def test_verify_fano_rejects_bad_sampling(capsys, flag, value):
    assert main(["verify-fano", "--dmax", "1", flag, value]) == 2
    assert "InvalidParam" in capsys.readouterr().err


def test_verify_fano_csv(capsys):
    assert main(["verify-fano", "--dmax", "1", "--samples", "200", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(verify.RESULT_COLUMNS)
    assert lines[1].startswith("1,pass,2,2,")


def test_json_output_is_byte_stable(capsys):
    for argv in (["fan", "--n", "4", "--d", "2", "--perm", "2413"], ["verify-fano", "--dmax", "2", "--samples", "300"]):
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    "how, perms",
    [
        ("all", ["1234", "1324", "2314", "1423", "2413", "3412"]),
        ("toric", ["1234", "1324", "2314", "1423", "2413"]),
        ("smooth-toric", ["1234", "1324", "2314", "1423"]),
        ("gorenstein-toric", ["1234", "1324", "2314", "1423", "2413"]),
    ],
)
def test_enumerate_gr24(capsys, how, perms):
    code, rows = run_json(capsys, ["enumerate", "--n", "4", "--d", "2", "--filter", how, "--format", "json"])
    assert code == 0
    assert [r["perm"] for r in rows] == perms


def test_enumerate_gorenstein_toric_gr36(capsys):
    code, rows = run_json(capsys, ["enumerate", "--n", "6", "--d", "3", "--filter", "gorenstein-toric", "--format", "json"])
    assert code == 0
    assert sorted(tuple(r["lambda"]) for r in rows) == [(), (1,), (1, 1), (1, 1, 1), (2,), (2, 1), (3,), (3, 1, 1)]


def test_enumerate_every_d_as_csv(capsys):
    assert main(["enumerate", "--n", "4", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("perm,d,n,lambda")
    assert len(lines) == 1 + 4 + 6 + 4


def test_enumerate_bad_filter():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--n", "4", "--filter", "bogus"])
    assert exc.value.code == 2


def test_oracle_lifts(capsys):
    assert main(["oracle", "lifts", "--d", "3"]) == 0
    assert capsys.readouterr().out == "lifts: 10 comparisons; 10 classes match, sizes sum 32\n"


def test_oracle_disagreement_exit_code(monkeypatch, capsys):
    def broken(n=None, d=None, workers=1):
        raise OracleDisagreement("lifts", "d=2 v=1324: subword [2] differs")

    monkeypatch.setitem(cli.ORACLES, "lifts", broken)
    assert main(["oracle", "lifts", "--d", "2"]) == 5
    assert "OracleDisagreement" in capsys.readouterr().err
