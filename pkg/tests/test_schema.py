import io
import json
from fractions import Fraction

import pytest

from src.classify import classify_report
from src.errors import InvalidParam, NotReduced
from src.fan import anticanonical_cartier, wd_fan, with_fano_verdict
from src.partition import Partition
from src.schema import (
    REPORT_COLUMNS,
    cartier_record,
    dump_json,
    fan_record,
    format_rational,
    format_table,
    normalize_text,
    parse_partition,
    parse_perm,
    parse_word,
    report_record,
    write_csv,
)
from src.weyl import Permutation


def test_normalize_text():
    assert normalize_text("  2413 ") == "2413"
    assert normalize_text("   ") is None
    assert normalize_text(None) is None


def test_parse_perm_forms():
    assert parse_perm("2413") == Permutation((2, 4, 1, 3))
    assert parse_perm("2,4,1,3", 4) == Permutation((2, 4, 1, 3))
    with pytest.raises(InvalidParam):
        parse_perm("2413", 5)
    with pytest.raises(InvalidParam):
        parse_perm("24a3")
    with pytest.raises(InvalidParam):
        parse_perm("2213")


def test_parse_word():
    assert parse_word("1,3,2", 4).letters == (1, 3, 2)
    assert parse_word("", 4).letters == ()
    with pytest.raises(NotReduced):
        parse_word("1,1", 3)


def test_parse_partition():
    assert parse_partition("") == Partition()
    assert parse_partition("0") == Partition()
    assert parse_partition("2,1") == Partition((2, 1))
    with pytest.raises(InvalidParam):
        parse_partition("1,2")


def test_format_rational():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(3)) == "3"


def test_report_record():
    record = report_record(classify_report(Permutation((2, 4, 1, 3)), 2, 4))
    assert list(record) == REPORT_COLUMNS
    assert record["lambda"] == [2, 1]
    assert (record["toric"], record["smooth"], record["gorenstein"]) == (True, False, True)
    assert (record["hook_x"], record["hook_y"], record["dim"]) == (2, 1, 3)


def test_fan_record_is_json_ready():
    record = fan_record(wd_fan(2))
    assert list(record) == ["ambient_dim", "space", "rays", "max_cones", "labels"]
    assert record["labels"][0] == "1234"
    text = dump_json(record)
    assert text.endswith("\n")
    assert json.loads(text) == record


def test_cartier_record():
    f = wd_fan(2)
    record = cartier_record(with_fano_verdict(f, anticanonical_cartier(f)))
    assert record["gorenstein"] is True
    assert record["fano"] is True
    assert ["-1", "-1", "-2"] in record["m"]


def test_write_csv():
    buf = io.StringIO()
    write_csv([{"perm": "2413", "toric": True, "lambda": [2, 1]}], ["perm", "toric", "lambda"], buf)
    assert buf.getvalue() == 'perm,toric,lambda\n2413,yes,"2,1"\n'


def test_format_table():
    table = format_table([{"perm": "1234", "dim": 0}], ["perm", "dim"])
    assert table.splitlines() == ["perm  dim", "1234  0"]
    assert format_table([], ["perm"], color=True).startswith("\033[1m")
