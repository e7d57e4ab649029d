import io

import numpy as np
import pytest

from hgabounds import FormatError, ValidationError
from hgabounds.formats import (
    load_matrix,
    load_sample,
    parse_matrix,
    parse_number_list,
    parse_polynomial,
    parse_sample,
    read_text,
)


def test_json_sample():
    s = parse_sample('{"values": [1, 2, 3], "weights": [0.2, 0.3, 0.5]}')
    assert s.values == (1.0, 2.0, 3.0)
    assert s.weights == pytest.approx((0.2, 0.3, 0.5))


def test_json_sample_default_weights():
    assert parse_sample('{"values": [1, 2]}').weights == (0.5, 0.5)


def test_csv_sample_with_and_without_weights():
    s = parse_sample("value,weight\n1,0.25\n2,0.75\n")
    assert s.weights == (0.25, 0.75)
    s = parse_sample("label,value\na,1\nb,4\n\n")
    assert s.values == (1.0, 4.0) and s.weights == (0.5, 0.5)


@pytest.mark.parametrize(
    "text, where",
    [
        ("", "empty"),
        ('{"values": [1, 2', "line 1"),
        ('{"weights": [1]}', '"values"'),
        ('{"values": [1, "x"]}', '"values"[1]'),
        ("amount\n1\n", "line 1"),
        ("value,weight\n1,0.5\n2\n", "line 3"),
        ("value\n1\nnan\n", "line 3"),
    ],
)
def test_sample_errors_name_location(text, where):
    with pytest.raises(FormatError, match=None) as info:
        parse_sample(text)
    assert where in str(info.value)


def test_bad_weights_surface_as_validation_error():
    with pytest.raises(ValidationError):
        parse_sample('{"values": [1, 2], "weights": [0.5, 0.6]}')


def test_matrix_parsing():
    m = parse_matrix("2\n2 1\n1 3\n")
    assert np.array_equal(m.entries, [[2.0, 1.0], [1.0, 3.0]])


def test_matrix_small_asymmetry_symmetrized():
    with pytest.warns(RuntimeWarning):
        m = parse_matrix("2\n2 1\n1.000000001 3\n")
    assert m.entries[0, 1] == m.entries[1, 0]


@pytest.mark.parametrize(
    "text",
    ["", "x\n1\n", "2\n1 0\n", "2\n1 0\n0\n", "2\n1 0.5\n0.4 1\n", "2\n1 a\n0 1\n"],
)
def test_matrix_errors(text):
    with pytest.raises(FormatError):
        parse_matrix(text)


def test_number_lists():
    assert parse_number_list("[1, 2.5]") == [1.0, 2.5]
    assert parse_polynomial("[1, -3, 2]").degree == 2
    with pytest.raises(FormatError):
        parse_number_list('{"a": 1}')
    with pytest.raises(FormatError):
        parse_number_list("[1,")


def test_files_and_stdin(tmp_path, monkeypatch):
    path = tmp_path / "s.json"
    path.write_text('{"values": [1, 2]}')
    assert load_sample(path).n == 2
    mpath = tmp_path / "m.txt"
    mpath.write_text("1\n4\n")
    assert load_matrix(mpath).n == 1
    monkeypatch.setattr("sys.stdin", io.StringIO("value\n3\n4\n"))
    assert read_text("-").startswith("value")
    with pytest.raises(FormatError):
        read_text(tmp_path / "missing.json")
