import numpy as np
import pytest
from hypothesis import given

from conftest import THOROUGH, binary_matrices, pure_schemes
from zmu.catalog import NAMES, balbuena_minor, named
from zmu.cyclic_core import blow_up
from zmu.formats import (FormatError, format_matrix, format_scheme,
                         format_voltage_graph, parse_any, parse_matrix,
                         parse_scheme, parse_voltage_graph, sniff)
from zmu.semiplanes import construct_C_mix
from zmu.voltage import VoltageGraph


def test_scheme_text_layout():
    text = format_scheme(named("petersen").scheme)
    assert text.splitlines() == ["zmu-scheme v1 mu=5 rows=2 cols=2", "1,4 0", "0 2,3"]


@pytest.mark.parametrize("name", NAMES)
def test_fixture_round_trip(name):
    S = named(name).scheme
    assert parse_scheme(format_scheme(S)) == S


def test_mixed_round_trip():
    for S in (construct_C_mix(4), balbuena_minor(5, "M"), balbuena_minor(7, "N")):
        back = parse_scheme(format_scheme(S))
        assert np.array_equal(blow_up(back), blow_up(S))


def test_comments_and_blank_lines():
    S = parse_scheme("# header comment\n\nzmu-scheme v1 mu=3 rows=1 cols=2  # trailing\n1 -\n")
    assert S.shape == (1, 2) and S.sets(0, 0) == (1,)


@pytest.mark.parametrize("text, line, fragment", [
    ("zmu-scheme v1 mu=3 rows=1 cols=1\nx\n", 2, "unrecognised cell"),
    ("zmu-scheme v1 mu=3 rows=1 cols=2\n1\n", 2, "expected 2 cells"),
    ("zmu-scheme v1 mu=3 rows=1 cols=1\n5\n", 2, "out of range"),
    ("zmu-scheme v2 mu=3 rows=1 cols=1\n1\n", 1, "expected header"),
    ("zmu-scheme v1 mu=3 cols=1\n1\n", 1, "rows="),
    ("zmu-scheme v1 mu=3 rows=1 cols=1\nraw:e\n", 2, "not defined"),
    ("zmu-scheme v1 mu=3 rows=1 cols=1\n1\nextra\n", 3, "raw <name>"),
])
def test_scheme_errors_carry_line(text, line, fragment):
    with pytest.raises(FormatError) as err:
        parse_scheme(text)
    assert err.value.line == line
    assert fragment in str(err.value)


def test_missing_rows():
    with pytest.raises(FormatError, match="expected 2 scheme rows"):
        parse_scheme("zmu-scheme v1 mu=3 rows=2 cols=1\n1\n")


def test_matrix_format():
    B = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    assert format_matrix(B) == "2 3\n101\n011\n"
    assert np.array_equal(parse_matrix("2 3\n1 0 1\n0 1 1\n"), B)


@pytest.mark.parametrize("text, line", [
    ("2 2\n10\n0x\n", 3),
    ("2 2\n101\n01\n", 2),
    ("2 2\n10\n", 1),
    ("two 2\n", 1),
])
def test_matrix_errors(text, line):
    with pytest.raises(FormatError) as err:
        parse_matrix(text)
    assert err.value.line == line


def test_voltage_round_trip():
    G = VoltageGraph(5, 2, ((0, 0, 1), (0, 1, 0), (1, 1, 2)))
    text = format_voltage_graph(G)
    assert parse_voltage_graph(text) == G
    assert sniff(text) == "voltage"


def test_voltage_errors():
    with pytest.raises(FormatError) as err:
        parse_voltage_graph("voltage-graph v1 mu=5 n=2\n0 1\n")
    assert err.value.line == 2
    with pytest.raises(FormatError):
        parse_voltage_graph("voltage-graph v1 mu=5 n=2\n0 7 1\n")


def test_sniff():
    assert sniff("# c\nzmu-scheme v1 mu=2 rows=1 cols=1\n-\n") == "scheme"
    assert parse_any("1 1\n1\n")[0] == "matrix"
    with pytest.raises(FormatError):
        sniff("# nothing\n")


@THOROUGH
@given(pure_schemes())
def test_scheme_round_trip_property(S):
    assert parse_scheme(format_scheme(S)) == S


@THOROUGH
@given(binary_matrices())
def test_matrix_round_trip_property(B):
    assert np.array_equal(parse_matrix(format_matrix(B)), B)
