import numpy as np
import pytest

from hyptree.errors import ParseError, StructureError
from hyptree.table import (
    EquationSystem,
    InformationSystem,
    TupleSet,
    format_table,
    is_consistent,
    parse_bits,
    parse_table,
    read_table,
    restrict,
    solution_set,
    solutions,
    write_table,
)

TEXT = "element,f1,f2,f3\na,0,0,1\nb,0,1,1\nc,1,1,0\nd,0,1,1\n"


def test_parse_and_format_roundtrip():
    sys_ = parse_table(TEXT)
    assert sys_.elements == ("a", "b", "c", "d")
    assert sys_.names == ("f1", "f2", "f3")
    assert format_table(sys_) == TEXT


def test_file_roundtrip_uses_lf(tmp_path):
    path = tmp_path / "t.csv"
    write_table(parse_table(TEXT), path)
    assert b"\r" not in path.read_bytes()
    assert format_table(read_table(path)) == TEXT


@pytest.mark.parametrize(
    "text",
    [
        "",
        "name,f1\na,0\n",
        "element,f1\na,2\n",
        "element,f1,f2\na,0\n",
        "element,f1\n",
        "element,f1,f1\na,0,1\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_table(text)


def test_missing_file_is_parse_error(tmp_path):
    with pytest.raises(ParseError):
        read_table(tmp_path / "missing.csv")


def test_matrix_is_read_only():
    sys_ = parse_table(TEXT)
    with pytest.raises(ValueError):
        sys_.matrix[0, 0] = 1


def test_solution_set_dedupes_rows():
    sys_ = parse_table(TEXT)
    delta = solution_set(sys_, sys_.problem())
    assert len(delta) == 3
    assert (0, 1, 1) in delta
    assert str(delta) == "{001,011,110}"


def test_problem_by_name_and_repeats():
    sys_ = parse_table(TEXT)
    z = sys_.problem(["f3", "f3"])
    assert z.indices == (2, 2)
    assert solution_set(sys_, z).sorted() == [(0, 0), (1, 1)]


def test_duplicate_rows_do_not_change_solution_set():
    sys_ = parse_table(TEXT)
    dup = sys_.with_duplicate(2)
    assert dup.size == 5
    assert solution_set(dup, dup.problem()) == solution_set(sys_, sys_.problem())


def test_restrict_tuple_set():
    delta = TupleSet(2, frozenset({(0, 0), (0, 1), (1, 1)}))
    assert restrict(delta, 0, 0).sorted() == [(0, 0), (0, 1)]
    assert len(restrict(delta, 0, 1).restrict(1, 0)) == 0


def test_tuple_width_checked():
    with pytest.raises(StructureError):
        TupleSet(2, frozenset({(0, 1, 1)}))


def test_equations_and_solutions():
    sys_ = parse_table(TEXT)
    eqs = EquationSystem(((1, 1), (2, 1)))
    assert solutions(sys_, eqs) == ["b", "d"]
    assert eqs.describe(sys_) == "{f2=1, f3=1}"
    assert not is_consistent(sys_, [(0, 1), (2, 1)])
    assert is_consistent(sys_, EquationSystem())


def test_bad_attribute_index():
    sys_ = parse_table(TEXT)
    with pytest.raises(StructureError):
        sys_.problem([5])
    with pytest.raises(StructureError):
        sys_.index_of("nope")


def test_shape_mismatch_rejected():
    with pytest.raises(StructureError):
        InformationSystem(("a",), ("f1", "f2"), np.zeros((1, 1)))


def test_parse_bits():
    assert parse_bits("0110") == (0, 1, 1, 0)
    with pytest.raises(StructureError):
        parse_bits("012")


def test_restrict_system_and_constancy():
    sys_ = parse_table(TEXT)
    sub = sys_.restrict(0b0110)
    assert sub.elements == ("b", "c")
    assert sys_.is_constant(1, 0b1110)
    assert not sys_.is_constant(1)
