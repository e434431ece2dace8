import pytest

from hyptree.errors import StructureError
from hyptree.trees import (
    Attribute,
    Confirm,
    Counterexample,
    Hypothesis,
    Node,
    QueryModel,
    Terminal,
    answer_literals,
    attribute_node,
    check_structure,
    complete_paths,
    depth,
    hypothesis_node,
    is_legal,
    path_word,
    size,
    to_dot,
    trace,
    verify_solves,
)


def cube_attribute_tree():
    left = attribute_node(1, Terminal((0, 0)), Terminal((0, 1)))
    right = attribute_node(1, Terminal((1, 0)), Terminal((1, 1)))
    return attribute_node(0, left, right)


def test_attribute_tree_solves_cube(cube2):
    tree = cube_attribute_tree()
    assert depth(tree) == 2
    assert size(tree) == 7
    z = cube2.problem()
    assert verify_solves(cube2, z, tree, QueryModel.M1)
    assert not verify_solves(cube2, z, tree, QueryModel.M2)
    assert not verify_solves(cube2, z, tree, QueryModel.M4)


def test_wrong_label_fails(cube2):
    tree = attribute_node(0, Terminal((0, 0)), Terminal((1, 0)))
    assert not verify_solves(cube2, cube2.problem(), tree, QueryModel.M1)


def test_hypothesis_answers_and_literals():
    h = Hypothesis((0, 1))
    assert answer_literals(h, Confirm()) == ((0, 0), (1, 1))
    assert answer_literals(h, Counterexample(1)) == ((1, 0),)
    with pytest.raises(StructureError):
        answer_literals(Attribute(0), Confirm())


def test_proper_legality():
    proper = {(0, 1)}
    assert is_legal(Hypothesis((0, 1)), QueryModel.M4, proper)
    assert not is_legal(Hypothesis((1, 1)), QueryModel.M4, proper)
    assert is_legal(Hypothesis((1, 1)), QueryModel.M2, proper)
    assert not is_legal(Attribute(0), QueryModel.M4, proper)
    assert is_legal(Attribute(0), QueryModel.M5, proper)


def test_structure_checks():
    with pytest.raises(StructureError):
        check_structure(Node(Attribute(0), (Terminal((0,)),)), 1)
    with pytest.raises(StructureError):
        check_structure(Terminal((0, 1)), 1)
    with pytest.raises(StructureError):
        check_structure(hypothesis_node((0,), Terminal((0,)), []), 1)


def test_paths_and_trace(cube2):
    tree = hypothesis_node(
        (0, 0),
        Terminal((0, 0)),
        [
            attribute_node(1, Terminal((1, 0)), Terminal((1, 1))),
            attribute_node(0, Terminal((0, 1)), Terminal((1, 1))),
        ],
    )
    z = cube2.problem()
    assert verify_solves(cube2, z, tree, QueryModel.M3)
    words = [path_word(steps) for steps, _ in complete_paths(tree)]
    assert ((0, 0), (1, 0)) in words
    assert ((0, 1), (1, 1)) in words
    for j in range(cube2.size):
        assert trace(cube2, z, tree, j) == {z.value(j)}


def test_non_progressing_query_is_structurally_legal(cube2):
    # asking f1 twice wastes a level but is still a valid solving tree
    inner = cube_attribute_tree()
    tree = attribute_node(0, inner, inner)
    assert verify_solves(cube2, cube2.problem(), tree, QueryModel.M1)
    assert depth(tree) == 3


def test_dot_format():
    tree = hypothesis_node((0, 1), Terminal((0, 1)), [Terminal((1, 1)), Terminal((0, 0))])
    dot = to_dot(tree)
    assert dot.splitlines()[0] == "digraph tree {"
    assert '  n0 [label="H=01", shape=ellipse];' in dot
    assert '  n0 -> n2 [label="f1!=0"];' in dot
    assert '  n0 -> n3 [label="f2!=1"];' in dot
    assert dot.endswith("}\n")


def test_model_parse():
    assert QueryModel.parse("M3") is QueryModel.M3
    assert str(QueryModel.M5) == "m5"
    with pytest.raises(StructureError):
        QueryModel.parse("m9")
