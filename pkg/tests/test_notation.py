"""Round-trips and error reporting for the textual/JSON descriptions."""

import random

import pytest

from ringcodes import (
    Matrix,
    NotationError,
    code_from_json_dict,
    code_to_json_dict,
    describe_code,
    format_code,
    format_matrix,
    format_vector,
    matrix_from_json_dict,
    matrix_to_json_dict,
    parse_code,
    parse_element,
    parse_generators,
    parse_matrix,
    parse_ring,
    parse_vector,
    span,
)


@pytest.mark.parametrize(
    "text",
    [
        "Z/2",
        "Z/20",
        "Z/9[x]/(x^2+x+2)",
        "Z/9[x]/(x^2+x+2)[y]/(y^2+6)",
        "Z/3[x]/(x^2+x+2)[y]/(y^2)",
    ],
)
def test_ring_descriptions_round_trip(text):
    ring = parse_ring(text)
    assert parse_ring(ring.description()) == ring


def test_ring_minus_sign_accepted():
    assert parse_ring("Z/9[x]/(x^2-3)") == parse_ring("Z/9[x]/(x^2+6)")


def test_ring_variable_order_enforced():
    with pytest.raises(NotationError):
        parse_ring("Z/9[y]/(y^2+1)")
    with pytest.raises(NotationError):
        parse_ring("Z/9[x]/(x^2+1)[x]/(x^2+1)")


def test_ring_parse_errors_carry_position():
    with pytest.raises(NotationError) as err:
        parse_ring("Z/")
    assert err.value.line == 1
    assert err.value.column == 3
    with pytest.raises(NotationError):
        parse_ring("Q/5")
    with pytest.raises(NotationError):
        parse_ring("Z/9[x]/(2*x+1)")  # non-monic modulus


@pytest.mark.parametrize("ring_name", ["z13", "z25", "gr92", "f9_tower"])
def test_element_round_trip_random(ring_name, request):
    ring = request.getfixturevalue(ring_name)
    rng = random.Random(2024)
    elems = list(ring.elements())
    for e in rng.sample(elems, min(25, len(elems))):
        assert parse_element(str(e), ring) == e


def test_element_expressions(gr92):
    x = gr92.generator()
    assert parse_element("x^2+x+2", gr92).is_zero()  # the modulus itself
    assert parse_element("2*x+1", gr92) == gr92.from_int(2) * x + gr92.one
    assert parse_element("-1", gr92) == -gr92.one
    with pytest.raises(NotationError):
        parse_element("q+1", gr92)
    with pytest.raises(NotationError):
        parse_element("1+", gr92)


def test_tower_element_uses_both_variables(f9_tower):
    e = parse_element("(x+1)*y+2*x", f9_tower)
    assert parse_element(str(e), f9_tower) == e
    base = f9_tower.base
    assert parse_element("x", f9_tower) == f9_tower.element(base.generator())


def test_matrix_round_trip(z20, gr92):
    m = parse_matrix("[[1,2],[0,0]]", z20)
    assert m == Matrix(z20, [[1, 2], [0, 0]])
    assert parse_matrix(format_matrix(m), z20) == m
    gm = Matrix(gr92, [[gr92.generator(), gr92.one], [gr92.zero, gr92.from_int(5)]])
    assert parse_matrix(format_matrix(gm), gr92) == gm


def test_matrix_parse_errors(z20):
    with pytest.raises(NotationError):
        parse_matrix("[[1,2],[3]]  x", z20)
    with pytest.raises(NotationError):
        parse_matrix("[[1,2", z20)


def test_vector_round_trip(z25):
    v = parse_vector("(1,7)", z25)
    assert [e.raw for e in v] == [1, 7]
    assert format_vector(v) == "(1,7)"
    single = parse_vector("(10)", z25)
    assert len(single) == 1


def test_code_description_round_trip(z20):
    code = parse_code("span Z/20 len 1 { (10) }")
    assert code.ring == z20
    assert sorted(w[0].raw for w in code.codewords()) == [0, 10]
    assert format_code(code) == "span Z/20 len 1 { (10) }"
    assert parse_code(format_code(code)) == code
    empty = parse_code("span Z/20 len 3 { }")
    assert empty.cardinality == 1
    assert parse_code(format_code(empty)) == empty


def test_generator_form(z20):
    code = parse_generators("{ (10), (4) }", z20)
    assert code.length == 1
    assert code.cardinality == 10
    with pytest.raises(NotationError):
        parse_generators("{ }", z20)  # needs an explicit length
    assert parse_generators("{ }", z20, length=2).cardinality == 1


def test_describe_code_small_and_large(z20):
    small = span(z20, 1, [[10]])
    assert describe_code(small) == "{ (0), (10) }"
    big = span(z20, 2, [[1, 0], [0, 1]])
    text = describe_code(big)
    assert "400 codewords" in text


def test_code_json_round_trip(z25):
    code = span(z25, 2, [[1, 7]])
    data = code_to_json_dict(code)
    assert data == {"ring": "Z/25", "length": 2, "generators": [["1", "7"]]}
    assert code_from_json_dict(data) == code


def test_matrix_json_round_trip(gr92):
    m = Matrix(gr92, [[gr92.generator(), gr92.one]])
    data = matrix_to_json_dict(m)
    assert matrix_from_json_dict(data) == m
