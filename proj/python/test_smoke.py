import pytest

import _opetope as op

ARROW = "{ * <- point }"
CLASSIC3 = """
let i2 = { [] <- arrow ; [*] <- arrow }
{ [] <- i2 ; [[*]] <- i2 }
"""


def test_parse_canonical():
    assert op.parse("point") == "point"
    assert op.parse(ARROW) == "{ * <- point }"
    assert op.parse(CLASSIC3) == op.parse(op.parse(CLASSIC3))


def test_parse_error():
    with pytest.raises(op.ParseError):
        op.parse("{ [] <- ")


def test_is_opetope():
    ok, why = op.is_opetope(CLASSIC3)
    assert ok and why == ""
    ok, why = op.is_opetope("{ [] <- arrow ; [*****] <- arrow }")
    assert not ok and why


def test_count():
    assert op.count("point") == 1
    assert op.count(ARROW) == 3
    assert op.count(CLASSIC3) == 13
    assert op.count(CLASSIC3, oracle=True) == 13


def test_target():
    assert op.target(ARROW) == "point"


def test_named_round_trip():
    named = op.to_named(CLASSIC3)
    assert named["term"]
    assert named["type"].count("~>") == 3  # a 3-cell's type chain has 3 entries


def test_run_script_and_convert():
    script = "#dialect opt!\nlet f = shift(point(a), f)\nshift(f, alpha)\n"
    result = op.run_script(script)
    assert result["dialect"] == "opt!"
    assert op.to_unnamed(script) == op.parse("{ [] <- arrow }")


def test_materialize():
    script = (
        "#dialect optset!\n"
        "let f = shift(point(a), f)\n"
        "glue(repr(f), a, tf)\n"
    )
    complex_ = op.materialize(script)
    assert complex_["violations"] == []
    assert len(complex_["cells"]) == 2  # an endo-arrow


def test_random_opetope_is_opetope():
    for dim in range(5):
        text = op.random_opetope(dim, 5, seed=dim)
        ok, _ = op.is_opetope(text)
        assert ok
