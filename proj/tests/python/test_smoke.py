import json

import pytest

import glp


def test_decide():
    assert glp.decide("<0><1>T -> <0>T")
    assert not glp.decide("<0>T -> <0><0>T")
    assert glp.decide("<10>T -> <-5>T", order="int")


def test_worms():
    assert glp.normalize([1, 0, 0]) == [1]
    assert glp.normalize([2, 0, 1]) == [2]
    assert glp.is_wnf([0, 0, 1])
    assert glp.worm_compare(1, [1], [2]) == "Lt"
    assert glp.worm_conj([1], [0]) == [1, 0]
    assert glp.worm_entails([0, 1], [0])
    assert not glp.worm_entails([0, 1], [1])
    assert glp.nf("<1><0><0>T") == "<1>T"


def test_normal_forms():
    assert glp.bcw("<0>~<0>T") == "<0>T"
    assert glp.wnf("<1>T -> <0>T") == ["<1>T -> <0>T"]
    assert glp.zero_diamond_worm("<1>T") == "<0><1>T"
    assert glp.reduction_target("T") == "T -> T"


def test_countermodels():
    model, world = glp.countermodel("<0>T -> <0><0>T")
    assert json.loads(model) == {"worlds": ["x", "y"], "relations": {"0": [["x", "y"]]}}
    assert world == "x"
    assert glp.countermodel("<0><1>T -> <0>T", max_worlds=3) is None
    assert glp.check_model(model, "<0>T") == "y"
    assert glp.check_model(model, "[0][0]F") is None


def test_errors():
    with pytest.raises(glp.GlpError, match="NotClosed"):
        glp.decide("<0>p")
    with pytest.raises(glp.GlpError, match="ParseError"):
        glp.decide("<0>T ->")
    with pytest.raises(ValueError):
        glp.worm_compare(1, [1], [0, 1])
