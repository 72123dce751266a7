import pytest
from hypothesis import given, settings, strategies as st

from mhopf.linalg import Elem, serialize
from mhopf.parse import ParseError, parse, parse_element
from mhopf.suites import Config, build


@pytest.fixture(scope="module")
def setups():
    names = ["ore", "ore-dual", "ore-double", "group-functions", "group-algebra", "group-double"]
    return {n: build(Config(instance=n, suites=[])) for n in names}


@pytest.mark.parametrize("name,text,expected", [
    ("ore", "-1*a^-1*b", "-1*a^-1*b"),
    ("ore", "b*a", "-1*a^1*b"),
    ("ore", "3*1 + 1/2*a^2*b", "3*1 + 1/2*a^2*b"),
    ("ore", "2*(a + b) - 2*b", "2*a^1"),
    ("ore-dual", "w[3,0]*w[3,0] + w[-1,1]", "1*w[-1,1] + 1*w[3,0]"),
    ("ore-dual", "w[3,0]*w[4,0]", "0"),
    ("ore-dual", "w[3,0] + w[3,0]", "2*w[3,0]"),
])
def test_examples(setups, name, text, expected):
    assert serialize(parse_element(text, setups[name].inst)) == expected


def test_double_pair_binds_tightest(setups):
    D = setups["ore-double"].inst
    lhs = parse_element("w[0,1]><a^2*b", D)
    rhs = D.multiply(parse_element("w[0,1]><a^2", D), parse_element("1><b", D))
    assert lhs == rhs


def test_double_embeddings(setups):
    D = setups["ore-double"].inst
    x = parse_element("w[2,0]", D)
    y = parse_element("a^3", D)
    assert D.multiply(x, y) == parse_element("w[2,0]><a^3", D)


def test_group_literals(setups):
    K = setups["group-functions"].inst
    kG = setups["group-algebra"].inst
    assert serialize(parse_element("d[123]*d[123]", K)) == serialize(K.elem("123"))
    assert parse_element("u[213]*u[213]", kG) == kG.one()


@pytest.mark.parametrize("name,text,fragment", [
    ("ore-dual", "w[1,2]", "second index must be 0 or 1"),
    ("group-functions", "d[999]", "unknown group element"),
    ("ore", "w[0,0]", "is not an element of"),
    ("ore", "a><b", "'><' needs"),
    ("ore-dual", "2", "bare scalar"),
    ("ore", "   ", "empty expression"),
    ("ore", "a^", "malformed exponent"),
    ("ore", "a $ b", "unexpected character"),
    ("ore", "(a + b", "expected ')'"),
    ("ore", "a b", "unexpected"),
])
def test_errors(setups, name, text, fragment):
    with pytest.raises(ParseError) as info:
        parse_element(text, setups[name].inst)
    assert fragment in str(info.value)


def test_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse("a + $")
    assert info.value.pos == 4


coeff = st.integers(-3, 3).filter(bool)


def _round_trip(inst, keys, data):
    chosen = data.draw(st.lists(st.sampled_from(keys), min_size=1, max_size=4, unique=True))
    x = Elem(inst.basis, {k: data.draw(coeff) for k in chosen})
    assert parse_element(serialize(x), inst) == x


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_round_trip_ore(setups, data):
    inst = setups["ore"].inst
    _round_trip(inst, inst.window(3), data)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_round_trip_dual(setups, data):
    inst = setups["ore-dual"].inst
    _round_trip(inst, inst.window(3), data)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_round_trip_ore_double(setups, data):
    inst = setups["ore-double"].inst
    _round_trip(inst, inst.window(1), data)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_round_trip_group_double(setups, data):
    inst = setups["group-double"].inst
    _round_trip(inst, inst.window(0), data)
