from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given

from lauprod import I, LinearMap, Scalar
from lauprod.corpus import FAMILIES, CatalogSpec, catalog_algebra, catalog_characters
from lauprod.errors import FormatError, ParseError
from lauprod.formats import (
    algebra_from_json,
    algebra_to_json,
    map_from_json,
    map_to_json,
    parse_algebra_file,
    parse_map_file,
    parse_scalar,
    write_algebra_file,
    write_map_file,
)

from conftest import scalars


@pytest.mark.parametrize(
    "text, value",
    [
        ("3/2", Scalar(Fraction(3, 2))),
        ("-1+2i", Scalar(-1, 2)),
        ("i", I),
        ("-i", -I),
        ("0", Scalar()),
        ("4/6", Scalar(Fraction(2, 3))),
        ("-3/4i", Scalar(0, Fraction(-3, 4))),
        ("1/2+5/3i", Scalar(Fraction(1, 2), Fraction(5, 3))),
        ("1-i", Scalar(1, -1)),
        ("2+i", Scalar(2, 1)),
        ("7-2/3i", Scalar(7, Fraction(-2, 3))),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize(
    "text, position, reason",
    [
        ("1/0", 2, "zero denominator"),
        ("", 0, "empty scalar"),
        ("1 ", 1, "unexpected character"),
        ("1+2", 3, "unexpected end of input"),
        ("1.5", 1, "unexpected character"),
        ("2*i", 1, "unexpected character"),
        ("1+", 2, "unexpected end of input"),
        ("--1", 1, "expected digit"),
        ("3/", 2, "unexpected end of input"),
        ("1+2i3", 4, "unexpected character"),
        ("ii", 1, "unexpected character"),
    ],
)
def test_parse_scalar_errors(text, position, reason):
    with pytest.raises(ParseError) as info:
        parse_scalar(text)
    assert info.value.position == position
    assert reason in str(info.value)


def test_zero_denominator_message():
    with pytest.raises(ParseError, match="zero denominator at offset 2"):
        parse_scalar("1/0")


@given(scalars)
def test_scalar_text_round_trip(s):
    assert parse_scalar(str(s)) == s


SPECS = [CatalogSpec(f, p) for f in FAMILIES for p in (1, 2, 3)]


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_catalog_round_trip_is_byte_identical(spec):
    A = catalog_algebra(spec)
    text = algebra_to_json(A)
    B = algebra_from_json(text)
    assert B == A
    assert algebra_to_json(B) == text


def test_file_round_trip(tmp_path):
    A = catalog_algebra("matrix:2")
    path = tmp_path / "m2.json"
    write_algebra_file(A, path)
    assert parse_algebra_file(path) == A


def _shipped(name):
    return resources.files("lauprod") / "data" / name


def test_shipped_pointwise_file():
    A = parse_algebra_file(_shipped("pointwise_2.json"))
    assert A.same_tensor(catalog_algebra("pointwise:2"))


def test_shipped_nonassociative_file():
    with pytest.raises(FormatError) as info:
        parse_algebra_file(_shipped("nonassoc_2.json"))
    assert info.value.code == "E_NONASSOC"
    assert info.value.witness == (0, 0, 0)
    A = parse_algebra_file(_shipped("nonassoc_2.json"), unchecked=True)
    assert A.dim == 2


GOOD = '{"name":"c","dim":1,"basis":["e"],"table":[[["1"]]]}'


@pytest.mark.parametrize(
    "text, code",
    [
        ("{not json", "E_JSON"),
        ("[1]", "E_FIELD"),
        ('{"name":"c","dim":1,"basis":["e"]}', "E_FIELD"),
        ('{"name":"c","dim":1,"basis":["e"],"table":[[["1"]]],"x":0}', "E_FIELD"),
        ('{"name":"c","dim":0,"basis":[],"table":[]}', "E_DIM"),
        ('{"name":"c","dim":2,"basis":["e"],"table":[[["1"]]]}', "E_DIM"),
        ('{"name":"c","dim":1,"basis":["e"],"table":[[["1","0"]]]}', "E_DIM"),
        ('{"name":"c","dim":1,"basis":["e"],"table":[[["1/0"]]]}', "E_SCALAR"),
        ('{"name":"c","dim":1,"basis":["e"],"table":[[[1]]]}', "E_SCALAR"),
    ],
)
def test_algebra_file_error_codes(text, code):
    algebra_from_json(GOOD)
    with pytest.raises(FormatError) as info:
        algebra_from_json(text)
    assert info.value.code == code


def test_map_round_trip(tmp_path):
    chi = catalog_characters("cyclic:4")[2]
    text = map_to_json(chi)
    again = map_from_json(text, chi.domain, chi.codomain)
    assert again == chi
    assert map_to_json(again) == text
    path = tmp_path / "chi.json"
    write_map_file(chi, path)
    assert parse_map_file(path, chi.domain, chi.codomain) == chi


def test_map_name_mismatch():
    A, B = catalog_algebra("pointwise:2"), catalog_algebra("poly:2")
    text = map_to_json(LinearMap.identity(A))
    with pytest.raises(FormatError) as info:
        map_from_json(text, B, B)
    assert info.value.code == "E_MISMATCH"


def test_map_shape_error():
    A = catalog_algebra("pointwise:2")
    text = '{"domain":"pointwise:2","codomain":"pointwise:2","matrix":[["1","0"]]}'
    with pytest.raises(FormatError) as info:
        map_from_json(text, A, A)
    assert info.value.code == "E_DIM"
