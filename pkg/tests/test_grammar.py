import numpy as np
import pytest
from hypothesis import given

from helpers import random_tree, trees
from planehomeo import (
    Cell2,
    CellBump,
    Compose,
    Conjugation,
    Identity,
    Inverse,
    ParseError,
    Rotation,
    Scaling,
    Translation,
    parse_expr,
    to_text,
)
from planehomeo.grammar import ExprDomainError, NotExpressible, format_complex, parse_complex
from planehomeo.homeo import DiskConjugate, DiskIdentity, RadialBump, evaluate


def test_examples():
    assert parse_expr("translate(1+2i)") == Translation(1 + 2j)
    h = parse_expr("translate(1) . conj")
    assert h == Compose(Translation(1), Conjugation())
    assert evaluate(h, 2 + 3j) == 3 - 3j
    assert parse_expr("scale(2)^-1 . (id)") == Compose(Inverse(Scaling(2)), Identity())


def test_left_fold_and_whitespace():
    a = parse_expr("id.conj.rotate(1)")
    assert a == Compose(Compose(Identity(), Conjugation()), Rotation(1.0))
    assert parse_expr("  id .\tconj . rotate( 1 ) ") == a
    assert parse_expr("translate( -1.5e-3 - 2i )") == Translation(-1.5e-3 - 2j)


def test_bump_forms():
    b = parse_expr("bump(center=0.1-0.2i,rho=0.25,delta=0.05,eta=0.1)")
    assert b == CellBump(Cell2(Identity(), 0.1 - 0.2j, 0.25, 0.1), 0.05)
    p = parse_expr("planebump(center=0,rho=0.25,delta=0.05,eta=0.1)")
    assert p == DiskConjugate(RadialBump(0, 0.25, 0.05, 0.1))


def test_round_trip_corpus():
    rng = np.random.default_rng(2718)
    for _ in range(200):
        h = random_tree(rng, 4)
        t = to_text(h)
        assert parse_expr(t) == h
        assert to_text(parse_expr(t)) == t


@given(trees(4))
def test_round_trip_property(h):
    assert parse_expr(to_text(h)) == h


def test_nested_inverse_and_right_compose():
    h = Compose(Identity(), Compose(Conjugation(), Inverse(Inverse(Scaling(3)))))
    assert to_text(h) == "id . (conj . (scale(3.0)^-1)^-1)"
    assert parse_expr(to_text(h)) == h


def test_complex_format():
    assert format_complex(1) == "1.0"
    assert format_complex(complex(1, -0.0)) == "1.0-0.0i"
    assert parse_complex(format_complex(complex(1, -0.0))).imag == 0.0
    assert format_complex(0.1 + 0.2j) == "0.1+0.2i"


@pytest.mark.parametrize(
    "text, offset, expected",
    [
        ("", 0, "id"),
        ("translate(1", 11, ")"),
        ("id . ", 5, "("),
        ("foo", 0, "id"),
        ("id id", 3, "end of input"),
        ("rotate(x)", 7, "number"),
        ("translate(1+i)", 12, "unsigned number"),
        ("bump(center=0,rho=0.2,eta=0.1)", 22, "delta"),
    ],
)
def test_parse_errors(text, offset, expected):
    with pytest.raises(ParseError) as exc:
        parse_expr(text)
    assert exc.value.offset == offset
    assert expected in exc.value.expected


def test_offsets_are_bytes():
    with pytest.raises(ParseError) as exc:
        parse_expr("id . é")
    assert exc.value.offset == 5
    with pytest.raises(ParseError) as exc:
        parse_expr("(id)é")
    assert exc.value.offset == 4


@pytest.mark.parametrize(
    "text, offset",
    [
        ("scale(0)", 0),
        ("id . scale(-1)", 5),
        ("bump(center=0.5,rho=0.3,delta=0.1,eta=0.2)", 0),
        ("bump(center=0,rho=0.3,delta=0.2,eta=0.1)", 0),
        ("planebump(center=0,rho=0.3,delta=-0.01,eta=0.1)", 0),
    ],
)
def test_domain_errors(text, offset):
    with pytest.raises(ExprDomainError) as exc:
        parse_expr(text)
    assert exc.value.offset == offset


def test_not_expressible():
    with pytest.raises(NotExpressible):
        to_text(DiskConjugate(DiskIdentity()))
    with pytest.raises(NotExpressible):
        to_text(CellBump(Cell2(Scaling(0.5), 0, 0.25, 0.1), 0.05))
