import pytest

from monres.fields import field_from_name
from monres.monomials import MonomialIdeal
from monres.constructions import taylor
from monres.files import (
    parse_ideal_file, ParseError, save_complex, load_complex,
    complex_to_json,
)

GOOD = """\
vars: 3            # three variables
I: x1*x2, x2^2     # a comment after the generators
J: x2*x3
split S = I + J
"""


def test_parse_good_file():
    idf = parse_ideal_file(GOOD)
    assert idf.n == 3
    assert idf.ideals["I"].gens == ((0, 2, 0), (1, 1, 0))
    assert idf.ideals["J"].gens == ((0, 1, 1),)
    assert idf.splittings["S"] == ["I", "J"]
    assert not idf.warnings


def test_auto_minimalize_warning():
    idf = parse_ideal_file("vars: 2\nI: x1, x1*x2\n")
    assert idf.ideals["I"].gens == ((1, 0),)
    assert idf.warnings == [
        "line 2: ideal I auto-minimalized (1 generators kept of 2)"]


def test_repeated_factor_accumulates():
    idf = parse_ideal_file("vars: 2\nI: x1*x1^2\n")
    assert idf.ideals["I"].gens == ((3, 0),)


@pytest.mark.parametrize("text,fragment", [
    ("I: x1\n", "'vars: n' must come first"),
    ("vars: 2\nvars: 3\n", "duplicate vars"),
    ("vars: 0\n", "positive"),
    ("vars: 2\nI: x3\n", "outside vars"),
    ("vars: 2\nI: y1\n", "bad monomial factor"),
    ("vars: 2\nI: x1,,x2\n", "empty monomial"),
    ("vars: 2\nI: x1\nI: x2\n", "duplicate ideal name"),
    ("vars: 2\nsplit S = I + J\n", "unknown ideal"),
    ("vars: 2\nI: x1^9999999\n", "exponent overflow"),
    ("", "missing 'vars: n'"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_ideal_file(text)
    assert fragment in str(exc.value)


def test_parse_error_location():
    with pytest.raises(ParseError) as exc:
        parse_ideal_file("vars: 2\nI: x1*y\n")
    assert exc.value.line == 2
    assert str(exc.value).startswith("line 2, col ")


def test_save_load_round_trip(tmp_path):
    C = taylor(MonomialIdeal.make(3, [(1, 1, 0), (0, 2, 1)]))
    path = tmp_path / "c.json"
    save_complex(C, str(path))
    D = load_complex(str(path))
    assert complex_to_json(D) == complex_to_json(C)
    # a second save is byte identical
    path2 = tmp_path / "c2.json"
    save_complex(D, str(path2))
    assert path.read_bytes() == path2.read_bytes()


def test_json_field_is_preserved(tmp_path):
    from monres.constructions import taylor_over
    gf5 = field_from_name("gf:5")
    C = taylor_over(MonomialIdeal.make(2, [(1, 1)]), gf5)
    path = tmp_path / "c.json"
    save_complex(C, str(path))
    D = load_complex(str(path))
    assert D.field.name == "gf:5"
