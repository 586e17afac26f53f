from itertools import product

import pytest

from src.expr import parse, pretty_print
from src.models.expr import Const, Gamma
from src.models.trit import PermOp
from src.models.truth_table import TruthTable
from src.synth import RECONSTRUCTIONS, SelectorTerm, reconstruction, selector_terms, selector_value, synthesize
from src.truthtab import realizes, table_of
from src.utils.exceptions import ValidationError


def test_inverter_regular_formula():
    table = TruthTable(1, (2, 1, 0), ('x',))
    assert pretty_print(synthesize(table)) == "x*1+2@~x*1+1@~~x*1+0"


def test_dyadic_term_shape():
    term = SelectorTerm((1, 2), 0)
    assert pretty_print(term.expr(('x', 'y'))) == "(~x+~~y)*1+0"


@pytest.mark.parametrize("rotations, payload, inputs, expected", [
    ((1, 2), 2, (1, 2), 2),
    ((1, 2), 2, (1, 0), 1),
    ((0,), 0, (0,), 0),
    ((0,), 0, (2,), 1),
    ((2, 0, 1), 2, (2, 0, 1), 2),
])
def test_selector_value(rotations, payload, inputs, expected):
    assert selector_value(rotations, payload, inputs) == expected


def test_each_row_activates_exactly_its_own_term():
    table = TruthTable(2, (2, 2, 2, 2, 1, 1, 2, 1, 0), ('x', 'y'))
    terms = selector_terms(table)
    for inputs, value in table.rows():
        values = [term.value(inputs) for term in terms]
        active = [k for k, term in enumerate(terms) if term.rotations == inputs]
        assert len(active) == 1
        assert values[active[0]] == value
        assert all(v == 1 for k, v in enumerate(values) if k != active[0])


def test_selector_term_validation():
    with pytest.raises(ValidationError):
        SelectorTerm((3,), 0)
    with pytest.raises(ValidationError):
        SelectorTerm((0,), 5)
    with pytest.raises(ValidationError):
        SelectorTerm((0, 1), 0).expr(('x',))


@pytest.mark.parametrize("outputs", list(product(range(3), repeat=3)))
def test_every_monadic_table(outputs):
    table = TruthTable(1, outputs, ('x',))
    e = synthesize(table)
    assert realizes(e, table)
    assert isinstance(e, Gamma)


def test_random_dyadic_tables(random_table):
    for _ in range(200):
        table = random_table(2)
        assert realizes(synthesize(table), table)


def test_random_triadic_tables(random_table):
    for _ in range(50):
        table = random_table(3)
        assert realizes(synthesize(table), table)


def test_nullary_table():
    assert synthesize(TruthTable(0, (2,), ())) == Const(2)


def test_term_count_is_row_count():
    table = TruthTable(2, (0,) * 9, ('x', 'y'))
    assert len(selector_terms(table)) == 9


@pytest.mark.parametrize("p", list(PermOp))
def test_permutation_reconstructions(p):
    e = reconstruction(p)
    assert table_of(e, ('x',)).outputs == p.images
    assert parse(RECONSTRUCTIONS[p]) == e


def test_reconstruction_on_other_variable():
    e = reconstruction(PermOp.REVERSE, 'y')
    assert pretty_print(e) == "y*1@~y*1+2"
