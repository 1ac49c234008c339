# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

import pytest

from xtorelli.toolkit.errors import MalformedInputError, McWordParseError
from xtorelli.toolkit.grammar import parse_free_word, parse_mc_word, parse_diagram
from xtorelli.toolkit.words import twist_library, identity_endo, pair_twist_name


NAMES = list(twist_library(2))


def test_mc_word_factors():
    assert parse_mc_word('t_a1', 2, NAMES).factors == [('t_a1', 1)]
    assert parse_mc_word('t_a12 * t_d^-2', 2, NAMES).factors == [('t_a12', 1), ('t_d', -2)]
    assert parse_mc_word('  t_a1^-1*t_d ', 2, NAMES).factors == [('t_a1', -1), ('t_d', 1)]
    assert str(parse_mc_word('t_a12 * t_d^-2', 2, NAMES)) == 't_a12 * t_d^-2'


@pytest.mark.parametrize('text', ['t_a21', 't_a11'])
def test_mc_word_index_order(text):
    with pytest.raises(McWordParseError, match='k<l'):
        parse_mc_word(text, 2, NAMES)


def test_pair_twist_names_at_large_genus():
    names = [pair_twist_name(k, l, 12) for k in range(1, 13) for l in range(k + 1, 13)]
    assert len(set(names)) == len(names) == 66
    assert 't_a1_12' in names and 't_a11_2' not in names
    assert parse_mc_word('t_a1_12 * t_a11_12^-1', 12, names).factors == [('t_a1_12', 1), ('t_a11_12', -1)]
    with pytest.raises(McWordParseError, match='k<l'):
        parse_mc_word('t_a12_1', 12, names)
    with pytest.raises(McWordParseError, match='unknown name'):
        parse_mc_word('t_a112', 12, names)


def test_mc_word_errors_carry_position():
    with pytest.raises(McWordParseError) as e:
        parse_mc_word('t_a1 * t_x', 2, NAMES)
    assert e.value.position == 7
    with pytest.raises(McWordParseError, match='exponent'):
        parse_mc_word('t_d^0', 2, NAMES)
    with pytest.raises(McWordParseError):
        parse_mc_word('t_a1 *', 2, NAMES)
    with pytest.raises(McWordParseError):
        parse_mc_word('t_e', 1, list(twist_library(1)))


def test_mc_word_evaluates_left_to_right():
    lib = twist_library(2)
    assert parse_mc_word('t_a1 * t_a1^-1', 2, lib).evaluate(lib) == identity_endo(2)
    f = parse_mc_word('t_a1^2', 2, lib).evaluate(lib)
    assert str(f.image('b1')) == 'a1^-2 b1'


def test_free_word_grammar():
    runs = parse_free_word('b1^-1 a2^3')
    assert [(str(g), e) for g, e in runs] == [('b1', -1), ('a2', 3)]
    with pytest.raises(MalformedInputError):
        parse_free_word('a1 ^')
    with pytest.raises(MalformedInputError):
        parse_free_word('a1^0')


def test_diagram_grammar():
    assert parse_diagram('strut(a1, b2)') == ('a1', 'b2')
    assert parse_diagram('tree(root=b1; [[a1,b2],a2])') == ('b1', (('a1', 'b2'), 'a2'))
    with pytest.raises(MalformedInputError):
        parse_diagram('tree(root=a1; [b1])')
