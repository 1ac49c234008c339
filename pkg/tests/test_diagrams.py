# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

import random

import pytest

from xtorelli.toolkit.diagrams import (TreeDiagram, DiagramElement, a_deg, internal_degree,
                                       eta, eta_inverse, xi_of_eta_check, random_tree,
                                       random_diagram, diagrammatic_tau_alt,
                                       diagrammatic_tau_classical, diagrammatic_tau_levine,
                                       lyndon_word, from_lyndon, lyndon_form)
from xtorelli.toolkit.errors import MalformedInputError, NotInImageError, GenusMismatchError
from xtorelli.toolkit.johnson import DerivationElement, tau_alt, tau_classical
from xtorelli.toolkit.lie import letters
from xtorelli.toolkit.tensor import ba_alphabet
from xtorelli.toolkit.utils import rational
from xtorelli.toolkit.words import twist_library


T = TreeDiagram


@pytest.mark.parametrize('t, expected', [
    (T.strut(1, 'a1', 'a1'), 1),
    (T.strut(1, 'a1', 'b1'), 0),
    (T(2, 'a1', ('b1', 'b2')), 1),
    (T(2, 'b1', ('b2', 'b1')), 0),
    (T(2, 'a1', (('a2', 'b1'), 'b2')), 3),
])
def test_a_deg(t, expected):
    assert a_deg(t) == expected


def test_internal_degree():
    assert internal_degree(T.strut(1, 'a1', 'b1')) == 0
    assert internal_degree(T(2, 'a1', (('a2', 'b1'), 'b2'))) == 2


def test_eta_of_struts():
    x = letters(ba_alphabet(2))
    assert eta(T.strut(2, 'a1', 'a2')) == DerivationElement(2, 1, {'a1': x['a2'], 'a2': x['a1']})
    assert eta(T.strut(2, 'a1', 'a1')) == DerivationElement(2, 1, {'a1': x['a1'] * 2})
    assert eta(T.strut(2, 'a1', 'b2')).level == 0


def test_eta_of_y_tree():
    t = T(2, 'a1', ('b1', 'b2'))
    assert str(eta(t)) == '(1)·a1⊗[b1,b2] + (1)·b1⊗[b2,a1] - (1)·b2⊗[b1,a1]'
    assert eta(t) == eta(T(2, 'b1', ('b2', 'a1')))


def test_antisymmetry():
    assert eta(T(2, 'a1', ('b1', 'b2'))) == -eta(T(2, 'a1', ('b2', 'b1')))
    assert DiagramElement.single(T(2, 'a1', ('b1', 'b2'))) \
        == DiagramElement.single(T(2, 'a1', ('b2', 'b1')), -1)


def test_ihx():
    t1 = T(2, 'a1', (('b1', 'b2'), 'a2'))
    t2 = T(2, 'a1', ('b1', ('b2', 'a2')))
    t3 = T(2, 'a1', ('b2', ('b1', 'a2')))
    assert eta(t1) == eta(t2) - eta(t3)


@pytest.mark.parametrize('kind', ['alt', 'classical', 'levine'])
def test_eta_lands_in_kernel(kind):
    rng = random.Random(2)
    for _ in range(10):
        t = random_tree(2, rng.randint(1, 3), rng, kind)
        assert xi_of_eta_check(t, kind)


def test_eta_inverse_examples():
    x = letters(ba_alphabet(1))
    assert str(eta_inverse(DerivationElement(1, 1, {'a1': -x['a1']}))) \
        == '-(1/2)·strut(a1,a1)'
    d = tau_alt(twist_library(2)['t_a12'], 1)
    assert str(eta_inverse(d)) \
        == '-(1/2)·strut(a1,a1) - (1)·strut(a1,a2) - (1/2)·strut(a2,a2)'


def test_eta_inverse_rejects_non_kernel():
    x = letters(ba_alphabet(2))
    with pytest.raises(NotInImageError):
        eta_inverse(DerivationElement(2, 1, {'a1': x['a2']}))


@pytest.mark.parametrize('kind, genus, level', [
    ('alt', 1, 0), ('alt', 2, 1), ('alt', 2, 2), ('alt', 3, 1),
    ('classical', 2, 1), ('levine', 2, 1), ('levine', 2, 2),
])
def test_eta_is_invertible(kind, genus, level):
    rng = random.Random(genus * 10 + level)
    for _ in range(5):
        e = random_diagram(genus, level, rng, kind)
        d = eta(e)
        back = eta_inverse(d)
        assert eta(back) == d
        assert back == e
        assert all(lyndon_word(t, kind) for t in back.terms)


@pytest.mark.parametrize('genus', [1, 2])
def test_diagrammatic_tau_of_handle_twist(genus):
    t = T.strut(genus, 'a1', 'a1')
    value = diagrammatic_tau_alt(twist_library(genus)['t_a1'], 1)
    assert value.terms == {t: rational('-1/2')}
    assert value == DiagramElement.single(t, '-1/2')


def test_diagrammatic_tau_variants():
    lib = twist_library(2)
    assert str(diagrammatic_tau_alt(lib['t_d'], 1)) == '0'
    assert eta(diagrammatic_tau_classical(lib['t_d'], 2), 'classical') \
        == tau_classical(lib['t_d'], 2)
    assert diagrammatic_tau_levine(lib['t_a12'], 1).terms == {}


def test_kind_restrictions():
    with pytest.raises(MalformedInputError):
        DiagramElement.single(T.strut(2, 'b1', 'b2'))
    with pytest.raises(MalformedInputError):
        DiagramElement.single(T(2, 'b1', ('a1', 'b2')), kind='levine')
    with pytest.raises(MalformedInputError):
        T(1, 'a2', 'b1')
    with pytest.raises(GenusMismatchError):
        DiagramElement(1, {T.strut(2, 'a1', 'a2'): 1})


def test_arithmetic_and_rendering():
    s = DiagramElement.single(T.strut(2, 'a1', 'a2'))
    y = DiagramElement.single(T(2, 'a1', ('b1', 'b2')), '1/2')
    assert str(s * 2 - y) == '(2)·strut(a1,a2) - (1/2)·tree(root=a1; [b1,b2])'
    assert (s - s).terms == {}


@pytest.mark.parametrize('text', ['strut(a1,b2)', 'tree(root=a2; [[b1,a1],b2])'])
def test_parse_render(text):
    assert str(T.parse(text, 2)) == text


def test_rooted_lyndon_form():
    t = T(2, 'a1', ('b1', ('b1', 'a2')))
    assert lyndon_word(t) == 'b1.b1.a2'
    assert from_lyndon(2, 'a1', 'b1.b1.a2') == t
    assert lyndon_word(T.strut(2, 'a1', 'b2')) == 'b2'
    assert lyndon_word(T(2, 'b1', ('a1', 'a2')), 'classical') == 'a1.a2'
    assert lyndon_word(T(2, 'b1', ('a2', 'a1'))) is None
    flipped = DiagramElement.single(T(2, 'b1', ('a2', 'a1')))
    canonical = lyndon_form(flipped)
    assert canonical == flipped
    assert all(lyndon_word(s) for s in canonical.terms)
    single = DiagramElement.single(t)
    assert lyndon_form(single) is single
    with pytest.raises(MalformedInputError):
        from_lyndon(2, 'a1', 'a2.b1')
