# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

import random

import pytest

from xtorelli.toolkit.errors import MalformedInputError, GenusMismatchError
from xtorelli.toolkit.words import (Generator, FreeWord, SurfaceEndo, multiply, invert,
                                    commutator, boundary_word, abelianize, apply_endo,
                                    compose_endos, endo_power, identity_endo,
                                    validate_mapping_class, boundary_defect, twist_library,
                                    library_names, random_product)


def test_parse_and_render():
    w = FreeWord.parse('a1 b2^-1 a1^2', 2)
    assert str(w) == 'a1 b2^-1 a1^2'
    assert len(w) == 4
    assert str(FreeWord.parse('a1 a1^-1', 2)) == '1'
    assert FreeWord.parse('', 2).is_identity()
    assert FreeWord.parse('1', 2) == FreeWord.identity(2)


def test_parse_rejects_out_of_range_generator():
    with pytest.raises(MalformedInputError):
        FreeWord.parse('a3', 2)
    with pytest.raises(MalformedInputError):
        FreeWord.parse('c1', 2)


def test_group_operations():
    u = FreeWord.parse('a1 b2^-1', 2)
    v = FreeWord.parse('b2 a2', 2)
    assert str(invert(u)) == 'b2 a1^-1'
    assert str(multiply(u, v)) == 'a1 a2'
    assert (u * invert(u)).is_identity()
    assert str(u ** 2) == 'a1 b2^-1 a1 b2^-1'
    assert u ** -1 == invert(u)
    a, b = FreeWord.parse('a1', 1), FreeWord.parse('b1', 1)
    assert str(commutator(a, b)) == 'a1 b1 a1^-1 b1^-1'


def test_genus_mismatch():
    with pytest.raises(GenusMismatchError):
        multiply(FreeWord.parse('a1', 1), FreeWord.parse('a1', 2))


def test_boundary_word_and_abelianize():
    assert str(boundary_word(1)) == 'b1^-1 a1 b1 a1^-1'
    assert abelianize(boundary_word(3)) == (0,) * 6
    assert abelianize(FreeWord.parse('a1 b2^-1 a1^2', 2)) == (3, 0, 0, -1)


@pytest.mark.parametrize('genus', [1, 2, 3])
def test_library_entries_fix_boundary(genus):
    for name, f in twist_library(genus).items():
        assert f.validated, name
        assert boundary_defect(f).is_identity(), name


@pytest.mark.parametrize('genus', [1, 2, 3])
def test_library_inverses(genus):
    ident = identity_endo(genus)
    for name, f in twist_library(genus).items():
        assert compose_endos(f, f.inverse) == ident, name
        assert compose_endos(f.inverse, f) == ident, name


def test_library_images():
    lib = twist_library(2)
    assert str(lib['t_a1'].image('b1')) == 'a1^-1 b1'
    assert str(lib['t_b1'].image('a1')) == 'a1 b1'
    assert str(lib['t_d'].image('a1')) == 'b1^-1 a1 b1 a1 b1^-1 a1^-1 b1'
    assert lib['t_d'].image('a2') == FreeWord.parse('a2', 2)
    assert 't_e' not in twist_library(1)


def test_library_names():
    assert library_names(2, 'torelli') == ['t_d', 't_e']
    assert library_names(3, 'handlebody') == ['t_a1', 't_a2', 't_a3', 't_a12', 't_a13', 't_a23']
    assert 't_b1' not in library_names(2, 'lagrangian')
    with pytest.raises(MalformedInputError):
        library_names(2, 'nope')


def test_powers():
    lib = twist_library(2)
    f = lib['t_a1']
    assert endo_power(f, 0) == identity_endo(2)
    assert endo_power(f, -1) == lib['t_a1^-1']
    assert str(endo_power(f, 3).image('b1')) == 'a1^-3 b1'


def test_apply_endo_is_multiplicative():
    f = twist_library(2)['t_a12']
    u = FreeWord.parse('a1 b2 a2^-1', 2)
    v = FreeWord.parse('b1^2 a1', 2)
    assert apply_endo(f, u * v) == apply_endo(f, u) * apply_endo(f, v)


def test_non_mapping_class():
    f = SurfaceEndo(1, {Generator('beta', 1): FreeWord.parse('a1', 1)}, 'bad')
    assert not validate_mapping_class(f)
    assert not f.validated
    assert not boundary_defect(f).is_identity()


def test_random_product_is_mapping_class():
    rng = random.Random(7)
    lib = twist_library(2)
    for _ in range(5):
        f = random_product(lib, library_names(2, 'all'), 3, rng, max_image_length=80)
        assert f.validated
        assert f.max_image_length() <= 80
