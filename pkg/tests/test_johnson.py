# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

import random

import pytest

from sympy import Matrix

from xtorelli.toolkit.errors import (MembershipError, NotLagrangianError, ValidationError,
                                     WeightMismatchError, MalformedInputError)
from xtorelli.toolkit.expansion import perturbed_alt_expansion
from xtorelli.toolkit.johnson import (DerivationElement, ClassicalDerivation, GElement,
                                      tau_alt, tau_classical, tau_levine, tau0_alt,
                                      membership_alt, membership_classical, membership_levine,
                                      filtration_depth, sigma_matrix, is_lagrangian, is_torelli,
                                      is_lagrangian_torelli, xi, xi_classical, iota_star,
                                      tau1_from_homology, g_mul, g_inv, g_identity, g_condition,
                                      p_project, q_project, filtration_inclusions)
from xtorelli.toolkit.lie import letters, bracket
from xtorelli.toolkit.selftest import expected_tau_a
from xtorelli.toolkit.tensor import ba_alphabet, h_alphabet
from xtorelli.toolkit.words import (SurfaceEndo, FreeWord, Generator, twist_library,
                                    library_names, library_words, compose_endos, random_product)


@pytest.mark.parametrize('genus', [1, 2, 3])
def test_tau_of_handle_twists(genus):
    lib = twist_library(genus)
    for i in range(1, genus + 1):
        d = tau_alt(lib[f't_a{i}'], 1)
        assert d == expected_tau_a(genus, i)
        assert str(d) == f'-(1)·a{i}⊗a{i}'
        assert tau_alt(lib[f't_a{i}^-1'], 1) == -d


def test_tau_of_separating_handlebody_twist():
    d = tau_alt(twist_library(2)['t_a12'], 1)
    assert d == expected_tau_a(2, 1, 2)
    assert str(d) == '-(1)·a1⊗a1 - (1)·a1⊗a2 - (1)·a2⊗a1 - (1)·a2⊗a2'
    assert tau_alt(twist_library(3)['t_a13'], 1) == expected_tau_a(3, 1, 3)


@pytest.mark.parametrize('genus, name', [(1, 't_d'), (2, 't_d'), (2, 't_e'), (3, 't_e')])
def test_torelli_twists_lie_deeper(genus, name):
    h = twist_library(genus)[name]
    assert tau_alt(h, 1).is_zero()
    assert str(tau_alt(h, 1)) == '0'
    assert membership_alt(h, 2)
    assert xi(tau_alt(h, 2)).is_zero()


def test_violation_report():
    h = twist_library(2)['t_a1']
    with pytest.raises(MembershipError) as exc:
        tau_alt(h, 2)
    assert exc.value.generator == 'b1-defect'
    assert exc.value.degree == 2
    assert not membership_alt(h, 2)


def test_not_lagrangian():
    h = twist_library(1)['t_b1']
    assert not is_lagrangian(h)
    assert not membership_alt(h, 0)
    assert membership_classical(h, 0)
    with pytest.raises(MembershipError):
        tau_alt(h, 1)
    with pytest.raises(NotLagrangianError):
        tau0_alt(h)
    assert filtration_depth(h, 'alt') is None


def test_invalid_endo_rejected():
    bad = SurfaceEndo(1, {Generator.parse('b1'): FreeWord.parse('a1', 1)})
    with pytest.raises(ValidationError) as exc:
        tau_alt(bad, 1)
    assert exc.value.defect is not None
    with pytest.raises(ValidationError):
        sigma_matrix(bad)


def test_level_must_be_positive():
    with pytest.raises(MalformedInputError):
        tau_alt(twist_library(1)['t_a1'], 0)


def test_sigma_and_subgroups():
    lib = twist_library(2)
    assert sigma_matrix(twist_library(1)['t_a1']) == Matrix([[1, -1], [0, 1]])
    assert is_torelli(lib['t_d']) and is_torelli(lib['t_e'])
    assert is_lagrangian_torelli(lib['t_a12'])
    assert not is_torelli(lib['t_a12'])
    assert sigma_matrix(lib['r1'])[0, 0] == -1
    assert not is_lagrangian_torelli(lib['r1'])


def test_classical_filtration():
    lib = twist_library(2)
    assert membership_classical(lib['t_d'], 1)
    assert membership_classical(lib['t_d'], 2)
    assert not membership_classical(lib['t_a1'], 1)
    with pytest.raises(MembershipError):
        tau_classical(lib['t_a1'], 1)
    assert tau_classical(lib['t_d'], 1).is_zero()
    assert xi_classical(tau_classical(lib['t_d'], 2)).is_zero()


def test_levine_filtration():
    lib = twist_library(2)
    assert membership_levine(lib['t_a1'], 2)
    assert not membership_levine(lib['t_b1'], 0)
    assert tau_levine(lib['t_a12'], 2).is_zero()
    assert iota_star(tau_alt(lib['t_a12'], 1)).is_zero()
    with pytest.raises(MembershipError):
        tau_levine(lib['r1'], 1)


def test_alt_square_commutes():
    lib = twist_library(2)
    for name in ('t_d', 't_e'):
        h = lib[name]
        assert iota_star(tau_alt(h, 2)) == tau_levine(h, 3)


def test_additivity_on_products():
    rng = random.Random(1)
    lib = twist_library(2)
    names = library_names(2, 'handlebody') + library_names(2, 'torelli')
    for _ in range(5):
        h = random_product(lib, names, 2, rng, max_image_length=60)
        f = random_product(lib, names, 2, rng, max_image_length=60)
        assert tau_alt(compose_endos(h, f), 1) == tau_alt(h, 1) + tau_alt(f, 1)


def test_tau1_from_homology():
    lib = twist_library(3)
    for name in library_names(3, 'handlebody'):
        assert tau1_from_homology(lib[name]) == tau_alt(lib[name], 1)
    with pytest.raises(MembershipError):
        tau1_from_homology(lib['r1'])


@pytest.mark.parametrize('level, names', [(1, ('t_a1', 't_a12', 't_d', 't_e')), (2, ('t_d', 't_e'))])
def test_expansion_independence(level, names):
    lib = twist_library(2)
    for name in names:
        base = tau_alt(lib[name], level)
        for seed in (1, 2):
            e = perturbed_alt_expansion(2, level + 3, seed)
            assert tau_alt(lib[name], level, e) == base


@pytest.mark.parametrize('length', [1, 2])
def test_filtration_inclusions_on_short_words(length):
    count = 0
    for text, h in library_words(2, length):
        assert filtration_inclusions(h) == [], text
        count += 1
    assert count == 9 ** length


def test_filtration_inclusions_on_inverse_letters():
    for text, h in library_words(2, 1, inverses=True):
        assert filtration_inclusions(h) == [], text


def test_derivation_weights_checked():
    A = ba_alphabet(1)
    x = letters(A)
    with pytest.raises(WeightMismatchError):
        DerivationElement.from_parts(1, 1, {1: x['b1']}, {})
    with pytest.raises(MalformedInputError):
        DerivationElement(1, 1, {'c1': x['a1']})


def test_tau0():
    lib = twist_library(2)
    assert tau0_alt(lib['t_a1']) == g_identity(2)
    assert tau0_alt(lib['r1']).R == Matrix([[-1, 0], [0, 1]])
    h, f = lib['r1'], lib['t_e']
    x, y = tau0_alt(h), tau0_alt(f)
    assert tau0_alt(compose_endos(h, f)) == g_mul(x, y)
    assert g_mul(x, g_inv(x)) == g_identity(2)
    assert g_condition(x) and g_condition(y)


def test_g_element_checks():
    with pytest.raises(MalformedInputError):
        GElement(2, [[2, 0], [0, 1]])


def test_projections():
    A = ba_alphabet(2)
    x = letters(A)
    d = DerivationElement.from_parts(2, 1, {1: bracket(x['b1'], x['b2'])},
                                     {2: bracket(x['b1'], x['a2'])})
    assert p_project(d) == {('a1', ('b1', 'b2')): 1, ('b2', ('a2', 'b1')): -1}
    H = h_alphabet(2)
    y = letters(H)
    c = ClassicalDerivation(2, 1, {'a1': bracket(y['b1'], y['b2']),
                                   'b1': bracket(y['a2'], y['b1']) + bracket(y['a1'], y['a2'])})
    assert q_project(c) == {('a1', ('b1', 'b2')): 1, ('b1', ('a2', 'b1')): 1}


def test_projections_agree_on_torelli():
    lib = twist_library(2)
    for name in ('t_d', 't_e'):
        psi = compose_endos(lib['t_a1'], compose_endos(lib[name], lib['t_a1^-1']))
        assert p_project(tau_alt(psi, 1)) == q_project(tau_classical(psi, 1))


def test_levine_matches_tau0_on_lagrangian_torelli():
    lib = twist_library(2)
    h = compose_endos(lib['t_a12'], compose_endos(lib['t_e'], lib['t_d^-1']))
    x = tau0_alt(h)
    d = tau_levine(h, 1)
    for i in (1, 2):
        assert d.part(f'b{i}') == -x.mu[i]
