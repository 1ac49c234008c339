# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

import io
import random

import pytest

from ruamel import yaml

from xtorelli.toolkit.codec import (load_user_endos, dump_library, dump, metadata,
                                    derivation_to_dict, derivation_from_dict, diagram_to_dict,
                                    diagram_from_dict, g_to_dict, coefficient_from_dict)
from xtorelli.toolkit.common import EXAMPLE_ENDOS
from xtorelli.toolkit.diagrams import random_diagram, TreeDiagram, DiagramElement
from xtorelli.toolkit.errors import (SchemaError, ValidationError, GenusMismatchError,
                                     MalformedInputError)
from xtorelli.toolkit.johnson import tau_alt, tau_levine, tau0_alt, DerivationElement
from xtorelli.toolkit.lie import LieElement, bracket
from xtorelli.toolkit.tensor import ba_alphabet
from xtorelli.toolkit.utils import rational
from xtorelli.toolkit.words import twist_library


def through_yaml(data):
    stream = io.StringIO()
    dump(data, stream)
    return yaml.YAML(typ='safe').load(stream.getvalue())


def test_example_endos():
    endos = load_user_endos(EXAMPLE_ENDOS, 2)
    lib = twist_library(2)
    assert sorted(endos) == ['delta', 'delta^-1', 'meridian2', 'meridian2^-1']
    assert endos['delta'] == lib['t_d']
    assert endos['delta^-1'] == lib['t_d^-1']
    assert endos['meridian2'] == lib['t_a2']
    assert endos['delta'].inverse is endos['delta^-1']


def test_empty_file(tmp_path):
    path = tmp_path / 'empty.yml'
    path.write_text('')
    assert load_user_endos(path, 2) == {}


def test_boundary_violation(tmp_path):
    path = tmp_path / 'bad.yml'
    path.write_text('genus: 1\nendos:\n  - name: bad\n    images: {b1: a1}\n')
    with pytest.raises(ValidationError) as exc:
        load_user_endos(path, 1)
    assert exc.value.defect is not None
    assert not exc.value.defect.is_identity()


@pytest.mark.parametrize('text, error', [
    ('endos: 3\n', SchemaError),
    ('genus: 2\nendos: []\n', GenusMismatchError),
    ('endos:\n  - name: 1x\n    images: {}\n', SchemaError),
    ('endos:\n  - name: x\n    images: {a1: "a1 ^"}\n', SchemaError),
    ('endos:\n  - name: x\n    images: {c1: a1}\n', SchemaError),
    ('endos:\n  - images: {a1: a1}\n', SchemaError),
])
def test_malformed_files(tmp_path, text, error):
    path = tmp_path / 'endos.yml'
    path.write_text(text)
    with pytest.raises(error):
        load_user_endos(path, 1)


def test_library_dump_loads_back(tmp_path):
    path = tmp_path / 'lib.yml'
    with open(path, 'w', encoding='utf8') as f:
        dump_library(2, f)
    loaded = load_user_endos(path, 2)
    assert loaded == twist_library(2)


def test_derivation_documents():
    lib = twist_library(2)
    d = tau_alt(lib['t_a12'], 1)
    data = through_yaml(derivation_to_dict(d))
    assert data['kind'] == 'alt' and data['genus'] == 2 and data['level'] == 1
    assert data['symplectic'] is True
    assert [e['gen'] for e in data['a_part']] == ['a1', 'a2']
    assert [e['gen'] for e in data['b_part']] == ['b1', 'b2']
    a1 = data['a_part'][0]['lie']
    assert {'word': 'a1', 'bracket': 'a1', 'coeff': {'num': -1, 'den': 1}} in a1
    assert derivation_from_dict(data) == d
    levine = tau_levine(lib['t_d'], 2)
    data = through_yaml(derivation_to_dict(levine))
    assert data['a_part'] == [] and data['symplectic'] is True
    assert derivation_from_dict(data) == levine


def test_non_symplectic_derivation_document():
    A = ba_alphabet(1)
    b1, a1 = LieElement.letter(A, 'b1'), LieElement.letter(A, 'a1')
    d = DerivationElement.from_parts(1, 1, {}, {1: bracket(b1, a1)})
    data = through_yaml(derivation_to_dict(d))
    assert data['symplectic'] is False
    assert data['b_part'][0]['lie'] == [{'word': 'b1.a1', 'bracket': '[b1,a1]',
                                          'coeff': {'num': 1, 'den': 1}}]
    assert derivation_from_dict(data) == d
    data['b_part'][0]['gen'] = 'a1'
    with pytest.raises(SchemaError):
        derivation_from_dict(data)


def test_diagram_documents():
    rng = random.Random(4)
    for kind, level in (('alt', 1), ('alt', 2), ('levine', 1)):
        e = random_diagram(2, level, rng, kind)
        data = through_yaml(diagram_to_dict(e))
        assert all(item['lyndon_word'] for item in data['terms'])
        back = diagram_from_dict(data)
        assert back.kind == kind
        assert back == e
        for item in data['terms']:
            del item['tree']
        assert diagram_from_dict(data) == e


def test_diagram_document_lyndon_words():
    t = TreeDiagram(2, 'a1', ('b1', ('b1', 'a2')))
    data = diagram_to_dict(DiagramElement.single(t, rational('1/2')))
    assert data['adeg'] == 3
    assert data['terms'] == [{'coeff': {'num': 1, 'den': 2}, 'root_color': 'a1',
                              'lyndon_word': 'b1.b1.a2', 'tree': 'tree(root=a1; [b1,[b1,a2]])'}]
    data['terms'][0]['lyndon_word'] = 'a2.b1'
    del data['terms'][0]['tree']
    with pytest.raises(MalformedInputError):
        diagram_from_dict(data)


def test_g_document():
    data = g_to_dict(tau0_alt(twist_library(2)['r1']))
    assert data['R'] == [[-1, 0], [0, 1]]
    assert [e['gen'] for e in data['mu']] == ['a1', 'a2']


def test_coefficients():
    assert coefficient_from_dict({'num': -3, 'den': 6}) == rational('-1/2')
    with pytest.raises(SchemaError):
        coefficient_from_dict({'num': 1})
    with pytest.raises(SchemaError):
        coefficient_from_dict({'num': 1, 'den': 0})


def test_metadata():
    assert set(metadata(2, 4, 'default-alt')) \
        == {'tool_version', 'genus', 'truncation', 'expansion', 'certificate'}
