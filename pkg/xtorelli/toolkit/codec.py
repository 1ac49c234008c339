# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
结构化文本（YAML）的读写。

自同态文件格式::

    genus: 2
    endos:
      - name: delta
        images: {a1: 'b1^-1 a1 b1 ...', b1: '...'}
        inverse: {...}            # 可选

系数一律写成 `{num: 分子, den: 分母}`。
"""

import re
import sys

from typing import Any, Dict, IO, Mapping, Optional
from pathlib import Path

from ruamel import yaml

from xtorelli.toolkit.common import CERTIFICATE
from xtorelli.toolkit.diagrams import (DiagramElement, TreeDiagram, a_deg, lyndon_word, from_lyndon,
                                       lyndon_form)
from xtorelli.toolkit.errors import (SchemaError, ValidationError, GenusMismatchError,
                                     XTorelliError)
from xtorelli.toolkit.johnson import Derivation, GElement, DERIVATION_KINDS
from xtorelli.toolkit.lie import LieElement
from xtorelli.toolkit.utils import fraction_parts, rational
from xtorelli.toolkit.version import __version__
from xtorelli.toolkit.words import (SurfaceEndo, FreeWord, Generator, boundary_defect,
                                    twist_library)


_NAME = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


def load_yaml(path: str | Path) -> Any:
    with open(path, encoding='utf8') as f:
        return yaml.YAML(typ='safe').load(f)


def dump(data: Any, stream: Optional[IO] = None) -> None:
    """
    写出一个 YAML 文档（默认到标准输出）。
    """
    y = yaml.YAML()
    y.allow_unicode = True
    y.dump(data, stream or sys.stdout)


def coefficient_from_dict(data: Any) -> Any:
    try:
        return rational(data['num']) / rational(data['den'])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise SchemaError(f'coefficient: {data!r}') from e


def metadata(genus: int, truncation: Optional[int], expansion: str) -> Dict[str, Any]:
    """
    结构化输出的元数据头。
    """
    return {
        'tool_version': __version__,
        'genus': genus,
        'truncation': truncation,
        'expansion': expansion,
        'certificate': CERTIFICATE
    }


def endo_to_dict(f: SurfaceEndo, name: Optional[str] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        'name': name or f.label,
        'images': {str(g): str(w) for g, w in f.images.items()}
    }
    if f.inverse is not None:
        data['inverse'] = {str(g): str(w) for g, w in f.inverse.images.items()}
    return data


def _images(data: Any, genus: int, where: str) -> Dict[Generator, FreeWord]:
    if not isinstance(data, Mapping):
        raise SchemaError(f'{where}: images must be a mapping')
    images = {}
    for symbol, text in data.items():
        gen = Generator.parse(str(symbol))
        images[gen] = FreeWord.parse(str(text), genus)
    return images


def endo_from_dict(data: Any, genus: int) -> SurfaceEndo:
    """
    由字典构造自同态（不做映射类校验）。
    """
    if not isinstance(data, Mapping) or 'name' not in data or 'images' not in data:
        raise SchemaError(f'endo entry: {data!r}')
    name = str(data['name'])
    if not _NAME.fullmatch(name):
        raise SchemaError(f'name: {name!r}')
    images = _images(data['images'], genus, name)
    if 'inverse' not in data:
        return SurfaceEndo(genus, images, name)
    inverse_images = _images(data['inverse'], genus, f'{name}^-1')
    fwd: SurfaceEndo = None
    bwd: SurfaceEndo = None
    fwd = SurfaceEndo(genus, images, name, lambda: bwd)
    bwd = SurfaceEndo(genus, inverse_images, f'{name}^-1', lambda: fwd)
    return fwd


def load_user_endos(path: str | Path, genus: int) -> Dict[str, SurfaceEndo]:
    """
    读取用户自同态文件，每个条目必须保持边界词 ζ。

    :param path: YAML 文件。
    :param genus: 亏格。
    :return: 名称 → 自同态（含已给出的逆 `<name>^-1`）。
    """
    data = load_yaml(path)
    if data is None:
        return {}
    if not isinstance(data, Mapping) or not isinstance(data.get('endos', []), list):
        raise SchemaError(f'file: {path}, expected mapping with an `endos` list')
    if data.get('genus', genus) != genus:
        raise GenusMismatchError(f'genera: {[data.get("genus"), genus]}')
    endos: Dict[str, SurfaceEndo] = {}
    for entry in data.get('endos') or []:
        try:
            f = endo_from_dict(entry, genus)
        except SchemaError:
            raise
        except XTorelliError as e:
            raise SchemaError(f'entry: {entry!r}, {e}') from e
        for h in filter(None, (f, f.inverse)):
            if not h.validated:
                defect = boundary_defect(h)
                raise ValidationError(f'{h.label}: boundary not fixed, defect: {defect}', defect)
            endos[h.label] = h
    return endos


def dump_library(genus: int, stream: Optional[IO] = None) -> None:
    """
    以自同态文件格式写出扭转库（不含单独的逆元条目）。
    """
    library = twist_library(genus)
    entries = [endo_to_dict(f, name) for name, f in library.items() if not name.endswith('^-1')]
    dump({'genus': genus, 'endos': entries}, stream)


def lie_to_list(x: LieElement) -> list:
    return [{'word': x.alphabet.render(w), 'bracket': x.render_word(w),
             'coeff': fraction_parts(c)} for w, c in x.items()]


def derivation_to_dict(d: Derivation) -> Dict[str, Any]:
    """
    `{kind, genus, level, a_part: [{gen, lie}], b_part: [{gen, lie}], symplectic}`，
    `symplectic` 表示括号收缩 Ξ(d) 为零。
    """
    doc = {'kind': d.kind, 'genus': d.genus, 'level': d.level, 'a_part': [], 'b_part': []}
    for leg in d.legs(d.genus):
        doc[f'{leg[0]}_part'].append({'gen': leg, 'lie': lie_to_list(d.part(leg))})
    doc['symplectic'] = d.xi().is_zero()
    return doc


def derivation_from_dict(data: Any) -> Derivation:
    """
    `derivation_to_dict` 的逆；`symplectic` 仅作说明，不参与重建。
    """
    try:
        cls = DERIVATION_KINDS[data['kind']]
        genus, level = int(data['genus']), int(data['level'])
        A = cls.alphabet_for(genus)
        legs = set(cls.legs(genus))
        coords = {}
        for side in ('a_part', 'b_part'):
            for entry in data.get(side) or []:
                leg = entry['gen']
                if leg not in legs or leg[0] != side[0]:
                    raise SchemaError(f'{side}: {leg}, kind: {cls.kind}')
                for item in entry['lie'] or []:
                    coords[(leg, A.parse(item['word']))] = coefficient_from_dict(item['coeff'])
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise SchemaError(f'derivation: {e}') from e
    return cls.from_coordinates(genus, level, coords)


def g_to_dict(x: GElement) -> Dict[str, Any]:
    return {
        'genus': x.genus,
        'R': [[int(v) for v in row] for row in x.R.tolist()],
        'mu': [{'gen': f'a{i}', 'lie': lie_to_list(m)} for i, m in sorted(x.mu.items())]
    }


def diagram_to_dict(e: DiagramElement) -> Dict[str, Any]:
    """
    `{genus, kind, adeg, terms: [{coeff, root_color, lyndon_word, tree}]}`，
    各项先改写为有根 Lyndon 表示。
    """
    e = lyndon_form(e)
    levels = {a_deg(t) for t in e.terms}
    return {
        'genus': e.genus,
        'kind': e.kind,
        'adeg': levels.pop() if len(levels) == 1 else sorted(levels),
        'terms': [{'coeff': fraction_parts(c), 'root_color': t.root,
                   'lyndon_word': lyndon_word(t, e.kind), 'tree': str(t)}
                  for t, c in e.terms.items()]
    }


def diagram_from_dict(data: Any) -> DiagramElement:
    """
    `diagram_to_dict` 的逆；有 `tree` 时按其解析，否则由 `root_color` 与 `lyndon_word` 重建。
    """
    try:
        genus = int(data['genus'])
        kind = data.get('kind', 'alt')
        terms = {}
        for item in data['terms'] or []:
            if item.get('tree'):
                t = TreeDiagram.parse(item['tree'], genus)
            else:
                t = from_lyndon(genus, item['root_color'], item['lyndon_word'], kind)
            terms[t] = terms.get(t, 0) + coefficient_from_dict(item['coeff'])
        return DiagramElement(genus, terms, kind)
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise SchemaError(f'diagram: {e}') from e
