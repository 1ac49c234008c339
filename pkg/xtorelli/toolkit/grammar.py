# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
自由群字与映射类单词的文法。

自由群字：``a1 b2^-1 a1^2``，``1`` 或空串为单位元。
映射类单词：``term ('*' term)*``，``term = NAME ('^' INTEGER)?``，空白不敏感。
"""

import re

import pyparsing as pp

from typing import List, Tuple, Iterable, Mapping, Any

from xtorelli.toolkit.errors import MalformedInputError, McWordParseError
from xtorelli.toolkit.words import Generator, SurfaceEndo, compose_endos, endo_power


_INT = pp.Regex(r'[+-]?\d+').set_parse_action(lambda t: int(t[0]))

_LETTER = pp.Regex(r'[ab]\d+')

_FREE_TERM = pp.Group(_LETTER + pp.Opt(pp.Suppress('^') + _INT, default=1))

FREE_WORD = pp.ZeroOrMore(_FREE_TERM) + pp.StringEnd()

_NAME = pp.Regex(r'[A-Za-z_][A-Za-z0-9_]*')

_MC_TERM = (_NAME + pp.Opt(pp.Suppress('^') + _INT, default=1)).set_parse_action(
    lambda s, loc, t: [(loc, t[0], t[1])]
)

MC_WORD = _MC_TERM + pp.ZeroOrMore(pp.Suppress('*') + _MC_TERM) + pp.StringEnd()


def parse_free_word(text: str) -> List[Tuple[Generator, int]]:
    """
    解析自由群字为游程序列（未约化）。

    >>> [(str(g), e) for g, e in parse_free_word('a1 b2^-1 a1^2')]
    [('a1', 1), ('b2', -1), ('a1', 2)]
    >>> parse_free_word(' 1 ')
    []
    """
    if text.strip() in ('', '1'):
        return []
    try:
        tokens = FREE_WORD.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise MalformedInputError(f'position: {e.loc}, text: {text!r}') from e
    runs = []
    for symbol, exp in tokens:
        if exp == 0:
            raise MalformedInputError(f'zero exponent: {symbol}')
        runs.append((Generator.parse(symbol), exp))
    return runs


class McWord(object):
    """
    映射类单词：扭转库名称（或用户自同态名称）的带指数乘积，从左到右复合。
    """
    def __init__(self, genus: int, factors: Iterable[Tuple[str, int]]):
        """
        :param genus: 亏格。
        :param factors: `(名称, 指数)` 序列。
        """
        self.genus = genus
        self.factors: List[Tuple[str, int]] = list(factors)

    def evaluate(self, library: Mapping[str, SurfaceEndo]) -> SurfaceEndo:
        """
        在给定扭转库中求值为自同态。
        """
        result = None
        for name, exp in self.factors:
            f = endo_power(library[name], exp)
            result = f if result is None else compose_endos(result, f)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, McWord):
            return NotImplemented
        return self.genus == other.genus and self.factors == other.factors

    def __str__(self) -> str:
        return ' * '.join(n if e == 1 else f'{n}^{e}' for n, e in self.factors)


def parse_mc_word(text: str, genus: int, names: Iterable[str]) -> McWord:
    """
    解析映射类单词并检查名称可解析。

    :param text: 单词文本。
    :param genus: 亏格。
    :param names: 可用名称。

    >>> parse_mc_word('t_a12 * t_d^-2', 2, ['t_a12', 't_d']).factors
    [('t_a12', 1), ('t_d', -2)]
    """
    names = set(names)
    try:
        tokens = MC_WORD.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise McWordParseError(f'position: {e.loc}, text: {text!r}', e.loc) from e
    factors = []
    for loc, name, exp in tokens:
        m = re.fullmatch(r't_a(\d)(\d)' if genus < 10 else r't_a(\d+)_(\d+)', name)
        if m and int(m.group(1)) >= int(m.group(2)):
            raise McWordParseError(f'indices must satisfy k<l: {name}', loc)
        if name not in names:
            raise McWordParseError(f'unknown name: {name}, genus: {genus}', loc)
        if exp == 0:
            raise McWordParseError(f'malformed exponent: {name}^0', loc)
        factors.append((name, exp))
    return McWord(genus, factors)


_NODE = pp.Forward()
_NODE <<= _LETTER | pp.Group(pp.Suppress('[') + _NODE + pp.Suppress(',') + _NODE + pp.Suppress(']'))

_STRUT = pp.Suppress(pp.Keyword('strut') + '(') + _LETTER + pp.Suppress(',') + _LETTER + pp.Suppress(')')

_TREE = (pp.Suppress(pp.Keyword('tree') + '(' + pp.Keyword('root') + '=') + _LETTER
         + pp.Suppress(';') + _NODE + pp.Suppress(')'))

DIAGRAM = (_STRUT | _TREE) + pp.StringEnd()


def _nested(node: Any) -> Any:
    if isinstance(node, str):
        return node
    return (_nested(node[0]), _nested(node[1]))


def parse_diagram(text: str) -> Tuple[str, Any]:
    """
    解析树图的文本表示为 `(根颜色, 嵌套括号)`。

    >>> parse_diagram('strut(a1,a2)')
    ('a1', 'a2')
    >>> parse_diagram('tree(root=a1; [b1,[b2,a2]])')
    ('a1', ('b1', ('b2', 'a2')))
    """
    try:
        tokens = DIAGRAM.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise MalformedInputError(f'position: {e.loc}, text: {text!r}') from e
    return tokens[0], _nested(tokens[1])
