# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
实用函数。
"""

from typing import Any, Iterable, Sequence

from decorator import decorator
from sympy import QQ

from xtorelli.toolkit.errors import GenusMismatchError, AlphabetMismatchError


@decorator
def same_genus(func, *args, **kwargs):
    """
    检查参数中所有带 `genus` 属性的对象亏格一致。
    """
    genera = {a.genus for a in args if hasattr(a, 'genus')}
    if len(genera) > 1:
        raise GenusMismatchError(f'genera: {sorted(genera)}')
    return func(*args, **kwargs)


@decorator
def same_alphabet(func, *args, **kwargs):
    """
    检查参数中所有带 `alphabet` 属性的对象字母表一致。
    """
    alphabets = [a.alphabet for a in args if hasattr(a, 'alphabet')]
    for other in alphabets[1:]:
        if other != alphabets[0]:
            raise AlphabetMismatchError(f'{alphabets[0]} != {other}')
    return func(*args, **kwargs)


def rational(value: Any) -> Any:
    """
    转换为精确有理数（`sympy.QQ` 元素）。

    >>> str(rational(3))
    '3'
    >>> str(rational('-3/6'))
    '-1/2'
    """
    if isinstance(value, str):
        num, _, den = value.partition('/')
        return QQ(int(num), int(den or 1))
    return QQ.convert(value)


def format_coefficient(c: Any) -> str:
    """
    把系数格式化为 `(c)` 形式，负数带括号内符号。

    >>> format_coefficient(QQ(-3, 2))
    '(-3/2)'
    >>> format_coefficient(1)
    '1'
    """
    c = rational(c)
    if c < 0:
        return f'({c})'
    return f'{c}'


def join_signed(terms: Iterable[Sequence[Any]]) -> str:
    """
    把 `(系数, 文本)` 序列拼接为 `-(c)·x + (d)·y` 形式，符号提到括号外。

    >>> join_signed([(QQ(-1), 'a1⊗a1'), (QQ(1, 2), 'a2⊗a2')])
    '-(1)·a1⊗a1 + (1/2)·a2⊗a2'
    >>> join_signed([])
    '0'
    """
    out = ''
    for c, text in terms:
        c = rational(c)
        sign = '-' if c < 0 else '+'
        body = f'({abs(c)})·{text}'
        if not out:
            out = body if sign == '+' else f'-{body}'
        else:
            out += f' {sign} {body}'
    return out or '0'


def fraction_parts(c: Any) -> dict:
    """
    拆分为 `{'num': ..., 'den': ...}`。

    >>> fraction_parts(QQ(-2, 4))
    {'num': -1, 'den': 2}
    """
    c = rational(c)
    return {'num': int(c.numerator), 'den': int(c.denominator)}
