# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
带权字母表上的分次自由李代数（有理系数，Lyndon 基）。

Lyndon 字 w 的标准括号化 P_w 展开为张量后，w 本身系数为 1，其余字都按字典序大于 w，
因此一个李多项式的最小字必为 Lyndon 字，逐次减去 c·P_w 即得到 Lyndon 基坐标。

>>> A = ba_alphabet(2)
>>> x = bracket(LieElement.letter(A, 'b1'), LieElement.letter(A, 'b2'))
>>> str(x)
'1·[b1,b2]'
>>> str(to_tensor(x))
'b1.b2 - b2.b1'
"""

from functools import lru_cache
from typing import Dict, Tuple, Mapping, Optional, Any, List, Iterator

from sympy import Poly, Symbol, divisors
from sympy.functions.combinatorial.numbers import mobius

from xtorelli.toolkit.errors import NotPrimitiveError, WeightMismatchError, AlphabetMismatchError
from xtorelli.toolkit.tensor import (Word, WeightedAlphabet, TensorSeries,
                                     h_alphabet, ba_alphabet, b_alphabet)
from xtorelli.toolkit.utils import rational, format_coefficient, same_alphabet


def is_lyndon(word: Word) -> bool:
    """
    严格小于其全部真旋转。

    >>> is_lyndon((0, 1)), is_lyndon((1, 0)), is_lyndon((0, 0))
    (True, False, False)
    """
    n = len(word)
    if n == 0:
        return False
    return all(word < word[i:] + word[:i] for i in range(1, n))


def standard_factorization(word: Word) -> Tuple[Word, Word]:
    """
    标准分解 w = uv，v 为最长的真 Lyndon 后缀。
    """
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise NotPrimitiveError(f'word: {word}')


def bracketing(word: Word) -> Any:
    """
    Lyndon 字的标准括号化（嵌套二元组）。

    >>> bracketing((0, 0, 1))
    (0, (0, 1))
    """
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (bracketing(u), bracketing(v))


def _commutator(x: Mapping[Word, Any], y: Mapping[Word, Any]) -> Dict[Word, Any]:
    out: Dict[Word, Any] = {}
    for u, c in x.items():
        for v, d in y.items():
            out[u + v] = out.get(u + v, 0) + c * d
            out[v + u] = out.get(v + u, 0) - c * d
    return {w: c for w, c in out.items() if c != 0}


@lru_cache(maxsize=None)
def lyndon_tensor(word: Word) -> Dict[Word, int]:
    """
    P_w 的张量展开（整数系数）。
    """
    if len(word) == 1:
        return {word: 1}
    u, v = standard_factorization(word)
    return _commutator(lyndon_tensor(u), lyndon_tensor(v))


def decompose(terms: Mapping[Word, Any]) -> Dict[Word, Any]:
    """
    把李多项式（张量形式）表示为 Lyndon 基坐标，不是李多项式时抛出 NotPrimitiveError。
    """
    remaining = {w: c for w, c in terms.items() if c != 0}
    result: Dict[Word, Any] = {}
    while remaining:
        w = min(remaining)
        if not is_lyndon(w):
            raise NotPrimitiveError(f'word: {w}')
        c = remaining[w]
        result[w] = c
        for v, d in lyndon_tensor(w).items():
            r = remaining.get(v, 0) - c * d
            if r == 0:
                remaining.pop(v, None)
            else:
                remaining[v] = r
    return result


@lru_cache(maxsize=None)
def _bracket_words(u: Word, v: Word) -> Dict[Word, int]:
    return decompose(_commutator(lyndon_tensor(u), lyndon_tensor(v)))


@lru_cache(maxsize=None)
def _left_normed(word: Word) -> Dict[Word, int]:
    """
    左规范括号 [...[[x₁,x₂],x₃]...,xₙ] 的张量展开。
    """
    out = {word[:1]: 1}
    for x in word[1:]:
        nxt: Dict[Word, int] = {}
        for u, c in out.items():
            nxt[u + (x,)] = nxt.get(u + (x,), 0) + c
            nxt[(x,) + u] = nxt.get((x,) + u, 0) - c
        out = nxt
    return {w: c for w, c in out.items() if c != 0}


def dynkin_defect(t: TensorSeries) -> Optional[int]:
    """
    Dynkin 判别：对每个字长 n 的分量 p 检查 ρ(p) = n·p，返回第一个不满足的字长。
    """
    by_length: Dict[int, Dict[Word, Any]] = {}
    for w, c in t.items():
        by_length.setdefault(len(w), {})[w] = c
    for n in sorted(by_length):
        p = by_length[n]
        if n == 0:
            return 0
        rho: Dict[Word, Any] = {}
        for w, c in p.items():
            for v, d in _left_normed(w).items():
                rho[v] = rho.get(v, 0) + c * d
        rho = {w: c for w, c in rho.items() if c != 0}
        if rho != {w: n * c for w, c in p.items()}:
            return n
    return None


def _duval(k: int, n: int) -> Iterator[Word]:
    """
    Duval 算法：k 个字母上长度不超过 n 的全部 Lyndon 字（字典序）。
    """
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


@lru_cache(maxsize=None)
def lyndon_basis(alphabet: WeightedAlphabet, m: int) -> List[Word]:
    """
    总权重为 m 的全部 Lyndon 字（字典序）。

    >>> A = h_alphabet(1)
    >>> [A.render(w) for w in lyndon_basis(A, 2)]
    ['a1.b1']
    >>> A = ba_alphabet(2)
    >>> [A.render(w) for w in lyndon_basis(A, 2)]
    ['b1.b2', 'a1', 'a2']
    """
    if m < 1:
        return []
    return [w for w in _duval(len(alphabet), m) if alphabet.weight(w) == m]


def witt_dimension(alphabet: WeightedAlphabet, m: int) -> int:
    """
    按带权项链公式计算 dim 𝔏ie_m：
    m·dim 𝔏ie_m = Σ_{d|m} μ(d)·b_{m/d}，其中 b_n = n·Σ_k [tⁿ]f(t)ᵏ/k，
    f(t) = Σ t^{weight}。

    >>> witt_dimension(ba_alphabet(2), 2), witt_dimension(h_alphabet(2), 3)
    (3, 20)
    """
    t = Symbol('t')
    f = Poly(sum(t ** w for w in alphabet.weights), t)

    def b(n: int) -> Any:
        total = rational(0)
        power = Poly(1, t)
        for k in range(1, n + 1):
            power = power * f
            total += rational(int(power.coeff_monomial(t ** n))) / k
        return total * n

    total = sum(int(mobius(d)) * b(m // d) for d in divisors(m))
    return int(rational(total) / m)


class LieElement(object):
    """
    自由李代数元素：Lyndon 字 → 有理系数。
    """
    def __init__(self, alphabet: WeightedAlphabet, terms: Optional[Mapping[Word, Any]] = None):
        """
        :param alphabet: 字母表。
        :param terms: Lyndon 字 → 系数。
        """
        self.__alphabet = alphabet
        self.__terms: Dict[Word, Any] = {}
        for w, c in (terms or {}).items():
            c = rational(c)
            if c == 0:
                continue
            w = tuple(w)
            if not is_lyndon(w):
                raise NotPrimitiveError(f'not a Lyndon word: {alphabet.render(w)}')
            self.__terms[w] = c

    @classmethod
    def zero(cls, alphabet: WeightedAlphabet) -> 'LieElement':
        return cls(alphabet)

    @classmethod
    def letter(cls, alphabet: WeightedAlphabet, symbol: str) -> 'LieElement':
        return cls(alphabet, {(alphabet.index(symbol),): 1})

    @classmethod
    def from_tensor(cls, t: TensorSeries) -> 'LieElement':
        """
        由李多项式的张量形式构造（不做 Dynkin 检查）。
        """
        return cls(t.alphabet, decompose(t.terms))

    @property
    def alphabet(self) -> WeightedAlphabet:
        return self.__alphabet

    @property
    def terms(self) -> Dict[Word, Any]:
        return dict(self.__terms)

    def items(self) -> Iterator[Tuple[Word, Any]]:
        return iter(self.__terms.items())

    def coefficient(self, word: Word) -> Any:
        return self.__terms.get(tuple(word), rational(0))

    def is_zero(self) -> bool:
        return not self.__terms

    def weights(self) -> List[int]:
        return sorted({self.__alphabet.weight(w) for w in self.__terms})

    def homogeneous(self, m: int) -> 'LieElement':
        """
        权重 m 的齐次部分。
        """
        weight = self.__alphabet.weight
        return LieElement(self.__alphabet,
                          {w: c for w, c in self.__terms.items() if weight(w) == m})

    def is_homogeneous(self, m: int) -> bool:
        return all(self.__alphabet.weight(w) == m for w in self.__terms)

    def _check(self, other: 'LieElement') -> None:
        if self.__alphabet != other.__alphabet:
            raise AlphabetMismatchError(f'{self.__alphabet} != {other.__alphabet}')

    def __add__(self, other: 'LieElement') -> 'LieElement':
        self._check(other)
        terms = dict(self.__terms)
        for w, c in other.__terms.items():
            terms[w] = terms.get(w, 0) + c
        return LieElement(self.__alphabet, terms)

    def __neg__(self) -> 'LieElement':
        return LieElement(self.__alphabet, {w: -c for w, c in self.__terms.items()})

    def __sub__(self, other: 'LieElement') -> 'LieElement':
        return self + (-other)

    def __mul__(self, c: Any) -> 'LieElement':
        c = rational(c)
        return LieElement(self.__alphabet, {w: c * v for w, v in self.__terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.__alphabet == other.__alphabet and self.__terms == other.__terms

    def __hash__(self) -> int:
        return hash((self.__alphabet, frozenset(self.__terms.items())))

    def render_word(self, word: Word) -> str:
        """
        按标准括号化渲染，如 `[b1,[a1,b2]]`。
        """
        symbols = self.__alphabet.symbols

        def walk(node: Any) -> str:
            if isinstance(node, int):
                return symbols[node]
            return f'[{walk(node[0])},{walk(node[1])}]'

        return walk(bracketing(word))

    def __str__(self) -> str:
        if not self.__terms:
            return '0'
        weight = self.__alphabet.weight
        words = sorted(self.__terms, key=lambda w: (weight(w), w))
        return ' + '.join(f'{format_coefficient(self.__terms[w])}·{self.render_word(w)}'
                          for w in words)

    def __repr__(self) -> str:
        return f'LieElement({self})'


@same_alphabet()
def bracket(x: LieElement, y: LieElement) -> LieElement:
    """
    李括号 [x, y]。

    >>> A = ba_alphabet(1)
    >>> a, b = LieElement.letter(A, 'a1'), LieElement.letter(A, 'b1')
    >>> str(bracket(a, b))
    '(-1)·[b1,a1]'
    >>> bracket(a, a).is_zero()
    True
    """
    terms: Dict[Word, Any] = {}
    for u, c in x.items():
        for v, d in y.items():
            for w, e in _bracket_words(u, v).items():
                terms[w] = terms.get(w, 0) + c * d * e
    return LieElement(x.alphabet, terms)


def to_tensor(x: LieElement, truncation: Optional[int] = None) -> TensorSeries:
    """
    嵌入完备张量代数。
    """
    terms: Dict[Word, Any] = {}
    for w, c in x.items():
        for v, d in lyndon_tensor(w).items():
            terms[v] = terms.get(v, 0) + c * d
    return TensorSeries(x.alphabet, terms, truncation)


def from_primitive_tensor(t: TensorSeries) -> LieElement:
    """
    本原张量转回 Lyndon 基，Dynkin 判别失败时抛出 NotPrimitiveError。

    >>> A = h_alphabet(1)
    >>> t = TensorSeries(A, {(0, 1): 1, (1, 0): -1})
    >>> str(from_primitive_tensor(t))
    '1·[a1,b1]'
    """
    n = dynkin_defect(t)
    if n is not None:
        raise NotPrimitiveError(f'length: {n}, tensor: {t}')
    return LieElement.from_tensor(t)


def substitute(
    x: LieElement,
    assignment: Mapping[str, Optional[LieElement]],
    target: WeightedAlphabet
) -> LieElement:
    """
    把字母替换为目标字母表上的李元素（None 表示 0）并延拓为李代数同态；
    未指定的字母映为目标字母表中的同名字母。

    :param x: 李元素。
    :param assignment: 符号 → 像。
    :param target: 目标字母表。

    >>> A, B = ba_alphabet(1), b_alphabet(1)
    >>> ab = bracket(LieElement.letter(A, 'a1'), LieElement.letter(A, 'b1'))
    >>> substitute(ab, {'a1': None}, B).is_zero()
    True
    """
    source = x.alphabet
    images: List[Optional[TensorSeries]] = []
    for i, symbol in enumerate(source.symbols):
        if symbol in assignment:
            img = assignment[symbol]
        else:
            img = LieElement.letter(target, symbol)
        if img is not None and img.is_zero():
            img = None
        if img is not None:
            if img.alphabet != target:
                raise AlphabetMismatchError(f'{img.alphabet} != {target}')
            if not img.is_homogeneous(source.weights[i]):
                raise WeightMismatchError(f'{symbol} -> {img}')
            images.append(to_tensor(img))
        else:
            images.append(None)
    total = TensorSeries.zero(target)
    for w, c in x.items():
        for v, d in lyndon_tensor(w).items():
            if any(images[i] is None for i in v):
                continue
            term = TensorSeries.one(target)
            for i in v:
                term = term * images[i]
            total = total + term.scale(c * d)
    return LieElement.from_tensor(total)


def omega_prime(genus: int) -> LieElement:
    """
    Ω′ = Σᵢ [aᵢ, bᵢ]，BA 字母表上权重为 3。

    >>> omega_prime(1).weights()
    [3]
    """
    A = ba_alphabet(genus)
    total = LieElement.zero(A)
    for i in range(1, genus + 1):
        total = total + bracket(LieElement.letter(A, f'a{i}'), LieElement.letter(A, f'b{i}'))
    return total


def letters(alphabet: WeightedAlphabet) -> Dict[str, LieElement]:
    """
    符号 → 对应字母的李元素。
    """
    return {s: LieElement.letter(alphabet, s) for s in alphabet.symbols}
