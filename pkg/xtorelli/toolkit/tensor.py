# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
带权字母表与截断的非交换幂级数（完备张量代数）。

字以字母下标元组表示，元组的字典序即字母表的全序。
"""

from functools import lru_cache
from typing import Sequence, Tuple, Dict, Mapping, Optional, Any, List, Iterator

from xtorelli.toolkit.errors import MalformedInputError, AlphabetMismatchError
from xtorelli.toolkit.utils import rational, same_alphabet


Word = Tuple[int, ...]


class WeightedAlphabet(object):
    """
    带权字母表，权重只能为 1 或 2。
    """
    def __init__(self, letters: Sequence[Tuple[str, int]], name: str = ''):
        """
        :param letters: 按全序排列的 `(符号, 权重)`。
        :param name: 名称（如 `H`、`BA`、`B`）。
        """
        symbols = tuple(s for s, _ in letters)
        weights = tuple(w for _, w in letters)
        if len(set(symbols)) != len(symbols):
            raise MalformedInputError(f'duplicated symbols: {symbols}')
        if any(w not in (1, 2) for w in weights):
            raise MalformedInputError(f'weights: {weights}')
        self.__symbols = symbols
        self.__weights = weights
        self.__index = {s: i for i, s in enumerate(symbols)}
        self.__name = name

    @property
    def name(self) -> str:
        return self.__name

    @property
    def symbols(self) -> Tuple[str, ...]:
        return self.__symbols

    @property
    def weights(self) -> Tuple[int, ...]:
        return self.__weights

    def index(self, symbol: str) -> int:
        """
        符号在全序中的位置。
        """
        try:
            return self.__index[symbol]
        except KeyError:
            raise MalformedInputError(f'symbol: {symbol}, alphabet: {self}') from None

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.__index

    def weight(self, word: Word) -> int:
        """
        字的总权重。
        """
        w = self.__weights
        return sum(w[i] for i in word)

    def render(self, word: Word, sep: str = '.') -> str:
        """
        >>> ba_alphabet(2).render((0, 2))
        'b1.a1'
        """
        return sep.join(self.__symbols[i] for i in word)

    def parse(self, text: str, sep: str = '.') -> Word:
        return tuple(self.index(s) for s in text.split(sep)) if text else ()

    def __len__(self) -> int:
        return len(self.__symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedAlphabet):
            return NotImplemented
        return self.__symbols == other.__symbols and self.__weights == other.__weights

    def __hash__(self) -> int:
        return hash((self.__symbols, self.__weights))

    def __str__(self) -> str:
        return self.__name or ','.join(self.__symbols)

    def __repr__(self) -> str:
        return f'WeightedAlphabet({self})'


@lru_cache(maxsize=None)
def h_alphabet(genus: int) -> WeightedAlphabet:
    """
    H：a₁<…<a_g<b₁<…<b_g，权重均为 1。
    """
    return WeightedAlphabet([(f'a{i}', 1) for i in range(1, genus + 1)]
                            + [(f'b{i}', 1) for i in range(1, genus + 1)], 'H')


@lru_cache(maxsize=None)
def ba_alphabet(genus: int) -> WeightedAlphabet:
    """
    B;A：b₁<…<b_g<a₁<…<a_g，b 权重 1，a 权重 2。
    """
    return WeightedAlphabet([(f'b{i}', 1) for i in range(1, genus + 1)]
                            + [(f'a{i}', 2) for i in range(1, genus + 1)], 'BA')


@lru_cache(maxsize=None)
def b_alphabet(genus: int) -> WeightedAlphabet:
    """
    B：b₁<…<b_g，权重 1。
    """
    return WeightedAlphabet([(f'b{i}', 1) for i in range(1, genus + 1)], 'B')


def alphabet_by_name(name: str, genus: int) -> WeightedAlphabet:
    factories = {'H': h_alphabet, 'BA': ba_alphabet, 'B': b_alphabet}
    if name not in factories:
        raise MalformedInputError(f'alphabet: {name}')
    return factories[name](genus)


def _min_truncation(*values: Optional[int]) -> Optional[int]:
    given = [v for v in values if v is not None]
    return min(given) if given else None


class TensorSeries(object):
    """
    截断的非交换幂级数，系数为精确有理数；超过截断权重的项被丢弃。

    >>> A = ba_alphabet(1)
    >>> x = TensorSeries.letter(A, 'a1', 4)
    >>> str(x * x + x)
    'a1 + a1.a1'
    >>> str(x * x * x)
    '0'
    """
    def __init__(
        self,
        alphabet: WeightedAlphabet,
        terms: Optional[Mapping[Word, Any]] = None,
        truncation: Optional[int] = None
    ):
        """
        :param alphabet: 字母表。
        :param terms: 字 → 系数。
        :param truncation: 保留的最大总权重，None 表示多项式（不截断）。
        """
        self.__alphabet = alphabet
        self.__truncation = truncation
        self.__terms: Dict[Word, Any] = {}
        for word, c in (terms or {}).items():
            c = rational(c)
            if c == 0:
                continue
            if truncation is not None and alphabet.weight(word) > truncation:
                continue
            self.__terms[tuple(word)] = c

    @classmethod
    def one(cls, alphabet: WeightedAlphabet, truncation: Optional[int] = None) -> 'TensorSeries':
        return cls(alphabet, {(): 1}, truncation)

    @classmethod
    def zero(cls, alphabet: WeightedAlphabet, truncation: Optional[int] = None) -> 'TensorSeries':
        return cls(alphabet, {}, truncation)

    @classmethod
    def letter(
        cls,
        alphabet: WeightedAlphabet,
        symbol: str,
        truncation: Optional[int] = None
    ) -> 'TensorSeries':
        return cls(alphabet, {(alphabet.index(symbol),): 1}, truncation)

    @property
    def alphabet(self) -> WeightedAlphabet:
        return self.__alphabet

    @property
    def truncation(self) -> Optional[int]:
        return self.__truncation

    @property
    def terms(self) -> Dict[Word, Any]:
        """
        字 → 系数（副本）。
        """
        return dict(self.__terms)

    def items(self) -> Iterator[Tuple[Word, Any]]:
        return iter(self.__terms.items())

    def coefficient(self, word: Word) -> Any:
        return self.__terms.get(tuple(word), rational(0))

    @property
    def constant(self) -> Any:
        """
        常数项。
        """
        return self.coefficient(())

    def is_zero(self) -> bool:
        return not self.__terms

    def weights(self) -> List[int]:
        """
        出现的全部权重（升序）。
        """
        return sorted({self.__alphabet.weight(w) for w in self.__terms})

    def homogeneous(self, m: int) -> 'TensorSeries':
        """
        权重 m 的齐次部分。
        """
        weight = self.__alphabet.weight
        return TensorSeries(self.__alphabet,
                            {w: c for w, c in self.__terms.items() if weight(w) == m},
                            self.__truncation)

    def by_length(self, n: int) -> 'TensorSeries':
        """
        字长为 n 的部分。
        """
        return TensorSeries(self.__alphabet,
                            {w: c for w, c in self.__terms.items() if len(w) == n},
                            self.__truncation)

    def truncate(self, n: Optional[int]) -> 'TensorSeries':
        return TensorSeries(self.__alphabet, self.__terms,
                            _min_truncation(n, self.__truncation))

    def _check(self, other: 'TensorSeries') -> None:
        if self.__alphabet != other.__alphabet:
            raise AlphabetMismatchError(f'{self.__alphabet} != {other.__alphabet}')

    def __add__(self, other: 'TensorSeries') -> 'TensorSeries':
        self._check(other)
        terms = dict(self.__terms)
        for w, c in other.__terms.items():
            terms[w] = terms.get(w, 0) + c
        return TensorSeries(self.__alphabet, terms,
                            _min_truncation(self.__truncation, other.__truncation))

    def __neg__(self) -> 'TensorSeries':
        return TensorSeries(self.__alphabet, {w: -c for w, c in self.__terms.items()},
                            self.__truncation)

    def __sub__(self, other: 'TensorSeries') -> 'TensorSeries':
        return self + (-other)

    def scale(self, c: Any) -> 'TensorSeries':
        c = rational(c)
        return TensorSeries(self.__alphabet, {w: c * v for w, v in self.__terms.items()},
                            self.__truncation)

    def __mul__(self, other: Any) -> 'TensorSeries':
        if not isinstance(other, TensorSeries):
            return self.scale(other)
        self._check(other)
        n = _min_truncation(self.__truncation, other.__truncation)
        weight = self.__alphabet.weight
        buckets: Dict[int, List[Tuple[Word, Any]]] = {}
        for v, d in other.__terms.items():
            buckets.setdefault(weight(v), []).append((v, d))
        terms: Dict[Word, Any] = {}
        for u, c in self.__terms.items():
            wu = weight(u)
            for wv, bucket in buckets.items():
                if n is not None and wu + wv > n:
                    continue
                for v, d in bucket:
                    k = u + v
                    terms[k] = terms.get(k, 0) + c * d
        return TensorSeries(self.__alphabet, terms, n)

    def __rmul__(self, c: Any) -> 'TensorSeries':
        return self.scale(c)

    def __truediv__(self, c: Any) -> 'TensorSeries':
        return self.scale(1 / rational(c))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorSeries):
            return NotImplemented
        return self.__alphabet == other.__alphabet and self.__terms == other.__terms

    def __str__(self) -> str:
        if not self.__terms:
            return '0'
        weight = self.__alphabet.weight
        parts = []
        for w in sorted(self.__terms, key=lambda w: (weight(w), w)):
            c = self.__terms[w]
            body = self.__alphabet.render(w) or '1'
            if not w:
                text = f'{c}'
            elif c == 1:
                text = body
            elif c == -1:
                text = f'-{body}'
            else:
                text = f'{c} {body}'
            parts.append(text)
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self) -> str:
        return f'TensorSeries({self})'


@same_alphabet()
def series_mul(x: TensorSeries, y: TensorSeries) -> TensorSeries:
    """
    级数乘法。
    """
    return x * y
