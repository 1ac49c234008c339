# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
指数/对数与 Magnus 型展开 θ: π → T̂。

展开由生成元像的对数（李元素）给出，θ(x) = exp(log)，因此总是群元。
"""

import random

from typing import Dict, Mapping, Optional

from xtorelli.toolkit.errors import ConstantTermError, MembershipError, WeightMismatchError
from xtorelli.toolkit.lie import (LieElement, lyndon_basis, to_tensor,
                                  from_primitive_tensor, dynkin_defect)
from xtorelli.toolkit.tensor import (WeightedAlphabet, TensorSeries, series_mul,
                                     h_alphabet, ba_alphabet, b_alphabet)
from xtorelli.toolkit.utils import same_genus, rational
from xtorelli.toolkit.words import Generator, FreeWord, generators


__all__ = ['series_mul', 'exp', 'log', 'inverse', 'Expansion', 'evaluate',
           'default_alt_expansion', 'classical_expansion', 'handlebody_expansion',
           'perturbed_alt_expansion', 'is_grouplike', 'leading_class', 'defect_degree']


def _degree_bound(x: TensorSeries) -> int:
    if x.truncation is None:
        raise WeightMismatchError('series without truncation')
    return x.truncation


def exp(x: TensorSeries) -> TensorSeries:
    """
    exp(x)，要求常数项为 0；按 Horner 形式 1 + x(1 + x/2(1 + x/3(…))) 计算。

    >>> A = ba_alphabet(1)
    >>> str(exp(TensorSeries.letter(A, 'a1', 4)))
    '1 + a1 + 1/2 a1.a1'
    """
    if x.constant != 0:
        raise ConstantTermError(f'constant: {x.constant}')
    n = _degree_bound(x)
    s = TensorSeries.zero(x.alphabet, n)
    for depth in range(n, 0, -1):
        s = x + (x * s) / (depth + 1)
    return TensorSeries.one(x.alphabet, n) + s


def log(x: TensorSeries) -> TensorSeries:
    """
    log(x)，要求常数项为 1；y = x − 1，log = y − y(y/2 − y(y/3 − …))。
    """
    if x.constant != 1:
        raise ConstantTermError(f'constant: {x.constant}')
    n = _degree_bound(x)
    y = x - TensorSeries.one(x.alphabet, n)
    s = t = TensorSeries.zero(x.alphabet, n)
    for depth in range(n, 0, -1):
        t = y * s
        if depth > 1:
            s = y / depth - t
    return y - t


def inverse(x: TensorSeries) -> TensorSeries:
    """
    群元的逆 exp(−log x)。
    """
    return exp(-log(x))


class Expansion(object):
    """
    乘性展开，由每个生成元像的对数确定。
    """
    def __init__(
        self,
        genus: int,
        alphabet: WeightedAlphabet,
        truncation: int,
        logs: Mapping[Generator, Optional[LieElement]],
        name: str = ''
    ):
        """
        :param genus: 亏格。
        :param alphabet: 字母表。
        :param truncation: 截断权重。
        :param logs: 生成元 → log θ(生成元)，None 表示像为 1。
        :param name: 名称。
        """
        self.__genus = genus
        self.__alphabet = alphabet
        self.__truncation = truncation
        self.__name = name
        self.__logs: Dict[Generator, Optional[TensorSeries]] = {}
        for gen in generators(genus):
            lg = logs.get(gen)
            self.__logs[gen] = None if lg is None or lg.is_zero() else to_tensor(lg, truncation)
        self.__powers: Dict[tuple, TensorSeries] = {}

    @property
    def genus(self) -> int:
        return self.__genus

    @property
    def alphabet(self) -> WeightedAlphabet:
        return self.__alphabet

    @property
    def truncation(self) -> int:
        return self.__truncation

    @property
    def name(self) -> str:
        return self.__name

    def power(self, gen: Generator, k: int) -> TensorSeries:
        """
        θ(gen)^k = exp(k·log θ(gen))。
        """
        key = (gen, k)
        if key not in self.__powers:
            lg = self.__logs[gen]
            if lg is None:
                self.__powers[key] = TensorSeries.one(self.__alphabet, self.__truncation)
            else:
                self.__powers[key] = exp(lg.scale(k))
        return self.__powers[key]

    def image(self, gen: Generator) -> TensorSeries:
        return self.power(gen, 1)

    def __repr__(self) -> str:
        return f"Expansion(name='{self.__name}', genus={self.__genus}, truncation={self.__truncation})"


@same_genus()
def evaluate(e: Expansion, w: FreeWord) -> TensorSeries:
    """
    θ(w)：沿 w 依次乘上生成元像的幂。
    """
    result = TensorSeries.one(e.alphabet, e.truncation)
    for gen, k in w.runs:
        result = result * e.power(gen, k)
    return result


def _letter_logs(genus: int, alphabet: WeightedAlphabet,
                 alpha: bool = True) -> Dict[Generator, Optional[LieElement]]:
    logs: Dict[Generator, Optional[LieElement]] = {}
    for gen in generators(genus):
        symbol = str(gen)
        if gen.kind == 'alpha' and not alpha:
            logs[gen] = None
        else:
            logs[gen] = LieElement.letter(alphabet, symbol)
    return logs


def default_alt_expansion(genus: int, truncation: int) -> Expansion:
    """
    θ(αᵢ) = exp(aᵢ)，θ(βᵢ) = exp(bᵢ)，BA 字母表。

    >>> e = default_alt_expansion(1, 4)
    >>> str(e.image(Generator('alpha', 1)))
    '1 + a1 + 1/2 a1.a1'
    """
    if truncation < 2:
        raise WeightMismatchError(f'truncation: {truncation}')
    A = ba_alphabet(genus)
    return Expansion(genus, A, truncation, _letter_logs(genus, A), 'default-alt')


def classical_expansion(genus: int, truncation: int) -> Expansion:
    """
    H 字母表上的 θ(x) = exp(x)。
    """
    if truncation < 1:
        raise WeightMismatchError(f'truncation: {truncation}')
    A = h_alphabet(genus)
    return Expansion(genus, A, truncation, _letter_logs(genus, A), 'classical')


def handlebody_expansion(genus: int, truncation: int) -> Expansion:
    """
    与 ι_# 复合：αᵢ ↦ 1，βᵢ ↦ exp(bᵢ)，B 字母表。

    >>> e = handlebody_expansion(1, 3)
    >>> str(evaluate(e, FreeWord.parse('b1 a1 b1^-1', 1)))
    '1'
    """
    if truncation < 1:
        raise WeightMismatchError(f'truncation: {truncation}')
    A = b_alphabet(genus)
    return Expansion(genus, A, truncation, _letter_logs(genus, A, alpha=False), 'handlebody')


def _random_lie(alphabet: WeightedAlphabet, low: int, high: int,
                rng: random.Random) -> LieElement:
    terms = {}
    for m in range(low, high + 1):
        basis = lyndon_basis(alphabet, m)
        for w in rng.sample(basis, min(2, len(basis))):
            terms[w] = rng.choice((-2, -1, 1, 2, rational(1) / 2))
    return LieElement(alphabet, terms)


def perturbed_alt_expansion(genus: int, truncation: int, seed: int = 0) -> Expansion:
    """
    随机扰动的交错展开：θ(αᵢ) = exp(aᵢ + 权重 ≥ 3 的随机李项)，
    θ(βᵢ) = exp(bᵢ + 权重 ≥ 2 的随机李项)。分次层面与默认展开一致。
    """
    if truncation < 2:
        raise WeightMismatchError(f'truncation: {truncation}')
    rng = random.Random(seed)
    A = ba_alphabet(genus)
    logs = _letter_logs(genus, A)
    for gen in generators(genus):
        low = 3 if gen.kind == 'alpha' else 2
        logs[gen] = logs[gen] + _random_lie(A, low, truncation, rng)
    return Expansion(genus, A, truncation, logs, f'perturbed({seed})')


def is_grouplike(x: TensorSeries) -> bool:
    """
    log(x) 的每个字长分量都通过 Dynkin 判别时为真。

    >>> A = h_alphabet(1)
    >>> is_grouplike(TensorSeries(A, {(): 1, (0, 1): 1}, 3))
    False
    """
    return dynkin_defect(log(x)) is None


def defect_degree(e: Expansion, w: FreeWord) -> Optional[int]:
    """
    log θ(w) 的最低非零权重，截断内为零时返回 None。
    """
    weights = log(evaluate(e, w)).weights()
    return weights[0] if weights else None


def leading_class(
    e: Expansion,
    w: FreeWord,
    m: int,
    label: Optional[str] = None
) -> LieElement:
    """
    w 在第 m 个分次商中的类：log θ(w) 的权重 m 齐次部分；
    更低权重非零时抛出 MembershipError。

    :param e: 展开。
    :param w: 字。
    :param m: 声称的次数。
    :param label: 出错时报告的名称（如 `b1-defect`）。

    >>> e = default_alt_expansion(1, 3)
    >>> str(leading_class(e, FreeWord.parse('a1', 1), 2))
    '1·a1'
    >>> str(leading_class(e, FreeWord.parse('a1 b1^-1 a1^-1 b1', 1), 3))
    '1·[b1,a1]'
    """
    if e.truncation < m:
        raise WeightMismatchError(f'truncation: {e.truncation} < degree: {m}')
    lg = log(evaluate(e, w))
    for d in lg.weights():
        if d >= m:
            break
        bad = lg.homogeneous(d)
        raise MembershipError(f'{label or w}: nonzero at weight {d}',
                              generator=label or str(w), degree=d, slice=bad)
    return from_primitive_tensor(lg.homogeneous(m))
