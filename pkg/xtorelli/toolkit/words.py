# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
自由群 π = π₁(Σ_{g,1}) 的字运算、曲面自同态以及 Dehn 扭转库。

约定：
    换位子 [u, v] = u v u⁻¹ v⁻¹；
    复合 (f∘h)(x) = f(h(x))；
    边界词 ζ = ∏ [βᵢ⁻¹, αᵢ]。

>>> g = 2
>>> str(boundary_word(g))
'b1^-1 a1 b1 a1^-1 b2^-1 a2 b2 a2^-1'
>>> lib = twist_library(g)
>>> str(apply_endo(lib['t_a1'], FreeWord.parse('b1', g)))
'a1^-1 b1'
"""

import random
import itertools

from functools import lru_cache, cached_property
from typing import (NamedTuple, Literal, Dict, Iterable, Iterator, Tuple, Optional,
                    List, Mapping, Sequence, Callable)

from xtorelli.toolkit.errors import MalformedInputError
from xtorelli.toolkit.utils import same_genus


class Generator(NamedTuple):
    """
    自由生成元 αᵢ / βᵢ。
    """
    kind: Literal['alpha', 'beta']
    index: int

    def __str__(self) -> str:
        return f"{'a' if self.kind == 'alpha' else 'b'}{self.index}"

    @classmethod
    def parse(cls, symbol: str) -> 'Generator':
        """
        解析 `a1` / `b2` 形式的符号。

        >>> Generator.parse('b2')
        Generator(kind='beta', index=2)
        """
        if len(symbol) < 2 or symbol[0] not in 'ab' or not symbol[1:].isdigit():
            raise MalformedInputError(f'generator: {symbol}')
        return cls('alpha' if symbol[0] == 'a' else 'beta', int(symbol[1:]))


Run = Tuple[Generator, int]


def generators(genus: int) -> List[Generator]:
    """
    按 α₁..α_g, β₁..β_g 顺序返回全部生成元。
    """
    return ([Generator('alpha', i) for i in range(1, genus + 1)]
            + [Generator('beta', i) for i in range(1, genus + 1)])


def _push(stack: List[Run], gen: Generator, exp: int) -> None:
    """
    把一段 `gen^exp` 压入已约化的游程栈并就地约化。
    """
    if not exp:
        return
    if stack and stack[-1][0] == gen:
        exp += stack.pop()[1]
        if exp:
            stack.append((gen, exp))
    else:
        stack.append((gen, exp))


class FreeWord(object):
    """
    π 中的既约字，按指数游程存储，相等性只比较约化形式。
    """
    def __init__(self, runs: Iterable[Run] = (), genus: int = 1):
        """
        :param runs: `(生成元, 非零整数指数)` 序列，不要求已约化。
        :param genus: 亏格。
        """
        if genus < 1:
            raise MalformedInputError(f'genus: {genus}')
        stack: List[Run] = []
        for gen, exp in runs:
            if not 1 <= gen.index <= genus:
                raise MalformedInputError(f'generator: {gen}, genus: {genus}')
            _push(stack, gen, int(exp))
        self.__runs = tuple(stack)
        self.__genus = genus

    @classmethod
    def _trusted(cls, runs: List[Run], genus: int) -> 'FreeWord':
        """
        由已约化、已校验的游程直接构造。
        """
        w = cls.__new__(cls)
        w.__runs = tuple(runs)
        w.__genus = genus
        return w

    @classmethod
    def identity(cls, genus: int) -> 'FreeWord':
        return cls((), genus)

    @classmethod
    def letter(cls, symbol: str, genus: int, exp: int = 1) -> 'FreeWord':
        """
        单个生成元的幂。

        >>> str(FreeWord.letter('a1', 2, -2))
        'a1^-2'
        """
        return cls([(Generator.parse(symbol), exp)], genus)

    @classmethod
    def parse(cls, text: str, genus: int) -> 'FreeWord':
        """
        解析 `a1 b2^-1 a1^2` 语法，`1` 或空串为单位元。

        >>> str(FreeWord.parse('b2 a1 a1^-1 b2', 2))
        'b2^2'
        """
        from xtorelli.toolkit.grammar import parse_free_word
        return cls(parse_free_word(text), genus)

    @property
    def genus(self) -> int:
        """
        亏格。
        """
        return self.__genus

    @property
    def runs(self) -> Tuple[Run, ...]:
        """
        约化后的指数游程。
        """
        return self.__runs

    @property
    def letters(self) -> List[Run]:
        """
        展开为指数 ±1 的字母序列。
        """
        out = []
        for gen, exp in self.__runs:
            out.extend([(gen, 1 if exp > 0 else -1)] * abs(exp))
        return out

    def is_identity(self) -> bool:
        return not self.__runs

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.__runs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.__genus == other.__genus and self.__runs == other.__runs

    def __hash__(self) -> int:
        return hash((self.__genus, self.__runs))

    def __mul__(self, other: 'FreeWord') -> 'FreeWord':
        return multiply(self, other)

    def __pow__(self, k: int) -> 'FreeWord':
        base = self if k >= 0 else invert(self)
        stack: List[Run] = []
        for _ in range(abs(k)):
            for gen, exp in base.runs:
                _push(stack, gen, exp)
        return FreeWord._trusted(stack, self.__genus)

    def __str__(self) -> str:
        if not self.__runs:
            return '1'
        return ' '.join(str(g) if e == 1 else f'{g}^{e}' for g, e in self.__runs)

    def __repr__(self) -> str:
        return f"FreeWord('{self}', genus={self.__genus})"


def reduce(letters: Iterable[Run], genus: int) -> FreeWord:
    """
    自由约化。

    >>> a, b = Generator('alpha', 1), Generator('beta', 2)
    >>> str(reduce([(b, 1), (a, 1), (a, -1), (b, 1)], 2))
    'b2^2'
    >>> str(reduce([(a, 1), (a, -1)], 2))
    '1'
    """
    return FreeWord(letters, genus)


@same_genus()
def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    """
    乘积 uv。
    """
    stack = list(u.runs)
    for gen, exp in v.runs:
        _push(stack, gen, exp)
    return FreeWord._trusted(stack, u.genus)


def invert(u: FreeWord) -> FreeWord:
    """
    逆元 u⁻¹。
    """
    return FreeWord._trusted([(g, -e) for g, e in reversed(u.runs)], u.genus)


@same_genus()
def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """
    换位子 [u, v] = u v u⁻¹ v⁻¹。

    >>> g = 1
    >>> str(commutator(FreeWord.parse('b1^-1', g), FreeWord.parse('a1', g)))
    'b1^-1 a1 b1 a1^-1'
    """
    return multiply(multiply(u, v), multiply(invert(u), invert(v)))


def boundary_word(genus: int) -> FreeWord:
    """
    边界词 ζ = ∏ᵢ [βᵢ⁻¹, αᵢ]。
    """
    if genus < 1:
        raise MalformedInputError(f'genus: {genus}')
    runs = []
    for i in range(1, genus + 1):
        a, b = Generator('alpha', i), Generator('beta', i)
        runs += [(b, -1), (a, 1), (b, 1), (a, -1)]
    return FreeWord(runs, genus)


def abelianize(w: FreeWord) -> Tuple[int, ...]:
    """
    在基 (a₁..a_g, b₁..b_g) 下的同调类。

    >>> abelianize(FreeWord.parse('a1^-1 b1 a2 a1', 2))
    (0, 1, 1, 0)
    """
    g = w.genus
    vec = [0] * (2 * g)
    for gen, exp in w.runs:
        vec[gen.index - 1 + (0 if gen.kind == 'alpha' else g)] += exp
    return tuple(vec)


class SurfaceEndo(object):
    """
    π 的自同态，由 2g 个生成元的像决定；映射类 h 对应 h_#。
    """
    def __init__(
        self,
        genus: int,
        images: Mapping[Generator, FreeWord],
        label: str = '',
        inverse: Optional[Callable[[], Optional['SurfaceEndo']]] = None
    ):
        """
        :param genus: 亏格。
        :param images: 生成元的像，缺省的生成元映到自身。
        :param label: 名称。
        :param inverse: 返回逆映射的函数（已知时）。
        """
        self.__genus = genus
        self.__images: Dict[Generator, FreeWord] = {}
        for gen in generators(genus):
            img = images.get(gen)
            if img is None:
                img = FreeWord([(gen, 1)], genus)
            if img.genus != genus:
                raise MalformedInputError(f'image of {gen}: genus {img.genus} != {genus}')
            self.__images[gen] = img
        for gen in images:
            if gen not in self.__images:
                raise MalformedInputError(f'generator: {gen}, genus: {genus}')
        self.__label = label
        self.__inverse = inverse

    @property
    def genus(self) -> int:
        """
        亏格。
        """
        return self.__genus

    @property
    def label(self) -> str:
        """
        名称。
        """
        return self.__label

    @property
    def images(self) -> Dict[Generator, FreeWord]:
        """
        生成元的像。
        """
        return dict(self.__images)

    def image(self, gen: Generator | str) -> FreeWord:
        """
        单个生成元的像。
        """
        if isinstance(gen, str):
            gen = Generator.parse(gen)
        return self.__images[gen]

    @cached_property
    def validated(self) -> bool:
        """
        是否保持边界词 ζ。
        """
        return validate_mapping_class(self)

    @cached_property
    def inverse(self) -> Optional['SurfaceEndo']:
        """
        逆映射，未知时为 None。
        """
        return self.__inverse() if self.__inverse else None

    def max_image_length(self) -> int:
        return max(len(w) for w in self.__images.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SurfaceEndo):
            return NotImplemented
        return self.__genus == other.__genus and self.__images == other.__images

    def __hash__(self) -> int:
        return hash((self.__genus, tuple(self.__images.values())))

    def __str__(self) -> str:
        return '\n'.join(f'{g} -> {w}' for g, w in self.__images.items())

    def __repr__(self) -> str:
        return f"SurfaceEndo(label='{self.__label}', genus={self.__genus})"


def identity_endo(genus: int) -> SurfaceEndo:
    """
    恒等映射。
    """
    ident = None
    ident = SurfaceEndo(genus, {}, 'id', lambda: ident)
    return ident


@same_genus()
def apply_endo(f: SurfaceEndo, w: FreeWord) -> FreeWord:
    """
    计算 f(w)，即把生成元替换为其像后约化。
    """
    stack: List[Run] = []
    for gen, exp in w.runs:
        img = f.image(gen)
        runs = img.runs if exp > 0 else invert(img).runs
        for _ in range(abs(exp)):
            for g, e in runs:
                _push(stack, g, e)
    return FreeWord._trusted(stack, w.genus)


@same_genus()
def compose_endos(f: SurfaceEndo, h: SurfaceEndo) -> SurfaceEndo:
    """
    复合 f∘h：x ↦ f(h(x))。
    """
    images = {gen: apply_endo(f, w) for gen, w in h.images.items()}

    def inverse() -> Optional[SurfaceEndo]:
        if f.inverse is None or h.inverse is None:
            return None
        return compose_endos(h.inverse, f.inverse)

    label = '*'.join(x for x in (f.label, h.label) if x)
    return SurfaceEndo(f.genus, images, label, inverse)


def endo_power(f: SurfaceEndo, k: int) -> SurfaceEndo:
    """
    f 的 k 次幂，k < 0 时要求逆映射已知。
    """
    if k < 0:
        if f.inverse is None:
            raise MalformedInputError(f'inverse unknown: {f.label}')
        return endo_power(f.inverse, -k)
    result = identity_endo(f.genus)
    for _ in range(k):
        result = compose_endos(result, f)
    return result


def validate_mapping_class(f: SurfaceEndo) -> bool:
    """
    f(ζ) = ζ 时为真。
    """
    zeta = boundary_word(f.genus)
    return apply_endo(f, zeta) == zeta


def boundary_defect(f: SurfaceEndo) -> FreeWord:
    """
    边界缺陷 f(ζ)ζ⁻¹，f 为映射类时为单位元。
    """
    zeta = boundary_word(f.genus)
    return multiply(apply_endo(f, zeta), invert(zeta))


def _pair(
    genus: int,
    name: str,
    images: Mapping[str, FreeWord],
    inverse_images: Mapping[str, FreeWord]
) -> Tuple[SurfaceEndo, SurfaceEndo]:
    """
    构造互逆的一对自同态。
    """
    fwd: SurfaceEndo = None
    bwd: SurfaceEndo = None
    fwd = SurfaceEndo(genus, {Generator.parse(k): v for k, v in images.items()},
                      name, lambda: bwd)
    bwd = SurfaceEndo(genus, {Generator.parse(k): v for k, v in inverse_images.items()},
                      f'{name}^-1', lambda: fwd)
    return fwd, bwd


def _conj(lam: FreeWord, x: FreeWord) -> FreeWord:
    """
    λ⁻¹ x λ。
    """
    return invert(lam) * x * lam


def pair_twist_name(k: int, l: int, genus: int) -> str:
    """
    柄体扭转 t_a<k><l> 的库名称；g ≥ 10 时下标以 ``_`` 分隔，避免 ``t_a112`` 歧义。

    >>> pair_twist_name(1, 2, 3), pair_twist_name(1, 12, 12)
    ('t_a12', 't_a1_12')
    """
    return f't_a{k}{l}' if genus < 10 else f't_a{k}_{l}'


@lru_cache(maxsize=None)
def twist_library(genus: int) -> Dict[str, SurfaceEndo]:
    """
    内置 Dehn 扭转库（含全部逆元 `<name>^-1`）：

    * ``t_a<i>``：沿 αᵢ 的扭转，βᵢ ↦ αᵢ⁻¹βᵢ；
    * ``t_b<i>``：沿 βᵢ 平行曲线的扭转，αᵢ ↦ αᵢβᵢ（不保持 A）；
    * ``r<i>``：第 i 个柄上的旋转 (t_{αᵢ} t_{βᵢ})³，在同调上为 −Id；
    * ``t_a<k><l>``（g ≥ 10 时为 ``t_a<k>_<l>``）：沿同调类 a_k + a_l 的分离柄体扭转，
      r_k ∘ t_c ∘ r_k⁻¹，其中 t_c 沿边界弧 α_k⁻¹ζ_{k+1}⋯ζ_{l−1}β_l⁻¹α_lβ_l；
    * ``t_d``：第 1 个柄被 λ = [α₁, β₁⁻¹] 共轭；
    * ``t_e``：t_ε t_{α_g}⁻¹，λ = β_g⁻¹α_g⁻¹β_g[α_{g−1}, β_{g−1}⁻¹]（g ≥ 2）。

    >>> sorted(twist_library(1))
    ['r1', 'r1^-1', 't_a1', 't_a1^-1', 't_b1', 't_b1^-1', 't_d', 't_d^-1']
    >>> all(e.validated for e in twist_library(2).values())
    True
    """
    if genus < 1:
        raise MalformedInputError(f'genus: {genus}')
    g = genus
    a = lambda i, e=1: FreeWord.letter(f'a{i}', g, e)
    b = lambda i, e=1: FreeWord.letter(f'b{i}', g, e)
    pairs: List[Tuple[SurfaceEndo, SurfaceEndo]] = []

    for i in range(1, g + 1):
        pairs.append(_pair(g, f't_a{i}', {f'b{i}': a(i, -1) * b(i)},
                                         {f'b{i}': a(i) * b(i)}))
    for i in range(1, g + 1):
        pairs.append(_pair(g, f't_b{i}', {f'a{i}': a(i) * b(i)},
                                         {f'a{i}': a(i) * b(i, -1)}))

    rotations: Dict[int, Tuple[SurfaceEndo, SurfaceEndo]] = {}
    for k in range(1, g + 1):
        ta, tai = pairs[k - 1]
        tb, tbi = pairs[g + k - 1]
        fwd = bwd = identity_endo(g)
        for _ in range(3):
            fwd = compose_endos(fwd, compose_endos(ta, tb))
            bwd = compose_endos(compose_endos(tbi, tai), bwd)
        rotations[k] = (fwd, bwd)
        pairs.append(_pair(g, f'r{k}', {str(x): w for x, w in fwd.images.items()},
                                       {str(x): w for x, w in bwd.images.items()}))

    for k in range(1, g + 1):
        for l in range(k + 1, g + 1):
            middle = FreeWord.identity(g)
            for j in range(k + 1, l):
                middle = middle * b(j, -1) * a(j) * b(j) * a(j, -1)
            arc = a(k, -1) * middle * b(l, -1) * a(l) * b(l)
            inv_arc = invert(arc)
            tc = {f'a{k}': _conj(inv_arc, a(k)), f'b{k}': arc * b(k),
                  f'b{l}': b(l) * inv_arc}
            tci = {f'a{k}': _conj(arc, a(k)), f'b{k}': inv_arc * b(k),
                   f'b{l}': b(l) * arc}
            for j in range(k + 1, l):
                for x in (a(j), b(j)):
                    tc[str(x)] = _conj(inv_arc, x)
                    tci[str(x)] = _conj(arc, x)
            rot, rot_inv = rotations[k]
            twist = SurfaceEndo(g, {Generator.parse(s): w for s, w in tc.items()})
            twist_inv = SurfaceEndo(g, {Generator.parse(s): w for s, w in tci.items()})
            fwd = compose_endos(rot, compose_endos(twist, rot_inv))
            bwd = compose_endos(rot, compose_endos(twist_inv, rot_inv))
            pairs.append(_pair(g, pair_twist_name(k, l, g),
                               {str(x): w for x, w in fwd.images.items()},
                               {str(x): w for x, w in bwd.images.items()}))

    lam = a(1) * b(1, -1) * a(1, -1) * b(1)
    pairs.append(_pair(g, 't_d',
                       {'a1': _conj(lam, a(1)), 'b1': _conj(lam, b(1))},
                       {'a1': _conj(invert(lam), a(1)), 'b1': _conj(invert(lam), b(1))}))

    if g >= 2:
        p = g - 1
        lam = (b(g, -1) * a(g, -1) * b(g)
               * a(p) * b(p, -1) * a(p, -1) * b(p))
        pairs.append(_pair(g, 't_e',
                           {f'a{p}': _conj(lam, a(p)), f'b{p}': _conj(lam, b(p)),
                            f'b{g}': a(g) * b(g) * lam},
                           {f'a{p}': _conj(invert(lam), a(p)),
                            f'b{p}': _conj(invert(lam), b(p)),
                            f'b{g}': a(g, -1) * b(g) * invert(lam)}))

    library = {}
    for fwd, bwd in pairs:
        library[fwd.label] = fwd
        library[bwd.label] = bwd
    return library


def library_words(
    genus: int,
    length: int,
    family: str = 'all',
    inverses: bool = False
) -> Iterator[Tuple[str, SurfaceEndo]]:
    """
    枚举给定长度的全部库单词 `(单词文本, 自同态)`，从左到右复合。

    >>> [w for w, _ in library_words(1, 2, 'torelli')]
    ['t_d * t_d']
    """
    lib = twist_library(genus)
    names = library_names(genus, family)
    if inverses:
        names = names + [f'{n}^-1' for n in names]
    for combo in itertools.product(names, repeat=length):
        f = lib[combo[0]]
        for name in combo[1:]:
            f = compose_endos(f, lib[name])
        yield ' * '.join(combo), f


def library_names(genus: int, family: str = 'all') -> List[str]:
    """
    扭转库中某一族的名称（不含逆元）：

    * ``handlebody``：生成 𝒩 的 t_a<i>、t_a<k><l>；
    * ``lagrangian``：再加上 r<i>、t_d、t_e，均保持 A；
    * ``torelli``：t_d、t_e；
    * ``all``：全部。

    >>> library_names(2, 'handlebody')
    ['t_a1', 't_a2', 't_a12']
    """
    names = [n for n in twist_library(genus) if not n.endswith('^-1')]
    families = {
        'handlebody': lambda n: n.startswith('t_a'),
        'lagrangian': lambda n: not n.startswith('t_b'),
        'torelli': lambda n: n in ('t_d', 't_e'),
        'all': lambda n: True
    }
    if family not in families:
        raise MalformedInputError(f'family: {family}')
    return [n for n in names if families[family](n)]


def random_word(genus: int, length: int, rng: random.Random) -> FreeWord:
    """
    随机字（约化前长度为 `length`）。
    """
    gens = generators(genus)
    return FreeWord([(rng.choice(gens), rng.choice((1, -1))) for _ in range(length)], genus)


def random_product(
    library: Mapping[str, SurfaceEndo],
    names: Sequence[str],
    length: int,
    rng: random.Random,
    max_image_length: Optional[int] = None
) -> SurfaceEndo:
    """
    扭转库元素（及其逆）的随机乘积，像的长度超过 `max_image_length` 时重新抽取。
    """
    while True:
        result = None
        for _ in range(length):
            name = rng.choice(list(names))
            if rng.random() < 0.5:
                name = f'{name}^-1'
            f = library[name]
            result = f if result is None else compose_endos(result, f)
        if max_image_length is None or result.max_image_length() <= max_image_length:
            return result
