# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
树状 Jacobi 图、交错次数与同构 η / η⁻¹。

树图以有根表示 `(根颜色, 嵌套括号)` 存储；AS/IHX 商上的相等性通过 η 像判断。

>>> t = TreeDiagram(2, 'a1', ('b1', 'b2'))
>>> str(eta(t))
'(1)·a1⊗[b1,b2] + (1)·b1⊗[b2,a1] - (1)·b2⊗[b1,a1]'
>>> xi_of_eta_check(t)
True
"""

import random

from functools import cached_property
from typing import Any, Dict, List, Mapping, Optional, Tuple, Iterator

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import multiset_permutations

from xtorelli.toolkit.errors import (MalformedInputError, NotInImageError, ConsistencyError,
                                     GenusMismatchError)
from xtorelli.toolkit.expansion import Expansion
from xtorelli.toolkit.grammar import parse_diagram
from xtorelli.toolkit.johnson import (Derivation, DerivationElement, DERIVATION_KINDS, tau_alt,
                                      tau_classical, tau_levine)
from xtorelli.toolkit.lie import LieElement, bracket, bracketing, is_lyndon
from xtorelli.toolkit.tensor import WeightedAlphabet
from xtorelli.toolkit.utils import join_signed, rational
from xtorelli.toolkit.words import SurfaceEndo


def _leaves(node: Any) -> List[str]:
    if isinstance(node, str):
        return [node]
    return _leaves(node[0]) + _leaves(node[1])


def _render(node: Any) -> str:
    if isinstance(node, str):
        return node
    return f'[{_render(node[0])},{_render(node[1])}]'


class TreeDiagram(object):
    """
    有根表示的树状 Jacobi 图；两条腿时为 strut。
    """
    def __init__(self, genus: int, root: str, tree: Any):
        """
        :param genus: 亏格。
        :param root: 根腿的颜色。
        :param tree: 其余腿的平面二叉树，叶子为颜色，内部顶点为二元组。
        """
        colors = {f'a{i}' for i in range(1, genus + 1)} | {f'b{i}' for i in range(1, genus + 1)}
        legs = [root] + _leaves(tree)
        for c in legs:
            if c not in colors:
                raise MalformedInputError(f'color: {c}, genus: {genus}')
        self.__genus = genus
        self.__root = root
        self.__tree = tree
        self.__legs = legs

    @classmethod
    def strut(cls, genus: int, x: str, y: str) -> 'TreeDiagram':
        return cls(genus, x, y)

    @classmethod
    def parse(cls, text: str, genus: int) -> 'TreeDiagram':
        """
        >>> str(TreeDiagram.parse('tree(root=a1; [b1,b2])', 2))
        'tree(root=a1; [b1,b2])'
        """
        root, tree = parse_diagram(text)
        return cls(genus, root, tree)

    @property
    def genus(self) -> int:
        return self.__genus

    @property
    def root(self) -> str:
        return self.__root

    @property
    def tree(self) -> Any:
        return self.__tree

    @property
    def legs(self) -> List[str]:
        """
        全部腿的颜色，根在最前。
        """
        return list(self.__legs)

    def is_strut(self) -> bool:
        return isinstance(self.__tree, str)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeDiagram):
            return NotImplemented
        return (self.__genus, self.__root, self.__tree) == (other.__genus, other.__root,
                                                             other.__tree)

    def __hash__(self) -> int:
        return hash((self.__genus, self.__root, self.__tree))

    def __str__(self) -> str:
        if self.is_strut():
            return f'strut({self.__root},{self.__tree})'
        return f'tree(root={self.__root}; {_render(self.__tree)})'

    def __repr__(self) -> str:
        return f'TreeDiagram({self})'


def a_deg(t: TreeDiagram) -> int:
    """
    2·#A + #B − 3。

    >>> a_deg(TreeDiagram.strut(1, 'a1', 'a1'))
    1
    >>> a_deg(TreeDiagram(2, 'a1', (('a2', 'b1'), 'b2')))
    3
    """
    legs = t.legs
    n_a = sum(1 for c in legs if c.startswith('a'))
    return 2 * n_a + (len(legs) - n_a) - 3


def internal_degree(t: TreeDiagram) -> int:
    """
    三价顶点个数。
    """
    return len(t.legs) - 2


def level_of(t: TreeDiagram, kind: str = 'alt') -> int:
    """
    η(t) 所在导子空间的次数。
    """
    return a_deg(t) if kind == 'alt' else internal_degree(t)


def _derivation_class(kind: str) -> type:
    if kind not in DERIVATION_KINDS:
        raise MalformedInputError(f'kind: {kind}')
    return DERIVATION_KINDS[kind]


def _lie(node: Any, alphabet: WeightedAlphabet) -> LieElement:
    if isinstance(node, str):
        return LieElement.letter(alphabet, node)
    return bracket(_lie(node[0], alphabet), _lie(node[1], alphabet))


def _reroot(node: Any, outside: Any) -> Iterator[Tuple[str, Any]]:
    """
    以每片叶子为新根，返回 `(颜色, 其余部分的嵌套括号)`；
    [X, Y] 在外部 O 下，X 的外部为 [Y, O]，Y 的外部为 [O, X]。
    """
    if isinstance(node, str):
        yield node, outside
        return
    x, y = node
    yield from _reroot(x, (y, outside))
    yield from _reroot(y, (outside, x))


def _check_kind(t: TreeDiagram, kind: str) -> None:
    if kind == 'levine' and any(c.startswith('a') for c in t.legs):
        raise MalformedInputError(f'A-colored leg in Levine diagram: {t}')
    if kind == 'alt' and a_deg(t) < 0:
        raise MalformedInputError(f'strut with both legs in B: {t}')


def eta(t: Any, kind: str = 'alt') -> Derivation:
    """
    η(T) = Σ_v color(v) ⊗ (T 以 v 为根)；也接受 DiagramElement。

    :param t: 树图或图元素。
    :param kind: `alt`、`classical` 或 `levine`。
    """
    if isinstance(t, DiagramElement):
        return t.eta_image
    if len(t.legs) < 2:
        raise MalformedInputError(f'legs: {t.legs}')
    _check_kind(t, kind)
    cls = _derivation_class(kind)
    A = cls.alphabet_for(t.genus)
    parts: Dict[str, LieElement] = {}

    def add(leg: str, node: Any) -> None:
        x = _lie(node, A)
        parts[leg] = parts[leg] + x if leg in parts else x

    add(t.root, t.tree)
    for color, rest in _reroot(t.tree, t.root):
        add(color, rest)
    return cls(t.genus, level_of(t, kind), parts)


def xi_of_eta_check(t: TreeDiagram, kind: str = 'alt') -> bool:
    """
    Ξ(η(t)) = 0；对任意树图恒成立。
    """
    return eta(t, kind).xi().is_zero()


class DiagramElement(object):
    """
    树图的有理线性组合；相等性即 η 像相等。
    """
    def __init__(
        self,
        genus: int,
        terms: Optional[Mapping[TreeDiagram, Any]] = None,
        kind: str = 'alt'
    ):
        """
        :param genus: 亏格。
        :param terms: 树图 → 系数。
        :param kind: `alt`、`classical` 或 `levine`。
        """
        _derivation_class(kind)
        self.__genus = genus
        self.__kind = kind
        self.__terms: Dict[TreeDiagram, Any] = {}
        for t, c in (terms or {}).items():
            if t.genus != genus:
                raise GenusMismatchError(f'genera: {[genus, t.genus]}')
            _check_kind(t, kind)
            c = rational(c) + self.__terms.get(t, 0)
            if c == 0:
                self.__terms.pop(t, None)
            else:
                self.__terms[t] = c

    @classmethod
    def zero(cls, genus: int, kind: str = 'alt') -> 'DiagramElement':
        return cls(genus, {}, kind)

    @classmethod
    def single(cls, t: TreeDiagram, c: Any = 1, kind: str = 'alt') -> 'DiagramElement':
        return cls(t.genus, {t: c}, kind)

    @property
    def genus(self) -> int:
        return self.__genus

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def terms(self) -> Dict[TreeDiagram, Any]:
        return dict(self.__terms)

    def levels(self) -> List[int]:
        return sorted({level_of(t, self.__kind) for t in self.__terms})

    @cached_property
    def eta_image(self) -> Derivation:
        cls = _derivation_class(self.__kind)
        levels = self.levels()
        if len(levels) > 1:
            raise MalformedInputError(f'inhomogeneous diagram element: levels {levels}')
        total = cls(self.__genus, levels[0] if levels else 0)
        for t, c in self.__terms.items():
            total = total + eta(t, self.__kind) * c
        return total

    def _check(self, other: 'DiagramElement') -> None:
        if self.__genus != other.__genus or self.__kind != other.__kind:
            raise MalformedInputError(f'{self!r} vs {other!r}')

    def __add__(self, other: 'DiagramElement') -> 'DiagramElement':
        self._check(other)
        terms = dict(self.__terms)
        for t, c in other.__terms.items():
            terms[t] = terms.get(t, 0) + c
        return DiagramElement(self.__genus, terms, self.__kind)

    def __neg__(self) -> 'DiagramElement':
        return self * -1

    def __sub__(self, other: 'DiagramElement') -> 'DiagramElement':
        return self + (-other)

    def __mul__(self, c: Any) -> 'DiagramElement':
        c = rational(c)
        return DiagramElement(self.__genus, {t: v * c for t, v in self.__terms.items()},
                              self.__kind)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagramElement):
            return NotImplemented
        if self.__genus != other.__genus or self.__kind != other.__kind:
            return False
        return self.eta_image == other.eta_image

    def __str__(self) -> str:
        ordered = sorted(self.__terms, key=lambda t: (len(t.legs), t.legs, str(t)))
        return join_signed([(self.__terms[t], str(t)) for t in ordered])

    def __repr__(self) -> str:
        return f'DiagramElement({self})'


def _candidates(genus: int, colors: Tuple[int, ...], A: WeightedAlphabet) -> List[TreeDiagram]:
    """
    颜色多重集上的有根表示 (c, Lyndon 字 w)，w 取遍去掉 c 后的多重集。
    """
    symbols = A.symbols
    out = []
    for c in sorted(set(colors)):
        rest = list(colors)
        rest.remove(c)
        for w in multiset_permutations(rest):
            w = tuple(w)
            if not is_lyndon(w):
                continue
            tree = _nested_symbols(bracketing(w), symbols)
            out.append(TreeDiagram(genus, symbols[c], tree))
    return out


def _nested_symbols(node: Any, symbols: Tuple[str, ...]) -> Any:
    if isinstance(node, int):
        return symbols[node]
    return (_nested_symbols(node[0], symbols), _nested_symbols(node[1], symbols))


def lyndon_word(t: TreeDiagram, kind: str = 'alt') -> Optional[str]:
    """
    有根表示 (c, w) 中的 Lyndon 字 w（按 `kind` 的字母表序渲染）；
    树不是其叶子字的标准括号化时返回 None。

    >>> lyndon_word(TreeDiagram(2, 'a1', ('b1', 'a2')))
    'b1.a2'
    >>> lyndon_word(TreeDiagram(2, 'a1', ('a2', 'b1'))) is None
    True
    """
    A = _derivation_class(kind).alphabet_for(t.genus)
    w = tuple(A.index(c) for c in _leaves(t.tree))
    if is_lyndon(w) and _nested_symbols(bracketing(w), A.symbols) == t.tree:
        return A.render(w)
    return None


def from_lyndon(genus: int, root: str, word: str, kind: str = 'alt') -> TreeDiagram:
    """
    由根颜色与 Lyndon 字重建树图，`lyndon_word` 的逆。

    >>> str(from_lyndon(2, 'a1', 'b1.b1.a2'))
    'tree(root=a1; [b1,[b1,a2]])'
    """
    A = _derivation_class(kind).alphabet_for(genus)
    w = A.parse(word)
    if not w or not is_lyndon(w):
        raise MalformedInputError(f'not a lyndon word: {word!r}')
    return TreeDiagram(genus, root, _nested_symbols(bracketing(w), A.symbols))


def lyndon_form(e: DiagramElement) -> DiagramElement:
    """
    改写为只含有根 Lyndon 表示的等价元素；已是该形式时原样返回。
    """
    if all(lyndon_word(t, e.kind) is not None for t in e.terms):
        return e
    return eta_inverse(e.eta_image)


def _solve(
    target: Mapping[Tuple[str, tuple], Any],
    candidates: List[TreeDiagram],
    kind: str
) -> Dict[TreeDiagram, Any]:
    """
    在 QQ 上做 Gauss-Jordan 消元求 Σ x_T·η(T) = target，自由变量取 0。
    """
    columns = [eta(t, kind).coordinates() for t in candidates]
    rows: Dict[Tuple[str, tuple], int] = {}
    for coords in columns + [dict(target)]:
        for key in coords:
            rows.setdefault(key, len(rows))
    n, k = len(rows), len(candidates)
    dense = [[QQ(0)] * (k + 1) for _ in range(n)]
    for j, coords in enumerate(columns):
        for key, c in coords.items():
            dense[rows[key]][j] = rational(c)
    for key, c in target.items():
        dense[rows[key]][k] = rational(c)
    reduced, pivots = DomainMatrix(dense, (n, k + 1), QQ).rref()
    if k in pivots:
        raise ConsistencyError(f'inconsistent system: {n} rows, {k} candidates')
    values = reduced.to_Matrix()
    return {candidates[j]: rational(values[r, k]) for r, j in enumerate(pivots)}


def eta_inverse(d: Derivation) -> DiagramElement:
    """
    η⁻¹：按颜色多重集分块，在有根 Lyndon 表示张成的候选集上解线性方程组。

    >>> from xtorelli.toolkit.lie import LieElement
    >>> from xtorelli.toolkit.tensor import ba_alphabet
    >>> a1 = LieElement.letter(ba_alphabet(1), 'a1')
    >>> str(eta_inverse(DerivationElement(1, 1, {'a1': -a1})))
    '-(1/2)·strut(a1,a1)'
    """
    kind = d.kind
    if not d.xi().is_zero():
        raise NotInImageError(f'xi != 0: {d.xi()}')
    A = d.alphabet
    blocks: Dict[Tuple[int, ...], Dict[Tuple[str, tuple], Any]] = {}
    for (leg, w), c in d.coordinates().items():
        colors = tuple(sorted((A.index(leg),) + tuple(w)))
        blocks.setdefault(colors, {})[(leg, w)] = c
    terms: Dict[TreeDiagram, Any] = {}
    for colors, target in blocks.items():
        solution = _solve(target, _candidates(d.genus, colors, A), kind)
        terms.update(solution)
    return DiagramElement(d.genus, terms, kind)


def diagrammatic_tau_alt(h: SurfaceEndo, m: int,
                         expansion: Optional[Expansion] = None) -> DiagramElement:
    """
    η⁻¹ ∘ τ_m^a。

    >>> from xtorelli.toolkit.words import twist_library
    >>> str(diagrammatic_tau_alt(twist_library(1)['t_a1'], 1))
    '-(1/2)·strut(a1,a1)'
    """
    return eta_inverse(tau_alt(h, m, expansion))


def diagrammatic_tau_classical(h: SurfaceEndo, m: int,
                               expansion: Optional[Expansion] = None) -> DiagramElement:
    return eta_inverse(tau_classical(h, m, expansion))


def diagrammatic_tau_levine(h: SurfaceEndo, m: int,
                            expansion: Optional[Expansion] = None) -> DiagramElement:
    return eta_inverse(tau_levine(h, m, expansion))


def _random_bracket(leaves: List[str], rng: random.Random) -> Any:
    if len(leaves) == 1:
        return leaves[0]
    cut = rng.randint(1, len(leaves) - 1)
    return (_random_bracket(leaves[:cut], rng), _random_bracket(leaves[cut:], rng))


def random_tree(
    genus: int,
    level: int,
    rng: random.Random,
    kind: str = 'alt'
) -> TreeDiagram:
    """
    随机生成给定次数的树图（随机颜色、随机根与随机括号化）。
    """
    if kind == 'alt':
        shapes = [(n_a, level + 3 - 2 * n_a) for n_a in range(0, (level + 3) // 2 + 1)]
        shapes = [(n_a, n_b) for n_a, n_b in shapes if n_b >= 0 and n_a + n_b >= 2
                  and not (n_a == 0 and n_a + n_b == 2)]
        if not shapes:
            raise MalformedInputError(f'level: {level}')
        n_a, n_b = rng.choice(shapes)
    else:
        n_a, n_b = 0, level + 2
        if kind == 'classical':
            n_a = rng.randint(0, n_b)
            n_b -= n_a
    colors = ([f'a{rng.randint(1, genus)}' for _ in range(n_a)]
              + [f'b{rng.randint(1, genus)}' for _ in range(n_b)])
    rng.shuffle(colors)
    return TreeDiagram(genus, colors[0], _random_bracket(colors[1:], rng))


def random_diagram(
    genus: int,
    level: int,
    rng: random.Random,
    kind: str = 'alt',
    size: int = 3
) -> DiagramElement:
    """
    随机树图的随机有理组合。
    """
    terms: Dict[TreeDiagram, Any] = {}
    for _ in range(size):
        t = random_tree(genus, level, rng, kind)
        terms[t] = terms.get(t, 0) + rng.choice((-2, -1, 1, 2, QQ(1, 2)))
    return DiagramElement(genus, terms, kind)
