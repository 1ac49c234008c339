# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
Johnson 型同态与滤链。

* 经典：τ_m: J_m → H ⊗ 𝔏ie_{m+1}(H)；
* Levine：τ_m^L: J_m^L → B ⊗ 𝔏ie_{m+1}(B)；
* 交错：τ_m^a: J_m^a → A ⊗ 𝔏ie_{m+1}(B;A) ⊕ B ⊗ 𝔏ie_{m+2}(B;A)；
* τ_0^a: 𝓛 → 𝒢 = Aut(B) ⋉ Hom(A, Λ²B)。

成员判定只检查 2g 个生成元的缺陷 h(x)x⁻¹：诱导的 T̂ 自同构是乘性的，
生成元上模某次数为恒等即整体如此；K₂ 的条件只需检查 αᵢ。

>>> lib = twist_library(2)
>>> str(tau_alt(lib['t_a1'], 1))
'-(1)·a1⊗a1'
>>> membership_alt(lib['t_d'], 2)
True
"""

from typing import Dict, Mapping, Optional, Any, List, Tuple

from sympy import ImmutableMatrix, eye, zeros

from xtorelli.toolkit.common import TRUNCATION_SHIFT
from xtorelli.toolkit.errors import (MalformedInputError, WeightMismatchError,
                                     AlphabetMismatchError, MembershipError,
                                     NotLagrangianError, ConsistencyError, ValidationError)
from xtorelli.toolkit.expansion import (Expansion, evaluate, log, leading_class, defect_degree,
                                        default_alt_expansion, classical_expansion,
                                        handlebody_expansion)
from xtorelli.toolkit.lie import LieElement, bracket, substitute, from_primitive_tensor
from xtorelli.toolkit.tensor import (Word, WeightedAlphabet, h_alphabet, ba_alphabet,
                                     b_alphabet)
from xtorelli.toolkit.utils import same_genus, join_signed, rational
from xtorelli.toolkit.words import (Generator, SurfaceEndo, FreeWord, apply_endo, invert,
                                    abelianize, boundary_defect, generators, twist_library)


class Derivation(object):
    """
    导子形张量 Σ x ⊗ part(x) 的基类，x 取遍腿的符号。
    """
    kind = ''

    def __init__(
        self,
        genus: int,
        level: int,
        parts: Optional[Mapping[str, LieElement]] = None,
        symplectic: bool = False
    ):
        """
        :param genus: 亏格。
        :param level: 次数 m。
        :param parts: 腿符号 → 齐次李元素。
        :param symplectic: 是否已验证 xi = 0。
        """
        self.__genus = genus
        self.__level = level
        self.__alphabet = self.alphabet_for(genus)
        self.__symplectic = symplectic
        self.__parts: Dict[str, LieElement] = {}
        legs = self.legs(genus)
        for leg, value in (parts or {}).items():
            if leg not in legs:
                raise MalformedInputError(f'leg: {leg}, kind: {self.kind}')
            if value.alphabet != self.__alphabet:
                raise AlphabetMismatchError(f'{value.alphabet} != {self.__alphabet}')
            if value.is_zero():
                continue
            need = self.part_weight(leg, level)
            if not value.is_homogeneous(need):
                raise WeightMismatchError(f'{leg}: weight {value.weights()} != {need}')
            self.__parts[leg] = value

    @classmethod
    def alphabet_for(cls, genus: int) -> WeightedAlphabet:
        raise NotImplementedError

    @classmethod
    def legs(cls, genus: int) -> List[str]:
        raise NotImplementedError

    @classmethod
    def part_weight(cls, leg: str, level: int) -> int:
        return level + 1

    @classmethod
    def from_coordinates(
        cls,
        genus: int,
        level: int,
        coords: Mapping[Tuple[str, Word], Any]
    ) -> 'Derivation':
        """
        由 `(腿, Lyndon 字) → 系数` 坐标构造。
        """
        grouped: Dict[str, Dict[Word, Any]] = {}
        for (leg, w), c in coords.items():
            grouped.setdefault(leg, {})[w] = c
        A = cls.alphabet_for(genus)
        return cls(genus, level, {leg: LieElement(A, t) for leg, t in grouped.items()})

    @property
    def genus(self) -> int:
        return self.__genus

    @property
    def level(self) -> int:
        return self.__level

    @property
    def alphabet(self) -> WeightedAlphabet:
        return self.__alphabet

    @property
    def symplectic(self) -> bool:
        return self.__symplectic

    @property
    def parts(self) -> Dict[str, LieElement]:
        """
        非零分量。
        """
        return dict(self.__parts)

    def part(self, leg: str) -> LieElement:
        return self.__parts.get(leg, LieElement.zero(self.__alphabet))

    def coordinates(self) -> Dict[Tuple[str, Word], Any]:
        """
        `(腿, Lyndon 字) → 系数`。
        """
        return {(leg, w): c for leg, x in self.__parts.items() for w, c in x.items()}

    def xi(self) -> LieElement:
        """
        括号收缩 Σ [x, part(x)]。
        """
        total = LieElement.zero(self.__alphabet)
        for leg, x in self.__parts.items():
            total = total + bracket(LieElement.letter(self.__alphabet, leg), x)
        return total

    def is_zero(self) -> bool:
        return not self.__parts

    def _combine(self, other: 'Derivation', sign: int) -> 'Derivation':
        if type(self) is not type(other) or self.__genus != other.__genus:
            raise MalformedInputError(f'{self!r} vs {other!r}')
        if self.__level != other.__level and not (self.is_zero() or other.is_zero()):
            raise WeightMismatchError(f'level: {self.__level} != {other.__level}')
        level = self.__level if not self.is_zero() else other.__level
        parts = dict(self.__parts)
        for leg, x in other.__parts.items():
            parts[leg] = parts[leg] + x * sign if leg in parts else x * sign
        return type(self)(self.__genus, level, parts)

    def __add__(self, other: 'Derivation') -> 'Derivation':
        return self._combine(other, 1)

    def __sub__(self, other: 'Derivation') -> 'Derivation':
        return self._combine(other, -1)

    def __neg__(self) -> 'Derivation':
        return type(self)(self.__genus, self.__level, {k: -v for k, v in self.__parts.items()})

    def __mul__(self, c: Any) -> 'Derivation':
        return type(self)(self.__genus, self.__level, {k: v * c for k, v in self.__parts.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        if type(self) is not type(other) or self.__genus != other.__genus:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.__level == other.__level and self.__parts == other.__parts

    def __str__(self) -> str:
        terms = []
        for leg in self.legs(self.__genus):
            x = self.part(leg)
            weight = self.__alphabet.weight
            for w in sorted(x.terms, key=lambda w: (weight(w), w)):
                terms.append((x.coefficient(w), f'{leg}⊗{x.render_word(w)}'))
        return join_signed(terms)

    def __repr__(self) -> str:
        return f'{type(self).__name__}(genus={self.__genus}, level={self.__level}, {self})'


class DerivationElement(Derivation):
    """
    交错导子：a_part(aᵢ) ∈ 𝔏ie_{m+1}(B;A)，b_part(bᵢ) ∈ 𝔏ie_{m+2}(B;A)。
    """
    kind = 'alt'

    @classmethod
    def alphabet_for(cls, genus: int) -> WeightedAlphabet:
        return ba_alphabet(genus)

    @classmethod
    def legs(cls, genus: int) -> List[str]:
        return [f'a{i}' for i in range(1, genus + 1)] + [f'b{i}' for i in range(1, genus + 1)]

    @classmethod
    def part_weight(cls, leg: str, level: int) -> int:
        return level + 1 if leg.startswith('a') else level + 2

    @classmethod
    def from_parts(
        cls,
        genus: int,
        level: int,
        a_part: Mapping[int, LieElement],
        b_part: Mapping[int, LieElement],
        symplectic: bool = False
    ) -> 'DerivationElement':
        parts = {f'a{i}': x for i, x in a_part.items()}
        parts.update({f'b{i}': x for i, x in b_part.items()})
        return cls(genus, level, parts, symplectic)

    @property
    def a_part(self) -> Dict[int, LieElement]:
        return {i: self.part(f'a{i}') for i in range(1, self.genus + 1)}

    @property
    def b_part(self) -> Dict[int, LieElement]:
        return {i: self.part(f'b{i}') for i in range(1, self.genus + 1)}


class ClassicalDerivation(Derivation):
    """
    经典导子：H ⊗ 𝔏ie_{m+1}(H)。
    """
    kind = 'classical'

    @classmethod
    def alphabet_for(cls, genus: int) -> WeightedAlphabet:
        return h_alphabet(genus)

    @classmethod
    def legs(cls, genus: int) -> List[str]:
        return list(h_alphabet(genus).symbols)


class LevineDerivation(Derivation):
    """
    Levine 导子：B ⊗ 𝔏ie_{m+1}(B)。
    """
    kind = 'levine'

    @classmethod
    def alphabet_for(cls, genus: int) -> WeightedAlphabet:
        return b_alphabet(genus)

    @classmethod
    def legs(cls, genus: int) -> List[str]:
        return list(b_alphabet(genus).symbols)


DERIVATION_KINDS = {cls.kind: cls for cls in (DerivationElement, ClassicalDerivation,
                                              LevineDerivation)}


def xi(d: DerivationElement) -> LieElement:
    """
    Ξ_m(d) = Σ [aᵢ, a_part(aᵢ)] + Σ [bᵢ, b_part(bᵢ)]。
    """
    if not isinstance(d, DerivationElement):
        raise MalformedInputError(f'expected alt derivation: {d!r}')
    return d.xi()


def xi_classical(d: ClassicalDerivation) -> LieElement:
    if not isinstance(d, ClassicalDerivation):
        raise MalformedInputError(f'expected classical derivation: {d!r}')
    return d.xi()


def xi_levine(d: LevineDerivation) -> LieElement:
    if not isinstance(d, LevineDerivation):
        raise MalformedInputError(f'expected Levine derivation: {d!r}')
    return d.xi()


def _require_mapping_class(h: SurfaceEndo) -> None:
    if not h.validated:
        raise ValidationError(f'not a mapping class: {h.label or h!r}',
                              defect=boundary_defect(h))


def generator_defect(h: SurfaceEndo, gen: Generator) -> FreeWord:
    """
    h(x)x⁻¹。
    """
    x = FreeWord([(gen, 1)], h.genus)
    return apply_endo(h, x) * invert(x)


def sigma_matrix(h: SurfaceEndo) -> ImmutableMatrix:
    """
    h★ 在基 (a₁..a_g, b₁..b_g) 下的矩阵，第 j 列为第 j 个基元素的像。

    >>> sigma_matrix(twist_library(1)['t_a1'])
    Matrix([
    [1, -1],
    [0,  1]])
    """
    _require_mapping_class(h)
    g = h.genus
    cols = [abelianize(h.image(gen)) for gen in generators(g)]
    M = ImmutableMatrix(2 * g, 2 * g, lambda i, j: cols[j][i])
    J = ImmutableMatrix(2 * g, 2 * g,
                        lambda i, j: 1 if j == i + g else (-1 if i == j + g else 0))
    if M.T * J * M != J:
        raise ConsistencyError(f'not symplectic: {M.tolist()}')
    return M


def is_lagrangian(h: SurfaceEndo) -> bool:
    """
    h★(A) ⊆ A。
    """
    g = h.genus
    return sigma_matrix(h)[g:, :g] == zeros(g, g)


def is_torelli(h: SurfaceEndo) -> bool:
    """
    h★ = Id。
    """
    return sigma_matrix(h) == eye(2 * h.genus)


def is_lagrangian_torelli(h: SurfaceEndo) -> bool:
    """
    h ∈ ℐᴸ：h★(A) ⊆ A 且 h★|_A = Id。
    """
    g = h.genus
    M = sigma_matrix(h)
    return M[g:, :g] == zeros(g, g) and M[:g, :g] == eye(g)


def _alt_depth(h: SurfaceEndo, limit: int, e: Expansion) -> Optional[int]:
    if not is_lagrangian(h):
        return None
    depth = limit
    for gen in generators(h.genus):
        shift = 2 if gen.kind == 'alpha' else 1
        d = defect_degree(e, generator_defect(h, gen))
        if d is not None:
            depth = min(depth, d - shift)
    return depth


def _classical_depth(h: SurfaceEndo, limit: int, e: Expansion) -> int:
    depth = limit
    for gen in generators(h.genus):
        d = defect_degree(e, generator_defect(h, gen))
        if d is not None:
            depth = min(depth, d - 1)
    return depth


def _levine_depth(h: SurfaceEndo, limit: int, e: Expansion) -> Optional[int]:
    if not is_lagrangian(h):
        return None
    if not is_lagrangian_torelli(h) or limit == 0:
        return 0
    depth = limit
    for i in range(1, h.genus + 1):
        d = defect_degree(e, h.image(Generator('alpha', i)))
        if d is not None:
            depth = min(depth, d - 1)
    return depth


def filtration_depth(
    h: SurfaceEndo,
    kind: str = 'alt',
    limit: int = 3,
    expansion: Optional[Expansion] = None
) -> Optional[int]:
    """
    h 所在滤链的最深一项（不超过 `limit`）；交错/Levine 滤链下 h 不保持 A 时为 None。

    >>> lib = twist_library(2)
    >>> filtration_depth(lib['t_a1'], 'alt'), filtration_depth(lib['t_d'], 'alt', 2)
    (1, 2)
    """
    _require_mapping_class(h)
    g = h.genus
    if kind == 'alt':
        return _alt_depth(h, limit, expansion or default_alt_expansion(g, limit + 2))
    if kind == 'classical':
        return _classical_depth(h, limit, expansion or classical_expansion(g, limit + 1))
    if kind == 'levine':
        return _levine_depth(h, limit, expansion or handlebody_expansion(g, limit + 1))
    raise MalformedInputError(f'kind: {kind}')


def filtration_inclusions(h: SurfaceEndo, levels: Tuple[int, ...] = (1, 2)) -> List[str]:
    """
    检查 J_{2m}^a ⊆ J_m、J_m ⊆ J_{m−1}^a、J_m^a ⊆ J_{m+1}^L，返回 h 违反的包含关系。

    >>> filtration_inclusions(twist_library(2)['t_d'])
    []
    """
    top = max(levels)
    alt = filtration_depth(h, 'alt', 2 * top)
    classical = filtration_depth(h, 'classical', top)
    levine = filtration_depth(h, 'levine', top + 1)
    alt = -1 if alt is None else alt
    levine = -1 if levine is None else levine
    violations = []
    for m in levels:
        if alt >= 2 * m and classical < m:
            violations.append(f'J^a_{2 * m} not in J_{m}')
        if classical >= m and alt < m - 1:
            violations.append(f'J_{m} not in J^a_{m - 1}')
        if alt >= m and levine < m + 1:
            violations.append(f'J^a_{m} not in J^L_{m + 1}')
    return violations


def membership_alt(h: SurfaceEndo, m: int, expansion: Optional[Expansion] = None) -> bool:
    """
    h ∈ J_m^a：m = 0 时为 h★(A) ⊆ A；否则 log θ(h(βᵢ)βᵢ⁻¹) 在权重 < m+1、
    log θ(h(αᵢ)αᵢ⁻¹) 在权重 < m+2 处为零。
    """
    depth = filtration_depth(h, 'alt', m, expansion)
    return depth is not None and depth >= m


def membership_classical(h: SurfaceEndo, m: int, expansion: Optional[Expansion] = None) -> bool:
    """
    h ∈ J_m：全部 log θ(h(x)x⁻¹) 在权重 < m+1 处为零；J_0 为全体。
    """
    return filtration_depth(h, 'classical', m, expansion) >= m


def membership_levine(h: SurfaceEndo, m: int, expansion: Optional[Expansion] = None) -> bool:
    """
    h ∈ J_m^L：h ∈ ℐᴸ 且 log θ′(h(αᵢ)) 在权重 < m+1 处为零；J_0^L 为保持 A 的映射类。
    """
    depth = filtration_depth(h, 'levine', m, expansion)
    return depth is not None and depth >= m


def _check_level(m: int) -> None:
    if m < 1:
        raise MalformedInputError(f'level: {m}')


def _check_expansion(e: Expansion, h: SurfaceEndo, alphabet: WeightedAlphabet) -> None:
    if e.genus != h.genus:
        raise MalformedInputError(f'genus: {e.genus} != {h.genus}')
    if e.alphabet != alphabet:
        raise AlphabetMismatchError(f'{e.alphabet} != {alphabet}')


def tau_alt(h: SurfaceEndo, m: int, expansion: Optional[Expansion] = None) -> DerivationElement:
    """
    τ_m^a(h) = Σ aᵢ ⊗ [h(βᵢ)βᵢ⁻¹] − Σ bᵢ ⊗ [h(αᵢ)αᵢ⁻¹]，
    类分别取在 K_{m+1}/K_{m+2} 与 K_{m+2}/K_{m+3} 中。

    :param h: 映射类。
    :param m: 次数。
    :param expansion: 交错展开，默认截断为 m + 3。
    """
    _require_mapping_class(h)
    _check_level(m)
    g = h.genus
    e = expansion or default_alt_expansion(g, m + TRUNCATION_SHIFT)
    _check_expansion(e, h, ba_alphabet(g))
    if not is_lagrangian(h):
        raise MembershipError(f'{h.label}: not Lagrangian', generator='A', degree=0)
    a_part, b_part = {}, {}
    for i in range(1, g + 1):
        beta = Generator('beta', i)
        a_part[i] = leading_class(e, generator_defect(h, beta), m + 1, f'{beta}-defect')
    for i in range(1, g + 1):
        alpha = Generator('alpha', i)
        b_part[i] = -leading_class(e, generator_defect(h, alpha), m + 2, f'{alpha}-defect')
    d = DerivationElement.from_parts(g, m, a_part, b_part)
    if not d.xi().is_zero():
        raise ConsistencyError(f'xi != 0: {d.xi()}')
    return DerivationElement.from_parts(g, m, a_part, b_part, symplectic=True)


def tau_classical(
    h: SurfaceEndo,
    m: int,
    expansion: Optional[Expansion] = None
) -> ClassicalDerivation:
    """
    τ_m(h) = Σ aᵢ ⊗ [h(βᵢ)βᵢ⁻¹] − Σ bᵢ ⊗ [h(αᵢ)αᵢ⁻¹]，类取在 Γ_{m+1}/Γ_{m+2} 中。
    """
    _require_mapping_class(h)
    _check_level(m)
    g = h.genus
    e = expansion or classical_expansion(g, m + 1)
    _check_expansion(e, h, h_alphabet(g))
    parts = {}
    for i in range(1, g + 1):
        beta = Generator('beta', i)
        parts[f'a{i}'] = leading_class(e, generator_defect(h, beta), m + 1, f'{beta}-defect')
    for i in range(1, g + 1):
        alpha = Generator('alpha', i)
        parts[f'b{i}'] = -leading_class(e, generator_defect(h, alpha), m + 1, f'{alpha}-defect')
    return ClassicalDerivation(g, m, parts)


def tau_levine(
    h: SurfaceEndo,
    m: int,
    expansion: Optional[Expansion] = None
) -> LevineDerivation:
    """
    τ_m^L(h) = −Σ bᵢ ⊗ [ι_# h(αᵢ)]，类取在 Γ_{m+1}π′/Γ_{m+2}π′ 中。
    """
    _require_mapping_class(h)
    _check_level(m)
    g = h.genus
    if not is_lagrangian_torelli(h):
        raise MembershipError(f'{h.label}: not in the Lagrangian Torelli group',
                              generator='A', degree=0)
    e = expansion or handlebody_expansion(g, m + 1)
    _check_expansion(e, h, b_alphabet(g))
    parts = {}
    for i in range(1, g + 1):
        alpha = Generator('alpha', i)
        parts[f'b{i}'] = -leading_class(e, h.image(alpha), m + 1, f'{alpha}-image')
    return LevineDerivation(g, m, parts)


class GElement(object):
    """
    𝒢 的元素 (R, μ)：R ∈ Aut(B)，μ: A → Λ²B = 𝔏ie₂(B)。
    """
    def __init__(self, genus: int, R: Any, mu: Optional[Mapping[int, LieElement]] = None):
        """
        :param genus: 亏格。
        :param R: g×g 整数矩阵，第 j 列为 R(bⱼ)。
        :param mu: i → μ(aᵢ)。
        """
        R = ImmutableMatrix(R)
        if R.shape != (genus, genus) or R.det() not in (1, -1):
            raise MalformedInputError(f'R: {R.tolist()}')
        B = b_alphabet(genus)
        self.__genus = genus
        self.__R = R
        self.__mu: Dict[int, LieElement] = {}
        for i in range(1, genus + 1):
            x = (mu or {}).get(i, LieElement.zero(B))
            if x.alphabet != B:
                raise AlphabetMismatchError(f'{x.alphabet} != {B}')
            if not x.is_homogeneous(2):
                raise WeightMismatchError(f'mu(a{i}): {x}')
            self.__mu[i] = x

    @property
    def genus(self) -> int:
        return self.__genus

    @property
    def R(self) -> ImmutableMatrix:
        return self.__R

    @property
    def mu(self) -> Dict[int, LieElement]:
        return dict(self.__mu)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GElement):
            return NotImplemented
        return (self.__genus == other.__genus and self.__R == other.__R
                and self.__mu == other.__mu)

    def __str__(self) -> str:
        mu = ', '.join(f'a{i} -> {x}' for i, x in self.__mu.items())
        return f'R = {self.__R.tolist()}; mu: {mu}'

    def __repr__(self) -> str:
        return f'GElement({self})'


def _push_forward(R: ImmutableMatrix, x: LieElement) -> LieElement:
    """
    Λ²R 作用：bₖ ↦ Σᵢ R[i,k] bᵢ。
    """
    B = x.alphabet
    g = R.shape[0]
    images = {}
    for k in range(g):
        total = LieElement.zero(B)
        for i in range(g):
            if R[i, k] != 0:
                total = total + LieElement.letter(B, f'b{i + 1}') * int(R[i, k])
        images[f'b{k + 1}'] = total
    return substitute(x, images, B)


def _right_action(mu: Mapping[int, LieElement], R: ImmutableMatrix) -> Dict[int, LieElement]:
    """
    μ·f = μ∘f′，f′ = P = (Rᵀ)⁻¹ 为 f 在 A 上的作用：(μ·f)(aᵢ) = Σₖ P[k,i] μ(aₖ)。
    """
    P = R.T.inv()
    g = R.shape[0]
    out = {}
    for i in range(1, g + 1):
        total = LieElement.zero(mu[1].alphabet)
        for k in range(1, g + 1):
            if P[k - 1, i - 1] != 0:
                total = total + mu[k] * int(P[k - 1, i - 1])
        out[i] = total
    return out


def g_identity(genus: int) -> GElement:
    return GElement(genus, eye(genus))


def g_condition(x: GElement) -> bool:
    """
    Ξ₃(Σⱼ R(bⱼ) ⊗ μ(aⱼ)) = 0。
    """
    B = b_alphabet(x.genus)
    total = LieElement.zero(B)
    for j in range(1, x.genus + 1):
        rb = LieElement.zero(B)
        for i in range(x.genus):
            if x.R[i, j - 1] != 0:
                rb = rb + LieElement.letter(B, f'b{i + 1}') * int(x.R[i, j - 1])
        total = total + bracket(rb, x.mu[j])
    return total.is_zero()


@same_genus()
def g_mul(x: GElement, y: GElement) -> GElement:
    """
    (h, μ)(f, ν) = (hf, Λ²h∘ν + μ·f)。
    """
    right = _right_action(x.mu, y.R)
    mu = {i: _push_forward(x.R, y.mu[i]) + right[i] for i in range(1, x.genus + 1)}
    return GElement(x.genus, x.R * y.R, mu)


def g_inv(x: GElement) -> GElement:
    """
    (h, μ)⁻¹ = (h⁻¹, −h⁻¹·μ·h⁻¹)。
    """
    R_inv = x.R.inv()
    right = _right_action(x.mu, R_inv)
    mu = {i: -_push_forward(R_inv, right[i]) for i in range(1, x.genus + 1)}
    return GElement(x.genus, R_inv, mu)


def tau0_alt(h: SurfaceEndo) -> GElement:
    """
    τ_0^a(h) = (h★ 在 B = H/A 上的作用, aᵢ ↦ log θ′(h(αᵢ)) 的权重 2 部分)。
    """
    _require_mapping_class(h)
    if not is_lagrangian(h):
        raise NotLagrangianError(f'{h.label}: h(A) is not contained in A')
    g = h.genus
    R = sigma_matrix(h)[g:, g:]
    e = handlebody_expansion(g, 2)
    mu = {}
    for i in range(1, g + 1):
        lg = log(evaluate(e, h.image(Generator('alpha', i))))
        if not lg.homogeneous(1).is_zero():
            raise ConsistencyError(f'a{i}: nonzero weight-1 slice {lg.homogeneous(1)}')
        mu[i] = from_primitive_tensor(lg.homogeneous(2))
    x = GElement(g, R, mu)
    if not g_condition(x):
        raise ConsistencyError(f'G-condition fails: {x}')
    return x


def iota_star(d: DerivationElement) -> LevineDerivation:
    """
    ι★: D_m(B;A) → D_{m+1}(H′)：丢弃 a_part，b_part 中令 aᵢ ↦ 0。
    """
    g = d.genus
    B = b_alphabet(g)
    kill = {f'a{i}': None for i in range(1, g + 1)}
    parts = {f'b{i}': substitute(d.part(f'b{i}'), kill, B) for i in range(1, g + 1)}
    return LevineDerivation(g, d.level + 1, parts)


def tau1_from_homology(h: SurfaceEndo) -> DerivationElement:
    """
    σ(h) = (Id Δ; 0 Id) 时返回 Σ Δᵢⱼ aᵢ ⊗ aⱼ；在 𝒩 上等于 τ_1^a(h)。
    """
    g = h.genus
    M = sigma_matrix(h)
    if M[g:, :g] != zeros(g, g) or M[:g, :g] != eye(g) or M[g:, g:] != eye(g):
        raise MembershipError(f'{h.label}: sigma is not (Id D; 0 Id)',
                              generator='sigma', degree=1)
    A = ba_alphabet(g)
    a_part = {}
    for i in range(g):
        total = LieElement.zero(A)
        for j in range(g):
            if M[j, g + i] != 0:
                total = total + LieElement.letter(A, f'a{j + 1}') * int(M[j, g + i])
        a_part[i + 1] = total
    return DerivationElement.from_parts(g, 1, a_part, {})


Record = Dict[Tuple[str, Tuple[str, ...]], Any]


def _add(record: Record, key: Tuple[str, Tuple[str, ...]], c: Any) -> None:
    total = record.get(key, 0) + c
    if total == 0:
        record.pop(key, None)
    else:
        record[key] = rational(total)


def p_project(d: DerivationElement) -> Record:
    """
    p = Id_A ⊗ ι★ ⊕ (模去纯 b 部分)：a_part 只保留纯 b 的权重 2 部分，
    b_part 只保留混合项，[bₖ, aₗ] 记为 −(aₗ⊗bₖ)。

    记录格式：`(腿, (x, y)) → 系数`，`(bₖ, bₗ)` 表示 [bₖ, bₗ]，`(aₗ, bₖ)` 表示 aₗ⊗bₖ。
    """
    if d.level != 1 and not d.is_zero():
        raise MalformedInputError(f'level: {d.level}')
    symbols = d.alphabet.symbols
    record: Record = {}
    for i in range(1, d.genus + 1):
        for w, c in d.part(f'a{i}').items():
            letters = [symbols[k] for k in w]
            if len(letters) == 2 and all(s.startswith('b') for s in letters):
                _add(record, (f'a{i}', tuple(letters)), c)
        for w, c in d.part(f'b{i}').items():
            letters = [symbols[k] for k in w]
            if len(letters) == 2 and letters[1].startswith('a'):
                _add(record, (f'b{i}', (letters[1], letters[0])), -c)
    return record


def q_project(c: ClassicalDerivation) -> Record:
    """
    q：模去 Λ²A + Λ²B 的相应部分；parts[aᵢ] 保留 bₖ∧bₗ，parts[bᵢ] 保留 aₗ∧bₖ ↦ aₗ⊗bₖ。
    """
    if c.level != 1 and not c.is_zero():
        raise MalformedInputError(f'level: {c.level}')
    symbols = c.alphabet.symbols
    record: Record = {}
    for i in range(1, c.genus + 1):
        for w, k in c.part(f'a{i}').items():
            letters = tuple(symbols[j] for j in w)
            if all(s.startswith('b') for s in letters):
                _add(record, (f'a{i}', letters), k)
        for w, k in c.part(f'b{i}').items():
            letters = tuple(symbols[j] for j in w)
            if letters[0].startswith('a') and letters[1].startswith('b'):
                _add(record, (f'b{i}', letters), k)
    return record
