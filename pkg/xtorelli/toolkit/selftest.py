# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
验收检查。
"""

import re
import random
import traceback

from typing import List, Literal

from xtorelli.toolkit.common import TRUNCATION_SHIFT
from xtorelli.toolkit.diagrams import (DiagramElement, TreeDiagram, eta, eta_inverse,
                                       diagrammatic_tau_alt, random_diagram)
from xtorelli.toolkit.errors import ConsistencyError
from xtorelli.toolkit.expansion import perturbed_alt_expansion
from xtorelli.toolkit.johnson import (DerivationElement, tau_alt, tau_classical, tau_levine,
                                      tau0_alt, tau1_from_homology, membership_alt, xi,
                                      iota_star, p_project, q_project, sigma_matrix,
                                      g_mul, g_inv, g_identity, filtration_inclusions)
from xtorelli.toolkit.lie import LieElement
from xtorelli.toolkit.tensor import ba_alphabet
from xtorelli.toolkit.utils import rational
from xtorelli.toolkit.words import (SurfaceEndo, twist_library, library_names, library_words,
                                    pair_twist_name, compose_endos, random_product)

TResult = Literal['FAILED', 'SUCCESSFUL']


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise ConsistencyError(message)


def expected_tau_a(genus: int, k: int, l: int = 0) -> DerivationElement:
    """
    t_a<k>：−a_k⊗a_k；t_a<k><l>：−(a_k + a_l)⊗(a_k + a_l)。
    """
    A = ba_alphabet(genus)
    x = LieElement.letter(A, f'a{k}')
    if l:
        x = x + LieElement.letter(A, f'a{l}')
        return DerivationElement.from_parts(genus, 1, {k: -x, l: -x}, {})
    return DerivationElement.from_parts(genus, 1, {k: -x}, {})


class SelfTest(object):
    """
    按 check1, check2, ... 的顺序执行全部检查。
    """
    def __init__(self, quick: bool = False, seed: int = 0):
        """
        :param quick: 缩小随机检查的规模。
        :param seed: 随机种子。
        """
        self.quick = quick
        self.rng = random.Random(seed)
        self.failed: List[str] = []

    def count(self, full: int) -> int:
        return max(3, full // 10) if self.quick else full

    def sample(self, genus: int, names: List[str], length: int = 3) -> SurfaceEndo:
        lib = twist_library(genus)
        return random_product(lib, names, self.rng.randint(1, length), self.rng,
                              max_image_length=60)

    def family(self, genus: int, m: int) -> List[str]:
        """
        m = 1：𝒩 与 Torelli 扭转；m = 2：Torelli 扭转。
        """
        torelli = library_names(genus, 'torelli')
        return torelli if m == 2 else library_names(genus, 'handlebody') + torelli

    def check1(self) -> None:
        """
        τ_1^a(t_a<i>) = −aᵢ⊗aᵢ。
        """
        for g in (1, 2, 3):
            lib = twist_library(g)
            for i in range(1, g + 1):
                expect(tau_alt(lib[f't_a{i}'], 1) == expected_tau_a(g, i), f't_a{i}, g={g}')

    def check2(self) -> None:
        """
        τ_1^a(t_a<k><l>) = −(a_k⊗a_k) − (a_l⊗a_l) − (a_k⊗a_l) − (a_l⊗a_k)。
        """
        for g in (2, 3):
            lib = twist_library(g)
            for k in range(1, g + 1):
                for l in range(k + 1, g + 1):
                    expect(tau_alt(lib[pair_twist_name(k, l, g)], 1) == expected_tau_a(g, k, l),
                           f't_a{k}{l}, g={g}')

    def check3(self) -> None:
        """
        τ_1^a(t_d) = 0，t_d ∈ J_2^a。
        """
        for g in (1, 2):
            t_d = twist_library(g)['t_d']
            expect(tau_alt(t_d, 1).is_zero(), f't_d, g={g}')
            expect(membership_alt(t_d, 2), f't_d not in J_2^a, g={g}')

    def check4(self) -> None:
        """
        τ_1^a(t_e) = 0，t_e ∈ J_2^a。
        """
        for g in (2, 3):
            t_e = twist_library(g)['t_e']
            expect(tau_alt(t_e, 1).is_zero(), f't_e, g={g}')
            expect(membership_alt(t_e, 2), f't_e not in J_2^a, g={g}')

    def check5(self) -> None:
        """
        Ξ(τ_m^a(h)) = 0。
        """
        for _ in range(self.count(50)):
            g, m = self.rng.choice((2, 3)), self.rng.choice((1, 2))
            h = self.sample(g, self.family(g, m))
            expect(xi(tau_alt(h, m)).is_zero(), f'xi != 0: {h.label}, m={m}')

    def check6(self) -> None:
        """
        τ_m^a(h∘f) = τ_m^a(h) + τ_m^a(f)。
        """
        for _ in range(self.count(30)):
            g, m = self.rng.choice((2, 3)), self.rng.choice((1, 2))
            h, f = self.sample(g, self.family(g, m)), self.sample(g, self.family(g, m))
            expect(tau_alt(compose_endos(h, f), m) == tau_alt(h, m) + tau_alt(f, m),
                   f'not additive: {h.label}, {f.label}, m={m}')

    def check7(self) -> None:
        """
        ι★ ∘ τ_m^a = τ_{m+1}^L。
        """
        for _ in range(self.count(30)):
            g, m = self.rng.choice((2, 3)), self.rng.choice((1, 2))
            h = self.sample(g, self.family(g, m))
            expect(iota_star(tau_alt(h, m)) == tau_levine(h, m + 1),
                   f'square fails: {h.label}, m={m}')

    def check8(self) -> None:
        """
        p(τ_1^a(ψ)) = q(τ_1(ψ))，ψ 取 t_d、t_e 的乘积及其被 𝒩 元素的共轭。
        """
        for _ in range(self.count(20)):
            g = self.rng.choice((2, 3))
            psi = self.sample(g, library_names(g, 'torelli'), 2)
            if self.rng.random() < 0.5:
                n = self.sample(g, library_names(g, 'handlebody'), 2)
                psi = compose_endos(n, compose_endos(psi, n.inverse))
            expect(p_project(tau_alt(psi, 1)) == q_project(tau_classical(psi, 1)),
                   f'p != q: {psi.label}')

    def check9(self) -> None:
        """
        σ(𝒩) = (Id Δ; 0 Id)，Δ 对称，且给出 τ_1^a。
        """
        for _ in range(self.count(30)):
            g = self.rng.choice((2, 3))
            h = self.sample(g, library_names(g, 'handlebody'))
            M = sigma_matrix(h)
            delta = M[:g, g:]
            expect(delta == delta.T, f'delta not symmetric: {h.label}')
            expect(tau1_from_homology(h) == tau_alt(h, 1), f'tau1 mismatch: {h.label}')

    def check10(self) -> None:
        """
        𝒢 的群公理，τ_0^a(h∘f) = τ_0^a(h)·τ_0^a(f)。
        """
        for _ in range(self.count(30)):
            g = self.rng.choice((2, 3))
            names = library_names(g, 'lagrangian')
            h, f, k = (self.sample(g, names) for _ in range(3))
            x, y, z = tau0_alt(h), tau0_alt(f), tau0_alt(k)
            expect(tau0_alt(compose_endos(h, f)) == g_mul(x, y), f'tau0: {h.label}, {f.label}')
            expect(g_mul(g_mul(x, y), z) == g_mul(x, g_mul(y, z)), 'associativity')
            expect(g_mul(x, g_identity(g)) == x == g_mul(g_identity(g), x), 'identity')
            expect(g_mul(x, g_inv(x)) == g_identity(g) == g_mul(g_inv(x), x), 'inverse')

    def check11(self) -> None:
        """
        η ∘ η⁻¹ = id，η⁻¹ ∘ η = id。
        """
        top = 2 if self.quick else 4
        for _ in range(self.count(50)):
            g, m = self.rng.choice((1, 2, 3)), self.rng.randint(0, top)
            e = random_diagram(g, m, self.rng)
            d = eta(e)
            back = eta_inverse(d)
            expect(eta(back) == d, f'eta(eta_inverse(d)) != d: {d}')
            expect(back == e, f'eta_inverse(eta(E)) != E: {e}')

    def check12(self) -> None:
        """
        η⁻¹ τ_1^a(t_a1) = −½·strut(a1,a1)。
        """
        for g in (1, 2):
            t = TreeDiagram.strut(g, 'a1', 'a1')
            value = diagrammatic_tau_alt(twist_library(g)['t_a1'], 1)
            expect(value == DiagramElement.single(t, '-1/2'), f'{value}')
            expect(value.terms == {t: rational('-1/2')}, f'{value}')

    def check13(self) -> None:
        """
        J_{2m}^a ⊆ J_m，J_m ⊆ J_{m−1}^a，J_m^a ⊆ J_{m+1}^L（m = 1, 2）：
        长度 ≤ 2 的库单词穷举（快速模式仅长度 1），长度 3、4 随机抽样。
        """
        g = 2
        exhaustive = (1,) if self.quick else (1, 2)
        for length in exhaustive:
            for text, h in library_words(g, length, inverses=True):
                violations = filtration_inclusions(h)
                expect(not violations, f'{text}: {violations}')
        names = library_names(g, 'all')
        lib = twist_library(g)
        for length in (3, 4):
            for _ in range(self.count(20)):
                h = random_product(lib, names, length, self.rng, max_image_length=60)
                violations = filtration_inclusions(h)
                expect(not violations, f'{h.label}: {violations}')

    def check14(self) -> None:
        """
        τ_m^a 与交错展开的选取无关（m = 1, 2）。
        """
        cases = [(1, 1, 't_a1'), (1, 2, 't_a1'), (1, 2, 't_a12'), (1, 2, 't_d'), (1, 2, 't_e'),
                 (1, 3, 't_e'), (2, 1, 't_d'), (2, 2, 't_d'), (2, 2, 't_e')]
        seeds = range(1, 3 if self.quick else 6)
        for m, g, name in cases:
            h = twist_library(g)[name]
            base = tau_alt(h, m)
            for seed in seeds:
                e = perturbed_alt_expansion(g, m + TRUNCATION_SHIFT, seed)
                expect(tau_alt(h, m, e) == base, f'{name}, m={m}, g={g}, seed={seed}')

    @property
    def checks(self) -> List[str]:
        """
        所有检查名称。
        """
        names = [n for n in dir(self.__class__) if re.fullmatch(r'check\d+', n)]
        return sorted(names, key=lambda n: int(n[5:]))

    def run(self) -> TResult:
        """
        执行全部检查。
        """
        title = lambda t: print(t.center(80, '='))
        for check in self.checks:
            title(check)
            print(f'[selftest] {(getattr(self, check).__doc__ or check).strip()}')
            try:
                getattr(self, check)()
                print(f'[selftest] {check}: ok')
            except Exception:
                self.failed.append(check)
                traceback.print_exc()
        title('summary')
        print(f'[selftest] {len(self.checks) - len(self.failed)}/{len(self.checks)} passed')
        if self.failed:
            print(f'[selftest] failed: {", ".join(self.failed)}')
            return 'FAILED'
        return 'SUCCESSFUL'
