# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
入口脚本。

退出码：0 成功；2 不在所求滤链中（违例报告写到 stderr）；1 用法、解析或其它错误。
"""

import sys

import click

from typing import Dict, Optional

from decorator import decorator
from typed_settings import click_options

from xtorelli.toolkit.version import __version__
from xtorelli.toolkit.common import APPNAME, KINDS
from xtorelli.toolkit.codec import (dump, dump_library, load_user_endos, metadata,
                                    derivation_to_dict, g_to_dict, diagram_to_dict)
from xtorelli.toolkit.diagrams import (diagrammatic_tau_alt, diagrammatic_tau_classical,
                                       diagrammatic_tau_levine)
from xtorelli.toolkit.errors import (XTorelliError, MembershipError, NotLagrangianError,
                                     MalformedInputError)
from xtorelli.toolkit.expansion import (Expansion, default_alt_expansion, classical_expansion,
                                        handlebody_expansion, perturbed_alt_expansion)
from xtorelli.toolkit.grammar import parse_mc_word
from xtorelli.toolkit.johnson import (tau_alt, tau_classical, tau_levine, tau0_alt,
                                      membership_alt, membership_classical, membership_levine,
                                      sigma_matrix, is_lagrangian, is_torelli,
                                      is_lagrangian_torelli)
from xtorelli.toolkit.selftest import SelfTest
from xtorelli.toolkit.settings import RunConfig, resolve_truncation
from xtorelli.toolkit.words import SurfaceEndo, twist_library


TAU = {'alt': tau_alt, 'classical': tau_classical, 'levine': tau_levine}

MEMBERSHIP = {'alt': membership_alt, 'classical': membership_classical,
              'levine': membership_levine}

DIAGRAMMATIC_TAU = {'alt': diagrammatic_tau_alt, 'classical': diagrammatic_tau_classical,
                    'levine': diagrammatic_tau_levine}

# 各类同态可用的展开，第一个为缺省
KIND_EXPANSIONS = {'alt': ('default-alt', 'perturbed'), 'classical': ('classical',),
                   'levine': ('handlebody',)}


@decorator
def reports_errors(func, *args, **kwargs):
    """
    把异常转换为退出码。
    """
    try:
        return func(*args, **kwargs)
    except (MembershipError, NotLagrangianError) as e:
        where = getattr(e, 'generator', None)
        if where is not None:
            click.echo(f'violation at ({where}, weight {e.degree}): {e}', err=True)
        else:
            click.echo(f'not in filtration: {e}', err=True)
        sys.exit(2)
    except XTorelliError as e:
        click.echo(f'Error: {type(e).__name__}: {e}', err=True)
        sys.exit(1)


def load_library(config: RunConfig) -> Dict[str, SurfaceEndo]:
    """
    扭转库，合并 `--endos` 给出的用户自同态。
    """
    library = dict(twist_library(config.genus))
    if config.endos:
        user = load_user_endos(config.endos, config.genus)
        click.echo(f'[endos] loaded: {", ".join(sorted(user)) or "none"}', err=True)
        library.update(user)
    return library


def evaluate_word(config: RunConfig, word: str) -> SurfaceEndo:
    library = load_library(config)
    return parse_mc_word(word, config.genus, library).evaluate(library)


def select_expansion(config: RunConfig, kind: str, truncation: int) -> Expansion:
    """
    按 `--expansion` 与同态类型构造展开。
    """
    choice = config.expansion or KIND_EXPANSIONS[kind][0]
    if choice not in KIND_EXPANSIONS[kind]:
        raise MalformedInputError(f'expansion: {choice}, kind: {kind}')
    g = config.genus
    if choice == 'perturbed':
        return perturbed_alt_expansion(g, truncation, config.seed)
    factories = {'default-alt': default_alt_expansion, 'classical': classical_expansion,
                 'handlebody': handlebody_expansion}
    return factories[choice](g, truncation)


def emit(config: RunConfig, text: str, data: dict, truncation: Optional[int] = None,
         expansion: Optional[str] = None) -> None:
    if config.format == 'yaml':
        dump({'metadata': metadata(config.genus, truncation, expansion), 'result': data})
    else:
        click.echo(text)


@click.group()
@click.version_option(__version__)
def main():
    """
    xtorelli
    """
    pass


@main.command()
@click_options(RunConfig, APPNAME)
@click.option('--kind', type=click.Choice(KINDS), default='alt', show_default=True)
@click.option('--level', '-m', type=int, required=True)
@click.option('--word', '-w', required=True)
@reports_errors
def tau(config: RunConfig, kind: str, level: int, word: str):
    """
    Johnson-type homomorphism of a mapping-class word.
    """
    truncation = resolve_truncation(config, level)
    e = select_expansion(config, kind, truncation)
    d = TAU[kind](evaluate_word(config, word), level, e)
    emit(config, str(d), derivation_to_dict(d), truncation, e.name)


@main.command()
@click_options(RunConfig, APPNAME)
@click.option('--kind', type=click.Choice(KINDS), default='alt', show_default=True)
@click.option('--level', '-m', type=int, required=True)
@click.option('--word', '-w', required=True)
@reports_errors
def member(config: RunConfig, kind: str, level: int, word: str):
    """
    Filtration membership; exit status 2 when not a member.
    """
    truncation = resolve_truncation(config, level)
    e = select_expansion(config, kind, truncation)
    result = MEMBERSHIP[kind](evaluate_word(config, word), level, e)
    emit(config, 'true' if result else 'false',
         {'kind': kind, 'level': level, 'member': result}, truncation, e.name)
    if not result:
        sys.exit(2)


@main.command()
@click_options(RunConfig, APPNAME)
@click.option('--word', '-w', required=True)
@reports_errors
def tau0(config: RunConfig, word: str):
    """
    tau_0 of a Lagrangian mapping class, valued in Aut(B) x Hom(A, Lie_2(B)).
    """
    x = tau0_alt(evaluate_word(config, word))
    emit(config, str(x), g_to_dict(x), 2, 'handlebody')


@main.command()
@click_options(RunConfig, APPNAME)
@click.option('--kind', type=click.Choice(KINDS), default='alt', show_default=True)
@click.option('--level', '-m', type=int, required=True)
@click.option('--word', '-w', required=True)
@reports_errors
def diagram(config: RunConfig, kind: str, level: int, word: str):
    """
    Diagrammatic Johnson-type homomorphism (tree Jacobi diagrams).
    """
    truncation = resolve_truncation(config, level)
    e = select_expansion(config, kind, truncation)
    x = DIAGRAMMATIC_TAU[kind](evaluate_word(config, word), level, e)
    emit(config, str(x), diagram_to_dict(x), truncation, e.name)


@main.command()
@click_options(RunConfig, APPNAME)
@click.option('--word', '-w', required=True)
@reports_errors
def sigma(config: RunConfig, word: str):
    """
    Action on first homology in the basis (a..., b...).
    """
    h = evaluate_word(config, word)
    M = sigma_matrix(h)
    flags = {'lagrangian': is_lagrangian(h), 'torelli': is_torelli(h),
             'lagrangian_torelli': is_lagrangian_torelli(h)}
    rows = [[int(v) for v in row] for row in M.tolist()]
    text = '\n'.join(' '.join(f'{v:>3}' for v in row) for row in rows)
    text += '\n' + '\n'.join(f'{k}: {str(v).lower()}' for k, v in flags.items())
    emit(config, text, {'sigma': rows, **flags})


@main.command()
@click.option('--genus', '-g', type=int, required=True)
@click.option('--output', '-o', type=click.Path(dir_okay=False), default=None)
@reports_errors
def library(genus: int, output: Optional[str]):
    """
    Dump the twist library in the user-endomorphism YAML schema.
    """
    if output is None:
        dump_library(genus)
        return
    with open(output, 'w', encoding='utf8') as f:
        dump_library(genus, f)
    click.echo(f'[library] written to {output}', err=True)


@main.command()
@click.option('--quick', is_flag=True, help='Smaller random samples.')
@click.option('--seed', type=int, default=0, show_default=True)
def selftest(quick: bool, seed: int):
    """
    Run the acceptance checks.
    """
    if SelfTest(quick, seed).run() == 'FAILED':
        sys.exit(1)


if __name__ == '__main__':
    main()
