# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
运行参数。

`RunConfig` 经 `typed_settings.click_options(RunConfig, 'torelli')` 转为命令行选项，
同时读取 `TORELLI_<字段名>` 环境变量（如 `TORELLI_TRUNCATION`）。
"""

import click

from typing import Any, Optional, Iterable, Sequence

from pydantic import BaseModel
from pydantic.fields import FieldInfo

from xtorelli.toolkit.common import EXPANSIONS, TRUNCATION_SHIFT
from xtorelli.toolkit.errors import MalformedInputError


class Option(FieldInfo):
    """
    运行参数。
    """
    def __init__(
        self,
        desc: Optional[str] = None,
        default: Any = ...,
        choices: Optional[Iterable] = None,
        flags: Optional[Sequence[str]] = None
    ):
        """
        :param desc: 描述。
        :param default: 默认值，缺省表示必填。
        :param choices: 枚举值。
        :param flags: 命令行选项名（如 `('-g', '--genus')`）。
        """
        kwargs = {}
        click_kwargs = {}
        if desc is not None:
            kwargs['description'] = desc
        kwargs['default'] = default
        if choices is not None:
            click_kwargs['type'] = click.Choice(choices)
        if flags is not None:
            click_kwargs['param_decls'] = tuple(flags)
        if click_kwargs:
            kwargs['json_schema_extra'] = {'typed-settings': {'click': click_kwargs}}
        super().__init__(**kwargs)


class RunConfig(BaseModel):
    """
    运行参数表。
    """
    genus: int = Option(desc='Surface genus g >= 1.',
                        flags=('-g', '--genus'))
    truncation: Optional[int] = Option(desc='Truncation weight (default: level + 3).',
                                       default=None)
    expansion: Optional[str] = Option(desc='Expansion (default: the natural one for --kind).',
                                      default=None,
                                      choices=EXPANSIONS)
    seed: int = Option(desc='Seed of the perturbed expansion.',
                       default=0)
    format: str = Option(desc='Output format.',
                         default='text',
                         choices=('text', 'yaml'))
    endos: Optional[str] = Option(desc='YAML file of named user endomorphisms.',
                                  default=None)


def resolve_truncation(config: RunConfig, level: int) -> int:
    """
    显式给定的截断须不小于 level + 3，否则取 level + 3。

    >>> resolve_truncation(RunConfig(genus=2), 1)
    4
    """
    need = level + TRUNCATION_SHIFT
    if config.truncation is None:
        return need
    if config.truncation < need:
        raise MalformedInputError(f'truncation: {config.truncation} < level + 3 = {need}')
    return config.truncation
