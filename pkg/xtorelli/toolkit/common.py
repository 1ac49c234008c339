# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
公共变量/常量。
"""

from pathlib import Path


TOOLKIT_DIR: Path = Path(__file__).parent

STATICS_DIR = TOOLKIT_DIR.joinpath('statics')

EXAMPLE_ENDOS = STATICS_DIR.joinpath('endos.yml')

# 环境变量前缀（TORELLI_TRUNCATION 等）
APPNAME = 'torelli'

# τ_m^a 的默认截断为 m + 3
TRUNCATION_SHIFT = 3

CERTIFICATE = 'rational'

KINDS = ('alt', 'classical', 'levine')

EXPANSIONS = ('default-alt', 'classical', 'handlebody', 'perturbed')
