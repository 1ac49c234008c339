# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>


__version__ = '0.1.0'
