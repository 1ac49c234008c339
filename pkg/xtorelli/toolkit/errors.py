# Copyright (c) 2025-2026, zhaowcheng <zhaowcheng@163.com>

"""
异常类。
"""

from typing import Any, Optional


class XTorelliError(Exception):
    """
    所有异常的基类。
    """
    pass


class MalformedInputError(XTorelliError):
    """
    输入格式错误（如生成元下标越界）。
    """
    pass


class GenusMismatchError(XTorelliError):
    """
    亏格不一致。
    """
    pass


class AlphabetMismatchError(XTorelliError):
    """
    字母表不一致。
    """
    pass


class WeightMismatchError(XTorelliError):
    """
    权重不相容。
    """
    pass


class ConstantTermError(XTorelliError):
    """
    级数常数项不满足要求。
    """
    pass


class NotPrimitiveError(XTorelliError):
    """
    张量不是本原元（不在自由李代数中）。
    """
    pass


class MembershipError(XTorelliError):
    """
    不属于滤链中的某一项。
    """
    def __init__(
        self,
        message: str,
        generator: Optional[str] = None,
        degree: Optional[int] = None,
        slice: Any = None
    ):
        """
        :param message: 描述。
        :param generator: 第一个违反条件的生成元（缺陷词）。
        :param degree: 第一个非零的权重。
        :param slice: 该权重上的非零分量。
        """
        super().__init__(message)
        self.generator = generator
        self.degree = degree
        self.slice = slice


class NotLagrangianError(XTorelliError):
    """
    映射类不保持 Lagrangian 子群 A。
    """
    pass


class NotInImageError(XTorelliError):
    """
    导子不在 η 的像中（Ξ 不为零）。
    """
    pass


class ConsistencyError(XTorelliError):
    """
    内部一致性检查失败，意味着程序缺陷。
    """
    pass


class McWordParseError(XTorelliError):
    """
    映射类单词解析错误。
    """
    def __init__(self, message: str, position: int = 0):
        """
        :param message: 描述。
        :param position: 出错位置（从 0 开始）。
        """
        super().__init__(message)
        self.position = position


class ValidationError(XTorelliError):
    """
    自同态不保持边界词。
    """
    def __init__(self, message: str, defect: Any = None):
        """
        :param message: 描述。
        :param defect: 边界缺陷词 h(ζ)ζ⁻¹。
        """
        super().__init__(message)
        self.defect = defect


class SchemaError(XTorelliError):
    """
    结构化文本不符合格式约定。
    """
    pass
