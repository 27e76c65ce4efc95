"""
统一的异常定义
每个异常携带 exit_code，CLI 据此映射退出码
"""

from typing import Optional


class ToolkitError(Exception):
    """工具包异常基类"""

    exit_code = 1

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        data = {'error': type(self).__name__, 'message': self.message}
        for key, value in self.details.items():
            data[key] = value if isinstance(value, (int, str, bool, type(None))) else str(value)
        return data


# ---- 输入错误 (exit 2) ----

class InputError(ToolkitError):
    exit_code = 2


class PolynomialSyntaxError(InputError):
    """多项式表达式语法错误"""

    def __init__(self, text: str, position: int, expected: str):
        super().__init__(
            f"syntax error at position {position}: expected {expected}",
            text=text, position=position, expected=expected,
        )
        self.position = position
        self.expected = expected


class UnknownVariable(InputError):
    def __init__(self, name: str, position: Optional[int] = None):
        super().__init__(f"unknown variable '{name}'", name=name, position=position)
        self.name = name


class NonHomogeneousInput(InputError):
    pass


class ManifestError(InputError):
    pass


class UnknownGalleryName(InputError):
    pass


class VariableNameClash(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class ZeroLinearForm(InputError):
    pass


class SingularMatrix(InputError):
    pass


class DenominatorDivisibleByP(InputError):
    pass


class NotPrime(InputError):
    pass


# ---- 结构前提不满足 (exit 3) ----

class StructureError(ToolkitError):
    exit_code = 3


class NotArtinian(StructureError):
    def __init__(self, variable: str):
        super().__init__(f"quotient is not Artinian: no pure power of '{variable}' in the initial ideal",
                         variable=variable)
        self.variable = variable


class NotGorenstein(StructureError):
    pass


class NonSymmetricHilbert(StructureError):
    pass


class HypothesisFails(StructureError):
    """A/0:z^k 既不是完全交也不是零代数"""

    def __init__(self, k: int, reason: str):
        super().__init__(f"hypothesis fails at k={k}: {reason}", k=k, reason=reason)
        self.k = k


# ---- 校验失败 (exit 1) ----

class VerificationFailed(ToolkitError):
    exit_code = 1


class InternalConsistencyError(ToolkitError):
    """内部交叉校验失败（说明实现有误，而非定理有误）"""
    exit_code = 1
