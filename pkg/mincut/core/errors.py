"""
异常体系
CLI 根据异常类型映射退出码: 1 输入错误 / 2 差分不一致 / 3 资源护栏
"""


class MincutError(Exception):
    """所有库内异常的基类"""


class NetworkFormatError(MincutError, ValueError):
    """网络文件格式错误 (带行号)"""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{prefix}{message}")


class PreconditionError(MincutError, ValueError):
    """操作前置条件不满足"""


class DisconnectedNetworkError(PreconditionError):
    """网络不连通 (从节点 1 出发 PLSA 无法到达所有节点)"""


class GenSpecError(PreconditionError):
    """随机实例规格不可行"""


class ResourceLimitError(MincutError):
    """规模护栏触发 (穷举 2^m / IET 2^c 项过多)"""


class DifferentialMismatch(MincutError):
    """不同算法得到的 MC 集合不一致"""


class ReportFormatError(MincutError, ValueError):
    """机器格式报告无法解析"""
