# 异常定义
"""
GIT 扇计算的统一异常层次

- ValidationError: 输入数据不合法 (CLI 退出码 2)
- ComputationError: 计算过程中无法满足的条件 (CLI 退出码 3)
- CheckpointError: 检查点文件不可用
"""


class GitFanError(Exception):
    """GIT 扇相关错误基类"""
    pass


class ValidationError(GitFanError):
    """输入校验错误

    Args:
        kind: 错误类别，如 FullRank、Homogeneity、GroupCompatibility
        message: 详细说明
    """

    def __init__(self, kind: str, message: str = ""):
        self.kind = kind
        self.message = message
        super().__init__(f"{kind}: {message}" if message else kind)


class ParseError(ValidationError):
    """文本解析错误，带行列位置 (从 1 开始计数)"""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        self.line = line
        self.col = col
        super().__init__("Parse", f"{message} at line {line}, col {col}")


class DimensionMismatch(ValidationError):
    """向量或矩阵维数不一致"""

    def __init__(self, message: str = ""):
        super().__init__("Dimension", message)


class DatasetError(ValidationError):
    """内置数据集摘要或转录长度不一致"""

    def __init__(self, message: str = ""):
        super().__init__("Dataset", message)


class ComputationError(GitFanError):
    """计算错误基类"""
    pass


class NoSolution(ComputationError):
    """线性方程组无解"""
    pass


class HypothesisViolated(ComputationError):
    """单变量饱和的前提 (Y_m | f 当且仅当 Y_m | LM(f)) 不成立"""
    pass


class NotHomogeneous(ComputationError):
    """理想关于给定权重不是齐次的"""
    pass


class NonPositiveWeight(ComputationError):
    """权重向量存在非正分量"""
    pass


class NotASymmetry(ComputationError):
    """置换不保持 ker(Q)，不存在诱导矩阵"""
    pass


class BoundExceeded(ComputationError):
    """群闭包元素数超过上限"""
    pass


class OutsideSupport(ComputationError):
    """权重点不在支撑锥内"""
    pass


class NoNeighbor(ComputationError):
    """内部面的相邻锥搜索失败"""
    pass


class NoFullDimStart(ComputationError):
    """找不到满维的起始 GIT 锥"""
    pass


class NoUniqueFixedOrbit(ComputationError):
    """结果中长度为 1 的轨道不唯一"""
    pass


class CheckpointError(GitFanError):
    """检查点读写或兼容性错误"""
    pass
