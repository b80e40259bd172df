from dataclasses import dataclass


@dataclass
class ReductionConfig:
    '''
    换作用(change of action)约化配置，参数说明
    args:
        c1: float = 小群阈值 n^(c1*log2(d)+c2) 中的系数
        c2: float = 小群阈值中的常数项
        socle_cap: int = 计算 socle 时允许枚举的最大群阶
        johnson_cap: int = Johnson 作用识别允许的最大点数
        johnson_fallback: int = 点数不超过此值时，识别失败后用图同构穷举
        johnson_guard: bool = 是否要求 m > 4*log2(C(m,t))，不满足时归为 SMALL
        augment_cap: int = 约化后新点集 Omega* 的最大点数
    '''

    c1: float = 1.0

    c2: float = 10.0

    socle_cap: int = 10 ** 6

    johnson_cap: int = 10 ** 4

    # 穷举回退的点数上限
    johnson_fallback: int = 120

    johnson_guard: bool = True

    augment_cap: int = 10 ** 5
