from dataclasses import dataclass
from typing import Optional


@dataclass
class CertificateConfig:
    '''
    局部证书(local certificates)配置，参数说明
    args:
        transitivity_bound: int = 非 giant 的多重传递群的传递度上界，作为常数使用
        kernel_luks_factor: int = k <= factor*t 时直接对 ker(phi) 做 Luks 约化
        t_override: int|None = 指定测试集大小 t，None 表示 max(9, ceil(3+log2 d))
        allow_small_t: bool = 仅供测试: 放宽 t > max(8, 2+log2 d) 的前提，违反定理假设
    '''

    transitivity_bound: int = 5

    kernel_luks_factor: int = 10

    t_override: Optional[int] = None

    # 仅供测试使用
    allow_small_t: bool = False
