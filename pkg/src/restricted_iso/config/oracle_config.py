from dataclasses import dataclass


@dataclass
class OracleConfig:
    '''
    暴力枚举 oracle 配置
    args:
        element_cap: int = 枚举群元素上限
        permutation_degree_cap: int = 穷举全部 n! 个双射时 n 的上限
    '''

    element_cap: int = 10 ** 7

    permutation_degree_cap: int = 10
