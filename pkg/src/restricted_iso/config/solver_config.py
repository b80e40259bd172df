from dataclasses import dataclass


@dataclass
class SolverConfig:
    '''
    字符串同构求解器配置，参数说明
    args:
        brute_cap: int = 群阶不超过此值时直接枚举求解(递归的底)
        enumeration_cap: int = 枚举群元素的上限
        transversal_cap: int = 标准 Luks 约化中陪集代表元个数上限
        d_cap: int = setwise stabilizer 回溯搜索允许的最大集合大小
        random_seed: int = Schreier-Sims 随机预热使用的种子，保证输出可复现
        random_rounds: int = 随机预热中连续无效筛选的轮数
    '''

    # 群阶不超过此值时直接枚举
    brute_cap: int = 10 ** 4

    # 枚举群元素的上限
    enumeration_cap: int = 10 ** 7

    # 标准 Luks 约化的陪集代表元上限
    transversal_cap: int = 10 ** 6

    # 回溯搜索允许的最大集合大小
    d_cap: int = 24

    random_seed: int = 20240601

    random_rounds: int = 20
