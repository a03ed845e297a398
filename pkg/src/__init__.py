# GitFan 带对称性的 GIT 扇计算
"""
GitFan: 仿射簇上环面作用的 GIT 扇计算，利用对称群只遍历极大锥的轨道代表

主要功能:
- 多项式引擎 (Buchberger、四种饱和方法、𝔞-面判定)
- 锥引擎 (双描述法、规范形、面与对偶)
- 对称群 (带符号置换、诱导矩阵、子集轨道)
- GIT 扇遍历 (轨道锥表、哈希、对称/普通遍历、检查点)
- 内置数据集 (cube, g25, m06) 与命令行、API
"""

__version__ = "0.1.0"
__author__ = "GitFan Team"
