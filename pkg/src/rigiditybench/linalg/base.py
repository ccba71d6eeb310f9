from abc import ABC, abstractmethod

from rigiditybench.linalg.matrix import PrimeFieldMatrix


class BaseRankBackend(ABC):
    """Z/p 上の階数計算の抽象基底クラス"""

    name: str = ""

    @abstractmethod
    def rank(self, matrix: PrimeFieldMatrix) -> int:
        """
        Z/p 上の階数を返す。入力は変更しない。

        Args:
            matrix: 素体上の疎行列

        Returns:
            int: 階数
        """
        pass
