"""rigiditybench で使う例外クラス

入力の不正はすべて ``ValueError`` の派生として送出します。
"""


class MismatchedRings(ValueError):
    """異なる環の元どうしを演算しようとした"""


class NotAUnit(ValueError):
    """単元でない元の逆元を要求した"""


class CharacteristicPrimeError(ValueError):
    """係数素数 p が剰余体の標数と一致している"""


class ReducibleModulus(ValueError):
    """拡大体の定義多項式が既約でない"""


class GuardExceeded(ValueError):
    """列挙サイズが上限を超えた"""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds guard {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class TupleNotGP(ValueError):
    """点の組が一般の位置にない"""


class IncompatibleMap(ValueError):
    """写像が始域の関係式を消さない"""


class PhiNotWellDefined(ValueError):
    """φ̄ が五項関係式を消さない（算術のバグを示す）"""


class LevelTooLow(ValueError):
    """合同レベルが ρ_i の定義域に届いていない"""
