"""検査スイート

- :class:`rigiditybench.suites.base.BaseSuite`: スイートの基底クラス
- ``SUITES``: スイート名からクラスへの対応
"""

from .abelian import AbelianSuite
from .base import BaseSuite, SuiteContext
from .bloch import BlochSuite
from .complex import ComplexSuite
from .congruence import CongruenceSuite
from .e1 import E1Suite
from .orbits import OrbitsSuite
from .p1 import P1Suite
from .qcomplex import QuotientComplexSuite
from .units import UnitsSuite

SUITES = {
    suite.name: suite
    for suite in (
        UnitsSuite,
        P1Suite,
        ComplexSuite,
        OrbitsSuite,
        QuotientComplexSuite,
        E1Suite,
        BlochSuite,
        CongruenceSuite,
        AbelianSuite,
    )
}

__all__ = [
    "SUITES",
    "AbelianSuite",
    "BaseSuite",
    "BlochSuite",
    "ComplexSuite",
    "CongruenceSuite",
    "E1Suite",
    "OrbitsSuite",
    "P1Suite",
    "QuotientComplexSuite",
    "SuiteContext",
    "UnitsSuite",
]
