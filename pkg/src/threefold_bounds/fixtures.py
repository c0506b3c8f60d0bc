"""Built-in named threefold records."""

from fractions import Fraction

from .basket import parse_basket
from .riemann_roch import ThreefoldData

DELTA18_BASKET = "4*(1,2) (4,9) (2,5) (5,13) 3*(1,3) 2*(1,4)"


def delta18() -> ThreefoldData:
    """The numerical data forced on a minimal 3-fold of general type with delta = 18.

    Both K^3 and the constraint P2 = 0 are stored so that K^3 is cross-checked.
    """
    return ThreefoldData(
        chi=2,
        q=0,
        pg=0,
        basket=parse_basket(DELTA18_BASKET),
        k3=Fraction(1, 1170),
        known_plurigenera=((2, 0),),
    )


FIXTURES = {"delta18": delta18}

# Plurigenus values the verifier expects on the delta18 record.
DELTA18_PLURIGENERA = {2: 0, 8: 1, 18: 2, 19: 0, 24: 3, 36: 8}
