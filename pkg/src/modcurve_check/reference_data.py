"""Published models, coordinates and tabulated values that the suites check.

Elements of K are written as power-basis coefficient lists (constant first)
over a common denominator.  Table rows use a with a^2 = D.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import K, QQ
from .poly import MoebiusMap, UniPoly


def kel(coeffs, den=1):
    return K.from_coeffs(coeffs, den)


# -- X1(13) over K -------------------------------------------------------------

X13_F = [1, 2, 1, 2, 6, 4, 1]  # x^6 + 4x^5 + 6x^4 + 2x^3 + x^2 + 2x + 1

INVOLUTION_B = kel([0, -6, 0, 5, 0, -1])
INVOLUTION_C = kel([-1, -6, 0, 5, 0, -1])

D1 = kel([1, 0, -6, 3, 2, -1])
D2 = kel([-5, 6, 8, -5, -2, 1])

EVEN_C0 = kel([175, -218, -193, 240, 48, -52], 208)
EVEN_C2 = kel([-25, -77, 38, 99, 0, -18], 208)
EVEN_C4 = kel([69, 296, -9, -238, 0, 40], 208)
EVEN_C6 = kel([-11, -1, 164, -101, -48, 30], 208)

EPRIME_B = kel([69, 296, -9, -238, 0, 40], 208)
EPRIME_C = kel([-16, -73, -19, 38, 11, -1], 3328)
EPRIME_D = kel([252, 1092, -30, -939, -4, 180], 692224)

ORDER19_X = kel([181, 799, 36, -681, -36, 134], 208)

# affine cusps (x, y); each comes with (x, -y).  Plus the two points at infinity.
X13_AFFINE_CUSPS = [
    (K(0), K(1)),
    (K(-1), K(1)),
    (kel([-1, -3, 1, 4, 0, -1]), kel([-5, -21, 19, 31, -6, -6])),
    (kel([2, -3, -1, 1]), kel([33, -26, -66, 43, 18, -11])),
    (kel([0, 6, 0, -5, 0, 1]), kel([12, 45, 5, -32, -4, 5])),
]

SPLITTING = {3: [3, 3], 5: [2, 2, 2]}
JACOBIAN_ORDERS = {(3, 3): 4 * 19 ** 2, (5, 2): 19 ** 2}
CUSP_SUBGROUP_ORDER = 19 ** 2
DEG_LT2_COUNT = 23
DISCRIMINANT_SUPPORT = {2: 12, 13: 2}


def x13_polynomial(field=K, coeffs=X13_F) -> UniPoly:
    return UniPoly(coeffs, field)


def x13_involution() -> MoebiusMap:
    return MoebiusMap(K.one, INVOLUTION_B, INVOLUTION_C, -K.one)


# -- X0(37) over Q ---------------------------------------------------------------

X37_F = [Fraction(-1), 3, -6, 7, -5, 2, Fraction(1, 4)]
X37_G = [-1, 3, -6, 7, -5, 2]  # working model y^2 - x^3 y = g(x)
X37_EVEN = (Fraction(-1, 64), Fraction(-9, 64), Fraction(-11, 64), Fraction(37, 64))
E37_AINVS = (0, 0, 1, -1, 0)


def x37_involution() -> MoebiusMap:
    return MoebiusMap(QQ.one, QQ.zero, QQ.one, -QQ.one)


# -- tabulated quadratic points on X0(37) -----------------------------------
# (D, x, y, curve): x = (x0 + x1 a)/xd as (x0, x1, xd), likewise y;
# curve is ("AB", A, B) with A, B given the same way, ("j", value) or ("tag", 0|1728).

TABLE1 = [
    (-3, (1, -1, 2), (0, 0, 1), ("AB", (-3285, 315, 2), (-24948, 3630, 1))),
    (-7, (1, -1, 4), (0, 0, 1), ("AB", (6345, -765, 8), (-40635, -30753, 8))),
    (-11, (1, -1, 6), (-4, 1, 9), ("AB", (2848, -640, 3), (356048, 75040, 27))),
    (-1, (2, -4, 5), (-11, 2, 25), ("tag", 1728)),
    (-3, (1, -3, 14), (20, -18, 49), ("tag", 0)),
    (-7, (9, -3, 8), (9, 5, 16), ("AB", (-207315, 34425, 32), (-11925711, 3224205, 64))),
    (
        -159,
        (25, -5, 92),
        (-1695, 63, 8464),
        ("j", (394997768625969, 1992776643585, 274877906944)),
    ),
    (
        -67,
        (49, -7, 58),
        (-1995, -150, 841),
        ("AB", (-16964640, 126720, 841), (26856906048, -301386960, 24389)),
    ),
    (
        -173,
        (8, -4, 177),
        (-36050, 5635, 93987),
        ("AB", (214423015, -2366000, 93987), (1346165714530, 473705169712, 149721291)),
    ),
    (
        -2051,
        (529, -23, 1290),
        (-452732, 1624, 2080125),
        (
            "AB",
            (-6547514791, -269113, 6933750),
            (-383038176258584, -3221900558162, 33542015625),
        ),
    ),
    (
        -7951,
        (841, -29, 4396),
        (3837251, -31211, 16909214),
        (
            "AB",
            (825198488937, 2989314135, 473457992),
            (46768183795198699, -1023161515376435, 3642312332456),
        ),
    ),
    (
        4521,
        (-3481, -59, 520),
        (-167683133, -2495247, 540800),
        (
            "AB",
            (-1272066914239, -12322582501, 10816000),
            (1250157035949620211, 20998975870933249, 5061888000),
        ),
    ),
    (
        -124027,
        (16641, -129, 70334),
        (-9806545170, 15848993, 28444511447),
        (
            "AB",
            (792633701552976, -3683948697936, 2081621064985),
            (625337457592756853499120, 339400774163819886912, 92603525510294281175),
        ),
    ),
]


def quad(ext, triple):
    """(c0, c1, den) -> (c0 + c1 a)/den in ``ext`` (a = sqrt of its radicand)."""
    c0, c1, den = triple
    return ext.element(Fraction(c0, den), Fraction(c1, den))
