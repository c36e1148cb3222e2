"""The bundled mathematical data sets: products, sums, operators, certificates.

Everything here is fixed input data for the verification tasks: infinite
product descriptions, quadruple-sum specifications, scalar q-difference
operators, the profile recursion displays, and four certificate sets
proving the q-holonomic recurrences.  Formulas are written with u = q^n
and v_i = q^(k_i).

Two certificate coefficients carry a one-token emendation (selected by
verification, recorded in the project notes): a stray x in one g111
coefficient read as q, and one exponent token 3n+12 read as 3n+2 in each
of the two order-six sets.  The verbatim readings are kept available for
the soundness probes.
"""

from __future__ import annotations

from .holonomic import (
    AGSumSpec,
    CertificateSet,
    HypTerm,
    QDiffOperator,
    Symbols,
)
from .laurent import LaurentPoly
from .series import PochhammerSpec

# ----------------------------------------------------------------------
# infinite products

PRODUCT_D123 = PochhammerSpec.quotient(
    num=[(2, 6), (4, 6)],
    den=[(1, 6), (1, 6), (3, 6), (3, 6), (5, 6), (5, 6)],
)

PRODUCT_D1234 = PochhammerSpec.quotient(num=[], den=[(2, 6), (3, 6), (3, 6), (4, 6)])

PRODUCT_AUX = PochhammerSpec.quotient(num=[], den=[(1, 3), (2, 3)])

EULER_PRODUCT = PochhammerSpec.quotient(num=[(1, 1)], den=[])


# ----------------------------------------------------------------------
# quadruple sums
#
# shared quadratic: a^2+b^2+3c^2+3d^2+2ab+3ac+3ad+3bc+3bd+6cd

_QUAD2 = (
    (2, 2, 3, 3),
    (2, 2, 3, 3),
    (3, 3, 6, 6),
    (3, 3, 6, 6),
)
_BASES = (1, 1, 3, 3)

#: length-graded sum equal to the D1-D3 class generating function
AG_D123 = AGSumSpec(_QUAD2, (0, 0, 0, 0), (1, 1, 2, 2), _BASES)

#: length-graded sum equal to the D1-D4 class generating function
AG_D1234 = AGSumSpec(_QUAD2, (1, 2, 3, 3), (1, 1, 2, 2), _BASES)

#: max-part-graded sum equal to G_(1,1,1)
AG_G111 = AGSumSpec(_QUAD2, (0, 0, 0, 0), (1, 1, 1, 2), _BASES)

#: max-part-graded sum equal to G_(3,0,0)
AG_G300 = AGSumSpec(_QUAD2, (1, 2, 3, 3), (1, 1, 1, 2), _BASES)

#: auxiliary sum equal to 1/(q, q^2; q^3)_inf at x = 1
AG_AUX = AGSumSpec(_QUAD2, (0, 1, 1, 2), (1, 1, 2, 2), _BASES)


# ----------------------------------------------------------------------
# scalar q-difference operators (shift step x -> x q^3)

XQ = ("x", "q")
_X = LaurentPoly.variable(XQ, "x")
_Q = LaurentPoly.variable(XQ, "q")
_1 = LaurentPoly.one(XQ)


def _op(*terms: tuple[LaurentPoly, int]) -> QDiffOperator:
    return QDiffOperator(tuple((c, s) for c, s in terms if not c.is_zero()), step=3)


def qdiff_operator_d123() -> QDiffOperator:
    """Order-3 operator annihilating the length-graded D1-D3 series."""
    x, q = _X, _Q
    c0 = 2 + 3 * x * q**4 + x * q**6
    c1 = (
        2 + 4 * x * q + 4 * x * q**2 + 4 * x * q**3 + 3 * x * q**4 + x * q**6
        + 4 * x**2 * q**3 + 6 * x**2 * q**4 + 6 * x**2 * q**5 + 8 * x**2 * q**6
        + 2 * x**2 * q**7 + 2 * x**2 * q**8 + 2 * x**2 * q**9
        + 6 * x**3 * q**7 + 2 * x**3 * q**9 + 3 * x**3 * q**10 + x**3 * q**12
    )
    c2 = x**2 * q**7 * (
        2 + 2 * q + 3 * x * q + 4 * x * q**2 + x * q**3 + 4 * x * q**4 - x * q**5
        + 4 * x * q**6 + x * q**7 + 2 * x**2 * q**5 + 6 * x**2 * q**7
        + 6 * x**2 * q**8 + 2 * x**2 * q**9 + 2 * x**2 * q**10 + 4 * x**2 * q**11
        + 3 * x**3 * q**9 + x**3 * q**11 + 6 * x**3 * q**12 + 2 * x**3 * q**14
    )
    c3 = x**4 * q**21 * (_1 - x * q**6) ** 2 * (2 + 3 * x * q + x * q**3)
    return _op((c0, 0), (-c1, 1), (c2, 2), (-c3, 3))


def qdiff_operator_d1234() -> QDiffOperator:
    """Order-3 operator annihilating the length-graded D1-D4 series."""
    x, q = _X, _Q
    c0 = 1 + x * q**5 + x * q**7
    c1 = (
        1 + x * q**2 + 2 * x * q**3 + 2 * x * q**4 + 2 * x * q**5 + x * q**7
        + 3 * x**2 * q**6 + 2 * x**2 * q**7 + 3 * x**2 * q**8 + 3 * x**2 * q**9
        + 2 * x**2 * q**10 + x**2 * q**11 + x**2 * q**12
        + 2 * x**3 * q**11 + 2 * x**3 * q**13 + x**3 * q**14 + x**3 * q**16
    )
    c2 = x**2 * q**10 * (
        1 + q + x * q**2 + x * q**3 + 2 * x * q**4 + 2 * x * q**6 + x * q**7
        + x * q**8 - x**2 * q**7 + 2 * x**2 * q**8 + x**2 * q**9 + 2 * x**2 * q**10
        + 3 * x**2 * q**11 + x**2 * q**12 + x**2 * q**13 + 2 * x**2 * q**14
        + x**3 * q**13 + x**3 * q**15 + 2 * x**3 * q**16 + 2 * x**3 * q**18
    )
    c3 = x**4 * q**27 * (_1 - x * q**6) * (_1 - x * q**9) * (1 + x * q**2 + x * q**4)
    return _op((c0, 0), (-c1, 1), (c2, 2), (-c3, 3))


def qdiff_operator_g300() -> QDiffOperator:
    """Order-2 operator annihilating G_(3,0,0)."""
    x, q = _X, _Q
    c0 = 1 + x * q**5
    c1 = (
        1 + x * q**2 + 2 * x * q**3 + 2 * x * q**4 + 2 * x * q**5
        + 2 * x**2 * q**6 + 2 * x**2 * q**7 + 2 * x**2 * q**8 + x**2 * q**9
        + x**3 * q**11
    )
    c2 = x * q**6 * (1 + x * q**2) * (_1 - x * q**4) * (_1 - x * q**5)
    return _op((c0, 0), (-c1, 1), (-c2, 2))


def qdiff_operator_g111() -> QDiffOperator:
    """Order-2 operator annihilating G_(1,1,1)."""
    x, q = _X, _Q
    c0 = 1 + x * q**4
    c1 = (
        1 + 2 * x * q + 2 * x * q**2 + 2 * x * q**3 + x * q**4
        + x**2 * q**3 + 2 * x**2 * q**4 + 2 * x**2 * q**5 + 2 * x**2 * q**6
        + x**3 * q**7
    )
    c2 = x * q**3 * (1 + x * q) * (_1 - x * q**4) * (_1 - x * q**5)
    return _op((c0, 0), (-c1, 1), (-c2, 2))


def coupled_g_system() -> list[list[LaurentPoly]]:
    """The 2x2 first-order system for (G_(3,0,0), G_(1,1,1)) at shift q^3."""
    x, q = _X, _Q
    return [
        [2 * x * q**3, 1 + x * q**2],
        [3 * x * q**3 * (1 + x * q), 1 + 2 * x * q + 2 * x * q**2 + x**2 * q**3],
    ]


#: profile recursion displays: target profile = sum of (coeff, xshift, source)
RECURSION_DISPLAYS: list[tuple[tuple[int, ...], list[tuple[LaurentPoly, int, tuple[int, ...]]]]] = [
    ((3, 0, 0), [(_1, 1, (2, 1, 0))]),
    ((2, 1, 0), [(2 * _1, 1, (2, 0, 1)), (-(_1 - _X * _Q), 2, (1, 1, 1))]),
    (
        (2, 0, 1),
        [(_1, 1, (3, 0, 0)), (_1, 1, (1, 1, 1)), (-(_1 - _X * _Q), 2, (2, 1, 0))],
    ),
    (
        (1, 1, 1),
        [
            (3 * _1, 1, (2, 1, 0)),
            (-3 * (_1 - _X * _Q), 2, (2, 0, 1)),
            ((_1 - _X * _Q) * (_1 - _X * _Q**2), 3, (1, 1, 1)),
        ],
    ),
]

#: derived first-order relations, same encoding
FIRST_ORDER_RELATIONS: list[tuple[tuple[int, ...], list[tuple[LaurentPoly, int, tuple[int, ...]]]]] = [
    ((2, 0, 1), [(_1, 1, (1, 1, 1)), (_X * _Q, 1, (3, 0, 0))]),
    ((2, 1, 0), [(_1 + _X * _Q, 2, (1, 1, 1)), (2 * _X * _Q**2, 2, (3, 0, 0))]),
    ((3, 0, 0), [(_1 + _X * _Q**2, 3, (1, 1, 1)), (2 * _X * _Q**3, 3, (3, 0, 0))]),
    (
        (1, 1, 1),
        [
            (3 * _X * _Q**3 * (_1 + _X * _Q), 3, (3, 0, 0)),
            (_1 + 2 * _X * _Q + 2 * _X * _Q**2 + _X**2 * _Q**3, 3, (1, 1, 1)),
        ],
    ),
]


# ----------------------------------------------------------------------
# hypergeometric terms behind the four certificates
#
# Written over (n, k1, k2, k3); the quadratic parts are the closed forms
# of the substituted exponents:
#   grading n = a+b+c+2d:   n^2 + c^2 + d^2 + nc - nd + cd
#   grading n = a+b+2c+2d:  n^2 + c^2 + d^2 - nc - nd + 2cd

_QUAD_NARROW = (
    (2, 0, 1, -1),
    (0, 0, 0, 0),
    (1, 0, 2, 1),
    (-1, 0, 1, 2),
)
_QUAD_WIDE = (
    (2, 0, -1, -1),
    (0, 0, 0, 0),
    (-1, 0, 2, 2),
    (-1, 0, 2, 2),
)

TERM_G111 = HypTerm(
    nsum=3,
    quad2=_QUAD_NARROW,
    lin=(0, 0, 0, 0),
    const=0,
    pochs=(
        ((1, -1, -1, -2), 0, 1),  # (q;q)_(n-b-c-2d)
        ((0, 1, 0, 0), 0, 1),     # (q;q)_b
        ((0, 0, 1, 0), 0, 3),     # (q^3;q^3)_c
        ((0, 0, 0, 1), 0, 3),     # (q^3;q^3)_d
    ),
    names=("n", "b", "c", "d"),
)

TERM_G300 = HypTerm(
    nsum=3,
    quad2=_QUAD_NARROW,
    lin=(2, -1, 1, -1),
    const=0,
    pochs=(
        ((0, 1, 0, 0), 0, 1),     # (q;q)_a
        ((1, -1, -1, -2), 0, 1),  # (q;q)_(n-a-c-2d)
        ((0, 0, 1, 0), 0, 3),
        ((0, 0, 0, 1), 0, 3),
    ),
    names=("n", "a", "c", "d"),
)

TERM_D123 = HypTerm(
    nsum=3,
    quad2=_QUAD_WIDE,
    lin=(0, 0, 0, 0),
    const=0,
    pochs=(
        ((1, -1, -2, -2), 0, 1),  # (q;q)_(n-b-2c-2d)
        ((0, 1, 0, 0), 0, 1),
        ((0, 0, 1, 0), 0, 3),
        ((0, 0, 0, 1), 0, 3),
    ),
    names=("n", "b", "c", "d"),
)

TERM_D1234 = HypTerm(
    nsum=3,
    quad2=_QUAD_WIDE,
    lin=(2, -1, -1, -1),
    const=0,
    pochs=(
        ((0, 1, 0, 0), 0, 1),     # (q;q)_a
        ((1, -1, -2, -2), 0, 1),  # (q;q)_(n-a-2c-2d)
        ((0, 0, 1, 0), 0, 3),
        ((0, 0, 0, 1), 0, 3),
    ),
    names=("n", "a", "c", "d"),
)


# ----------------------------------------------------------------------
# certificate sets


def _families_g111(s: Symbols, verbatim: bool = False):
    q, u = s.q, s.u
    vb, vc, vd = s.v1, s.v2, s.v3
    B, C, D = s.K1, s.K2, s.K3
    w = vb * vc**2 * vd          # q^(b+2c+d)
    y = u * vc**2 * vd           # q^(n+2c+d)

    p0 = -2 * u**6 * q**8 - u**3 * q**12 + 2 * u**3 * q**8 + q**12
    r0 = 0 * q
    s0 = (2 * u**3 * q**8 + q**12) * (vb - 1)
    q0 = (4 * u**4 * q**9 + 2 * u**4 * q**8 + u * q**12 + 2 * u * q**10) * (u**2 - w) \
        + (2 * u**3 * q**8 + q**12) * (y - vb)

    p1 = -(2 * u**6 + 3 * u**3 * q**4 + 4 * u**3 * q**3 + 4 * u**3 * q**2
           + 2 * u**3 * q + 2 * q**6 + 2 * q**5 + 2 * q**4) * u**3 * q**5
    q1 = (4 * u**6 * q**6 + 2 * u**6 * q**5 + u**3 * q**9 + 2 * u**3 * q**7) \
        * (u**3 * C + q**2 * vb + (B - C * vb) * q**2 * y) \
        + (4 * u**7 * q**8 + 2 * u**7 * q**7 - u**4 * q**11 + 2 * u**4 * q**9 - u * q**12) * w \
        + u * q**7 * (2 * u**3 + q**4) * ((1 + C) * u**3 + D * q * vb) * vc**2 * vd \
        + (2 * u**3 * q**3 + 2 * u**3 * q + 2 * u**3 + q**5 + 2 * q**4) * u**3 * q**6
    r1 = 2 * u**9 * q**5 + u**6 * q**9
    s1 = (4 * u**6 * q**8 + 2 * u**6 * q**7 + u**3 * q**11 + 2 * u**3 * q**9) * (1 - vb) \
        + (2 * u**3 + q**4) * q**8 * u * w

    p2 = 2 * u**9 * q**4 + 2 * u**9 * q**3 - 3 * u**6 * q**8 + 2 * u**6 * q**5 \
        + u**6 * q**4 - u**3 * q**9
    # the term 2q^(6n+7) + q^(3n+8) below carries the one-token emendation
    # x^(3n+8) -> q^(3n+8); the verbatim reading is not even a monomial in
    # the certificate variables, so only the emended form is built.
    q2 = ((4 * u**10 * q**4 + 2 * u**10 * q**3 + u**7 * q**7 + 2 * u**7 * q**5) * (B + vb)
          + 2 * u**10 * q**3 + u**7 * q**7 - u**4 * q**8 * vb - 2 * u**7 * q**7 * vb) * C * vc**2 * vd \
        + (-2 * u**9 * q**4 + u**6 * q**8 - 2 * u**6 * q**5) \
        + 2 * (u**7 * q**7 + u**7 * q**4 + u**4 * q**8) * w \
        + (2 * u**6 * q**7 + u**3 * q**8) * (u**3 * q**-4 * C + B * y + y + q * vb)
    r2 = (2 * u**9 * q**3 + u**6 * q**4) - (2 * u**7 * q**4 + u**4 * q**8) * w
    s2 = (2 * u**6 * q**7 + u**3 * q**8) * (q * (1 - vb) - 2 * u * w)

    p3 = -(2 * u**9 * q**2 + u**6 * q**3)
    q3 = (2 * u**9 + u**6 * q) * (q**2 + (1 + vb + B) * C * y)
    r3 = (4 * u**3 + 2 * q) * u**7 * w
    s3 = 0 * q

    return {
        "p": [p0, p1, p2, p3],
        "q": [q0, q1, q2, q3],
        "r": [r0, r1, r2, r3],
        "s": [s0, s1, s2, s3],
    }


def _families_g300(s: Symbols, verbatim: bool = False):
    q, u = s.q, s.u
    va, vc, vd = s.v1, s.v2, s.v3
    A, C, D = s.K1, s.K2, s.K3
    w = va * vc**2 * vd          # q^(a+2c+d)
    y = u * vc**2 * vd           # q^(n+2c+d)

    r1 = (u**3 * q + u**3 + q**4) * u**6 * q**5
    p0 = (1 - u**3) * u**-6 * r1
    s0 = u**-6 * r1 * (va - 1)
    r0 = 0 * q
    q0 = (u**3 * q**2 + 3 * u**3 * q + 2 * u**3 + q**4 + q**2 + q) * u * q**5 * (u**2 - w) \
        + u**-6 * r1 * (y - va)

    p1 = -(r1 + 2 * u**6 * q**8 + 4 * u**6 * q**7 + 4 * u**6 * q**6 + 2 * u**6 * q**5
           + u**3 * q**10 + 2 * u**3 * q**9 + 2 * u**3 * q**8 + u**3 * q**7)
    p3 = -(u**3 * q + u**3 + q) * u**6 * q**2
    t = (u**3 * q**2 + 3 * u**3 * q + 2 * u**3 + q**4 + q**2 + q) * u**3 * q**6
    q1 = t * q**-1 * (A * y + q * va - C * q**2 * va * y + C * u**3) \
        + r1 * (C * q**2 + 1 + D * u**-3 * q * va) * u**-2 * vc**2 * vd \
        + (2 * r1 - p3 * q**5) * u**-3 \
        + (u * t + u**-5 * q**7 * p3) * w
    s1 = t * (1 - va) + r1 * u**-5 * q * va * vc**2 * vd
    r3 = (u**3 * q**2 + 2 * u**3 * q + u**3 + q**2 + q) * u**7 * q**2 * w

    p2 = (u**6 * q**2 + 2 * u**6 * q + u**6 - u**3 * q**6 - u**3 * q**5 - u**3 * q**4
          + u**3 * q**2 + 2 * u**3 * q - q**6) * u**3 * q**3
    q2 = t * A * C * u**4 * q**-2 * vc**2 * vd \
        - p3 * (A * u**-2 * q**4 * vc**2 * vd + C * q**2 + u**-2 * q**4 * vc**2 * vd + u**-3 * q**6 * va) \
        + r1 * C * u * q**-1 * vc**2 * vd \
        + (u**4 * q**-1 * t + p3 * u**-2 * q**6) * C * w \
        + p3 * q**2 + u**6 * q**4 * (-1 + q**3) \
        + (r1 - q**5 * p3) * u**-2 * w
    r2 = -p3 * q**2 - r1 * u**-2 * w
    s2 = -p3 * u**-3 * q**6 * (1 - va) \
        - (u**3 * q**2 + 2 * u**3 * q + u**3 + q**2 + q) * u**4 * q**6 * w

    q3 = -p3 * (1 + C * (A + 1 + q * va) * y)
    s3 = 0 * q

    return {
        "p": [p0, p1, p2, p3],
        "q": [q0, q1, q2, q3],
        "r": [r0, r1, r2, r3],
        "s": [s0, s1, s2, s3],
    }


def _families_d123(s: Symbols, verbatim: bool = False):
    q, u = s.q, s.u
    vb, vc, vd = s.v1, s.v2, s.v3
    B, C, D = s.K1, s.K2, s.K3
    w = vb * vc * vd             # q^(b+c+d)
    y = u * vc * vd              # q^(n+c+d)
    g = 6 * (q**2 + 3) * (q**3 - 1)
    t = 36 * u**3 * q + 12 * u**3 + q**8 + 9 * q**6 + 27 * q**4 + 27 * q**2
    e1 = 12 * u**3 + q**8 + 6 * q**6 + 9 * q**4
    e2 = 6 * u**3 * q**5 + 18 * u**3 * q**3 - 6 * u**3 * q**2 - 6 * u**3 + q**8 + 6 * q**6 + 9 * q**4
    e3 = 12 * u**3 - 2 * q**8 - 6 * q**6 + 3 * q**5 + 12 * q**3 + 9 * q
    e4 = 12 * u**3 + q**5 + 6 * q**3 + 9 * q

    p0 = -12 * u**6 * q**21 - u**3 * q**29 - 6 * u**3 * q**27 - 9 * u**3 * q**25 \
        + 12 * u**3 * q**21 + q**29 + 6 * q**27 + 9 * q**25
    r0 = g * u**3 * q**21 * (1 - vb)
    s0 = g * u**3 * q**21 * (1 - vb)
    q0 = t * u * q**21 * (u**2 - w) + g * u**3 * q**21 * (vb - y)

    p1 = -2 * (3 * u**3 * q**5 + 9 * u**3 * q**3 + 9 * u**3 * q**2 + 12 * u**3 * q + 3 * u**3
               + q**10 + q**9 + 4 * q**8 + 6 * q**7 + 6 * q**6 + 12 * q**5 + 9 * q**4 + 9 * q**3) * u**3 * q**19
    q1 = (-g * q * (C + D) + 36 * u**3 * q + 12 * u**3 + q**8 + 15 * q**6 + 45 * q**4
          - 6 * q**3 + 27 * q**2 - 18 * q) * u**4 * q**20 * w \
        + u**3 * q**20 * (e1 * (1 + q**-1 + y) + t * (vb + y * B))
    r1 = t * u**3 * q**20 * (1 - vb) - g * u**4 * q**21 * w
    s1 = t * u**3 * q**20 * (1 - vb) - g * u**4 * q**21 * w

    p2 = (12 * u**6 * q + 12 * u**6 + u**3 * q**9 - 8 * u**3 * q**8 - 6 * u**3 * q**7
          + 12 * u**3 * q**6 - 30 * u**3 * q**5 + 12 * u**3 * q**4 - 6 * u**3 * q**3
          + 12 * u**3 * q**2 + 9 * u**3 * q - q**13 - 6 * q**11 - 2 * q**10 - 9 * q**9
          - 12 * q**8 - 18 * q**6) * u**3 * q**16
    # one token of q2 is suspect: verbatim 12*q^(3n+12), emended 12*q^(3n+2)
    q2_tok = 12 * u**3 * q**12 if verbatim else 12 * u**3 * q**2
    q2 = (-12 * u**3 * q + 12 * u**3 - q**9 - 2 * q**8 - 6 * q**6 + 12 * q**5 - 6 * q**4
          + 12 * q**3 - 18 * q**2 + 9 * q) * u**6 * q**16 \
        + e2 * (B + 1) * u**4 * q**17 * vc * vd \
        - g * u**6 * q**18 * vb \
        + (36 * u**3 * q**3 + q2_tok + 12 * u**3 + q**10 + 10 * q**8 + 33 * q**6 + 36 * q**4) * u**4 * q**17 * w
    # second emended token: the closing term of r2 carries the factor 3 its
    # analogue in s2 carries; without it the telescoped sum has a residual
    r2_mult = 1 if verbatim else 3
    r2 = u**3 * q**18 * (g * u**3 * D * (vb - 1) + e2 - r2_mult * e4 * u * q**2 * w)
    s2 = e1 * u**3 * q**18 + g * u**6 * q**18 * vb - 3 * e4 * u**4 * q**20 * w

    p3 = (6 * u**3 * q**5 + 24 * u**3 * q**4 - 6 * u**3 * q**3 + 18 * u**3 * q**2 + 6 * u**3
          + 4 * q**11 + 2 * q**10 + 14 * q**9 + 8 * q**8 + 12 * q**7 + 6 * q**6 + 18 * q**5) * u**6 * q**12
    q3 = (e3 * (B + 1 + vb) + g * q**3 * vb * C * D) * u**7 * q**13 * vc * vd \
        + (-6 * u**3 * q**5 - 12 * u**3 * q**4 + 18 * u**3 * q**3 - 6 * u**3 * q**2 - 6 * u**3
           - q**10 - q**9 - 5 * q**8 - 6 * q**7 - 3 * q**6 - 9 * q**5 + 9 * q**4) * u**6 * q**12 \
        - t * u**6 * q**14 * vb
    r3 = t * u**6 * q**14 * D * (vb - 1) + g * D * u**7 * q**16 * w + e3 * u**6 * q**15
    s3 = -(24 * u**3 * q + 12 * u**3 + 2 * q**9 + q**8 + 6 * q**7 + 6 * q**6 + 15 * q**4
           + 18 * q**2) * u**6 * q**14 + t * u**6 * q**14 * vb + g * u**7 * q**16 * w

    p4 = (-12 * u**6 + 24 * u**3 * q**9 + 8 * u**3 * q**8 + 24 * u**3 * q**6 - 9 * u**3 * q**5
          - 18 * u**3 * q**3 - 9 * u**3 * q + 2 * q**14 + 12 * q**12 + q**11 + 18 * q**10
          + 6 * q**9 + 9 * q**7) * u**6 * q**6
    q4 = -e4 * (B + 1 + vb) * u**7 * q**12 * vc * vd + e3 * u**9 * q**6
    r4 = -e2 * u**6 * q**9 * D - e4 * u**6 * q**12 * (q**3 - 3 * D * u * w)
    s4 = (-(12 * u**3 * q**6 + 6 * u**3 * q**5 + 18 * u**3 * q**3 - 6 * u**3 * q**2 - 6 * u**3
            + q**11 + 6 * q**9 + q**8 + 9 * q**7 + 6 * q**6 + 9 * q**4)
          + 3 * e4 * u * q**3 * w) * u**6 * q**9

    p5 = 2 * (12 * u**3 - q**8 - 3 * q**6 + 2 * q**5 + 9 * q**3 + 9 * q) * u**9 * q**3
    q5 = -1 * e4 * u**9 * q**3
    s5 = (-12 * u**3 + 2 * q**8 + 6 * q**6 - 3 * q**5 - 12 * q**3 - 9 * q) * u**9 * q**3
    r5 = s5 * D

    s6 = e4 * u**9
    p6 = -1 * s6
    r6 = s6 * D
    q6 = 0 * q

    return {
        "p": [p0, p1, p2, p3, p4, p5, p6],
        "q": [q0, q1, q2, q3, q4, q5, q6],
        "r": [r0, r1, r2, r3, r4, r5, r6],
        "s": [s0, s1, s2, s3, s4, s5, s6],
    }


def _families_d1234(s: Symbols, verbatim: bool = False):
    q, u = s.q, s.u
    va, vc, vd = s.v1, s.v2, s.v3
    A, C, D = s.K1, s.K2, s.K3
    w2 = va * vc**2 * vd**2      # q^(a+2c+2d)
    y = u * vc * vd              # q^(n+c+d)
    g = q**7 + q**6 + 2 * q**5 - 2 * q**2 - q - 1  # (q-1)(q^2+1)(q^2+q+1)^2
    ta = u**3 * q**4 + 2 * u**3 * q**3 + 4 * u**3 * q**2 + 3 * u**3 * q + 2 * u**3 \
        + q**8 + q**7 + 3 * q**6 + 3 * q**5 + 3 * q**4 + 3 * q**3 + q**2 + q
    tb = u**3 * q**4 + 2 * u**3 * q**3 + 3 * u**3 * q**2 + 2 * u**3 * q + u**3 \
        + q**7 + q**6 + 3 * q**5 + 2 * q**4 + 3 * q**3 + q**2 + q
    tc = 2 * u**3 * q**4 + 4 * u**3 * q**3 + 7 * u**3 * q**2 + 5 * u**3 * q + 3 * u**3 \
        + q**8 + 2 * q**7 + 4 * q**6 + 6 * q**5 + 5 * q**4 + 6 * q**3 + 2 * q**2 + 2 * q
    td = u**3 * q**2 + u**3 * q + u**3 + q**8 + 2 * q**6 + q**4
    te = u**3 * q**5 + u**3 * q**4 + 2 * u**3 * q**3 - u**3 + q**6 + 2 * q**4 + q**2
    tf = u**3 * q**2 + u**3 * q + u**3 - q**7 + q**4 + 2 * q**3 + q**2 + q

    p0 = (-u**6 * q**2 - u**6 * q - u**6 - u**3 * q**8 - 2 * u**3 * q**6 - u**3 * q**4
          + u**3 * q**2 + u**3 * q + u**3 + q**8 + 2 * q**6 + q**4) * q**12
    # one token of q0 is suspect: verbatim 4*q^(3n+12), emended 4*q^(3n+2)
    # (the emended polynomial is the block `ta` recurring through the set)
    q0_poly = ta if not verbatim else (ta - 4 * u**3 * q**2 + 4 * u**3 * q**12)
    q0 = g * u**2 * q**12 * (C * u - C * w2 + D * u - D * w2 - u - u * y + u * va + w2) \
        + q0_poly * u * q**12 * (y - va) * vc * vd
    r0 = g * u**3 * q**12 * (2 - va - u**-1 * w2 + D * q * (u**-1 * w2 - 1))
    s0 = u**3 * q**12 * (q**3 - 1) * (q**2 + 1) * ((-q**3 + q**2 + q + 2)
                                                   - va * (q**2 + q + 1) + u**-1 * w2 * (q**3 - 1))

    p1 = -(u**3 * q**6 + u**3 * q**5 + 3 * u**3 * q**4 + 3 * u**3 * q**3 + 5 * u**3 * q**2
           + 3 * u**3 * q + 2 * u**3 + q**10 + q**9 + 3 * q**8 + 3 * q**7 + 5 * q**6
           + 4 * q**5 + 4 * q**4 + 2 * q**3 + q**2) * u**3 * q**12
    q1 = (-u**3 * q**5 - 2 * u**3 * q**4 - 4 * u**3 * q**3 - 2 * u**3 * q**2 - u**3 * q + u**3
          - q**9 - 3 * q**7 - q**6 - 3 * q**5 - 2 * q**4 - q**3 - q**2) * u**3 * q**12 \
        + td * u**4 * q**12 * vc * vd \
        + te * u**2 * q**14 * vc**2 * vd**2 \
        + ta * u**3 * q**13 * va \
        + (-u**3 * q**7 - u**3 * q**6 - u**3 * q**5 + 2 * u**3 * q**4 + 4 * u**3 * q**3
           + 5 * u**3 * q**2 + 3 * u**3 * q + u**3 + q**9 + q**8 + 3 * q**7 + 3 * q**6
           + 3 * q**5 + 3 * q**4 + q**3 + q**2) * u**2 * q**13 * w2
    r1 = -g * u**4 * q**14 * D * vc * vd \
        + tc * u**3 * q**13 - ta * u**3 * q**13 * va - tb * u**2 * q**14 * w2
    s1 = tc * u**3 * q**13 - g * u**4 * q**14 * vc * vd \
        - ta * u**3 * q**13 * va - tb * u**2 * q**14 * w2

    p2 = (u**6 * q**3 + 2 * u**6 * q**2 + 2 * u**6 * q + u**6 - u**3 * q**10 - 2 * u**3 * q**8
          - 2 * u**3 * q**6 + u**3 * q**5 - u**3 * q**4 + 2 * u**3 * q**3 + 2 * u**3 * q
          - q**13 - 2 * q**11 - 2 * q**10 - q**9 - 4 * q**8 - 2 * q**6) * u**3 * q**10
    q2 = g * C * D * u**5 * q**14 * w2 \
        + (-u**3 * q**2 - u**3 * q - u**3 - 2 * q**8 - 3 * q**6 + 2 * q**5 - q**4 + 2 * q**3
           - q**2 - 1) * u**6 * q**11 \
        + te * u**4 * q**12 * vc * vd \
        + tf * u**5 * q**13 * vc**2 * vd**2 \
        - g * u**6 * q**12 * va
    r2 = g * u**6 * q**12 * D * (va - 1 + u**-1 * q**2 * w2) + te * u**3 * q**14
    s2 = td * u**3 * q**12 + g * u**6 * q**12 * va * (1 + u**-1 * q**2 * vc**2 * vd**2)

    p3 = (u**3 * q**6 + 2 * u**3 * q**5 + 4 * u**3 * q**4 + 2 * u**3 * q**3 + 2 * u**3 * q**2
          + u**3 + 2 * q**11 + q**10 + 3 * q**9 + 2 * q**8 + 3 * q**7 + 2 * q**6 + 3 * q**5
          + q**3 - q**2) * u**6 * q**8
    s6 = (u**3 * q**2 + u**3 * q + u**3 + q**5 + 2 * q**3 + q) * u**9
    # third emended token: the -2q^8 in the leading block of q3 must read
    # -2q^7 for the telescoped sum to vanish
    q3_tok = -2 * q**8 if verbatim else -2 * q**7
    q3 = (-u**3 * q**6 + 2 * u**3 * q**3 - u**3 - q**9 + q3_tok + q**6 - q**5 + 2 * q**4
          + q**2) * u**6 * q**8 \
        + tf * u**7 * q**9 * vc * vd \
        - s6 * u**-4 * q**14 * vc**2 * vd**2 \
        - ta * u**6 * q**10 * va
    r3 = -tc * u**6 * q**10 * D + ta * D * u**6 * q**10 * va + tb * D * u**5 * q**13 * w2 \
        + tf * u**6 * q**12
    s3 = -(u**3 * q**4 + 3 * u**3 * q**3 + 6 * u**3 * q**2 + 5 * u**3 * q + 3 * u**3
           + q**9 + q**8 + 2 * q**7 + 3 * q**6 + 4 * q**5 + 4 * q**4 + 5 * q**3 + 2 * q**2
           + 2 * q) * u**6 * q**10 \
        + ta * u**6 * q**10 * va + tb * u**5 * q**13 * w2

    p4 = (-u**6 * q**2 - u**6 * q - u**6 + 2 * u**3 * q**11 + 3 * u**3 * q**10 + 3 * u**3 * q**9
          + 2 * u**3 * q**8 + u**3 * q**7 - u**3 * q**5 - u**3 * q**4 - 2 * u**3 * q**3
          - u**3 * q**2 - u**3 * q + 2 * q**14 + 4 * q**12 + q**11 + 2 * q**10 + 2 * q**9
          + q**7) * u**6 * q**3
    s5 = -(u**3 * q**2 + u**3 * q + u**3 - q**7 + q**4 + 2 * q**3 + q**2 + q) * u**9 * q**3
    q4 = -1 * (s5 + s6 * u**-2 * q**8 * vc * vd)
    r4 = -te * u**6 * q**8 * D - s6 * u**-3 * q**12
    s4 = -(u**3 * q**6 + 2 * u**3 * q**5 + 2 * u**3 * q**4 + 2 * u**3 * q**3 - u**3
           + q**9 + 2 * q**7 + q**6 + q**5 + 2 * q**4 + q**2) * u**6 * q**8

    p5 = (u**3 * q**5 + u**3 * q**4 + u**3 * q**3 + u**3 * q**2 + u**3 * q + u**3
          - q**10 + q**7 + 2 * q**6 + 2 * q**5 + q**4 + 2 * q**3 + q) * u**9
    q5 = -1 * s6
    p6 = -1 * s6
    r5 = s5 * D
    q6 = 0 * q
    r6 = s6 * D

    return {
        "p": [p0, p1, p2, p3, p4, p5, p6],
        "q": [q0, q1, q2, q3, q4, q5, q6],
        "r": [r0, r1, r2, r3, r4, r5, r6],
        "s": [s0, s1, s2, s3, s4, s5, s6],
    }


_BUILDERS = {
    "g111": (_families_g111, 3, TERM_G111),
    "g300": (_families_g300, 3, TERM_G300),
    "d123": (_families_d123, 6, TERM_D123),
    "d1234": (_families_d1234, 6, TERM_D1234),
}


def certificate(name: str, mode: str = "skew", product_mode: str = "skew",
                verbatim: bool = False) -> CertificateSet:
    """Build one of the bundled certificate sets.

    ``mode`` chooses how the printed formulas are parsed (commutative
    markers or written-order skew products); ``product_mode`` chooses how
    the outer telescoping products expand.  The defaults are the readings
    under which all four sets verify.
    """
    builder, order, _ = _BUILDERS[name]
    syms = Symbols(mode)
    fams = builder(syms, verbatim=verbatim)
    finished = {k: [syms.finish(e) for e in v] for k, v in fams.items()}
    return CertificateSet(order, finished, product_mode=product_mode)


def certificate_term(name: str) -> HypTerm:
    return _BUILDERS[name][2]


CERTIFICATE_NAMES = tuple(_BUILDERS)


# ----------------------------------------------------------------------
# the order-4 recurrence for the G_(1,1,1) coefficient sequence

QU = ("q", "u")
_QQ = LaurentPoly.variable(QU, "q")
_U = LaurentPoly.variable(QU, "u")


def pprime_family() -> list[LaurentPoly]:
    """[p'_0 .. p'_4]: the recurrence encoded by the G_(1,1,1) operator."""
    q, u = _QQ, _U
    return [
        -1 + u**3,
        -q**4 + 2 * u**3 * q**-2 + 2 * u**3 * q**-1 + 2 * u**3 + u**3 * q + u**6 * q**-3,
        u**3 * q**-3 + 2 * u**3 * q**-2 + 2 * u**3 * q**-1 + 2 * u**3 + u**6 * q**-8
        - u**6 * q**-5 - u**6 * q**-4,
        u**3 * q**-2 - u**6 * q**-10 - u**6 * q**-9 + u**6 * q**-6,
        u**6 * q**-11,
    ]


def pprime_combination_scalars():
    """The printed scalar pair in the closing linear-combination display."""
    from .laurent import RationalFunction

    q, u = _QQ, _U
    alpha = RationalFunction(2 * u**10 + u**7 * q, -2 * u**3 * q**10 - q**14)
    beta = RationalFunction(u**7, -1 * q**16)
    return alpha, beta
