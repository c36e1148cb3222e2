"""Certificate search."""

from fractions import Fraction

from qpart import catalog
from qpart.celine import celine_solve, support_of
from qpart.holonomic import (
    HypTerm,
    recurrence_from_certificate,
    recurrence_holds_at_point,
    verify_certificate,
)

SQUARE_TERM = HypTerm(nsum=0, quad2=((2,),), lin=(0,), const=0, pochs=(((1,), 0, 1),), names=("n",))


def test_one_variable_contiguous_relation():
    cert = celine_solve(SQUARE_TERM, 1, u_range=(0, 3), q_range=(-2, 3))
    assert cert is not None
    plist = recurrence_from_certificate(cert)
    assert len(plist) == 2 and not plist[0].is_zero()
    assert recurrence_holds_at_point(SQUARE_TERM, plist, 12, Fraction(2))
    assert recurrence_holds_at_point(SQUARE_TERM, plist, 12, Fraction(5, 3))


def test_order_zero_finds_nothing():
    assert celine_solve(SQUARE_TERM, 0, u_range=(0, 3), q_range=(-2, 3)) is None


def test_single_summation_variable():
    # F(n, k) = q^(k^2) / ((q;q)_k (q;q)_(n-k))
    term = HypTerm(
        nsum=1,
        quad2=((0, 0), (0, 2)),
        lin=(0, 0),
        const=0,
        pochs=(((0, 1), 0, 1), ((1, -1), 0, 1)),
        names=("n", "k"),
    )
    cert = celine_solve(
        term, 2, kbox=(1, 0, 0), u_range=(0, 2), q_range=(-2, 2), v_ranges=((0, 1), (0, 0), (0, 0))
    )
    assert cert is not None
    plist = recurrence_from_certificate(cert)
    assert recurrence_holds_at_point(term, plist, 14, Fraction(2))


import pytest


@pytest.mark.parametrize("name", catalog.CERTIFICATE_NAMES)
def test_rederives_certificates_from_printed_support(name):
    # the search over the printed support returns a verified set whose
    # recurrence annihilates the same sequence (coefficients may differ)
    base = catalog.certificate(name)
    term = catalog.certificate_term(name)
    cert = celine_solve(term, base.order, support=support_of(base))
    assert cert is not None
    assert verify_certificate(term, cert).ok
    plist = recurrence_from_certificate(cert)
    assert not plist[0].is_zero()
    assert recurrence_holds_at_point(term, plist, 8, Fraction(2))
