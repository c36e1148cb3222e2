"""Cylindric partitions and the profile recursion."""

import pytest

from qpart.catalog import PRODUCT_D123, PRODUCT_D1234, EULER_PRODUCT
from qpart.colored import COND_D123, COND_D1234, enumerate_2colored, gen_fun
from qpart.cylindric import (
    cw_children,
    cw_fixed_point,
    enumerate_cylindric,
    f_to_g,
    g_to_f,
    is_cylindric,
    profile_orbit,
    solve_cw_family,
)
from qpart.series import BiSeries, QSeries, inv_xq_pochhammer, pochhammer_expand


def test_is_cylindric_examples():
    assert is_cylindric(((), (), ()), (1, 1, 1))
    assert is_cylindric(((1,), (), ()), (1, 1, 1))
    assert not is_cylindric(((), (), (1,)), (3, 0, 0))


def test_is_cylindric_row_count():
    with pytest.raises(ValueError):
        is_cylindric(((), ()), (1, 1, 1))


def test_zero_profile_rejected():
    with pytest.raises(ValueError):
        cw_children((0, 0, 0))


def test_children_match_displays():
    assert cw_children((3, 0, 0)) == [((0,), 1, 0, (2, 1, 0))]
    ch111 = cw_children((1, 1, 1))
    assert len(ch111) == 7
    full = [c for c in ch111 if c[0] == (0, 1, 2)]
    assert full == [((0, 1, 2), 1, 2, (1, 1, 1))]
    ch210 = {c[0]: c for c in cw_children((2, 1, 0))}
    assert ch210[(0,)][3] == (1, 2, 0)
    assert ch210[(1,)][3] == (2, 0, 1)
    assert ch210[(0, 1)] == ((0, 1), -1, 1, (1, 1, 1))


def test_profile_orbit_is_all_ten():
    orbit = profile_orbit((3, 0, 0))
    assert len(orbit) == 10
    assert all(sum(p) == 3 and len(p) == 3 for p in orbit)


def test_enumeration_low_order():
    f111 = enumerate_cylindric((1, 1, 1), 1)
    assert f111.coeff(0, 0) == 1 and f111.coeff(1, 1) == 3
    f300 = enumerate_cylindric((3, 0, 0), 1)
    assert f300.coeff(0, 0) == 1 and f300.coeff(1, 1) == 1
    assert enumerate_cylindric((2, 1, 0), 0) == BiSeries.one(1)


def test_fixed_point_constant_slice():
    for profile in ((3, 0, 0), (1, 1, 1), (2, 0, 1)):
        g = cw_fixed_point(profile, 12)
        assert g.slice(0) == QSeries.one(12)


def test_g_to_f_round_trip_and_x0_slice():
    g = cw_fixed_point((1, 1, 1), 15)
    f = g_to_f(g)
    assert f_to_g(f) == g
    assert f.slice(0) == g.slice(0)
    assert g_to_f(BiSeries.one(10)) == inv_xq_pochhammer(10)


def test_enumeration_matches_recursion_all_profiles():
    n = 10
    fam = solve_cw_family((3, 0, 0), n + 1)
    for profile in profile_orbit((3, 0, 0)):
        assert enumerate_cylindric(profile, n) == g_to_f(fam[profile])


def test_rotation_invariance():
    n = 12
    fam = solve_cw_family((3, 0, 0), n)
    assert fam[(2, 1, 0)] == fam[(1, 0, 2)] == fam[(0, 2, 1)]
    assert fam[(2, 0, 1)] == fam[(1, 2, 0)] == fam[(0, 1, 2)]
    assert fam[(3, 0, 0)] == fam[(0, 3, 0)] == fam[(0, 0, 3)]


def test_chain_pairing():
    # the two profile series specialize to the two partition classes
    n = 18
    fam = solve_cw_family((3, 0, 0), n)
    fd123 = gen_fun(enumerate_2colored(n - 1, COND_D123), n).eval_x1()
    fd1234 = gen_fun(enumerate_2colored(n - 1, COND_D1234), n).eval_x1()
    assert fam[(1, 1, 1)].eval_x1() == fd123
    assert fam[(3, 0, 0)].eval_x1() == fd1234


def test_character_specialization():
    n = 20
    fam = solve_cw_family((3, 0, 0), n)
    euler = pochhammer_expand(EULER_PRODUCT, n)
    assert g_to_f(fam[(1, 1, 1)]).eval_x1() * euler == pochhammer_expand(PRODUCT_D123, n)
    assert g_to_f(fam[(3, 0, 0)]).eval_x1() * euler == pochhammer_expand(PRODUCT_D1234, n)


def test_enumeration_slice_valuations():
    # total size is at least the largest part, so slice m starts at q^m
    f = enumerate_cylindric((2, 0, 1), 10)
    for m, s in f.slices.items():
        v = s.valuation()
        assert v is None or v >= m
