"""Certificates, recurrences, quadruple sums, operators, uncoupling."""

from fractions import Fraction

import pytest

from qpart import catalog
from qpart.automata import build_avoidance_dfa, derive_transfer_system, solve_language_series
from qpart.colored import COND_D123, enumerate_2colored, gen_fun
from qpart.cylindric import solve_cw_family
from qpart.holonomic import (
    AGSumSpec,
    CertificateSet,
    HypTerm,
    QDiffOperator,
    ShiftOp,
    TERM_VARS,
    apply_qdiff,
    evaluate_ag_sum,
    recurrence_from_certificate,
    recurrence_holds_at_point,
    recurrence_holds_series,
    sequence_series,
    term_ratio,
    uncouple_system,
    verify_certificate,
)
from qpart.laurent import LaurentPoly, RationalFunction
from qpart.series import BiSeries, QSeries

QU = ("q", "u")


def test_term_ratio_zero_shift():
    term = catalog.TERM_G111
    r = term_ratio(term, (0, 0, 0, 0))
    assert r == RationalFunction.from_poly(LaurentPoly.one(TERM_VARS))


def test_term_ratio_single_pochhammer():
    # F(n) = 1/(q;q)_n gives F(n-1)/F(n) = 1 - q^n
    t = HypTerm(nsum=0, quad2=((0,),), lin=(0,), const=0, pochs=(((1,), 0, 1),), names=("n",))
    r = term_ratio(t, (1,))
    u = LaurentPoly.variable(TERM_VARS, "u")
    assert r == RationalFunction.from_poly(1 - u)


def test_term_ratio_numeric_oracle():
    # F(v - s)/F(v) from the factored formula equals the direct quotient
    from qpart.holonomic import poch_value

    term = catalog.TERM_G300
    q0 = Fraction(3, 2)

    def value(v):
        if not term.supported(v):
            return None
        val = q0 ** term.qexponent(v)
        for L, (_, _, base) in zip(term.poch_lengths(v), term.pochs):
            val /= poch_value(q0, base, L)
        return val

    for v in ((7, 1, 1, 1), (9, 2, 0, 2)):
        for s in ((1, 0, 0, 0), (0, 1, 0, 0), (2, 1, 1, 0), (3, 0, 1, 1)):
            vv = tuple(a - b for a, b in zip(v, s))
            f1, f2 = value(v), value(vv)
            if not f1 or f2 is None:
                continue
            r = term_ratio(term, s)
            subs = [q0, q0 ** v[0], q0 ** v[1], q0 ** v[2], q0 ** v[3]]

            def ev(p):
                return sum(
                    c * subs[0] ** e[0] * subs[1] ** e[1] * subs[2] ** e[2]
                    * subs[3] ** e[3] * subs[4] ** e[4]
                    for e, c in p.terms.items()
                )

            assert f2 / f1 == ev(r.num) / ev(r.den)


@pytest.mark.parametrize("name", catalog.CERTIFICATE_NAMES)
def test_certificates_verify(name):
    res = verify_certificate(catalog.certificate_term(name), catalog.certificate(name))
    assert res.ok and res.residual_terms == 0


@pytest.mark.parametrize("name", ("d123", "d1234"))
def test_unemended_order_six_sets_fail(name):
    res = verify_certificate(catalog.certificate_term(name), catalog.certificate(name, verbatim=True))
    assert not res.ok


def test_perturbed_certificate_fails():
    cert = catalog.certificate("g111")
    u3q5 = LaurentPoly.monomial(TERM_VARS, (5, 3, 0, 0, 0))
    cert.families["p"][1] = cert.families["p"][1] + ShiftOp.coefficient(u3q5)
    res = verify_certificate(catalog.certificate_term("g111"), cert)
    assert not res.ok and res.residual_terms > 0


def test_telescoped_identity_at_integer_points():
    # evaluating the telescoped operator against literal term values at
    # fixed integer points gives 0 whenever all shifted terms are supported
    from qpart.holonomic import poch_value

    term = catalog.certificate_term("g111")
    total = catalog.certificate("g111").telescoped()
    q0 = Fraction(2)

    def F(v):
        if not term.supported(v):
            return None
        val = q0 ** term.qexponent(v)
        for L, (_, _, base) in zip(term.poch_lengths(v), term.pochs):
            val /= poch_value(q0, base, L)
        return val

    checked = 0
    for v in ((14, 2, 2, 2), (16, 3, 2, 2), (15, 2, 3, 2), (17, 2, 2, 3)):
        vals = {}
        ok = True
        for s in total.terms:
            vv = tuple(a - b for a, b in zip(v, s))
            vals[s] = F(vv)
            if vals[s] is None:
                ok = False
        if not ok:
            continue
        subs = [q0] + [q0 ** x for x in v]
        acc = Fraction(0)
        for s, coeff in total.terms.items():
            c = Fraction(0)
            for e, cc in coeff.terms.items():
                t = Fraction(cc)
                for b, ee in zip(subs, e):
                    t *= b ** ee
                c += t
            acc += c * vals[s]
        assert acc == 0
        checked += 1
    assert checked >= 2


def test_printed_p0_of_g111():
    ps = recurrence_from_certificate(catalog.certificate("g111"))
    q = LaurentPoly.variable(QU, "q")
    u = LaurentPoly.variable(QU, "u")
    assert ps[0] == -2 * u ** 6 * q ** 8 - u ** 3 * q ** 12 + 2 * u ** 3 * q ** 8 + q ** 12
    assert len(ps) == 4
    assert len(recurrence_from_certificate(catalog.certificate("d123"))) == 7


def test_trivial_constant_certificate():
    # constant term F(n) = 1: p0 = 1, p1 = -1 telescopes to f_n = f_(n-1)
    one = LaurentPoly.one(TERM_VARS)
    cert = CertificateSet(
        1,
        {
            "p": [ShiftOp.coefficient(one), ShiftOp.coefficient(-one)],
            "q": [ShiftOp(), ShiftOp()],
            "r": [ShiftOp(), ShiftOp()],
            "s": [ShiftOp(), ShiftOp()],
        },
    )
    const = HypTerm(nsum=0, quad2=((0,),), lin=(0,), const=0, pochs=(), names=("n",))
    assert verify_certificate(const, cert).ok
    plist = recurrence_from_certificate(cert)
    # a support-free term is constant on all of Z, so start past the boundary
    assert recurrence_holds_at_point(const, plist, 8, Fraction(2), nmin=1)


@pytest.mark.parametrize("name", catalog.CERTIFICATE_NAMES)
def test_recurrences_annihilate_at_points(name):
    term = catalog.certificate_term(name)
    plist = recurrence_from_certificate(catalog.certificate(name))
    for q0 in (Fraction(2), Fraction(7, 5)):
        assert recurrence_holds_at_point(term, plist, 14, q0)


@pytest.mark.parametrize("name", catalog.CERTIFICATE_NAMES)
def test_recurrences_annihilate_as_series(name):
    term = catalog.certificate_term(name)
    plist = recurrence_from_certificate(catalog.certificate(name))
    assert recurrence_holds_series(term, plist, 8, 110)


def test_sequences_match_series_coefficients():
    # the summed sequences are the x-coefficients of the bigraded series
    n = 12
    fd123 = gen_fun(enumerate_2colored(n - 1, COND_D123), n)
    fam = solve_cw_family((3, 0, 0), n)
    for m in range(6):
        assert sequence_series(catalog.TERM_D123, m, n) == fd123.slice(m)
        assert sequence_series(catalog.TERM_G111, m, n) == fam[(1, 1, 1)].slice(m)


def test_evaluate_ag_sum_d123_low_order():
    s = evaluate_ag_sum(catalog.AG_D123, 4)
    assert s.eval_x1().coeffs == [1, 2, 2, 4]


def test_evaluate_ag_sum_requires_monotone_spec():
    with pytest.raises(ValueError):
        AGSumSpec(((2, -1), (-1, 2)), (0, 0), (1, 1), (1, 1))


def test_apply_qdiff_identity():
    s = BiSeries(9, {0: QSeries.one(9), 1: QSeries(9, [0, 2, 1])})
    ident = QDiffOperator(((LaurentPoly.one(("x", "q")), 0),), step=3)
    assert apply_qdiff(ident, s) == s


def test_operators_annihilate_series():
    n = 20
    fd123 = gen_fun(enumerate_2colored(n - 1, COND_D123), n)
    fam = solve_cw_family((3, 0, 0), n)
    assert apply_qdiff(catalog.qdiff_operator_d123(), fd123).is_zero()
    assert apply_qdiff(catalog.qdiff_operator_g111(), fam[(1, 1, 1)]).is_zero()
    assert apply_qdiff(catalog.qdiff_operator_g300(), fam[(3, 0, 0)]).is_zero()


def test_uncouple_trivial_1x1():
    x = LaurentPoly.variable(("x", "q"), "x")
    op = uncouple_system([[RationalFunction.from_poly(x)]], 0)
    shifts = {s: c for c, s in op.terms}
    assert set(shifts) == {0, 1}
    # 0 = c0 F(x) + c1 F(xq^3) = (c0 a + c1) F(xq^3) forces c0*a + c1 = 0
    assert (shifts[0] * x + shifts[1]).is_zero()


def test_uncouple_2x2():
    n = 20
    fam = solve_cw_family((3, 0, 0), n)
    mat = catalog.coupled_g_system()
    op = uncouple_system(mat, 0)
    assert apply_qdiff(op, fam[(3, 0, 0)]).is_zero()
    assert not apply_qdiff(op, fam[(1, 1, 1)]).is_zero()
    op1 = uncouple_system(mat, 1)
    assert apply_qdiff(op1, fam[(1, 1, 1)]).is_zero()


def test_uncouple_5x5():
    n = 20
    system = derive_transfer_system(build_avoidance_dfa())
    sols = solve_language_series(system, n)
    mat = [list(r) for r in system.matrix]
    for comp in (0, 1):
        op = uncouple_system(mat, comp)
        assert apply_qdiff(op, sols[comp]).is_zero()


def test_combination_identity():
    ps = [RationalFunction.from_poly(p) for p in
          recurrence_from_certificate(catalog.certificate("g111"))]
    pps = [RationalFunction.from_poly(p) for p in catalog.pprime_family()]

    def sig(r):
        return RationalFunction(r.num.twist("u", "q", -1), r.den.twist("u", "q", -1), normalize=False)

    alpha = pps[0] / ps[0]
    beta = pps[4] / sig(ps[3])
    for j in range(5):
        lhs = alpha * ps[j] if j < 4 else alpha * 0
        if j >= 1:
            lhs = lhs + beta * sig(ps[j - 1])
        assert (lhs - pps[j]).is_zero()


def test_pprime_matches_cylindric_coefficient_recurrence():
    # the order-4 family encodes the printed order-2 operator for the
    # (1,1,1) profile series, coefficientwise in x
    n = 25
    fam = solve_cw_family((3, 0, 0), n)
    g = fam[(1, 1, 1)]
    pps = catalog.pprime_family()
    for m in range(3, 8):
        acc: dict[int, int] = {}
        for j, p in enumerate(pps):
            coeffs: dict[int, int] = {}
            for (eq, eu), c in p.terms.items():
                e = eq + (m) * eu
                coeffs[e] = coeffs.get(e, 0) + c
            f = g.slice(m - j)
            for e, c in coeffs.items():
                for i, fc in enumerate(f.coeffs):
                    if fc:
                        acc[e + i] = acc.get(e + i, 0) + c * fc
        assert not any(v and e < n - 11 for e, v in acc.items())
