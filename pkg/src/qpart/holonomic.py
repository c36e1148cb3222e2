"""q-holonomic machinery: hypergeometric terms, certificates, and operators.

The objects here live over the variable list (q, u, v1, v2, v3) where
u = q^n and v_i = q^(k_i) for the summation variables.  A proper term

    F(n, k) = q^Q(n,k) / prod_i (q^(m_i); q^(m_i))_{L_i(n,k)}

has all its shift quotients F(n-i, k-j)/F(n, k) rational in these
variables, which is what makes certificate verification a rational
identity check.

Certificates are elements of the shift algebra generated by N (n -> n-1)
and K_i (k_i -> k_i - 1) over Laurent polynomials in (q, u, v):
moving a shift past a coefficient twists the coefficient, e.g.
N * u = (u/q) * N.  Both the honest skew product and the commutative
"marker" reading (shifts treated as inert tags) are implemented, since
printed certificate data in the literature is normal-ordered in ways that
only verification can disambiguate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import LaurentPoly
from .series import BiSeries, QSeries, finite_pochhammer

TERM_VARS = ("q", "u", "v1", "v2", "v3")
QU_VARS = ("q", "u")
XQ_VARS = ("x", "q")


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class HypTerm:
    """A proper q-hypergeometric term in n and up to three summation variables.

    ``quad2`` is twice the symmetric matrix of the quadratic form, so the
    q-exponent is Q(v) = v^T quad2 v / 2 + lin . v + const over the
    variable vector v = (n, k_1, .., k_r).  Each Pochhammer denominator is
    (q^base; q^base)_{L} for a linear form L = coeffs . v + const; the
    term is zero by convention when some L < 0.  ``xcoeffs`` records the
    x-grading exponent for bigraded sums (unused by certificate checks).
    """

    nsum: int
    quad2: tuple[tuple[int, ...], ...]
    lin: tuple[int, ...]
    const: int
    pochs: tuple[tuple[tuple[int, ...], int, int], ...]  # (coeffs, const, base)
    names: tuple[str, ...] = ("n", "k1", "k2", "k3")
    xcoeffs: tuple[int, ...] = ()

    def __post_init__(self):
        dim = 1 + self.nsum
        if len(self.quad2) != dim or any(len(r) != dim for r in self.quad2):
            raise ValueError("quad2 must be (1+nsum) x (1+nsum)")
        if any(self.quad2[i][j] != self.quad2[j][i] for i in range(dim) for j in range(dim)):
            raise ValueError("quad2 must be symmetric")
        if len(self.lin) != dim:
            raise ValueError("lin must have length 1+nsum")

    def qexponent(self, v: Sequence[int]) -> int:
        s = 0
        for i, row in enumerate(self.quad2):
            s += v[i] * _dot(row, v)
        if s % 2:
            raise ValueError("quadratic form not integer-valued")
        return s // 2 + _dot(self.lin, v) + self.const

    def poch_lengths(self, v: Sequence[int]) -> list[int]:
        return [_dot(c, v) + c0 for c, c0, _ in self.pochs]

    def supported(self, v: Sequence[int]) -> bool:
        return all(L >= 0 for L in self.poch_lengths(v))

    def to_json(self) -> dict:
        return {
            "nsum": self.nsum,
            "quad2": [list(r) for r in self.quad2],
            "lin": list(self.lin),
            "const": self.const,
            "pochs": [[list(c), c0, m] for c, c0, m in self.pochs],
            "names": list(self.names),
            "xcoeffs": list(self.xcoeffs),
        }

    @classmethod
    def from_json(cls, data: dict) -> "HypTerm":
        return cls(
            nsum=int(data["nsum"]),
            quad2=tuple(tuple(int(x) for x in r) for r in data["quad2"]),
            lin=tuple(int(x) for x in data["lin"]),
            const=int(data["const"]),
            pochs=tuple((tuple(int(x) for x in c), int(c0), int(m)) for c, c0, m in data["pochs"]),
            names=tuple(data["names"]),
            xcoeffs=tuple(int(x) for x in data.get("xcoeffs", ())),
        )


# ----------------------------------------------------------------------
# shift quotients


def _mono(exps: Iterable[int], coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(TERM_VARS, tuple(exps), coeff)


_ONE5 = LaurentPoly.one(TERM_VARS)


def _binomial_factor(mult: int, coeffs: Sequence[int], const: int) -> LaurentPoly:
    """1 - q^(mult * (coeffs . v + const)) as a LaurentPoly in TERM_VARS."""
    exps = [mult * const] + [mult * c for c in coeffs]
    while len(exps) < 5:
        exps.append(0)
    return _ONE5 - _mono(exps)


@dataclass(frozen=True)
class FactoredRatio:
    """F(v - shift)/F(v) in factored form: monomial * prod(num)/prod(den)."""

    mono: tuple[int, ...]  # exponents over TERM_VARS
    num: tuple[LaurentPoly, ...]
    den: tuple[LaurentPoly, ...]

    def numerator_poly(self) -> LaurentPoly:
        p = _mono(self.mono)
        for f in self.num:
            p = p * f
        return p

    def denominator_poly(self) -> LaurentPoly:
        p = _ONE5
        for f in self.den:
            p = p * f
        return p


def term_ratio_factored(term: HypTerm, shift: Sequence[int]) -> FactoredRatio:
    s = tuple(shift)
    dim = 1 + term.nsum
    if len(s) != dim:
        raise ValueError(f"shift must have length {dim}")
    # exponent difference Q(v-s) - Q(v) = -(quad2 s) . v + (s quad2 s)/2 - lin . s
    w = [-_dot(row, s) for row in term.quad2]
    ss = sum(s[i] * _dot(term.quad2[i], s) for i in range(dim))
    cexp = ss // 2 - _dot(term.lin, s)
    mono = [cexp] + w
    while len(mono) < 5:
        mono.append(0)

    num: list[LaurentPoly] = []
    den: list[LaurentPoly] = []
    for coeffs, const, base in term.pochs:
        delta = _dot(coeffs, s)
        if delta > 0:
            # (q^m;q^m)_L / (q^m;q^m)_(L-delta) = prod_{t=0..delta-1} (1 - q^(m(L-t)))
            for t in range(delta):
                num.append(_binomial_factor(base, coeffs, const - t))
        elif delta < 0:
            for t in range(1, -delta + 1):
                den.append(_binomial_factor(base, coeffs, const + t))
    return FactoredRatio(tuple(mono), tuple(num), tuple(den))


def term_ratio(term: HypTerm, shift: Sequence[int]):
    """F(v - shift)/F(v) as a RationalFunction over (q, u, v1, v2, v3)."""
    from .laurent import RationalFunction

    r = term_ratio_factored(term, shift)
    return RationalFunction(r.numerator_poly(), r.denominator_poly())


# ----------------------------------------------------------------------
# the shift algebra

Shift = tuple[int, int, int, int]  # (N, K1, K2, K3) powers


def _twist_poly(p: LaurentPoly, shift: Shift) -> LaurentPoly:
    """Conjugate a coefficient past a shift monomial: var -> var * q^-power."""
    out = p
    for var, power in zip(("u", "v1", "v2", "v3"), shift):
        if power:
            out = out.twist(var, "q", -power)
    return out


class ShiftOp:
    """An element of the shift algebra, normal-ordered: coeff * shift-monomial.

    Multiplication is the skew product: (P * S) * (P' * S') =
    (P * twist_S(P')) * (S + S').  Addition, integer scalars and small
    powers are supported so certificate formulas can be written verbatim.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Shift, LaurentPoly] | None = None):
        self.terms = {s: p for s, p in (terms or {}).items() if not p.is_zero()}

    @classmethod
    def coefficient(cls, p: LaurentPoly) -> "ShiftOp":
        return cls({(0, 0, 0, 0): p})

    @classmethod
    def shift(cls, s: Shift) -> "ShiftOp":
        return cls({s: _ONE5})

    def __add__(self, other):
        if isinstance(other, int):
            other = ShiftOp.coefficient(LaurentPoly.constant(TERM_VARS, other))
        out = dict(self.terms)
        for s, p in other.terms.items():
            v = out.get(s)
            v = p if v is None else v + p
            if v.is_zero():
                out.pop(s, None)
            else:
                out[s] = v
        return ShiftOp(out)

    __radd__ = __add__

    def __neg__(self):
        return ShiftOp({s: -p for s, p in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = ShiftOp.coefficient(LaurentPoly.constant(TERM_VARS, other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ShiftOp({s: p * other for s, p in self.terms.items()})
        out: dict[Shift, LaurentPoly] = {}
        for s1, p1 in self.terms.items():
            for s2, p2 in other.terms.items():
                s = (s1[0] + s2[0], s1[1] + s2[1], s1[2] + s2[2], s1[3] + s2[3])
                p = p1 * _twist_poly(p2, s1)
                v = out.get(s)
                v = p if v is None else v + p
                if v.is_zero():
                    out.pop(s, None)
                else:
                    out[s] = v
        return ShiftOp(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            # only unit coefficient monomials are invertible
            if len(self.terms) == 1:
                (s, p), = self.terms.items()
                if s == (0, 0, 0, 0) and p.is_monomial():
                    return ShiftOp.coefficient(p ** n)
            raise ValueError("negative powers only for unit coefficient monomials")
        out = ShiftOp.coefficient(_ONE5)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ShiftOp) and self.terms == other.terms

    def __repr__(self):
        bits = []
        for s in sorted(self.terms):
            names = ("N", "K1", "K2", "K3")
            mono = "*".join(f"{nm}^{e}" if e != 1 else nm for nm, e in zip(names, s) if e)
            bits.append(f"({self.terms[s]!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits) or "0"


# marker parse: shifts as commuting tags appended to the variable list
MARKER_VARS = TERM_VARS + ("SN", "S1", "S2", "S3")


def marker_to_shiftop(p: LaurentPoly) -> ShiftOp:
    """Split a commutative marker polynomial into normal-ordered shift terms."""
    if p.vars != MARKER_VARS:
        raise ValueError("expected a marker polynomial")
    terms: dict[Shift, dict] = {}
    for e, c in p.terms.items():
        s = tuple(e[5:9])
        terms.setdefault(s, {})[e[:5]] = c
    return ShiftOp({s: LaurentPoly(TERM_VARS, t) for s, t in terms.items()})


class Symbols:
    """The symbols handed to certificate formulas.

    ``mode='marker'`` builds commutative polynomials with inert shift tags;
    ``mode='skew'`` builds ShiftOp values whose products twist coefficients
    in written order.
    """

    def __init__(self, mode: str):
        if mode == "marker":
            mk = lambda name: LaurentPoly.variable(MARKER_VARS, name)
            self.q, self.u = mk("q"), mk("u")
            self.v1, self.v2, self.v3 = mk("v1"), mk("v2"), mk("v3")
            self.N, self.K1, self.K2, self.K3 = mk("SN"), mk("S1"), mk("S2"), mk("S3")
            self.one = LaurentPoly.one(MARKER_VARS)
        elif mode == "skew":
            cf = lambda name: ShiftOp.coefficient(LaurentPoly.variable(TERM_VARS, name))
            self.q, self.u = cf("q"), cf("u")
            self.v1, self.v2, self.v3 = cf("v1"), cf("v2"), cf("v3")
            self.N = ShiftOp.shift((1, 0, 0, 0))
            self.K1 = ShiftOp.shift((0, 1, 0, 0))
            self.K2 = ShiftOp.shift((0, 0, 1, 0))
            self.K3 = ShiftOp.shift((0, 0, 0, 1))
            self.one = ShiftOp.coefficient(_ONE5)
        else:
            raise ValueError("mode must be 'marker' or 'skew'")
        self.mode = mode

    def finish(self, value) -> ShiftOp:
        if self.mode == "marker":
            if isinstance(value, int):
                value = value * self.one
            return marker_to_shiftop(value)
        if isinstance(value, int):
            value = value * self.one
        return value


# ----------------------------------------------------------------------
# certificate sets


@dataclass
class CertificateSet:
    """Shift-operator families proving a q-holonomic recurrence.

    ``families`` maps 'p', 'q', 'r', 's' to lists indexed by the power of
    N; entries are ShiftOp values (p entries carry no shifts and no
    summation variables).  The telescoped operator is

        p~ + (1 - K1) q~ + (1 - K2) r~ + (1 - K3) s~

    with e~ = sum_j e_j N^j.
    """

    order: int
    families: dict[str, list[ShiftOp]]
    product_mode: str = "skew"  # how (1 - K_i) C_i is expanded

    def telescoped(self) -> ShiftOp:
        N = ShiftOp.shift((1, 0, 0, 0))
        total = ShiftOp()
        for fam, ops in self.families.items():
            tilde = ShiftOp()
            for j, op in enumerate(ops):
                tilde = tilde + op * N ** j
            if fam == "p":
                total = total + tilde
            else:
                k = {"q": 1, "r": 2, "s": 3}[fam]
                kop = ShiftOp.shift(tuple(1 if i == k else 0 for i in range(4)))
                if self.product_mode == "skew":
                    total = total + tilde - kop * tilde
                else:
                    # marker product: shift tags multiply without twisting
                    shifted = ShiftOp(
                        {
                            (s[0], s[1] + (k == 1), s[2] + (k == 2), s[3] + (k == 3)): p
                            for s, p in tilde.terms.items()
                        }
                    )
                    total = total + tilde - shifted
        return total

    def p_family(self) -> list[LaurentPoly]:
        """The recurrence coefficients p_0..p_J over (q, u)."""
        out = []
        for op in self.families["p"]:
            if any(s != (0, 0, 0, 0) for s in op.terms):
                raise ValueError("p family must be shift-free")
            poly = op.terms.get((0, 0, 0, 0), LaurentPoly.zero(TERM_VARS))
            out.append(poly.project(QU_VARS))
        return out


@dataclass
class VerificationResult:
    ok: bool
    residual_terms: int
    residual_sample: list


def verify_certificate(term: HypTerm, cert: CertificateSet) -> VerificationResult:
    """Check the telescoped operator annihilates the term, exactly.

    The operator is applied to F and divided by F: every shift monomial
    becomes a factored rational function, the sum is put over the least
    common factored denominator, and the numerator must vanish
    identically.
    """
    total = cert.telescoped()
    return _operator_annihilates(term, total)


def _operator_annihilates(term: HypTerm, total: ShiftOp) -> VerificationResult:
    from collections import Counter

    ratios: dict[Shift, FactoredRatio] = {}
    dens: dict[Shift, Counter] = {}
    common: Counter = Counter()
    for s in total.terms:
        r = term_ratio_factored(term, s[: 1 + term.nsum])
        ratios[s] = r
        cnt = Counter()
        for f in r.den:
            cnt[_poly_key(f)] += 1
        dens[s] = cnt
        for k, v in cnt.items():
            if common[k] < v:
                common[k] = v
    factor_of = {}
    for s, r in ratios.items():
        for f in r.den:
            factor_of[_poly_key(f)] = f

    acc = LaurentPoly.zero(TERM_VARS)
    for s, coeff in total.terms.items():
        r = ratios[s]
        p = coeff.shift_exponents(r.mono)
        for f in r.num:
            p = p * f
        deficit = common - dens[s]
        for k, mult in deficit.items():
            for _ in range(mult):
                p = p * factor_of[k]
        acc = acc + p
    ok = acc.is_zero()
    sample = acc.sorted_terms()[:5]
    return VerificationResult(ok, len(acc.terms), [[list(e), c] for e, c in sample])


def _poly_key(p: LaurentPoly):
    return frozenset(p.terms.items())


def recurrence_from_certificate(cert: CertificateSet) -> list[LaurentPoly]:
    """The coefficient family [p_0 .. p_J] over (q, u), p_0 kept explicit."""
    return cert.p_family()


# ----------------------------------------------------------------------
# summed sequences and recurrence validation


def term_support(term: HypTerm, n: int) -> list[tuple[int, ...]]:
    """All summation-variable tuples with every Pochhammer length >= 0.

    Scans the box [0..n]^r with pruning: once a length form whose
    remaining coefficients are all nonpositive has gone negative, no
    extension can rescue it.  Every term in this package bounds each k_i
    through such a form (n minus a positive combination of the k's).
    """
    out: list[tuple[int, ...]] = []
    r = term.nsum
    pochs = term.pochs

    def rec(prefix: list[int]) -> None:
        i = len(prefix)
        if i == r:
            out.append(tuple(prefix))
            return
        for k in range(n + 1):
            prefix.append(k)
            ok = True
            for coeffs, const, _ in pochs:
                val = coeffs[0] * n + const + sum(c * x for c, x in zip(coeffs[1:], prefix))
                if val < 0 and all(c <= 0 for c in coeffs[1 + i + 1 :]):
                    ok = False
                    break
                if i + 1 == r and val < 0:
                    ok = False
                    break
            if ok:
                rec(prefix)
            prefix.pop()

    if n >= 0:
        rec([])
    return out


_SUPPORT_CACHE: dict[tuple, list] = {}


def _term_profile(term: HypTerm, n: int) -> list[tuple[int, list[int]]]:
    """Cached (q-exponent, Pochhammer lengths) pairs over the support."""
    key = (term, n)
    if key not in _SUPPORT_CACHE:
        rows = []
        for k in term_support(term, n):
            v = (n, *k)
            rows.append((term.qexponent(v), term.poch_lengths(v)))
        _SUPPORT_CACHE[key] = rows
    return _SUPPORT_CACHE[key]


def poch_value(q0: Fraction, base: int, length: int) -> Fraction:
    v = Fraction(1)
    p = q0 ** base
    t = p
    for _ in range(length):
        v *= 1 - t
        t *= p
    return v


def _poch_table(q0: Fraction, base: int, upto: int) -> list[Fraction]:
    vals = [Fraction(1)]
    p = q0 ** base
    t = p
    for _ in range(upto):
        vals.append(vals[-1] * (1 - t))
        t *= p
    return vals


def sequence_value(term: HypTerm, n: int, q0: Fraction) -> Fraction:
    """f_n at the exact rational point q = q0 (full support, no truncation)."""
    if n < 0:
        return Fraction(0)
    profile = _term_profile(term, n)
    tables = [_poch_table(q0, base, n + 1) for _, _, base in term.pochs]
    total = Fraction(0)
    for e, lengths in profile:
        val = q0 ** e
        for tab, L in zip(tables, lengths):
            val /= tab[L]
        total += val
    return total


def sequence_series(term: HypTerm, n: int, qorder: int) -> QSeries:
    """f_n as a q-series mod q^qorder (terms with exponent >= qorder vanish)."""
    acc = QSeries.zero(qorder)
    if n < 0:
        return acc
    inv_cache: dict[tuple[int, int], QSeries] = {}

    def inv(base: int, L: int) -> QSeries:
        if (base, L) not in inv_cache:
            inv_cache[(base, L)] = finite_pochhammer(base, L, qorder).invert()
        return inv_cache[(base, L)]

    for e, lengths in _term_profile(term, n):
        if e < 0:
            raise ValueError("negative q-exponent on support")
        if e >= qorder:
            continue
        s = QSeries.monomial(qorder, e)
        for (coeffs, const, base), L in zip(term.pochs, lengths):
            s = s * inv(base, L)
        acc = acc + s
    return acc


def eval_qu_poly(p: LaurentPoly, n: int, q0: Fraction) -> Fraction:
    """Evaluate a (q, u)-polynomial at q = q0, u = q0^n."""
    if p.vars != QU_VARS:
        p = p.project(QU_VARS)
    total = Fraction(0)
    for (eq, eu), c in p.terms.items():
        total += c * q0 ** (eq + n * eu)
    return total


def recurrence_holds_at_point(
    term: HypTerm, plist: Sequence[LaurentPoly], nmax: int, q0: Fraction, nmin: int = 0
) -> bool:
    """Exact check of sum_j p_j(q^n) f_(n-j) = 0 for nmin <= n <= nmax at q = q0."""
    values: dict[int, Fraction] = {}
    for m in range(nmin - len(plist), nmax + 1):
        values[m] = sequence_value(term, m, q0)
    for n in range(nmin, nmax + 1):
        s = Fraction(0)
        for j, p in enumerate(plist):
            s += eval_qu_poly(p, n, q0) * values[n - j]
        if s != 0:
            return False
    return True


def recurrence_holds_series(
    term: HypTerm, plist: Sequence[LaurentPoly], nmax: int, qorder: int
) -> bool:
    """q-series check of the recurrence: all coefficients below the valid
    order must vanish for every 0 <= n <= nmax."""
    fs = {m: sequence_series(term, m, qorder) for m in range(-len(plist), nmax + 1)}
    for n in range(nmax + 1):
        acc: dict[int, int] = {}
        minexp = 0
        for j, p in enumerate(plist):
            coeffs: dict[int, int] = {}
            for (eq, eu), c in p.project(QU_VARS).terms.items():
                e = eq + n * eu
                coeffs[e] = coeffs.get(e, 0) + c
                minexp = min(minexp, e)
            f = fs[n - j]
            for e, c in coeffs.items():
                if not c:
                    continue
                for i, fc in enumerate(f.coeffs):
                    if fc:
                        acc[e + i] = acc.get(e + i, 0) + c * fc
        bound = qorder + minexp
        if any(v and e < bound for e, v in acc.items()):
            return False
    return True


# ----------------------------------------------------------------------
# quadruple sums


@dataclass(frozen=True)
class AGSumSpec:
    """A positive multiple sum: q^Q(k) x^(E.k) / prod (q^(m_i); q^(m_i))_(k_i).

    ``quad2`` is twice the symmetric matrix of Q over the summation
    variables; all entries of quad2 and lin must be nonnegative so the
    exponent is monotone in each variable, which makes the lattice
    enumeration bound rigorous.
    """

    quad2: tuple[tuple[int, ...], ...]
    lin: tuple[int, ...]
    xcoeffs: tuple[int, ...]
    bases: tuple[int, ...]

    def qexponent(self, k: Sequence[int]) -> int:
        s = 0
        for i, row in enumerate(self.quad2):
            s += k[i] * _dot(row, k)
        return s // 2 + _dot(self.lin, k)

    def __post_init__(self):
        if any(c < 0 for row in self.quad2 for c in row) or any(c < 0 for c in self.lin):
            raise ValueError("growth monotonicity requires nonnegative coefficients")
        if any(self.quad2[i][i] <= 0 for i in range(len(self.quad2))):
            raise ValueError("diagonal must be positive for termination")


def evaluate_ag_sum(spec: AGSumSpec, qorder: int) -> BiSeries:
    """Exact expansion of the sum over all lattice points with exponent < qorder."""
    if qorder < 1:
        raise ValueError("qorder must be >= 1")
    r = len(spec.bases)
    inv_cache: dict[tuple[int, int], QSeries] = {}

    def inv_poch(base: int, length: int) -> QSeries:
        key = (base, length)
        if key not in inv_cache:
            inv_cache[key] = finite_pochhammer(base, length, qorder).invert()
        return inv_cache[key]

    acc = BiSeries.zero(qorder)

    def rec(prefix: list[int]) -> None:
        nonlocal acc
        if len(prefix) == r:
            e = spec.qexponent(prefix)
            if e >= qorder:
                return
            s = QSeries.monomial(qorder, e)
            for base, k in zip(spec.bases, prefix):
                s = s * inv_poch(base, k)
            acc = acc + BiSeries(qorder, {_dot(spec.xcoeffs, prefix): s})
            return
        i = len(prefix)
        k = 0
        while True:
            probe = prefix + [k] + [0] * (r - i - 1)
            if spec.qexponent(probe) >= qorder:
                break
            prefix.append(k)
            rec(prefix)
            prefix.pop()
            k += 1

    rec([])
    return acc


# ----------------------------------------------------------------------
# q-difference operators in x


@dataclass(frozen=True)
class QDiffOperator:
    """sum_s coeff_s(x, q) * (x -> x q^(step*s)) with polynomial coefficients."""

    terms: tuple[tuple[LaurentPoly, int], ...]
    step: int = 3

    def __post_init__(self):
        for c, s in self.terms:
            if c.vars != XQ_VARS:
                raise ValueError("coefficients must be over (x, q)")
            if s < 0:
                raise ValueError("shift powers must be >= 0")

    def to_json(self) -> dict:
        return {"step": self.step, "terms": [[c.to_json(), s] for c, s in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> "QDiffOperator":
        return cls(
            tuple((LaurentPoly.from_json(c), int(s)) for c, s in data["terms"]),
            int(data.get("step", 3)),
        )


def poly_times_biseries(p: LaurentPoly, s: BiSeries) -> BiSeries:
    out = BiSeries.zero(s.qorder)
    for (ex, eq), c in p.terms.items():
        if ex < 0 or eq < 0:
            raise ValueError("operator coefficients must be polynomial")
        out = out + s.scale_monomial(ex, eq, c)
    return out


def apply_qdiff(op: QDiffOperator, s: BiSeries) -> BiSeries:
    """Apply the operator to a BiSeries, truncated at s.qorder."""
    acc = BiSeries.zero(s.qorder)
    for coeff, shift in op.terms:
        acc = acc + poly_times_biseries(coeff, s.apply_xshift(op.step * shift))
    return acc


# ----------------------------------------------------------------------
# uncoupling first-order systems


def _shift_x_poly(p: LaurentPoly, qpow: int) -> LaurentPoly:
    return p.twist("x", "q", qpow)


def _shift_x_rat(r, qpow: int):
    from .laurent import RationalFunction

    return RationalFunction(_shift_x_poly(r.num, qpow), _shift_x_poly(r.den, qpow), normalize=False)


def _strip_content(p: LaurentPoly) -> LaurentPoly:
    """Divide by the integer content and the monomial content (cheap)."""
    if p.is_zero():
        return p
    m = p.min_exponents()
    if any(m):
        p = p.shift_exponents(tuple(-x for x in m))
    c = p.int_content()
    if c > 1:
        p = LaurentPoly(p.vars, {e: x // c for e, x in p.terms.items()})
    return p


def uncouple_system(matrix, component: int, step: int = 3) -> QDiffOperator:
    """Scalar annihilator of one component of F(x) = A(x) F(x q^step).

    Expresses F_component(x q^(step*k)) as row vectors against
    F(x q^(step*s)) using iterated substitution, and returns the first
    linear dependency among those rows, cleared to polynomial
    coefficients.  Any solution of the system is annihilated.
    """
    from .laurent import RationalFunction

    m = len(matrix)
    if not (0 <= component < m):
        raise ValueError("component out of range")
    rows: list[list[LaurentPoly]] = []
    scale = LaurentPoly.one(XQ_VARS)
    for row in matrix:
        if len(row) != m:
            raise ValueError("matrix must be square")
        cleaned = []
        for e in row:
            if isinstance(e, RationalFunction):
                if not e.den.is_constant() or e.den.constant_value() not in (1, -1):
                    # clear a genuine denominator into the common row scale
                    scale = scale * e.den
                    cleaned.append(("rat", e))
                else:
                    cleaned.append(("poly", e.num * e.den.constant_value()))
            else:
                cleaned.append(("poly", e))
        rows.append(cleaned)
    poly_rows: list[list[LaurentPoly]] = []
    for row in rows:
        out = []
        for kind, e in row:
            if kind == "poly":
                out.append(e * scale)
            else:
                out.append(e.num * scale.divexact(e.den))
        poly_rows.append(out)
    # a common polynomial scale multiplies every entry; dependencies of the
    # scaled system are dependencies of the original one

    zero = LaurentPoly.zero(XQ_VARS)
    one = LaurentPoly.one(XQ_VARS)
    e_i = [one if j == component else zero for j in range(m)]

    def mat_at(k: int):
        return [[_shift_x_poly(e, step * k) for e in row] for row in poly_rows]

    def vec_times_mat(v, M):
        out = []
        for j in range(m):
            acc = zero
            for t in range(m):
                if not v[t].is_zero() and not M[t][j].is_zero():
                    acc = acc + v[t] * M[t][j]
            out.append(acc)
        return out

    W = [e_i]  # W[k] tracks F_component(x q^(step*k)) against F(x q^(step*s))
    for s in range(1, m + 2):
        Bs = mat_at(s - 1)
        W = [vec_times_mat(w, Bs) for w in W]
        W.append(e_i)
        dep = _polynomial_nullvector([list(w) for w in W])
        if dep is not None:
            return _normalize_operator(dep, step)
    raise AssertionError("no dependency found; elimination degenerated")


def _polynomial_nullvector(vectors: list[list[LaurentPoly]]):
    """A nontrivial polynomial combination of the rows summing to zero.

    Fraction-free (Bareiss) elimination on the rows augmented with the
    identity; divisions by the previous pivot are exact, and rows are
    content-stripped to keep coefficients small.
    """
    nrows = len(vectors)
    ncols = len(vectors[0])
    vars = vectors[0][0].vars
    zero = LaurentPoly.zero(vars)
    one = LaurentPoly.one(vars)
    aug = [
        list(row) + [one if i == j else zero for j in range(nrows)]
        for i, row in enumerate(vectors)
    ]
    used = [False] * nrows
    prev_piv: LaurentPoly | None = None
    for col in range(ncols):
        sel = None
        best = None
        for r in range(nrows):
            if not used[r] and not aug[r][col].is_zero():
                sz = len(aug[r][col].terms)
                if best is None or sz < best:
                    best, sel = sz, r
        if sel is None:
            continue
        used[sel] = True
        piv = aug[sel][col]
        for r in range(nrows):
            if r != sel and not used[r]:
                f = aug[r][col]
                if f.is_zero():
                    if prev_piv is not None:
                        aug[r] = [e * piv if e.is_zero() else (e * piv).divexact(prev_piv) for e in aug[r]]
                    else:
                        aug[r] = [e * piv for e in aug[r]]
                    continue
                new = []
                for a, b in zip(aug[r], aug[sel]):
                    val = a * piv - b * f
                    if prev_piv is not None and not val.is_zero():
                        val = val.divexact(prev_piv)
                    new.append(val)
                aug[r] = new
        prev_piv = piv
    for r in range(nrows):
        if not used[r] and all(aug[r][c].is_zero() for c in range(ncols)):
            dep = aug[r][ncols:]
            if any(not d.is_zero() for d in dep):
                return dep
    return None


def _normalize_operator(dep: list[LaurentPoly], step: int) -> QDiffOperator:
    from .laurent import poly_gcd

    cleared = list(dep)
    g = LaurentPoly.zero(XQ_VARS)
    for p in cleared:
        g = poly_gcd(g, p)
        if g.is_one():
            break
    if not g.is_zero() and not g.is_one():
        cleared = [p.divexact(g) for p in cleared]
    mins = [p.min_exponents() for p in cleared if not p.is_zero()]
    if mins:
        shift = tuple(-min(m[i] for m in mins) for i in range(len(XQ_VARS)))
        cleared = [p.shift_exponents(shift) if not p.is_zero() else p for p in cleared]
    c = 0
    for p in cleared:
        from math import gcd as _ig
        for x in p.terms.values():
            c = _ig(c, x)
    if c > 1:
        cleared = [LaurentPoly(XQ_VARS, {e: x // c for e, x in p.terms.items()}) for p in cleared]
    lead = next((p for p in reversed(cleared) if not p.is_zero()), None)
    if lead is not None and lead.leading()[1] < 0:
        cleared = [-p for p in cleared]
    return QDiffOperator(tuple((p, k) for k, p in enumerate(cleared) if not p.is_zero()), step)
