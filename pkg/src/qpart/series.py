"""Truncated q-series and bivariate (x, q)-series with exact integer coefficients.

A QSeries of order N stores the coefficients of q^0 .. q^(N-1); a BiSeries
stores finitely many x-slices, each a QSeries of the common q-order.
Arithmetic results carry the minimum order of the operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class TruncationError(ValueError):
    """Raised when data does not fit under the requested truncation order."""


class QSeries:
    """A q-power series known modulo q^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)
        if len(cs) > order:
            raise TruncationError("more coefficients than the order allows")
        cs.extend([0] * (order - len(cs)))
        self.order = order
        self.coeffs = cs

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, [1] if order else [])

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(order)

    @classmethod
    def monomial(cls, order: int, exp: int, coeff: int = 1) -> "QSeries":
        s = cls(order)
        if 0 <= exp < order:
            s.coeffs[exp] = coeff
        elif exp < 0:
            raise ValueError("negative q-exponent in QSeries")
        return s

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise TruncationError("cannot extend a truncated series")
        return QSeries(order, self.coeffs[:order])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs[1:] == [0] * (self.order - 1) and (self.order == 0 or self.coeffs[0] == other)
        return isinstance(other, QSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        return QSeries(n, [a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __sub__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        return QSeries(n, [a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __neg__(self) -> "QSeries":
        return QSeries(self.order, [-a for a in self.coeffs])

    def scale(self, c: int) -> "QSeries":
        return QSeries(self.order, [c * a for a in self.coeffs])

    def __mul__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        out = [0] * n
        a, b = self.coeffs, other.coeffs
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return QSeries(n, out)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("negative shift")
        if k == 0:
            return self
        return QSeries(self.order, [0] * min(k, self.order) + self.coeffs[: max(self.order - k, 0)])

    def mul_binomial(self, exp: int, coeff: int) -> "QSeries":
        """Multiply by (1 + coeff*q^exp) in place-free fashion."""
        out = list(self.coeffs)
        if exp >= 0:
            for i in range(self.order - exp):
                if self.coeffs[i]:
                    out[i + exp] += coeff * self.coeffs[i]
        else:
            raise ValueError("negative exponent")
        return QSeries(self.order, out)

    def invert(self) -> "QSeries":
        """Multiplicative inverse; the constant term must be +-1."""
        if self.order == 0:
            return QSeries(0)
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("constant term must be a unit (+1 or -1)")
        n = self.order
        inv = [0] * n
        inv[0] = c0
        for k in range(1, n):
            acc = 0
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc += self.coeffs[j] * inv[k - j]
            inv[k] = -c0 * acc
        return QSeries(n, inv)

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def first_difference(self, other: "QSeries") -> int | None:
        n = min(self.order, other.order)
        for i in range(n):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def __repr__(self):
        bits = [f"{c}*q^{i}" for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(bits) or "0") + f" + O(q^{self.order})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        return cls(int(data["order"]), [int(c) for c in data["coeffs"]])


# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PochhammerFactor:
    """One factor (q^residue; q^modulus)_infinity^(+-multiplicity)."""

    residue: int
    modulus: int
    sign: str  # "numerator" | "denominator"
    multiplicity: int = 1

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if self.residue < 0:
            raise ValueError("residue must be >= 0")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        if self.sign not in ("numerator", "denominator"):
            raise ValueError("sign must be 'numerator' or 'denominator'")
        if self.sign == "denominator" and self.residue == 0:
            raise ValueError("denominator factor needs residue >= 1")


@dataclass(frozen=True)
class PochhammerSpec:
    """A signed product of infinite Pochhammer symbols."""

    factors: tuple[PochhammerFactor, ...]

    @classmethod
    def quotient(cls, num: Iterable[tuple[int, int]], den: Iterable[tuple[int, int]]) -> "PochhammerSpec":
        """Build from lists of (residue, modulus) pairs, with repetitions."""
        fs = [PochhammerFactor(r, m, "numerator") for r, m in num]
        fs += [PochhammerFactor(r, m, "denominator") for r, m in den]
        return cls(tuple(fs))


def pochhammer_expand(spec: PochhammerSpec, order: int) -> QSeries:
    """Expand the product described by ``spec`` modulo q^order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    num = QSeries.one(order)
    den = QSeries.one(order)
    for f in spec.factors:
        part = QSeries.one(order)
        for _ in range(f.multiplicity):
            e = f.residue
            while e < order:
                if e == 0:
                    part = QSeries.zero(order)
                    break
                part = part.mul_binomial(e, -1)
                e += f.modulus
        if f.sign == "numerator":
            num = num * part
        else:
            den = den * part
    return num * den.invert()


def infinite_pochhammer(residue: int, modulus: int, order: int) -> QSeries:
    """(q^residue; q^modulus)_infinity as a QSeries modulo q^order."""
    return pochhammer_expand(PochhammerSpec.quotient([(residue, modulus)], []), order)


def finite_pochhammer(base_exp: int, length: int, order: int) -> QSeries:
    """(q^base_exp; q^base_exp)_length, i.e. prod_{j=1..length} (1 - q^(base_exp*j))."""
    s = QSeries.one(order)
    for j in range(1, length + 1):
        e = base_exp * j
        if e < order:
            s = s.mul_binomial(e, -1)
    return s


# ----------------------------------------------------------------------


class BiSeries:
    """A series in x and q, truncated in q: finitely many x-slices of QSeries."""

    __slots__ = ("qorder", "slices")

    def __init__(self, qorder: int, slices: dict[int, QSeries] | None = None):
        self.qorder = qorder
        self.slices: dict[int, QSeries] = {}
        if slices:
            for m, s in slices.items():
                if m < 0:
                    raise ValueError("negative x-exponent")
                s = s.truncate(qorder) if s.order > qorder else s
                if s.order < qorder:
                    raise TruncationError("slice order below the BiSeries qorder")
                if not s.is_zero():
                    self.slices[m] = s

    @classmethod
    def zero(cls, qorder: int) -> "BiSeries":
        return cls(qorder)

    @classmethod
    def one(cls, qorder: int) -> "BiSeries":
        return cls(qorder, {0: QSeries.one(qorder)})

    @classmethod
    def monomial(cls, qorder: int, xexp: int, qexp: int, coeff: int = 1) -> "BiSeries":
        return cls(qorder, {xexp: QSeries.monomial(qorder, qexp, coeff)})

    def slice(self, m: int) -> QSeries:
        return self.slices.get(m, QSeries.zero(self.qorder))

    def coeff(self, xexp: int, qexp: int) -> int:
        s = self.slices.get(xexp)
        if s is None or qexp >= self.qorder:
            return 0
        return s.coeffs[qexp]

    def is_zero(self) -> bool:
        return not self.slices

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiSeries)
            and self.qorder == other.qorder
            and self.slices == other.slices
        )

    def __hash__(self):
        return hash((self.qorder, frozenset((m, hash(s)) for m, s in self.slices.items())))

    def __add__(self, other: "BiSeries") -> "BiSeries":
        n = min(self.qorder, other.qorder)
        out: dict[int, QSeries] = {m: s.truncate(n) for m, s in self.slices.items()}
        for m, s in other.slices.items():
            out[m] = out[m] + s if m in out else s.truncate(n)
        return BiSeries(n, out)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.qorder, {m: -s for m, s in self.slices.items()})

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        n = min(self.qorder, other.qorder)
        out: dict[int, QSeries] = {}
        for m1, s1 in self.slices.items():
            for m2, s2 in other.slices.items():
                p = s1 * s2
                m = m1 + m2
                out[m] = out[m] + p if m in out else p
        return BiSeries(n, out)

    def scale_monomial(self, xexp: int, qexp: int, coeff: int = 1) -> "BiSeries":
        """Multiply by coeff * x^xexp * q^qexp."""
        return BiSeries(
            self.qorder,
            {m + xexp: s.shift(qexp).scale(coeff) for m, s in self.slices.items()},
        )

    def apply_xshift(self, k: int) -> "BiSeries":
        """Substitute x -> x*q^k: slice m is multiplied by q^(k*m)."""
        if k < 0:
            raise ValueError("negative x-shift")
        if k == 0:
            return self
        return BiSeries(self.qorder, {m: s.shift(k * m) for m, s in self.slices.items()})

    def eval_x1(self) -> QSeries:
        """Specialize x = 1."""
        acc = QSeries.zero(self.qorder)
        for s in self.slices.values():
            acc = acc + s
        return acc

    def invert(self) -> "BiSeries":
        """Inverse of a BiSeries whose x^0 slice is the unit series 1."""
        if self.slice(0) != 1:
            raise ValueError("invert requires x^0 slice equal to 1")
        maxm = max(self.slices, default=0)
        # slicewise recursion: B_0 = 1, B_m = -sum_{e=1..m} A_e * B_{m-e}
        out: dict[int, QSeries] = {0: QSeries.one(self.qorder)}
        # the inverse can have arbitrarily many slices; cut where slices vanish
        # identically below qorder: slice m of any product here has valuation
        # >= m when every nonconstant input slice has valuation >= 1.
        bound = self._xslice_bound()
        for m in range(1, bound + 1):
            acc = QSeries.zero(self.qorder)
            for e in range(1, min(m, maxm) + 1):
                ae = self.slices.get(e)
                if ae is not None and m - e in out:
                    acc = acc + ae * out[m - e]
            if not acc.is_zero():
                out[m] = -acc
        return BiSeries(self.qorder, out)

    def _xslice_bound(self) -> int:
        """Bound on x-degrees that can carry coefficients below qorder.

        Valid when every slice m >= 1 has q-valuation >= 1 (true for all
        series handled here: a counted object of x-weight m has size >= m).
        """
        vals = [s.valuation() for m, s in self.slices.items() if m >= 1]
        vmin = min((v for v in vals if v is not None), default=1)
        vmin = max(vmin, 1)
        return self.qorder // vmin + 1

    def truncate(self, qorder: int) -> "BiSeries":
        return BiSeries(qorder, {m: s.truncate(qorder) for m, s in self.slices.items()})

    def truncate_x(self, max_x: int) -> "BiSeries":
        return BiSeries(self.qorder, {m: s for m, s in self.slices.items() if m <= max_x})

    def first_difference(self, other: "BiSeries") -> tuple[int, int] | None:
        """(x_exp, q_exp) of the first mismatching coefficient, or None."""
        n = min(self.qorder, other.qorder)
        for m in sorted(set(self.slices) | set(other.slices)):
            a, b = self.slice(m), other.slice(m)
            for i in range(n):
                if a.coeffs[i] != b.coeffs[i]:
                    return (m, i)
        return None

    def __repr__(self):
        bits = []
        for m in sorted(self.slices):
            bits.append(f"x^{m}*({self.slices[m]!r})")
        return " + ".join(bits) or f"0 + O(q^{self.qorder})"

    def to_json(self) -> dict:
        return {
            "qorder": self.qorder,
            "slices": {str(m): s.to_json() for m, s in sorted(self.slices.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "BiSeries":
        return cls(int(data["qorder"]), {int(m): QSeries.from_json(s) for m, s in data["slices"].items()})


def xq_pochhammer(order: int) -> BiSeries:
    """(xq; q)_infinity as a BiSeries modulo q^order.

    Slice m is (-1)^m q^(m(m+1)/2) / (q;q)_m.
    """
    out: dict[int, QSeries] = {}
    m = 0
    while m * (m + 1) // 2 < order:
        val = m * (m + 1) // 2
        s = finite_pochhammer(1, m, order).invert().shift(val)
        out[m] = s.scale(-1 if m % 2 else 1)
        m += 1
    return BiSeries(order, out)


def inv_xq_pochhammer(order: int) -> BiSeries:
    """1/(xq; q)_infinity as a BiSeries modulo q^order: slice m is q^m/(q;q)_m."""
    out: dict[int, QSeries] = {}
    for m in range(order):
        out[m] = finite_pochhammer(1, m, order).invert().shift(m)
    return BiSeries(order, out)
