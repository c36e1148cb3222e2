"""Cylindric partitions and the profile recursion engine.

A profile is a cyclic tuple of r nonnegative integers; a cylindric
partition of that profile is an r-tuple of ordinary partitions whose rows
dominate each other cyclically with offsets given by the profile.  Two
generating functions are tracked per profile: F (weight x^max * q^size)
and G = (xq; q)_inf * F.  G satisfies a coupled recursion over subsets of
the profile's support, which is solved here for the whole orbit of
profiles at once by q-adic fixed-point iteration.
"""

from __future__ import annotations

from itertools import combinations

from .series import BiSeries, QSeries, xq_pochhammer, inv_xq_pochhammer

Profile = tuple[int, ...]
Rows = tuple[tuple[int, ...], ...]


def check_profile(profile: Profile) -> Profile:
    p = tuple(profile)
    if not p:
        raise ValueError("profile must have r >= 1 entries")
    if any(c < 0 for c in p):
        raise ValueError("profile entries must be nonnegative")
    return p


def is_cylindric(rows: Rows, profile: Profile) -> bool:
    """Check the cyclic row-domination inequalities (missing parts are 0)."""
    p = check_profile(profile)
    r = len(p)
    if len(rows) != r:
        raise ValueError(f"expected {r} rows, got {len(rows)}")
    for i in range(r):
        a = rows[i]
        b = rows[(i + 1) % r]
        off = p[(i + 1) % r]
        for j in range(len(b) - off):
            left = a[j] if j < len(a) else 0
            if left < b[j + off]:
                return False
    return True


def _partitions_upto(n: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], budget: int, maxpart: int) -> None:
        out.append(tuple(prefix))
        for p in range(min(budget, maxpart), 0, -1):
            prefix.append(p)
            rec(prefix, budget - p, p)
            prefix.pop()

    rec([], n, n)
    return out


def _row_tuples(r: int, max_size: int) -> list[tuple[Rows, int, int]]:
    """All r-tuples of partitions with total size <= max_size.

    Returns (rows, total_size, max_part) triples; shared by every profile
    at the same bound.
    """
    parts = _partitions_upto(max_size)
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for lam in parts:
        by_size.setdefault(sum(lam), []).append(lam)
    out: list[tuple[Rows, int, int]] = []

    def rec(i: int, rows: list[tuple[int, ...]], used: int, mx: int) -> None:
        if i == r:
            out.append((tuple(rows), used, mx))
            return
        for s in range(max_size - used + 1):
            for lam in by_size.get(s, ()):
                rows.append(lam)
                rec(i + 1, rows, used + s, max(mx, lam[0] if lam else 0))
                rows.pop()

    rec(0, [], 0, 0)
    return out


_ROW_CACHE: dict[tuple[int, int], list[tuple[Rows, int, int]]] = {}


def _row_tuples_cached(r: int, max_size: int) -> list[tuple[Rows, int, int]]:
    key = (r, max_size)
    if key not in _ROW_CACHE:
        _ROW_CACHE.clear()  # keep at most one bound alive
        _ROW_CACHE[key] = _row_tuples(r, max_size)
    return _ROW_CACHE[key]


def _satisfies(rows: Rows, p: Profile) -> bool:
    r = len(p)
    for i in range(r):
        a = rows[i]
        b = rows[(i + 1) % r]
        off = p[(i + 1) % r]
        la = len(a)
        for j in range(len(b) - off):
            if (a[j] if j < la else 0) < b[j + off]:
                return False
    return True


def enumerate_cylindric(profile: Profile, max_size: int) -> BiSeries:
    """Brute-force F_profile: sum of x^max * q^size over total size <= max_size.

    Iterates over r-tuples of ordinary partitions (cached across profiles)
    and filters by the cylindric inequalities; returned with qorder
    max_size + 1.
    """
    p = check_profile(profile)
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    qorder = max_size + 1
    slices: dict[int, list[int]] = {}
    for rows, sz, mx in _row_tuples_cached(len(p), max_size):
        if _satisfies(rows, p):
            slices.setdefault(mx, [0] * qorder)[sz] += 1
    return BiSeries(qorder, {m: QSeries(qorder, row) for m, row in slices.items()})


# ----------------------------------------------------------------------
# the subset recursion


def cw_children(profile: Profile) -> list[tuple[tuple[int, ...], int, int, Profile]]:
    """Children of a profile in the G-recursion.

    Returns (J, sign, pochhammer_degree, child_profile) for each nonempty
    subset J of the support: the term is
    sign * (xq; q)_{pochhammer_degree} * G_child(x * q^{|J|}).
    """
    p = check_profile(profile)
    r = len(p)
    support = [i for i in range(r) if p[i] > 0]
    if not support:
        raise ValueError("zero profile has no recursion")
    out = []
    for size in range(1, len(support) + 1):
        for J in combinations(support, size):
            Jset = set(J)
            child = []
            for i in range(r):
                c = p[i]
                prev_in = (i - 1) % r in Jset
                if i in Jset and not prev_in:
                    c -= 1
                elif i not in Jset and prev_in:
                    c += 1
                child.append(c)
            out.append((J, -1 if size % 2 == 0 else 1, size - 1, tuple(child)))
    return out


def profile_orbit(profile: Profile) -> list[Profile]:
    """All profiles reachable from ``profile`` under the child map."""
    seen = [check_profile(profile)]
    vis = {seen[0]}
    for p in seen:
        for _, _, _, child in cw_children(p):
            if child not in vis:
                vis.add(child)
                seen.append(child)
    return sorted(vis, reverse=True)


def finite_xq_pochhammer(degree: int, qorder: int) -> BiSeries:
    """(xq; q)_degree as a BiSeries."""
    out = BiSeries.one(qorder)
    for j in range(1, degree + 1):
        out = out * (BiSeries.one(qorder) - BiSeries.monomial(qorder, 1, j))
    return out


def cw_fixed_point(profile: Profile, qorder: int) -> BiSeries:
    """G_profile mod q^qorder via the joint fixed point over the orbit."""
    return solve_cw_family(profile, qorder)[check_profile(profile)]


def solve_cw_family(profile: Profile, qorder: int) -> dict[Profile, BiSeries]:
    """Solve the G-recursion for every profile in the orbit at once.

    Every child term shifts x by at least q^1, so slices of positive
    x-degree gain q-order each pass and the iteration stabilizes; the
    constant slice of every G is 1.
    """
    if qorder < 1:
        raise ValueError("qorder must be >= 1")
    orbit = profile_orbit(profile)
    children = {p: cw_children(p) for p in orbit}
    poch = {d: finite_xq_pochhammer(d, qorder) for d in range(len(profile) + 1)}
    cur = {p: BiSeries.one(qorder) for p in orbit}
    for _ in range(qorder + 2):
        nxt: dict[Profile, BiSeries] = {}
        for p in orbit:
            acc = BiSeries.zero(qorder)
            for J, sign, deg, child in children[p]:
                term = poch[deg] * cur[child].apply_xshift(len(J))
                acc = acc + (term if sign > 0 else -term)
            nxt[p] = acc
        if nxt == cur:
            return cur
        cur = nxt
    raise AssertionError("profile recursion failed to converge")


def g_to_f(g: BiSeries) -> BiSeries:
    """Divide by (xq; q)_inf, recovering F from G."""
    return g * inv_xq_pochhammer(g.qorder)


def f_to_g(f: BiSeries) -> BiSeries:
    """Multiply by (xq; q)_inf, producing G from F."""
    return f * xq_pochhammer(f.qorder)
