"""Enumerative invariants of finite distributive lattices and their behaviour
under convex expansion.

All arithmetic is exact integer arithmetic; polynomials are plain coefficient
lists with no trailing zeros (the zero polynomial is the empty list).

Invariants
----------
rank_poly   R(L, x) = sum over elements of x^height
q           q_k = number of intervals that are Boolean cubes of dimension k
d_minus     d_k = number of elements with exactly k upper covers
d_plus      d_k = number of elements with exactly k lower covers
d_total     d_k = number of elements with Hasse degree k

q and d_minus determine each other by a binomial transform, which is why the
alternating sum of q is always 1 (an Euler relation) and the derivative of
q's generating polynomial at -1 counts the meet-irreducibles.

Under expansion at a cutting K the rank polynomial satisfies

    R(L expanded, x) = R_L(below top(K), x) + x * R_L(above bottom(K), x)

and the vectors satisfy

    q_k(exp)       = q_k(L) + q_k(K) + q_{k-1}(K)
    d_minus_k(exp) = d_minus_k(L) + d_minus_{k-1}(K)
    d_k(exp at K') = d_k(exp) + d_{k-2}(K)     (second expansion at the copy)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .expansion import expand_poset

# The interval-scan oracle builds a 2^n antichain table and a size^2
# containment matrix; past these bounds only the census route is run.
_SCAN_BASE_LIMIT = 20
_SCAN_PAIR_LIMIT = 1 << 23


# -- polynomial helpers (coefficient lists, exact ints) -------------------------


def poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_eq(a, b):
    return poly_trim(a) == poly_trim(b)


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return poly_trim(out)


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_shift(a, k):
    """Multiply by x^k."""
    a = poly_trim(a)
    return [0] * k + a if a else []


def poly_eval(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def poly_deriv(a):
    return poly_trim([i * c for i, c in enumerate(a)][1:])


# -- rank generating function ------------------------------------------------------


def rank_gen(lat):
    """Coefficient k counts the elements of height k."""
    out = [0] * (lat.base.n + 1)
    for h in lat.heights:
        out[h] += 1
    return out


def rank_gen_of(lat, elements, offset=0):
    """Rank polynomial of a subset of elements, heights taken in ``lat``
    shifted down by ``offset`` (use offset=height(bottom) for an interval's
    own grading)."""
    out = {}
    for a in elements:
        h = lat.heights[a] - offset
        out[h] = out.get(h, 0) + 1
    if not out:
        return []
    poly = [0] * (max(out) + 1)
    for h, c in out.items():
        poly[h] = c
    return poly


# -- q vector -------------------------------------------------------------------------


def _q_census(lat):
    """Pair formula: every Boolean interval below a fixed top..., i.e. every
    interval [a, b] with antichain difference, arises from a filter F = filter(a)
    and a subset of its minimal elements.  So q_k = sum over F of C(|Min F|, k)."""
    base = lat.base
    width = 0
    degs = []
    for f in lat.filters:
        m = base.min_of(f).bit_count()
        degs.append(m)
        if m > width:
            width = m
    q = [0] * (width + 1)
    for m in degs:
        for k in range(m + 1):
            q[k] += comb(m, k)
    return q


def _q_scan(lat):
    """Interval-scan oracle: enumerate every comparable pair (a, b), take the
    set difference of their filters, and count it when it is an antichain."""
    base = lat.base
    n = base.n
    if n == 0:
        return [1]
    full = np.uint64(base.full_mask)
    f = np.array(lat.filters, dtype=np.uint64)
    notf = (~f) & full
    sub = (f[None, :] & notf[:, None]) == 0      # sub[a, b]: a <= b in L
    ai, bi = np.nonzero(sub)
    s = (f[ai] & notf[bi]).astype(np.int64)
    table = np.frombuffer(base.antichain_table(), dtype=np.uint8)
    s = s[table[s] != 0]
    counts = np.bincount(np.bitwise_count(s.astype(np.uint64)).astype(np.int64))
    return [int(c) for c in counts]


def _scan_feasible(lat):
    return (lat.base.n <= _SCAN_BASE_LIMIT
            and lat.size * lat.size <= _SCAN_PAIR_LIMIT)


def q_vector(lat, method="auto"):
    """Counts of Boolean-cube intervals by dimension.

    method "census" uses the minimal-element pair formula, "scan" the direct
    interval enumeration; "auto" runs the census and, whenever the scan is
    affordable, also the scan, insisting they agree.
    """
    if method == "census":
        return _q_census(lat)
    if method == "scan":
        return _q_scan(lat)
    if method != "auto":
        raise ValueError("method must be census, scan or auto")
    q = _q_census(lat)
    if _scan_feasible(lat):
        scanned = _q_scan(lat)
        if poly_trim(scanned) != poly_trim(q):
            raise AssertionError(
                "interval scan %r disagrees with census %r" % (scanned, q))
    return q


# -- degree vectors --------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeVectors:
    minus: list      # histogram of up-cover counts, length width+1
    plus: list       # histogram of down-cover counts, length width+1
    total: list      # histogram of total Hasse degree

    @property
    def width(self):
        return len(self.minus) - 1


def antichain_census(p):
    """Number of k-element antichains of a poset, k = 0..width.

    On the meet-irreducible poset of a lattice this reproduces both degree
    histograms, which is the oracle behind the d-vector identities.
    """
    out = [0] * (p.n + 1)
    for a in p.antichains():
        out[a.bit_count()] += 1
    return poly_trim(out)


def d_vectors(lat):
    ups = [len(c) for c in lat.up_covers]
    downs = [len(c) for c in lat.down_covers]
    width = max(max(ups), max(downs)) if ups else 0
    minus = [0] * (width + 1)
    plus = [0] * (width + 1)
    total = [0] * (max(u + d for u, d in zip(ups, downs)) + 1) if ups else [0]
    for u, d in zip(ups, downs):
        minus[u] += 1
        plus[d] += 1
        total[u + d] += 1
    return DegreeVectors(minus=minus, plus=plus, total=total)


# -- binomial transform and Euler relations ------------------------------------------


@dataclass(frozen=True)
class BinomialReport:
    q: list
    d_minus: list
    q_from_d_ok: bool       # q_k = sum_j C(j, k) d_j
    d_from_q_ok: bool       # d_k = sum_j (-1)^(j-k) C(j, k) q_j
    substitution_ok: bool   # Q(x) = D(1 + x) as polynomials

    @property
    def ok(self):
        return self.q_from_d_ok and self.d_from_q_ok and self.substitution_ok


def binomial_transform(d):
    m = len(d) - 1
    return poly_trim([sum(comb(j, k) * d[j] for j in range(k, m + 1))
                      for k in range(m + 1)])


def inverse_binomial_transform(q):
    m = len(q) - 1
    return poly_trim([sum((-1) ** (j - k) * comb(j, k) * q[j]
                          for j in range(k, m + 1)) for k in range(m + 1)])


def binomial_relations(lat):
    """Check all three forms of the q / d_minus correspondence."""
    q = q_vector(lat)
    d = d_vectors(lat).minus
    q_from_d = binomial_transform(d)
    d_from_q = inverse_binomial_transform(q)
    # Substitution route, by polynomial arithmetic rather than comb().
    sub = []
    for coeff in reversed(d):
        sub = poly_add(poly_mul(sub, [1, 1]), [coeff])
    return BinomialReport(
        q=q, d_minus=d,
        q_from_d_ok=poly_eq(q_from_d, q),
        d_from_q_ok=poly_eq(d_from_q, d),
        substitution_ok=poly_eq(sub, q))


@dataclass(frozen=True)
class EulerReport:
    alternating_sum: int     # Q(-1)
    derivative_at_minus_one: int
    mi_count: int

    @property
    def ok(self):
        return self.alternating_sum == 1

    @property
    def derivative_ok(self):
        return self.derivative_at_minus_one == self.mi_count


def euler_checks(lat):
    """Q(-1) = 1 and Q'(-1) = number of meet-irreducibles."""
    q = q_vector(lat)
    return EulerReport(
        alternating_sum=poly_eval(q, -1),
        derivative_at_minus_one=poly_eval(poly_deriv(q), -1),
        mi_count=len(lat.meet_irreducibles()))


# -- recurrences under expansion ----------------------------------------------------


def _ensure_exp(lat, k, exp):
    if exp is None:
        exp = expand_poset(lat, k)
    return exp


@dataclass(frozen=True)
class RankRecurrenceReport:
    lhs: list                 # rank polynomial of the expanded lattice
    rhs_host_graded: list     # R_L(below top) + x R_L(above bottom)
    rhs_self_graded: list     # R(below top) + x^(h(bottom)+1) R(above bottom)
    rhs_case: list | None     # specialisation when K touches bottom or top
    ok: bool


def check_rank_recurrence(lat, k, exp=None):
    k = lat.interval(*k)
    exp = _ensure_exp(lat, k, exp)
    lhs = rank_gen(exp.lattice)

    tf, bf = lat.filters[k.top], lat.filters[k.bottom]
    below_top = [x for x, fx in enumerate(lat.filters) if tf & ~fx == 0]
    above_bottom = [x for x, fx in enumerate(lat.filters) if fx & ~bf == 0]
    h0 = lat.heights[k.bottom]

    rhs_host = poly_add(rank_gen_of(lat, below_top),
                        poly_shift(rank_gen_of(lat, above_bottom), 1))
    rhs_self = poly_add(rank_gen_of(lat, below_top),
                        poly_shift(rank_gen_of(lat, above_bottom, offset=h0),
                                   h0 + 1))

    rhs_case = None
    interval = lat.interval_elements(k)
    if k.top == lat.top:
        rhs_case = poly_add(rank_gen(lat),
                            poly_shift(rank_gen_of(lat, interval, offset=h0),
                                       h0 + 1))
    elif k.bottom == lat.bottom:
        rhs_case = poly_add(rank_gen_of(lat, interval),
                            poly_shift(rank_gen(lat), 1))

    ok = (poly_eq(lhs, rhs_host) and poly_eq(lhs, rhs_self)
          and (rhs_case is None or poly_eq(lhs, rhs_case)))
    return RankRecurrenceReport(lhs=lhs, rhs_host_graded=rhs_host,
                                rhs_self_graded=rhs_self, rhs_case=rhs_case,
                                ok=ok)


@dataclass(frozen=True)
class QRecurrenceReport:
    q_host: list
    q_interval: list
    q_expanded: list
    size_ok: bool     # |exp| = |L| + |K|, the k = 0 line
    ok: bool


def check_q_recurrence(lat, k, exp=None, method="auto"):
    k = lat.interval(*k)
    exp = _ensure_exp(lat, k, exp)
    q_host = q_vector(lat, method)
    q_int = q_vector(lat.interval_lattice(k), method)
    q_exp = q_vector(exp.lattice, method)
    want = poly_add(q_host, poly_add(q_int, poly_shift(q_int, 1)))
    size_ok = exp.lattice.size == lat.size + len(lat.interval_elements(k))
    return QRecurrenceReport(q_host=q_host, q_interval=q_int, q_expanded=q_exp,
                             size_ok=size_ok, ok=size_ok and poly_eq(q_exp, want))


@dataclass(frozen=True)
class DRecurrenceReport:
    d_minus_ok: bool     # after one expansion
    d_total_ok: bool     # after expanding again at the copy interval
    mi_growth_ok: bool   # d_1 of minus-vector grows by 1: one new meet-irreducible
    ok: bool


def check_d_recurrences(lat, k, exp=None):
    """One expansion for the up-cover histogram, a second expansion at the
    copy interval for the total-degree histogram."""
    k = lat.interval(*k)
    exp = _ensure_exp(lat, k, exp)
    d_host = d_vectors(lat)
    d_int = d_vectors(lat.interval_lattice(k))
    d_exp = d_vectors(exp.lattice)

    minus_ok = poly_eq(d_exp.minus,
                       poly_add(d_host.minus, poly_shift(d_int.minus, 1)))
    mi_ok = (len(exp.lattice.meet_irreducibles())
             == len(lat.meet_irreducibles()) + 1)

    exp2 = expand_poset(exp.lattice, exp.copy_interval)
    d_exp2 = d_vectors(exp2.lattice)
    total_ok = poly_eq(d_exp2.total,
                       poly_add(d_exp.total, poly_shift(d_int.total, 2)))
    return DRecurrenceReport(d_minus_ok=minus_ok, d_total_ok=total_ok,
                             mi_growth_ok=mi_ok,
                             ok=minus_ok and total_ok and mi_ok)


# -- summary report -----------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    n: int
    size: int
    q: list
    d_minus: list
    d_plus: list
    d_total: list
    rank_poly: list
    width_m: int
    mi_count: int
    euler_ok: bool
    euler_derivative_ok: bool


def invariant_report(lat):
    q = q_vector(lat)
    d = d_vectors(lat)
    e = euler_checks(lat)
    return InvariantReport(
        n=lat.base.n, size=lat.size, q=q,
        d_minus=d.minus, d_plus=d.plus, d_total=d.total,
        rank_poly=rank_gen(lat), width_m=d.width,
        mi_count=e.mi_count, euler_ok=e.ok, euler_derivative_ok=e.derivative_ok)


def stats_dict(lat):
    """The JSON-facing report: integer-only values, fixed key set."""
    r = invariant_report(lat)
    return {
        "n": r.n,
        "size": r.size,
        "q": list(r.q),
        "d_minus": list(r.d_minus),
        "d_plus": list(r.d_plus),
        "d_total": list(r.d_total),
        "rank_poly": list(r.rank_poly),
        "mi_count": r.mi_count,
        "euler_ok": r.euler_ok,
        "euler_derivative_ok": r.euler_derivative_ok,
    }
