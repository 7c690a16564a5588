"""Cutting intervals and convex expansion.

An interval K = [bottom, top] of a finite distributive lattice L is a
*cutting* when every maximal chain of L meets K.  Exactly then can a new
element be spliced into the base poset so that the filter lattice of the
enlarged poset is L with a second copy of K glued in ("convex expansion"),
and |result| = |L| + |K|.

The boundary data of an interval, over the base poset P with
B = filter(bottom), T = filter(top):

    S  = B minus T                 (the convex subposet the interval represents)
    S0 = maximal elements of P-B   (exactly the z with B + {z} still a filter)
    S1 = minimal elements of T     (exactly the y with T - {y} still a filter)

P partitions into (down-closure of S0) + S + (up-closure of S1), and K is a
cutting exactly when z < y for every z in S0, y in S1.  The new element sits
above all of S0, below all of S1, incomparable to S.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import iter_bits, mask_of
from .errors import NotACutting
from .lattice import DistLattice, IntervalRef, filter_lattice
from .poset import (FILTER_CAP, Poset, disjoint_union, ordinal_sum,
                    poset_from_covers, poset_isomorphic, singleton)

CUTTING_METHODS = ("chains", "union", "order", "star")


@dataclass(frozen=True)
class CuttingBoundary:
    """Boundary data of an interval, as base-poset masks."""
    s: int
    s0: int
    s1: int

    def labels(self, base):
        return (base.labels_of(self.s), base.labels_of(self.s0),
                base.labels_of(self.s1))


def boundary(lat, k):
    """Compute (S, S0, S1) for an interval and verify the partition
    P = down(S0) + S + up(S1) and that no element of S0 lies above one of S1."""
    k = lat.interval(*k)
    base = lat.base
    bf, tf = lat.filters[k.bottom], lat.filters[k.top]
    outside = base.full_mask & ~bf
    s0 = base.max_of(outside)
    s1 = base.min_of(tf)
    s = bf & ~tf
    if base.down_closure(s0) != outside or base.up_closure(s1) != tf:
        raise AssertionError("boundary closures do not partition the poset")
    for z in iter_bits(s0):
        if base.down[z] & s1:
            raise AssertionError("an element of S0 lies above an element of S1")
    return CuttingBoundary(s=s, s0=s0, s1=s1)


# -- the four cutting criteria ---------------------------------------------


def _interval_flags(lat, k):
    bf, tf = lat.filters[k.bottom], lat.filters[k.top]
    return [fx & ~bf == 0 and tf & ~fx == 0 for fx in lat.filters]


def _cutting_chains(lat, k):
    # Definition-level criterion: does some maximal chain avoid K?  Maximal
    # chains are exactly the bottom-to-top cover paths, so search for an
    # avoiding path.
    in_k = _interval_flags(lat, k)
    if in_k[lat.bottom] or in_k[lat.top]:
        return True
    seen = bytearray(lat.size)
    seen[lat.bottom] = 1
    stack = [lat.bottom]
    top = lat.top
    while stack:
        a = stack.pop()
        for b in lat.up_covers[a]:
            if in_k[b]:
                continue
            if b == top:
                return False
            if not seen[b]:
                seen[b] = 1
                stack.append(b)
    return True


def _cutting_union(lat, k):
    # L must be (everything above bottom) union (everything below top).
    bf, tf = lat.filters[k.bottom], lat.filters[k.top]
    return all(fx & ~bf == 0 or tf & ~fx == 0 for fx in lat.filters)


def _cutting_order(lat, k):
    # z < y for every z in S0, y in S1.
    base = lat.base
    b = boundary(lat, k)
    return all(b.s1 & ~base.up[z] == 0 for z in iter_bits(b.s0))


def _candidate_expansion(lat, k, label):
    """The candidate enlarged poset: new element above P-B, below T,
    incomparable to S.  Returns None when that prescription is not a poset
    (its transitive closure would disturb the original order)."""
    base = lat.base
    bf, tf = lat.filters[k.bottom], lat.filters[k.top]
    below_x = base.full_mask & ~bf
    above_x = tf
    if below_x & above_x:
        return None
    # Transitivity through the new element: w < x < v forces w < v, which
    # must already hold in P.  (Triples inside P, or with x extremal in
    # them, are closed because below_x is a down-set and above_x a filter.)
    for w in iter_bits(below_x):
        if above_x & ~base.up[w]:
            return None
    xbit = 1 << base.n
    up = [base.up[i] | (xbit if below_x >> i & 1 else 0) for i in range(base.n)]
    up.append(above_x)
    return Poset(list(base.labels) + [label], up, _trusted=True)


def _cutting_star(lat, k):
    # Build the candidate enlarged poset and check that the new element's
    # star (everything incomparable to it) is the interval's subposet.
    cand = _candidate_expansion(lat, k, _fresh_label(lat.base))
    if cand is None:
        return False
    star = cand.star(cand.labels[-1])
    return poset_isomorphic(star, lat.interval_subposet(k))


def is_cutting(lat, k, method="chains"):
    """Is the interval met by every maximal chain?

    ``method`` picks one of four independent criteria ("chains", "union",
    "order", "star"); they agree on every interval, which the test suite
    checks exhaustively at small sizes.
    """
    k = lat.interval(*k)
    if method == "chains":
        return _cutting_chains(lat, k)
    if method == "union":
        return _cutting_union(lat, k)
    if method == "order":
        return _cutting_order(lat, k)
    if method == "star":
        return _cutting_star(lat, k)
    raise ValueError("method must be one of %s" % (CUTTING_METHODS,))


def cut_elements(lat, method="chains"):
    """Elements other than bottom and top that lie on every maximal chain."""
    return [a for a in range(1, lat.size - 1)
            if is_cutting(lat, IntervalRef(a, a), method=method)]


# -- expansion ----------------------------------------------------------------


def _fresh_label(base, stem="x@"):
    k = 1
    taken = set(base.labels)
    while "%s%d" % (stem, k) in taken:
        k += 1
    return "%s%d" % (stem, k)


@dataclass(frozen=True)
class ExpansionResult:
    """Result of splicing a new element into the base poset of a lattice.

    ``source_interval`` locates the original K inside the enlarged lattice,
    ``copy_interval`` the new copy K' = {G + {x} : G in K}; the new element's
    filters are exactly those of the host that contain T, shifted by x.
    """
    poset: Poset
    new_element: str
    lattice: DistLattice
    source_interval: IntervalRef
    copy_interval: IntervalRef


def expand_poset(lat, k, label=None, cap=FILTER_CAP):
    """Convex expansion of ``lat`` at the cutting interval ``k``.

    Raises NotACutting when some maximal chain avoids ``k``.  The default
    label for the new element is "x@<i>" with the smallest free i.
    """
    k = lat.interval(*k)
    if label is None:
        label = _fresh_label(lat.base)
    cand = _candidate_expansion(lat, k, label)
    if cand is None:
        raise NotACutting(
            "[%s, %s] is avoided by some maximal chain"
            % (lat.bitstring(k.bottom), lat.bitstring(k.top)))
    big = filter_lattice(cand, cap=cap)
    bf, tf = lat.filters[k.bottom], lat.filters[k.top]
    xbit = 1 << lat.base.n
    result = ExpansionResult(
        poset=cand,
        new_element=label,
        lattice=big,
        source_interval=big.interval(big.index_of[bf], big.index_of[tf]),
        copy_interval=big.interval(big.index_of[bf | xbit],
                                   big.index_of[tf | xbit]),
    )
    return result


def expand_lattice(lat, k, label=None, cap=FILTER_CAP):
    """expand_poset, returning just the enlarged lattice."""
    return expand_poset(lat, k, label=label, cap=cap).lattice


# -- decomposition -------------------------------------------------------------


@dataclass(frozen=True)
class DecomposeResult:
    """Splitting F(P) at an element x: F(P) is the convex expansion of
    F(P - x) at the interval whose subposet is P * x (delete x and everything
    comparable)."""
    minus: Poset
    star: Poset
    host: DistLattice          # F(P - x)
    interval: IntervalRef      # the cutting of the host determined by x
    expansion: ExpansionResult
    size: int                  # |F(P)|
    counts_ok: bool            # |F(P)| == |F(P-x)| + |F(P*x)|
    expansion_iso_ok: bool     # expanded poset isomorphic to P
    product_form: bool         # P - x isomorphic to P * x
    product_iso_ok: bool       # ... and then P iso (P - x) + singleton side by side


def decompose(p, x, cap=FILTER_CAP):
    """Decompose F(P) at element x, verifying the expansion round trip."""
    i = p.idx(x)
    minus = p.minus(x)
    star = p.star(x)
    host = filter_lattice(minus, cap=cap)

    # The interval of the host determined by x: bottom is the complement of
    # down(x), top is up(x); both survive deleting x unchanged.
    keep = p.full_mask & ~(1 << i)
    old = list(iter_bits(keep))
    newidx = {o: t for t, o in enumerate(old)}

    def compress(mask):
        return mask_of(newidx[j] for j in iter_bits(mask & keep))

    bf = compress(keep & ~p.down[i])
    tf = compress(p.up[i])
    k = host.interval(host.index_of[bf], host.index_of[tf])

    exp = expand_poset(host, k, label=x, cap=cap)
    size = len(p.filters(cap=cap))
    star_size = len(star.filters(cap=cap))
    counts_ok = size == host.size + star_size == exp.lattice.size
    expansion_iso_ok = poset_isomorphic(exp.poset, p)
    product_form = poset_isomorphic(minus, star)
    product_iso_ok = (product_form
                      and poset_isomorphic(p, disjoint_union(minus, singleton(x))))
    return DecomposeResult(
        minus=minus, star=star, host=host, interval=k, expansion=exp,
        size=size, counts_ok=counts_ok, expansion_iso_ok=expansion_iso_ok,
        product_form=product_form, product_iso_ok=product_iso_ok)


# -- iterated expansion ----------------------------------------------------------


def expand_chain_steps(base, additions, cap=FILTER_CAP):
    """Grow a poset one element at a time, yielding the lattice after each
    step.  ``additions`` is a sequence of (label, lower_labels, upper_labels):
    the new element covers each of ``lower_labels`` and is covered by each of
    ``upper_labels``.  Each step is performed as a convex expansion of the
    previous lattice and cross-checked against the rebuilt poset."""
    p = base
    lat = filter_lattice(p, cap=cap)
    yield p, lat
    for label, lowers, uppers in additions:
        labels = list(p.labels) + [label]
        covers = p.cover_pairs()
        covers += [(lo, label) for lo in lowers]
        covers += [(label, hi) for hi in uppers]
        grown = poset_from_covers(labels, covers)
        i = grown.idx(label)
        bf = p.full_mask & ~grown.down[i]
        tf = grown.up[i]
        k = lat.interval(lat.index_of[bf], lat.index_of[tf])
        exp = expand_poset(lat, k, label=label, cap=cap)
        if exp.poset != grown:
            raise AssertionError("expansion step does not match the rebuilt poset")
        p, lat = grown, exp.lattice
        yield p, lat


def expand_chain(base, additions, cap=FILTER_CAP):
    """Final lattice after applying all additions (see expand_chain_steps)."""
    lat = None
    for _p, lat in expand_chain_steps(base, additions, cap=cap):
        pass
    return lat


# -- sum laws ---------------------------------------------------------------------


def _pair_product_poset(l1, l2):
    """The componentwise-order product of two lattices, as a poset on
    index pairs."""
    labels = []
    up = []
    n2 = l2.size
    for a in range(l1.size):
        for b in range(l2.size):
            labels.append("%d,%d" % (a, b))
            m = 0
            for c in range(l1.size):
                if not l1.le(a, c):
                    continue
                for d in range(l2.size):
                    if l2.le(b, d) and (a != c or b != d):
                        m |= 1 << (c * n2 + d)
            up.append(m)
    return Poset(labels, up, _trusted=True)


def _vertical_sum_poset(l1, l2):
    """Stack l2 on top of l1, identifying top(l1) with bottom(l2)."""
    items = [("p", a) for a in range(l1.size)]
    items += [("q", b) for b in range(1, l2.size)]
    pos = {it: t for t, it in enumerate(items)}
    up = []
    for side, a in items:
        m = 0
        for side2, b in items:
            if (side, a) == (side2, b):
                continue
            if side == side2:
                le = l1.le(a, b) if side == "p" else l2.le(a, b)
            else:
                le = side == "p"
            if le:
                m |= 1 << pos[(side2, b)]
        up.append(m)
    return Poset(["%s%d" % it for it in items], up, _trusted=True)


def lattice_as_poset(lat):
    """The lattice order as a plain poset, labelled by filter bitstrings."""
    up = []
    for a, fa in enumerate(lat.filters):
        up.append(mask_of(b for b, fb in enumerate(lat.filters)
                          if b != a and fb & ~fa == 0 and fb != fa))
    return Poset([lat.bitstring(a) for a in range(lat.size)], up, _trusted=True)


@dataclass(frozen=True)
class SumLawsReport:
    disjoint_product_ok: bool   # F(P + Q side by side) is the direct product
    vertical_sum_ok: bool       # F(P over Q stacked) is the vertical sum
    top_adjoined_ok: bool       # F(P + new global top) adds a new lattice top
    bottom_adjoined_ok: bool    # F(new global bottom + P) adds a new lattice bottom

    @property
    def ok(self):
        return (self.disjoint_product_ok and self.vertical_sum_ok
                and self.top_adjoined_ok and self.bottom_adjoined_ok)


def sum_laws(p, q, cap=FILTER_CAP):
    """Check the four sum laws for a pair of posets by explicit construction
    on both sides of each isomorphism (desk scale)."""
    lp = filter_lattice(p, cap=cap)
    lq = filter_lattice(q, cap=cap)

    du = filter_lattice(disjoint_union(p, q), cap=cap)
    product = _pair_product_poset(lp, lq)
    disjoint_ok = (du.size == lp.size * lq.size
                   and poset_isomorphic(lattice_as_poset(du), product))

    vs = filter_lattice(ordinal_sum(p, q), cap=cap)
    stacked = _vertical_sum_poset(lp, lq)
    vertical_ok = (vs.size == lp.size + lq.size - 1
                   and poset_isomorphic(lattice_as_poset(vs), stacked))

    one = singleton("adjoined")
    ptop = filter_lattice(ordinal_sum(p, one), cap=cap)
    top_ok = poset_isomorphic(
        lattice_as_poset(ptop),
        _vertical_sum_poset(lp, filter_lattice(one)))
    pbot = filter_lattice(ordinal_sum(one, p), cap=cap)
    bottom_ok = poset_isomorphic(
        lattice_as_poset(pbot),
        _vertical_sum_poset(filter_lattice(one), lp))

    return SumLawsReport(disjoint_product_ok=disjoint_ok,
                         vertical_sum_ok=vertical_ok,
                         top_adjoined_ok=top_ok,
                         bottom_adjoined_ok=bottom_ok)
