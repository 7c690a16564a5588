"""Finite distributive lattices, represented as lattices of filters.

Every finite distributive lattice is the lattice of upward closed subsets
(filters) of a finite poset, ordered by *reverse* inclusion:

    a <= b   iff   filter(a) contains filter(b).

So index 0 is the bottom (the full ground set), the last index is the top
(the empty filter), meet is filter union and join is filter intersection.
Element heights are |P| - |filter|, which agrees with longest-chain rank
because the lattice is graded.

A ``DistLattice`` is immutable; lazily computed caches (cover lists, maximal
chains, containment masks) depend only on the relation, so concurrent reads
are safe.
"""

from __future__ import annotations

from typing import NamedTuple

from .bits import iter_bits, mask_of
from .errors import InvalidInterval
from .poset import FILTER_CAP, Poset, poset_isomorphic, poset_isomorphism


class IntervalRef(NamedTuple):
    """An interval [bottom, top] of a lattice, by element index."""
    bottom: int
    top: int


class DistLattice:
    """The lattice of filters of a base poset."""

    def __init__(self, base, filters):
        self.base = base
        # Canonical element order: largest filter first, ties by mask value.
        # That puts the bottom at index 0 and the top at index size-1.
        self.filters = tuple(sorted(filters, key=lambda f: (-f.bit_count(), f)))
        self.index_of = {f: i for i, f in enumerate(self.filters)}
        n = base.n
        self.heights = tuple(n - f.bit_count() for f in self.filters)
        up = []
        for f in self.filters:
            up.append(tuple(sorted(
                self.index_of[f & ~(1 << y)] for y in iter_bits(base.min_of(f)))))
        self.up_covers = tuple(up)
        down = [[] for _ in self.filters]
        for a, covs in enumerate(self.up_covers):
            for b in covs:
                down[b].append(a)
        self.down_covers = tuple(tuple(sorted(d)) for d in down)
        self._chains = None
        self._above = None

    # -- basics -----------------------------------------------------------

    @property
    def size(self):
        return len(self.filters)

    def __len__(self):
        return len(self.filters)

    def __repr__(self):
        return "DistLattice(%d elements over %d-element poset)" % (
            self.size, self.base.n)

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return self.size - 1

    def le(self, a, b):
        """Lattice order: reverse inclusion of filters."""
        return self.filters[b] & ~self.filters[a] == 0

    def meet(self, a, b):
        return self.index_of[self.filters[a] | self.filters[b]]

    def join(self, a, b):
        return self.index_of[self.filters[a] & self.filters[b]]

    def height(self, a):
        return self.heights[a]

    def bitstring(self, a):
        return self.base.bitstring(self.filters[a])

    def element_by_bits(self, bits):
        try:
            return self.index_of[bits]
        except KeyError:
            raise InvalidInterval(
                "%s is not a filter of the base poset"
                % self.base.bitstring(bits)) from None

    def element_by_string(self, s):
        return self.element_by_bits(self.base.bits_from_string(s))

    # -- containment masks -------------------------------------------------

    def above_masks(self):
        """For each element a, a bitmask over lattice indices of {x : x >= a}.
        Cached; quadratic, intended for desk-scale lattices."""
        if self._above is None:
            above = []
            for fa in self.filters:
                m = 0
                for x, fx in enumerate(self.filters):
                    if fx & ~fa == 0:
                        m |= 1 << x
                above.append(m)
            self._above = tuple(above)
        return self._above

    def up_set(self, a):
        """Mask over lattice indices of elements >= a."""
        fa = self.filters[a]
        return mask_of(x for x, fx in enumerate(self.filters) if fx & ~fa == 0)

    def down_set(self, a):
        fa = self.filters[a]
        return mask_of(x for x, fx in enumerate(self.filters) if fa & ~fx == 0)

    # -- intervals ----------------------------------------------------------

    def interval(self, bottom, top):
        """Validated IntervalRef; raises InvalidInterval unless bottom <= top."""
        if not (0 <= bottom < self.size and 0 <= top < self.size):
            raise InvalidInterval("element index out of range")
        if not self.le(bottom, top):
            raise InvalidInterval(
                "[%s, %s] is not an interval: endpoints incomparable or reversed"
                % (self.bitstring(bottom), self.bitstring(top)))
        return IntervalRef(bottom, top)

    def interval_by_strings(self, bottom_bits, top_bits):
        return self.interval(self.element_by_string(bottom_bits),
                             self.element_by_string(top_bits))

    def interval_elements(self, k):
        """All element indices x with bottom <= x <= top, ascending."""
        k = self.interval(*k)
        fb, ft = self.filters[k.bottom], self.filters[k.top]
        return [x for x, fx in enumerate(self.filters)
                if fx & ~fb == 0 and ft & ~fx == 0]

    def interval_subposet(self, k):
        """The convex base subposet S = filter(bottom) minus filter(top).

        The interval [bottom, top] is isomorphic to the filter lattice of S.
        """
        k = self.interval(*k)
        return self.base.restrict(self.filters[k.bottom] & ~self.filters[k.top])

    def interval_lattice(self, k):
        """The interval as a lattice in its own right (built from S)."""
        return filter_lattice(self.interval_subposet(k))

    def is_boolean_interval(self, k, kk=None):
        """True when [bottom, top] is a Boolean cube; with ``kk`` given,
        additionally of that dimension.  Equivalent to S being an antichain."""
        k = self.interval(*k)
        s = self.filters[k.bottom] & ~self.filters[k.top]
        if kk is not None and s.bit_count() != kk:
            return False
        return self.base.is_antichain(s)

    # -- structure ------------------------------------------------------------

    def meet_irreducibles(self):
        """Indices of elements with exactly one upper cover, ascending."""
        return [a for a in range(self.size) if len(self.up_covers[a]) == 1]

    def mi_poset(self):
        """The meet-irreducibles as a poset under the induced order,
        labelled by their filter bitstrings."""
        mi = self.meet_irreducibles()
        labels = [self.bitstring(a) for a in mi]
        up = []
        for a in mi:
            fa = self.filters[a]
            up.append(mask_of(t for t, b in enumerate(mi)
                              if b != a and self.filters[b] & ~fa == 0
                              and self.filters[b] != fa))
        return Poset(labels, up, _trusted=True)

    def covering_graph(self):
        """Undirected cover edges as sorted (lower, upper) index pairs."""
        return [(a, b) for a in range(self.size) for b in self.up_covers[a]]

    def maximal_chains(self):
        """Every maximal chain as a tuple of element indices, bottom first.
        Cached.  The count equals the number of linear extensions of the
        base poset, so this is for desk-scale use."""
        if self._chains is None:
            chains = []
            stack = [(0, (0,))]
            while stack:
                a, path = stack.pop()
                if not self.up_covers[a]:
                    chains.append(path)
                    continue
                for b in self.up_covers[a]:
                    stack.append((b, path + (b,)))
            self._chains = tuple(sorted(chains))
        return self._chains


def filter_lattice(p, cap=FILTER_CAP):
    """The distributive lattice of all filters of poset ``p``."""
    return DistLattice(p, p.filters(cap=cap))


def lattice_isomorphism(l1, l2):
    """Lattice isomorphism via base posets: finite distributive lattices are
    isomorphic exactly when their meet-irreducible posets are.  Returns the
    witness mapping between the bases' labels, or None."""
    if l1.size != l2.size:
        return None
    return poset_isomorphism(l1.mi_poset(), l2.mi_poset())


def lattice_isomorphic(l1, l2):
    return lattice_isomorphism(l1, l2) is not None


def birkhoff_roundtrip(p, cap=FILTER_CAP):
    """Check that the meet-irreducibles of the filter lattice of ``p``
    recover ``p`` up to isomorphism."""
    return poset_isomorphic(filter_lattice(p, cap=cap).mi_poset(), p)
