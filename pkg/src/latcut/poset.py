"""Finite posets on labelled elements.

Elements carry string labels and are indexed 0..n-1 in declaration order.
The strict order relation is stored as one bitmask per element: ``up[i]``
holds the elements strictly above element i, ``down[i]`` those strictly
below.  Subsets handed in and out of the API (filters, antichains, boundary
sets) are plain int bitmasks over these indices; see :mod:`latcut.bits`.

Instances are immutable by convention: every operation returns a new poset.
Concurrent readers are safe because the only mutation ever performed is the
one-shot population of internal caches with values that are functions of the
immutable relation.
"""

from __future__ import annotations

from .bits import iter_bits, mask_of
from .errors import CapacityExceeded, CycleDetected, DuplicateLabel, UnknownLabel

#: Default guard against runaway filter/antichain enumerations.
FILTER_CAP = 1 << 20

# Above this element count the 2^n subset scan in filters() gives way to a
# DFS over antichains, whose cost is bounded by the output size.
_SCAN_LIMIT = 18


class Poset:
    """A finite partial order.

    Construct with :func:`poset_from_covers`; the raw constructor trusts its
    arguments (``up`` must already be transitively closed and acyclic).
    """

    def __init__(self, labels, up, _trusted=False):
        if not _trusted:
            raise TypeError("use poset_from_covers() to build a Poset")
        self.labels = tuple(labels)
        self.n = len(self.labels)
        self.full_mask = (1 << self.n) - 1
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.up = tuple(up)
        down = [0] * self.n
        for i in range(self.n):
            for j in iter_bits(self.up[i]):
                down[j] |= 1 << i
        self.down = tuple(down)
        self._covers_up = None
        self._antichain_table = None

    # -- basic queries ----------------------------------------------------

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self):
        return hash((self.labels, self.up))

    def __repr__(self):
        return "Poset(%d elements, %d covers)" % (self.n, len(self.cover_masks()))

    def idx(self, label):
        try:
            return self.index[label]
        except KeyError:
            raise UnknownLabel("no element labelled %r" % (label,)) from None

    def lt(self, i, j):
        """Strict order on element indices."""
        return bool(self.up[i] >> j & 1)

    def le(self, i, j):
        return i == j or self.lt(i, j)

    def comparable_mask(self, i):
        """Everything comparable to element i, including i itself."""
        return self.up[i] | self.down[i] | (1 << i)

    def labels_of(self, bits):
        """The labels of a subset, in index order."""
        return [self.labels[i] for i in iter_bits(bits)]

    def bits_of(self, labels):
        """Pack labels into a subset mask."""
        return mask_of(self.idx(lab) for lab in labels)

    def bitstring(self, bits):
        """Render a subset as a 0/1 string, element 0 leftmost.

        The empty-universe subset (n = 0) renders as ``"e"``.
        """
        if self.n == 0:
            return "e"
        return "".join("1" if bits >> i & 1 else "0" for i in range(self.n))

    def bits_from_string(self, s):
        if self.n == 0 and s == "e":
            return 0
        if len(s) != self.n or set(s) - {"0", "1"}:
            raise UnknownLabel("bad bitstring %r for %d-element poset" % (s, self.n))
        return mask_of(i for i, c in enumerate(s) if c == "1")

    # -- covers ------------------------------------------------------------

    def cover_masks(self):
        """Transitive reduction: list of (lower, upper) index pairs."""
        if self._covers_up is None:
            covers = []
            for i in range(self.n):
                for j in iter_bits(self.up[i]):
                    # i < j is a cover when nothing sits strictly between.
                    if self.up[i] & self.down[j] == 0:
                        covers.append((i, j))
            self._covers_up = tuple(covers)
        return self._covers_up

    def cover_pairs(self):
        """Covers as (lower_label, upper_label) pairs."""
        return [(self.labels[i], self.labels[j]) for i, j in self.cover_masks()]

    # -- subset predicates ---------------------------------------------------

    def is_filter(self, bits):
        """True when ``bits`` is upward closed."""
        return all(self.up[i] & ~bits == 0 for i in iter_bits(bits))

    def is_antichain(self, bits):
        return all((self.up[i] | self.down[i]) & bits == 0 for i in iter_bits(bits))

    def min_of(self, bits):
        """Mask of the minimal elements of a subset."""
        return mask_of(i for i in iter_bits(bits) if self.down[i] & bits == 0)

    def max_of(self, bits):
        return mask_of(i for i in iter_bits(bits) if self.up[i] & bits == 0)

    def up_closure(self, bits):
        m = bits
        for i in iter_bits(bits):
            m |= self.up[i]
        return m

    def down_closure(self, bits):
        m = bits
        for i in iter_bits(bits):
            m |= self.down[i]
        return m

    # -- enumeration ---------------------------------------------------------

    def filters(self, cap=FILTER_CAP):
        """All upward closed subsets, sorted by (size, numeric mask value).

        Uses a full subset scan with an incremental closure-requirement table
        for small n, and a DFS over antichains (whose cost is bounded by the
        number of filters) beyond that.  Raises CapacityExceeded when more
        than ``cap`` filters exist.
        """
        n = self.n
        if n == 0:
            return [0]
        if n <= _SCAN_LIMIT:
            up = self.up
            req = [0] * (1 << n)
            out = [0]
            for m in range(1, 1 << n):
                low = m & -m
                r = req[m ^ low] | up[low.bit_length() - 1]
                req[m] = r
                if r & ~m == 0:
                    out.append(m)
            if len(out) > cap:
                raise CapacityExceeded(
                    "%d filters exceed cap %d" % (len(out), cap))
        else:
            out = []
            for a in self.antichains(cap=cap):
                out.append(self.up_closure(a))
        out.sort(key=lambda f: (f.bit_count(), f))
        return out

    def antichains(self, cap=FILTER_CAP):
        """Yield every antichain mask (members picked in increasing index
        order, so each appears exactly once).  Antichains are in bijection
        with filters via A -> up-closure of A, so the same cap applies."""
        incomp = [~self.comparable_mask(i) & self.full_mask for i in range(self.n)]
        seen = 0

        def rec(chosen, candidates):
            nonlocal seen
            seen += 1
            if seen > cap:
                raise CapacityExceeded("more than %d antichains" % cap)
            yield chosen
            m = candidates
            while m:
                low = m & -m
                j = low.bit_length() - 1
                m ^= low
                yield from rec(chosen | low, m & incomp[j])

        yield from rec(0, self.full_mask)

    def antichains_of_size(self, k, cap=FILTER_CAP):
        """All antichains with exactly k elements."""
        return [a for a in self.antichains(cap=cap) if a.bit_count() == k]

    def width(self):
        """Size of a largest antichain."""
        return max(a.bit_count() for a in self.antichains())

    def antichain_table(self):
        """DP table over all 2^n subsets: entry m is True when m is an
        antichain.  Cached; only sensible for small n (guarded by callers)."""
        if self._antichain_table is None:
            n = self.n
            table = bytearray(1 << n)
            table[0] = 1
            comp = [self.comparable_mask(i) for i in range(n)]
            for m in range(1, 1 << n):
                low = m & -m
                rest = m ^ low
                table[m] = table[rest] and comp[low.bit_length() - 1] & rest == 0
            self._antichain_table = bytes(table)
        return self._antichain_table

    # -- derived posets --------------------------------------------------------

    def _induced(self, keep_mask, labels=None):
        old = list(iter_bits(keep_mask))
        newidx = {o: i for i, o in enumerate(old)}
        if labels is None:
            labels = [self.labels[o] for o in old]
        up = [mask_of(newidx[j] for j in iter_bits(self.up[o] & keep_mask))
              for o in old]
        return Poset(labels, up, _trusted=True)

    def restrict(self, keep_mask):
        """Induced subposet on a subset mask, labels preserved."""
        return self._induced(keep_mask)

    def minus(self, x):
        """Delete the element labelled x."""
        return self._induced(self.full_mask & ~(1 << self.idx(x)))

    def star(self, x):
        """Delete x together with everything comparable to it."""
        return self._induced(self.full_mask & ~self.comparable_mask(self.idx(x)))

    def dual(self):
        """Order-reversed poset on the same labels."""
        return Poset(self.labels, self.down, _trusted=True)


# -- construction ------------------------------------------------------------


def poset_from_covers(labels, covers):
    """Build a poset from labels (declaration order fixes indices) and a list
    of (lower_label, upper_label) cover pairs.

    The pairs may be any generating relation; the transitive closure is
    computed here and the reduction recovered on demand.  Raises
    DuplicateLabel / UnknownLabel / CycleDetected.
    """
    labels = list(labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel("label %r declared twice" % (lab,))
        seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ = [0] * n
    for lo, hi in covers:
        if lo not in index:
            raise UnknownLabel("no element labelled %r" % (lo,))
        if hi not in index:
            raise UnknownLabel("no element labelled %r" % (hi,))
        i, j = index[lo], index[hi]
        if i == j:
            raise CycleDetected("cover (%r, %r) relates an element to itself"
                                % (lo, hi))
        succ[i] |= 1 << j

    # Kahn's algorithm: a topological order proves acyclicity, and closing
    # in reverse topological order needs a single pass.
    indeg = [0] * n
    for i in range(n):
        for j in iter_bits(succ[i]):
            indeg[j] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    topo = []
    while queue:
        i = queue.pop()
        topo.append(i)
        for j in iter_bits(succ[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    if len(topo) != n:
        raise CycleDetected("cover relation contains a cycle")

    up = [0] * n
    for i in reversed(topo):
        m = succ[i]
        for j in iter_bits(succ[i]):
            m |= up[j]
        up[i] = m
    return Poset(labels, up, _trusted=True)


def singleton(label="x"):
    return poset_from_covers([label], [])


# -- sums ---------------------------------------------------------------------


def _merge_labels(p, q):
    if set(p.labels) & set(q.labels):
        return (["L." + lab for lab in p.labels],
                ["R." + lab for lab in q.labels])
    return list(p.labels), list(q.labels)


def disjoint_union(p, q):
    """Side-by-side union; colliding labels get "L."/"R." prefixes."""
    pl, ql = _merge_labels(p, q)
    up = list(p.up) + [m << p.n for m in q.up]
    return Poset(pl + ql, up, _trusted=True)


def ordinal_sum(p, q):
    """Every element of p below every element of q."""
    pl, ql = _merge_labels(p, q)
    q_above = ((1 << q.n) - 1) << p.n
    up = [m | q_above for m in p.up] + [m << p.n for m in q.up]
    return Poset(pl + ql, up, _trusted=True)


# -- isomorphism ----------------------------------------------------------------


def _refine_colors(p):
    """Iterated neighbourhood refinement; returns a tuple of hashable colors."""
    colors = [(p.down[i].bit_count(), p.up[i].bit_count()) for i in range(p.n)]
    for _ in range(3):
        new = []
        for i in range(p.n):
            below = tuple(sorted(colors[j] for j in iter_bits(p.down[i])))
            above = tuple(sorted(colors[j] for j in iter_bits(p.up[i])))
            new.append((colors[i], below, above))
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    return tuple(colors)


def poset_isomorphism(p, q):
    """An order isomorphism as a label mapping, or None.

    Backtracking over color classes from invariant refinement; tries the
    index-identity mapping first since many callers compare a poset with a
    relabelled or reconstructed copy of itself.
    """
    if p.n != q.n:
        return None
    if p.up == q.up:
        return dict(zip(p.labels, q.labels))
    if sorted(m.bit_count() for m in p.up) != sorted(m.bit_count() for m in q.up):
        return None

    pc, qc = _refine_colors(p), _refine_colors(q)
    if sorted(pc) != sorted(qc):
        return None
    candidates = {}
    for i in range(p.n):
        candidates[i] = [j for j in range(q.n) if qc[j] == pc[i]]
    order = sorted(range(p.n), key=lambda i: len(candidates[i]))

    assigned = [-1] * p.n
    used = [False] * q.n

    def extend(k):
        if k == p.n:
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for t in range(k):
                a, b = order[t], assigned[order[t]]
                if (p.up[a] >> i & 1) != (q.up[b] >> j & 1) or \
                   (p.up[i] >> a & 1) != (q.up[j] >> b & 1):
                    ok = False
                    break
            if ok:
                assigned[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                used[j] = False
                assigned[i] = -1
        return False

    if not extend(0):
        return None
    return {p.labels[i]: q.labels[assigned[i]] for i in range(p.n)}


def poset_isomorphic(p, q):
    return poset_isomorphism(p, q) is not None


def canonical_key(p):
    """A complete isomorphism invariant: the lexicographically smallest
    relation encoding over all relabellings.  Exponential; intended for
    deduplicating tiny posets."""
    from itertools import permutations

    n = p.n
    best = None
    for perm in permutations(range(n)):
        enc = tuple(sorted(
            mask_of(perm[j] for j in iter_bits(p.up[i])) << n | (1 << perm[i])
            for i in range(n)))
        if best is None or enc < best:
            best = enc
    return (n, best)
