"""Exhaustive and seeded-random poset sources for the verification suites.

Exhaustive layers:
  natural_posets(n)    strict orders contained in the integer order 1 < .. < n
  all_labeled_posets(n)    every partial order on n labelled points
  posets_up_to_iso(n)      one representative per isomorphism class

Every poset has a linear extension, so each isomorphism class contains a
naturally labelled member; relabelling the natural ones by all permutations
and deduplicating gives the labelled count (1, 1, 3, 19, 219, 4231, ...),
while canonical-form deduplication gives the class count (1, 1, 2, 5, 16, 63).

random_poset draws the size, then one edge probability for the whole poset,
then upper-triangle relations i < j, and transitively closes.  Everything is
driven by random.Random(seed), so a seed pins the poset down exactly.
"""

from __future__ import annotations

import random
from itertools import permutations

from .bits import iter_bits, mask_of
from .poset import Poset, canonical_key

_ENUM_LIMIT = 7


def _labels(n):
    return [str(i) for i in range(1, n + 1)]


def natural_posets(n):
    """Up-mask tuples of every strict order with i < j only for i < j as ints.

    Scans the 2^C(n,2) upper-triangle relations and keeps the transitive
    ones; fine through n = 7, guarded beyond.
    """
    if n < 0:
        raise ValueError("negative size")
    if n > _ENUM_LIMIT:
        raise ValueError("exhaustive enumeration capped at %d elements" % _ENUM_LIMIT)
    if n == 0:
        return [()]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for bits in range(1 << len(pairs)):
        up = [0] * n
        for t, (i, j) in enumerate(pairs):
            if bits >> t & 1:
                up[i] |= 1 << j
        if all(up[j] & ~up[i] == 0
               for i in range(n) for j in iter_bits(up[i])):
            out.append(tuple(up))
    return out


def all_labeled_posets(n):
    """Every partial order on labels 1..n, as Poset objects."""
    base = natural_posets(n)
    seen = set()
    labels = _labels(n)
    out = []
    for up in base:
        for perm in permutations(range(n)):
            relabeled = [0] * n
            for i in range(n):
                relabeled[perm[i]] = mask_of(perm[j] for j in iter_bits(up[i]))
            key = tuple(relabeled)
            if key not in seen:
                seen.add(key)
                out.append(Poset(labels, key, _trusted=True))
    return out


def posets_up_to_iso(n):
    """One representative per isomorphism class of n-element posets."""
    labels = _labels(n)
    seen = set()
    out = []
    for up in natural_posets(n):
        p = Poset(labels, up, _trusted=True)
        key = canonical_key(p)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def random_poset(seed, n_max):
    """Seed-determined poset with 1 <= |P| <= n_max.

    The relation density is itself drawn per poset, so the stream mixes
    near-chains, near-antichains and everything between.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    density = rng.random()
    up = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                up[i] |= 1 << j
    # transitive closure, right to left along the natural order
    for i in range(n - 2, -1, -1):
        m = up[i]
        for j in iter_bits(m):
            up[i] |= up[j]
    return Poset(_labels(n), tuple(up), _trusted=True)


def trial_seed(seed, t):
    """Per-trial derived seed for the randomized suites."""
    return seed * 1_000_003 + t
