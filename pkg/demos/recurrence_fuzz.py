"""Fuzz the counting recurrences on seeded random posets.

Every cutting interval found gets expanded and the rank, q and d
recurrences are recomputed from scratch on both sides.  Prints a tally;
exits nonzero if anything disagrees.
"""

import sys

from latcut import (check_d_recurrences, check_q_recurrence,
                    check_rank_recurrence, filter_lattice, is_cutting,
                    random_poset)

TRIALS = 60
MAX_SIZE = 6
SEED = 20260815

posets = 0
cuttings = 0
bad = 0
for t in range(TRIALS):
    p = random_poset(SEED + t, MAX_SIZE)
    lat = filter_lattice(p)
    posets += 1
    for a in range(lat.size):
        for b in range(lat.size):
            if not lat.le(a, b) or not is_cutting(lat, (a, b)):
                continue
            k = lat.interval(a, b)
            cuttings += 1
            if not (check_rank_recurrence(lat, k).ok
                    and check_q_recurrence(lat, k).ok
                    and check_d_recurrences(lat, k).ok):
                bad += 1
                print("FAIL seed=%d interval %s,%s"
                      % (SEED + t, lat.bitstring(a), lat.bitstring(b)))

print("%d posets, %d cuttings expanded, %d failures" % (posets, cuttings, bad))
sys.exit(1 if bad else 0)
