#!/usr/bin/env python3
# The exhaustive box check: every well-formed ascending tuple with
# a_0 <= 100, a_1, a_2 <= 200, a_3 <= 400, a_4 <= 600 is tested.
# Pass --full to run the complete box (about a minute on a few cores).
import sys
import time

from wfano import fano_box_search

full = "--full" in sys.argv
box = (100, 200, 200, 400, 600) if full else (20, 40, 40, 80, 120)

t0 = time.time()
res = fano_box_search(box)
print("box:", box)
print("quasi-smooth families:", res.count)
print("time: %.1fs" % (time.time() - t0))
for key in ("prefixes", "candidates", "vec_survivors"):
    print("  %s: %d" % (key, res.counters[key]))
if full:
    assert res.count == 3610, res.count
    print("matches the classical count of 3610")
print("first:", res.records[0], " last:", res.records[-1])
