#!/usr/bin/env python3
# The 48 infinite series and their K3 shadow.
#
# A triple b parametrizes the series with weights
# (2, k b_1, k b_2, k b_3, k(b_1+b_2+b_3)-1) and degree 2k(b_1+b_2+b_3)
# for odd k, precisely when the double anticanonical system on
# P(b_1,b_2,b_3) has a quasi-smooth member; equivalently, when
# (b_1, b_2, b_3, b_1+b_2+b_3) is one of the 95 quasi-smooth K3 weight
# systems in weighted projective 3-space.
from wfano import enumerate_48_triples, cy_search
from wfano.classify import series_member_weights
from wfano.search import SeriesFamily

triples = enumerate_48_triples()
print("triples:", len(triples))
print("smallest:", triples[0], " largest:", triples[-1])

k3 = cy_search(3, 50)
print("K3 weight systems:", k3.count)
matched = [tuple(w[:3]) for w, _ in k3.records if w[3] == sum(w[:3])]
print("K3 systems with last weight = sum of first three:", len(matched))
print("identical to the triples:", sorted(matched) == triples)

# Members of the first series; k=1 is the terminal sextic.
for k in (1, 3, 5):
    print("b=(1,1,1), k=%d:" % k, series_member_weights((1, 1, 1), k))

# 23 of the 48 triples have two even entries: every printed member then
# carries four even weights sharing the factor 2, so those series exist as
# formal parametrizations without well-formed members.
formal = [b for b in triples if not SeriesFamily(b).well_formed_members]
print("series without well-formed members:", len(formal))
print("examples:", formal[:4])
