#!/usr/bin/env python3
# Quotient-singularity baskets and the age criterion.
from wfano import HypersurfaceFamily, singularities, is_terminal_type
from wfano.classify import classify_terminal, tiger_ke_flags

# The degree-5 hypersurface in P(1,1,1,1,2) has one half-point.
fam = HypersurfaceFamily((1, 1, 1, 1, 2), 5)
for q in singularities(fam):
    print("singularity 1/%d%s at %s" % (q.r, q.w, (q.location,)))
print("terminal:", classify_terminal(fam))

# The age condition: 1/2(1,1,1) passes, 1/7(1,2,4) fails at the identity
# age sum, and quasi-reflections are reduced away before testing.
print("1/2(1,1,1) terminal:", is_terminal_type(2, (1, 1, 1)))
print("1/7(1,2,4) terminal:", is_terminal_type(7, (1, 2, 4)))
print("1/4(1,2,2) terminal:", is_terminal_type(4, (1, 2, 2)),
      " (reduces to 1/2(1,1,1))")

# A series member at k=3: three weights share the factor 3, so the member
# is singular along the curve cut on that stratum -- never terminal.
member = HypersurfaceFamily((2, 3, 3, 3, 8), 18)
for q in singularities(member):
    print("k=3 member:", q)
print("terminal:", classify_terminal(member))

# The k=1 member of the same series is the classical sextic with three
# isolated half-points: terminal, and one of the 95.
first = HypersurfaceFamily((1, 1, 1, 2, 2), 6)
print("k=1 member terminal:", classify_terminal(first))

# Sufficient arithmetic criteria on the two smallest weights.
big = HypersurfaceFamily((223, 9101, 46837, 112320, 168480), 336960)
print("tiger-free, KE:", tiger_ke_flags(big))
