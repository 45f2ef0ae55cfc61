#!/usr/bin/env python3
# The quasi-smoothness conditions, from vertices to full subsets.
from wfano import HypersurfaceFamily, is_quasi_smooth, check_vertex
from wfano.qsmooth import check_codim2, target_set

# The general quintic threefold: everything is trivially fine.
quintic = HypersurfaceFamily((1, 1, 1, 1, 1), 4)
print("quintic quasi-smooth:", is_quasi_smooth(quintic).verdict)

# A failure at a single vertex: no monomial x_4^m x_j of degree 20 exists
# for the weight-7 coordinate.
bad = HypersurfaceFamily((2, 3, 4, 5, 7), 20)
rep = is_quasi_smooth(bad)
print("(2,3,4,5,7): verdict", rep.verdict, "first failing subset",
      rep.failing_subset)
print("vertex witness at weight 7:", check_vertex(bad, 4))

# A failure of the codimension-2 condition: the three weight-2 coordinates
# span a singular surface that any degree-7 member must contain.
stratum = HypersurfaceFamily((1, 1, 2, 2, 2), 7)
print("(1,1,2,2,2) pair (0,1) passes:", check_codim2(stratum, 0, 1))

# The subset condition in action: admissible targets for the index set of
# both weight-2 coordinates of the sextic in P(1,1,1,2,2).
sextic = HypersurfaceFamily((1, 1, 1, 2, 2), 6)
print("targets for the weight-2 pair:", target_set(sextic, [3, 4]))
print("sextic quasi-smooth:", is_quasi_smooth(sextic).verdict)

# One of the heaviest census members: five binomial equations, exact
# arithmetic keeps this instantaneous.
big = HypersurfaceFamily((253, 7807, 48101, 112320, 168480), 336960)
print("extreme member quasi-smooth:", is_quasi_smooth(big).verdict)
