#!/usr/bin/env python3
# Weight systems and the semigroup kernel on two census celebrities.
from wfano import canonicalize, degree, semigroup_member, NotWellFormed

# The sporadic family with the largest smallest weight.  Its anticanonical
# degree is 37584 and all five defining monomials are binomials.
ws = canonicalize((18792, 407, 547, 5311, 12528))
print("weights:", ws.weights)
d = ws.total - 1
print("anticanonical degree:", d)

# x_4^2 has degree 2*18792 = d: the largest vertex is missed by a square.
print("x_4^2 works:", semigroup_member((18792,), d))
print("deg x_0^91 x_1 =", degree((91, 1, 0, 0, 0), ws.weights))

# Well-formedness is a hard requirement: four even weights share a factor.
try:
    canonicalize((1, 2, 2, 2, 2))
except NotWellFormed as err:
    print("rejected:", err)

# Membership in numerical semigroups answers "does a monomial of this
# degree exist in these variables" -- the question every other module asks.
print("7 in <2,3>:", semigroup_member((2, 3), 7))
print("9 in <4,6>:", semigroup_member((4, 6), 9))
