#!/usr/bin/env python3
# Calabi-Yau weight systems in low dimension, and the cone construction
# that settles general-type finiteness.
from wfano import HypersurfaceFamily, cy_search, cone_extend, is_quasi_smooth

# Dimension 2: the three elliptic-curve weight systems.
for w, d in cy_search(2, 12).records:
    print("elliptic:", w, "degree", d)

# Dimension 3: the 95 K3 families (stable once the cap clears 33).
k3 = cy_search(3, 50)
print("K3 count:", k3.count, " (largest:", k3.records[-1], ")")

# A general-type curve with dualizing sheaf O(2) becomes a Calabi-Yau
# threefold after appending two weight-1 coordinates: the defining
# polynomial gains two pure powers and stays quasi-smooth.
gt = HypersurfaceFamily((1, 1, 2), 6)   # degree = sum + 2
cy = cone_extend(gt, 2)
print("cone of (1,1,2)_6:", cy.weights, "degree", cy.d,
      "quasi-smooth:", is_quasi_smooth(cy).verdict)

# The classical quintic threefold as a cone over a plane quintic curve.
quintic = cone_extend(HypersurfaceFamily((1, 1, 1, 1), 5), 1)
print("cone of (1,1,1,1)_5:", quintic.weights, "degree", quintic.d)
