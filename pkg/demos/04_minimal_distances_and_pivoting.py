# coding: utf-8

# # Minimal distances between elliptic axes, and pivoting lines
#
# Two small geometric facts sit under the discreteness proofs. In a discrete
# group the axes of elliptics of orders p and q cannot come closer than a
# known bound rho_min(p, q). And in H^2, rotating two disjoint lines towards
# a common transversal by the same factor keeps them disjoint.

# In[1]:

import math

import numpy as np

from kleinian_rp import min_distance
from kleinian_rp.geometry import (
    MIN_DISTANCE_TABLE,
    DisjointLinesQuery,
    h2_lines_relation,
    lines_disjoint_after_pivot,
    min_distance_discrepancies,
    pivot_bound,
    transversal_lines,
)

print("cosh rho_min(p, q), p, q = 2..9")
for p in range(2, 10):
    print(p, " ".join(f"{min_distance(p, q):6.3f}" for q in range(2, 10)))


# The stored three-decimal values agree with the closed form wherever both
# exist, except for (3, 7), where the stored value looks truncated:

# In[2]:

print(min_distance_discrepancies())
print(len(MIN_DISTANCE_TABLE), "stored entries")


# ## Pivoting
#
# The bound on cosh PQ at which the two lines become parallel grows with the
# pivot factor k, so scaling both angles down never makes disjoint lines meet.

# In[3]:

psi, chi = 0.3, 0.6
ks = np.linspace(0.05, 1, 8)
print([round(pivot_bound(k, psi, chi), 3) for k in ks])

cosh_pq = 1.2 * pivot_bound(1, psi, chi)
print(lines_disjoint_after_pivot(DisjointLinesQuery(cosh_pq, psi, chi, 0.5)))
print(h2_lines_relation(*transversal_lines(cosh_pq, 0.5 * psi, 0.5 * chi)))
