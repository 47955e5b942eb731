# coding: utf-8

# # The 3-5-3 orbifold group has real parameters
#
# The smallest known hyperbolic orbifold comes from a Coxeter tetrahedron with
# dihedral angles pi/3, pi/5, pi/3. Its orientation-preserving group, extended
# by one half-turn e, is generated by two elements f, g whose parameters are
# all real. We check numerically that e is a word in f and g.

# In[1]:

import math

from kleinian_rp import construct_generators, evaluate_word, verify_353
from kleinian_rp.orbifold353 import E_WORD, parameters

t = parameters()
print(t)
print("expected:", ((math.sqrt(5) - 5) / 2, math.sqrt(5), (math.sqrt(5) - 1) / 2))


# In[2]:

f, g = construct_generators(t)
e = evaluate_word(E_WORD, {"f": f, "g": g})
print("tr e =", e.trace)


# ## Every check at once

# In[3]:

report = verify_353()
for name, ok in report.checks().items():
    print("ok  " if ok else "FAIL", name)
