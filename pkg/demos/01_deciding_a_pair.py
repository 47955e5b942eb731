# coding: utf-8

# # Deciding discreteness of an RP group
#
# A pair of Moebius maps (f, g) is described up to conjugacy by three numbers:
# beta = tr^2 f - 4, beta' = tr^2 g - 4 and gamma = tr[f, g] - 2. When all
# three are real we call <f, g> an RP group. Here we walk through a few such
# triples and ask the library whether the group is discrete.

# In[1]:

import math

from kleinian_rp import ParamTriple, classify_pair, construct_generators, decide, params_of

s5 = math.sqrt(5)


# ## From parameters to matrices
#
# `construct_generators` returns a normalized pair realizing a triple. f rotates
# through 2pi/3 here, and g is hyperbolic.

# In[2]:

t = ParamTriple(-3.0, s5, (s5 + 1) / 2)
f, g = construct_generators(t)
print("f =", f)
print("g =", g)
print("round trip:", params_of(f, g))


# ## The truly-spatial gate
#
# Only groups without an invariant plane are handled directly. The others get
# a pointer to where their discreteness is settled.

# In[3]:

for triple in [t, ParamTriple(-3, 1, 0), ParamTriple(-1, 1, 0.5), ParamTriple(-4, 2, 0.5)]:
    c = classify_pair(triple)
    print(tuple(round(x, 4) for x in triple), "->", c.kind.value, "|", c.reason)


# ## A discrete group
#
# The triple above sits on a sporadic row of the parameter table. The
# verdict also carries the independent check built from witness elements.

# In[4]:

v = decide(t)
print(v.status.value, [m.row for m in v.matched_rows], "clause", v.theorem_a_clause, "agreement", v.agreement)


# ## A nearby group that is not discrete
#
# Moving gamma a little keeps the group truly spatial but takes it off every
# row, and the witnesses no longer satisfy any discreteness clause.

# In[5]:

v = decide(ParamTriple(-3.0, s5, (s5 + 1) / 2 + 0.01))
print(v.status.value, v.matched_rows, v.theorem_a_clause)


# ## Conjugating the matrices changes nothing
#
# Passing matrices instead of numbers gives the same verdict, whatever frame the
# generators are written in.

# In[6]:

import numpy as np

from kleinian_rp import MoebiusMap

rng = np.random.default_rng(0)
a, b, c = rng.normal(size=3) + 1j * rng.normal(size=3)
W = MoebiusMap(a, b, c, (1 + b * c) / a)
print(decide((f.conjugate_by(W), g.conjugate_by(W))).status.value)
