# coding: utf-8

# # Witness elements and the parameter table
#
# When f is a primitive elliptic of odd order n, g is hyperbolic and their axes
# cross at an angle below pi/2, discreteness is read off a few explicit
# elements h1, ..., h4. Each is a square root of a word in f and g, and the
# branch is pinned down by a geometric side condition. Their conjugacy
# classes then decide the question.

# In[1]:

import math
from collections import Counter

from kleinian_rp import ParamTriple, build_witnesses, check_theorem_a, construct_generators, enumerate_row
from kleinian_rp.config import EnumCaps
from kleinian_rp.table import CORRECTIONS, get_row
from kleinian_rp.witnesses import relation_residuals


# ## Witnesses for one triple
#
# Take a member of the family on row 33: f of order 3, gamma = 2cos(2pi/7).

# In[2]:

gamma = 2 * math.cos(2 * math.pi / 7)
f, g = construct_generators(ParamTriple(-3.0, 2 * gamma, gamma))
W = build_witnesses(f, g)
for name, cls in W.classes.items():
    print(f"{name:14s} {cls.kind.value:12s} order {cls.order}")
print(W.skipped)


# The defining relations hold to rounding error:

# In[3]:

for rel, r in relation_residuals(f, g, W).items():
    print(f"{r:.1e}  {rel}")
print("clause:", check_theorem_a(f, g, W).clause)


# ## Walking a family
#
# Every row of the table is a family of triples. Enumerating a row under small
# caps and feeding each member to the witness test should always come back
# discrete.

# In[4]:

caps = EnumCaps(n=11, m=12, p=12, k=12)
print(get_row(25).describe())
clauses = Counter()
for inst in enumerate_row(25, caps):
    f, g = construct_generators(inst.triple)
    clauses[check_theorem_a(f, g).clause] += 1
print(clauses)


# ## Rows that had to be corrected
#
# Four rows of the printed table do not survive the witness test as printed.
# The corrected forms are the default. The printed ones stay available for
# comparison. Printed members that leave the truly-spatial region are dropped
# by the enumeration; the rest are counted by whether the witnesses accept them.


def accepted(instances):
    ok = 0
    for inst in instances:
        f, g = construct_generators(inst.triple)
        ok += check_theorem_a(f, g).discrete
    return ok


# In[5]:

for row, text in CORRECTIONS.items():
    printed = enumerate_row(row, caps, variant="printed")
    fixed = enumerate_row(row, caps)
    print(f"row {row}: printed {accepted(printed)}/{len(printed)} accepted, "
          f"corrected {accepted(fixed)}/{len(fixed)} accepted")
    print("    ", text)
