"""
Plats, Hilden moves and stabilization
=====================================

A plat description is a braid with cups along the bottom right and caps along
the top right.  Different plat descriptions of the same tangle are related
by Hilden moves at either end and by stabilization; the invariant does not
notice any of them.
"""

import random

from alextangle import graded_map_compose, graded_map_eq
from alextangle.laurent import render
from alextangle.parse import parse_plat, render_plat
from alextangle.plat import build_presentation, glue, hilden_bottom, hilden_generators, rho_plat, stabilize
from alextangle.sampling import random_plat

pd = parse_plat("signs=+-+- ; braid=s2 s1^-1 s3 s2 ; bottom=2 ; top=2")
mv = build_presentation(pd)
print(render_plat(pd))
print("generators:", mv.presentation.generator_count, "relators:", mv.presentation.relator_count,
      "deficiency:", mv.deficiency)
rho = rho_plat(pd)
for i, block in enumerate(rho.blocks):
    print(f"degree {i}:", [[render(x) for x in block.row(r)] for r in range(block.rows)])

# Braids that carry the cups to themselves can be slid on or off below the
# plat without changing the tangle.
for h in hilden_generators(pd.m_minus, pd.n_minus):
    moved = hilden_bottom(pd, h)
    print(f"  bottom move {str(h):<14} unchanged: {graded_map_eq(rho, rho_plat(moved))}")

once = stabilize(pd)
print("stabilized:", render_plat(once), " unchanged:", graded_map_eq(rho, rho_plat(once)))

# Gluing two plats stacks the tangles; the glued plat's invariant is the
# composite of the two.
rng = random.Random(7)
lower = random_plat(rng, 5, 6)
upper = random_plat(rng, 5, 6, bottom=lower.top)
stacked = glue(lower, upper)
print("glued", lower.strands, "+", upper.strands, "->", stacked.strands, "strands;",
      "composite matches:", graded_map_eq(rho_plat(stacked), graded_map_compose(rho_plat(lower), rho_plat(upper))))
