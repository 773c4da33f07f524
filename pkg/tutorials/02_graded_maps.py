"""
The invariant as a graded map
=============================

With more endpoints the invariant is a family of matrices, one for each
exterior degree of the homology of the punctured disk.  Everything is only
defined up to one global unit, so results come back normalized.
"""

from alextangle import graded_map_compose, graded_map_eq, identity_map, rho_word
from alextangle.parse import parse_tangle_word
from alextangle.plat import plat_from_word, rho_plat


def show(title, rho):
    print(title, f"(rank {rho.source_rank} -> {rho.target_rank}, shift {rho.shift})")
    for i, block in enumerate(rho.blocks):
        rows = ["[" + ", ".join(str(x) for x in block.row(r)) + "]" for r in range(block.rows)]
        print(f"  degree {i}: " + (" ".join(rows) if rows else "(empty)"))


# One crossing between strands of opposite sign.  Degree 0 is det of the
# Burau matrix, the top degree is always [1].
show("s1 on +-+", rho_word(parse_tangle_word("bottom:+-+ ; s1")))

# A cup raises the rank by two and the degree by one.
cup = rho_word(parse_tangle_word("bottom:+ ; cup@1(+-)"))
show("cup on +", cup)

# Cup then cap on the neighbouring pair is a zig-zag, isotopic to a straight
# strand, so the composite is the identity up to a unit.
# Two endpoints give rank 1, since one class is lost to the boundary.
snake = rho_word(parse_tangle_word("bottom:+- ; cup@1(-+) ; cap@0(+-)"))
print("zig-zag is identity:", graded_map_eq(snake, identity_map(1)))

# The invariant is functorial: computing a word in two halves and composing
# matches computing it in one go.
lower = parse_tangle_word("bottom:+- ; cup@1(+-) ; s2 ; s1^-1")
upper = parse_tangle_word("bottom:-++- ; s3 ; cap@1(+-)")
whole = lower.then(upper)
print("functorial:", graded_map_eq(rho_word(whole), graded_map_compose(rho_word(lower), rho_word(upper))))

# A second, independent algorithm: put the tangle in plat position and read
# the invariant off a single Mayer-Vietoris presentation.
print("plat engine agrees:", graded_map_eq(rho_plat(plat_from_word(whole)), rho_word(whole)))
