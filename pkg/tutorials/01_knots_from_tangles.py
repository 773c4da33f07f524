"""
Knot polynomials from (1,1)-tangles
===================================

Cut a knot open at one point and you get a tangle with one endpoint at the
bottom and one at the top.  Its invariant is a 1x1 matrix, and that entry is
the Alexander polynomial of the knot.
"""

from alextangle import eq_up_to_unit, parse_braid, rho_word
from alextangle.corpus import closed_braid_word
from alextangle.oracle import closed_braid_oracle
from alextangle.parse import parse_tangle_word, render_tangle_word

# The trefoil: a cup opens two new endpoints to the right of the strand,
# three crossings twist the strand around them, and a cap closes them off.
trefoil = parse_tangle_word("bottom:+ ; cup@1(+-) ; s1 ; s1 ; s1 ; cap@1(+-)")
rho = rho_word(trefoil)
print("trefoil:", rho.blocks[0][0, 0])

# The classical route: close the braid s1^3 and take det(I - Burau).
print("oracle: ", closed_braid_oracle(parse_braid("s1 s1 s1", 2)))

# Any closed braid becomes a (1,1)-tangle by cutting strand 0 and closing the
# others with nested cups and caps.
for name, text, n in [("figure-eight", "s1 s2^-1 s1 s2^-1", 3), ("5_2", "s1^3 s2 s1^-1 s2", 3)]:
    braid = parse_braid(text, n)
    word = closed_braid_word(braid)
    value = rho_word(word).blocks[0][0, 0]
    print(f"{name:>12}: {value}   agrees with oracle: {eq_up_to_unit(value, closed_braid_oracle(braid))}")
    print(" " * 14 + render_tangle_word(word))

# A split link has vanishing polynomial: the extra circle frees up a
# generator of the module that no relation touches.
split = closed_braid_word(parse_braid("", 2))
print("split link:", rho_word(split).blocks[0][0, 0])
