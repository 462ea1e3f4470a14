"""Orientation words and the signs of the generating relations.

Each generator (multi, unit, comulti, counit) carries a chosen orientation
of its determinant line.  Gluing two oriented graphs and collapsing the
glued edges produces a sign; this script prints the sign of every
generating relation for a few bidegrees and walks one collapse chain.
"""

from frobgraph.orient import (
    canonical_word,
    collapse_action,
    compose_words,
    generator_word,
    relation_signs,
    tensor_words,
)
from frobgraph.graph import identity_graph


def show(w):
    print(f"  {'+' if w.sign > 0 else '-'} edges={' '.join(w.edges)}  vertices={' '.join(w.vertices)}")


# the sign table on a small grid
print("relation signs (c, d): assoc, unit L/R, coassoc, counit L/R, frob, comm")
for c in range(-1, 3):
    for d in range(-1, 3):
        r = relation_signs(c, d)
        keys = ["associativity", "unit_left", "unit_right", "coassociativity",
                "counit_left", "counit_right", "frobenius_left", "commutativity"]
        print(f"  ({c:2d},{d:2d})", " ".join(f"{int(r[k]):+d}" for k in keys))

# one associativity composite, collapsed edge by edge
m = generator_word("multi", "in")
w = compose_words(m, tensor_words(m, canonical_word(identity_graph(1, "u"), "in")))
print("\nmulti glued into the first input of multi:")
show(w)
for e in ("e0'", "e1"):
    w = collapse_action(w, e)
    print(f"after collapsing {e}:")
    show(w)
