"""Decomposing graph cobordisms and evaluating them on an algebra.

A graph is cut into layers of generators, each layer is evaluated with the
algebra's structure maps, and the result is corrected by the sign comparing
the graph's orientation with the orientation of the decomposition.
"""

from frobgraph.algebras import sphere
from frobgraph.catalog import builtin_catalogue
from frobgraph.frobenius import builtin_Rcd
from frobgraph.orient import canonical_orientation, orbit_class
from frobgraph.tqft import decompose, evaluate_oriented

cat = builtin_catalogue()
f = sphere(2)

for name in ("handle", "torus", "figure_eight"):
    g = cat[name]
    print(f"{name}:")
    for seed in (0, 1, 2):
        print(f"  seed {seed}: {decompose(g, seed).expression()}")
    ev = evaluate_oriented(g, canonical_orientation(g, f.c, f.d), f)
    print(f"  value on H*(S^2): sign {ev.sign:+d}, map {ev.map}")

# odd total shift: loops become two-torsion and evaluate to zero
r = builtin_Rcd(0, 1)
g = cat["handle"]
print("\nhandle at (0,1):", orbit_class(g, 0, 1).kind)
ev = evaluate_oriented(g, canonical_orientation(g, 0, 1), r)
print("  torsion:", ev.torsion, " zero map:", ev.map.is_zero())
