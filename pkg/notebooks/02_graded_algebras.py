"""Graded Frobenius algebras: the line examples, suspension and triviality.

The two-dimensional algebra R_{c,d} satisfies the signed relations for
every bidegree, suspension moves it along the anti-diagonal, and in odd
total shift no nonzero algebra satisfies the sign-free relations.
"""

from frobgraph.algebras import iterated_desuspension, same_entries, sphere, thom_to_poincare, transport_discrepancy
from frobgraph.frobenius import builtin_Rcd, check_relations, check_snake, check_unsigned, suspend_algebra, triviality_probe

f = builtin_Rcd(1, 1)
print("R_{1,1}:", f.A)
print("  signed relations:", "pass" if check_relations(f).ok else "fail")
print("  snake identities:", "pass" if check_snake(f).ok else "fail")

g = f
for _ in range(3):
    g = suspend_algebra(g)
    print(f"  suspended to ({g.c},{g.d}):", "pass" if check_relations(g).ok else "fail")

h = builtin_Rcd(0, 1)
print("\nR_{0,1} signed:", check_relations(h).ok, " unsigned:", check_unsigned(h).ok)
print("unsigned failures:", ", ".join(check_unsigned(h).failures))
print(triviality_probe(0, 1).argument)

# shifting the Thom coproduct on sphere cohomology
print("\nThom to Poincare, displayed formula against the iterated desuspension:")
for d in range(1, 6):
    s = sphere(d)
    agree = same_entries(thom_to_poincare(s.nu, d), iterated_desuspension(s.nu, s.A, d))
    print(f"  d={d}: agree={agree}  global ratio={transport_discrepancy(d):+d}")
