"""Structural recognizers and bound reports against the exact solver.

Run with:  python3 demos/04_characterizations_and_bounds.py
"""

from eclab import ec_bounds, edge_coalition_number
from eclab.families import phi_recognizer, theta_recognizer
from eclab.graphs import Graph
from eclab.oracle import CorpusSpec, enumerate_corpus

print("Trees whose coalition number reaches the size (n <= 8):")
agree = total = 0
for t in enumerate_corpus(CorpusSpec(8, ("trees",))):
    if t.m < 1:
        continue
    total += 1
    predicted = phi_recognizer(t)
    actual = edge_coalition_number(t).ec == t.m
    agree += predicted == actual
print(f"  recognizer matches the solver on {agree}/{total} trees")

print("Unicyclic graphs whose coalition number reaches the size (n <= 7):")
agree = total = 0
for g in enumerate_corpus(CorpusSpec(7, ("unicyclic",))):
    total += 1
    agree += theta_recognizer(g) == (edge_coalition_number(g).ec == g.m)
print(f"  recognizer matches the solver on {agree}/{total} unicyclic graphs")
print()


def show_bounds(name, g):
    value = edge_coalition_number(g).ec
    print(f"{name}: EC = {value}")
    for e in ec_bounds(g).entries:
        status = "applies" if e.applicable else "n/a    "
        holds = ""
        if e.applicable:
            ok = e.value <= value if e.kind == "lower" else value <= e.value
            holds = "" if ok else "  <-- VIOLATED"
        print(f"  {e.source:30s} {e.kind:5s} {e.value:3d}  {status}  {e.reason}{holds}")
    print()


show_bounds("C7", Graph(7, [(i, (i + 1) % 7) for i in range(7)]))
show_bounds("P3", Graph(3, [(0, 1), (1, 2)]))

# The spider with three legs of length two is a cautionary example: it
# meets the stated applicability condition of the 2*gamma'-1 lower bound
# (no isolated or full edges) yet its coalition number falls below it.
show_bounds("3-leg spider", Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]))
