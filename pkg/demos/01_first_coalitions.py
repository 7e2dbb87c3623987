"""A first walk through edge coalitions on the six-vertex path.

Run with:  python3 demos/01_first_coalitions.py
"""

import json

from eclab import (
    certificate_json,
    edge_coalition_number,
    forms_edge_coalition,
    is_ec_partition,
    is_edge_dominating_set,
    singleton_partition,
)
from eclab.families import path_graph

p6 = path_graph(6)
print(f"P6 has {p6.n} vertices and edges {p6.edges}")
print()

# A single edge never dominates this path, but some pairs do.
print("does {0, 4} dominate? ", is_edge_dominating_set(p6, {0, 4}))
print("does {0, 1, 4} dominate?", is_edge_dominating_set(p6, {0, 1, 4}))
print()

# Two disjoint non-dominating sets whose union dominates form a coalition.
print("{0,4} + {1} coalition:", forms_edge_coalition(p6, {0, 4}, {1}))
print("{1} + {2} coalition:  ", forms_edge_coalition(p6, {1}, {2}))
print()

# Pool the two end edges and keep the middle edges as singletons: every
# block finds a partner, so this is a valid four-block ec-partition.
blocks = [{0, 4}, {1}, {2}, {3}]
cert = is_ec_partition(p6, blocks)
print(f"partition {blocks} -> valid, order {cert.order}")

# The all-singleton partition fails: the central edge has no partner.
outcome = is_ec_partition(p6, singleton_partition(p6))
print(f"singleton partition -> {outcome.message()}")
print()

# The exact solver proves that four blocks is the maximum.
result = edge_coalition_number(p6)
print(f"EC(P6) = {result.ec} (proof: {result.proof})")
print(json.dumps(certificate_json(result), indent=2))
