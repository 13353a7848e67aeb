# The exact side: chromatic number, maximum clique and optimal partitions.
#
# These are exponential searches with a node budget; they are meant for the
# small graphs used to check the heuristic, not for production coloring.

from chroma import (
    Budget,
    BudgetExhausted,
    Cycle,
    Mycielski,
    Random,
    enumerate_chromatic_partitions,
    exact_chromatic_number,
    max_clique,
    optimal_coloring,
    run_operation1,
)

# The Grötzsch graph (Mycielski construction applied to C5) has no triangles,
# yet needs 4 colors.  The clique bound alone would say 2.
grotzsch = Mycielski(Cycle(5), 1).generate()
print("vertices", grotzsch.num_vertices, "edges", grotzsch.num_edges)
print("largest clique", len(max_clique(grotzsch)))
print("chromatic number", exact_chromatic_number(grotzsch))
print("heuristic", run_operation1(grotzsch).clique_order)

# An optimal coloring, and every way to split a small graph into chi classes.
print(optimal_coloring(Cycle(5).generate()).classes())
enum = enumerate_chromatic_partitions(Cycle(6).generate())
print("C6 has", len(enum.partitions), "optimal partition(s):", [sorted(map(sorted, p)) for p in enum.partitions])

# Hard instances run out of budget instead of hanging.
try:
    exact_chromatic_number(Random(60, 0.5, 1).generate(), Budget(max_nodes=200))
except BudgetExhausted as exc:
    print("gave up:", exc)
