# Walk through the contraction heuristic on a few small graphs.
#
# At every step the solver looks at all pairs of NON-adjacent vertices,
# picks one whose common neighborhood is largest, and fuses the two.  Once
# the graph is complete, the number of vertices left is the estimate.

from chroma import Cycle, Petersen, run_operation1, select_pair

# The 5-cycle: every non-adjacent pair shares exactly one neighbor, so the
# first pick is a five-way tie, broken toward the smallest pair (0, 2).
c5 = Cycle(5).generate()
print(select_pair(c5))

result = run_operation1(c5)
for step in result.trace:
    print("fuse", step.pair, "common neighbors:", step.common_size, "ties:", step.tie_count)
print("clique order:", result.clique_order)

# Each surviving vertex remembers which original vertices were merged into it.
# Those groups are independent sets, hence a proper coloring.
print(result.final_graph.provenance_map)
print(result.coloring.assignment)

# Contraction is a value operation: the original graph is untouched.
h = c5.contract(0, 2)
print(c5, "->", h, "merged vertex 0 now stands for", sorted(h.provenance(0)))

# Petersen graph: 10 vertices, 3-regular, triangle-free, chromatic number 3.
petersen = Petersen().generate()
res = run_operation1(petersen)
print("Petersen:", res.clique_order, "colors after", res.steps, "contractions")
