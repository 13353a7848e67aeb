# Condition 1 on the argmax pair.
#
# Take the pair (u0, v0) the heuristic would fuse first and delete it.  For an
# optimal partition of what is left, the condition asks: whenever a class
# contains no neighbor of u0, does it also contain no neighbor of v0?
# Optimal partitions are rarely unique, so the checker reports whether the
# condition holds for SOME optimal partition and whether it holds for ALL.

from chroma import Cycle, Random, check_condition1

report = check_condition1(Cycle(5).generate())
print(report.pair, "partitions checked:", report.partitions_checked)
print("exists:", report.holds_for_some_partition, "forall:", report.holds_for_all_partitions)
print("violating partition:", [sorted(c) for c in report.witness_partition])

# Sweep some random graphs and count how often each reading holds.
some = every = total = 0
for seed in range(300):
    g = Random(8, 0.5, seed).generate()
    if g.is_complete():
        continue
    rep = check_condition1(g)
    total += 1
    some += rep.holds_for_some_partition
    every += rep.holds_for_all_partitions
print(f"{total} graphs: exists-reading held {some}, forall-reading held {every}")
