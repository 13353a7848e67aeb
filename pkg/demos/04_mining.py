# Where heuristic and exact answer differ.
#
# The miner runs the heuristic under several tie policies plus the exact
# oracle over seeded random graphs, and writes every disagreement to disk as
# a DIMACS file with a JSON sidecar that is enough to replay it.

import json
import tempfile
from pathlib import Path

from chroma import LEXMAX, LEXMIN, Random, TiePolicy, exact_chromatic_number, run_operation1
from chroma.mine import MineConfig, mine

# A six-vertex example: the default policy ends on K4, but chi is 3.
g = Random(6, 0.5, 107).generate()
print(g.edges())
print("chi =", exact_chromatic_number(g))
for policy in (LEXMIN, LEXMAX, TiePolicy.seeded(1)):
    res = run_operation1(g, policy)
    print(f"{str(policy):>9}: clique order {res.clique_order}, trace {[s.pair for s in res.trace]}")

with tempfile.TemporaryDirectory() as tmp:
    cfg = MineConfig(n_min=5, n_max=9, p_list=(0.3, 0.5, 0.7), count=100, seed=1, out_dir=Path(tmp))
    summary = mine(cfg)
    print(json.dumps({k: summary[k] for k in ("instances", "agreement_rate", "disagreement_instances",
                                                "variance_instances")}, indent=2))
    first = sorted(Path(tmp).glob("*.json"))[:1]
    for meta in first:
        data = json.loads(meta.read_text())
        print(meta.name, data)
        policy = (data["disagreeing_policies"] or list(data["clique_orders"]))[0]
        print("replay with: chroma compare", meta.with_suffix(".col").name, "--policy", policy)
