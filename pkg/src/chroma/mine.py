"""Counterexample miner: heuristic vs. exact chromatic number on seeded random graphs.

Instance ``i`` of cell ``(n, p)`` is ``Random(n, p, seed_i)`` with
``seed_i = derive_seed(master_seed, n, p, i)`` (BLAKE2b of
``"master:n:repr(p):i"``, see :func:`chroma.rng.derive_seed`), so any
instance can be regenerated from the summary alone.

Per instance the miner runs the contraction heuristic under every tie
policy and the exact oracle, then persists an artifact pair
``<stem>.col`` + ``<stem>.json`` when

* some policy's clique order differs from the exact value (tag ``disagreement``), or
* the policies disagree among themselves (tag ``uniqueness``).

A clique order *below* the exact value is impossible for a correct build and
aborts the run with :class:`SoundnessViolation`.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Random
from .fileio import write_dimacs
from .oracle import Budget, BudgetExhausted, exact_chromatic_number
from .rng import derive_seed
from .solver import LEXMAX, LEXMIN, TiePolicy, run_operation1

log = logging.getLogger(__name__)

SUMMARY_VERSION = 1


class SoundnessViolation(RuntimeError):
    pass


def default_policies(seed: int) -> tuple[TiePolicy, ...]:
    return (LEXMIN, LEXMAX, TiePolicy.seeded(seed))


@dataclass(frozen=True)
class MineConfig:
    n_min: int
    n_max: int
    p_list: tuple[float, ...]
    count: int
    seed: int = 0
    policies: tuple[TiePolicy, ...] = ()
    out_dir: Path | None = None
    budget: Budget = Budget()

    def __post_init__(self):
        if not 3 <= self.n_min <= self.n_max:
            raise ValueError(f"need 3 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.count < 1:
            raise ValueError(f"count must be at least 1, got {self.count}")
        if not self.p_list:
            raise ValueError("p_list is empty")
        for p in self.p_list:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"edge probability {p} outside [0, 1]")
        if not self.policies:
            object.__setattr__(self, "policies", default_policies(self.seed))

    def cells(self) -> list[tuple[int, float]]:
        return [(n, p) for n in range(self.n_min, self.n_max + 1) for p in self.p_list]

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "p_list": list(self.p_list),
            "count": self.count,
            "seed": self.seed,
            "policies": [str(p) for p in self.policies],
            "max_nodes": self.budget.max_nodes,
        }


@dataclass(frozen=True)
class InstanceResult:
    n: int
    p: float
    index: int
    seed: int
    clique_orders: dict[str, int]
    exact_chi: int | None

    @property
    def family(self) -> Random:
        return Random(self.n, self.p, self.seed)

    @property
    def disagreeing(self) -> list[str]:
        if self.exact_chi is None:
            return []
        return [pol for pol, m in self.clique_orders.items() if m != self.exact_chi]

    @property
    def policy_variance(self) -> bool:
        return len(set(self.clique_orders.values())) > 1

    def tags(self) -> list[str]:
        tags = []
        if self.disagreeing:
            tags.append("disagreement")
        if self.policy_variance:
            tags.append("uniqueness")
        return tags

    def stem(self) -> str:
        return f"n{self.n}-p{self.p!r}-i{self.index}"

    def metadata(self) -> dict:
        return {
            "tags": self.tags(),
            "family": str(self.family),
            "seed": self.seed,
            "n": self.n,
            "p": self.p,
            "index": self.index,
            "exact_chi": self.exact_chi,
            "clique_orders": self.clique_orders,
            "disagreeing_policies": self.disagreeing,
        }


def run_instance(n: int, p: float, index: int, master_seed: int,
                 policies: tuple[TiePolicy, ...], budget: Budget) -> InstanceResult:
    seed = derive_seed(master_seed, n, p, index)
    g = Random(n, p, seed).generate()
    orders = {str(pol): run_operation1(g, pol).clique_order for pol in policies}
    try:
        chi = exact_chromatic_number(g, budget)
    except BudgetExhausted:
        chi = None
    return InstanceResult(n, p, index, seed, orders, chi)


def _run_task(args) -> InstanceResult:
    return run_instance(*args)


@dataclass
class CellSummary:
    n: int
    p: float
    instances: int = 0
    exhausted: int = 0
    agreements: dict[str, int] = field(default_factory=dict)
    disagreement_instances: int = 0
    variance_instances: int = 0

    def to_dict(self) -> dict:
        resolved = self.instances - self.exhausted
        return {
            "n": self.n,
            "p": self.p,
            "instances": self.instances,
            "resolved": resolved,
            "exhausted": self.exhausted,
            "agreement_rate": {
                pol: (hits / resolved if resolved else None) for pol, hits in self.agreements.items()
            },
            "disagreement_instances": self.disagreement_instances,
            "variance_instances": self.variance_instances,
        }


def _persist(result: InstanceResult, out_dir: Path, graph_text: str) -> list[str]:
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = result.stem()
    (out_dir / f"{stem}.col").write_text(graph_text)
    (out_dir / f"{stem}.json").write_text(json.dumps(result.metadata(), indent=2) + "\n")
    return [f"{stem}.col", f"{stem}.json"]


def mine(cfg: MineConfig, workers: int = 1) -> dict:
    """Run the full sweep and return the summary dict.

    Results are consumed in instance order whatever ``workers`` is, so the
    summary and artifacts match a sequential run.  Everything except
    ``wall_times_ms`` is deterministic in ``cfg``.
    """
    started = time.perf_counter()
    tasks = [
        (n, p, i, cfg.seed, cfg.policies, cfg.budget)
        for n, p in cfg.cells()
        for i in range(cfg.count)
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=32))
    else:
        results = map(_run_task, tasks)

    cells = {(n, p): CellSummary(n, p, agreements={str(pol): 0 for pol in cfg.policies})
             for n, p in cfg.cells()}
    artifacts: list[str] = []
    counterexamples = 0
    for res in results:
        cell = cells[(res.n, res.p)]
        cell.instances += 1
        if res.exact_chi is None:
            cell.exhausted += 1
            log.info("oracle exhausted on %s", res.family)
        else:
            low = {pol: m for pol, m in res.clique_orders.items() if m < res.exact_chi}
            if low:
                raise SoundnessViolation(
                    f"{res.family}: clique order {low} below exact chromatic number {res.exact_chi}"
                )
            for pol, m in res.clique_orders.items():
                cell.agreements[pol] += m == res.exact_chi
        if res.disagreeing:
            cell.disagreement_instances += 1
        if res.policy_variance:
            cell.variance_instances += 1
        if res.tags():
            counterexamples += 1
            if cfg.out_dir is not None:
                artifacts += _persist(res, Path(cfg.out_dir), write_dimacs(res.family.generate()))

    cell_dicts = [c.to_dict() for c in cells.values()]
    total = sum(c.instances for c in cells.values())
    exhausted = sum(c.exhausted for c in cells.values())
    resolved = total - exhausted
    overall = {
        str(pol): (sum(c.agreements[str(pol)] for c in cells.values()) / resolved if resolved else None)
        for pol in cfg.policies
    }
    return {
        "summary_version": SUMMARY_VERSION,
        "config": cfg.to_dict(),
        "cells": len(cell_dicts),
        "instances": total,
        "exhausted": exhausted,
        "soundness_violations": 0,
        "agreement_rate": overall,
        "disagreement_instances": sum(c.disagreement_instances for c in cells.values()),
        "variance_instances": sum(c.variance_instances for c in cells.values()),
        "counterexamples": counterexamples,
        "artifacts": artifacts,
        "per_cell": cell_dicts,
        "wall_times_ms": {"total": round((time.perf_counter() - started) * 1000)},
    }
