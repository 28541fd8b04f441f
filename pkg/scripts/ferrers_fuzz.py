#!/usr/bin/env python3
"""Fuzz the Ferrers hypergraph formulas against the greedy algorithm.

Each trial draws a random order ideal and checks the ideal and quotient
decompositions, the sum over projections, the pair-count identity, and the
alpha round trip.  Failing hypergraphs are written out as JSON.

    python scripts/ferrers_fuzz.py --trials 2000 --seed 7 --out failures/
"""

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from betti_forge.combinatorics import is_o_sequence
from betti_forge.decompose import check_integrality, greedy_decompose
from betti_forge.ferrers import (
    alpha_sequence,
    ferrers_from_o_sequence,
    ferrers_identity,
    ideal_betti,
    ideal_decomposition,
    pair_count_identity,
    quotient_betti,
    quotient_decomposition,
)
from betti_forge.formats import hypergraph_to_json
from betti_forge.sampling import random_ferrers


@dataclass
class FuzzConfig:
    trials: int = 500
    seed: int = 0
    dims: tuple = (2, 3, 4)
    max_coord: int = 6
    max_cells: int = 200
    out: Path | None = None


def failures(F):
    quotient = quotient_betti(F)
    if greedy_decompose(ideal_betti(F)) != ideal_decomposition(F):
        yield "ideal decomposition"
    closed = quotient_decomposition(F)
    if greedy_decompose(quotient) != closed:
        yield "quotient decomposition"
    if not check_integrality(closed):
        yield "integrality"
    if ferrers_identity(F) != F.d:
        yield "projection sum"
    projdim = max(i for i, _ in quotient)
    if any(l != r for l, r in (pair_count_identity(F, i) for i in range(1, projdim + 1))):
        yield "pair count"
    alpha = alpha_sequence(F)
    if not is_o_sequence(alpha) or alpha_sequence(ferrers_from_o_sequence(alpha, F.d)) != alpha:
        yield "alpha"


def run(cfg: FuzzConfig):
    rng = random.Random(cfg.seed)
    sizes, broken = Counter(), []
    for k in range(cfg.trials):
        d = cfg.dims[k % len(cfg.dims)]
        F = random_ferrers(rng, d, max_coord=cfg.max_coord, max_cells=cfg.max_cells)
        sizes[d] += len(F)
        bad = list(failures(F))
        if bad:
            broken.append((F, bad))
    return sizes, broken


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=FuzzConfig.trials)
    parser.add_argument("--seed", type=int, default=FuzzConfig.seed)
    parser.add_argument("--dims", type=int, nargs="+", default=list(FuzzConfig.dims))
    parser.add_argument("--max-coord", type=int, default=FuzzConfig.max_coord)
    parser.add_argument("--max-cells", type=int, default=FuzzConfig.max_cells)
    parser.add_argument("--out", type=Path)
    args = parser.parse_args()
    cfg = FuzzConfig(args.trials, args.seed, tuple(args.dims), args.max_coord, args.max_cells, args.out)

    start = time.perf_counter()
    sizes, broken = run(cfg)
    per_dim = cfg.trials // len(cfg.dims) or 1
    for d in cfg.dims:
        print(f"d={d}: mean {sizes[d] / per_dim:.1f} cells")
    print(f"{cfg.trials - len(broken)}/{cfg.trials} hypergraphs pass "
          f"({time.perf_counter() - start:.2f}s)")
    if broken and cfg.out:
        cfg.out.mkdir(parents=True, exist_ok=True)
        for n, (F, bad) in enumerate(broken):
            payload = {**hypergraph_to_json(F), "failed": bad}
            (cfg.out / f"failure_{n:03d}.json").write_text(json.dumps(payload))
    return 1 if broken else 0


if __name__ == "__main__":
    raise SystemExit(main())
