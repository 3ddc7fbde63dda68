"""
Randomized oracle sweeps over small digraphs and graphs.

Each sweep draws random instances, runs a construction whenever its
hypothesis holds, and counts failures (rejected colorings, defects, bounds
below the exact chromatic number). Any failure makes the script exit 1.

Usage:
    python scripts/oracle_sweep.py                      # every sweep, 10000 instances each
    python scripts/oracle_sweep.py --sweep acyclic --instances 10000 --seed 7
"""

import argparse
import itertools
import logging
import os
import random
import sys
import time
from datetime import datetime

import networkx as nx

# Add project root to path so imports work
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..'))

from bounds import registry
from data_sources import fixtures
from engine.acyclic_coloring import acyclic_color
from engine.clique_cycle import cycle_through_clique
from engine.cycles import hypothesis_holds, iter_cycles, undirected_hypothesis_holds
from engine.digraph import induced_subdigraph, strong_components, strongly_connected
from engine.errors import ColoringLabError
from engine.models import Digraph, UndirectedGraph
from engine.oracle import exact_acyclic_chromatic, exact_chromatic
from engine.proper_coloring import color_mod1

logger = logging.getLogger('oracle_sweep')


# ============================================
# GENERATORS
# ============================================

def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    g = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32), directed=True)
    return Digraph.from_arcs(n, g.edges())


def random_strong_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    """Random arcs plus, when needed, a random spanning cycle."""
    d = random_digraph(rng, n, p)
    if strongly_connected(d):
        return d
    order = list(range(n))
    rng.shuffle(order)
    cycle = {(order[i], order[(i + 1) % n]) for i in range(n)}
    return Digraph(n, d.arcs | frozenset(cycle))


def random_graph(rng: random.Random, n: int, p: float) -> UndirectedGraph:
    g = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32))
    return UndirectedGraph.from_edges(n, g.edges())


def planted_clique_digraph(rng: random.Random, n: int, size: int, p: float):
    d = random_strong_digraph(rng, n, p)
    members = sorted(rng.sample(range(n), size))
    arcs = set(d.arcs)
    for u, v in itertools.combinations(members, 2):
        if not d.adjacent(u, v):
            arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, frozenset(arcs)), members


def brute_force_cycle_count(d: Digraph) -> int:
    count = 0
    for length in range(2, d.n + 1):
        for perm in itertools.permutations(range(d.n), length):
            if perm[0] != min(perm):
                continue
            if all(d.has_arc(perm[i], perm[(i + 1) % length]) for i in range(length)):
                count += 1
    return count


# ============================================
# SWEEPS
# ============================================

class Tally:
    def __init__(self, name: str):
        self.name = name
        self.instances = 0
        self.applicable = 0
        self.failures = []

    def fail(self, detail: str):
        self.failures.append(detail)
        logger.error("[%s] %s", self.name, detail)

    def line(self) -> str:
        status = 'OK' if not self.failures else f'{len(self.failures)} FAILURES'
        return f"  {self.name:<14} instances={self.instances:<7} applicable={self.applicable:<7} {status}"


def sweep_proper(rng, instances, tally):
    for _ in range(instances):
        n = rng.randint(2, 6)
        d = random_strong_digraph(rng, n, rng.uniform(0.1, 0.6))
        for k in (2, 3, 4):
            tally.instances += 1
            if not hypothesis_holds(d, k, 1).holds:
                continue
            tally.applicable += 1
            try:
                run = color_mod1(d, k, check_hypothesis=False)
                if run.coloring.color_count > k:
                    tally.fail(f"k={k} used {run.coloring.color_count} colors on {d.sorted_arcs()}")
            except ColoringLabError as e:
                tally.fail(f"k={k} arcs={d.sorted_arcs()}: {e}")


def sweep_acyclic(rng, instances, tally):
    for _ in range(instances):
        n = rng.randint(1, 5)
        d = random_digraph(rng, n, rng.uniform(0.1, 0.8))
        for k in (2, 3, 4):
            for r in range(k):
                tally.instances += 1
                if not hypothesis_holds(d, k, r).holds:
                    continue
                tally.applicable += 1
                try:
                    run = acyclic_color(d, k, r, check_hypothesis=False)
                    if run.coloring.color_count > k:
                        tally.fail(f"k={k} r={r} used {run.coloring.color_count} colors")
                except ColoringLabError as e:
                    tally.fail(f"k={k} r={r} arcs={d.sorted_arcs()}: {e}")


def sweep_invariants(rng, instances, tally):
    """Constructions with every-step property checks on fixtures and random strong digraphs."""
    cases = [(fixtures.bidirected_complete(n), n, 1) for n in range(2, 6)]
    cases += [(fixtures.directed_cycle(n), k, r) for n in range(2, 8) for k in (2, 3, 4)
              for r in range(k) if n % k != r]
    cases += [(fixtures.odd_wheel_counterexample(2), 4, 1), (fixtures.strong_tournament(5), 5, 1)]
    while len(cases) < max(100, instances // 50):
        n = rng.randint(2, 6)
        k = rng.choice((2, 3, 4))
        cases.append((random_strong_digraph(rng, n, rng.uniform(0.1, 0.5)), k, rng.randrange(k)))
    for d, k, r in cases:
        tally.instances += 1
        try:
            if r == 1 % k and hypothesis_holds(d, k, 1).holds:
                tally.applicable += 1
                run = color_mod1(d, k, check_hypothesis=False, check_invariants=True)
                if not run.seed.successor_empty or not all(s.successor_empty for s in run.steps):
                    tally.fail(f"k={k} proper run skipped a nonempty successor class on {d.sorted_arcs()}")
            if hypothesis_holds(d, k, r).holds:
                tally.applicable += 1
                run = acyclic_color(d, k, r, check_hypothesis=False, check_invariants=True)
                seeds_ok = all(c.seed is None or c.seed.successor_empty for c in run.components)
                steps_ok = all(s.successor_empty and s.cyclic_successor_empty is not False
                               for s in run.steps)
                if not seeds_ok or not steps_ok:
                    tally.fail(f"k={k} r={r} acyclic run skipped a nonempty successor class on {d.sorted_arcs()}")
        except ColoringLabError as e:
            tally.fail(f"k={k} r={r} arcs={d.sorted_arcs()}: {e}")


def sweep_bounds(rng, instances, tally):
    undirected = registry.all_bounds('undirected')
    for _ in range(instances):
        g = random_graph(rng, rng.randint(1, 9), rng.uniform(0.1, 0.7))
        chi = exact_chromatic(g)
        for bound in undirected:
            k = None
            if bound.needs_k:
                k = rng.randint(2, 6)
                if not undirected_hypothesis_holds(g, k, 1).holds:
                    continue
            tally.instances += 1
            tally.applicable += 1
            try:
                report = bound.compute(g, k)
                if report.bound < chi:
                    tally.fail(f"{bound.theorem_id} bound {report.bound} < chi {chi} on {g.sorted_edges()}")
                if report.coloring.color_count > report.bound:
                    tally.fail(f"{bound.theorem_id} witness uses {report.coloring.color_count} colors")
                if report.bound == chi:
                    logger.debug("%s tight at %d on %s", bound.theorem_id, chi, g.sorted_edges())
            except ColoringLabError as e:
                tally.fail(f"{bound.theorem_id} on {g.sorted_edges()}: {e}")


def sweep_clique_cycle(rng, instances, tally):
    for _ in range(instances):
        n = rng.randint(2, 10)
        size = rng.randint(2, min(5, n))
        d, members = planted_clique_digraph(rng, n, size, rng.uniform(0.05, 0.4))
        tally.instances += 1
        tally.applicable += 1
        try:
            cert = cycle_through_clique(d, members)
            if not set(members) <= set(cert.cycle.vertices):
                tally.fail(f"cycle {cert.cycle.vertices} misses part of {members}")
            sub = induced_subdigraph(d, members).digraph
            if not strongly_connected(sub) and cert.cycle.length < len(members) + 1:
                tally.fail(f"cycle {cert.cycle.vertices} too short for non-strong D[U]")
        except ColoringLabError as e:
            tally.fail(f"U={members} arcs={d.sorted_arcs()}: {e}")


def sweep_oracles(rng, instances, tally):
    for _ in range(instances):
        d = random_digraph(rng, rng.randint(1, 5), rng.uniform(0.1, 0.8))
        tally.instances += 1
        tally.applicable += 1
        johnson = sum(1 for _ in iter_cycles(d))
        brute = brute_force_cycle_count(d)
        if johnson != brute:
            tally.fail(f"cycle count {johnson} != {brute} on {d.sorted_arcs()}")

        d = random_digraph(rng, rng.randint(1, 7), rng.uniform(0.1, 0.6))
        parts = [exact_acyclic_chromatic(induced_subdigraph(d, c).digraph) for c in strong_components(d)]
        if exact_acyclic_chromatic(d) != max(parts, default=0):
            tally.fail(f"acyclic chromatic number is not the max over strong components on {d.sorted_arcs()}")


SWEEPS = {
    'proper': sweep_proper,
    'acyclic': sweep_acyclic,
    'invariants': sweep_invariants,
    'bounds': sweep_bounds,
    'clique-cycle': sweep_clique_cycle,
    'oracles': sweep_oracles,
}


# ============================================
# MAIN
# ============================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Randomized oracle sweeps')
    parser.add_argument('--sweep', choices=['all'] + list(SWEEPS), default='all')
    parser.add_argument('--instances', type=int, default=10000, help='Random instances per sweep')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--log-level', default='WARNING')
    return parser


def main():
    args = build_parser().parse_args()

    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    print("=" * 60)
    print("DIGRAPH COLORING LAB - ORACLE SWEEP")
    print(f"Date: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    print(f"Seed: {args.seed}  Instances per sweep: {args.instances}")
    print("=" * 60)

    names = list(SWEEPS) if args.sweep == 'all' else [args.sweep]
    tallies = []
    for name in names:
        rng = random.Random(f"{args.seed}:{name}")
        tally = Tally(name)
        started = time.perf_counter()
        print(f"\nRunning {name}...")
        SWEEPS[name](rng, args.instances, tally)
        print(f"{tally.line()}  ({time.perf_counter() - started:.1f}s)")
        tallies.append(tally)

    failures = sum(len(t.failures) for t in tallies)
    print("\nSummary:")
    for t in tallies:
        print(t.line())
    print(f"\nDone. {failures} failures.")
    sys.exit(1 if failures else 0)


if __name__ == '__main__':
    main()
