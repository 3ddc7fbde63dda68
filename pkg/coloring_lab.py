"""
DIGRAPH COLORING LAB
====================

Colorings of digraphs and graphs without cycles of prescribed length residues.
Every coloring that leaves this tool has been re-checked by the independent
verifier; the report carries that verdict.

Usage:
    python coloring_lab.py census GRAPH --k 4
    python coloring_lab.py check GRAPH --k 2 --r 0
    python coloring_lab.py color1 GRAPH --k 3
    python coloring_lab.py acyclic GRAPH --k 3 --r 0
    python coloring_lab.py undirected GRAPH --k 4 --r 3
    python coloring_lab.py bound GRAPH --theorem odd-circ
    python coloring_lab.py clique-cycle GRAPH --set 0,2,5
    python coloring_lab.py verify GRAPH --coloring colors.txt [--acyclic]
    python coloring_lab.py stats GRAPH [--exact]
    python coloring_lab.py fixture counterexample --n 2 > d.txt

Exit codes: 0 ok, 1 hypothesis or verification failure, 2 bad input,
3 search cap exceeded, 4 internal defect.
"""

import argparse
import logging
import sys
import os

# Add project root to path so imports work
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from bounds import registry
from data_sources.fixtures import FIXTURES, build_fixture
from data_sources.graph_file import GraphFile, load_coloring, load_graph, serialize_graph
from engine.acyclic_coloring import acyclic_color
from engine.clique_cycle import cycle_through_clique
from engine.config import Config
from engine.cycles import (
    cycle_stats, even_cycle_lengths, hypothesis_holds, odd_cycle_lengths, residue_census,
    undirected_hypothesis_holds,
)
from engine.digraph import bidirect, underlying_graph
from engine.errors import (
    ColoringLabError, DefectError, HypothesisViolation, InputError, ResourceLimitExceeded,
    VerificationFailure,
)
from engine.models import Coloring, ColoringKind, HypothesisVerdict
from engine.oracle import clique_number, exact_acyclic_chromatic, exact_chromatic
from engine.proper_coloring import color_mod1
from engine.undirected import color_undirected
from reporting.run_report import RunReport, render_json, render_plain

logger = logging.getLogger('coloring_lab')

STATUS_EXIT = {
    'ok': 0,
    'hypothesis-violated': 1,
    'verification-failed': 1,
    'input-error': 2,
    'resource-limit': 3,
    'defect': 4,
}


def _require(graph_file: GraphFile, mode: str):
    if graph_file.mode != mode:
        raise InputError(f"This command needs a {mode} graph, got {graph_file.mode}")
    return graph_file.graph


# ============================================
# COMMANDS
# ============================================

def cmd_census(args, gf: GraphFile, report: RunReport):
    if gf.directed:
        census = residue_census(gf.graph, args.k, with_counts=True)
    else:
        census = residue_census(bidirect(gf.graph), args.k, with_counts=True, min_length=3)
    report.result = census.to_dict()


def cmd_check(args, gf: GraphFile, report: RunReport):
    if gf.directed:
        verdict = hypothesis_holds(gf.graph, args.k, args.r)
    else:
        verdict = undirected_hypothesis_holds(gf.graph, args.k, args.r)
    report.set_hypothesis(verdict)


def cmd_color1(args, gf: GraphFile, report: RunReport):
    d = _require(gf, 'directed')
    run = color_mod1(d, args.k, check_hypothesis=not args.skip_check)
    if run.hypothesis:
        report.set_hypothesis(run.hypothesis)
    report.set_coloring(run.coloring, max_colors=args.k)
    report.decomposition = run.summary()


def cmd_acyclic(args, gf: GraphFile, report: RunReport):
    d = _require(gf, 'directed')
    run = acyclic_color(d, args.k, args.r, check_hypothesis=not args.skip_check)
    if run.hypothesis:
        report.set_hypothesis(run.hypothesis)
    report.set_coloring(run.coloring, max_colors=args.k)
    decomposition = run.summary()
    decomposition['order'] = list(run.order)
    report.decomposition = decomposition


def cmd_undirected(args, gf: GraphFile, report: RunReport):
    g = _require(gf, 'undirected')
    bound = color_undirected(g, args.k, args.r, check_hypothesis=not args.skip_check)
    if not args.skip_check:
        report.set_hypothesis(HypothesisVerdict(args.k, args.r % args.k, holds=True))
    report.bound = bound.to_dict()
    report.set_coloring(bound.coloring, max_colors=bound.bound)


def cmd_bound(args, gf: GraphFile, report: RunReport):
    bound = registry.get_bound(args.theorem)
    if bound is None:
        raise InputError(f"Unknown theorem {args.theorem!r}")
    if not bound.accepts(gf.graph):
        raise InputError(f"Bound {args.theorem} needs a {bound.input_kind} graph")
    result = bound.compute(gf.graph, args.k)
    report.bound = result.to_dict()
    if result.coloring is not None:
        report.set_coloring(result.coloring, max_colors=result.bound)


def cmd_clique_cycle(args, gf: GraphFile, report: RunReport):
    d = _require(gf, 'directed')
    try:
        members = [int(v) for v in args.set.split(',') if v.strip()]
    except ValueError:
        raise InputError(f"--set must be a comma-separated vertex list, got {args.set!r}")
    report.result = cycle_through_clique(d, members).to_dict()


def cmd_verify(args, gf: GraphFile, report: RunReport):
    colors = load_coloring(args.coloring, gf.graph.n)
    if args.acyclic:
        kind = ColoringKind.ACYCLIC
        _require(gf, 'directed')
    else:
        kind = ColoringKind.PROPER
    report.set_coloring(Coloring(colors, kind))


def cmd_stats(args, gf: GraphFile, report: RunReport):
    if gf.directed:
        result = cycle_stats(gf.graph).to_dict()
        underlying = underlying_graph(gf.graph)
    else:
        odd = sorted(odd_cycle_lengths(gf.graph))
        even = sorted(even_cycle_lengths(gf.graph))
        result = {
            'odd_lengths': odd,
            'even_lengths': even,
            'odd_circumference': max(odd, default=1),
            'circumference': max(odd + even, default=0),
        }
        underlying = gf.graph
    result['clique_number'] = clique_number(underlying)
    if args.exact:
        result['chromatic_number'] = exact_chromatic(underlying)
        if gf.directed:
            result['acyclic_chromatic_number'] = exact_acyclic_chromatic(gf.graph)
    report.result = result


COMMANDS = {
    'census': cmd_census,
    'check': cmd_check,
    'color1': cmd_color1,
    'acyclic': cmd_acyclic,
    'undirected': cmd_undirected,
    'bound': cmd_bound,
    'clique-cycle': cmd_clique_cycle,
    'verify': cmd_verify,
    'stats': cmd_stats,
}


# ============================================
# CLI
# ============================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('graph', help='Graph file ("mode", "n m", then one "u v" per line)')
    common.add_argument('--plain', action='store_true', help='Plain-text report instead of JSON')
    common.add_argument('--log-level', default=Config.LOG_LEVEL, help='Logging level on stderr')
    common.add_argument('--max-cycles', type=int, help='Cap on enumerated cycles')
    common.add_argument('--max-ear-paths', type=int, help='Cap on enumerated ear paths')

    parser = argparse.ArgumentParser(description='Digraph Coloring Lab')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('census', parents=[common], help='Cycle-length residues mod k')
    p.add_argument('--k', type=int, required=True)

    p = sub.add_parser('check', parents=[common], help='Is there no cycle of length r mod k?')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--r', type=int, required=True)

    p = sub.add_parser('color1', parents=[common], help='Proper k-coloring (no cycle = 1 mod k)')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--skip-check', action='store_true', help='Do not test the hypothesis first')

    p = sub.add_parser('acyclic', parents=[common], help='Acyclic k-coloring (no cycle = r mod k)')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--r', type=int, required=True)
    p.add_argument('--skip-check', action='store_true', help='Do not test the hypothesis first')

    p = sub.add_parser('undirected', parents=[common], help='Proper coloring of an undirected graph')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--r', type=int, required=True)
    p.add_argument('--skip-check', action='store_true', help='Do not test the hypothesis first')

    p = sub.add_parser('bound', parents=[common], help='Classical chromatic bound with a witness')
    p.add_argument('--theorem', required=True, choices=registry.theorem_ids())
    p.add_argument('--k', type=int, help='Modulus for bounds that take one (tuza)')

    p = sub.add_parser('clique-cycle', parents=[common], help='Cycle through pairwise adjacent vertices')
    p.add_argument('--set', required=True, help='Comma-separated vertices, e.g. 0,2,5')

    p = sub.add_parser('verify', parents=[common], help='Check a coloring file')
    p.add_argument('--coloring', required=True, help='File with one "vertex color" line per vertex')
    p.add_argument('--acyclic', action='store_true', help='Check acyclic instead of proper')

    p = sub.add_parser('stats', parents=[common], help='Circumference, odd circumference, longest path')
    p.add_argument('--exact', action='store_true', help='Also compute exact chromatic numbers')

    p = sub.add_parser('fixture', help='Write a named fixture graph')
    p.add_argument('name', choices=sorted(FIXTURES))
    p.add_argument('--n', type=int, help='Size parameter')
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == 'fixture':
        try:
            sys.stdout.write(serialize_graph(build_fixture(args.name, args.n)))
        except InputError as e:
            print(f"error: {e}", file=sys.stderr)
            return e.exit_code
        return 0

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    saved = dict(Config.LIMITS)
    Config.set_limits(max_cycles=args.max_cycles, max_ear_paths=args.max_ear_paths)
    try:
        return _execute(args)
    finally:
        Config.LIMITS.update(saved)


def _execute(args) -> int:
    try:
        gf = load_graph(args.graph)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    parameters = {key: getattr(args, key) for key in ('k', 'r', 'theorem', 'set', 'coloring')
                  if getattr(args, key, None) is not None}
    report = RunReport(args.command, gf.graph, parameters)
    try:
        COMMANDS[args.command](args, gf, report)
    except HypothesisViolation as e:
        report.set_error(e, 'hypothesis-violated')
        if e.witness is not None and report.hypothesis is None and 'k' in parameters:
            k = parameters['k']
            report.hypothesis = HypothesisVerdict(k, parameters.get('r', 1) % k, False, e.witness).to_dict()
    except VerificationFailure as e:
        report.set_error(e, 'verification-failed')
    except InputError as e:
        report.set_error(e, 'input-error')
    except ResourceLimitExceeded as e:
        logger.warning("Search cap exceeded: %s", e)
        report.set_error(e, 'resource-limit')
    except DefectError as e:
        logger.error("Internal defect: %s", e)
        report.set_error(e, 'defect')
    except ColoringLabError as e:
        report.set_error(e, 'defect')
    report.finish()

    print(render_plain(report) if args.plain else render_json(report))
    return STATUS_EXIT[report.status]


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
