"""Batch command-line front end.

Subcommands: `parse` runs an algorithm over sentences (one per line,
whitespace-tokenized) and emits tables and/or ASCII trees; `bench` sweeps
algorithms over generated scenarios and reports operation counts; `check`
validates a grammar file.

Table format: one word per line as four tab-separated columns
index / form / category / head-index, with head 0 meaning independent.
Sentences are separated by blank lines, and `# key: value` comment lines
carry unity and stats so the data rows stay trivially parseable.  A word
that ended up multi-headed (possible under esh/esd) gets its heads
comma-joined in ascending order.

Exit status for `parse` is 0 only when every sentence reached unity and
nothing errored.
"""

import argparse
import random
import sys
import time

from .backtrack import (
    parse_all,
    parse_first,
    random_tree,
    random_tree_sentence,
    sorted_pairs,
    worst_case_chain,
)
from .grammar import GrammarFormatError, QueryCounter, RuleGrammar, TreeBackedGrammar, UnknownWordError, load_grammar
from .parsers import ALGORITHMS, ParseState

BACKTRACK_BENCH_CAP = 64


class TreeRenderError(ValueError):
    """The analysis has no drawable tree (a multi-headed word or a cycle)."""


def render_tree(analysis):
    """Indented text rendering: every root at column 0, dependents two
    spaces deeper than their head, in surface order, one "index:form" per
    line.  Forests are fine; multi-headed or cyclic input is refused."""
    sentence = analysis.sentence
    heads = {}
    children = {}
    for link in sorted(analysis.links, key=lambda l: (l.dependent, l.head)):
        if link.dependent in heads:
            raise TreeRenderError("word %d has multiple heads" % link.dependent)
        heads[link.dependent] = link.head
        children.setdefault(link.head, []).append(link.dependent)
    lines = []
    visited = set()
    for word in sentence:
        if word.index in heads:
            continue
        stack = [(word.index, 0)]
        while stack:
            ix, depth = stack.pop()
            visited.add(ix)
            lines.append("%s%d:%s" % ("  " * depth, ix, sentence.word(ix).form))
            for d in sorted(children.get(ix, ()), reverse=True):
                stack.append((d, depth + 1))
    if len(visited) < len(sentence):
        missing = min(w.index for w in sentence if w.index not in visited)
        raise TreeRenderError("cycle involving word %d" % missing)
    return "\n".join(lines)


def _table_rows(analysis):
    heads = {}
    for link in analysis.links:
        heads.setdefault(link.dependent, []).append(link.head)
    rows = []
    for w in analysis.sentence:
        hs = sorted(heads.get(w.index, ())) or [0]
        rows.append("%d\t%s\t%s\t%s" % (w.index, w.form, w.category, ",".join(map(str, hs))))
    return rows


def _analysis_lines(analysis, emit):
    lines = []
    if emit in ("table", "both"):
        lines.extend(_table_rows(analysis))
    if emit in ("tree", "both"):
        try:
            rendered = render_tree(analysis)
        except TreeRenderError as exc:
            lines.append("# error: %s" % exc)
        else:
            if rendered:
                lines.extend(rendered.splitlines())
    return lines


def _outcome_block(outcome, args):
    lines = _analysis_lines(outcome.analysis, args.emit)
    lines.append("# unity: %s" % ("true" if outcome.unity else "false"))
    if args.stats:
        lines.append("# permit_queries: %d" % outcome.stats.permit_queries)
        lines.append("# link_operations: %d" % outcome.stats.link_operations)
        if args.algorithm == "backtrack":
            lines.append("# backtracks: %d" % outcome.stats.backtracks)
    return "\n".join(lines)


def _all_parses_blocks(result, args, counter):
    blocks = []
    for analysis in sorted(result, key=sorted_pairs):
        blocks.append("\n".join(_analysis_lines(analysis, args.emit)))
    summary = ["# analyses: %d" % len(result)]
    if args.stats:
        summary.append("# permit_queries: %d" % counter.permit_queries)
        summary.append("# link_operations: %d" % counter.link_operations)
        summary.append("# backtracks: %d" % counter.backtracks)
    blocks.append("\n".join(summary))
    return blocks


def _read_grammar(path):
    with open(path, encoding="utf-8") as handle:
        return load_grammar(handle.read())


def cmd_parse(args, stdin=None):
    try:
        grammar = _read_grammar(args.grammar)
    except OSError as exc:
        print("error: cannot read grammar: %s" % exc, file=sys.stderr)
        return 2
    except GrammarFormatError as exc:
        print("error: %s: %s" % (args.grammar, exc), file=sys.stderr)
        return 2
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as handle:
                lines = handle.readlines()
        except OSError as exc:
            print("error: cannot read input: %s" % exc, file=sys.stderr)
            return 2
    else:
        lines = (stdin or sys.stdin).readlines()

    blocks = []
    all_good = True
    for line in lines:
        tokens = line.split()
        if not tokens:
            continue
        try:
            sentence = grammar.sentence(tokens)
        except UnknownWordError as exc:
            blocks.append("# error: %s" % exc)
            all_good = False
            continue
        if args.algorithm == "backtrack":
            counter = QueryCounter()
            if args.all_parses:
                result = parse_all(grammar, sentence, args.projective, counter=counter)
                blocks.extend(_all_parses_blocks(result, args, counter))
                if not len(result):
                    all_good = False
            else:
                outcome = parse_first(grammar, sentence, args.projective, counter=counter)
                blocks.append(_outcome_block(outcome, args))
                if not outcome.unity:
                    all_good = False
        else:
            outcome = ALGORITHMS[args.algorithm](grammar, sentence)
            blocks.append(_outcome_block(outcome, args))
            if not outcome.unity:
                all_good = False
    if blocks:
        sys.stdout.write("\n\n".join(blocks) + "\n")
    return 0 if all_good else 1


def _scenario(name, n, seed):
    if name == "null-grammar":
        forms = ["w%d" % (k + 1) for k in range(n)]
        grammar = RuleGrammar({f: "X" for f in forms}, ())
        return grammar, grammar.sentence(forms)
    if name == "worst-case-chain":
        return worst_case_chain(n)
    rng = random.Random(seed * 1000003 + n)
    return TreeBackedGrammar(random_tree(n, rng)), random_tree_sentence(n)


def cmd_bench(args):
    algorithms = [a.strip() for a in args.algorithm.split(",") if a.strip()]
    known = set(ALGORITHMS) | {"backtrack"}
    for algo in algorithms:
        if algo not in known:
            print("error: unknown algorithm '%s'" % algo, file=sys.stderr)
            return 2
    try:
        ns = [int(x) for x in args.n.split(",") if x.strip()]
    except ValueError:
        print("error: --n wants comma-separated integers", file=sys.stderr)
        return 2
    if not ns or any(n < 1 for n in ns):
        print("error: sentence lengths must be positive", file=sys.stderr)
        return 2
    if args.scenario == "worst-case-chain" and any(n < 2 for n in ns):
        print("error: worst-case-chain needs n >= 2", file=sys.stderr)
        return 2
    if "backtrack" in algorithms and any(n > BACKTRACK_BENCH_CAP for n in ns):
        print(
            "error: backtrack benchmarks are capped at n = %d" % BACKTRACK_BENCH_CAP,
            file=sys.stderr,
        )
        return 2

    rows = ["algorithm\tn\tpermit_queries\tlink_operations\twall_ns"]
    for n in ns:
        for algo in algorithms:
            grammar, sentence = _scenario(args.scenario, n, args.seed)
            counter = QueryCounter()
            start = time.perf_counter_ns()
            if algo == "backtrack":
                parse_first(grammar, sentence, args.projective, counter=counter)
            else:
                ALGORITHMS[algo](grammar, sentence, state=ParseState(counter))
            wall = time.perf_counter_ns() - start
            rows.append(
                "%s\t%d\t%d\t%d\t%d"
                % (algo, n, counter.permit_queries, counter.link_operations, wall)
            )
    sys.stdout.write("\n".join(rows) + "\n")
    return 0


def cmd_check(args):
    try:
        grammar = _read_grammar(args.grammar)
    except OSError as exc:
        print("error: cannot read grammar: %s" % exc, file=sys.stderr)
        return 2
    except GrammarFormatError as exc:
        print("error: %s" % exc)
        print("errors: 1")
        return 1
    print("forms: %d" % len(grammar.lexicon))
    print("categories: %d" % len(grammar.categories))
    print("rules: %d" % len(grammar.rules))
    for warning in grammar.warnings:
        print("warning: %s" % warning)
    print("errors: 0")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wordlink",
        description="Word-at-a-time dependency parsing with pluggable grammars.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse sentences from a file or stdin")
    p.add_argument(
        "--algorithm", "-a", required=True, choices=sorted(ALGORITHMS) + ["backtrack"]
    )
    p.add_argument("--grammar", "-g", required=True, help="grammar file")
    p.add_argument(
        "--projective",
        action="store_true",
        help="backtrack only: search the projective decision structure",
    )
    p.add_argument(
        "--all-parses",
        dest="all_parses",
        action="store_true",
        help="backtrack only: emit every complete analysis",
    )
    p.add_argument("--stats", action="store_true", help="append per-sentence counters")
    p.add_argument("--emit", choices=("table", "tree", "both"), default="table")
    p.add_argument("input", nargs="?", help="sentence file, one per line (default: stdin)")

    b = sub.add_parser("bench", help="operation-count sweeps over generated scenarios")
    b.add_argument("--algorithm", "-a", required=True, help="comma-separated algorithm names")
    b.add_argument(
        "--scenario",
        required=True,
        choices=("null-grammar", "worst-case-chain", "random-tree"),
    )
    b.add_argument("--n", required=True, help="comma-separated sentence lengths")
    b.add_argument("--projective", action="store_true", help="backtrack only")
    b.add_argument("--seed", type=int, default=0, help="random-tree scenario seed")

    c = sub.add_parser("check", help="validate a grammar file")
    c.add_argument("grammar", help="grammar file")
    return parser


def main(argv=None, stdin=None):
    args = build_parser().parse_args(argv)
    if args.command == "parse":
        if args.all_parses and args.algorithm != "backtrack":
            print("error: --all-parses requires --algorithm backtrack", file=sys.stderr)
            return 2
        if args.projective and args.algorithm != "backtrack":
            print("error: --projective requires --algorithm backtrack", file=sys.stderr)
            return 2
        return cmd_parse(args, stdin=stdin)
    if args.command == "bench":
        return cmd_bench(args)
    return cmd_check(args)


def entry():
    sys.exit(main())
