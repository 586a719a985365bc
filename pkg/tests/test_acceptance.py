"""End-to-end acceptance gates, one test per criterion, each printing a
pass/fail line (run with `pytest -s` to see them).

These pin the package's headline guarantees: the exhaustive parsers'
exact pair-query count, exact tree reconstruction under known-answer
grammars, the corrected projective head search, search-equals-oracle on
random grammars, the uniqueness/projectivity output guarantees, growth of
first-parse cost on the worst-case chain, projectivity-checker agreement
with a direct-definition oracle, and byte-exact CLI output.
"""

import itertools
import random
import time
from contextlib import contextmanager

import pytest

from wordlink import (
    Analysis,
    Link,
    LinkRule,
    QueryCounter,
    RuleGrammar,
    TreeBackedGrammar,
    check_uniqueness,
    is_projective,
    make_sentence,
    oracle_enumerate,
    parse,
    parse_all,
    parse_first,
    parse_lsup,
    worst_case_chain,
)
from wordlink.backtrack import random_tree, random_tree_sentence
from conftest import data_path


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print("[criterion %d] FAIL - %s" % (number, description))
        raise
    print("[criterion %d] PASS - %s" % (number, description))


def link_pairs(analysis):
    return frozenset((l.head, l.dependent) for l in analysis.links)


# ---------------------------------------------------------------- corpus


def random_rule_grammar(rng):
    cats = ("A", "B", "C")
    rules = [
        LinkRule(rng.choice(cats), rng.choice(cats), rng.choice("<>~"))
        for _ in range(rng.randint(0, 6))
    ]
    return RuleGrammar({"a": "A", "b": "B", "c": "C"}, rules)


@pytest.fixture(scope="module")
def grammar_corpus():
    rng = random.Random(1789)
    return [random_rule_grammar(rng) for _ in range(100)]


@pytest.fixture(scope="module")
def sequence_corpus():
    # category sequences share one lexicon, so the sentences can be built once
    tagger = RuleGrammar({"a": "A", "b": "B", "c": "C"}, ())
    return [
        tagger.sentence(seq)
        for length in range(1, 6)
        for seq in itertools.product("abc", repeat=length)
    ]


# ------------------------------------------------------------ criteria


def test_c1_exhaustive_pair_count_identity(run_cli):
    with criterion(1, "esh/esd query exactly n(n-1) pairs for n in 1..40, under 1 s"):
        ns = ",".join(str(n) for n in range(1, 41))
        start = time.perf_counter()
        for algo in ("esh", "esd"):
            code, out, _ = run_cli(
                ["bench", "-a", algo, "--scenario", "null-grammar", "--n", ns]
            )
            assert code == 0
            rows = [line.split("\t") for line in out.rstrip("\n").split("\n")[1:]]
            assert len(rows) == 40
            for row in rows:
                n = int(row[1])
                assert int(row[2]) == n * (n - 1), (algo, n, row)
        assert time.perf_counter() - start < 1.0


def test_c2_reconstruction_of_random_trees():
    with criterion(2, "1000 random trees reconstructed exactly; lsup on the projective subset"):
        rng = random.Random(1002)
        start = time.perf_counter()
        projective_seen = nonprojective_seen = 0
        for _ in range(1000):
            n = rng.randint(1, 10)
            target = random_tree(n, rng)
            want = frozenset((l.head, l.dependent) for l in target)
            grammar = TreeBackedGrammar(target)
            sentence = random_tree_sentence(n)
            for name in ("esh", "esd", "eshu", "esdu", "lsu"):
                out = parse(name, grammar, sentence)
                assert link_pairs(out.analysis) == want and out.unity, (name, sorted(want))
            out = parse_lsup(grammar, sentence)
            if is_projective(Analysis(sentence, frozenset(target))):
                projective_seen += 1
                assert link_pairs(out.analysis) == want and out.unity, sorted(want)
            else:
                nonprojective_seen += 1
                assert not out.unity, sorted(want)
        assert projective_seen and nonprojective_seen
        assert time.perf_counter() - start < 10.0


def _lsup_previous_word_only(grammar, sentence):
    """The uncorrected head search: climb from the immediately preceding
    word, whether or not it is already below the new one.  Kept here,
    test-side only, to demonstrate the failure the shipped parser fixes."""
    headlist = []
    head_of = {}
    links = set()
    for w in sentence.words:
        for d in list(headlist):
            if grammar.permits(w, d):
                links.add((w.index, d.index))
                head_of[d.index] = w.index
                headlist.remove(d)
            else:
                break
        h = w.index - 1 if w.index > 1 else None
        linked = False
        while h is not None:
            if h == w.index:  # climbed into the new word itself; dead end
                break
            if grammar.permits(sentence.word(h), w):
                links.add((h, w.index))
                head_of[w.index] = h
                linked = True
                break
            if h not in head_of:
                break
            h = head_of[h]
        if not linked:
            headlist.insert(0, w)
    return links


def test_c3_corrected_projective_head_search():
    fixture = {(1, 4), (4, 2), (4, 3)}  # 4 hangs off 1 past two words already under 4
    with criterion(3, "postdependent behind two obstacles: corrected search parses it, 'previous word' search cannot"):
        grammar = TreeBackedGrammar(fixture)
        sentence = make_sentence(["a", "b", "c", "d"])
        out = parse_lsup(grammar, sentence)
        assert link_pairs(out.analysis) == frozenset(fixture)
        assert out.unity
        broken = _lsup_previous_word_only(grammar, sentence)
        assert broken != fixture
        assert (1, 4) not in broken


def test_c4_search_equals_oracle(grammar_corpus, sequence_corpus):
    with criterion(4, "parse_all matches brute-force enumeration on 100 random grammars x all sequences <= 5"):
        start = time.perf_counter()
        mismatches = 0
        for grammar in grammar_corpus:
            for sentence in sequence_corpus:
                for projective in (True, False):
                    got = parse_all(grammar, sentence, projective)
                    expected = oracle_enumerate(grammar, sentence, projective)
                    if got != expected:
                        mismatches += 1
        assert mismatches == 0
        assert time.perf_counter() - start < 60.0


def test_c5_output_guarantees_on_adversarial_grammars(grammar_corpus, sequence_corpus):
    with criterion(5, "lsup and projective search outputs are projective and unique-headed; eshu/esdu/lsu unique-headed"):
        violations = 0
        for grammar in grammar_corpus:
            for sentence in sequence_corpus:
                out = parse_lsup(grammar, sentence)
                if not (is_projective(out.analysis) and check_uniqueness(out.analysis)):
                    violations += 1
                for name in ("eshu", "esdu", "lsu"):
                    if not check_uniqueness(parse(name, grammar, sentence).analysis):
                        violations += 1
                for analysis in parse_all(grammar, sentence, True):
                    if not (is_projective(analysis) and check_uniqueness(analysis)):
                        violations += 1
        assert violations == 0


def test_c6_first_parse_cost_grows_along_the_chain():
    with criterion(6, "worst-case chain: first-parse link operations strictly increasing, doubling ratio within [2, 10]"):
        costs = {}
        for n in (4, 8, 16, 32):
            grammar, sentence = worst_case_chain(n)
            counter = QueryCounter()
            parse_first(grammar, sentence, True, counter=counter)
            costs[n] = counter.link_operations
        assert costs[4] < costs[8] < costs[16] < costs[32]
        for n in (4, 8, 16):
            ratio = costs[2 * n] / costs[n]
            assert 2.0 <= ratio <= 10.0, (n, ratio)


def test_c7_projectivity_checker_agrees_with_direct_definition():
    def closure(pairs, w):
        out = {w}
        changed = True
        while changed:
            changed = False
            for h, d in pairs:
                if h in out and d not in out:
                    out.add(d)
                    changed = True
        return out

    def oracle_projective(n, pairs):
        for w in range(1, n + 1):
            span = sorted(closure(pairs, w))
            if any(b - a != 1 for a, b in zip(span, span[1:])):
                return False
        return True

    with criterion(7, "is_projective equals the every-span-is-an-interval oracle on 10000 random analyses"):
        rng = random.Random(1007)
        disagreements = 0
        for _ in range(10000):
            n = rng.randint(1, 8)
            sentence = make_sentence(["w%d" % (k + 1) for k in range(n)])
            pairs = set()
            for d in range(1, n + 1):
                h = rng.randint(0, n)
                if h and h != d:
                    pairs.add((h, d))
            analysis = Analysis(sentence, frozenset(Link(h, d) for h, d in pairs))
            if is_projective(analysis) != oracle_projective(n, pairs):
                disagreements += 1
        assert disagreements == 0


def test_c8_cli_golden_output_and_exit_contract(run_cli):
    with criterion(8, "byte-exact golden output for lsup --emit both --stats; exit codes track unity on the fixture sets"):
        with open(data_path("golden_parse_both_stats.txt"), encoding="utf-8") as f:
            golden = f.read()
        code, out, _ = run_cli(
            ["parse", "--algorithm", "lsup", "--grammar", data_path("g1.grammar"),
             "--emit", "both", "--stats"],
            stdin_text="the dog barks\n",
        )
        assert code == 0
        assert out == golden
        argv = ["parse", "-a", "lsup", "-g", data_path("g1.grammar")]
        assert run_cli(argv + [data_path("sentences_unity.txt")])[0] == 0
        assert run_cli(argv + [data_path("sentences_mixed.txt")])[0] == 1
