"""Backtracking search over the incremental parsers' decision structure,
plus a brute-force enumeration oracle to verify it against.

The search is chronological: every opportunity to take a link is a choice
point, explored take-branch first, so on a grammar with no local
ambiguity the very first complete path is exactly the greedy
deterministic parse.  Declining a permitted link is itself a branch;
without decline branches the search could never reach analyses that need
a later, farther attachment.  In the projective search a declined
dependent ends that word's dependent scan for good (skipping a potential
predependent would break the contiguous-span argument), while the
non-projective search may skip freely.

State restoration is by undo: links and list positions are put back as
the recursion unwinds.
"""

import random

from .core import Analysis, Link, check_unity, is_projective, make_sentence
from .grammar import PRE, LinkRule, QueryCounter, RuleGrammar
from .parsers import ParseOutcome

ORACLE_MAX_WORDS = 8


class EnumerationBoundError(ValueError):
    """Refusal to brute-force a sentence longer than the configured cap."""

    def __init__(self, n, bound):
        super().__init__(
            "sentence has %d words; exhaustive enumeration is capped at %d" % (n, bound)
        )
        self.bound = bound


class AnalysisSet:
    """Complete analyses deduplicated by link set.

    Every member satisfies unity; that is checked at construction, since
    the whole point of the container is "finished parses only".
    """

    def __init__(self, analyses):
        members = {}
        for a in analyses:
            if not check_unity(a):
                raise ValueError("AnalysisSet member fails unity: %r" % (sorted_pairs(a),))
            members[a.links] = a
        self.analyses = frozenset(members.values())

    def link_sets(self):
        """The members as a set of frozensets of (head, dependent) pairs."""
        return {frozenset((l.head, l.dependent) for l in a.links) for a in self.analyses}

    def __len__(self):
        return len(self.analyses)

    def __iter__(self):
        return iter(self.analyses)

    def __eq__(self, other):
        if not isinstance(other, AnalysisSet):
            return NotImplemented
        return self.analyses == other.analyses

    def __repr__(self):
        return "AnalysisSet(%d analyses)" % len(self.analyses)


def sorted_pairs(analysis):
    return tuple(sorted((l.head, l.dependent) for l in analysis.links))


class _Search:
    """Depth-first walk over every way the list-based parser could have
    resolved its link decisions.

    Yields once per complete configuration (all words accepted); the live
    state at that moment holds the configuration's links.
    """

    def __init__(self, grammar, sentence, projective, counter):
        self.grammar = grammar
        self.sentence = sentence
        self.words = sentence.words
        self.n = len(self.words)
        self.projective = projective
        self.counter = counter
        self.headlist = []  # word positions, most recent first
        self.head_of = {}
        self.links = []

    def run(self):
        yield from self._step(1)

    def _step(self, i):
        if i > self.n:
            yield self
            return
        for _ in self._dependent_choices(i):
            for _ in self._head_choices(i):
                yield from self._step(i + 1)

    # -- helpers ------------------------------------------------------

    def _permits(self, head_ix, dep_ix):
        return self.grammar.permits(
            self.words[head_ix - 1], self.words[dep_ix - 1], counter=self.counter
        )

    def _link(self, head_ix, dep_ix):
        self.links.append(Link(head_ix, dep_ix))
        self.head_of[dep_ix] = head_ix
        self.counter.link_operations += 1

    def _unlink(self, dep_ix):
        self.links.pop()
        del self.head_of[dep_ix]

    def _subordinate(self, x, w):
        cur = self.head_of.get(x)
        while cur is not None:
            if cur == w:
                return True
            cur = self.head_of.get(cur)
        return False

    # -- dependent phase ----------------------------------------------

    def _dependent_choices(self, w):
        if self.projective:
            yield from self._front_run_deps(w)
        else:
            yield from self._subset_deps(w, list(self.headlist), 0)

    def _front_run_deps(self, w):
        # attach a consecutive run from the front of the headless list;
        # stopping (or a refused candidate) ends the scan for good
        if self.headlist and self._permits(w, self.headlist[0]):
            d = self.headlist.pop(0)
            self._link(w, d)
            yield from self._front_run_deps(w)
            self._unlink(d)
            self.headlist.insert(0, d)
        yield "stop"

    def _subset_deps(self, w, snapshot, k):
        # any subset of the headless list may attach; scan a snapshot so
        # removals do not disturb the iteration
        if k == len(snapshot):
            yield "done"
            return
        d = snapshot[k]
        if self._permits(w, d):
            pos = self.headlist.index(d)
            self.headlist.pop(pos)
            self._link(w, d)
            yield from self._subset_deps(w, snapshot, k + 1)
            self._unlink(d)
            self.headlist.insert(pos, d)
        yield from self._subset_deps(w, snapshot, k + 1)

    # -- head phase -----------------------------------------------------

    def _head_choices(self, w):
        if self.projective:
            h = None
            for x in range(w - 1, 0, -1):
                if not self._subordinate(x, w):
                    h = x
                    break
            while h is not None:
                if self._permits(h, w):
                    self._link(h, w)
                    yield "took"
                    self._unlink(w)
                h = self.head_of.get(h)
        else:
            for h in range(w - 1, 0, -1):
                if self._permits(h, w):
                    self._link(h, w)
                    yield "took"
                    self._unlink(w)
        # last alternative: w stays headless
        self.headlist.insert(0, w)
        yield "headless"
        self.headlist.pop(0)

    # -- completion -----------------------------------------------------

    def unity(self):
        if self.n == 0:
            return False
        if len(self.head_of) != self.n - 1:
            return False
        for x in range(1, self.n + 1):
            steps = 0
            cur = self.head_of.get(x)
            while cur is not None:
                steps += 1
                if steps > self.n:  # cycle
                    return False
                cur = self.head_of.get(cur)
        return True


def _trace(links):
    return tuple((max(l.head, l.dependent), l) for l in links)


def parse_all(grammar, sentence, projective, counter=None):
    """Every complete analysis the backtracking search can reach.

    With projective=True the search follows the projective parser's
    decision structure and only projective trees come out; otherwise the
    unconstrained list-based structure is searched and crossing links are
    reachable.  An exhausted search is an empty set, not an error.
    """
    counter = counter if counter is not None else QueryCounter()
    search = _Search(grammar, sentence, projective, counter)
    found = {}
    for state in search.run():
        if state.unity():
            links = frozenset(state.links)
            if links not in found:
                found[links] = Analysis(sentence, links)
        else:
            counter.backtracks += 1
    return AnalysisSet(found.values())


def parse_first(grammar, sentence, projective, counter=None):
    """Depth-first search stopping at the first complete analysis.

    Take-the-link branches are explored before decline branches, so under
    a grammar with no local ambiguity the first path found is the greedy
    deterministic result and no backtracking happens.  When no complete
    analysis exists at all, the first (greedy) configuration is returned
    as a best-effort partial with unity False.
    """
    counter = counter if counter is not None else QueryCounter()
    search = _Search(grammar, sentence, projective, counter)
    first_partial = None
    for state in search.run():
        if state.unity():
            links = tuple(state.links)
            analysis = Analysis(sentence, frozenset(links))
            return ParseOutcome(analysis, True, counter.snapshot(), _trace(links))
        if first_partial is None:
            first_partial = tuple(state.links)
        counter.backtracks += 1
    links = first_partial or ()
    analysis = Analysis(sentence, frozenset(links))
    return ParseOutcome(analysis, False, counter.snapshot(), _trace(links))


def oracle_enumerate(grammar, sentence, projective, max_words=ORACLE_MAX_WORDS):
    """Brute-force reference: enumerate every assignment of a head (or
    none) to each word and keep exactly those whose links are all
    grammar-permitted, that satisfy unity, and (when asked) that are
    projective.

    Branches that can no longer reach unity (a second headless word, or a
    head choice closing a cycle) are cut early; the survivors still pass
    through the real check_unity / is_projective filters.  Cost grows as
    (n+1)^n, hence the cap.
    """
    n = len(sentence.words)
    if n > max_words:
        raise EnumerationBoundError(n, max_words)
    if n == 0:
        return AnalysisSet(())
    words = sentence.words
    allowed = []
    for dep in words:
        heads = [0]
        for head in words:
            if head.index != dep.index and grammar.permits(head, dep):
                heads.append(head.index)
        allowed.append(heads)

    head_of = [0] * (n + 1)
    complete = []

    def assign(i, roots):
        if i > n:
            complete.append(
                frozenset(Link(head_of[d], d) for d in range(1, n + 1) if head_of[d])
            )
            return
        for h in allowed[i - 1]:
            if h == 0:
                if roots == 1:
                    continue
                head_of[i] = 0
                assign(i + 1, roots + 1)
                continue
            x = h
            cyclic = False
            while x:
                if x == i:
                    cyclic = True
                    break
                if x > i:  # not yet assigned on this branch
                    break
                x = head_of[x]
            if cyclic:
                continue
            head_of[i] = h
            assign(i + 1, roots)

    assign(1, 0)
    kept = []
    for links in complete:
        analysis = Analysis(sentence, links)
        if check_unity(analysis) and (not projective or is_projective(analysis)):
            kept.append(analysis)
    return AnalysisSet(kept)


def worst_case_chain(n):
    """A maximally reparseable noun chain: one determiner then n-1 nouns,
    every one allowed to take the determiner or any preceding noun as a
    predependent.  Every prefix is a complete analyzable phrase, which is
    what makes first-parse search cost grow with sentence length.
    """
    if n < 2:
        raise ValueError("worst-case chain needs at least 2 words, got %d" % n)
    lexicon = {"d": "D"}
    forms = ["d"]
    for k in range(1, n):
        form = "n%d" % k
        lexicon[form] = "N"
        forms.append(form)
    rules = (LinkRule("N", "D", PRE), LinkRule("N", "N", PRE))
    grammar = RuleGrammar(lexicon, rules)
    return grammar, grammar.sentence(forms)


def random_tree(n, rng=None):
    """A random single-rooted, unique-headed tree over n words, as a set
    of Links.  Used by the benchmark's random-tree scenario and by tests."""
    rng = rng if rng is not None else random.Random()
    order = list(range(1, n + 1))
    rng.shuffle(order)
    links = set()
    for k in range(1, n):
        links.add(Link(rng.choice(order[:k]), order[k]))
    return links


def random_tree_sentence(n, rng=None):
    """A placeholder sentence w1..wn to parse random trees over."""
    return make_sentence(["w%d" % (k + 1) for k in range(n)])
