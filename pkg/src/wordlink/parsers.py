"""The six deterministic one-word-at-a-time parsers.

All of them make a single left-to-right pass, attach each link at the
earliest opportunity, and never backtrack; they differ in which candidate
pairs they ask the grammar about and in what order:

  esh / esd    exhaustive pair search over every earlier word, heads
               queried first / dependents queried first.  No filtering at
               all, so output can be multi-headed or even cyclic.
  eshu / esdu  the same scan, but a word that already has a head is never
               offered another one, and a word that is already a dependent
               is never offered as a dependent again.
  lsu          list-based search: dependents of the new word can only come
               from the list of still-headless words, and the head search
               stops at the first hit.  Crossing links are still reachable.
  lsup         lsu further constrained to projective output: the dependent
               scan stops at the first headless word that cannot attach,
               and the head search climbs the tree from the nearest word
               not already below the new one.

Whether the pass ended in a single tree over the whole sentence (unity)
can only be judged afterwards, so every parser reports it on the outcome
instead of enforcing it.
"""

from dataclasses import dataclass

from .core import Analysis, Link, check_unity
from .grammar import QueryCounter


@dataclass(frozen=True)
class ParseOutcome:
    """What one parse run produced.

    `trace` records links in creation order as (accepting word, Link)
    pairs: the step field is the 1-based position of the word whose
    acceptance created the link.
    """

    analysis: Analysis
    unity: bool
    stats: QueryCounter
    trace: tuple = ()


class ParseState:
    """Working data for one parse run.

    wordlist and headlist grow by prepending, so scanning either from the
    front visits the most recently accepted words first.  head_of maps a
    dependent's position to its head's position; for the uniqueness-aware
    parsers it stays a function, for esh/esd it is only bookkeeping.
    """

    def __init__(self, counter=None):
        self.wordlist = []
        self.headlist = []
        self.links = []
        self.head_of = {}
        self.counter = counter if counter is not None else QueryCounter()
        self.trace = []
        self._step = 0

    def accept(self, word):
        self.wordlist.insert(0, word)
        self._step = word.index

    def permits(self, grammar, head, dep):
        return grammar.permits(head, dep, counter=self.counter)

    def add_link(self, head, dep):
        link = Link(head.index, dep.index)
        self.links.append(link)
        self.head_of[dep.index] = head.index
        self.counter.link_operations += 1
        self.trace.append((self._step, link))

    def has_head(self, word):
        return word.index in self.head_of

    def outcome(self, sentence):
        analysis = Analysis(sentence, frozenset(self.links))
        return ParseOutcome(
            analysis=analysis,
            unity=check_unity(analysis),
            stats=self.counter.snapshot(),
            trace=tuple(self.trace),
        )


def _exhaustive(grammar, sentence, state, heads_first, unique):
    """Shared scan for the four exhaustive parsers: for each word, walk
    backward over all earlier words, querying both directions."""
    words = sentence.words
    for i, wi in enumerate(words, start=1):
        state.accept(wi)
        for j in range(i - 1, 0, -1):
            wj = words[j - 1]
            if heads_first:
                _try_head(grammar, state, wj, wi, unique)
                _try_dependent(grammar, state, wi, wj, unique)
            else:
                _try_dependent(grammar, state, wi, wj, unique)
                _try_head(grammar, state, wj, wi, unique)
    return state.outcome(sentence)


def _try_head(grammar, state, candidate, current, unique):
    # can `candidate` be the head of the current word?
    if unique and state.has_head(current):
        return
    if state.permits(grammar, candidate, current):
        state.add_link(candidate, current)


def _try_dependent(grammar, state, current, candidate, unique):
    # can `candidate` depend on the current word?
    if unique and state.has_head(candidate):
        return
    if state.permits(grammar, current, candidate):
        state.add_link(current, candidate)


def parse_esh(grammar, sentence, state=None):
    """Exhaustive search, heads first: every permitted link is taken."""
    return _exhaustive(grammar, sentence, state or ParseState(), heads_first=True, unique=False)


def parse_esd(grammar, sentence, state=None):
    """Exhaustive search, dependents first: esh with the two queries swapped."""
    return _exhaustive(grammar, sentence, state or ParseState(), heads_first=False, unique=False)


def parse_eshu(grammar, sentence, state=None):
    """Exhaustive search, heads first, enforcing one head per word."""
    return _exhaustive(grammar, sentence, state or ParseState(), heads_first=True, unique=True)


def parse_esdu(grammar, sentence, state=None):
    """Exhaustive search, dependents first, enforcing one head per word."""
    return _exhaustive(grammar, sentence, state or ParseState(), heads_first=False, unique=True)


def parse_lsu(grammar, sentence, state=None):
    """List-based search with uniqueness.

    For each new word W: scan a snapshot of the headless-word list, most
    recent first, attaching every word that can depend on W (attachment
    removes it from the live list); then scan all words so far, most
    recent first, and attach W under the first one that can head it.
    Dependents are sought before heads so that W itself only joins the
    headless list once its dependent scan is over.
    """
    state = state or ParseState()
    for w in sentence.words:
        state.accept(w)
        for d in list(state.headlist):
            if state.permits(grammar, w, d):
                state.add_link(w, d)
                state.headlist.remove(d)
        for h in state.wordlist:
            if h.index == w.index:
                continue
            if state.permits(grammar, h, w):
                state.add_link(h, w)
                break
        else:
            state.headlist.insert(0, w)
    return state.outcome(sentence)


def _climbs_to(head_of, start, target):
    # does start's head chain pass through target?
    cur = head_of.get(start)
    while cur is not None:
        if cur == target:
            return True
        cur = head_of.get(cur)
    return False


def parse_lsup(grammar, sentence, state=None):
    """List-based search with uniqueness and projectivity.

    The dependent scan must not skip a potential predependent: it stops
    for good at the first headless word that cannot attach to W.  The
    head search starts from the most recent word not already below W and
    climbs head links from there, so W can only attach somewhere on the
    spine that keeps its span contiguous.
    """
    state = state or ParseState()
    for w in sentence.words:
        state.accept(w)
        for d in list(state.headlist):
            if state.permits(grammar, w, d):
                state.add_link(w, d)
                state.headlist.remove(d)
            else:
                break
        h = None
        for x in range(w.index - 1, 0, -1):
            if not _climbs_to(state.head_of, x, w.index):
                h = x
                break
        linked = False
        while h is not None:
            hw = sentence.word(h)
            if state.permits(grammar, hw, w):
                state.add_link(hw, w)
                linked = True
                break
            h = state.head_of.get(h)
        if not linked:
            state.headlist.insert(0, w)
    return state.outcome(sentence)


ALGORITHMS = {
    "esh": parse_esh,
    "esd": parse_esd,
    "eshu": parse_eshu,
    "esdu": parse_esdu,
    "lsu": parse_lsu,
    "lsup": parse_lsup,
}


def parse(algorithm, grammar, sentence, state=None):
    """Run one of the named deterministic parsers over a sentence."""
    try:
        run = ALGORITHMS[algorithm.lower()]
    except KeyError:
        raise ValueError(
            "unknown algorithm %r; choose from %s" % (algorithm, ", ".join(sorted(ALGORITHMS)))
        ) from None
    return run(grammar, sentence, state=state)
