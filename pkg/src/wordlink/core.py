"""Words, links, and analyses, plus the tree predicates everything else uses.

An Analysis is deliberately permissive: it is any set of head->dependent
links over a sentence, including multi-headed and cyclic ones, because the
naive exhaustive parsers can and do produce such output.  Whether a link
set is a proper tree is a question for the predicates (check_uniqueness,
check_unity, is_projective), which are total: they classify bad structure
instead of crashing on it.

Word positions are 1-based throughout the package; position 0 is reserved
to mean "independent" (headless) in external output.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Word:
    """One input token: 1-based position, surface form, category symbol."""

    index: int
    form: str
    category: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("word index must be >= 1, got %r" % (self.index,))
        if not self.form:
            raise ValueError("word form must be non-empty")


@dataclass(frozen=True)
class Sentence:
    """An ordered run of words whose indices are exactly 1..n."""

    words: tuple

    def __post_init__(self):
        words = tuple(self.words)
        object.__setattr__(self, "words", words)
        for k, word in enumerate(words):
            if word.index != k + 1:
                raise ValueError(
                    "word at position %d carries index %d; indices must be "
                    "consecutive from 1" % (k + 1, word.index)
                )

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def word(self, index):
        """The word at a 1-based position."""
        if not 1 <= index <= len(self.words):
            raise IndexError("no word at position %d (sentence has %d)" % (index, len(self.words)))
        return self.words[index - 1]


def make_sentence(forms, categories=None):
    """Build a Sentence from surface tokens.

    When categories is omitted every word gets the placeholder category
    "_", which is all a tree-backed grammar needs.
    """
    if categories is None:
        categories = ["_"] * len(forms)
    if len(categories) != len(forms):
        raise ValueError("got %d forms but %d categories" % (len(forms), len(categories)))
    return Sentence(tuple(Word(k + 1, f, c) for k, (f, c) in enumerate(zip(forms, categories))))


@dataclass(frozen=True)
class Link:
    """A directed head -> dependent connection between two word positions."""

    head: int
    dependent: int

    def __post_init__(self):
        if self.head == self.dependent:
            raise ValueError("a word cannot be linked to itself (index %d)" % self.head)
        if self.head < 1 or self.dependent < 1:
            raise ValueError("link indices must be >= 1, got (%r, %r)" % (self.head, self.dependent))


@dataclass(frozen=True)
class Analysis:
    """A sentence plus any set of links over it.

    Uniqueness, acyclicity and unity are *not* invariants here; they are
    evaluated by the predicates below so that malformed parser output can
    still be inspected and reported on.
    """

    sentence: Sentence
    links: frozenset

    def __post_init__(self):
        links = frozenset(self.links)
        object.__setattr__(self, "links", links)
        n = len(self.sentence)
        for link in links:
            if link.head > n or link.dependent > n:
                raise ValueError("link %r falls outside the %d-word sentence" % (link, n))

    @classmethod
    def from_pairs(cls, sentence, pairs):
        """Convenience constructor from (head, dependent) index pairs."""
        return cls(sentence, frozenset(Link(h, d) for h, d in pairs))


def _require_index(sentence, index):
    if not 1 <= index <= len(sentence):
        raise IndexError("no word at position %d (sentence has %d)" % (index, len(sentence)))


def _dependents_by_head(analysis):
    children = {}
    for link in analysis.links:
        children.setdefault(link.head, []).append(link.dependent)
    return children


def comprises(analysis, index):
    """The set of positions a word comprises: itself plus every word it
    dominates, i.e. the reflexive-transitive closure of the dependent
    relation starting at `index`.

    Visited-set traversal, so it terminates on cyclic link sets too.
    """
    _require_index(analysis.sentence, index)
    children = _dependents_by_head(analysis)
    seen = {index}
    frontier = [index]
    while frontier:
        w = frontier.pop()
        for d in children.get(w, ()):
            if d not in seen:
                seen.add(d)
                frontier.append(d)
    return seen


def is_subordinate(analysis, a, b):
    """True iff word a is dominated by word b (strictly: a word is not
    subordinate to itself)."""
    _require_index(analysis.sentence, a)
    _require_index(analysis.sentence, b)
    return a != b and a in comprises(analysis, b)


def check_uniqueness(analysis):
    """True iff no word has two heads."""
    seen = set()
    for link in analysis.links:
        if link.dependent in seen:
            return False
        seen.add(link.dependent)
    return True


def check_unity(analysis):
    """True iff the links form a single tree over the whole sentence:
    unique heads, exactly one independent word, and that word comprising
    every word.  Empty sentences fail (there is no root to exhibit).

    No separate cycle check is needed: with unique heads, no word outside
    a cycle can point into it, so a root that comprises all n words rules
    cycles out.
    """
    n = len(analysis.sentence)
    if n == 0 or not check_uniqueness(analysis):
        return False
    dependents = {link.dependent for link in analysis.links}
    roots = [w.index for w in analysis.sentence if w.index not in dependents]
    if len(roots) != 1:
        return False
    return len(comprises(analysis, roots[0])) == n


def is_projective(analysis):
    """True iff every word comprises a contiguous interval of positions.

    Defined over the same closure as `comprises`, so it is total on
    multi-headed and cyclic input as well; callers that care should gate
    on check_uniqueness first.
    """
    for w in analysis.sentence:
        span = comprises(analysis, w.index)
        if max(span) - min(span) + 1 != len(span):
            return False
    return True
