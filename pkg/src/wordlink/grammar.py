"""The constant-time link-permission contract and its two implementations.

A grammar answers one question about an ordered pair of distinct words:
may the first be the head of the second?  Parsers expect the answer in
time independent of sentence length, which both implementations satisfy
with plain dict lookups.

RuleGrammar answers from a category rule table plus a lexicon and is what
the grammar file format loads into.  TreeBackedGrammar answers from one
fixed target link set; it is the known-answer grammar used in tests to
drive a parser toward a specific tree, and by construction it has no
local ambiguity: every link it permits belongs to the intended parse.

Grammar file format (UTF-8, line-based):

    # comment lines and blank lines are ignored
    word FORM : CATEGORY        lexicon entry, one category per form
    rule HEADCAT < DEPCAT       DEPCAT may attach as predependent of HEADCAT
    rule HEADCAT > DEPCAT       ... as postdependent (dependent follows head)
    rule HEADCAT ~ DEPCAT       ... on either side

Whitespace around tokens is free.  A duplicate form is an error; a rule
naming a category no word maps to is only a warning (rules may anticipate
vocabulary).
"""

import re

from .core import Link, Sentence, Word

# Rule directions, spelled as in the grammar file format.
PRE = "<"
POST = ">"
EITHER = "~"

_DIRECTIONS = (PRE, POST, EITHER)


class GrammarFormatError(ValueError):
    """A grammar file that does not follow the format; carries the line number."""

    def __init__(self, lineno, message):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


class UnknownWordError(LookupError):
    """A surface form absent from the grammar's lexicon."""

    def __init__(self, form):
        super().__init__("unknown form %r" % form)
        self.form = form


class QueryCounter:
    """Per-parse-run instrumentation.

    permit_queries counts grammar queries; link_operations counts every
    link ever made, including ones a backtracking search later undoes;
    backtracks counts dead-end configurations a search abandoned.  One
    counter belongs to one run: never share it between concurrent parses.
    """

    __slots__ = ("permit_queries", "link_operations", "backtracks")

    def __init__(self, permit_queries=0, link_operations=0, backtracks=0):
        self.permit_queries = permit_queries
        self.link_operations = link_operations
        self.backtracks = backtracks

    def reset(self):
        """Zero every count; returns self so calls can chain."""
        self.permit_queries = 0
        self.link_operations = 0
        self.backtracks = 0
        return self

    def snapshot(self):
        """An independent copy, for freezing end-of-parse stats."""
        return QueryCounter(self.permit_queries, self.link_operations, self.backtracks)

    def __eq__(self, other):
        if not isinstance(other, QueryCounter):
            return NotImplemented
        return (
            self.permit_queries == other.permit_queries
            and self.link_operations == other.link_operations
            and self.backtracks == other.backtracks
        )

    def __repr__(self):
        return "QueryCounter(permit_queries=%d, link_operations=%d, backtracks=%d)" % (
            self.permit_queries,
            self.link_operations,
            self.backtracks,
        )


class Grammar:
    """Base of the link-permission contract."""

    def permits(self, head, dep, counter=None):
        """True iff `head` may take `dep` as its dependent.

        The two words must be distinct.  When a QueryCounter is supplied
        the query is tallied on it.  Constant time with respect to
        sentence length.
        """
        if counter is not None:
            counter.permit_queries += 1
        return self._permits(head, dep)

    def _permits(self, head, dep):
        raise NotImplementedError


class LinkRule:
    """One table entry: HEADCAT may take DEPCAT on the given side."""

    __slots__ = ("head_category", "dependent_category", "direction")

    def __init__(self, head_category, dependent_category, direction):
        if not head_category or not dependent_category:
            raise ValueError("rule categories must be non-empty symbols")
        if direction not in _DIRECTIONS:
            raise ValueError("rule direction must be one of %s" % (", ".join(_DIRECTIONS)))
        self.head_category = head_category
        self.dependent_category = dependent_category
        self.direction = direction

    def __eq__(self, other):
        if not isinstance(other, LinkRule):
            return NotImplemented
        return (
            self.head_category == other.head_category
            and self.dependent_category == other.dependent_category
            and self.direction == other.direction
        )

    def __hash__(self):
        return hash((self.head_category, self.dependent_category, self.direction))

    def __repr__(self):
        return "LinkRule(%r %s %r)" % (self.head_category, self.direction, self.dependent_category)


class RuleGrammar(Grammar):
    """A lexicon (form -> category) plus a set of directional link rules."""

    def __init__(self, lexicon, rules, warnings=()):
        self.lexicon = dict(lexicon)
        self.rules = tuple(rules)
        self.warnings = tuple(warnings)
        # pair -> (predependent allowed, postdependent allowed)
        table = {}
        for rule in self.rules:
            pair = (rule.head_category, rule.dependent_category)
            pre, post = table.get(pair, (False, False))
            if rule.direction in (PRE, EITHER):
                pre = True
            if rule.direction in (POST, EITHER):
                post = True
            table[pair] = (pre, post)
        self._table = table

    @property
    def categories(self):
        return set(self.lexicon.values())

    def _permits(self, head, dep):
        flags = self._table.get((head.category, dep.category))
        if flags is None:
            return False
        return flags[0] if dep.index < head.index else flags[1]

    def categorize(self, form):
        try:
            return self.lexicon[form]
        except KeyError:
            raise UnknownWordError(form) from None

    def sentence(self, forms):
        """Tag surface tokens from the lexicon and build a Sentence.

        Raises UnknownWordError here, at load time, rather than during
        parsing: permit queries never do lexicon lookups.
        """
        return Sentence(tuple(Word(k + 1, f, self.categorize(f)) for k, f in enumerate(forms)))


class TreeBackedGrammar(Grammar):
    """Permits exactly the links of one fixed target analysis."""

    def __init__(self, target):
        pairs = set()
        for item in target:
            if isinstance(item, Link):
                pairs.add((item.head, item.dependent))
            else:
                h, d = item
                pairs.add((int(h), int(d)))
        self.target = frozenset(pairs)

    def _permits(self, head, dep):
        return (head.index, dep.index) in self.target


_WORD_LINE = re.compile(r"^word\s+(\S+)\s*:\s*(\S+)$")
_RULE_LINE = re.compile(r"^rule\s+(\S+)\s*([<>~])\s*(\S+)$")


def load_grammar(text):
    """Parse grammar file content into a RuleGrammar.

    Raises GrammarFormatError (with the offending line number) on
    duplicate forms, unknown directives, or malformed lines.  Duplicate
    rules and rules over categories absent from the lexicon are recorded
    on the grammar's `warnings` instead.
    """
    lexicon = {}
    rules = []
    warnings = []
    seen_rules = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        directive = line.split(None, 1)[0]
        if directive == "word":
            m = _WORD_LINE.match(line)
            if not m:
                raise GrammarFormatError(lineno, "malformed word entry: %r" % line)
            form, category = m.groups()
            if form in lexicon:
                raise GrammarFormatError(lineno, "duplicate form '%s'" % form)
            lexicon[form] = category
        elif directive == "rule":
            m = _RULE_LINE.match(line)
            if not m:
                raise GrammarFormatError(lineno, "malformed rule: %r" % line)
            head_cat, op, dep_cat = m.groups()
            rule = LinkRule(head_cat, dep_cat, op)
            if rule in seen_rules:
                warnings.append("line %d: duplicate rule '%s %s %s'" % (lineno, head_cat, op, dep_cat))
            seen_rules.add(rule)
            rules.append(rule)
        else:
            raise GrammarFormatError(lineno, "unknown directive '%s'" % directive)
    known = set(lexicon.values())
    flagged = set()
    for rule in rules:
        for category in (rule.head_category, rule.dependent_category):
            if category not in known and category not in flagged:
                flagged.add(category)
                warnings.append("rule references category '%s' absent from the lexicon" % category)
    return RuleGrammar(lexicon, rules, warnings=tuple(warnings))
