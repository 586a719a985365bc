"""Word-at-a-time dependency parsing.

A family of incremental parsers that attach each word as soon as it can
be attached, driven by a pluggable constant-time grammar, plus a
backtracking search for ambiguous grammars, a brute-force enumeration
oracle, operation-count instrumentation, and a batch CLI.
"""

from .backtrack import (
    ORACLE_MAX_WORDS,
    AnalysisSet,
    EnumerationBoundError,
    oracle_enumerate,
    parse_all,
    parse_first,
    random_tree,
    random_tree_sentence,
    worst_case_chain,
)
from .cli import TreeRenderError, main, render_tree
from .core import (
    Analysis,
    Link,
    Sentence,
    Word,
    check_uniqueness,
    check_unity,
    comprises,
    is_projective,
    is_subordinate,
    make_sentence,
)
from .grammar import (
    EITHER,
    POST,
    PRE,
    Grammar,
    GrammarFormatError,
    LinkRule,
    QueryCounter,
    RuleGrammar,
    TreeBackedGrammar,
    UnknownWordError,
    load_grammar,
)
from .parsers import (
    ALGORITHMS,
    ParseOutcome,
    ParseState,
    parse,
    parse_esd,
    parse_esdu,
    parse_esh,
    parse_eshu,
    parse_lsu,
    parse_lsup,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "Analysis",
    "AnalysisSet",
    "EITHER",
    "EnumerationBoundError",
    "Grammar",
    "GrammarFormatError",
    "Link",
    "LinkRule",
    "ORACLE_MAX_WORDS",
    "POST",
    "PRE",
    "ParseOutcome",
    "ParseState",
    "QueryCounter",
    "RuleGrammar",
    "Sentence",
    "TreeBackedGrammar",
    "TreeRenderError",
    "UnknownWordError",
    "Word",
    "check_uniqueness",
    "check_unity",
    "comprises",
    "is_projective",
    "is_subordinate",
    "load_grammar",
    "main",
    "make_sentence",
    "oracle_enumerate",
    "parse",
    "parse_all",
    "parse_esd",
    "parse_esdu",
    "parse_esh",
    "parse_eshu",
    "parse_first",
    "parse_lsu",
    "parse_lsup",
    "random_tree",
    "random_tree_sentence",
    "render_tree",
    "worst_case_chain",
]
