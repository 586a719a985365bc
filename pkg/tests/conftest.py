import io
import os

import pytest

from wordlink import load_grammar
from wordlink.cli import main as cli_main

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_path(name):
    return os.path.join(DATA, name)


G1_TEXT = """\
word the : D
word dog : N
word barks : V
rule N < D
rule V < N
"""

GC_TEXT = """\
word the : D
word green : N
word house : N
word paint : N
rule N < D
rule N < N
"""


@pytest.fixture
def g1():
    return load_grammar(G1_TEXT)


@pytest.fixture
def gc():
    return load_grammar(GC_TEXT)


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""

    def run(argv, stdin_text=""):
        code = cli_main(argv, stdin=io.StringIO(stdin_text))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
