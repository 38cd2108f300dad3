import re
from pathlib import Path

import pytest

from permutex.words import Order, shift_compare, thue_morse

DATA = Path(__file__).parent / "data"


def tm_letter(i):
    """Thue-Morse letter from the binary digit sum, independent of the morphism."""
    return str(bin(i).count("1") % 2)


def tm_prefix(n):
    return "".join(tm_letter(i) for i in range(n))


def ranks_by_pairwise_comparison(w, a, n, depth=None):
    """Rank of each shift = 1 + number of shifts in the window below it."""
    return tuple(
        1 + sum(shift_compare(w, a + j, a + i, depth) is Order.LESS for j in range(n) if j != i)
        for i in range(n)
    )


def rerank(values):
    ordered = sorted(values)
    return tuple(ordered.index(v) + 1 for v in values)


def load_appendix():
    """{length: {form: [perm strings]}} from the golden listing."""
    blocks = {}
    for line in (DATA / "small_perms.txt").read_text().splitlines():
        if not line.strip():
            continue
        form, _, rest = line.partition(" : ")
        perms = re.findall(r"\[[\d ]+\]", rest)
        blocks.setdefault(len(form) + 1, {})[form] = perms
    return blocks


@pytest.fixture(scope="session")
def T():
    return thue_morse()


@pytest.fixture(scope="session")
def appendix_sets():
    return load_appendix()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
