from __future__ import annotations

from hypothesis import strategies as st

from braidcert import BraidWord

# Pass/fail lines recorded by the acceptance tests; echoed after the run
# so they are visible even under captured output.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def letter_lists(strands: int, max_len: int = 40):
    gens = [x for k in range(1, strands) for x in (k, -k)]
    return st.lists(st.sampled_from(gens), max_size=max_len)


@st.composite
def braid_words(draw, min_strands: int = 2, max_strands: int = 5,
                max_len: int = 40) -> BraidWord:
    m = draw(st.integers(min_strands, max_strands))
    return BraidWord(m, tuple(draw(letter_lists(m, max_len))))


@st.composite
def three_braids(draw, max_len: int = 30) -> BraidWord:
    return BraidWord(3, tuple(draw(letter_lists(3, max_len))))
