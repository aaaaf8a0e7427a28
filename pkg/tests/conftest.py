import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, max_size=8, min_size=0):
    n = draw(st.integers(min_size, max_size))
    parts = []
    while n:
        p = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(p)
        n -= p
    return tuple(parts)


@st.composite
def laurent_polys(draw, max_terms=5, span=4, coeff=5):
    exps = draw(st.lists(st.integers(-span, span), max_size=max_terms))
    return {e: draw(st.integers(-coeff, coeff)) for e in exps}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
