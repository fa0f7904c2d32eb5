from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")


@st.composite
def partitions(draw, max_part=8, max_len=6):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_len))
    return tuple(sorted(parts, reverse=True))


slopes = st.sampled_from([(1, 1), (2, 1), (1, 2), (3, 2), (2, 3), (3, 1), (1, 3)])
moduli = st.integers(1, 4)


# summary lines from test_acceptance.py, repeated at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
