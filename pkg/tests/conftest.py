import time

import pytest

_RESULTS = []


class Criterion:
    def __init__(self, number, title, limit):
        self.number = number
        self.title = title
        self.limit = limit
        self.notes = []
        self.problems = []
        self.elapsed = None

    def note(self, text):
        self.notes.append(text)

    def require(self, ok, text):
        if not ok:
            self.problems.append(text)

    @property
    def ok(self):
        return not self.problems and self.elapsed is not None and self.elapsed < self.limit

    def line(self):
        verdict = "PASS" if self.ok else "FAIL"
        timing = "%.1fs < %gs" % (self.elapsed, self.limit) if self.elapsed < self.limit else \
            "%.1fs exceeds %gs" % (self.elapsed, self.limit)
        text = "; ".join(self.problems or self.notes)
        return "criterion %2d %s  %-42s [%s] %s" % (self.number, verdict, self.title, timing, text)


@pytest.fixture
def criterion():
    """Context for one acceptance criterion: time the body, collect problems, print a verdict line."""
    made = []

    def start(number, title, limit):
        c = Criterion(number, title, limit)
        c._t0 = time.perf_counter()
        made.append(c)
        return c

    def finish(c):
        c.elapsed = time.perf_counter() - c._t0
        _RESULTS.append(c)
        print(c.line())
        assert c.elapsed < c.limit, c.line()
        assert not c.problems, c.line()

    start.finish = finish
    return start


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(_RESULTS, key=lambda c: c.number):
        terminalreporter.write_line(c.line())
