import random

import pytest
from hypothesis import strategies as st

from thompsonf.partition import ClassId, classify
from thompsonf.rewrite import normalize
from thompsonf.words import concat, free_reduce, x0, x1

LETTERS = [(0, 1), (0, -1), (1, 1), (1, -1)]

letters = st.sampled_from(LETTERS)
raw_words = st.lists(letters, max_size=30)
words = raw_words.map(free_reduce)
normal_forms = st.lists(letters, max_size=24).map(lambda s: normalize(free_reduce(s)))
f2_elements = st.builds(
    lambda h, l, g: normalize(concat(concat(x0(h), x1(l)), g)),
    st.integers(1, 8), st.integers(-4, 4).filter(bool), normal_forms,
).filter(lambda w: classify(w) is ClassId.F2)


def random_word(rng, max_len):
    return free_reduce([rng.choice(LETTERS) for _ in range(rng.randint(0, max_len))])


@pytest.fixture
def rng():
    return random.Random(20261016)


# acceptance reporting: one pass/fail line per criterion

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        ok = report.passed
        prev = _CRITERIA.get(number, (title, True))
        _CRITERIA[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
