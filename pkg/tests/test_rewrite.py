import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from thompsonf.errors import InvalidShape, IterationLimitExceeded, NotInF2
from thompsonf.plmaps import word_to_map
from thompsonf.rewrite import (
    F2Shape, ForbiddenType, Occurrence, f2_shape, find_forbidden, is_normal, normalize,
    replacement, rewrite_occurrence,
)
from thompsonf.words import Word, concat, free_reduce, parse_word, x0, x1

from .conftest import normal_forms, random_word, words

W = parse_word


def test_find_forbidden_examples():
    assert find_forbidden(W("x1 x0 x1^-1")) is None
    occ = find_forbidden(W("x1 x0^2 x1^-1"))
    assert occ == Occurrence(0, 1, 2, -1) and occ.ftype is ForbiddenType.T3
    assert find_forbidden(W("x0^5")) is None
    occ = find_forbidden(W("x1^3 x0 x1^2"))
    assert occ == Occurrence(0, 1, 1, 2) and occ.ftype is ForbiddenType.T1


@pytest.mark.parametrize("text, ftype", [
    ("x1 x0^4 x1^3", ForbiddenType.T1),
    ("x1^-2 x0 x1", ForbiddenType.T2),
    ("x1^5 x0^2 x1^-7", ForbiddenType.T3),
    ("x1^-1 x0^3 x1^-1", ForbiddenType.T4),
])
def test_types(text, ftype):
    assert find_forbidden(W(text)).ftype is ftype


def test_leftmost():
    w = W("x0 x1 x0^-1 x1 x0^2 x1 x0^3 x1")
    assert find_forbidden(w).index == 3
    assert find_forbidden(w, start=4).index == 5


def test_h1_exemption():
    for left in ("x1", "x1^-1", "x1^4", "x1^-3"):
        for right in ("x1^-1", "x1^-5"):
            assert is_normal(W(f"{left} x0 {right}"))


@pytest.mark.parametrize("before, after", [
    ("x1 x0 x1", "x0 x1 x0^-2 x1 x0^2"),
    ("x1^-1 x0^2 x1^-1", "x0^2 x1^-1 x0^-1 x1^-1 x0"),
    ("x1^-1 x0^2 x1^-2", "x0^2 x1^-1 x0^-1 x1^-1 x0 x1^-1"),
])
def test_rewrite_occurrence_examples(before, after):
    w = W(before)
    out = rewrite_occurrence(w, find_forbidden(w))
    assert out == W(after)
    assert word_to_map(out) == word_to_map(w)


def test_rewrite_peels_one_letter():
    w = W("x0 x1^3 x0 x1")
    out = rewrite_occurrence(w, find_forbidden(w))
    assert out == W("x0 x1^2 x0 x1 x0^-2 x1 x0^2")


def test_replacement_needs_h2_for_second_form():
    with pytest.raises(AssertionError):
        replacement(1, 1, -1)


@pytest.mark.parametrize("word, nf", [
    ("x0^3", "x0^3"),
    ("x1 x0 x1", "x0 x1 x0^-2 x1 x0^2"),
    ("x1^-1 x0^2 x1", "x0^2 x1 x0^-3 x1^-1 x0^3"),
    ("e", "e"),
])
def test_normalize_examples(word, nf):
    assert normalize(word) == W(nf)


def test_is_normal_examples():
    assert is_normal(W("x1 x0 x1^-1"))
    assert not is_normal(W("x1 x0^3 x1"))
    assert is_normal(W("e"))


def test_normalize_random_with_step_checks(rng):
    for _ in range(300):
        w = random_word(rng, 40)
        nf = normalize(w, check=True)
        assert is_normal(nf)
        assert word_to_map(nf) == word_to_map(w)


def test_trace():
    trace = []
    nf = normalize("x1^-1 x0^2 x1^-2 x0 x1", trace=trace)
    assert [t["step"] for t in trace] == list(range(1, len(trace) + 1))
    assert trace[0]["rule"] == "f2" and trace[0]["before"] == "x1^-1 x0^2 x1^-2 x0 x1"
    assert trace[-1]["after"] == str(nf)
    for t in trace:
        assert word_to_map(W(t["before"])) == word_to_map(W(t["after"]))


def test_step_cap(monkeypatch):
    w = W("x1 x0 x1 x0 x1 x0 x1")
    with pytest.raises(IterationLimitExceeded):
        normalize(w, max_steps=1)
    monkeypatch.setenv("THOMPSON_NF_MAX_STEPS", "1")
    with pytest.raises(IterationLimitExceeded):
        normalize(w)
    monkeypatch.delenv("THOMPSON_NF_MAX_STEPS")
    assert is_normal(normalize(w))


@given(words)
def test_normalize_idempotent_and_sound(w):
    nf = normalize(w)
    assert normalize(nf) == nf
    assert is_normal(nf)
    assert word_to_map(nf) == word_to_map(w)


@given(words)
def test_uniqueness_on_random_pairs(w):
    # w and a rewritten spelling of it share the normal form
    v = concat(concat(w, W("x1 x0 x1")), W("x0^-2 x1^-1 x0^2 x1^-1 x0^-1"))
    assert normalize(v) == normalize(w)


@given(normal_forms, st.integers(-5, 5))
def test_left_x0_power_stays_normal(g, q):
    assert is_normal(concat(x0(q), g))


x1_start = st.builds(lambda k, g: normalize(concat(x1(k), g)),
                     st.integers(-3, 3).filter(bool), normal_forms).filter(lambda g: g and g[0][0] == 1)
neg_x0_start = st.builds(lambda k, g: normalize(concat(x0(-k), g)),
                         st.integers(1, 6), normal_forms).filter(lambda g: g and g[0] < (0, 0))


@given(x1_start, st.integers(-5, 5))
def test_left_x1_power_on_x1_start(g, q):
    assert is_normal(concat(x1(q), g))


@given(neg_x0_start, st.integers(-5, 5).filter(bool))
def test_left_x1_power_on_negative_x0_start(g, q):
    raw = list(x1(q)) + list(g)
    assert free_reduce(raw) == tuple(raw)
    assert is_normal(concat(x1(q), g))


@pytest.mark.parametrize("text, shape", [
    ("x0^2 x1 x0^-2 x1 x0", F2Shape(2, 1, ((-2, 1),), 1)),
    ("x0 x1^-1", F2Shape(1, -1, (), 0)),
    ("x0^3 x1^2 x0 x1^-1 x0^-4", F2Shape(3, 2, ((1, -1),), -4)),
])
def test_f2_shape_examples(text, shape):
    assert f2_shape(normalize(text)) == shape
    assert shape.to_word() == W(text)


@pytest.mark.parametrize("text", ["e", "x0^3", "x0^-1 x1", "x1 x0", "x1^-1"])
def test_f2_shape_rejects(text):
    with pytest.raises(NotInF2):
        f2_shape(W(text))


def test_f2_shape_invalid():
    with pytest.raises(InvalidShape):
        f2_shape(W("x0 x1 x0^2 x1"))
    with pytest.raises(InvalidShape):
        F2Shape(1, 1, ((1, 1),)).validate()


@given(normal_forms)
def test_f2_shape_reassembles(nf):
    assume(len(nf) >= 2 and nf[0][0] == 0 and nf[0][1] > 0)
    shape = f2_shape(nf)
    assert shape.to_word() == nf
    assert isinstance(shape.to_word(), Word)
