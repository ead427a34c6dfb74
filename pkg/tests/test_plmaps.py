from fractions import Fraction as Q

import pytest
from hypothesis import given

from thompsonf.plmaps import (
    IDENTITY, DyadicPL, compose, dyadic, generator_map, invert_map, maps_equal, word_to_map,
)
from thompsonf.selftest import eq_identities, infinite_generator, relators
from thompsonf.words import X0, X1, concat, parse_word

from .conftest import random_word, words

M = lambda text: word_to_map(parse_word(text))  # noqa: E731


def _well_formed(f):
    bp = f.breakpoints()
    assert bp[0] == (0, 0) and bp[-1] == (1, 1)
    assert all(a[0] < b[0] and a[1] < b[1] for a, b in zip(bp, bp[1:]))
    slopes = f.slopes()  # raises unless every slope is a power of 2
    assert all(a != b for a, b in zip(slopes, slopes[1:]))


def test_generators():
    assert generator_map(X0).breakpoints() == [(0, 0), (Q(1, 2), Q(1, 4)), (Q(3, 4), Q(1, 2)), (1, 1)]
    assert generator_map(X0).slopes() == [-1, 0, 1]
    f1 = generator_map(X1)
    assert f1.breakpoints() == [(0, 0), (Q(1, 2), Q(1, 2)), (Q(3, 4), Q(5, 8)), (Q(7, 8), Q(3, 4)), (1, 1)]
    # on [1/2, 1], x1 is x0 rescaled
    for x in (Q(1, 2), Q(5, 8), Q(3, 4), Q(7, 8), Q(15, 16), 1):
        assert f1(x) == Q(1, 2) + generator_map(X0)(2 * x - 1) / 2
    assert compose(generator_map(X0), invert_map(generator_map(X0))) == IDENTITY


def test_compose_examples():
    f = generator_map(X0)
    assert compose(IDENTITY, f) == f
    assert compose(f, invert_map(f)) == IDENTITY
    sq = compose(f, f)
    assert sq.slopes()[0] == -2  # slope 1/4 at 0
    assert sq(Q(1, 2)) == Q(1, 8)


def test_invert_examples():
    assert invert_map(IDENTITY) == IDENTITY
    inv = invert_map(generator_map(X0))
    assert inv.breakpoints() == [(0, 0), (Q(1, 4), Q(1, 2)), (Q(1, 2), Q(3, 4)), (1, 1)]
    assert invert_map(inv) == generator_map(X0)


def test_word_to_map_examples():
    assert word_to_map(parse_word("e")) == IDENTITY
    a = parse_word("x0 x1^-1")
    b = parse_word("x0^-1 x1 x0")
    comm = concat(concat(a, b), concat(a.inverse(), b.inverse()))
    assert word_to_map(comm) == IDENTITY
    assert M("x1 x0 x1") == M("x0 x1 x0^-2 x1 x0^2")


def test_maps_equal_examples():
    assert maps_equal(IDENTITY, IDENTITY)
    assert not maps_equal(generator_map(X0), generator_map(X1))
    assert maps_equal(M("x1^-1 x0^2 x1"), M("x0^2 x1 x0^-3 x1^-1 x0^3"))


def test_relators_and_infinite_presentation():
    for r in relators():
        assert word_to_map(r) == IDENTITY
    for i in range(5):
        for j in range(i + 1, 5):
            xj, xi, xj1 = (infinite_generator(k) for k in (j, i, j + 1))
            assert word_to_map(concat(xj, xi)) == word_to_map(concat(xi, xj1))


def test_faithful_on_small_words():
    # nontrivial short words are not relators (shortest relator has length 10)
    assert M("x0 x1 x0^-1 x1^-1") != IDENTITY
    assert M("x1^3") != IDENTITY


@pytest.mark.parametrize("i", range(1, 7))
def test_rewrite_identities(i):
    for lhs, rhs in eq_identities(i):
        assert word_to_map(lhs) == word_to_map(rhs)


def test_homomorphism_random_pairs(rng):
    for _ in range(1000):
        a, b = random_word(rng, 20), random_word(rng, 20)
        fa, fb = word_to_map(a), word_to_map(b)
        fab = word_to_map(concat(a, b))
        assert fab == compose(fa, fb)
    _well_formed(fab)


@given(words, words)
def test_invariants_preserved(a, b):
    f, g = word_to_map(a), word_to_map(b)
    for h in (compose(f, g), invert_map(f), compose(invert_map(g), f)):
        _well_formed(h)


def test_from_breakpoints_and_dump():
    f = DyadicPL.from_breakpoints([(0, 0), ("1/2", "1/4"), ("3/4", "1/2"), ("7/8", "3/4"), (1, 1)])
    # the slope-preserving breakpoint at 7/8 is dropped
    assert f == generator_map(X0)
    assert f.dump().splitlines() == ["0/2^0 0/2^0", "1/2^1 1/2^2", "3/2^2 1/2^1", "1/2^0 1/2^0"]
    assert dyadic(12, 4) == (3, 2)
    assert dyadic(0, 5) == (0, 0)
    with pytest.raises(ValueError):
        DyadicPL.from_breakpoints([(0, 0), ("1/3", "1/2"), (1, 1)])
