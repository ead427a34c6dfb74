"""Guba-Sapir normal forms by rewriting forbidden subwords.

A reduced word is in normal form when it contains none of

    x1 x0^i x1,  x1^-1 x0^i x1,  x1 x0^(i+1) x1^-1,  x1^-1 x0^(i+1) x1^-1

for i >= 1.  In run-length terms a syllable triple ``(x1^a, x0^H, x1^L)``
is forbidden iff ``H >= 1 and L > 0`` or ``H >= 2 and L < 0``; the sign of
``a`` only picks the type.  The normalizer repeatedly rewrites the leftmost
occurrence ``x1^sigma x0^H x1^L`` (one letter taken from the left x1-run)
with one of the four closed forms below.
"""

import enum
import os
from dataclasses import dataclass

from .errors import InvalidShape, IterationLimitExceeded, NotInF2
from .words import Word, as_word, format_word

__all__ = [
    "ForbiddenType", "Occurrence", "F2Shape", "find_forbidden",
    "rewrite_occurrence", "normalize", "is_normal", "f2_shape",
    "replacement", "DEFAULT_MAX_STEPS",
]

DEFAULT_MAX_STEPS = 10**6


class ForbiddenType(enum.Enum):
    T1 = "x1 x0^i x1"
    T2 = "x1^-1 x0^i x1"
    T3 = "x1 x0^(i+1) x1^-1"
    T4 = "x1^-1 x0^(i+1) x1^-1"


@dataclass(frozen=True)
class Occurrence:
    index: int  # syllable index of the left x1-run
    sigma: int
    H: int
    L: int

    @property
    def ftype(self):
        if self.L > 0:
            return ForbiddenType.T1 if self.sigma > 0 else ForbiddenType.T2
        return ForbiddenType.T3 if self.sigma > 0 else ForbiddenType.T4


def _forbidden(H, L):
    return (L > 0 and H >= 1) or (L < 0 and H >= 2)


def _scan(syl, start):
    for s in range(start, len(syl) - 2):
        gen, _ = syl[s]
        if gen == 1:
            H = syl[s + 1][1]
            L = syl[s + 2][1]
            if (L > 0 and H >= 1) or (L < 0 and H >= 2):
                return s
    return -1


def find_forbidden(w, start=0):
    """Leftmost forbidden occurrence in ``w`` (at syllable index >= start), or None."""
    s = _scan(w, start)
    if s < 0:
        return None
    a = w[s][1]
    return Occurrence(s, 1 if a > 0 else -1, w[s + 1][1], w[s + 2][1])


def is_normal(w):
    return _scan(w, 0) < 0


def replacement(sigma, H, L):
    """Normal form of ``x1^sigma x0^H x1^L`` as a syllable list, and its rule name.

    f1/f3 apply when H+L > 0, f2/f4 when H+L <= 0 (sigma -1 / +1 respectively).
    """
    if H + L > 0:
        rhs = [(0, H), (1, L), (0, -H - L), (1, sigma), (0, H + L)]
        return rhs, ("f3" if sigma > 0 else "f1")
    if H < 2:
        raise AssertionError(f"closed form for H+L <= 0 needs H >= 2, got H={H}")
    rhs = [(0, H), (1, 1 - H), (0, -1), (1, sigma), (0, 1), (1, H + L - 1)]
    return rhs, ("f4" if sigma > 0 else "f2")


def _splice(syl, occ_index, sigma, rhs):
    """Rewrite in place of syllables occ_index..occ_index+2.

    Returns the new syllable list and the length of the prefix that was left
    untouched, so the caller can resume scanning just before it.
    """
    a = syl[occ_index][1]
    stack = syl[:occ_index]
    if a != sigma:
        stack.append((1, a - sigma))
    low = len(stack)
    tail = syl[occ_index + 3:]
    items = rhs + tail
    n = len(items)
    k = 0
    while k < n:
        gen, exp = items[k]
        k += 1
        if stack and stack[-1][0] == gen:
            total = stack[-1][1] + exp
            if total:
                stack[-1] = (gen, total)
                if len(stack) - 1 < low:
                    low = len(stack) - 1
            else:
                stack.pop()
                if len(stack) < low:
                    low = len(stack)
        else:
            stack.append((gen, exp))
            if k > len(rhs):
                # the rest of the tail is already reduced
                stack.extend(items[k:])
                break
    return stack, low


def rewrite_occurrence(w, occ):
    """Apply the closed form to one occurrence and freely reduce."""
    w = as_word(w)
    rhs, _ = replacement(occ.sigma, occ.H, occ.L)
    syl, _ = _splice(list(w), occ.index, occ.sigma, rhs)
    return Word._trusted(tuple(syl))


def _step_cap():
    env = os.environ.get("THOMPSON_NF_MAX_STEPS")
    return int(env) if env else DEFAULT_MAX_STEPS


def _normalize_from(syl, start, max_steps=DEFAULT_MAX_STEPS):
    """Fast path: ``syl`` is a reduced syllable list known to be free of
    forbidden triples before index ``start``."""
    steps = 0
    while True:
        s = _scan(syl, start)
        if s < 0:
            return Word._trusted(tuple(syl))
        steps += 1
        if steps > max_steps:
            raise IterationLimitExceeded(
                f"normal form of {format_word(syl)} not reached after {max_steps} rewrite steps")
        a = syl[s][1]
        sigma = 1 if a > 0 else -1
        rhs, _ = replacement(sigma, syl[s + 1][1], syl[s + 2][1])
        syl, low = _splice(syl, s, sigma, rhs)
        start = max(0, low - 2)


def normalize(w, max_steps=None, trace=None, check=False):
    """Guba-Sapir normal form of ``w``.

    ``trace``, when a list, receives one dict per rewrite step with keys
    step, rule, before, after.  ``check=True`` compares the interval maps
    before and after every step (slow; meant for tests).
    Raises IterationLimitExceeded after ``max_steps`` rewrites.
    """
    w = as_word(w)
    cap = _step_cap() if max_steps is None else max_steps
    syl = list(w)
    start = 0
    steps = 0
    if check:
        from .plmaps import word_to_map
        target = word_to_map(w)
    while True:
        s = _scan(syl, start)
        if s < 0:
            return Word._trusted(tuple(syl))
        steps += 1
        if steps > cap:
            raise IterationLimitExceeded(
                f"normal form of {format_word(w)} not reached after {cap} rewrite steps")
        a = syl[s][1]
        sigma = 1 if a > 0 else -1
        rhs, rule = replacement(sigma, syl[s + 1][1], syl[s + 2][1])
        before = syl
        syl, low = _splice(syl, s, sigma, rhs)
        start = max(0, low - 2)
        if trace is not None:
            trace.append({"step": steps, "rule": rule,
                          "before": format_word(before), "after": format_word(syl)})
        if check and word_to_map(syl) != target:
            raise AssertionError(f"rewrite step {steps} ({rule}) changed the element")


@dataclass(frozen=True)
class F2Shape:
    """``x0^h x1^l x0^p1 x1^q1 ... x0^pm x1^qm x0^tail``; tail 0 means no trailing x0."""

    h: int
    l: int
    blocks: tuple = ()
    tail: int = 0

    def validate(self):
        if self.h <= 0 or self.l == 0:
            raise InvalidShape(f"need h > 0 and l != 0, got h={self.h}, l={self.l}")
        for t, (p, q) in enumerate(self.blocks, 1):
            if p == 0 or q == 0 or p > 1 or (p == 1 and q > 0):
                raise InvalidShape(f"block {t} = (p={p}, q={q}) violates 0 != p <= 1, q != 0, p = 1 only if q < 0")
        return self

    def to_word(self):
        syl = [(0, self.h), (1, self.l)]
        for p, q in self.blocks:
            syl += [(0, p), (1, q)]
        if self.tail:
            syl.append((0, self.tail))
        return Word._trusted(tuple(syl))


def f2_shape(nf):
    """Read off the F2 decomposition of a normal form beginning x0^h x1^l, h > 0."""
    nf = as_word(nf)
    if len(nf) < 2 or nf[0][0] != 0 or nf[0][1] <= 0:
        raise NotInF2(f"{format_word(nf)} does not begin with x0^h x1^l, h > 0")
    rest = nf[2:]
    blocks = tuple((rest[k][1], rest[k + 1][1]) for k in range(0, len(rest) - 1, 2))
    tail = rest[-1][1] if len(rest) % 2 else 0
    return F2Shape(nf[0][1], nf[1][1], blocks, tail).validate()
