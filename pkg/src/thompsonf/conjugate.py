"""Closed-form normal forms of ``iw = x0^i x1 x0^-i w`` for w in sector F2.

Write ``w = x0^h x1^l x0^p1 x1^q1 ... x0^pm x1^qm x0^tail``.  Left
multiplying by ``x0^i x1 x0^-i`` creates at most one forbidden subword,
``x1 x0^(h-i) x1^l``.  Rewriting it either pushes the x1 to the right (when
the running sum ``c`` stays positive) or settles in one step.  The engine
below follows the running sums

    c_1 = h - i + l,    c_(t+1) = c_t + p_t + q_t

and assembles the final normal form directly, without intermediate words.
Outcome tags:

    NoForbidden   h <= i, or h - i = 1 and l < 0
    I1 .. I4      the x1 stops in front of block t
    II            the first rewrite already has h - i + l <= 0
    III1, III2    the x1 travels, then a rewrite with c_t <= 0 settles it

Formally the trailing ``x0^tail`` acts as block m+1 with ``q = 0``.
"""

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import EqualInputs, NotForbidden
from .rewrite import F2Shape, _forbidden, f2_shape, is_normal, normalize, replacement
from .words import Word, as_word, format_word, free_reduce

__all__ = [
    "ConjCaseTag", "ConjResult", "prop31_nf", "conjugate_nf",
    "conjugate_word", "audit", "collision_pairs",
]


class ConjCaseTag(enum.Enum):
    NoForbidden = "NoForbidden"
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    II = "II"
    III1 = "III1"
    III2 = "III2"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConjResult:
    nf: Word
    tag: ConjCaseTag
    t: Optional[int] = None
    c: Optional[int] = None
    d: Optional[int] = None

    def as_dict(self):
        return {"iw_nf": format_word(self.nf), "tag": self.tag.value,
                "t": self.t, "c": self.c, "d": self.d}


def prop31_nf(sigma, H, L):
    """Normal form of ``x1^sigma x0^H x1^L`` when that word is forbidden."""
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    if H <= 0 or L == 0 or not _forbidden(H, L):
        raise NotForbidden(f"x1^{sigma} x0^{H} x1^{L} contains no forbidden subword")
    rhs, _ = replacement(sigma, H, L)
    return free_reduce(rhs)


def conjugate_word(i, w):
    """The unreduced product ``x0^i x1 x0^-i w`` as a reduced word."""
    return free_reduce([(0, i), (1, 1), (0, -i)] + list(as_word(w)))


def _block(shape, t):
    m = len(shape.blocks)
    if t <= m:
        return shape.blocks[t - 1]
    if t == m + 1:
        return shape.tail, 0
    return 0, 0


def _flat(blocks):
    out = []
    for p, q in blocks:
        out += [(0, p), (1, q)]
    return out


def conjugate_nf(i, shape):
    """Normal form of ``x0^i x1 x0^-i w`` for w given by its F2 shape.

    The result is certified forbidden-free; agreement with the generic
    normalizer is the subject of the test suite.
    """
    if i <= 0:
        raise ValueError("i must be positive")
    if not isinstance(shape, F2Shape):
        shape = f2_shape(shape)
    shape.validate()
    h, l, blocks, tail = shape.h, shape.l, shape.blocks, shape.tail
    m = len(blocks)
    tail_syl = [(0, tail)]

    if h <= i or (h - i == 1 and l < 0):
        syl = [(0, i), (1, 1), (0, h - i), (1, l)] + _flat(blocks) + tail_syl
        return _certified(syl, ConjCaseTag.NoForbidden)

    H = h - i
    if H + l <= 0:
        d = H - 1
        syl = ([(0, h), (1, 1 - H), (0, -1), (1, 1), (0, 1), (1, H + l - 1)]
               + _flat(blocks) + tail_syl)
        return _certified(syl, ConjCaseTag.II, t=1, d=d)

    c = H + l
    t = 1
    while True:
        p, q = _block(shape, t)
        head = [(0, h), (1, l)] + _flat(blocks[:t - 1])
        after = _flat(blocks[t:]) + tail_syl if t <= m else []
        Hs = c + p
        if not _forbidden(Hs, q):
            if Hs != 0:
                syl = head + [(0, -c), (1, 1), (0, Hs), (1, q)] + after
                return _certified(syl, ConjCaseTag.I1, t=t, c=c)
            if q != -1:
                syl = head + [(0, p), (1, 1 + q)] + after
                return _certified(syl, ConjCaseTag.I2, t=t, c=c)
            p_next, q_next = _block(shape, t + 1)
            beyond = _flat(blocks[t + 1:]) + tail_syl if t + 1 <= m else []
            if p + p_next != 0:
                syl = head + [(0, p + p_next), (1, q_next)] + beyond
                return _certified(syl, ConjCaseTag.I3, t=t, c=c)
            syl = head + [(1, q_next)] + beyond
            return _certified(syl, ConjCaseTag.I4, t=t, c=c)
        if Hs + q > 0:
            c = Hs + q
            t += 1
            continue
        # second closed form at block t; the x1 settles here
        d = Hs - 1
        if d:
            syl = head + [(0, p), (1, -d), (0, -1), (1, 1), (0, 1), (1, d + q)] + after
            return _certified(syl, ConjCaseTag.III1, t=t + 1, d=d)
        syl = head + [(0, p - 1), (1, 1), (0, 1), (1, q)] + after
        return _certified(syl, ConjCaseTag.III2, t=t + 1, d=d)


def _certified(syl, tag, t=None, c=None, d=None):
    nf = free_reduce(syl)
    if not is_normal(nf):
        raise AssertionError(f"case {tag} produced {format_word(nf)}, which is not a normal form")
    return ConjResult(nf, tag, t, c, d)


def audit(i, shape, res):
    """Check the tag's defining restrictions against the shape; return violations."""
    h, l = shape.h, shape.l
    m = len(shape.blocks)
    bad = []

    def need(cond, what):
        if not cond:
            bad.append(f"{res.tag}: {what}")

    def c_at(nu):
        # running sum h - i + l + sum_{k < nu} (p_k + q_k)
        return h - i + l + sum(p + q for p, q in shape.blocks[:nu - 1])

    def step_forbidden(nu):
        # the rewrite at step nu was applicable
        if nu == 0:
            return h - i >= 1 and (h - i > 1 or l > 0)
        p, q = _block(shape, nu)
        return _forbidden(c_at(nu) + p, q)

    tag, t = res.tag, res.t
    if tag is ConjCaseTag.NoForbidden:
        need(h <= i or (h - i == 1 and l < 0), "h <= i or (h-i = 1, l < 0)")
        return bad
    if tag is ConjCaseTag.II:
        need(t == 1, "t = 1")
        need(step_forbidden(0), "x1 x0^(h-i) x1^l forbidden")
        need(h - i + l <= 0, "h-i+l <= 0")
        need(res.d == h - i - 1, "d = h-i-1")
        need(res.d != 0, "d != 0")
        return bad
    if tag in (ConjCaseTag.III1, ConjCaseTag.III2):
        need(t >= 2, "t >= 2")
        for nu in range(t):
            need(step_forbidden(nu), f"forbidden at step {nu}")
        for nu in range(1, t):
            need(c_at(nu) > 0, f"c_{nu} > 0")
        need(c_at(t) <= 0, f"c_{t} <= 0")
        p_prev, q_prev = _block(shape, t - 1)
        need(res.d == c_at(t - 1) + p_prev - 1, "d = c_(t-1) + p_(t-1) - 1")
        if tag is ConjCaseTag.III1:
            need(res.d != 0, "d != 0")
            need(res.d + q_prev < 0, "d + q_(t-1) < 0")
        else:
            need(res.d == 0, "d = 0")
            need(p_prev - 1 < 0, "p_(t-1) - 1 < 0")
        return bad

    # case I
    need(1 <= t <= m + 1, "1 <= t <= m+1")
    c = res.c
    need(c == c_at(t), "c = h-i+l+sum_{k<t}(p_k+q_k)")
    for nu in range(t):
        need(step_forbidden(nu), f"forbidden at step {nu}")
        need(c_at(nu + 1) > 0, f"c_{nu + 1} > 0")
    p, q = _block(shape, t)
    if t <= m:
        need(c + p <= 1 and (c + p < 1 or q < 0), "c+p_t <= 1, '=' only if q_t < 0")
    if tag is ConjCaseTag.I1:
        need(c + p != 0, "c+p_t != 0")
    else:
        need(c + p == 0, "c+p_t = 0")
    if tag is ConjCaseTag.I2:
        need(1 + q != 0, "1+q_t != 0")
    if tag in (ConjCaseTag.I3, ConjCaseTag.I4):
        need(q == -1, "q_t = -1")
        p_next, q_next = _block(shape, t + 1)
        if tag is ConjCaseTag.I3:
            need(p + p_next != 0, "p_t+p_(t+1) != 0")
        else:
            need(p + p_next == 0, "p_t+p_(t+1) = 0")
            if t + 1 <= m:
                q_prev = l if t == 1 else shape.blocks[t - 2][1]
                need(p == -1 and p_next == 1, "p_t = -1, p_(t+1) = 1")
                need(q_next < 0, "q_(t+1) < 0")
                need(q_prev < 0, "q_(t-1) < 0")
    return bad


def collision_pairs(w1, w2, i_max, oracle_check=True):
    """All (i, j) in [1, i_max]^2 with x0^i x1 x0^-i w1 = x0^j x1 x0^-j w2."""
    w1 = normalize(w1)
    w2 = normalize(w2)
    if w1 == w2:
        raise EqualInputs(f"both inputs equal {format_word(w1)}")
    left = {}
    for i in range(1, i_max + 1):
        left.setdefault(normalize(conjugate_word(i, w1)), []).append(i)
    pairs = []
    for j in range(1, i_max + 1):
        for i in left.get(normalize(conjugate_word(j, w2)), ()):
            pairs.append((i, j))
    pairs.sort()
    if oracle_check and pairs:
        from .plmaps import word_to_map
        for i, j in pairs:
            if word_to_map(conjugate_word(i, w1)) != word_to_map(conjugate_word(j, w2)):
                raise AssertionError(f"normal forms agree but maps differ at {(i, j)}")
    return pairs
