"""Exact piecewise-linear homeomorphisms of [0, 1] with dyadic breakpoints.

Every element of F acts on the unit interval by such a map, and two words
are equal in F exactly when their maps agree.  This module is the equality
oracle used to check the rewriting code; it never looks at normal forms.

A map is stored as a scale ``k`` and integer breakpoints ``(X, Y)``, the
real breakpoint being ``(X / 2**k, Y / 2**k)``.  The representation is kept
canonical (smallest ``k``, no breakpoint where the slope is unchanged), so
map equality is tuple equality.

Words act on the left: ``word_to_map(a * b) == compose(word_to_map(a),
word_to_map(b))`` with ``compose(f, g)`` meaning ``f o g``.
"""

from fractions import Fraction
from functools import lru_cache

from .words import X0, X1, as_word

__all__ = [
    "DyadicPL", "IDENTITY", "generator_map", "compose", "invert_map",
    "word_to_map", "maps_equal", "dyadic",
]


def dyadic(num, k):
    """Canonical ``(num, k)`` with num odd, or ``(0, 0)``."""
    if num == 0:
        return 0, 0
    tz = (num & -num).bit_length() - 1
    shift = min(tz, k)
    return num >> shift, k - shift


class DyadicPL:
    __slots__ = ("k", "points", "_hash")

    def __init__(self, k, points):
        self.k = k
        self.points = tuple(points)
        self._hash = None

    @classmethod
    def from_breakpoints(cls, pairs):
        """Build from ``(x, y)`` pairs of Fractions (or ints/strings)."""
        pairs = [(Fraction(x), Fraction(y)) for x, y in pairs]
        k = 0
        for x, y in pairs:
            for v in (x, y):
                d = v.denominator
                if d & (d - 1):
                    raise ValueError(f"{v} is not dyadic")
                k = max(k, d.bit_length() - 1)
        pts = [(int(x * 2**k), int(y * 2**k)) for x, y in pairs]
        return _canonical(k, pts)

    def breakpoints(self):
        den = 2**self.k
        return [(Fraction(x, den), Fraction(y, den)) for x, y in self.points]

    def slopes(self):
        """Slopes as exponents of 2, one per segment."""
        out = []
        for (xa, ya), (xb, yb) in zip(self.points, self.points[1:]):
            out.append(_log2_ratio(yb - ya, xb - xa))
        return out

    def __call__(self, x):
        """Evaluate at a dyadic point."""
        x = Fraction(x)
        for (xa, ya), (xb, yb) in zip(self.breakpoints(), self.breakpoints()[1:]):
            if xa <= x <= xb:
                return ya + (x - xa) * (yb - ya) / (xb - xa)
        raise ValueError(f"{x} is outside [0, 1]")

    def dump(self):
        """Breakpoints as ``num/2^k`` pairs, one per line."""
        lines = []
        for x, y in self.points:
            xn, xk = dyadic(x, self.k)
            yn, yk = dyadic(y, self.k)
            lines.append(f"{xn}/2^{xk} {yn}/2^{yk}")
        return "\n".join(lines)

    def __eq__(self, other):
        if not isinstance(other, DyadicPL):
            return NotImplemented
        return self.k == other.k and self.points == other.points

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, self.points))
        return self._hash

    def __repr__(self):
        bp = ", ".join(f"({x}, {y})" for x, y in self.breakpoints())
        return f"DyadicPL([{bp}])"


def _log2_ratio(num, den):
    if num >= den:
        q, r = divmod(num, den)
        e = q.bit_length() - 1
        if r or q != 1 << e:
            raise ValueError("slope is not a power of 2")
        return e
    q, r = divmod(den, num)
    e = q.bit_length() - 1
    if r or q != 1 << e:
        raise ValueError("slope is not a power of 2")
    return -e


def _canonical(k, pts):
    # drop breakpoints where the slope does not change
    out = [pts[0]]
    for j in range(1, len(pts) - 1):
        xa, ya = out[-1]
        xb, yb = pts[j]
        xc, yc = pts[j + 1]
        if (yb - ya) * (xc - xb) != (yc - yb) * (xb - xa):
            out.append(pts[j])
    out.append(pts[-1])
    bits = 0
    for x, y in out:
        bits |= x | y
    tz = (bits & -bits).bit_length() - 1
    shift = min(k, tz)
    if shift:
        out = [(x >> shift, y >> shift) for x, y in out]
    return DyadicPL(k - shift, out)


IDENTITY = DyadicPL(0, ((0, 0), (1, 1)))

_GENERATORS = {
    X0: DyadicPL(2, ((0, 0), (2, 1), (3, 2), (4, 4))),
    X1: DyadicPL(3, ((0, 0), (4, 4), (6, 5), (7, 6), (8, 8))),
}


def generator_map(gen):
    """x0: 1/2 -> 1/4, 3/4 -> 1/2.  x1: identity on [0, 1/2], a copy of x0 on [1/2, 1]."""
    return _GENERATORS[gen]


def compose(f, g):
    """Exact composition ``f o g`` (apply g first)."""
    if g is IDENTITY or g == IDENTITY:
        return f
    if f is IDENTITY or f == IDENTITY:
        return g
    sg = g.slopes()
    sf = f.slopes()
    k = max(f.k, g.k) + max(0, max(sg)) + max(0, -min(sf))
    gs = k - g.k
    fs = k - f.k
    gp = [(x << gs, y << gs) for x, y in g.points]
    fp = [(x << fs, y << fs) for x, y in f.points]

    # merge g's y-values with f's x-values; both run over [0, 2^k]
    pts = []
    a = b = 0
    na, nb = len(gp) - 1, len(fp) - 1
    while True:
        u = min(gp[a][1], fp[b][0])
        # a, b index the next unconsumed breakpoints, so u sits in the segment ending there
        ga = max(a - 1, 0)
        fb = max(b - 1, 0)
        gx0, gy0 = gp[ga]
        gx1, gy1 = gp[ga + 1]
        fx0, fy0 = fp[fb]
        fx1, fy1 = fp[fb + 1]
        x = gx0 + (u - gy0) * (gx1 - gx0) // (gy1 - gy0)
        z = fy0 + (u - fx0) * (fy1 - fy0) // (fx1 - fx0)
        pts.append((x, z))
        if a == na and b == nb:
            break
        if gp[a][1] == u:
            a += 1
        if fp[b][0] == u:
            b += 1
        a = min(a, na)
        b = min(b, nb)
    return _canonical(k, pts)


def invert_map(f):
    return DyadicPL(f.k, tuple((y, x) for x, y in f.points))


@lru_cache(maxsize=4096)
def _power_map(gen, exp):
    if exp == 0:
        return IDENTITY
    if exp < 0:
        return invert_map(_power_map(gen, -exp))
    if exp == 1:
        return _GENERATORS[gen]
    half = _power_map(gen, exp // 2)
    sq = compose(half, half)
    return compose(sq, _GENERATORS[gen]) if exp % 2 else sq


def word_to_map(w):
    """Image of a word (or its text) under the action on [0, 1]."""
    f = IDENTITY
    for gen, exp in as_word(w):
        f = compose(f, _power_map(int(gen), exp))
    return f


def maps_equal(f, g):
    return f == g
