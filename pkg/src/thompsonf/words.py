"""Run-length encoded words in the generators x0, x1 of Thompson's group F.

A word is stored as a tuple of syllables ``(gen, exp)`` where ``gen`` is
0 or 1 and ``exp`` is a nonzero integer.  Words kept by this module are
always freely reduced: neighbouring syllables have different generators.
The identity is the empty word, printed ``e``.

    >>> w = parse_word("x0^3 x1^-2")
    >>> w
    Word('x0^3 x1^-2')
    >>> w * w.inverse()
    Word('e')
"""

import enum
import re

from .errors import WordSyntaxError

__all__ = [
    "Gen", "X0", "X1", "Word", "parse_word", "free_reduce", "concat",
    "invert", "format_word", "power", "x0", "x1",
]


class Gen(enum.IntEnum):
    X0 = 0
    X1 = 1


X0 = Gen.X0
X1 = Gen.X1


class Word(tuple):
    """Immutable freely reduced word.

    Calling ``Word(syllables)`` reduces its argument.  Internal code that
    already holds a reduced tuple uses :meth:`_trusted` to skip that pass.
    """

    __slots__ = ()

    def __new__(cls, syllables=()):
        return tuple.__new__(cls, _reduce(syllables))

    @classmethod
    def _trusted(cls, syllables):
        return tuple.__new__(cls, syllables)

    @property
    def syllables(self):
        return tuple(self)

    def letter_length(self):
        """Number of letters x0^{+-1}, x1^{+-1}; the word metric of the ball."""
        return sum(abs(e) for _, e in self)

    def inverse(self):
        return invert(self)

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return concat(self, other)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word('{format_word(self)}')"

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._trusted(tuple.__getitem__(self, item))
        return tuple.__getitem__(self, item)


def _reduce(raw, out=None):
    """Stack-based free reduction; ``out`` is a list already in reduced form."""
    stack = [] if out is None else out
    for gen, exp in raw:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            total = stack[-1][1] + exp
            if total:
                stack[-1] = (stack[-1][0], total)
            else:
                stack.pop()
        else:
            stack.append((int(gen), exp))
    return stack


def free_reduce(raw):
    """Merge equal neighbours and drop zero exponents until canonical."""
    return Word._trusted(tuple(_reduce(raw)))


def concat(a, b):
    """Group product ``a*b`` of two reduced words."""
    if not a:
        return b if isinstance(b, Word) else free_reduce(b)
    if not b:
        return a if isinstance(a, Word) else free_reduce(a)
    return Word._trusted(tuple(_reduce(b, list(a))))


def invert(w):
    return Word._trusted(tuple((g, -e) for g, e in reversed(w)))


def power(gen, exp):
    """The word ``gen^exp`` (empty when exp is 0)."""
    return Word._trusted(((int(gen), exp),) if exp else ())


def x0(exp=1):
    return power(X0, exp)


def x1(exp=1):
    return power(X1, exp)


def format_word(w):
    if not w:
        return "e"
    parts = []
    for gen, exp in w:
        parts.append(f"x{gen}" if exp == 1 else f"x{gen}^{exp}")
    return " ".join(parts)


_TOKEN = re.compile(r"x([01])(?:\^([+-]?\d+))?")


def parse_word(text):
    """Parse text such as ``"x0^3 x1^-2"`` into a reduced :class:`Word`.

    Tokens are ``x0`` or ``x1`` with an optional ``^n`` exponent and are
    separated by spaces.  ``e`` alone denotes the identity.  Raises
    :class:`WordSyntaxError` on malformed input or a zero exponent.
    """
    if text.strip() == "e":
        return Word._trusted(())
    raw = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos] == " ":
            pos += 1
        if pos == n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or (m.end() < n and text[m.end()] != " "):
            raise WordSyntaxError(f"malformed token {text[pos:].split(' ')[0]!r}", pos)
        exp = 1 if m.group(2) is None else int(m.group(2))
        if exp == 0:
            raise WordSyntaxError("exponent 0 is not allowed", m.start(2))
        raw.append((int(m.group(1)), exp))
        pos = m.end()
    if not raw:
        raise WordSyntaxError("empty word (use 'e' for the identity)", 0)
    return free_reduce(raw)


def as_word(w):
    """Accept a Word, a string, or a raw syllable sequence."""
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return parse_word(w)
    return free_reduce(w)
