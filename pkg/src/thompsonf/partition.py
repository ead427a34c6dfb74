"""Five-way partition of F by the leading syllables of the normal form.

    F1  x0^k, k >= 0 (the identity included)
    F2  begins x0^k x1^l, k > 0, l != 0
    F3  begins with a negative power of x0 (pure powers x0^-k included)
    F4  begins x1^k, k > 0
    F5  begins x1^-k, k > 0

The projection p_k onto the span of sector k keeps a basis vector iff its
normal form classifies as k.
"""

import enum

__all__ = ["ClassId", "classify", "sector_of"]


class ClassId(enum.IntEnum):
    F1 = 1
    F2 = 2
    F3 = 3
    F4 = 4
    F5 = 5

    def __str__(self):
        return self.name


def classify(nf):
    """Sector of a normal form.  Only the first two syllables are read,
    so the argument must already be normalized."""
    if not nf:
        return ClassId.F1
    gen, exp = nf[0]
    if gen == 0:
        if exp < 0:
            return ClassId.F3
        return ClassId.F2 if len(nf) > 1 else ClassId.F1
    return ClassId.F4 if exp > 0 else ClassId.F5


def sector_of(name):
    """``"F3"`` or ``3`` -> ClassId.F3."""
    if isinstance(name, ClassId):
        return name
    if isinstance(name, str):
        return ClassId[name.upper()]
    return ClassId(name)
