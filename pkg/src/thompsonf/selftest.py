"""Oracle checks of the presentation and of every rewrite formula."""

from . import rewrite
from .plmaps import IDENTITY, word_to_map
from .words import Word, concat, invert, parse_word, x0, x1

__all__ = ["relators", "infinite_generator", "run_selftest", "eq_identities"]


def _commutator(a, b):
    return concat(concat(a, b), concat(invert(a), invert(b)))


def relators():
    """The two relators of the finite presentation."""
    a = parse_word("x0 x1^-1")
    return [_commutator(a, parse_word("x0^-1 x1 x0")),
            _commutator(a, parse_word("x0^-2 x1 x0^2"))]


def infinite_generator(n):
    """x_0 = x0 and x_n = x0^-(n-1) x1 x0^(n-1) for n >= 1."""
    if n == 0:
        return x0()
    return concat(concat(x0(-(n - 1)), x1()), x0(n - 1))


def eq_identities(i):
    """The four single-letter rewrite identities at exponent i, as (lhs, rhs) words."""
    return [
        (Word([(1, 1), (0, i), (1, 1)]),
         Word([(0, i), (1, 1), (0, -i - 1), (1, 1), (0, i + 1)])),
        (Word([(1, -1), (0, i), (1, 1)]),
         Word([(0, i), (1, 1), (0, -i - 1), (1, -1), (0, i + 1)])),
        (Word([(1, 1), (0, i + 1), (1, -1)]),
         Word([(0, i + 1), (1, -1), (0, -i), (1, 1), (0, i)])),
        (Word([(1, -1), (0, i + 1), (1, -1)]),
         Word([(0, i + 1), (1, -1), (0, -i), (1, -1), (0, i)])),
    ]


def run_selftest(max_exp=6):
    """Return a list of ``(check name, passed)``."""
    results = []
    for k, r in enumerate(relators(), 1):
        results.append((f"relator {k}", word_to_map(r) == IDENTITY))
    for i in range(5):
        for j in range(i + 1, 5):
            lhs = concat(infinite_generator(j), infinite_generator(i))
            rhs = concat(infinite_generator(i), infinite_generator(j + 1))
            results.append((f"x_{j} x_{i} = x_{i} x_{j + 1}", word_to_map(lhs) == word_to_map(rhs)))
    for i in range(1, max_exp + 1):
        for k, (lhs, rhs) in enumerate(eq_identities(i), 1):
            ok = (word_to_map(lhs) == word_to_map(rhs) and rewrite.is_normal(rhs)
                  and rewrite.normalize(lhs) == rhs)
            results.append((f"identity {k}, i={i}", ok))
    # the closed forms actually used by the rewriter
    for sigma in (1, -1):
        for H in range(1, max_exp + 1):
            for L in range(-max_exp, max_exp + 1):
                if L == 0 or not rewrite._forbidden(H, L):
                    continue
                rhs, rule = rewrite.replacement(sigma, H, L)
                rhs = Word(rhs)
                lhs = Word([(1, sigma), (0, H), (1, L)])
                ok = word_to_map(lhs) == word_to_map(rhs) and rewrite.is_normal(rhs)
                results.append((f"{rule} sigma={sigma} H={H} L={L}", ok))
    return results
