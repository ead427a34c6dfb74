"""Truncated conjugated-generator operators on Cayley balls of F.

For a sector choice ``P`` the operator

    A = sum_{i=1}^{n} x0^i x1 P x0^-i

acts on the left regular representation.  We compress it to the span of
the ball ``B_R`` (images leaving the ball are dropped), so every estimate
is a lower bound for the true operator norm and grows with R.

Typical use::

    basis = enumerate_ball(8)
    images = conjugate_images(basis, n_max=4)
    op = build_operator(4, Sector.FULL, basis, images)
    operator_norm(op).value
"""

import enum
import math
import multiprocessing
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import BudgetExceeded
from .partition import ClassId, classify
from .rewrite import _normalize_from
from .words import Word, as_word

__all__ = [
    "Basis", "Sector", "ImageTable", "TruncatedOperator", "NormEstimate",
    "enumerate_ball", "apply_conjugated_generator", "conjugate_images",
    "build_operator", "operator_norm", "DEFAULT_ELEMENT_CAP",
]

DEFAULT_ELEMENT_CAP = 5_000_000

_LETTERS = ((0, 1), (0, -1), (1, 1), (1, -1))


class Sector(enum.Enum):
    FULL = "Full"
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    PCOMPLEMENT = "PComplement"

    def admits(self, cls):
        if self is Sector.FULL:
            return True
        if self is Sector.PCOMPLEMENT:
            return cls != ClassId.F2
        return cls == ClassId[self.value]

    def mask(self, cls_array):
        """Vectorized ``admits`` over an int array of ClassId values."""
        if self is Sector.FULL:
            return np.ones(cls_array.shape, dtype=bool)
        if self is Sector.PCOMPLEMENT:
            return cls_array != ClassId.F2
        return cls_array == ClassId[self.value]

    @classmethod
    def parse(cls, name):
        if isinstance(name, Sector):
            return name
        for s in cls:
            if s.value.lower() == str(name).lower():
                return s
        raise ValueError(f"unknown sector {name!r}")

    def __str__(self):
        return self.value


@dataclass
class Basis:
    """Elements of the ball of a given radius, sphere by sphere in BFS order."""

    radius: int
    elements: list
    index: dict
    sphere_sizes: list

    def __len__(self):
        return len(self.elements)

    def size(self, r):
        """Number of elements of word length <= r."""
        return sum(self.sphere_sizes[: r + 1])

    def position(self, w):
        return self.index.get(as_word(w))

    def restrict(self, r):
        if r > self.radius:
            raise ValueError(f"ball of radius {self.radius} does not contain radius {r}")
        k = self.size(r)
        elements = self.elements[:k]
        return Basis(r, elements, {w: j for j, w in enumerate(elements)}, self.sphere_sizes[: r + 1])


def enumerate_ball(radius, element_cap=DEFAULT_ELEMENT_CAP, check_oracle=False):
    """Breadth-first ball around e under right multiplication by x0^+-1, x1^+-1.

    Elements are deduplicated by normal form.  With ``check_oracle`` every
    new element is also deduplicated by its interval map and the two
    verdicts must agree.
    """
    e = Word()
    elements = [e]
    index = {e: 0}
    sphere_sizes = [1]
    if check_oracle:
        from .plmaps import IDENTITY, compose, generator_map
        gmaps = {(g, s): generator_map(g) if s > 0 else _inv(generator_map(g)) for g, s in _LETTERS}
        maps = [IDENTITY]
        seen_maps = {IDENTITY: 0}
    frontier_start = 0
    for _ in range(radius):
        frontier_end = len(elements)
        for j in range(frontier_start, frontier_end):
            g = elements[j]
            for letter in _LETTERS:
                nb = _right_multiply(g, letter)
                known = nb in index
                if check_oracle:
                    fm = compose(maps[j], gmaps[letter])
                    if known != (fm in seen_maps) or (known and seen_maps[fm] != index[nb]):
                        raise AssertionError(f"normal form and interval map disagree on {nb}")
                if known:
                    continue
                index[nb] = len(elements)
                elements.append(nb)
                if check_oracle:
                    seen_maps[fm] = len(maps)
                    maps.append(fm)
                if len(elements) > element_cap:
                    raise BudgetExceeded(f"ball of radius {radius} exceeds {element_cap} elements")
        sphere_sizes.append(len(elements) - frontier_end)
        frontier_start = frontier_end
    return Basis(radius, elements, index, sphere_sizes)


def _inv(f):
    from .plmaps import invert_map
    return invert_map(f)


def _right_multiply(g, letter):
    syl = list(g)
    gen, exp = letter
    if syl and syl[-1][0] == gen:
        total = syl[-1][1] + exp
        if total:
            syl[-1] = (gen, total)
        else:
            syl.pop()
            return Word._trusted(tuple(syl))
    else:
        syl.append(letter)
    return _normalize_from(syl, max(0, len(syl) - 3))


def _conjugate_image(i, g):
    """(class of x0^-i g, normal form of x0^i x1 x0^-i g)."""
    s = _normalize_from(_left_x0(-i, g), 0)
    cls = classify(s)
    if s and s[0][0] == 1:
        syl = [(1, s[0][1] + 1)] if s[0][1] != -1 else []
        syl += s[1:]
    else:
        syl = [(1, 1)] + list(s)
    head = _normalize_from(syl, 0)
    return cls, _normalize_from(_left_x0(i, head), 0)


def _left_x0(q, g):
    if g and g[0][0] == 0:
        total = g[0][1] + q
        return ([(0, total)] if total else []) + list(g[1:])
    return [(0, q)] + list(g)


def apply_conjugated_generator(i, sector, g):
    """``x0^i x1 p x0^-i`` applied to the basis vector of g; None if the projection kills it."""
    sector = Sector.parse(sector)
    cls, image = _conjugate_image(i, as_word(g))
    return image if sector.admits(cls) else None


@dataclass
class ImageTable:
    """For each i, the row index of x0^i x1 x0^-i g (or -1 outside the ball)
    and the sector of x0^-i g, for every basis element g."""

    n_max: int
    rows: np.ndarray  # shape (n_max, N), int64
    classes: np.ndarray  # shape (n_max, N), int8


_POOL_STATE = {}


def _image_chunk(bounds):
    lo, hi = bounds
    basis, n_max = _POOL_STATE["basis"], _POOL_STATE["n_max"]
    return _images_range(basis, n_max, lo, hi)


def _images_range(basis, n_max, lo, hi):
    index = basis.index
    elements = basis.elements
    rows = np.full((n_max, hi - lo), -1, dtype=np.int64)
    classes = np.zeros((n_max, hi - lo), dtype=np.int8)
    for col in range(lo, hi):
        g = elements[col]
        for i in range(1, n_max + 1):
            cls, image = _conjugate_image(i, g)
            classes[i - 1, col - lo] = cls
            rows[i - 1, col - lo] = index.get(image, -1)
    return rows, classes


def conjugate_images(basis, n_max, threads=1):
    """Tabulate the action of x0^i x1 x0^-i, i = 1..n_max, on the basis.

    With ``threads > 1`` columns are split into fixed chunks processed by
    forked workers; chunks are merged in order so the table is identical.
    """
    N = len(basis)
    if threads <= 1 or N < 10_000 or "fork" not in multiprocessing.get_all_start_methods():
        rows, classes = _images_range(basis, n_max, 0, N)
        return ImageTable(n_max, rows, classes)
    step = math.ceil(N / (4 * threads))
    chunks = [(lo, min(N, lo + step)) for lo in range(0, N, step)]
    _POOL_STATE.update(basis=basis, n_max=n_max)
    try:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(threads) as pool:
            parts = pool.map(_image_chunk, chunks)
    finally:
        _POOL_STATE.clear()
    rows = np.concatenate([p[0] for p in parts], axis=1)
    classes = np.concatenate([p[1] for p in parts], axis=1)
    return ImageTable(n_max, rows, classes)


@dataclass
class TruncatedOperator:
    n: int
    sector: Sector
    basis_radius: int
    matrix: sp.csc_matrix = field(repr=False)

    @property
    def shape(self):
        return self.matrix.shape

    def column_rows(self, col):
        m = self.matrix
        return sorted(m.indices[m.indptr[col]: m.indptr[col + 1]].tolist())


def build_operator(n, sector, basis, images=None, radius=None):
    """Compression of sum_{i<=n} x0^i x1 p x0^-i to the ball.

    ``radius`` (<= basis.radius) selects a sub-ball; since BFS order lists
    spheres in turn, the sub-ball is a leading block of the basis.
    """
    sector = Sector.parse(sector)
    if images is None or images.n_max < n:
        images = conjugate_images(basis, n)
    R = basis.radius if radius is None else radius
    N = basis.size(R)
    rows = images.rows[:n, :N]
    keep = sector.mask(images.classes[:n, :N]) & (rows >= 0) & (rows < N)
    cols = np.broadcast_to(np.arange(N), rows.shape)
    r = rows[keep]
    c = cols[keep]
    data = np.ones(r.shape[0], dtype=np.float64)
    matrix = sp.csc_matrix((data, (r, c)), shape=(N, N))
    matrix.sort_indices()
    return TruncatedOperator(n, sector, R, matrix)


@dataclass
class NormEstimate:
    value: float
    iterations: int
    residual: float
    converged: bool


def operator_norm(op, tol=1e-10, max_iter=100_000, seed=0):
    """Largest singular value by power iteration on A^T A.

    The start vector is strictly positive and fixed by ``seed``.  Stops when
    the Rayleigh quotient changes by less than ``tol`` relative; otherwise
    returns after ``max_iter`` steps with ``converged=False``.
    """
    if tol <= 0 or max_iter <= 0:
        raise ValueError("tol and max_iter must be positive")
    A = op.matrix if isinstance(op, TruncatedOperator) else sp.csr_matrix(op)
    A = sp.csr_matrix(A)
    At = sp.csr_matrix(A.T)
    ncols = A.shape[1]
    if ncols == 0 or A.nnz == 0:
        return NormEstimate(0.0, 0, 0.0, True)
    rng = np.random.default_rng(seed)
    v = rng.uniform(0.5, 1.5, ncols)
    v /= np.linalg.norm(v)
    lam_prev = None
    lam = 0.0
    residual = math.inf
    for it in range(1, max_iter + 1):
        u = A @ v
        lam = float(u @ u)
        w = At @ u
        nw = float(np.linalg.norm(w))
        if nw == 0.0:
            return NormEstimate(0.0, it, 0.0, True)
        residual = float(np.linalg.norm(w - lam * v)) / max(lam, 1e-300)
        if lam_prev is not None and abs(lam - lam_prev) <= tol * lam:
            return NormEstimate(math.sqrt(lam), it, residual, True)
        lam_prev = lam
        v = w / nw
    return NormEstimate(math.sqrt(lam), max_iter, residual, False)
