"""
Semistandard skew tableaux, Littlewood–Richardson tableaux and coefficients,
and two explicit bijections between tableau sets:

* ``rectangle_reduce`` / ``rectangle_extend`` strip or add ``ell`` boxes
  filled with ``i`` at the end of row ``i`` of an LR tableau;
* ``box_complement_merge`` / ``box_complement_split`` glue a tableau of shape
  alpha to a rotated, value-reversed tableau of shape beta inside a d-row
  rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import partitions as P


@dataclass(frozen=True)
class SkewTableau:
    """A filling of ``outer/inner``.

    ``rows[i]`` has length ``outer[i]``; boxes of ``inner`` hold 0.
    """

    outer: Tuple[int, ...]
    inner: Tuple[int, ...]
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not P.contains(self.outer, self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")
        if len(self.rows) != len(self.outer):
            raise ValueError("one row of entries per row of the outer shape")

    def boxes(self) -> Iterator[Tuple[int, int, int]]:
        """(row, column, value) of the skew boxes, row-major."""
        inner = P.pad(self.inner, len(self.outer))
        for r, row in enumerate(self.rows):
            for c in range(inner[r], len(row)):
                yield r, c, row[c]

    def content(self, d: int) -> Tuple[int, ...]:
        counts = [0] * d
        for _, _, v in self.boxes():
            counts[v - 1] += 1
        return tuple(counts)

    def reading_word(self) -> Tuple[int, ...]:
        """Rows top to bottom, each read right to left."""
        inner = P.pad(self.inner, len(self.outer))
        word = []
        for r, row in enumerate(self.rows):
            word.extend(reversed(row[inner[r]:]))
        return tuple(word)

    def is_semistandard(self) -> bool:
        inner = P.pad(self.inner, len(self.outer))
        for r, row in enumerate(self.rows):
            for c in range(inner[r], len(row)):
                v = row[c]
                if v < 1:
                    return False
                if c > inner[r] and row[c - 1] > v:
                    return False
                if r > 0 and c < len(self.rows[r - 1]) and c >= inner[r - 1]:
                    if self.rows[r - 1][c] >= v:
                        return False
        return True

    def to_json(self) -> dict:
        return {
            "outer": list(self.outer),
            "inner": list(self.inner),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, obj) -> "SkewTableau":
        return cls(
            P.normalize(obj["outer"]),
            P.normalize(obj["inner"]),
            tuple(tuple(int(v) for v in r) for r in obj["rows"]),
        )


def _make(outer, inner, grid) -> SkewTableau:
    return SkewTableau(tuple(outer), tuple(inner), tuple(tuple(r) for r in grid))


def enumerate_ssyt(outer: Sequence[int], inner: Sequence[int], d: int) -> List[SkewTableau]:
    """Every semistandard filling of outer/inner with values in 1..d.

    Boxes are visited row-major and values tried in increasing order, so the
    output order is deterministic.
    """
    outer = P.normalize(outer)
    inner = P.normalize(inner)
    if not P.contains(outer, inner):
        return []
    return list(_fill(outer, inner, d, None))


def _fill(outer, inner, d, content) -> Iterator[SkewTableau]:
    """Backtracking filler; with ``content`` it yields only LR tableaux of that type.

    The lattice condition is checked each time a row is completed, on the
    reading word read so far (prefix pruning); content caps prune per box.
    """
    rows = len(outer)
    inn = P.pad(inner, rows)
    grid = [[0] * outer[r] for r in range(rows)]
    cells = [(r, c) for r in range(rows) for c in range(inn[r], outer[r])]
    ncells = len(cells)
    counts = [0] * (d + 1)
    # lattice counts of the reading word over completed rows
    word_counts = [0] * (d + 2)

    def row_is_lattice(r):
        saved = list(word_counts)
        for v in reversed(grid[r][inn[r]:]):
            word_counts[v] += 1
            if v > 1 and word_counts[v] > word_counts[v - 1]:
                word_counts[:] = saved
                return False
        return True

    def rec(k):
        if k == ncells:
            yield _make(outer, inner, grid)
            return
        r, c = cells[k]
        lo = 1
        if c > inn[r]:
            lo = grid[r][c - 1]
        if r > 0 and inn[r - 1] <= c < outer[r - 1]:
            lo = max(lo, grid[r - 1][c] + 1)
        row_done = c == outer[r] - 1
        for v in range(lo, d + 1):
            if content is not None:
                if counts[v] >= content[v - 1]:
                    continue
                counts[v] += 1
            grid[r][c] = v
            if content is not None and row_done:
                saved = list(word_counts)
                if row_is_lattice(r):
                    yield from rec(k + 1)
                    word_counts[:] = saved
            else:
                yield from rec(k + 1)
            grid[r][c] = 0
            if content is not None:
                counts[v] -= 1

    yield from rec(0)


def is_lattice_word(word: Sequence[int]) -> bool:
    counts: Dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_lr(t: SkewTableau) -> bool:
    """True iff the right-to-left, top-to-bottom reading word is a lattice word."""
    return is_lattice_word(t.reading_word())


def enumerate_lr(outer: Sequence[int], inner: Sequence[int], content: Sequence[int]) -> List[SkewTableau]:
    """LR tableaux of shape outer/inner and type ``content``."""
    outer = P.normalize(outer)
    inner = P.normalize(inner)
    content = tuple(content)
    if not P.contains(outer, inner) or sum(outer) - sum(inner) != sum(content):
        return []
    d = max(len(content), 1)
    return list(_fill(outer, inner, d, P.pad(content, d)))


@lru_cache(maxsize=None)
def _lr_coefficient(alpha, beta, gamma) -> int:
    if not P.contains(alpha, beta) or sum(beta) + sum(gamma) != sum(alpha):
        return 0
    if not gamma:
        return 1
    return sum(1 for _ in _fill(alpha, beta, len(gamma), gamma))


def lr_coefficient(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> int:
    """c^alpha_{beta gamma}: LR tableaux of shape alpha/beta and type gamma.

    Returns 0 whenever one of the indices is not a partition.
    """
    if not all(P.is_partition(tuple(x)) for x in (alpha, beta, gamma)):
        return 0
    return _lr_coefficient(P.normalize(alpha), P.normalize(beta), P.normalize(gamma))


def lr_product(alpha: Sequence[int], beta: Sequence[int], d: int) -> Dict[Tuple[int, ...], int]:
    """s_alpha * s_beta = sum_gamma c^gamma_{alpha beta} s_gamma, gamma with <= d parts."""
    alpha = P.normalize(alpha)
    beta = P.normalize(beta)
    if len(alpha) > d or len(beta) > d:
        return {}
    total = sum(alpha) + sum(beta)
    a = P.pad(alpha, d)
    b1 = beta[0] if beta else 0
    out = {}

    def rec(prefix, remaining):
        i = len(prefix)
        if i == d:
            if remaining == 0:
                yield tuple(prefix)
            return
        hi = a[i] + b1
        if prefix:
            hi = min(hi, prefix[-1])
        for part in range(min(hi, remaining), a[i] - 1, -1):
            yield from rec(prefix + [part], remaining - part)

    for gamma in rec([], total):
        c = lr_coefficient(gamma, alpha, beta)
        if c:
            out[P.normalize(gamma)] = c
    return out


# -- rectangle reduction ----------------------------------------------------


def rectangle_reduce(t: SkewTableau, ell: int, d: int) -> SkewTableau:
    """Remove ``ell`` boxes, filled with ``i``, from the end of each row ``i <= d``."""
    gamma = t.content(d)
    if ell < 0 or ell > gamma[d - 1]:
        raise ValueError(f"ell={ell} exceeds the last part {gamma[d - 1]} of the type")
    if len(t.outer) > d:
        raise ValueError(f"tableau has more than {d} rows")
    if ell == 0:
        return t
    outer = P.pad(t.outer, d)
    inner = P.pad(t.inner, d)
    rows = []
    for i in range(d):
        row = t.rows[i] if i < len(t.rows) else ()
        tail = row[outer[i] - ell:]
        if outer[i] - ell < inner[i] or any(v != i + 1 for v in tail):
            raise ValueError(f"row {i + 1} does not end with {ell} entries equal to {i + 1}")
        rows.append(row[: outer[i] - ell])
    new_outer = P.normalize(tuple(o - ell for o in outer))
    return _make(new_outer, t.inner, rows[: len(new_outer)])


def rectangle_extend(t: SkewTableau, ell: int, d: int) -> SkewTableau:
    """Inverse of :func:`rectangle_reduce`."""
    if len(t.outer) > d:
        raise ValueError(f"tableau has more than {d} rows")
    if ell == 0:
        return t
    outer = P.pad(t.outer, d)
    inner = P.pad(t.inner, d)
    rows = []
    for i in range(d):
        row = t.rows[i] if i < len(t.rows) else ()
        if not row:
            row = (0,) * inner[i]
        rows.append(tuple(row) + (i + 1,) * ell)
    return _make(tuple(o + ell for o in outer), t.inner, rows)


# -- product as a skew shape ---------------------------------------------------


def _square_width(square: Sequence[int], d: int) -> int:
    sq = tuple(square)
    if sq and len(set(sq)) != 1:
        raise ValueError(f"{sq} is not rectangular")
    if sq and len(sq) != d:
        raise ValueError(f"rectangle {sq} does not have {d} rows")
    return sq[0] if sq else 0


def complement_shapes(alpha, beta, square, d: Optional[int] = None):
    """(outer, inner) of the skew shape (square + alpha)/(square - reverse(beta))."""
    if d is None:
        d = len(tuple(square))
    c = _square_width(square, d)
    a = P.pad(P.normalize(alpha), d)
    b = P.pad(P.normalize(beta), d)
    if any(x > c for x in b):
        raise ValueError(f"{tuple(beta)} is not contained in ({c})^{d}")
    outer = P.normalize(tuple(c + x for x in a))
    inner = P.normalize(tuple(c - x for x in reversed(b)))
    return outer, inner


def box_complement_merge(t_alpha: SkewTableau, t_beta: SkewTableau, square: Sequence[int], d: Optional[int] = None) -> SkewTableau:
    """Glue ``t_beta`` (rotated half a turn, values v -> d+1-v) left of ``t_alpha``.

    Both inputs are straight-shape semistandard tableaux with values in 1..d.
    The result has shape (square + alpha)/(square - reverse(beta)); its content
    is content(t_alpha) plus the reversed content of t_beta.
    """
    if d is None:
        d = len(tuple(square))
    if t_alpha.inner or t_beta.inner:
        raise ValueError("merge expects straight shapes")
    c = _square_width(square, d)
    outer, inner = complement_shapes(t_alpha.outer, t_beta.outer, square, d)
    b = P.pad(t_beta.outer, d)
    inn = P.pad(inner, d)
    rows = []
    for i in range(d):
        src = d - 1 - i
        left = [0] * inn[i]
        for col in range(inn[i], c):
            left.append(d + 1 - t_beta.rows[src][c - 1 - col])
        right = list(t_alpha.rows[i]) if i < len(t_alpha.rows) else []
        rows.append(left + right)
        assert len(left) == c and b[src] == c - inn[i]
    return _make(outer, inner, rows[: len(outer)])


def box_complement_split(t: SkewTableau, square: Sequence[int], d: Optional[int] = None) -> Tuple[SkewTableau, SkewTableau]:
    """Inverse of :func:`box_complement_merge`; returns (t_alpha, t_beta)."""
    if d is None:
        d = len(tuple(square))
    c = _square_width(square, d)
    outer = P.pad(t.outer, d)
    inner = P.pad(t.inner, d)
    if any(o < c for o in outer) or any(x > c for x in inner):
        raise ValueError("tableau shape is not of the form (square + alpha)/(square - beta^rev)")
    alpha_rows = []
    for i in range(d):
        row = t.rows[i] if i < len(t.rows) else ()
        alpha_rows.append(tuple(row[c:]))
    beta_rows = []
    for r in range(d):
        i = d - 1 - r
        row = t.rows[i] if i < len(t.rows) else (0,) * c
        width = c - inner[i]
        beta_rows.append(tuple(d + 1 - row[c - 1 - j] for j in range(width)))
    alpha = P.normalize(tuple(len(r) for r in alpha_rows))
    beta = P.normalize(tuple(len(r) for r in beta_rows))
    t_alpha = _make(alpha, (), alpha_rows[: len(alpha)])
    t_beta = _make(beta, (), beta_rows[: len(beta)])
    return t_alpha, t_beta
