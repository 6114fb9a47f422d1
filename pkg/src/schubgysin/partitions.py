"""
Partitions, integer tuples and the shifted permutation action.

Partitions are plain tuples of ints with trailing zeros stripped; any
operation that needs an ambient number of rows ``d`` zero-pads on the fly.
Permutations are one-indexed: ``w[i - 1]`` is the image ``w(i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

Partition = tuple
IntTuple = tuple
Permutation = tuple


def normalize(alpha: Sequence[int]) -> Partition:
    """Validate a partition and strip its trailing zeros."""
    alpha = tuple(int(a) for a in alpha)
    for a, b in zip(alpha, alpha[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {alpha}")
    if alpha and alpha[-1] < 0:
        raise ValueError(f"negative part in {alpha}")
    end = len(alpha)
    while end and alpha[end - 1] == 0:
        end -= 1
    return alpha[:end]


def is_partition(seq: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:])) and (not seq or seq[-1] >= 0)


def is_strict(seq: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(seq, seq[1:]))


def pad(alpha: Sequence[int], d: int) -> IntTuple:
    """Zero-pad to exactly ``d`` entries; extra trailing zeros are dropped."""
    alpha = tuple(alpha)
    if len(alpha) > d:
        if any(alpha[d:]):
            raise ValueError(f"{alpha} has more than {d} nonzero parts")
        return alpha[:d]
    return alpha + (0,) * (d - len(alpha))


def weight(alpha: Sequence[int]) -> int:
    return sum(alpha)


def rectangle(ell: int, d: int) -> Partition:
    """The rectangle ``(ell)^d``."""
    return normalize((ell,) * d)


def staircase(d: int) -> Partition:
    """rho = (d, d-1, ..., 1)."""
    return tuple(range(d, 0, -1))


def contains(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff the diagram of ``beta`` sits inside the diagram of ``alpha``."""
    if len(normalize(beta)) > len(normalize(alpha)):
        return False
    return all(a >= b for a, b in zip(alpha, beta))


def in_rectangle(alpha: Sequence[int], n: int, d: int) -> bool:
    alpha = normalize(alpha)
    return len(alpha) <= d and all(a <= n - d for a in alpha)


def conjugate(alpha: Sequence[int]) -> Partition:
    alpha = normalize(alpha)
    if not alpha:
        return ()
    return tuple(sum(1 for a in alpha if a > j) for j in range(alpha[0]))


def reverse(K: Sequence[int]) -> IntTuple:
    return tuple(K)[::-1]


def concat(alpha: Sequence[int], beta: Sequence[int]) -> IntTuple:
    """alpha ⊔ beta; not a partition in general."""
    return tuple(alpha) + tuple(beta)


def add(K: Sequence[int], L: Sequence[int]) -> IntTuple:
    if len(K) != len(L):
        raise ValueError("length mismatch")
    return tuple(k + l for k, l in zip(K, L))


def sub(K: Sequence[int], L: Sequence[int]) -> IntTuple:
    if len(K) != len(L):
        raise ValueError("length mismatch")
    return tuple(k - l for k, l in zip(K, L))


def lex_key(alpha: Sequence[int], d: int) -> IntTuple:
    """Sort key for lexicographic order on zero-padded d-tuples."""
    return pad(alpha, d)


def dual(alpha: Sequence[int], n: int, d: int) -> Partition:
    """The complement ``(n-d)^d - reverse(alpha)`` inside the d x (n-d) box."""
    if not in_rectangle(alpha, n, d):
        raise ValueError(f"{tuple(alpha)} is not contained in ({n - d})^{d}")
    padded = pad(normalize(alpha), d)
    return normalize(tuple(n - d - a for a in reversed(padded)))


def nu_of_lambda(lam: Sequence[int], n: int, d: int) -> Partition:
    """Flag dimensions of a Schubert condition: dual(lam) + rho."""
    hat = pad(dual(lam, n, d), d)
    return tuple(h + d - i for i, h in enumerate(hat))


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions inside ``(cols)^rows``, in increasing lexicographic order."""

    def rec(prefix, remaining, bound):
        if remaining == 0:
            yield normalize(prefix)
            return
        for part in range(0, bound + 1):
            if prefix and part > prefix[-1]:
                break
            yield from rec(prefix + (part,), remaining - 1, part)

    # generate decreasing tuples; sort for a clean lexicographic order
    found = sorted(set(rec((), rows, cols)), key=lambda a: pad(a, rows))
    yield from found


def partitions_of(k: int, max_parts: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``k`` with at most ``max_parts`` parts, each at most ``max_part``."""
    if max_part is None:
        max_part = k

    def rec(remaining, parts_left, bound):
        if remaining == 0:
            yield ()
            return
        if parts_left == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    yield from rec(k, max_parts, max_part)


# -- permutations ---------------------------------------------------------


def identity_perm(d: int) -> Permutation:
    return tuple(range(1, d + 1))


def permutations(d: int) -> Iterator[Permutation]:
    return itertools.permutations(range(1, d + 1))


def sign(w: Sequence[int]) -> int:
    w = list(w)
    s = 1
    seen = [False] * len(w)
    for start in range(len(w)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def compose(w: Sequence[int], v: Sequence[int]) -> Permutation:
    """(w ∘ v)(i) = w(v(i))."""
    return tuple(w[v[i] - 1] for i in range(len(v)))


def inverse(w: Sequence[int]) -> Permutation:
    inv = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        inv[wi - 1] = i
    return tuple(inv)


def _check_perm(w, d):
    if sorted(w) != list(range(1, d + 1)):
        raise ValueError(f"{tuple(w)} is not a permutation of 1..{d}")


def perm_action(w: Sequence[int], K: Sequence[int]) -> IntTuple:
    """(w·K)_i = k_{w(i)} - w(i) + i.

    This is a right action: ``perm_action(w, perm_action(v, K))`` equals
    ``perm_action(compose(v, w), K)``.
    """
    if len(w) != len(K):
        raise ValueError(f"permutation of length {len(w)} acting on a {len(K)}-tuple")
    _check_perm(w, len(w))
    return tuple(K[wi - 1] - wi + i for i, wi in enumerate(w, start=1))


def dual_perm(w: Sequence[int]) -> Permutation:
    """ŵ(i) = d + 1 - w(d + 1 - i); same sign as w, and an involution."""
    d = len(w)
    return tuple(d + 1 - w[d - i] for i in range(1, d + 1))


# -- straightening ---------------------------------------------------------


@dataclass(frozen=True)
class Straightening:
    """K straightens to ``shape`` via ``witness``: shape = witness·K.

    ``shape`` is a weakly decreasing d-tuple.  Its last entries may be
    negative, in which case every d-row Jacobi–Trudi determinant indexed by it
    vanishes; ``is_partition`` tells the two cases apart.
    """

    sign: int
    shape: IntTuple
    witness: Permutation

    @property
    def is_partition(self) -> bool:
        return not self.shape or self.shape[-1] >= 0

    @property
    def partition(self) -> Partition:
        return normalize(self.shape)


@lru_cache(maxsize=None)
def _straighten(K: IntTuple) -> Optional[Straightening]:
    shifted = [k - i for i, k in enumerate(K, start=1)]
    if len(set(shifted)) != len(shifted):
        return None
    order = sorted(range(len(K)), key=lambda i: -shifted[i])
    w = tuple(i + 1 for i in order)
    return Straightening(sign(w), perm_action(w, K), w)


def straighten(K: Sequence[int]) -> Optional[Straightening]:
    """Straighten an integer tuple; ``None`` means K cannot be straightened."""
    return _straighten(tuple(int(k) for k in K))


def straightening_to_json(result: Optional[Straightening]):
    if result is None:
        return {"zero": True}
    return {
        "sign": result.sign,
        "shape": list(result.shape),
        "witness": list(result.witness),
    }


def straightening_from_json(obj) -> Optional[Straightening]:
    if obj.get("zero"):
        return None
    return Straightening(int(obj["sign"]), tuple(obj["shape"]), tuple(obj["witness"]))


def partition_to_json(alpha: Sequence[int]) -> list:
    return list(normalize(alpha))


def partition_from_json(obj) -> Partition:
    return normalize(obj)
