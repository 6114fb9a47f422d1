"""
Exact sparse Laurent polynomials over the integers.

A :class:`Poly` maps dense exponent tuples (possibly negative entries) to
nonzero Python ints.  Arity is fixed per polynomial; mixing arities raises.
Schur polynomials, complete/elementary symmetric polynomials and the
Schur-basis expansion live here as well, together with a generic
determinant used for every Jacobi–Trudi style matrix in the package.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from . import partitions as P

Exps = Tuple[int, ...]


class NotSymmetricError(ValueError):
    pass


class InexactDivisionError(ArithmeticError):
    """An exact division left a remainder; indicates a bug, never bad input."""


class Poly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exps, int]] = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} does not have arity {nvars}")
                    clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "Poly":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def gen(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1) -> "Poly":
        exps = tuple(exps)
        return cls._raw(len(exps), {exps: c} if c else {})

    def terms(self):
        """(exponent, coefficient) pairs in deterministic (sorted) order."""
        return sorted(self._terms.items())

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return Poly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exps, int] = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.nvars}, {dict(self.terms())!r})"

    def __str__(self):
        return self.pretty()

    def pretty(self, names: Optional[Sequence[str]] = None) -> str:
        if not self._terms:
            return "0"
        if names is None:
            names = [f"t{i + 1}" for i in range(self.nvars)]
        pieces = []
        for e, c in sorted(self._terms.items(), key=lambda ec: (-sum(ec[0]), [-x for x in ec[0]])):
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}") for i, k in enumerate(e) if k
            )
            if not mono:
                pieces.append(f"{c:+d}")
            elif c == 1:
                pieces.append(f"+{mono}")
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{c:+d}*{mono}")
        s = " ".join(pieces)
        return s[1:] if s.startswith("+") else s

    def coefficient(self, exps: Sequence[int]) -> int:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"exponent {exps} does not have arity {self.nvars}")
        return self._terms.get(exps, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == k})

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self._terms for x in e)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.nvars, 0)

    def is_symmetric(self, indices: Optional[Sequence[int]] = None) -> bool:
        """Invariance under every adjacent transposition of ``indices``."""
        if indices is None:
            indices = range(self.nvars)
        indices = list(indices)
        for a, b in zip(indices, indices[1:]):
            if self.swap(a, b) != self:
                return False
        return True

    def swap(self, a: int, b: int) -> "Poly":
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[a], e[b] = e[b], e[a]
            out[tuple(e)] = c
        return Poly._raw(self.nvars, out)

    def remap(self, nvars: int, index_map: Sequence[int]) -> "Poly":
        """Move variable ``i`` to position ``index_map[i]`` in an arity-``nvars`` ring."""
        out: Dict[Exps, int] = {}
        for e, c in self._terms.items():
            new = [0] * nvars
            for i, k in enumerate(e):
                if k:
                    new[index_map[i]] += k
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return Poly._raw(nvars, {e: c for e, c in out.items() if c})

    def set_zero(self, indices: Iterable[int]) -> "Poly":
        """Specialize the given variables to 0."""
        idx = list(indices)
        return Poly._raw(
            self.nvars, {e: c for e, c in self._terms.items() if not any(e[i] for i in idx)}
        )

    def split(self, indices: Sequence[int]) -> Dict[Exps, "Poly"]:
        """Group terms by the exponents of ``indices``; values keep the other variables.

        Returns a dict ``key -> Poly`` where ``key`` is the exponent sub-tuple on
        ``indices`` and the value has those variables zeroed out.
        """
        out: Dict[Exps, Dict[Exps, int]] = {}
        idx = list(indices)
        for e, c in self._terms.items():
            key = tuple(e[i] for i in idx)
            rest = list(e)
            for i in idx:
                rest[i] = 0
            out.setdefault(key, {})[tuple(rest)] = c
        return {k: Poly._raw(self.nvars, v) for k, v in out.items()}

    def to_json(self) -> list:
        return [{"coeff": str(c), "exps": list(e)} for e, c in self.terms()]

    @classmethod
    def from_json(cls, obj, nvars: Optional[int] = None) -> "Poly":
        terms = {}
        for item in obj:
            e = tuple(int(x) for x in item["exps"])
            terms[e] = terms.get(e, 0) + int(item["coeff"])
        if nvars is None:
            if not terms:
                raise ValueError("cannot infer arity of an empty polynomial")
            nvars = len(next(iter(terms)))
        return cls(nvars, terms)


def coefficient_of(p: Poly, exps: Sequence[int]) -> int:
    """[m](P): the coefficient of the monomial with exponent vector ``exps``."""
    return p.coefficient(exps)


def divide_linear(p: Poly, i: int, j: int) -> Poly:
    """Exact quotient of ``p`` by (t_i - t_j), by synthetic division in t_i."""
    by_power: Dict[int, Dict[Exps, int]] = {}
    for e, c in p:
        rest = list(e)
        k = rest[i]
        rest[i] = 0
        by_power.setdefault(k, {})[tuple(rest)] = c
    if not by_power:
        return p
    lo, hi = min(by_power), max(by_power)
    if lo < 0:
        raise InexactDivisionError("synthetic division needs nonnegative exponents in t_i")
    # p = sum_k p_k t_i^k ; q_{k-1} = p_k + t_j q_k
    q: Dict[int, Poly] = {}
    carry = Poly.zero(p.nvars)
    tj = Poly.gen(p.nvars, j)
    for k in range(hi, 0, -1):
        carry = Poly._raw(p.nvars, dict(by_power.get(k, {}))) + tj * carry
        q[k - 1] = carry
    remainder = Poly._raw(p.nvars, dict(by_power.get(0, {}))) + tj * carry
    if remainder:
        raise InexactDivisionError(f"(t{i + 1} - t{j + 1}) does not divide the polynomial")
    out = Poly.zero(p.nvars)
    for k, qk in q.items():
        if qk:
            shift = [0] * p.nvars
            shift[i] = k
            out = out + qk * Poly.monomial(shift)
    return out


def det(matrix: Sequence[Sequence]):
    """Determinant by cofactor expansion along rows, memoized on column subsets.

    Entries may be ints or :class:`Poly`; the zero test is truthiness, so
    sparse Jacobi–Trudi matrices are cheap.  Cost is O(n 2^n) products.
    """
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    memo = {}

    def minor(row: int, cols: int):
        # determinant of rows row..n-1 restricted to the columns in bitmask ``cols``
        if row == n:
            return 1
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = 0
        sgn = 1
        for c in range(n):
            if not cols & (1 << c):
                continue
            entry = matrix[row][c]
            if entry:
                sub = minor(row + 1, cols & ~(1 << c))
                if sub:
                    term = entry * sub
                    total = total + term if sgn > 0 else total - term
            sgn = -sgn
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def leibniz_det(matrix: Sequence[Sequence]):
    """Determinant as the signed sum over all permutations (slow reference)."""
    n = len(matrix)
    total = 0
    for w in itertools.permutations(range(n)):
        term = P.sign(tuple(i + 1 for i in w))
        for i in range(n):
            term = term * matrix[i][w[i]]
            if not term:
                break
        if term:
            total = total + term
    return total


def vandermonde(nvars: int, indices: Optional[Sequence[int]] = None) -> Poly:
    """prod_{i<j} (t_i - t_j) over ``indices`` (default: all variables)."""
    if indices is None:
        indices = range(nvars)
    indices = list(indices)
    out = Poly.constant(nvars, 1)
    for a, i in enumerate(indices):
        for j in indices[a + 1:]:
            out = out * (Poly.gen(nvars, i) - Poly.gen(nvars, j))
    return out


@lru_cache(maxsize=None)
def complete_homogeneous(k: int, nvars: int, indices: Optional[Tuple[int, ...]] = None) -> Poly:
    """h_k in the variables ``indices`` (default all) of an arity-``nvars`` ring.

    h_0 = 1 and h_k = 0 for k < 0.  Repeated indices count with multiplicity.
    """
    if indices is None:
        indices = tuple(range(nvars))
    if k < 0:
        return Poly.zero(nvars)
    out = {}
    for combo in itertools.combinations_with_replacement(indices, k):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return Poly._raw(nvars, out)


@lru_cache(maxsize=None)
def elementary(k: int, nvars: int, indices: Optional[Tuple[int, ...]] = None) -> Poly:
    """e_k in the variables ``indices``; repeated indices count with multiplicity."""
    if indices is None:
        indices = tuple(range(nvars))
    if k < 0 or k > len(indices):
        return Poly.zero(nvars)
    out = {}
    for combo in itertools.combinations(indices, k):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return Poly._raw(nvars, out)


def bialternant_numerator(alpha: Sequence[int], d: int) -> Poly:
    """det(t_j^{alpha_i + d - i})."""
    a = P.pad(alpha, d)
    total = Poly.zero(d)
    for w in itertools.permutations(range(d)):
        e = [0] * d
        for i in range(d):
            e[w[i]] = a[i] + d - 1 - i
        total = total + Poly.monomial(e, P.sign(tuple(x + 1 for x in w)))
    return total


@lru_cache(maxsize=None)
def _schur_poly(alpha: Tuple[int, ...], d: int) -> Poly:
    num = bialternant_numerator(alpha, d)
    for i in range(d):
        for j in range(i + 1, d):
            num = divide_linear(num, i, j)
    return num


def schur_poly(alpha: Sequence[int], d: int) -> Poly:
    """The Schur polynomial s_alpha(t_1..t_d) as the bialternant quotient."""
    alpha = P.normalize(alpha)
    if len(alpha) > d:
        raise ValueError(f"{alpha} has more than {d} parts")
    return _schur_poly(alpha, d)


def jacobi_trudi(alpha: Sequence[int], d: int, beta: Sequence[int] = ()) -> Poly:
    """det(h_{alpha_i - i + j - beta_j}) in d variables, with len(alpha) rows."""
    rows = len(alpha)
    b = P.pad(beta, rows)
    mat = [
        [complete_homogeneous(alpha[i] - i + j - b[j], d) for j in range(rows)]
        for i in range(rows)
    ]
    out = det(mat)
    return out if isinstance(out, Poly) else Poly.constant(d, out)


def skew_schur_poly(outer: Sequence[int], inner: Sequence[int], d: int) -> Poly:
    """sum of t^content(T) over semistandard tableaux T of shape outer/inner."""
    from .tableaux import enumerate_ssyt

    out: Dict[Exps, int] = {}
    for t in enumerate_ssyt(outer, inner, d):
        e = t.content(d)
        out[e] = out.get(e, 0) + 1
    return Poly(d, out)


def schur_combination(expansion: Mapping[Tuple[int, ...], int], d: int) -> Poly:
    """sum_alpha coeff * s_alpha in d variables."""
    out = Poly.zero(d)
    for alpha, c in expansion.items():
        out = out + schur_poly(alpha, d) * c
    return out


def schur_expand(p: Poly, d: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    """Write a symmetric polynomial in the Schur basis.

    Repeatedly peels off the lexicographically largest monomial, which is
    a partition for symmetric input.
    """
    if d is None:
        d = p.nvars
    if p.nvars != d:
        raise ValueError(f"arity {p.nvars} polynomial expanded in {d} variables")
    if not p.is_polynomial():
        raise NotSymmetricError("negative exponents cannot be expanded in the Schur basis")
    if not p.is_symmetric():
        raise NotSymmetricError("polynomial is not symmetric")
    out: Dict[Tuple[int, ...], int] = {}
    rest = p
    while rest:
        lead = max(e for e, _ in rest)
        if not P.is_partition(lead):
            raise InexactDivisionError(f"leading exponent {lead} is not a partition")
        c = rest.coefficient(lead)
        shape = P.normalize(lead)
        out[shape] = out.get(shape, 0) + c
        rest = rest - schur_poly(shape, d) * c
    return dict(sorted(out.items(), key=lambda kv: P.pad(kv[0], d)))


def expansion_to_json(expansion: Mapping[Tuple[int, ...], int]) -> list:
    return [{"partition": list(a), "coeff": str(c)} for a, c in expansion.items()]


def expansion_from_json(obj) -> Dict[Tuple[int, ...], int]:
    return {P.normalize(item["partition"]): int(item["coeff"]) for item in obj}
