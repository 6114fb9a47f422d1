"""
The universal Chern-root model.

Classes live in Z[x_1..x_n, u_1..u_d].  The variables are the Chern roots of
the *duals*: x_1..x_m for E_m^∨ (flag compatible: E_m uses the first m of
E's roots) and u_1..u_d for U^∨.  Consequently for every atom A

    c(A) = prod (1 - y),    s(A) = 1 / c(A) = sum_k h_k(y)

over its variables y, so s_k(E_m) = h_k(x_1..x_m) and s_alpha(U) is the
plain Schur polynomial in the u's.  Virtual bundles are integer
combinations of atoms; c and s are multiplicative, so every class is a
finite expression in elementary and complete symmetric polynomials and no
series truncation is needed.

``U_k`` (k <= d) is the k-th bundle of the universal flag on the
Kempf–Laksov tower; its dual roots are u_{d-k+1}..u_d.  ``U`` is U_d.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple

from . import partitions as P
from .polyring import Poly, complete_homogeneous, det, elementary, schur_expand, schur_poly

MAX_DEGREE_ENV = "SCHUBGYSIN_MAX_DEGREE"


class TruncationError(ValueError):
    """A class was requested beyond the context's degree cap."""


@dataclass(frozen=True)
class FlagContext:
    """Rank ``n`` bundle E with a full flag, Grassmannian of ``d``-planes.

    ``max_degree`` caps the cohomological degree of Segre/Chern classes that
    may be requested; ``None`` means no cap (every formula here is exact).
    """

    n: int
    d: int
    max_degree: Optional[int] = None

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise ValueError(f"need 1 <= d <= n, got n={self.n}, d={self.d}")
        if self.max_degree is not None and self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative")

    @classmethod
    def from_env(cls, n: int, d: int) -> "FlagContext":
        raw = os.environ.get(MAX_DEGREE_ENV)
        return cls(n, d, int(raw) if raw else None)

    @property
    def nvars(self) -> int:
        return self.n + self.d

    @property
    def codim(self) -> int:
        return self.n - self.d

    def x_index(self, i: int) -> int:
        return i - 1

    def u_index(self, i: int) -> int:
        return self.n + i - 1

    def x(self, i: int) -> Poly:
        return Poly.gen(self.nvars, self.x_index(i))

    def u(self, i: int) -> Poly:
        return Poly.gen(self.nvars, self.u_index(i))

    def one(self) -> Poly:
        return Poly.constant(self.nvars, 1)

    def zero(self) -> Poly:
        return Poly.zero(self.nvars)

    def const(self, c: int) -> Poly:
        return Poly.constant(self.nvars, c)

    @property
    def x_indices(self) -> Tuple[int, ...]:
        return tuple(range(self.n))

    @property
    def u_indices(self) -> Tuple[int, ...]:
        return tuple(range(self.n, self.n + self.d))

    def var_names(self):
        return [f"x{i}" for i in range(1, self.n + 1)] + [f"u{i}" for i in range(1, self.d + 1)]

    def check_degree(self, k: int):
        if self.max_degree is not None and k > self.max_degree:
            raise TruncationError(f"degree {k} exceeds max_degree={self.max_degree}")

    def embed_u(self, f: Poly) -> Poly:
        """A polynomial in d variables, read in u_1..u_d."""
        if f.nvars != self.d:
            raise ValueError(f"expected a polynomial in {self.d} variables")
        return f.remap(self.nvars, self.u_indices)

    def at_x_zero(self, cls: Poly) -> Poly:
        """Specialize x = 0 (trivial flag over a point)."""
        return cls.set_zero(self.x_indices)

    def is_base_class(self, cls: Poly) -> bool:
        """True iff the class involves no u's (a class on the base X)."""
        return all(not any(e[i] for i in self.u_indices) for e, _ in cls)


# -- virtual bundles ------------------------------------------------------------


@dataclass(frozen=True)
class BundleExpr:
    """Integer combination of atoms ("E", m) and ("U", k)."""

    terms: Tuple[Tuple[Tuple[str, int], int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[Tuple[str, int], int]) -> "BundleExpr":
        return cls(tuple(sorted((a, m) for a, m in mapping.items() if m)))

    def as_dict(self) -> Dict[Tuple[str, int], int]:
        return dict(self.terms)

    def __add__(self, other: "BundleExpr") -> "BundleExpr":
        out = self.as_dict()
        for a, m in other.terms:
            out[a] = out.get(a, 0) + m
        return BundleExpr.of(out)

    def __neg__(self) -> "BundleExpr":
        return BundleExpr.of({a: -m for a, m in self.terms})

    def __sub__(self, other: "BundleExpr") -> "BundleExpr":
        return self + (-other)

    def __rmul__(self, k: int) -> "BundleExpr":
        return BundleExpr.of({a: k * m for a, m in self.terms})

    def rank(self) -> int:
        return sum(m * k for (_, k), m in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (kind, k), m in self.terms:
            name = f"{kind}{k}"
            sgn = "+" if m > 0 else "-"
            out.append(f"{sgn}{abs(m) if abs(m) != 1 else ''}{name}")
        s = "".join(out)
        return s[1:] if s.startswith("+") else s


def E(m: int) -> BundleExpr:
    """The flag bundle E_m."""
    return BundleExpr.of({("E", m): 1})


def U(k: Optional[int] = None, ctx: Optional[FlagContext] = None) -> BundleExpr:
    """U_k; ``U()`` with a context, or ``U(d)``, is the universal subbundle."""
    if k is None:
        if ctx is None:
            raise ValueError("U() needs k or a context")
        k = ctx.d
    return BundleExpr.of({("U", k): 1}) if k else BundleExpr()


def Q(ctx: FlagContext) -> BundleExpr:
    """Universal quotient Q = E - U."""
    return E(ctx.n) - U(ctx.d)


def _validate(B: BundleExpr, ctx: FlagContext):
    for (kind, k), _ in B.terms:
        if kind == "E" and not 1 <= k <= ctx.n:
            raise ValueError(f"E_{k} is not in the flag of a rank {ctx.n} bundle")
        if kind == "U" and not 1 <= k <= ctx.d:
            raise ValueError(f"U_{k} is not part of the universal flag (d={ctx.d})")
        if kind not in ("E", "U"):
            raise ValueError(f"unknown atom {kind}")


def root_multiplicities(B: BundleExpr, ctx: FlagContext) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Net dual-root multisets (positive part, negative part) as variable indices."""
    _validate(B, ctx)
    net: Dict[int, int] = {}
    for (kind, k), m in B.terms:
        if kind == "E":
            idx = [ctx.x_index(i) for i in range(1, k + 1)]
        else:
            idx = [ctx.u_index(i) for i in range(ctx.d - k + 1, ctx.d + 1)]
        for i in idx:
            net[i] = net.get(i, 0) + m
    pos = tuple(sorted(i for i, m in net.items() if m > 0 for _ in range(m)))
    neg = tuple(sorted(i for i, m in net.items() if m < 0 for _ in range(-m)))
    return pos, neg


@lru_cache(maxsize=None)
def _chern_from_roots(k: int, nvars: int, pos: Tuple[int, ...], neg: Tuple[int, ...]) -> Poly:
    # c(B) = prod_{pos}(1 - y) / prod_{neg}(1 - z)
    if k < 0:
        return Poly.zero(nvars)
    out = Poly.zero(nvars)
    for i in range(0, min(k, len(pos)) + 1):
        e = elementary(i, nvars, pos)
        h = complete_homogeneous(k - i, nvars, neg)
        if e and h:
            out = out + e * h * (-1) ** i
    return out


def chern(B: BundleExpr, k: int, ctx: FlagContext) -> Poly:
    """c_k(B); zero for k < 0, one for k = 0."""
    ctx.check_degree(k)
    pos, neg = root_multiplicities(B, ctx)
    return _chern_from_roots(k, ctx.nvars, pos, neg)


def segre(B: BundleExpr, k: int, ctx: FlagContext) -> Poly:
    """s_k(B) = c_k(-B); s_k(E_m) = h_k(x_1..x_m)."""
    ctx.check_degree(k)
    pos, neg = root_multiplicities(B, ctx)
    return _chern_from_roots(k, ctx.nvars, neg, pos)


def segre_series_in_t(B: BundleExpr, ctx: FlagContext, max_degree: Optional[int] = None) -> Dict[int, Poly]:
    """s_{1/t}(B) as a map t-exponent -> class: {-k: s_k(B)} for k <= max_degree.

    ``max_degree`` defaults to the context cap; one of the two must be set.
    """
    if max_degree is None:
        max_degree = ctx.max_degree
    if max_degree is None:
        raise TruncationError("segre_series_in_t needs a degree bound")
    out = {}
    for k in range(max_degree + 1):
        s = segre(B, k, ctx)
        if s:
            out[-k] = s
    return out


def series_coefficient(series: Mapping[int, Poly], exponent: int, ctx: FlagContext) -> Poly:
    """[t^exponent] of a series produced by :func:`segre_series_in_t`."""
    return series.get(exponent, ctx.zero())


# -- Jacobi–Trudi determinants of classes ------------------------------------------------


def _as_class(value, ctx: FlagContext) -> Poly:
    return value if isinstance(value, Poly) else ctx.const(value)


def s_K(K: Sequence[int], B: BundleExpr, ctx: FlagContext) -> Poly:
    """det(s_{k_i - i + j}(B)) with len(K) rows."""
    return s_skew(K, (0,) * len(K), B, ctx)


def s_skew(K: Sequence[int], L: Sequence[int], B: BundleExpr, ctx: FlagContext) -> Poly:
    """det(s_{k_i - i + j - l_j}(B)); K and L are arbitrary integer tuples.

    ``L`` shorter than ``K`` is zero padded.
    """
    K = tuple(K)
    L = P.pad(tuple(L), len(K)) if len(L) <= len(K) else tuple(L)
    if len(L) != len(K):
        raise ValueError("skew indices of different lengths")
    r = len(K)
    mat = [[segre(B, K[i] - i + j - L[j], ctx) if K[i] - i + j - L[j] >= 0 else 0
            for j in range(r)] for i in range(r)]
    return _as_class(det(mat), ctx)


def chern_det(K: Sequence[int], bundles: Sequence[BundleExpr], ctx: FlagContext) -> Poly:
    """det(c_{k_i - i + j}(B_i)) where row i uses its own bundle ``bundles[i]``."""
    r = len(K)
    mat = [[chern(bundles[i], K[i] - i + j, ctx) if K[i] - i + j >= 0 else 0
            for j in range(r)] for i in range(r)]
    return _as_class(det(mat), ctx)


def schur_class_U(alpha: Sequence[int], ctx: FlagContext) -> Poly:
    """s_alpha(U): the Schur polynomial in u_1..u_d."""
    return ctx.embed_u(schur_poly(alpha, ctx.d))


def to_schur_u_form(cls: Poly, ctx: FlagContext) -> Dict[Tuple[int, ...], Poly]:
    """Write a class symmetric in the u's as sum_beta a_beta s_beta(U), a_beta in x's."""
    out: Dict[Tuple[int, ...], Poly] = {}
    # group by x-monomial, expand each u-polynomial in the Schur basis
    by_x: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
    for e, c in cls:
        xe = e[: ctx.n]
        ue = e[ctx.n:]
        by_x.setdefault(xe, {})[ue] = c
    for xe, uterms in by_x.items():
        expansion = schur_expand(Poly(ctx.d, uterms), ctx.d)
        mono = Poly.monomial(xe + (0,) * ctx.d)
        for beta, c in expansion.items():
            out[beta] = out.get(beta, ctx.zero()) + mono * c
    return {b: a for b, a in sorted(out.items(), key=lambda kv: P.pad(kv[0], ctx.d)) if a}


def from_schur_u_form(form: Mapping[Tuple[int, ...], Poly], ctx: FlagContext) -> Poly:
    out = ctx.zero()
    for beta, coeff in form.items():
        out = out + coeff * schur_class_U(beta, ctx)
    return out


# -- serialization ------------------------------------------------------------------------


def class_to_json(cls: Poly, ctx: FlagContext) -> dict:
    return {"vars": ctx.var_names(), "terms": cls.to_json()}


def class_from_json(obj, ctx: FlagContext) -> Poly:
    if obj.get("vars") and list(obj["vars"]) != ctx.var_names():
        raise ValueError("variable names do not match the context")
    return Poly.from_json(obj["terms"], ctx.nvars)


def schur_form_to_json(form: Mapping[Tuple[int, ...], Poly], ctx: FlagContext) -> list:
    return [{"partition": list(b), "coeff": class_to_json(a, ctx)} for b, a in form.items()]


def schur_form_from_json(obj, ctx: FlagContext) -> Dict[Tuple[int, ...], Poly]:
    return {P.normalize(item["partition"]): class_from_json(item["coeff"], ctx) for item in obj}
