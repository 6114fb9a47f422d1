"""
Push-forward (Gysin) maps to the base X.

* ``projective_pushforward``: lines in E_m, p_*(xi^i) = s_{i-m+1}(E_m).
* ``theta_pushforward``: Kempf–Laksov flag bundle F_mu -> X by coefficient
  extraction from f(t) * prod_{i<j}(t_i - t_j) * prod_i s_{1/t_i}(E_{mu_i}).
* ``theta_pushforward_schur``: the determinant formula for f = s_alpha.
* ``theta_pushforward_iterative``: pushes one projective bundle at a time
  down the tower P(E_{mu_1}/U_{d-1}) -> ... -> P(E_{mu_d}) -> X.
* ``varpi_*``: Schubert bundles, through F_nu with nu = dual(lambda) + rho.
* ``pi_*``: the Grassmann bundle itself, i.e. the Schubert bundle of the
  empty partition.

Inputs ``f`` may be an integer polynomial in d variables, a class in the
context ring that is symmetric in the u's (base coefficients pull out by
the projection formula), or a Schur expansion {partition: int or class}.
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Sequence, Tuple, Union

from . import partitions as P
from .chow import E, FlagContext, U, s_K, schur_class_U, segre, segre_series_in_t, series_coefficient, to_schur_u_form
from .polyring import NotSymmetricError, Poly, det, vandermonde

SymInput = Union[Poly, Mapping[Tuple[int, ...], Union[int, Poly]]]


def check_kempf_laksov(mu: Sequence[int], ctx: FlagContext) -> Tuple[int, ...]:
    mu = tuple(mu)
    if len(mu) != ctx.d:
        raise ValueError(f"mu={mu} must have exactly d={ctx.d} parts")
    if not P.is_strict(mu) or mu[-1] < 1:
        raise ValueError(f"mu={mu} is not a strict partition with positive parts")
    if mu[0] > ctx.n:
        raise ValueError(f"mu={mu} is not contained in ({ctx.n})^{ctx.d}")
    return mu


def check_schubert(lam: Sequence[int], ctx: FlagContext) -> Tuple[int, ...]:
    lam = P.normalize(lam)
    if not P.in_rectangle(lam, ctx.n, ctx.d):
        raise ValueError(f"lambda={lam} is not contained in ({ctx.codim})^{ctx.d}")
    return lam


def _check_alpha(alpha, ctx) -> Tuple[int, ...]:
    alpha = P.normalize(alpha)
    if len(alpha) > ctx.d:
        raise ValueError(f"alpha={alpha} has more than d={ctx.d} parts")
    return alpha


def as_class(f: SymInput, ctx: FlagContext) -> Poly:
    """f(U) as a class in the context ring."""
    if isinstance(f, Poly):
        if f.nvars == ctx.d:
            return ctx.embed_u(f)
        if f.nvars == ctx.nvars:
            return f
        raise ValueError(f"polynomial of arity {f.nvars} fits neither d={ctx.d} nor the context")
    out = ctx.zero()
    for alpha, c in f.items():
        out = out + schur_class_U(alpha, ctx) * c
    return out


def _base_split(f: SymInput, ctx: FlagContext) -> List[Tuple[Poly, Poly]]:
    """Pairs (base class a, integer polynomial g in d vars) with f(U) = sum a * g(U)."""
    if isinstance(f, Poly) and f.nvars == ctx.d:
        return [(ctx.one(), f)]
    cls = as_class(f, ctx)
    if not cls.is_symmetric(ctx.u_indices):
        raise NotSymmetricError("class is not symmetric in the Chern roots of U")
    by_x: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {}
    for e, c in cls:
        by_x.setdefault(e[: ctx.n], {})[e[ctx.n:]] = c
    # group base monomials sharing the same u-polynomial
    grouped: Dict[Poly, Poly] = {}
    for xe, uterms in by_x.items():
        g = Poly(ctx.d, uterms)
        grouped[g] = grouped.get(g, ctx.zero()) + Poly.monomial(xe + (0,) * ctx.d)
    return [(a, g) for g, a in grouped.items()]


def projective_pushforward(m: int, i: int, ctx: FlagContext) -> Poly:
    """p_*(xi^i) for the bundle of lines in E_m (rank m)."""
    if not 1 <= m <= ctx.n:
        raise ValueError(f"E_{m} is not in the flag")
    return segre(E(m), i - m + 1, ctx)


def _extract(mu: Tuple[int, ...], g: Poly, ctx: FlagContext) -> Poly:
    """[prod t_i^{mu_i - 1}] (g(t) prod_{i<j}(t_i - t_j) prod_i s_{1/t_i}(E_{mu_i}))."""
    d = ctx.d
    prod = g * vandermonde(d)
    # only Segre terms up to this degree can reach the extracted monomial
    bounds = [max((e[i] - mu[i] + 1 for e, _ in prod), default=-1) for i in range(d)]
    series = [segre_series_in_t(E(mu[i]), ctx, max(bounds[i], 0)) for i in range(d)]
    out = ctx.zero()
    for e, c in prod:
        term = ctx.const(c)
        for i in range(d):
            # [t^{mu_i-1}](t^{e_i} s_{1/t}) = [t^{mu_i-1-e_i}] s_{1/t}
            factor = series_coefficient(series[i], mu[i] - 1 - e[i], ctx)
            if not factor:
                term = None
                break
            term = term * factor
        if term is not None:
            out = out + term
    return out


def theta_pushforward(mu: Sequence[int], f: SymInput, ctx: FlagContext) -> Poly:
    """(theta_mu)_* f(U) by coefficient extraction."""
    mu = check_kempf_laksov(mu, ctx)
    out = ctx.zero()
    for a, g in _base_split(f, ctx):
        if not g.is_symmetric():
            raise NotSymmetricError("f is not symmetric")
        if not g.is_polynomial():
            raise NotSymmetricError("f has negative exponents")
        out = out + a * _extract(mu, g, ctx)
    return out


def theta_pushforward_schur(mu: Sequence[int], alpha: Sequence[int], ctx: FlagContext) -> Poly:
    """(theta_mu)_* s_alpha(U) = det(s_{alpha_i - i + d + 1 - mu_j}(E_{mu_j}))."""
    mu = check_kempf_laksov(mu, ctx)
    a = P.pad(_check_alpha(alpha, ctx), ctx.d)
    d = ctx.d
    mat = [[segre(E(mu[j]), a[i] - i + d - mu[j], ctx) if a[i] - i + d - mu[j] >= 0 else 0
            for j in range(d)] for i in range(d)]
    value = det(mat)
    return value if isinstance(value, Poly) else ctx.const(value)


def _push_one_stage(mu: Tuple[int, ...], cls: Poly, step: int, ctx: FlagContext) -> Poly:
    """Push along P(E_{mu_{step+1}} / U_{d-step-1}), whose O(1) has c_1 = u_{step+1}."""
    var = ctx.u_index(step + 1)
    k = ctx.d - step - 1
    bundle = E(mu[step]) - U(k)
    rank = mu[step] - k
    out = ctx.zero()
    for (power,), rest in cls.split([var]).items():
        s = power - rank + 1
        if s < 0:
            continue
        out = out + rest * segre(bundle, s, ctx)
    return out


def theta_partial(mu: Sequence[int], f: SymInput, e: int, ctx: FlagContext) -> Poly:
    """The first ``e`` stages of the tower applied to f(U).

    Uses u_i as the i-th root of U^∨ in the numbering -c_1(U_{d+1-i}/U_{d-i});
    the result is a class in the x's and u_{e+1}..u_d.
    """
    mu = check_kempf_laksov(mu, ctx)
    if not 0 <= e <= ctx.d:
        raise ValueError(f"stage {e} outside 0..{ctx.d}")
    cls = as_class(f, ctx)
    for step in range(e):
        cls = _push_one_stage(mu, cls, step, ctx)
    return cls


def theta_star(mu: Sequence[int], f: SymInput, e: int, ctx: FlagContext) -> Poly:
    """Closed form for the partial push-forward after ``e`` stages.

    [prod_{i<=e} t_i^{mu_i-(d+1-e)}] of f(t_1..t_e, u_{e+1}..u_d)
    * prod_{i<j<=e}(t_i - t_j) * prod_{i<=e} s_{1/t_i}(E_{mu_i} - U_{d-e}),
    with u_1..u_e playing the role of t_1..t_e.
    """
    mu = check_kempf_laksov(mu, ctx)
    d = ctx.d
    if not 0 <= e <= d:
        raise ValueError(f"stage {e} outside 0..{d}")
    cls = as_class(f, ctx)
    t_idx = [ctx.u_index(i) for i in range(1, e + 1)]
    cls = cls * vandermonde(ctx.nvars, t_idx)
    out = ctx.zero()
    for powers, rest in cls.split(t_idx).items():
        term = rest
        for i in range(e):
            k = powers[i] - mu[i] + d + 1 - e
            if k < 0:
                term = None
                break
            term = term * segre(E(mu[i]) - U(d - e), k, ctx)
            if not term:
                break
        if term:
            out = out + term
    return out


def theta_pushforward_iterative(mu: Sequence[int], f: SymInput, ctx: FlagContext) -> Poly:
    """(theta_mu)_* f(U) computed stage by stage down the projective tower."""
    return theta_partial(mu, f, ctx.d, ctx)


def varpi_pushforward(lam: Sequence[int], f: SymInput, ctx: FlagContext) -> Poly:
    lam = check_schubert(lam, ctx)
    return theta_pushforward(P.nu_of_lambda(lam, ctx.n, ctx.d), f, ctx)


def varpi_pushforward_schur(lam: Sequence[int], alpha: Sequence[int], ctx: FlagContext) -> Poly:
    """det(s_{alpha_i - i + j - dual(lam)_j}(E_{nu_j}))."""
    lam = check_schubert(lam, ctx)
    a = P.pad(_check_alpha(alpha, ctx), ctx.d)
    hat = P.pad(P.dual(lam, ctx.n, ctx.d), ctx.d)
    nu = P.nu_of_lambda(lam, ctx.n, ctx.d)
    d = ctx.d
    mat = [[segre(E(nu[j]), a[i] - i + j - hat[j], ctx) if a[i] - i + j - hat[j] >= 0 else 0
            for j in range(d)] for i in range(d)]
    value = det(mat)
    return value if isinstance(value, Poly) else ctx.const(value)


def pi_pushforward_schur(gamma: Sequence[int], ctx: FlagContext) -> Poly:
    """pi_* s_gamma(U) = s_{gamma - (n-d)^d}(E)."""
    g = P.pad(_check_alpha(gamma, ctx), ctx.d)
    K = tuple(x - ctx.codim for x in g)
    return s_K(K, E(ctx.n), ctx)


def pi_pushforward(f: SymInput, ctx: FlagContext) -> Poly:
    """pi_* f(U), through the Schubert bundle of the empty partition."""
    return varpi_pushforward((), f, ctx)


def pi_pushforward_via_schur(f: SymInput, ctx: FlagContext) -> Poly:
    """pi_* f(U) by expanding f in the Schur basis of U and pushing termwise."""
    out = ctx.zero()
    for beta, coeff in to_schur_u_form(as_class(f, ctx), ctx).items():
        out = out + coeff * pi_pushforward_schur(beta, ctx)
    return out
