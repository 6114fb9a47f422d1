"""
Push-forward identities on Grassmann bundles, each paired with a second,
independent way of computing the same class:

* strong duality: pi_*(s_alpha(U) s_beta(U)) as a single skew determinant,
  against the Littlewood–Richardson expansion pushed term by term;
* pi_*(s_alpha(U) s_beta(Q)) as one n x n determinant, as an alternating
  sum of products of skew classes, and directly from s_beta(E - U);
* the Laplace expansion of s_{alpha ⊔ beta}(E) along complementary minors;
* the class of a Schubert bundle, as a determinant of Chern classes of
  Q - E_nu and in the Schur basis of U, plus the triangular linear system
  that characterizes its Schur coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import partitions as P
from .chow import (
    E,
    FlagContext,
    Q,
    chern,
    chern_det,
    class_to_json,
    s_K,
    s_skew,
    schur_class_U,
    segre,
    to_schur_u_form,
)
from .gysin import check_schubert, pi_pushforward_schur, varpi_pushforward_schur
from .polyring import Poly, det
from .tableaux import lr_product


class GiambelliInconsistency(AssertionError):
    """The determinant and Schur-basis forms of a Schubert class disagree."""


def _pad_alpha(alpha, rows, name="alpha") -> Tuple[int, ...]:
    alpha = tuple(alpha)
    if P.is_partition(alpha):
        alpha = P.normalize(alpha)
    if len(alpha) > rows:
        raise ValueError(f"{name}={alpha} has more than {rows} parts")
    return P.pad(alpha, rows)


# -- strong duality ------------------------------------------------------------------


def duality_pushforward(alpha, beta, ctx: FlagContext, ell: Optional[int] = None) -> Poly:
    """pi_*(s_alpha(U) s_beta(U)) = s_{(ell-n+d)^d + alpha / (ell)^d - reverse(beta)}(E).

    ``ell`` defaults to max(beta_1, n - d); any ell >= beta_1 gives the same class.
    """
    d = ctx.d
    a = _pad_alpha(P.normalize(alpha), d)
    b = _pad_alpha(P.normalize(beta), d, "beta")
    if ell is None:
        ell = max(b[0], ctx.codim)
    if ell < b[0]:
        raise ValueError(f"the rectangle ({ell})^{d} does not contain beta={P.normalize(beta)}")
    K = tuple(ell - ctx.codim + x for x in a)
    L = tuple(ell - x for x in reversed(b))
    return s_skew(K, L, E(ctx.n), ctx)


def duality_oracle(alpha, beta, ctx: FlagContext) -> Poly:
    """Expand s_alpha s_beta by LR tableaux (<= d rows) and push each s_gamma(U)."""
    out = ctx.zero()
    for gamma, c in lr_product(alpha, beta, ctx.d).items():
        out = out + pi_pushforward_schur(gamma, ctx) * c
    return out


# -- pi_*(s_alpha(U) s_beta(Q)) ---------------------------------------------------------


def jlp_index(alpha, beta, ctx: FlagContext) -> Tuple[int, ...]:
    """(alpha - (n-d)^d) ⊔ beta as an n-tuple."""
    a = _pad_alpha(alpha, ctx.d)
    b = _pad_alpha(beta, ctx.codim, "beta")
    return tuple(x - ctx.codim for x in a) + b


def jlp_pushforward(alpha, beta, ctx: FlagContext, shortcut: bool = True) -> Poly:
    """pi_*(s_alpha(U) s_beta(Q)) = s_{(alpha - (n-d)^d) ⊔ beta}(E)."""
    K = jlp_index(alpha, beta, ctx)
    if shortcut and P.straighten(K) is None:
        return ctx.zero()
    return s_K(K, E(ctx.n), ctx)


def jlp_sign_bridge(alpha, beta, ctx: FlagContext) -> Poly:
    """(-1)^{d(n-d)} s_{(beta - (d)^{n-d}) ⊔ alpha}(E)."""
    a = _pad_alpha(alpha, ctx.d)
    b = _pad_alpha(beta, ctx.codim, "beta")
    K = tuple(x - ctx.d for x in b) + a
    return s_K(K, E(ctx.n), ctx) * (-1) ** (ctx.d * ctx.codim)


def jlp_sum(alpha, beta, ctx: FlagContext) -> Poly:
    """sum_{mu in (n-d)^d} (-1)^{|mu|} s_{alpha/dual(mu)}(E) s_{beta/conj(mu)}(E)."""
    n, d, m = ctx.n, ctx.d, ctx.codim
    a = _pad_alpha(alpha, d)
    b = _pad_alpha(beta, m, "beta")
    out = ctx.zero()
    for mu in P.partitions_in_box(d, m):
        left = s_skew(a, P.pad(P.dual(mu, n, d), d), E(n), ctx)
        if not left:
            continue
        right = s_skew(b, P.pad(P.conjugate(mu), m), E(n), ctx) if m else ctx.one()
        if right:
            out = out + left * right * (-1) ** sum(mu)
    return out


def schur_Q(beta, ctx: FlagContext) -> Poly:
    """s_beta(Q) for Q = E - U, via an (n-d)-row Jacobi–Trudi determinant."""
    b = _pad_alpha(beta, ctx.codim, "beta")
    if not b:
        return ctx.one()
    return s_K(b, Q(ctx), ctx)


def jlp_oracle(alpha, beta, ctx: FlagContext) -> Poly:
    """pi_*(s_alpha(U) s_beta(Q)) from the explicit class, expanded in s_gamma(U)."""
    cls = schur_class_U(alpha, ctx) * schur_Q(beta, ctx)
    out = ctx.zero()
    for gamma, coeff in to_schur_u_form(cls, ctx).items():
        out = out + coeff * pi_pushforward_schur(gamma, ctx)
    return out


# -- Laplace expansion ---------------------------------------------------------------


@dataclass(frozen=True)
class ComplementData:
    mu: Tuple[int, ...]
    gamma: Tuple[int, ...]
    delta: Tuple[int, ...]
    mu_conj: Tuple[int, ...]

    def law_holds(self, n: int, d: int) -> bool:
        """delta_{n-d+1-j} - j = #{i : gamma_{d+1-i} - i < j} = d - conj(mu)_j."""
        m = n - d
        conj = P.pad(self.mu_conj, m)
        for j in range(1, m + 1):
            lhs = self.delta[m - j] - j
            count = sum(1 for i in range(1, d + 1) if self.gamma[d - i] - i < j)
            if not lhs == count == d - conj[j - 1]:
                return False
        return True


def complement_data(mu, n: int, d: int) -> ComplementData:
    """gamma = mu + rho, delta = {1..n} minus gamma (decreasing), and conj(mu)."""
    if not P.in_rectangle(mu, n, d):
        raise ValueError(f"mu={tuple(mu)} is not contained in ({n - d})^{d}")
    mu = P.normalize(mu)
    gamma = tuple(x + d - i for i, x in enumerate(P.pad(mu, d)))
    delta = tuple(v for v in range(n, 0, -1) if v not in gamma)
    return ComplementData(mu, gamma, delta, P.conjugate(mu))


def laplace_minor_expansion(alpha, beta, ctx: FlagContext) -> Poly:
    """s_{alpha ⊔ beta}(E) by complementary d x d / (n-d) x (n-d) minors.

    Sum over strict gamma in (n)^d with delta the complement of gamma in
    {1..n}, sign (-1)^{1+..+d+sum(gamma)}.
    """
    n, d, m = ctx.n, ctx.d, ctx.codim
    a = tuple(alpha)
    b = tuple(beta)
    if len(a) != d or len(b) != m:
        raise ValueError("alpha must be a d-tuple and beta an (n-d)-tuple")
    out = ctx.zero()
    for mu in P.partitions_in_box(d, m):
        data = complement_data(mu, n, d)
        g, dl = data.gamma, data.delta
        top = [[segre(E(n), a[i] - (i + 1) + g[d - 1 - j], ctx) if a[i] - (i + 1) + g[d - 1 - j] >= 0 else 0
                for j in range(d)] for i in range(d)]
        bottom = [[segre(E(n), b[i] - (i + 1) - d + dl[m - 1 - j], ctx) if b[i] - (i + 1) - d + dl[m - 1 - j] >= 0 else 0
                   for j in range(m)] for i in range(m)]
        t = det(top)
        if not t:
            continue
        bt = det(bottom)
        if not bt:
            continue
        # both minors take their columns in increasing order
        sign = (-1) ** (d * (d + 1) // 2 + sum(g))
        out = out + (t if isinstance(t, Poly) else ctx.const(t)) * bt * sign
    return out


def laplace_rhs(alpha, beta, ctx: FlagContext) -> Poly:
    """sum_mu (-1)^{|mu|} s_{alpha + (n-d)^d / dual(mu)}(E) s_{beta / conj(mu)}(E)."""
    n, d, m = ctx.n, ctx.d, ctx.codim
    a = tuple(x + m for x in alpha)
    out = ctx.zero()
    for mu in P.partitions_in_box(d, m):
        left = s_skew(a, P.pad(P.dual(mu, n, d), d), E(n), ctx)
        if not left:
            continue
        right = s_skew(tuple(beta), P.pad(P.conjugate(mu), m), E(n), ctx) if m else ctx.one()
        if right:
            out = out + left * right * (-1) ** sum(mu)
    return out


def laplace_expand_check(alpha, beta, ctx: FlagContext) -> dict:
    """Evaluate both sides of the Laplace expansion for integer tuples; report equality."""
    alpha = tuple(int(x) for x in alpha)
    beta = tuple(int(x) for x in beta)
    if len(alpha) != ctx.d or len(beta) != ctx.codim:
        raise ValueError(f"need a {ctx.d}-tuple and a {ctx.codim}-tuple")
    lhs = s_K(alpha + beta, E(ctx.n), ctx)
    rhs = laplace_rhs(alpha, beta, ctx)
    laws = all(complement_data(mu, ctx.n, ctx.d).law_holds(ctx.n, ctx.d)
               for mu in P.partitions_in_box(ctx.d, ctx.codim))
    return {"alpha": alpha, "beta": beta, "lhs": lhs, "rhs": rhs,
            "equal": lhs == rhs, "complement_law": laws}


# -- Schubert classes ----------------------------------------------------------------


@dataclass
class GiambelliClass:
    lam: Tuple[int, ...]
    schur_form: Dict[Tuple[int, ...], Poly]
    det_form: Poly
    ctx: FlagContext = field(repr=False)

    def schur_sum(self) -> Poly:
        out = self.ctx.zero()
        for beta, coeff in self.schur_form.items():
            out = out + coeff * schur_class_U(beta, self.ctx)
        return out

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "n": self.ctx.n,
            "d": self.ctx.d,
            "schur_form": [{"partition": list(b), "coeff": class_to_json(a, self.ctx)}
                           for b, a in self.schur_form.items()],
            "det_form": class_to_json(self.det_form, self.ctx),
        }


def giambelli_det(lam, ctx: FlagContext) -> Poly:
    """det(c_{lam_i - i + j}(Q - E_{nu_{d+1-i}}))."""
    lam = check_schubert(lam, ctx)
    nu = P.nu_of_lambda(lam, ctx.n, ctx.d)
    d = ctx.d
    bundles = [Q(ctx) - E(nu[d - 1 - i]) for i in range(d)]
    return chern_det(P.pad(lam, d), bundles, ctx)


def _chern_E_minus(nu_j: int, k: int, ctx: FlagContext) -> Poly:
    if k < 0:
        return ctx.zero()
    if nu_j == ctx.n:
        return ctx.one() if k == 0 else ctx.zero()
    return chern(E(ctx.n) - E(nu_j), k, ctx)


def schur_coefficients(lam, ctx: FlagContext, reindexed: bool = False) -> Dict[Tuple[int, ...], Poly]:
    """The Schur-basis coefficients of the Schubert class, one permutation sum each.

    Default: sum_w sign(w) prod_j c_{k_j}(E - E_{nu_j}), K = w^{-1}·dual(beta) - dual(lam).
    ``reindexed``: sum_w sign(w) prod_j c_{k_{d+1-j}}(E - E_{nu_j}), K = lam - w^{-1}·beta,
    obtained from the first by w -> dual_perm(w) and reversing K.
    """
    lam = check_schubert(lam, ctx)
    n, d = ctx.n, ctx.d
    nu = P.nu_of_lambda(lam, n, d)
    lam_p = P.pad(lam, d)
    hat = P.pad(P.dual(lam, n, d), d)
    out = {}
    for beta in P.partitions_in_box(d, ctx.codim):
        total = ctx.zero()
        target = P.pad(beta, d) if reindexed else P.pad(P.dual(beta, n, d), d)
        base = lam_p if reindexed else hat
        for w in P.permutations(d):
            moved = P.perm_action(P.inverse(w), target)
            K = P.sub(base, moved) if reindexed else P.sub(moved, base)
            term = ctx.const(P.sign(w))
            for j in range(d):
                k = K[d - 1 - j] if reindexed else K[j]
                term = term * _chern_E_minus(nu[j], k, ctx)
                if not term:
                    break
            if term:
                total = total + term
        out[beta] = total
    return out


def giambelli_class(lam, ctx: FlagContext) -> GiambelliClass:
    """Both forms of the class of the Schubert bundle, cross-checked."""
    lam = check_schubert(lam, ctx)
    form = schur_coefficients(lam, ctx)
    g = GiambelliClass(lam, {b: a for b, a in form.items() if a}, giambelli_det(lam, ctx), ctx)
    if g.schur_sum() != g.det_form:
        raise GiambelliInconsistency(f"forms disagree for lambda={lam}, n={ctx.n}, d={ctx.d}")
    return g


def system_equation(lam, alpha, coeffs, ctx: FlagContext) -> Tuple[Poly, Poly]:
    """(lhs, rhs) of: sum_beta a_beta s_{alpha/dual(beta)}(E) = (varpi_lam)_* s_alpha(U)."""
    n, d = ctx.n, ctx.d
    a = P.pad(alpha, d)
    lhs = ctx.zero()
    for beta, coeff in coeffs.items():
        if coeff:
            lhs = lhs + coeff * s_skew(a, P.pad(P.dual(beta, n, d), d), E(n), ctx)
    return lhs, varpi_pushforward_schur(lam, alpha, ctx)


def solve_system(lam, ctx: FlagContext) -> Dict[Tuple[int, ...], Poly]:
    """Solve the unitriangular system for the Schur coefficients by substitution.

    Equations are processed in increasing lexicographic order of alpha; the
    unknown with dual(beta) = alpha sits on the diagonal with coefficient 1.
    """
    lam = check_schubert(lam, ctx)
    n, d = ctx.n, ctx.d
    solved: Dict[Tuple[int, ...], Poly] = {}
    for alpha in sorted(P.partitions_in_box(d, ctx.codim), key=lambda x: P.pad(x, d)):
        beta = P.dual(alpha, n, d)
        lhs, rhs = system_equation(lam, alpha, solved, ctx)
        solved[beta] = rhs - lhs
    return {b: solved[b] for b in P.partitions_in_box(d, ctx.codim)}


def giambelli_system_check(lam, ctx: FlagContext, coeffs: Optional[Dict] = None) -> dict:
    """Check every equation of the system with the closed-form coefficients.

    Also reports the two triangularity facts: s_{alpha/dual(beta)}(E) is 1
    when dual(beta) = alpha and 0 when dual(beta) is not inside alpha.
    """
    lam = check_schubert(lam, ctx)
    n, d = ctx.n, ctx.d
    if coeffs is None:
        coeffs = schur_coefficients(lam, ctx)
    failing: List[Tuple[int, ...]] = []
    diagonal_ok = True
    zeros_ok = True
    for alpha in P.partitions_in_box(d, ctx.codim):
        lhs, rhs = system_equation(lam, alpha, coeffs, ctx)
        if lhs != rhs:
            failing.append(alpha)
        for beta in P.partitions_in_box(d, ctx.codim):
            hat = P.dual(beta, n, d)
            val = s_skew(P.pad(alpha, d), P.pad(hat, d), E(n), ctx)
            if hat == alpha and val != 1:
                diagonal_ok = False
            if not P.contains(alpha, hat) and val:
                zeros_ok = False
    return {
        "lambda": lam,
        "equations": len(list(P.partitions_in_box(d, ctx.codim))),
        "failing": failing,
        "diagonal_is_one": diagonal_ok,
        "zero_outside_containment": zeros_ok,
        "pass": not failing and diagonal_ok and zeros_ok,
    }


def perturbation_breaks(lam, ctx: FlagContext, beta=None) -> bool:
    """Adding 1 to one coefficient must break at least one equation."""
    coeffs = dict(schur_coefficients(lam, ctx))
    if beta is None:
        beta = P.normalize(lam)
    coeffs[P.normalize(beta)] = coeffs[P.normalize(beta)] + 1
    return not giambelli_system_check(lam, ctx, coeffs)["failing"] == []
