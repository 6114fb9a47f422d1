"""
Declarative verification sweeps.

Every identity the library implements is paired with an independent way of
computing the same value. ``SWEEPS`` lists them, grouped into suites, with
the ranges they run over; ``run`` evaluates a selection and returns a report
whose JSON form is byte-for-byte reproducible for a given seed.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from . import identities as I
from . import partitions as P
from .chow import E, FlagContext, Q, U, chern, s_K, schur_class_U, segre, to_schur_u_form
from .gysin import (
    pi_pushforward,
    pi_pushforward_schur,
    pi_pushforward_via_schur,
    theta_pushforward,
    theta_pushforward_iterative,
    theta_pushforward_schur,
    varpi_pushforward,
    varpi_pushforward_schur,
)
from .polyring import Poly, complete_homogeneous, det, schur_combination, schur_expand, schur_poly, skew_schur_poly
from .tableaux import (
    box_complement_merge,
    box_complement_split,
    enumerate_lr,
    enumerate_ssyt,
    lr_coefficient,
    rectangle_extend,
    rectangle_reduce,
)

Instance = Dict[str, object]
Outcome = Tuple[bool, object]


@dataclass(frozen=True)
class Sweep:
    identity: str
    suite: str
    instances: Callable[[random.Random], List[Instance]]
    check: Callable[[Instance], Outcome]
    quick: bool = True


@lru_cache(maxsize=None)
def _ctx(n: int, d: int) -> FlagContext:
    return FlagContext(n, d)


def _box(rows, cols) -> List[list]:
    return [list(p) for p in P.partitions_in_box(rows, cols)]


def _strict(d, n) -> List[list]:
    return [list(c) for c in itertools.combinations(range(n, 0, -1), d)]


def _diff(a: Poly, b: Poly, ctx: FlagContext) -> Outcome:
    if a == b:
        return True, None
    names = ctx.var_names()
    return False, {"lhs": a.pretty(names), "rhs": b.pretty(names)}


def _eq(a, b) -> Outcome:
    return (True, None) if a == b else (False, {"lhs": repr(a), "rhs": repr(b)})


# -- partitions ----------------------------------------------------------------------


def _straighten_instances(rng):
    return [{"w": list(w), "alpha": list(a)} for d in (1, 2, 3, 4)
            for a in ([0] * d, [2, 1, 1, 0][:d], [3, 3, 1, 0][:d], [4, 2, 2, 1][:d])
            for w in P.permutations(d)]


def _straighten_check(inst):
    w, a = tuple(inst["w"]), tuple(inst["alpha"])
    res = P.straighten(P.perm_action(w, a))
    ok = res is not None and res.sign == P.sign(w) and P.pad(res.shape, len(a)) == a
    return ok, None if ok else repr(res)


def _dual_perm_instances(rng):
    return [{"K": list(K)} for K in itertools.product(range(-3, 4), repeat=2)]


def _dual_perm_check(inst):
    # straighten(dual(lam) + K) = (s, dual(beta))  iff  straighten(lam - K^rev) = (s, beta)
    n, d = 4, 2
    K = tuple(inst["K"])
    for lam in P.partitions_in_box(d, n - d):
        hat = P.pad(P.dual(lam, n, d), d)
        left = P.straighten(P.add(hat, K))
        right = P.straighten(P.sub(P.pad(lam, d), P.reverse(K)))
        lval = None
        if left is not None and left.is_partition and P.in_rectangle(left.shape, n, d):
            lval = (left.sign, P.dual(left.shape, n, d))
        rval = None
        if right is not None and right.is_partition and P.in_rectangle(right.shape, n, d):
            rval = (right.sign, P.normalize(right.shape))
        if lval != rval:
            return False, {"lambda": list(lam), "left": repr(lval), "right": repr(rval)}
    return True, None


# -- tableaux ------------------------------------------------------------------------


def _lr_double_instances(rng):
    box = _box(3, 3)
    return [{"alpha": a, "beta": b} for a in box for b in box]


def _lr_double_check(inst):
    a, b = inst["alpha"], inst["beta"]
    expansion = schur_expand(schur_poly(a, 3) * schur_poly(b, 3), 3)
    for gamma, c in expansion.items():
        if lr_coefficient(gamma, a, b) != c:
            return False, {"gamma": list(gamma), "expand": c, "lr": lr_coefficient(gamma, a, b)}
    # no tableau count may be missing from the expansion
    total = sum(lr_coefficient(g, a, b) for g in P.partitions_of(sum(a) + sum(b), 3))
    return _eq(sum(expansion.values()), total)


def _row_structure_instances(rng):
    return [{"outer": o} for o in _box(3, 5)]


def _row_structure_check(inst):
    d = 3
    outer = tuple(inst["outer"])
    for inner in P.partitions_in_box(3, 5):
        if not P.contains(outer, inner):
            continue
        size = sum(outer) - sum(inner)
        for gamma in P.partitions_of(size, d):
            for t in enumerate_lr(outer, inner, gamma):
                g = P.pad(gamma, d)
                for i, row in enumerate(t.rows):
                    vals = [v for v in row if v]
                    if any(v > i + 1 for v in vals):
                        return False, t.to_json()
                    if i < d and g[d - 1] and (len(vals) < g[d - 1] or any(v != i + 1 for v in vals[len(vals) - g[d - 1]:])):
                        return False, t.to_json()
    return True, None


def _rect_removal_instances(rng):
    box = _box(2, 4)
    return [{"alpha": a, "beta": b} for a in box for b in box if P.contains(a, b)]


def _rect_removal_check(inst):
    a, b = tuple(inst["alpha"]), tuple(inst["beta"])
    sq = (1, 1)
    for gamma in P.partitions_of(sum(a) - sum(b), 2):
        if not P.contains(gamma, sq):
            continue
        lhs = lr_coefficient(a, b, gamma)
        if not P.contains(a, sq):
            # gamma inside alpha is forced whenever the coefficient is nonzero
            if lhs:
                return False, {"gamma": list(gamma), "lhs": lhs}
            continue
        rhs = lr_coefficient(P.normalize(P.sub(P.pad(a, 2), sq)), b, P.normalize(P.sub(P.pad(gamma, 2), sq)))
        if lhs != rhs:
            return False, {"gamma": list(gamma), "lhs": lhs, "rhs": rhs}
    return True, None


def _box_complement_instances(rng):
    box = _box(2, 3)
    return [{"alpha": a, "beta": b} for a in box for b in box]


def _box_complement_check(inst):
    a, b = inst["alpha"], inst["beta"]
    c = 3
    outer = tuple(c + x for x in P.pad(a, 2))
    inner = P.normalize(tuple(c - x for x in reversed(P.pad(b, 2))))
    for gamma in P.partitions_of(sum(a) + sum(b), 2):
        lhs = lr_coefficient(gamma, a, b)
        rhs = lr_coefficient(outer, inner, gamma)
        if lhs != rhs:
            return False, {"gamma": list(gamma), "lhs": lhs, "rhs": rhs}
    return True, None


def _two_rect_instances(rng):
    box = _box(2, 3)
    return [{"alpha": a, "beta": b, "ell": ell, "m": m}
            for a in box for b in box for ell in (3, 4) for m in (0, 1)]


def _two_rect_check(inst):
    a, b, ell, m = inst["alpha"], inst["beta"], inst["ell"], inst["m"]
    d = 2
    if ell < P.pad(b, d)[0]:
        return True, None
    for gamma in P.partitions_of(sum(a) + sum(b), d):
        if P.pad(gamma, d)[d - 1] < m:
            continue
        lhs = lr_coefficient(gamma, a, b)
        outer = P.normalize(tuple(x + ell - m for x in P.pad(a, d)))
        inner = P.normalize(tuple(ell - x for x in reversed(P.pad(b, d))))
        rhs = lr_coefficient(outer, inner, P.normalize(tuple(x - m for x in P.pad(gamma, d))))
        if lhs != rhs:
            return False, {"gamma": list(gamma), "lhs": lhs, "rhs": rhs}
    return True, None


def _product_skew_instances(rng):
    box = _box(2, 2)
    return [{"alpha": a, "beta": b, "square": sq} for a in box for b in box for sq in ([2, 2], [3, 3])]


def _product_skew_check(inst):
    a, b, sq = inst["alpha"], inst["beta"], tuple(inst["square"])
    c = sq[0]
    outer = P.normalize(tuple(c + x for x in P.pad(a, 2)))
    inner = P.normalize(tuple(c - x for x in reversed(P.pad(b, 2))))
    return _eq(schur_poly(a, 2) * schur_poly(b, 2), skew_schur_poly(outer, inner, 2))


def _rect_bijection_instances(rng):
    return [{"outer": o} for o in _box(2, 4)]


def _rect_bijection_check(inst):
    d, ell = 2, 1
    outer = tuple(inst["outer"])
    for inner in P.partitions_in_box(d, 4):
        if not P.contains(outer, inner):
            continue
        for gamma in P.partitions_of(sum(outer) - sum(inner), d):
            if P.pad(gamma, d)[d - 1] < ell:
                continue
            src = enumerate_lr(outer, inner, gamma)
            if not P.contains(outer, (ell,) * d):
                if src:
                    return False, {"inner": list(inner), "gamma": list(gamma)}
                continue
            images = [rectangle_reduce(t, ell, d) for t in src]
            target = enumerate_lr(P.normalize(P.sub(P.pad(outer, d), (ell,) * d)), inner,
                                  P.normalize(P.sub(P.pad(gamma, d), (ell,) * d)))
            if sorted(map(repr, images)) != sorted(map(repr, target)):
                return False, {"inner": list(inner), "gamma": list(gamma)}
            if any(rectangle_extend(r, ell, d) != t for r, t in zip(images, src)):
                return False, {"inner": list(inner), "gamma": list(gamma), "inverse": False}
    return True, None


def _merge_instances(rng):
    box = _box(2, 2)
    return [{"alpha": a, "beta": b, "square": sq} for a in box for b in box for sq in ([2, 2], [3, 3])]


def _merge_check(inst):
    d = 2
    a, b, sq = inst["alpha"], inst["beta"], tuple(inst["square"])
    c = sq[0]
    outer = P.normalize(tuple(c + x for x in P.pad(a, d)))
    inner = P.normalize(tuple(c - x for x in reversed(P.pad(b, d))))
    images = []
    for ta in enumerate_ssyt(a, (), d):
        for tb in enumerate_ssyt(b, (), d):
            t = box_complement_merge(ta, tb, sq, d)
            if not t.is_semistandard() or box_complement_split(t, sq, d) != (ta, tb):
                return False, t.to_json()
            images.append(t)
    target = enumerate_ssyt(outer, inner, d)
    return _eq(sorted(map(repr, images)), sorted(map(repr, target)))


# -- polyring ------------------------------------------------------------------------


def _jt_instances(rng):
    return [{"alpha": a} for a in _box(3, 4)]


def _jt_check(inst):
    a = inst["alpha"]
    mat = [[complete_homogeneous(a_i - i + j, 3) for j in range(3)] for i, a_i in enumerate(P.pad(a, 3))]
    value = det(mat)
    value = value if isinstance(value, Poly) else Poly.constant(3, value)
    return _eq(schur_poly(a, 3), value)


def _expand_instances(rng):
    out = []
    for _ in range(20):
        d = rng.randint(1, 3)
        shapes = [p for k in range(7) for p in P.partitions_of(k, d)]
        combo = {}
        for _ in range(rng.randint(1, 4)):
            combo[tuple(rng.choice(shapes))] = rng.randint(-5, 5)
        out.append({"d": d, "combo": [[list(k), v] for k, v in sorted(combo.items())]})
    return out


def _expand_check(inst):
    d = inst["d"]
    combo = {tuple(k): v for k, v in inst["combo"] if v}
    return _eq(schur_expand(schur_combination(combo, d), d), dict(sorted(combo.items(), key=lambda kv: P.pad(kv[0], d))))


# -- chow ----------------------------------------------------------------------------


def _sK_instances(rng):
    return [{"d": d, "K": list(K)} for d in (2, 3) for K in itertools.product(range(-2, 5), repeat=d)
            if d == 2 or sum(K) <= 6]


def _sK_check(inst):
    d = inst["d"]
    ctx = _ctx(4, d)
    K = tuple(inst["K"])
    B = E(4) - U(ctx=ctx)
    value = s_K(K, B, ctx)
    for w in P.permutations(d):
        if s_K(P.perm_action(w, K), B, ctx) * P.sign(w) != value:
            return False, {"w": list(w)}
    return True, None


def _chern_segre_instances(rng):
    return [{"n": 4, "d": 2, "bundle": b} for b in ("E4", "U", "Q", "Q-E2", "E3-U", "E1-E4")]


def _parse_bundle(text, ctx):
    atoms = {"Q": Q(ctx), "U": U(ctx=ctx)}
    out = None
    sign = 1
    for tok in text.replace("-", " - ").replace("+", " + ").split():
        if tok in "+-":
            sign = 1 if tok == "+" else -1
            continue
        b = atoms[tok] if tok in atoms else E(int(tok[1:]))
        b = b if sign == 1 else -b
        out = b if out is None else out + b
    return out


def _chern_segre_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    B = _parse_bundle(inst["bundle"], ctx)
    for k in range(1, 7):
        total = ctx.zero()
        for i in range(k + 1):
            total = total + chern(B, i, ctx) * segre(B, k - i, ctx)
        if total:
            return False, {"k": k}
    # c(E) = c(U) c(Q)
    for k in range(7):
        lhs = chern(E(ctx.n), k, ctx)
        rhs = ctx.zero()
        for i in range(k + 1):
            rhs = rhs + chern(U(ctx=ctx), i, ctx) * chern(Q(ctx), k - i, ctx)
        if lhs != rhs:
            return False, {"k": k, "whitney": False}
    return True, None


# -- gysin ---------------------------------------------------------------------------


def _triangle_instances(rng):
    return [{"n": 5, "d": 2, "mu": mu, "alpha": a} for mu in _strict(2, 5) for a in _box(2, 3)]


def _triangle_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    mu, a = inst["mu"], inst["alpha"]
    f = {tuple(a): 1}
    x = theta_pushforward(mu, f, ctx)
    y = theta_pushforward_schur(mu, a, ctx)
    if x != y:
        return _diff(x, y, ctx)
    return _diff(x, theta_pushforward_iterative(mu, f, ctx), ctx)


def _varpi_instances(rng):
    return [{"n": 4, "d": 2, "lambda": lam, "alpha": a} for lam in _box(2, 2) for a in _box(2, 2)]


def _varpi_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    lam, a = inst["lambda"], inst["alpha"]
    return _diff(varpi_pushforward_schur(lam, a, ctx), varpi_pushforward(lam, schur_poly(a, ctx.d), ctx), ctx)


def _pi_instances(rng):
    return [{"n": 5, "d": 2, "alpha": a} for a in _box(2, 3)]


def _pi_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    a = inst["alpha"]
    x = varpi_pushforward_schur((), a, ctx)
    y = pi_pushforward_schur(a, ctx)
    if x != y:
        return _diff(x, y, ctx)
    return _diff(x, pi_pushforward(schur_poly(a, ctx.d), ctx), ctx)


def _syt_count(shape: Tuple[int, ...]) -> int:
    """Number of standard tableaux, by removing corners."""
    shape = P.normalize(shape)
    if not shape:
        return 1
    total = 0
    for i, part in enumerate(shape):
        nxt = shape[i + 1] if i + 1 < len(shape) else 0
        if part > nxt:
            total += _syt_count(shape[:i] + (part - 1,) + shape[i + 1:])
    return total


def grassmannian_degree(n: int, d: int, method: str = "extract") -> int:
    """Degree of G_d(C^n): pi_* s_1(U)^{d(n-d)} over a point."""
    ctx = _ctx(n, d)
    f = schur_poly((1,), d) ** (d * (n - d))
    if method == "extract":
        value = pi_pushforward(f, ctx)
    else:
        value = pi_pushforward_via_schur(f, ctx)
    return ctx.at_x_zero(value).constant_term()


def _degree_instances(rng):
    return [{"n": 4, "d": 2}, {"n": 5, "d": 2}, {"n": 5, "d": 3}, {"n": 6, "d": 2}]


def _degree_check(inst):
    n, d = inst["n"], inst["d"]
    values = [grassmannian_degree(n, d, "extract"), grassmannian_degree(n, d, "schur"),
              _syt_count(P.rectangle(n - d, d))]
    return (len(set(values)) == 1, None if len(set(values)) == 1 else values)


# -- identities ----------------------------------------------------------------------


def _duality_instances(rng):
    out = [{"n": n, "d": 2, "alpha": a, "beta": b} for n in (4, 5) for a in _box(2, n - 2) for b in _box(2, n - 2)]
    outside = [a for a in _box(2, 4) if not P.in_rectangle(a, 4, 2)]
    for _ in range(50):
        n = rng.choice((4, 5))
        pool = [a for a in outside if not P.in_rectangle(a, n, 2)] or outside
        out.append({"n": n, "d": 2, "alpha": list(rng.choice(pool)), "beta": list(rng.choice(_box(2, n - 2)))})
    return out


def _duality_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    a, b = inst["alpha"], inst["beta"]
    value = I.duality_pushforward(a, b, ctx)
    oracle = I.duality_oracle(a, b, ctx)
    if value != oracle:
        return _diff(value, oracle, ctx)
    first = P.pad(b, ctx.d)[0]
    for ell in range(first, ctx.n + 3):
        other = I.duality_pushforward(a, b, ctx, ell=ell)
        if other != value:
            return False, {"ell": ell}
    if P.in_rectangle(a, ctx.n, ctx.d) and P.in_rectangle(b, ctx.n, ctx.d):
        hat = P.dual(b, ctx.n, ctx.d)
        if P.normalize(a) == hat and value != 1:
            return False, {"classical": "expected 1"}
        if not P.contains(a, hat) and value:
            return False, {"classical": "expected 0"}
    return True, None


def _jlp_instances(rng):
    out = [{"n": 4, "d": 2, "alpha": a, "beta": b} for a in _box(2, 3) for b in _box(2, 2)]
    out += [{"n": 5, "d": 2, "alpha": a, "beta": b} for a in _box(2, 3) for b in _box(3, 2)]
    return out


def _jlp_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    a, b = inst["alpha"], inst["beta"]
    value = I.jlp_pushforward(a, b, ctx)
    for name, other in (("full", I.jlp_pushforward(a, b, ctx, shortcut=False)),
                        ("sum", I.jlp_sum(a, b, ctx)),
                        ("bridge", I.jlp_sign_bridge(a, b, ctx))):
        if other != value:
            ok, wit = _diff(value, other, ctx)
            return False, {"against": name, **wit}
    return True, None


def _jlp_direct_instances(rng):
    return [{"n": 4, "d": 2, "alpha": a, "beta": b} for a in _box(2, 3) for b in _box(2, 2)]


def _jlp_direct_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    return _diff(I.jlp_pushforward(inst["alpha"], inst["beta"], ctx), I.jlp_oracle(inst["alpha"], inst["beta"], ctx), ctx)


def _laplace_partition_instances(rng):
    out = []
    for n, d in ((3, 1), (4, 2), (5, 2), (5, 3)):
        for a in _box(d, 6):
            for b in _box(n - d, 6):
                if sum(a) + sum(b) <= 6:
                    out.append({"n": n, "d": d, "alpha": P.pad(a, d), "beta": P.pad(b, n - d)})
    return out


def _laplace_tuple_instances(rng):
    out = [{"n": 3, "d": 1, "alpha": [K[0]], "beta": list(K[1:])} for K in itertools.product(range(-1, 4), repeat=3)]
    out += [{"n": 4, "d": 2, "alpha": list(K[:2]), "beta": list(K[2:])} for K in itertools.product(range(-1, 4), repeat=4)]
    return out


def _laplace_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    r = I.laplace_expand_check(inst["alpha"], inst["beta"], ctx)
    if not r["complement_law"]:
        return False, {"complement_law": False}
    if r["lhs"] != r["rhs"] or ctx.n > 4:
        return _diff(r["lhs"], r["rhs"], ctx)
    # third side, small n only: complementary minors of the n x n determinant
    ok, wit = _diff(r["lhs"], I.laplace_minor_expansion(r["alpha"], r["beta"], ctx), ctx)
    return ok, None if ok else {"against": "minors", **wit}


def _complement_table_instances(rng):
    return [{"n": 11, "d": 5, "mu": [4, 3, 1, 1]}]


def _complement_table_check(inst):
    c = I.complement_data(inst["mu"], inst["n"], inst["d"])
    got = {"gamma": list(c.gamma), "delta": list(c.delta), "mu_conj": list(c.mu_conj)}
    want = {"gamma": [9, 7, 4, 3, 1], "delta": [11, 10, 8, 6, 5, 2], "mu_conj": [4, 2, 2, 1]}
    if got != want or not c.law_holds(inst["n"], inst["d"]):
        return False, got
    return True, None


def _complement_law_instances(rng):
    return [{"n": n, "d": d} for n in range(2, 9) for d in range(1, n)]


def _complement_law_check(inst):
    n, d = inst["n"], inst["d"]
    for mu in P.partitions_in_box(d, n - d):
        if not I.complement_data(mu, n, d).law_holds(n, d):
            return False, {"mu": list(mu)}
    return True, None


def _giambelli_instances(rng):
    return [{"n": n, "d": d, "lambda": lam} for n, d in ((4, 2), (5, 2), (5, 3)) for lam in _box(d, n - d)]


def _giambelli_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    lam = inst["lambda"]
    try:
        g = I.giambelli_class(lam, ctx)
    except I.GiambelliInconsistency as exc:
        return False, str(exc)
    full = I.schur_coefficients(lam, ctx)
    if full != I.schur_coefficients(lam, ctx, reindexed=True):
        return False, {"reindexed": False}
    if full != I.solve_system(lam, ctx):
        return False, {"solved": False}
    report = I.giambelli_system_check(lam, ctx, full)
    if not report["pass"]:
        return False, {"failing": [list(a) for a in report["failing"]]}
    if g.det_form.degree() != sum(lam) or not g.det_form.is_homogeneous():
        return False, {"degree": g.det_form.degree()}
    return True, None


def _perturb_instances(rng):
    out = []
    for n, d in ((4, 2), (5, 2), (5, 3)):
        lam = rng.choice(_box(d, n - d))
        beta = rng.choice(_box(d, n - d))
        out.append({"n": n, "d": d, "lambda": lam, "beta": beta})
    return out


def _perturb_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    return (I.perturbation_breaks(inst["lambda"], ctx, inst["beta"]), None)


def _classical_instances(rng):
    return [{"n": n, "d": d, "lambda": lam} for n, d in ((4, 2), (5, 2)) for lam in _box(d, n - d)]


def _classical_check(inst):
    ctx = _ctx(inst["n"], inst["d"])
    n, d = ctx.n, ctx.d
    lam = P.normalize(inst["lambda"])
    g = I.giambelli_class(lam, ctx)
    for beta, coeff in I.schur_coefficients(lam, ctx).items():
        want = 1 if beta == lam else 0
        if ctx.at_x_zero(coeff) != want:
            return False, {"beta": list(beta), "at_zero": str(ctx.at_x_zero(coeff))}
    det0 = ctx.at_x_zero(g.det_form)
    if det0 != schur_class_U(lam, ctx):
        return False, {"det_at_zero": str(det0)}
    # intersection numbers with the dual classes on the fiber
    for beta in P.partitions_of(sum(lam), d, n - d):
        cls = schur_class_U(P.dual(beta, n, d), ctx) * det0
        value = ctx.const(0)
        for gamma, coeff in to_schur_u_form(cls, ctx).items():
            value = value + coeff * pi_pushforward_schur(gamma, ctx)
        if ctx.at_x_zero(value) != (1 if beta == lam else 0):
            return False, {"beta": list(beta)}
    return True, None


SWEEPS: Tuple[Sweep, ...] = (
    Sweep("straighten_action", "partitions", _straighten_instances, _straighten_check),
    Sweep("dual_permutation", "partitions", _dual_perm_instances, _dual_perm_check),
    Sweep("lr_double_oracle", "tableaux", _lr_double_instances, _lr_double_check, quick=False),
    Sweep("lr_row_structure", "tableaux", _row_structure_instances, _row_structure_check, quick=False),
    Sweep("lr_rectangle_removal", "tableaux", _rect_removal_instances, _rect_removal_check),
    Sweep("lr_box_complement", "tableaux", _box_complement_instances, _box_complement_check),
    Sweep("lr_two_rectangles", "tableaux", _two_rect_instances, _two_rect_check),
    Sweep("product_as_skew", "tableaux", _product_skew_instances, _product_skew_check),
    Sweep("rectangle_bijection", "tableaux", _rect_bijection_instances, _rect_bijection_check),
    Sweep("complement_bijection", "tableaux", _merge_instances, _merge_check),
    Sweep("jacobi_trudi", "polyring", _jt_instances, _jt_check),
    Sweep("schur_expand_roundtrip", "polyring", _expand_instances, _expand_check),
    Sweep("s_K_alternating", "chow", _sK_instances, _sK_check),
    Sweep("chern_segre_inverse", "chow", _chern_segre_instances, _chern_segre_check),
    Sweep("gysin_triangle", "gysin", _triangle_instances, _triangle_check),
    Sweep("schubert_pushforward", "gysin", _varpi_instances, _varpi_check),
    Sweep("grassmann_pushforward", "gysin", _pi_instances, _pi_check),
    Sweep("grassmannian_degree", "gysin", _degree_instances, _degree_check),
    Sweep("strong_duality", "duality", _duality_instances, _duality_check),
    Sweep("jlp", "jlp", _jlp_instances, _jlp_check),
    Sweep("jlp_direct", "jlp", _jlp_direct_instances, _jlp_direct_check),
    Sweep("laplace_partitions", "laplace", _laplace_partition_instances, _laplace_check, quick=False),
    Sweep("laplace_tuples", "laplace", _laplace_tuple_instances, _laplace_check, quick=False),
    Sweep("complement_table", "laplace", _complement_table_instances, _complement_table_check),
    Sweep("complement_law", "laplace", _complement_law_instances, _complement_law_check),
    Sweep("giambelli", "giambelli", _giambelli_instances, _giambelli_check),
    Sweep("giambelli_perturbation", "giambelli", _perturb_instances, _perturb_check),
    Sweep("giambelli_classical", "giambelli", _classical_instances, _classical_check),
)

SUITES = tuple(sorted({s.suite for s in SWEEPS}))


def select(suite: str = "quick") -> List[Sweep]:
    """Sweeps for a suite name, an identity name, ``quick`` or ``all``."""
    if suite == "all":
        return list(SWEEPS)
    if suite == "quick":
        return [s for s in SWEEPS if s.quick]
    chosen = [s for s in SWEEPS if s.suite == suite or s.identity == suite]
    if not chosen:
        raise KeyError(suite)
    return chosen


def _run_one(args) -> dict:
    index, inst = args
    sweep = SWEEPS[index]
    try:
        ok, witness = sweep.check(inst)
    except Exception as exc:  # an exception is a failure with a witness, not a crash
        ok, witness = False, f"{type(exc).__name__}: {exc}"
    return {"identity": sweep.identity, "suite": sweep.suite, "instance": inst, "pass": bool(ok), "witness": witness}


@dataclass
class Report:
    seed: int
    suite: str
    results: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.results)

    def summary(self) -> Dict[str, Dict[str, int]]:
        out: Dict[str, Dict[str, int]] = {}
        for r in self.results:
            row = out.setdefault(r["identity"], {"pass": 0, "fail": 0})
            row["pass" if r["pass"] else "fail"] += 1
        return out

    def to_json(self) -> dict:
        return {"seed": self.seed, "suite": self.suite, "summary": self.summary(),
                "passed": self.passed, "results": self.results}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)


def run(suite: str = "quick", seed: int = 0, jobs: int = 1) -> Report:
    """Run the selected sweeps. Results are ordered by the sweep table, then by instance."""
    tasks = []
    for sweep in select(suite):
        rng = random.Random(f"{seed}:{sweep.identity}")
        index = SWEEPS.index(sweep)
        tasks.extend((index, inst) for inst in sweep.instances(rng))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=8))
    else:
        results = [_run_one(t) for t in tasks]
    return Report(seed, suite, results)
