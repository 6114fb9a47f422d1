import itertools

import pytest
import sympy

from oracles import sympy_e, sympy_h, to_sympy
from schubgysin import partitions as P
from schubgysin.chow import (
    E,
    FlagContext,
    Q,
    TruncationError,
    U,
    chern,
    chern_det,
    class_from_json,
    class_to_json,
    from_schur_u_form,
    root_multiplicities,
    s_K,
    s_skew,
    schur_class_U,
    schur_form_from_json,
    schur_form_to_json,
    segre,
    segre_series_in_t,
    to_schur_u_form,
)
from schubgysin.polyring import Poly, skew_schur_poly

CTX = FlagContext(4, 2)


def syms(ctx):
    return sympy.symbols(" ".join(ctx.var_names()))


def test_context_validation(monkeypatch):
    with pytest.raises(ValueError):
        FlagContext(2, 3)
    with pytest.raises(ValueError):
        FlagContext(3, 0)
    with pytest.raises(ValueError):
        FlagContext(3, 1, -1)
    monkeypatch.setenv("SCHUBGYSIN_MAX_DEGREE", "5")
    assert FlagContext.from_env(4, 2).max_degree == 5
    monkeypatch.delenv("SCHUBGYSIN_MAX_DEGREE")
    assert FlagContext.from_env(4, 2).max_degree is None


def test_segre_examples():
    v = syms(CTX)
    assert segre(E(3), 0, CTX) == 1
    assert to_sympy(segre(E(2), 1, CTX), v) == v[0] + v[1]
    assert segre(E(2), -1, CTX) == 0
    for k in range(1, 4):
        assert segre(E(3) - E(3), k, CTX) == 0
        assert chern(E(4) - E(4), k, CTX) == 0


@pytest.mark.parametrize("k", range(0, 5))
def test_atoms_against_symmetric_functions(k):
    v = syms(CTX)
    x, u = v[:4], v[4:]
    for m in range(1, 5):
        assert to_sympy(segre(E(m), k, CTX), v) == sympy.expand(sympy_h(k, x[:m]))
        assert to_sympy(chern(E(m), k, CTX), v) == sympy.expand((-1) ** k * sympy_e(k, x[:m]))
    assert to_sympy(segre(U(ctx=CTX), k, CTX), v) == sympy.expand(sympy_h(k, u))


def test_top_chern_class_of_u_carries_the_dual_sign():
    v = syms(CTX)
    assert to_sympy(chern(U(ctx=CTX), 2, CTX), v) == v[4] * v[5]
    ctx = FlagContext(5, 3)
    assert chern(U(ctx=ctx), 3, ctx) == schur_class_U((1, 1, 1), ctx) * -1


def test_universal_flag_of_u():
    # U_k uses the last k dual roots
    pos, neg = root_multiplicities(U(1), CTX)
    assert pos == (CTX.u_index(2),) and neg == ()
    pos, neg = root_multiplicities(Q(CTX), CTX)
    assert pos == CTX.x_indices and neg == CTX.u_indices


@pytest.mark.parametrize("bundle", ["Q", "E3-U", "Q-E2", "E1-E4", "2E2-U1"])
def test_chern_times_segre_is_one(bundle):
    B = {"Q": Q(CTX), "E3-U": E(3) - U(ctx=CTX), "Q-E2": Q(CTX) - E(2),
         "E1-E4": E(1) - E(4), "2E2-U1": 2 * E(2) - U(1)}[bundle]
    for k in range(1, 8):
        total = sum((chern(B, i, CTX) * segre(B, k - i, CTX) for i in range(k + 1)), CTX.zero())
        assert total == 0


def test_chern_of_virtual_bundle_against_sympy_series():
    v = syms(CTX)
    x, u = v[:4], v[4:]
    z = sympy.Symbol("z")
    B = E(3) - U(ctx=CTX)
    num = sympy.Mul(*[(1 - z * y) for y in x[:3]])
    den = sympy.Mul(*[(1 - z * y) for y in u])
    series = sympy.series(num / den, z, 0, 6).removeO()
    for k in range(6):
        assert to_sympy(chern(B, k, CTX), v) == sympy.expand(series.coeff(z, k))


def test_whitney_formula_for_e_u_q():
    for k in range(7):
        rhs = sum((chern(U(ctx=CTX), i, CTX) * chern(Q(CTX), k - i, CTX) for i in range(k + 1)), CTX.zero())
        assert chern(E(4), k, CTX) == rhs


def test_truncation_cap():
    ctx = FlagContext(4, 2, max_degree=3)
    assert segre(E(4), 3, ctx)
    with pytest.raises(TruncationError):
        segre(E(4), 4, ctx)
    with pytest.raises(TruncationError):
        chern(Q(ctx), 5, ctx)


def test_segre_series():
    v = syms(CTX)
    series = segre_series_in_t(E(1), CTX, 4)
    assert {k: to_sympy(c, v) for k, c in series.items()} == {-k: v[0] ** k for k in range(5)}
    assert segre_series_in_t(E(2) - E(2), CTX, 5) == {0: CTX.one()}
    series = segre_series_in_t(E(3) - U(ctx=CTX), CTX, 1)
    assert to_sympy(series[-1], v) == v[0] + v[1] + v[2] - v[4] - v[5]
    with pytest.raises(TruncationError):
        segre_series_in_t(E(1), CTX)


def test_bad_atoms_rejected():
    with pytest.raises(ValueError):
        segre(E(5), 1, CTX)
    with pytest.raises(ValueError):
        segre(U(3), 1, CTX)


def test_s_K_examples():
    for K in [(2, 1), (3, 0), (2, 2)]:
        assert s_K(K, E(4), CTX) == s_skew(K, (), E(4), CTX)
    assert s_K((0, 2), E(4), CTX) == s_K((1, 1), E(4), CTX) * -1
    assert s_K((1, 2), E(4), CTX) == 0
    assert s_skew((2, 1), (2, 1), Q(CTX), CTX) == 1


@pytest.mark.parametrize("d", [2, 3])
def test_s_K_alternates_under_the_action(d):
    ctx = FlagContext(4, d)
    B = E(4) - U(ctx=ctx)
    for K in itertools.product(range(-2, 5), repeat=d):
        if sum(K) > 6:
            continue
        value = s_K(K, B, ctx)
        for w in P.permutations(d):
            assert s_K(P.perm_action(w, K), B, ctx) * P.sign(w) == value
        res = P.straighten(K)
        if res is None or not res.is_partition:
            assert value == 0
        else:
            assert value == s_K(res.shape, B, ctx) * res.sign


def test_s_skew_is_tableau_sum_on_flag_bundles():
    for m in range(1, 5):
        for a in P.partitions_in_box(2, 3):
            for b in P.partitions_in_box(2, 3):
                if not P.contains(a, b):
                    continue
                cls = s_skew(P.pad(a, 2), b, E(m), CTX)
                tableau_sum = skew_schur_poly(a, b, m).remap(CTX.nvars, CTX.x_indices[:m])
                assert cls == tableau_sum


def test_s_skew_sign_rule():
    # s_{K/L} = sign(w) sign(w') s_{alpha/beta} when K, L straighten to alpha, beta
    B = E(4)
    for K in itertools.product(range(0, 4), repeat=2):
        for L in itertools.product(range(0, 3), repeat=2):
            rk, rl = P.straighten(K), P.straighten(L)
            value = s_skew(K, L, B, CTX)
            if rk is None or rl is None:
                continue
            assert value == s_skew(rk.shape, rl.shape, B, CTX) * rk.sign * rl.sign


def test_schur_class_u():
    v = syms(CTX)
    assert schur_class_U((), CTX) == 1
    assert to_sympy(schur_class_U((1,), CTX), v) == v[4] + v[5]
    assert to_sympy(schur_class_U((1, 1), CTX), v) == v[4] * v[5]


def test_chern_det_rows_use_their_own_bundle():
    rows = [Q(CTX) - E(2), Q(CTX) - E(4)]
    value = chern_det((1, 0), rows, CTX)
    assert value == chern(rows[0], 1, CTX)


def test_schur_u_form_roundtrip():
    cls = schur_class_U((2, 1), CTX) * segre(E(3), 2, CTX) + schur_class_U((1,), CTX) * 5 + chern(E(2), 1, CTX)
    form = to_schur_u_form(cls, CTX)
    assert from_schur_u_form(form, CTX) == cls
    assert set(form) == {(), (1,), (2, 1)}
    assert all(CTX.is_base_class(c) for c in form.values())
    assert schur_form_from_json(schur_form_to_json(form, CTX), CTX) == form


def test_class_json():
    cls = segre(Q(CTX), 2, CTX)
    obj = class_to_json(cls, CTX)
    assert obj["vars"] == ["x1", "x2", "x3", "x4", "u1", "u2"]
    assert class_from_json(obj, CTX) == cls
    with pytest.raises(ValueError):
        class_from_json(dict(obj, vars=["a"] * 6), CTX)


def test_bundle_arithmetic():
    assert (E(3) - E(3)).rank() == 0
    assert Q(CTX).rank() == 2
    assert str(E(4) - U(2)) == "E4-U2"
    assert (2 * E(1)).rank() == 2
    assert U(0) == E(1) - E(1)


def test_at_x_zero():
    cls = segre(Q(CTX), 1, CTX)
    assert CTX.at_x_zero(cls) == (CTX.u(1) + CTX.u(2)) * -1
    assert isinstance(cls, Poly)
