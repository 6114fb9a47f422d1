import itertools

import pytest
import sympy

from oracles import sympy_h, syt_by_hooks, to_sympy
from schubgysin import partitions as P
from schubgysin.chow import E, FlagContext, schur_class_U, segre
from schubgysin.gysin import (
    as_class,
    check_kempf_laksov,
    check_schubert,
    pi_pushforward,
    pi_pushforward_schur,
    pi_pushforward_via_schur,
    projective_pushforward,
    theta_partial,
    theta_pushforward,
    theta_pushforward_iterative,
    theta_pushforward_schur,
    theta_star,
    varpi_pushforward,
    varpi_pushforward_schur,
)
from schubgysin.polyring import NotSymmetricError, Poly, schur_poly
from schubgysin.verify import grassmannian_degree


def strict(d, n):
    return [tuple(reversed(c)) for c in itertools.combinations(range(1, n + 1), d)]


def homogeneous_degree(cls):
    degrees = {sum(e) for e, _ in cls}
    assert len(degrees) <= 1
    return degrees.pop() if degrees else None


def test_validation():
    ctx = FlagContext(4, 2)
    assert check_kempf_laksov((4, 2), ctx) == (4, 2)
    for bad in [(2, 2), (5, 1), (3,), (2, 0)]:
        with pytest.raises(ValueError):
            check_kempf_laksov(bad, ctx)
    assert check_schubert((2, 2, 0), ctx) == (2, 2)
    with pytest.raises(ValueError):
        check_schubert((3,), ctx)
    with pytest.raises(ValueError):
        projective_pushforward(5, 1, ctx)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_projective_bundle_against_complete_symmetric_functions(m):
    ctx = FlagContext(4, 1)
    v = sympy.symbols("x1:5 u1")
    for i in range(0, 7):
        expected = sympy.expand(sympy_h(i - m + 1, v[:m]))
        assert to_sympy(projective_pushforward(m, i, ctx), v) == expected
        # with d = 1 the Kempf-Laksov bundle is the projective bundle itself
        f = Poly(1, {(i,): 1})
        assert theta_pushforward((m,), f, ctx) == projective_pushforward(m, i, ctx)
        assert theta_pushforward_iterative((m,), f, ctx) == projective_pushforward(m, i, ctx)


def test_determinant_example_for_a_two_step_flag():
    ctx = FlagContext(4, 2)
    mu = (3, 1)
    value = theta_pushforward_schur(mu, (2, 2), ctx)
    # det [[s_1(E3), s_3(E1)], [s_0(E3), s_2(E1)]]
    by_hand = segre(E(3), 1, ctx) * segre(E(1), 2, ctx) - segre(E(1), 3, ctx)
    assert value == by_hand
    assert theta_pushforward(mu, {(2, 2): 1}, ctx) == by_hand


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (4, 3)])
def test_oracle_triangle(n, d):
    ctx = FlagContext(n, d)
    for mu in strict(d, n):
        for alpha in P.partitions_in_box(d, 3):
            a = theta_pushforward(mu, schur_poly(alpha, d), ctx)
            assert a == theta_pushforward_schur(mu, alpha, ctx)
            assert a == theta_pushforward_iterative(mu, {alpha: 1}, ctx)


def test_degree_drops_by_the_fiber_dimension():
    ctx = FlagContext(5, 2)
    for mu in strict(2, 5):
        fiber = sum(m - 1 for m in mu) - 1
        for alpha in P.partitions_in_box(2, 3):
            value = theta_pushforward_schur(mu, alpha, ctx)
            if sum(alpha) < fiber:
                assert value == 0
            elif value:
                assert homogeneous_degree(value) == sum(alpha) - fiber


def test_partial_pushforwards_match_the_closed_form():
    ctx = FlagContext(5, 3)
    for mu in [(5, 3, 1), (4, 3, 2), (5, 4, 3)]:
        for alpha in [(), (1,), (2, 1), (3, 1, 1), (2, 2, 2)]:
            for e in range(4):
                assert theta_partial(mu, {alpha: 1}, e, ctx) == theta_star(mu, {alpha: 1}, e, ctx)


def test_stage_zero_is_the_identity():
    ctx = FlagContext(4, 2)
    f = {(2, 1): 1}
    assert theta_partial((4, 2), f, 0, ctx) == as_class(f, ctx)
    assert theta_star((4, 2), f, 0, ctx) == schur_class_U((2, 1), ctx)


def test_base_coefficients_pull_out():
    ctx = FlagContext(4, 2)
    base = segre(E(2), 2, ctx) + ctx.x(3)
    f = schur_class_U((3, 1), ctx) * base
    assert theta_pushforward((4, 3), f, ctx) == theta_pushforward_schur((4, 3), (3, 1), ctx) * base


def test_rejects_non_symmetric_input():
    ctx = FlagContext(4, 2)
    with pytest.raises(NotSymmetricError):
        theta_pushforward((4, 2), Poly.gen(2, 0), ctx)
    with pytest.raises(NotSymmetricError):
        theta_pushforward((4, 2), ctx.u(1), ctx)
    with pytest.raises(ValueError):
        as_class(Poly.gen(3, 0), ctx)


def test_varpi_examples():
    for n, d in [(4, 2), (5, 2), (5, 3)]:
        ctx = FlagContext(n, d)
        full = P.rectangle(n - d, d)
        # the Schubert bundle of the full rectangle maps isomorphically to X
        assert varpi_pushforward(full, {(): 1}, ctx) == 1
        for lam in P.partitions_in_box(d, n - d):
            hat = P.dual(lam, n, d)
            assert ctx.at_x_zero(varpi_pushforward_schur(lam, hat, ctx)) == 1


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2)])
def test_varpi_determinant_equals_extraction(n, d):
    ctx = FlagContext(n, d)
    for lam in P.partitions_in_box(d, n - d):
        for alpha in P.partitions_in_box(d, n - d):
            assert varpi_pushforward_schur(lam, alpha, ctx) == varpi_pushforward(lam, {alpha: 1}, ctx)


def test_pi_specialization():
    for n, d in [(4, 2), (5, 2), (5, 3)]:
        ctx = FlagContext(n, d)
        for gamma in P.partitions_in_box(d, n - d + 2):
            a = pi_pushforward_schur(gamma, ctx)
            assert a == varpi_pushforward_schur((), gamma, ctx)
            assert a == pi_pushforward({gamma: 1}, ctx)
        assert pi_pushforward_schur(P.rectangle(n - d, d), ctx) == 1
        assert pi_pushforward_schur((), ctx) == 0


def test_pi_via_schur_expansion_matches_extraction():
    ctx = FlagContext(4, 2)
    f = schur_class_U((1,), ctx) ** 3 * segre(E(2), 1, ctx) + schur_class_U((2, 2), ctx)
    assert pi_pushforward(f, ctx) == pi_pushforward_via_schur(f, ctx)


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (5, 3), (6, 2)])
def test_grassmannian_degrees_count_standard_tableaux(n, d):
    expected = syt_by_hooks(P.rectangle(d, n - d))
    assert grassmannian_degree(n, d) == expected
    assert grassmannian_degree(n, d, "schur") == expected


def test_classical_degrees():
    assert grassmannian_degree(4, 2) == 2
    assert grassmannian_degree(5, 2) == 5
