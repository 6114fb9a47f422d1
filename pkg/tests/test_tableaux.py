import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_lr, brute_ssyt, lattice
from schubgysin import partitions as P
from schubgysin.polyring import schur_expand, schur_poly
from schubgysin.tableaux import (
    SkewTableau,
    box_complement_merge,
    box_complement_split,
    enumerate_lr,
    enumerate_ssyt,
    is_lattice_word,
    is_lr,
    lr_coefficient,
    lr_product,
    rectangle_extend,
    rectangle_reduce,
)


def as_grid(t):
    return {(i, j): v for i, row in enumerate(t.rows) for j, v in enumerate(row) if v}


def test_enumerate_ssyt_examples():
    assert len(enumerate_ssyt((1,), (), 2)) == 2
    assert len(enumerate_ssyt((2, 2), (), 2)) == 1
    assert len(enumerate_ssyt((3, 2), (2, 1), 2)) == 4
    assert enumerate_ssyt((2, 1), (2, 1), 3)[0].rows == ((0, 0), (0,))


def test_enumerate_ssyt_matches_brute_force():
    for outer in P.partitions_in_box(3, 3):
        for inner in P.partitions_in_box(3, 3):
            if not P.contains(outer, inner):
                continue
            for d in (1, 2, 3):
                found = [as_grid(t) for t in enumerate_ssyt(outer, inner, d)]
                expected = brute_ssyt(outer, inner, d)
                assert len(found) == len(expected)
                assert sorted(map(sorted, (g.items() for g in found))) == sorted(map(sorted, (g.items() for g in expected)))


def test_enumeration_is_deterministic_and_semistandard():
    first = enumerate_ssyt((3, 2, 1), (1,), 3)
    assert first == enumerate_ssyt((3, 2, 1), (1,), 3)
    assert all(t.is_semistandard() for t in first)


def test_is_lr_examples():
    gamma = (3, 2, 1)
    superstandard = SkewTableau(gamma, (), tuple(tuple([i + 1] * g) for i, g in enumerate(gamma)))
    assert is_lr(superstandard)
    assert not is_lr(SkewTableau((2,), (), ((2, 2),)))
    assert len(enumerate_lr((3, 2), (1, 1), (2, 1))) == 1


@given(st.lists(st.integers(1, 3), max_size=8))
def test_lattice_word_against_reference(word):
    assert is_lattice_word(word) == lattice(word)


def test_incremental_lr_pruning_equals_post_hoc_check():
    for outer in P.partitions_in_box(3, 4):
        for inner in P.partitions_in_box(3, 2):
            if not P.contains(outer, inner):
                continue
            for gamma in P.partitions_of(sum(outer) - sum(inner), 3):
                pruned = enumerate_lr(outer, inner, gamma)
                naive = [t for t in enumerate_ssyt(outer, inner, 3)
                         if t.content(3) == P.pad(gamma, 3) and is_lr(t)]
                assert pruned == naive


def test_lr_coefficient_examples():
    assert lr_coefficient((2, 1), (2, 1), ()) == 1
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((4, 4), (2, 2), (2, 2)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((2,), (3,), ()) == 0
    assert lr_coefficient((2, 1), (1,), (1,)) == 0


def test_lr_coefficient_matches_brute_force():
    for alpha in P.partitions_in_box(3, 3):
        for beta in P.partitions_in_box(2, 2):
            for gamma in P.partitions_of(sum(alpha) - sum(beta), 3) if sum(alpha) >= sum(beta) else []:
                assert lr_coefficient(alpha, beta, gamma) == brute_lr(alpha, beta, gamma)


def test_lr_symmetric_in_lower_indices():
    for alpha in P.partitions_in_box(3, 3):
        for beta in P.partitions_in_box(3, 2):
            for gamma in P.partitions_of(max(sum(alpha) - sum(beta), 0), 3):
                assert lr_coefficient(alpha, beta, gamma) == lr_coefficient(alpha, gamma, beta)


def test_lr_product_against_schur_expand():
    for a in P.partitions_in_box(2, 3):
        for b in P.partitions_in_box(2, 3):
            assert lr_product(a, b, 2) == schur_expand(schur_poly(a, 2) * schur_poly(b, 2), 2)


def test_json_roundtrip():
    for t in enumerate_ssyt((3, 2), (1,), 3):
        assert SkewTableau.from_json(t.to_json()) == t
    assert enumerate_ssyt((2, 1), (1,), 2)[0].to_json() == {"outer": [2, 1], "inner": [1], "rows": [[0, 1], [1]]}


def test_row_structure_of_lr_tableaux():
    d = 3
    for outer in P.partitions_in_box(3, 4):
        for inner in P.partitions_in_box(3, 4):
            if not P.contains(outer, inner):
                continue
            for gamma in P.partitions_of(sum(outer) - sum(inner), d):
                last = P.pad(gamma, d)[d - 1]
                for t in enumerate_lr(outer, inner, gamma):
                    for i, row in enumerate(t.rows):
                        vals = [v for v in row if v]
                        assert all(v <= i + 1 for v in vals)
                        if last:
                            assert vals[len(vals) - last:] == [i + 1] * last


def test_rectangle_reduce_examples():
    t = enumerate_lr((3, 2), (1, 1), (2, 1))[0]
    assert rectangle_reduce(t, 0, 2) is t
    reduced = rectangle_reduce(t, 1, 2)
    assert reduced == enumerate_lr((2, 1), (1, 1), (1,))[0]
    with pytest.raises(ValueError):
        rectangle_reduce(t, 2, 2)


def test_rectangle_bijection_exhaustive():
    d, ell = 2, 1
    for outer in P.partitions_in_box(d, 4):
        for inner in P.partitions_in_box(d, 4):
            if not P.contains(outer, inner):
                continue
            for gamma in P.partitions_of(sum(outer) - sum(inner), d):
                if P.pad(gamma, d)[d - 1] < ell:
                    continue
                src = enumerate_lr(outer, inner, gamma)
                if not src:
                    continue
                image = [rectangle_reduce(t, ell, d) for t in src]
                target = enumerate_lr(P.normalize(P.sub(P.pad(outer, d), (ell,) * d)), inner,
                                      P.normalize(P.sub(P.pad(gamma, d), (ell,) * d)))
                assert sorted(image, key=repr) == sorted(target, key=repr)
                assert [rectangle_extend(r, ell, d) for r in image] == src


def test_lr_rectangle_removal_identity():
    for alpha in P.partitions_in_box(2, 4):
        if not P.contains(alpha, (1, 1)):
            continue
        for beta in P.partitions_in_box(2, 4):
            for gamma in P.partitions_of(max(sum(alpha) - sum(beta), 0), 2):
                if P.contains(gamma, (1, 1)):
                    lhs = lr_coefficient(alpha, beta, gamma)
                    rhs = lr_coefficient(P.normalize(P.sub(P.pad(alpha, 2), (1, 1))), beta,
                                         P.normalize(P.sub(P.pad(gamma, 2), (1, 1))))
                    assert lhs == rhs


def test_lr_box_complement_identity():
    c = 3
    for a in P.partitions_in_box(2, 3):
        for b in P.partitions_in_box(2, 3):
            outer = tuple(c + x for x in P.pad(a, 2))
            inner = P.normalize(tuple(c - x for x in reversed(P.pad(b, 2))))
            for gamma in P.partitions_of(sum(a) + sum(b), 2):
                assert lr_coefficient(gamma, a, b) == lr_coefficient(outer, inner, gamma)


def test_lr_two_rectangles_identity():
    d = 2
    for a in P.partitions_in_box(2, 3):
        for b in P.partitions_in_box(2, 3):
            for ell in (3, 4):
                for m in (0, 1, 2):
                    for gamma in P.partitions_of(sum(a) + sum(b), d):
                        if P.pad(gamma, d)[d - 1] < m:
                            continue
                        outer = P.normalize(tuple(x + ell - m for x in P.pad(a, d)))
                        inner = P.normalize(tuple(ell - x for x in reversed(P.pad(b, d))))
                        reduced = P.normalize(tuple(x - m for x in P.pad(gamma, d)))
                        assert lr_coefficient(gamma, a, b) == lr_coefficient(outer, inner, reduced)


def test_box_complement_merge_examples():
    d = 2
    ta = enumerate_ssyt((2, 1), (), d)[0]
    empty = enumerate_ssyt((), (), d)[0]
    merged = box_complement_merge(ta, empty, (2, 2), d)
    assert merged.outer == (4, 3) and merged.inner == (2, 2)
    assert [v for v in merged.rows[0] if v] == list(ta.rows[0])
    # four pairs fill the four tableaux of shape (3,2)/(2,1)
    ones = enumerate_ssyt((1,), (), d)
    images = {box_complement_merge(x, y, (2, 2), d) for x in ones for y in ones}
    assert images == set(enumerate_ssyt((3, 2), (2, 1), d))


@pytest.mark.parametrize("square", [(2, 2), (3, 3)])
def test_box_complement_is_a_bijection(square):
    d = 2
    c = square[0]
    for a in P.partitions_in_box(d, 2):
        for b in P.partitions_in_box(d, 2):
            images = []
            for ta in enumerate_ssyt(a, (), d):
                for tb in enumerate_ssyt(b, (), d):
                    t = box_complement_merge(ta, tb, square, d)
                    assert t.is_semistandard()
                    assert box_complement_split(t, square, d) == (ta, tb)
                    # content law of the half-turn rotation
                    assert t.content(d) == P.add(ta.content(d), P.reverse(tb.content(d)))
                    images.append(t)
            outer = P.normalize(tuple(c + x for x in P.pad(a, d)))
            inner = P.normalize(tuple(c - x for x in reversed(P.pad(b, d))))
            assert sorted(images, key=repr) == sorted(enumerate_ssyt(outer, inner, d), key=repr)


def test_box_complement_rejects_bad_rectangles():
    t = enumerate_ssyt((1,), (), 2)[0]
    with pytest.raises(ValueError):
        box_complement_merge(t, t, (2, 1), 2)
    with pytest.raises(ValueError):
        box_complement_merge(t, enumerate_ssyt((3,), (), 2)[0], (2, 2), 2)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_lr_against_schur_expand_random(data):
    box = list(P.partitions_in_box(3, 3))
    a = data.draw(st.sampled_from(box))
    b = data.draw(st.sampled_from(box))
    expansion = schur_expand(schur_poly(a, 3) * schur_poly(b, 3), 3)
    for gamma in P.partitions_of(sum(a) + sum(b), 3):
        assert lr_coefficient(gamma, a, b) == expansion.get(gamma, 0)
