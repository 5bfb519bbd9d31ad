import random

import pytest
from hypothesis import given, strategies as st

from skewfusion.diagrams import (Partition, SkewDiagram, column_tableau,
                                 partitions_of, skew_dimension_jt,
                                 skew_dimension_ssyt, skew_shapes,
                                 validate_bounds)

partition = st.lists(st.integers(1, 8), max_size=6).map(
    lambda parts: Partition(sorted(parts, reverse=True)))


def test_partition_validation():
    assert list(Partition((3, 2, 2, 0, 0))) == [3, 2, 2]
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_indexing_past_length():
    p = Partition((3, 1))
    assert p[1] == 3 and p[2] == 1 and p[3] == 0 and p[10] == 0


def test_conjugate_examples():
    assert list(Partition((5, 3, 3, 3, 3)).conjugate()) == [5, 5, 5, 1, 1]
    assert list(Partition((0, 0)).conjugate()) == []
    p = Partition((3, 3, 2))
    assert p.conjugate().conjugate() == p


@given(partition)
def test_conjugate_involution(p):
    assert p.conjugate().conjugate() == p


@given(partition)
def test_conjugate_counts_columns(p):
    c = p.conjugate()
    for k in range(1, (p[1] or 0) + 1):
        assert c[k] == sum(1 for part in p if part >= k)


def test_skew_containment_enforced():
    with pytest.raises(ValueError):
        SkewDiagram(Partition((2,)), Partition((3,)))


def test_column_tableau_reference_shape():
    w = SkewDiagram(Partition((5, 3, 3, 3, 3)), Partition((3, 3, 2)))
    ct = column_tableau(w)
    assert ct.n == 9
    assert list(ct.contents) == [-3, -4, -2, -3, 0, -1, -2, 3, 4]
    assert list(ct.columns) == [1, 1, 2, 2, 3, 3, 3, 4, 5]


def test_column_tableau_small():
    ct = column_tableau(SkewDiagram(Partition((1,)), Partition(())))
    assert ct.n == 1 and list(ct.contents) == [0] and list(ct.columns) == [1]

    ct = column_tableau(SkewDiagram(Partition((2, 1)), Partition(())))
    assert list(ct.boxes) == [(1, 1), (2, 1), (1, 2)]
    assert list(ct.contents) == [0, -1, 1]
    assert list(ct.columns) == [1, 1, 2]


def test_column_contents_consecutive_decreasing():
    for n in range(7):
        for w in skew_shapes(n):
            ct = column_tableau(w)
            assert ct.n == w.n_boxes
            for col in set(ct.columns):
                run = [c for c, j in zip(ct.contents, ct.columns) if j == col]
                assert all(a - b == 1 for a, b in zip(run, run[1:]))


def test_jt_examples():
    assert skew_dimension_jt(SkewDiagram(Partition((2,)), Partition(())), 2) == 3
    assert skew_dimension_jt(SkewDiagram(Partition((1, 1)), Partition(())), 2) == 1
    assert skew_dimension_jt(SkewDiagram(Partition((1,)), Partition((1,))), 3) == 1


def test_ssyt_examples():
    assert skew_dimension_ssyt(SkewDiagram(Partition((2, 1)), Partition(())), 2) == 2
    # (2,2)/(1) is Littlewood-Richardson equivalent to (2,1); over C^2 that
    # module has dimension 2, confirmed by direct enumeration: with boxes
    # a=(1,2), b=(2,1), c=(2,2) the constraints are a<c and b<=c, giving
    # (a,b,c) in {(1,1,2),(1,2,2)}
    assert skew_dimension_ssyt(SkewDiagram(Partition((2, 2)), Partition((1,))), 2) == 2
    assert skew_dimension_ssyt(SkewDiagram(Partition((1, 1)), Partition(())), 1) == 0


def test_jt_matches_ssyt_exhaustive_small():
    for n in range(6):
        for w in skew_shapes(n):
            for N in range(1, 5):
                assert skew_dimension_jt(w, N) == skew_dimension_ssyt(w, N), (w, N)


def test_jt_matches_ssyt_sampled_larger():
    rng = random.Random(11)
    for n in (7, 8):
        shapes = list(skew_shapes(n))
        for w in rng.sample(shapes, 60):
            for N in (2, 3, 4):
                assert skew_dimension_jt(w, N) == skew_dimension_ssyt(w, N), (w, N)


def test_validate_bounds_examples():
    w = SkewDiagram(Partition((5, 3, 3, 3, 3)), Partition((3, 3, 2)))
    rep = validate_bounds(w, 5, 3, "gl")
    assert rep.lam_bound and rep.mu_bound and rep.admissible

    w = SkewDiagram(Partition((1, 1, 1)), Partition(()))
    assert not validate_bounds(w, 2, 0, "gl").nonvanishing

    w = SkewDiagram(Partition((2, 2)), Partition((1,)))
    assert not validate_bounds(w, 2, 1, "so").lam_bound

    with pytest.raises(ValueError):
        validate_bounds(w, 2, 1, "sp")


def test_partitions_of():
    assert [list(p) for p in partitions_of(4)] == [
        [4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert list(partitions_of(0)) == [Partition(())]
    assert all(p[1] <= 2 for p in partitions_of(6, max_part=2))
    assert all(len(p) <= 2 for p in partitions_of(6, max_len=2))


def test_skew_shapes_box_counts_and_uniqueness():
    for n in range(7):
        shapes = list(skew_shapes(n))
        assert all(w.n_boxes == n for w in shapes)
        keys = {frozenset(w.boxes()) for w in shapes}
        assert len(keys) == len(shapes)


def test_skew_shapes_counts():
    # frozen after an independent hand count at n <= 2: n=1 gives the single
    # box; n=2 gives the row, the column, and the disconnected pair
    # (2,1)/(1); larger values are regression pins
    assert [len(list(skew_shapes(n))) for n in range(7)] == [
        1, 1, 3, 13, 70, 427, 2789]
