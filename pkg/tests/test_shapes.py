import pytest

from klrcalc import (ContainmentError, Partition, contains,
                     is_horizontal_strip, partitions, partitions_up_to,
                     rotate, rotated_skew, skew)


def test_partition_normalization():
    assert Partition((3, 2, 0, 0)) == Partition((3, 2))
    assert len(Partition((3, 2, 0))) == 2
    assert Partition(()).size() == 0
    assert Partition((4, 3, 1)).size() == 8
    assert Partition((2, 1))[5] == 0
    assert Partition((2, 1)).pad(4) == (2, 1, 0, 0)


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_contains_examples():
    assert contains((2, 1), (4, 3, 1))
    assert contains((), (5, 5))
    assert not contains((2, 2), (3, 1))


def test_contains_is_partial_order():
    universe = list(partitions_up_to(6))
    for a in universe:
        assert contains(a, a)
    for a in universe:
        for b in universe:
            if contains(a, b) and contains(b, a):
                assert a == b
    for a in universe:
        bigger = [b for b in universe if contains(a, b)]
        for b in bigger:
            for c in universe:
                if contains(b, c):
                    assert contains(a, c)


def test_skew_cells():
    shape = skew((4, 3, 2), (2, 1))
    assert set(shape.cells()) == {(1, 3), (1, 4), (2, 2), (2, 3), (3, 1), (3, 2)}
    assert shape.num_cells() == 6
    assert skew((3, 1), (3, 1)).cells() == []
    assert len(skew((3, 2, 1)).cells()) == 6


def test_skew_rejects_noncontained():
    with pytest.raises(ContainmentError):
        skew((2, 1), (3,))


def test_horizontal_strip_examples():
    assert is_horizontal_strip((3, 1), (2,))
    assert not is_horizontal_strip((2, 2), (1,))
    assert is_horizontal_strip((3, 2), (3, 2))
    assert not is_horizontal_strip((2,), (3,))  # containment fails


def test_horizontal_strip_matches_column_scan():
    universe = list(partitions_up_to(8))
    for outer in universe:
        for inner in universe:
            if not contains(inner, outer):
                continue
            cols = {}
            for (r, c) in skew(outer, inner).cells():
                cols[c] = cols.get(c, 0) + 1
            expected = all(v <= 1 for v in cols.values())
            assert is_horizontal_strip(outer, inner) == expected


def test_rotate_embedding():
    shape = rotate((3, 2, 1))
    assert shape.outer == Partition((3, 3, 3))
    assert shape.inner == Partition((2, 1))
    # top row holds 1 right-justified cell, then 2, then 3
    assert set(shape.cells()) == {(1, 3), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)}
    assert rotate(()).cells() == []
    assert shape.top_row(1) == 3 and shape.bottom_row(3) == 1


def test_rotate_is_an_involution_on_cells():
    # rotating the rotated cell set 180 degrees gives back the diagram
    for lam in partitions_up_to(8):
        shape = rotate(lam)
        height = shape.num_rows
        width = shape.outer[0] if shape.outer else 0
        back = {(height + 1 - r, width + 1 - c) for (r, c) in shape.cells()}
        assert back == set(skew(lam).cells())
        assert shape.num_cells() == lam.size()


def test_rotated_skew_matches_figure():
    shape = rotated_skew((4, 3, 1), (2, 1))
    assert set(shape.cells()) == {(1, 4), (2, 2), (2, 3), (3, 1), (3, 2)}
    assert rotated_skew((3, 2), (3, 2)).num_cells() == 0
    assert rotated_skew((4, 2, 1), ()) == rotate((4, 2, 1))


def test_rotated_skew_requires_containment():
    with pytest.raises(ContainmentError):
        rotated_skew((2, 1), (3,))


def test_partitions_generator():
    assert [p.parts for p in partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in partitions(3, max_length=2)] == [(3,), (2, 1)]
    assert [p.parts for p in partitions(0)] == [()]
    # descending lex refines dominance, which the basis peel relies on:
    # nothing emitted later may strictly dominate something emitted earlier
    for d in range(8):
        seen = []
        for p in partitions(d):
            for q in seen:
                length = max(len(p.parts), len(q))
                psum = [sum(p.parts[:i + 1]) for i in range(length)]
                qsum = [sum(q[:i + 1]) for i in range(length)]
                assert not all(x >= y for x, y in zip(psum, qsum)) or p.parts == q
            seen.append(p.parts)
