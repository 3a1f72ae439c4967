"""Triangular interlacing patterns, markings, and the two filling bijections.

A pattern of size n is a triangular integer array whose rows, read as
partitions, interlace from top to bottom.  Marking a position with
strictly positive south-east slack records one extra entry insertion;
expanding all marks row strip by row strip produces either a straight
set-valued tableau (`upsilon`) or a rotated one (`omega`).
"""

from __future__ import annotations

import itertools

from .errors import DomainError, InvalidMark, NotRotatedShape, NotStraightShape
from .shapes import Partition, RotatedShape, as_partition, rotate, skew
from .tableaux import SetValuedFilling


class GTPattern:
    """Triangular integer array; row i (1-based, from the top) has i entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        for i, row in enumerate(rows, start=1):
            if len(row) != i:
                raise ValueError(f"row {i} must have {i} entries, got {len(row)}")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def x(self, i: int, j: int) -> int:
        """Entry in row i at position j, both 1-based."""
        return self.rows[i - 1][j - 1]

    def row_partition(self, i: int) -> Partition:
        """Row i as a partition (row 0 is empty)."""
        return Partition(self.rows[i - 1]) if i else Partition(())

    def __eq__(self, other):
        if isinstance(other, GTPattern):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"GTPattern{self.rows}"


def validate(pattern: GTPattern) -> bool:
    """All north-east and south-east differences are non-negative."""
    rows = pattern.rows
    for i in range(2, len(rows) + 1):
        for j in range(1, i):
            if rows[i - 1][j - 1] - rows[i - 2][j - 1] < 0:
                return False
            if rows[i - 2][j - 1] - rows[i - 1][j] < 0:
                return False
    return True


def markable_positions(pattern: GTPattern) -> frozenset:
    """Positions (i, j) with strictly positive south-east slack."""
    rows = pattern.rows
    return frozenset((i, j)
                     for i in range(2, len(rows) + 1)
                     for j in range(1, i)
                     if rows[i - 2][j - 1] - rows[i - 1][j] > 0)


class MarkedGTPattern:
    """A pattern together with marks at positions of positive slack."""

    __slots__ = ("pattern", "marks")

    def __init__(self, pattern: GTPattern, marks=()):
        marks = frozenset((int(i), int(j)) for (i, j) in marks)
        bad = marks - markable_positions(pattern)
        if bad:
            raise ValueError(f"positions not markable: {sorted(bad)}")
        self.pattern = pattern
        self.marks = marks

    @property
    def n(self) -> int:
        return self.pattern.n

    def __eq__(self, other):
        if isinstance(other, MarkedGTPattern):
            return self.pattern == other.pattern and self.marks == other.marks
        return NotImplemented

    def __hash__(self):
        return hash((self.pattern, self.marks))

    def __repr__(self):
        return f"MarkedGTPattern({self.pattern!r}, marks={sorted(self.marks)})"


def _interlacings(row):
    """All rows of length len(row)-1 interlacing `row`, ascending lex."""
    spans = [range(row[j + 1], row[j] + 1) for j in range(len(row) - 1)]
    return itertools.product(*spans)


def enumerate_gt(lam, n: int):
    """Yield every pattern of size n whose bottom row is lam (zero padded).

    Rows grow from the bottom up; each candidate row ranges over all
    partitions interlacing the one below it, so the stream is exactly
    the interlacing characterization, depth first and deterministic.
    """
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} needs more than {n} rows")
    if n == 0:
        yield GTPattern(())
        return

    def grow(stack):
        if len(stack[0]) == 1:
            yield GTPattern(stack)
            return
        for above in _interlacings(stack[0]):
            yield from grow([above] + stack)

    yield from grow([lam.pad(n)])


def marked_patterns(pattern: GTPattern):
    """All markings of `pattern` in a fixed order, the empty marking first."""
    positions = sorted(markable_positions(pattern))
    for m in range(1 << len(positions)):
        yield MarkedGTPattern(
            pattern, frozenset(p for b, p in enumerate(positions) if m >> b & 1))


def upsilon(marked: MarkedGTPattern) -> SetValuedFilling:
    """Expand a marked pattern into a set-valued tableau of straight shape.

    Pass i writes a singleton {i} into every cell of the i-th row strip.
    A mark (i, j) then appends i to the last cell of row j as it stood
    before the pass: every other cell of that row has a right neighbour
    with smaller entries, so this is the unique position where an i can
    be added without breaking semistandardness.
    """
    pattern = marked.pattern
    n = pattern.n
    if not validate(pattern):
        raise DomainError(f"invalid pattern {pattern!r}")
    rows = []
    for i in range(1, n + 1):
        prev_lens = [len(row) for row in rows]
        for j, width in enumerate(pattern.rows[i - 1]):
            have = prev_lens[j] if j < len(prev_lens) else 0
            if j >= len(rows) and width > 0:
                rows.append([])
            for _ in range(have, width):
                rows[j].append({i})
        for (mi, mj) in sorted(marked.marks):
            if mi != i:
                continue
            have = prev_lens[mj - 1] if mj - 1 < len(prev_lens) else 0
            if have == 0:
                raise InvalidMark(f"pass {i}: row {mj} has no cell to extend")
            rows[mj - 1][have - 1].add(i)
    shape = skew(Partition(tuple(len(row) for row in rows)), ())
    return SetValuedFilling(
        shape, {(j + 1, c + 1): vals for j, row in enumerate(rows) for c, vals in enumerate(row)})


def upsilon_inverse(filling: SetValuedFilling, n=None) -> MarkedGTPattern:
    """Recover the marked pattern that expands to `filling`.

    Row i of the pattern is the shape covered by cells with minimum
    entry at most i; every value sitting in a cell whose minimum is
    smaller contributes one mark.
    """
    if filling.shape.inner:
        raise NotStraightShape(f"inner partition {filling.shape.inner} is not empty")
    rows = filling.rows()
    top = max((max(vals) for vals in filling.entries.values()), default=0)
    if n is None:
        n = max(top, len(rows))
    if top > n or len(rows) > n:
        raise DomainError(f"filling does not fit in a pattern of size {n}")

    pattern_rows = []
    for i in range(1, n + 1):
        counts = [sum(1 for vals in row if min(vals) <= i) for row in rows]
        for j, c in enumerate(counts):
            if c and j >= i:
                raise DomainError(f"value at most {i} appears below row {i}")
            if c and any(min(vals) > i for vals in rows[j][:c]):
                raise DomainError("cells with small minima are not left justified")
        pattern_rows.append(tuple(counts[:i]) + (0,) * (i - len(counts[:i])))

    marks = set()
    for j, row in enumerate(rows, start=1):
        for vals in row:
            small = min(vals)
            marks.update((v, j) for v in vals if v > small)

    pattern = GTPattern(pattern_rows)
    if not validate(pattern):
        raise DomainError("filling is not semistandard enough to invert")
    try:
        return MarkedGTPattern(pattern, marks)
    except ValueError as exc:
        raise DomainError(f"recovered marks are not markable: {exc}") from exc


def omega(marked: MarkedGTPattern) -> SetValuedFilling:
    """Expand a marked pattern into a set-valued filling of a rotated shape.

    Pass i writes n+1-i into every new cell of the i-th strip; rows are
    indexed from the bottom and grow leftwards.  A mark (i, j) prepends
    n+1-i to the leftmost cell of bottom-row j as it stood before the
    pass, the unique position that keeps the filling semistandard.
    """
    pattern = marked.pattern
    n = pattern.n
    if not validate(pattern):
        raise DomainError(f"invalid pattern {pattern!r}")
    # rows[j][o]: bottom-row j+1, offset o from the right edge
    rows = []
    for i in range(1, n + 1):
        value = n + 1 - i
        prev_lens = [len(row) for row in rows]
        for j, width in enumerate(pattern.rows[i - 1]):
            have = prev_lens[j] if j < len(prev_lens) else 0
            if j >= len(rows) and width > 0:
                rows.append([])
            for _ in range(have, width):
                rows[j].append({value})
        for (mi, mj) in sorted(marked.marks):
            if mi != i:
                continue
            have = prev_lens[mj - 1] if mj - 1 < len(prev_lens) else 0
            if have == 0:
                raise InvalidMark(f"pass {i}: bottom-row {mj} has no cell to extend")
            rows[mj - 1][have - 1].add(value)

    lam = Partition(tuple(len(row) for row in rows))
    shape = rotate(lam)
    height = len(lam)
    width = lam[0]
    entries = {}
    for j, row in enumerate(rows, start=1):
        for o, vals in enumerate(row):
            entries[(height + 1 - j, width - o)] = vals
    return SetValuedFilling(shape, entries)


def _rotated_source(shape) -> Partition:
    """The partition whose rotated embedding equals `shape`."""
    if isinstance(shape, RotatedShape):
        return shape.lam
    height = shape.num_rows
    if height == 0:
        return Partition(())
    width = shape.outer[0]
    if any(p != width for p in shape.outer):
        raise NotRotatedShape(f"outer {shape.outer} is not a full rectangle width")
    lengths = tuple(shape.outer[height - j] - shape.inner[height - j]
                    for j in range(1, height + 1))
    try:
        lam = Partition(lengths)
    except ValueError as exc:
        raise NotRotatedShape(f"row lengths {lengths} not a partition") from exc
    if len(lam) != height or lam[0] != width:
        raise NotRotatedShape(f"{shape!r} is not right justified")
    return lam


def omega_inverse(filling: SetValuedFilling, n=None) -> MarkedGTPattern:
    """Recover the marked pattern that expands to `filling` under omega.

    Row i of the pattern is the shape (rows read from the bottom) of
    cells whose maximum entry is at least n+1-i; every value below a
    cell's maximum contributes one mark.
    """
    lam = _rotated_source(filling.shape)
    height = len(lam)
    width = lam[0]
    # bottom-row lists, offset 0 is the rightmost cell
    rows = [[filling.entries[(height + 1 - j, width - o)] for o in range(lam[j - 1])]
            for j in range(1, height + 1)]
    top = max((max(vals) for vals in filling.entries.values()), default=0)
    if n is None:
        n = max(top, height)
    if top > n or height > n:
        raise DomainError(f"filling does not fit in a pattern of size {n}")

    pattern_rows = []
    for i in range(1, n + 1):
        threshold = n + 1 - i
        counts = [sum(1 for vals in row if max(vals) >= threshold) for row in rows]
        for j, c in enumerate(counts):
            if c and j >= i:
                raise DomainError(f"value at least {threshold} appears above row {i}")
            if c and any(max(vals) < threshold for vals in rows[j][:c]):
                raise DomainError("cells with large maxima are not right justified")
        pattern_rows.append(tuple(counts[:i]) + (0,) * (i - len(counts[:i])))

    marks = set()
    for j, row in enumerate(rows, start=1):
        for vals in row:
            big = max(vals)
            marks.update((n + 1 - v, j) for v in vals if v < big)

    pattern = GTPattern(pattern_rows)
    if not validate(pattern):
        raise DomainError("filling is not semistandard enough to invert")
    try:
        return MarkedGTPattern(pattern, marks)
    except ValueError as exc:
        raise DomainError(f"recovered marks are not markable: {exc}") from exc


def weight_reversal_check(marked: MarkedGTPattern) -> bool:
    """Weight of the rotated image equals the reversed weight of the straight one."""
    from .tableaux import weight

    n = marked.n
    straight = weight(upsilon(marked), n)
    rotated = weight(omega(marked), n)
    return rotated == tuple(reversed(straight))
