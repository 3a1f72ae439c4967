"""Worked objects shared across the test modules.

Each object is written down once, by hand, and reused verbatim, so the
tests compare code output against frozen data rather than against other
code.
"""

from klrcalc import (GTPattern, MarkedGTPattern, SetValuedFilling, rotate,
                     skew)

# GT pattern of size 4 with bottom row (4,3,2,0)
GT_EXAMPLE = GTPattern([(2,), (3, 1), (3, 2, 1), (4, 3, 2, 0)])
GT_EXAMPLE_MARKABLE = {(2, 1), (3, 1), (4, 3)}


def skew_example_tableau():
    """Shape (4,3,2)/(2,1), weight (3,2,2,3); the first worked set-valued filling."""
    return SetValuedFilling.from_rows(
        skew((4, 3, 2), (2, 1)),
        [[{1, 2}, {2, 3}], [{1}, {3, 4}], [{1, 4}, {4}]])


def reading_word_tableau():
    """Shape (3,2); column word 322141432, row word 322114432."""
    return SetValuedFilling.from_rows(
        skew((3, 2)),
        [[{1}, {1, 2}, {2, 3}], [{2, 3, 4}, {4}]])


def contratableau_example():
    """The first worked contratableau, shape rotated (3,2,1)."""
    return SetValuedFilling.from_rows(
        rotate((3, 2, 1)),
        [[{1, 2}], [{2, 3}, {3}], [{1, 3}, {4}, {4}]])


def upsilon_marked():
    return MarkedGTPattern(GT_EXAMPLE, [(3, 1), (4, 3)])


def upsilon_marked_output():
    return SetValuedFilling.from_rows(
        skew((4, 3, 2)),
        [[{1}, {1}, {2, 3}, {4}], [{2}, {3}, {4}], [{3, 4}, {4}]])


def upsilon_unmarked_output():
    return SetValuedFilling.from_rows(
        skew((4, 3, 2)),
        [[{1}, {1}, {2}, {4}], [{2}, {3}, {4}], [{3}, {4}]])


def omega_marked():
    return MarkedGTPattern(GT_EXAMPLE, [(2, 1), (3, 1), (4, 3)])


def omega_marked_output():
    # bottom-up rows [1 | 2,3 | 3,4 | 4], [1 | 2 | 3], [1 | 1,2]
    return SetValuedFilling.from_rows(
        rotate((4, 3, 2)),
        [[{1}, {1, 2}], [{1}, {2}, {3}], [{1}, {2, 3}, {3, 4}, {4}]])


def omega_unmarked_output():
    return SetValuedFilling.from_rows(
        rotate((4, 3, 2)),
        [[{1}, {2}], [{1}, {2}, {3}], [{1}, {3}, {4}, {4}]])


# Final worked example: lam=(3,2,1), mu=(3,1), nu=(4,4,3,2)
FINAL_LAM = (3, 2, 1)
FINAL_MU = (3, 1)
FINAL_NU = (4, 4, 3, 2)


def t1():
    return SetValuedFilling.from_rows(
        skew(FINAL_MU), [[{1}, {2, 3}, {4}], [{2, 3, 4}]])


def t2():
    return SetValuedFilling.from_rows(
        skew(FINAL_MU), [[{1}, {2}, {3, 4}], [{2, 3, 4}]])


def s1():
    return SetValuedFilling.from_rows(
        rotate(FINAL_LAM), [[{2}], [{1, 2, 3}, {3}], [{2, 3}, {4}, {4}]])


def s2():
    return SetValuedFilling.from_rows(
        rotate(FINAL_LAM), [[{1, 2}], [{2, 3}, {3}], [{2, 3}, {4}, {4}]])


X_T1_ROWS = ((1,), (2, 1), (2, 1, 0), (3, 1, 0, 0))
M_T1 = {(3, 1), (3, 2), (4, 2)}
Y_T1_ROWS = ((2,), (3, 2), (3, 2, 1), (3, 2, 1, 0))
MP_T1 = {(4, 2), (3, 1), (3, 2)}
