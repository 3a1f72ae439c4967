"""JSON encoding and decoding for every value the command line exchanges.

Fillings carry their shape inline; rotated shapes add a "rotated_of"
tag so the bottom-up row convention survives a round trip.  Polynomial
coefficients are emitted as strings because they are arbitrary
precision integers.
"""

from __future__ import annotations

from .grothendieck import BasisExpansion, SparseIntPolynomial
from .gtpatterns import GTPattern, MarkedGTPattern
from .lr import GammaTrace
from .shapes import RotatedShape, rotate, skew
from .tableaux import SetValuedFilling


def filling_obj(filling: SetValuedFilling) -> dict:
    obj = {
        "outer": list(filling.shape.outer),
        "inner": list(filling.shape.inner),
        "rows": [[sorted(vals) for vals in row] for row in filling.rows()],
    }
    if isinstance(filling.shape, RotatedShape):
        obj["rotated_of"] = list(filling.shape.lam)
    return obj


def filling_from_obj(obj: dict) -> SetValuedFilling:
    if "rotated_of" in obj:
        shape = rotate(obj["rotated_of"])
        if list(shape.outer) != list(obj.get("outer", shape.outer)) or \
                list(shape.inner) != list(obj.get("inner", shape.inner)):
            raise ValueError("rotated_of tag contradicts outer/inner")
    else:
        shape = skew(obj["outer"], obj.get("inner", ()))
    return SetValuedFilling.from_rows(shape, obj["rows"])


def pattern_obj(pattern: GTPattern) -> dict:
    return {"rows": [list(row) for row in pattern.rows]}


def marks_list(marks) -> list:
    return [list(m) for m in sorted(marks)]


def marked_obj(marked: MarkedGTPattern) -> dict:
    obj = pattern_obj(marked.pattern)
    obj["marks"] = marks_list(marked.marks)
    return obj


def marked_from_obj(obj: dict) -> MarkedGTPattern:
    return MarkedGTPattern(GTPattern(obj["rows"]),
                           [tuple(m) for m in obj.get("marks", [])])


def poly_obj(p: SparseIntPolynomial) -> list:
    return [{"exp": list(e), "coef": str(c)}
            for e, c in sorted(p.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))]


def poly_from_obj(items, n: int, cap=None) -> SparseIntPolynomial:
    return SparseIntPolynomial(
        n, [(tuple(t["exp"]), int(t["coef"])) for t in items], cap)


def expansion_obj(expansion: BasisExpansion) -> list:
    return [{"nu": list(nu.parts), "C": abs(c), "sign": 1 if c > 0 else -1}
            for nu, c in expansion.items()]


def trace_obj(trace: GammaTrace) -> dict:
    q = trace.query
    obj = {
        "direction": trace.direction,
        "lambda": list(q.lam),
        "mu": list(q.mu),
        "nu": list(q.nu),
        "n": q.n,
    }
    if trace.direction == "gamma":
        obj.update({
            "T": filling_obj(trace.tableau),
            "X_T": pattern_obj(trace.tableau_pattern),
            "M_T": marks_list(trace.tableau_marks),
            "N": [list(row) for row in trace.prefix_counts],
            "Y_T": pattern_obj(trace.contra_pattern),
            "Mp_T": marks_list(trace.contra_marks),
            "S": filling_obj(trace.contratableau),
        })
    else:
        obj.update({
            "S": filling_obj(trace.contratableau),
            "Z": pattern_obj(trace.contra_pattern),
            "M_Z": marks_list(trace.contra_marks),
            "Zp": [list(row) for row in trace.cumulative_rows],
            "dSE": [list(row) for row in trace.slack_rows],
            "ops": [list(op) for op in trace.column_ops],
            "V": pattern_obj(trace.tableau_pattern),
            "M_V": marks_list(trace.tableau_marks),
            "N_up": [list(row) for row in trace.suffix_counts],
            "T": filling_obj(trace.tableau),
        })
    return obj
