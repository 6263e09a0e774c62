"""Complex-form analysis of a toral involution against the node grading.

Given the grading (k, m) of a quaternionic symmetric space G/K and a toral
element with centralizer l, the candidate submanifold S = L/V has complex
tangent part s = l ^ m and isotropy part v = l ^ k.  S is a complex form
exactly when the rank-1 factor of K meets L in a circle (the highest root
pairs nontrivially with the element) and dim_C S equals dim_H M.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .involution import ToralElement, centralizer, pairing
from .rootsys import GradedDecomposition, Root, RootSystem, grade, _vsub
from .subsys import CartanType, Subsystem, recognize

COMPLEX_FORM = "complex-form"
NOT_COMPLEX_FORM = "not-complex-form"


@dataclass(frozen=True)
class ComplexFormAnalysis:
    """Outcome of analyzing one toral element on one graded root system."""

    ambient: str
    sym: ToralElement
    l_type: CartanType
    v_type: CartanType
    s_pos: tuple[Root, ...]
    circle_ok: bool
    dim_s: int
    dim_h: int
    m_count: int
    step6_count: int
    verdict: str

    @property
    def is_complex_form(self) -> bool:
        return self.verdict == COMPLEX_FORM


def step6_count(rs: RootSystem, gd: GradedDecomposition, s_pos: tuple[Root, ...]) -> int:
    """Row-count surplus of [s, highest - s, m] over m after deduplication.

    The rows are the positive roots of s, the highest root minus each of
    them (kept even when the difference is not a root), and the positive
    roots of m; the count is the number of distinct rows beyond |m|.  A
    nonzero value flags s as failing to be maximal totally complex.
    """
    m_set = set(gd.m_pos)
    assert set(s_pos) <= m_set, "s_pos must consist of grade-1 positive roots"
    theta = rs.highest_root
    rows = list(s_pos) + [_vsub(theta, beta) for beta in s_pos] + list(gd.m_pos)
    return len(set(rows)) - len(gd.m_pos)


def disjoint_cover_ok(
    rs: RootSystem, gd: GradedDecomposition, s_pos: tuple[Root, ...]
) -> bool:
    """Strict cross-check: s and (highest - s) partition the grade-1 positives."""
    theta = rs.highest_root
    s_set = set(s_pos)
    mirror = {_vsub(theta, beta) for beta in s_pos}
    return not (s_set & mirror) and (s_set | mirror) == set(gd.m_pos)


def analyze(
    rs: RootSystem, gd: GradedDecomposition, t: ToralElement
) -> ComplexFormAnalysis:
    """Run the full pipeline: centralizer, grade slices, criteria, verdict."""
    cent = centralizer(rs, t)
    l_type = recognize(cent)
    nodes = gd.node_set
    s_pos = tuple(
        alpha for alpha in cent.positive_roots if grade(rs, nodes, alpha) == 1
    )
    v_roots = frozenset(r for r in cent.roots if grade(rs, nodes, r) % 2 == 0)
    v_type = recognize(Subsystem(rs, v_roots))
    circle_ok = pairing(rs, t, rs.highest_root) != 0
    dim_s = len(s_pos)
    dim_h = gd.quaternionic_dim
    verdict = COMPLEX_FORM if circle_ok and dim_s == dim_h else NOT_COMPLEX_FORM
    return ComplexFormAnalysis(
        ambient=rs.type.label,
        sym=t,
        l_type=l_type,
        v_type=v_type,
        s_pos=s_pos,
        circle_ok=circle_ok,
        dim_s=dim_s,
        dim_h=dim_h,
        m_count=len(gd.m_pos),
        step6_count=step6_count(rs, gd, s_pos),
        verdict=verdict,
    )


def analysis_to_json_obj(a: ComplexFormAnalysis) -> dict:
    return {
        "ambient": a.ambient,
        "sym": {
            "coords": list(a.sym.coords),
            "denom": a.sym.denom,
            "basis": a.sym.basis,
        },
        "l_type": a.l_type.to_json(),
        "v_type": a.v_type.to_json(),
        "s_count": a.dim_s,
        "m_count": a.m_count,
        "circle_ok": a.circle_ok,
        "step6_count": a.step6_count,
        "verdict": a.verdict,
    }


def render_report(a: ComplexFormAnalysis, format: str = "text") -> str:
    """Serialize an analysis deterministically as text or JSON."""
    if format == "json":
        return json.dumps(analysis_to_json_obj(a), indent=2)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = [
        f"ambient: {a.ambient}",
        f"sym: {a.sym.describe()}",
        f"L = {a.l_type.render()}",
        f"V = {a.v_type.render()}",
        f"dim_C S = {a.dim_s}",
        f"dim_H M = {a.dim_h}",
        f"circle test: {'pass' if a.circle_ok else 'fail'}",
        f"step6 count: {a.step6_count}",
    ]
    if a.is_complex_form:
        lines.append("verdict: complex form")
    else:
        reasons = []
        if not a.circle_ok:
            reasons.append("circle test failed")
        if a.dim_s != a.dim_h:
            reasons.append(f"dimension test failed: dim_C S = {a.dim_s} != {a.dim_h} = dim_H M")
        lines.append(f"verdict: not a complex form ({'; '.join(reasons)})")
    return "\n".join(lines)
