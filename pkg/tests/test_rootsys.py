from __future__ import annotations

import pytest

from quatforms import (
    GradingError,
    InvalidTypeError,
    build_root_system,
    coroot_pairing,
    grade,
    node_set,
    parse_type,
    quaternionic_decomposition,
)
from quatforms.rootsys import pairing_with_coroot, roots_to_json

from conftest import GRADED_LABELS, SUPPORTED_LABELS
from oracles import positive_part, reflection_closure


def test_parse_type_examples():
    assert parse_type("E8").family == "E" and parse_type("E8").rank == 8
    assert parse_type("G2").family == "G" and parse_type("G2").rank == 2
    assert parse_type("b3").label == "B3"


def test_parse_type_rejects_unknown_family():
    with pytest.raises(InvalidTypeError, match="unknown family"):
        parse_type("H3")
    with pytest.raises(InvalidTypeError, match="unknown family"):
        parse_type("Z9")


@pytest.mark.parametrize(
    "label",
    ["A0", "B1", "C1", "D2", "E5", "E9", "F5", "G3", "A11", "B11", "D11"],
)
def test_parse_type_rejects_out_of_range(label):
    with pytest.raises(InvalidTypeError, match="out of range"):
        parse_type(label)


def test_b2_and_c2_both_accepted():
    assert parse_type("B2").label == "B2"
    assert parse_type("C2").label == "C2"


# Closed-form positive-root counts per family.
def _expected_count(family: str, n: int) -> int:
    if family == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "G": 6,
        "F": 24,
    }[family]


@pytest.mark.parametrize("label", SUPPORTED_LABELS)
def test_positive_root_counts(label):
    rs = build_root_system(parse_type(label))
    assert len(rs.positive_roots) == _expected_count(rs.type.family, rs.rank)


@pytest.mark.parametrize("label", SUPPORTED_LABELS)
def test_dual_oracle_agreement(label):
    """Root-string generation must agree with reflection-orbit closure."""
    rs = build_root_system(parse_type(label))
    oracle = reflection_closure(rs.cartan)
    assert rs.root_set == oracle
    assert set(rs.positive_roots) == positive_part(oracle)


@pytest.mark.parametrize("label", SUPPORTED_LABELS)
def test_reflection_and_negation_invariants(label):
    rs = build_root_system(parse_type(label))
    n = rs.rank
    for alpha in rs.root_set:
        assert tuple(-x for x in alpha) in rs.root_set
        for i in range(n):
            p = sum(alpha[j] * rs.cartan[j][i] for j in range(n))
            refl = tuple(a - p if j == i else a for j, a in enumerate(alpha))
            assert refl in rs.root_set


@pytest.mark.parametrize("label", SUPPORTED_LABELS)
def test_highest_root_unique_and_maximal(label):
    rs = build_root_system(parse_type(label))
    maximal = [
        beta
        for beta in rs.positive_roots
        if all(
            not rs.is_root(tuple(b + s for b, s in zip(beta, simple)))
            for simple in rs.simple_roots
        )
    ]
    assert maximal == [rs.highest_root]
    assert rs.positive_roots[-1] == rs.highest_root


def test_deterministic_order_g2():
    rs = build_root_system(parse_type("G2"))
    assert rs.positive_roots == ((0, 1), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2))


def test_a1_single_root():
    rs = build_root_system(parse_type("A1"))
    assert rs.positive_roots == ((1,),)


def test_cartan_matrix_tables():
    assert build_root_system(parse_type("G2")).cartan == ((2, -1), (-3, 2))
    assert build_root_system(parse_type("B3")).cartan == (
        (2, -1, 0),
        (-1, 2, -2),
        (0, -1, 2),
    )
    assert build_root_system(parse_type("C3")).cartan == (
        (2, -1, 0),
        (-1, 2, -1),
        (0, -2, 2),
    )
    f4 = build_root_system(parse_type("F4")).cartan
    assert f4 == ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))
    # D4 branches at node 2: nodes 1, 3 and 4 all attach to it.
    d4 = build_root_system(parse_type("D4")).cartan
    assert d4 == ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2))


def test_coroot_pairing_examples():
    g2 = build_root_system(parse_type("G2"))
    alpha1, alpha2 = (1, 0), (0, 1)
    assert coroot_pairing(g2, alpha2, 2) == 2
    assert coroot_pairing(g2, alpha1, 2) == -1
    assert coroot_pairing(g2, alpha1, 1) == 2
    e8 = build_root_system(parse_type("E8"))
    assert coroot_pairing(e8, e8.highest_root, 8) == 1


def test_coroot_pairing_rejects_non_roots():
    g2 = build_root_system(parse_type("G2"))
    with pytest.raises(ValueError, match="not a root"):
        coroot_pairing(g2, (2, 0), 1)


@pytest.mark.parametrize(
    "label,nodes",
    [
        ("F4", {1}),
        ("G2", {2}),
        ("A3", {1, 3}),
        ("E6", {2}),
        ("E7", {1}),
        ("E8", {8}),
        ("B7", {2}),
        ("C5", {1}),
        ("D7", {2}),
        ("D3", {2, 3}),
    ],
)
def test_node_sets(label, nodes):
    rs = build_root_system(parse_type(label))
    assert set(node_set(rs)) == nodes


def test_node_set_rejects_rank_one():
    rs = build_root_system(parse_type("A1"))
    with pytest.raises(GradingError, match="no quaternionic node grading"):
        node_set(rs)


def test_grade_examples():
    e8 = build_root_system(parse_type("E8"))
    assert grade(e8, {8}, e8.highest_root) == 2
    g2 = build_root_system(parse_type("G2"))
    assert grade(g2, {2}, (0, 1)) == 1
    assert grade(g2, {2}, (1, 0)) == 0


# One row per quaternionic family: dim/H as a function of the ambient rank.
@pytest.mark.parametrize(
    "label,dim",
    [("A2", 1), ("A4", 3), ("A9", 8)]
    + [("B2", 1), ("B7", 11), ("B9", 15)]
    + [("C2", 1), ("C5", 4), ("C7", 6)]
    + [("D3", 2), ("D7", 10), ("D9", 14)]
    + [("G2", 2), ("F4", 7), ("E6", 10), ("E7", 16), ("E8", 28)],
)
def test_quaternionic_dimensions(label, dim):
    rs = build_root_system(parse_type(label))
    assert quaternionic_decomposition(rs).quaternionic_dim == dim


@pytest.mark.parametrize("label", GRADED_LABELS)
def test_grade2_singleton_and_partition(label):
    rs = build_root_system(parse_type(label))
    gd = quaternionic_decomposition(rs)
    assert set(gd.k_pos) | set(gd.m_pos) == set(rs.positive_roots)
    assert not set(gd.k_pos) & set(gd.m_pos)
    grade2 = [a for a in rs.positive_roots if grade(rs, gd.node_set, a) == 2]
    assert grade2 == [rs.highest_root]
    assert len(gd.m_pos) % 2 == 0


@pytest.mark.parametrize("label", GRADED_LABELS)
def test_grading_agrees_with_highest_coroot(label):
    """grade(a) equals <a, theta-check> for grades 1 and 2, and 0 otherwise."""
    rs = build_root_system(parse_type(label))
    gd = quaternionic_decomposition(rs)
    theta = rs.highest_root
    for alpha in rs.positive_roots:
        g = grade(rs, gd.node_set, alpha)
        p = pairing_with_coroot(rs, alpha, theta)
        assert p == g


def test_roots_to_json():
    g2 = build_root_system(parse_type("G2"))
    assert roots_to_json(g2.positive_roots)[0] == [0, 1]
