from __future__ import annotations

import json

import pytest

from quatforms import (
    CartanType,
    GoldenDataError,
    GradingError,
    ToralElement,
    analyze,
    build_root_system,
    classify_equal_rank,
    enumerate_involutions,
    generate_classical,
    golden_for_type,
    load_golden,
    parse_type,
    quaternionic_decomposition,
)
from quatforms.classify import load_bundled_exceptional


def _rs(label):
    return build_root_system(parse_type(label))


def test_enumerate_counts():
    assert len(enumerate_involutions(_rs("G2"))) == 4
    assert len(enumerate_involutions(_rs("E8"))) == 256
    first = enumerate_involutions(_rs("A2"))[0]
    assert first.coords == (0, 0) and first.basis == "coweight" and first.denom == 2


def test_enumerate_rejects_rank_one():
    with pytest.raises(GradingError, match="no quaternionic node grading"):
        enumerate_involutions(_rs("A1"))


def test_enumerate_rank_cap_override():
    rs = _rs("D10")
    with pytest.raises(ValueError, match="max_rank"):
        enumerate_involutions(rs, max_rank=9)
    assert len(enumerate_involutions(rs, max_rank=10)) == 1024


def test_classify_g2_exactly_one_form():
    rep = classify_equal_rank(_rs("G2"))
    assert rep.ok
    assert len(rep.found) == 1
    f = rep.found[0]
    assert f.l_type == CartanType.of("A1", "A1")
    assert f.v_type == CartanType((), 2)
    assert f.multiplicity == 2  # both non-central odd-pairing candidates


def test_classify_e7_exactly_three_forms():
    rep = classify_equal_rank(_rs("E7"))
    assert rep.ok
    keys = {(f.l_type.render(), f.v_type.render()) for f in rep.found}
    assert keys == {
        ("E6 T1", "D5 T1 T1"),
        ("A7", "A3 A3 T1"),
        ("D6 A1", "A5 T1 T1"),
    }


def test_classify_e6_splits_equal_and_unequal_rank():
    rep = classify_equal_rank(_rs("E6"))
    assert rep.ok
    keys = {(f.l_type.render(), f.v_type.render()) for f in rep.found}
    assert keys == {("D5 T1", "A4 T1 T1"), ("A5 A1", "A2 A2 T1 T1")}
    assert [e.label for e in rep.skipped_unequal_rank] == ["6b"]
    skipped = rep.skipped_unequal_rank[0]
    assert skipped.l_type == CartanType.of("C4")
    assert skipped.key not in {f.key for f in rep.found}


def test_classify_e8_exactly_two_forms():
    rep = classify_equal_rank(_rs("E8"))
    assert rep.ok
    keys = {(f.l_type.render(), f.v_type.render()) for f in rep.found}
    assert keys == {("E7 A1", "E6 T1 T1"), ("D8", "A7 T1")}


def test_zero_candidate_never_reported():
    for label in ("G2", "A3", "B3"):
        rep = classify_equal_rank(_rs(label))
        for f in rep.found:
            assert any(f.witness.coords)


def test_witnesses_reproduce_their_verdict():
    rs = _rs("F4")
    gd = quaternionic_decomposition(rs)
    rep = classify_equal_rank(rs)
    for f in rep.found:
        again = analyze(rs, gd, f.witness)
        assert again.is_complex_form
        assert (again.l_type, again.v_type) == f.key


def test_classification_is_deterministic():
    a = classify_equal_rank(_rs("E6")).to_json()
    b = classify_equal_rank(_rs("E6")).to_json()
    assert json.dumps(a) == json.dumps(b)


_DIAGRAM_AUTOMORPHISMS = {
    "A4": (4, 3, 2, 1),          # reversal
    "D4": (1, 2, 4, 3),          # swap the fork
    "E6": (6, 2, 5, 4, 3, 1),    # arm swap fixing nodes 2 and 4
}


@pytest.mark.parametrize("label", sorted(_DIAGRAM_AUTOMORPHISMS))
def test_conjugation_stability_under_diagram_automorphisms(label):
    """Permuted candidates give the same form keys, so dedup is stable."""
    perm = _DIAGRAM_AUTOMORPHISMS[label]
    rs = _rs(label)
    # sanity: the permutation really is a diagram automorphism
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert rs.cartan[i][j] == rs.cartan[perm[i] - 1][perm[j] - 1]
    gd = quaternionic_decomposition(rs)
    for t in enumerate_involutions(rs):
        a = analyze(rs, gd, t)
        if not a.is_complex_form:
            continue
        image = ToralElement(
            tuple(t.coords[perm[i] - 1] for i in range(rs.rank)), 2, "coweight"
        )
        b = analyze(rs, gd, image)
        assert b.is_complex_form
        assert (b.l_type, b.v_type) == (a.l_type, a.v_type)


# ---------------------------------------------------------------------------
# Golden data
# ---------------------------------------------------------------------------


def test_bundled_exceptional_registry():
    entries = load_bundled_exceptional()
    assert len(entries) == 10
    per_type = {}
    for e in entries:
        per_type.setdefault(e.ambient.label, []).append(e)
    assert {k: len(v) for k, v in per_type.items()} == {
        "G2": 1, "F4": 1, "E6": 3, "E7": 3, "E8": 2,
    }
    assert sum(1 for e in entries if not e.equal_rank) == 1  # only 6b


def test_generator_c5_single_entry():
    entries = generate_classical(parse_type("C5"))
    assert len(entries) == 1
    e = entries[0]
    assert e.label == "3"
    assert e.l_type == CartanType.of("A4", torus_rank=1)
    assert e.v_type == CartanType.of("A3", torus_rank=2)
    assert e.equal_rank


def test_generator_d4_merges_coincident_grassmannian_and_quadric():
    entries = generate_classical(parse_type("D4"))
    labels = {e.label for e in entries}
    assert "2a = 2b(u=0)" in labels
    equal = [e for e in entries if e.equal_rank]
    assert len(equal) == 2
    keys = {e.key for e in entries}
    assert len(keys) == len(entries)  # no residual collisions


def test_generator_b_family_counts_and_worked_row():
    entries = generate_classical(parse_type("B7"))
    assert all(e.equal_rank for e in entries)
    assert len(entries) == 6  # u = 0..5 with u + v = 11
    by_label = {e.label: e for e in entries}
    row = by_label["2b(u=2)"]  # the SO(4) x SO(13) split, half-spin side
    assert row.l_type == CartanType.of("B5", "A1", "A1")
    assert row.v_type == CartanType.of("B4", torus_rank=3)


def test_generator_a_family_unequal_rank_entry():
    entries = generate_classical(parse_type("A4"))
    a1 = [e for e in entries if e.label == "1a"]
    assert len(a1) == 1 and not a1[0].equal_rank
    assert a1[0].l_type == CartanType.of("B2")
    degenerate = [e for e in entries if e.degenerate]
    assert [e.label for e in degenerate] == ["1b(u=0)"]


def test_generator_rejects_untested_rank():
    with pytest.raises(GoldenDataError, match="tested for ranks 2..8"):
        generate_classical(parse_type("A9"))


def test_table_dim_matches_decomposition():
    for label in ("A5", "B6", "C4", "D5", "E7"):
        t = parse_type(label)
        entries, found = golden_for_type(t)
        assert found
        dim = quaternionic_decomposition(_rs(label)).quaternionic_dim
        for e in entries:
            assert e.table_dim_h == dim


def _write_golden(tmp_path, entries):
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(entries), encoding="utf-8")
    return str(path)


_G2_ENTRY = {
    "ambient": "G2",
    "label": "4",
    "l_type": {"components": [{"family": "A", "rank": 1}, {"family": "A", "rank": 1}], "torus_rank": 0},
    "v_type": {"components": [], "torus_rank": 2},
    "s_description": "P^1(C) x P^1(C)",
    "noncompact_dual": "H^1(C) x H^1(C)",
    "equal_rank": True,
    "table_rank": 2,
    "table_dim_h": 2,
}


def test_load_golden_roundtrip(tmp_path):
    path = _write_golden(tmp_path, [_G2_ENTRY])
    entries = load_golden(path)
    assert len(entries) == 1
    assert entries[0].to_json() == _G2_ENTRY
    rep = classify_equal_rank(_rs("G2"), path)
    assert rep.ok and not rep.no_golden_baseline


def test_load_golden_names_missing_field(tmp_path):
    bad = {k: v for k, v in _G2_ENTRY.items() if k != "v_type"}
    path = _write_golden(tmp_path, [bad])
    with pytest.raises(GoldenDataError, match="missing field 'v_type'"):
        load_golden(path)


def test_load_golden_names_mistyped_field(tmp_path):
    bad = dict(_G2_ENTRY, equal_rank="yes")
    path = _write_golden(tmp_path, [bad])
    with pytest.raises(GoldenDataError, match="'equal_rank' must be bool"):
        load_golden(path)


def test_load_golden_rejects_rank_contradiction(tmp_path):
    bad = dict(_G2_ENTRY, equal_rank=False)
    path = _write_golden(tmp_path, [bad])
    with pytest.raises(GoldenDataError, match="equal_rank flag contradicts"):
        load_golden(path)


def test_load_golden_rejects_key_collision(tmp_path):
    other = dict(_G2_ENTRY, label="4-bis")
    path = _write_golden(tmp_path, [_G2_ENTRY, other])
    with pytest.raises(GoldenDataError, match="share the dedup key"):
        load_golden(path)


def test_load_golden_rejects_unreadable_and_malformed(tmp_path):
    with pytest.raises(GoldenDataError, match="cannot read"):
        load_golden(str(tmp_path / "absent.json"))
    p = tmp_path / "broken.json"
    p.write_text("{", encoding="utf-8")
    with pytest.raises(GoldenDataError, match="not valid JSON"):
        load_golden(str(p))
    p2 = tmp_path / "object.json"
    p2.write_text("{}", encoding="utf-8")
    with pytest.raises(GoldenDataError, match="JSON array"):
        load_golden(str(p2))


def test_classify_reports_missing_against_wrong_golden(tmp_path):
    fake = dict(
        _G2_ENTRY,
        label="4-fake",
        l_type={"components": [{"family": "G", "rank": 2}], "torus_rank": 0},
        v_type={"components": [], "torus_rank": 2},
    )
    path = _write_golden(tmp_path, [fake])
    rep = classify_equal_rank(_rs("G2"), path)
    assert not rep.ok
    assert [e.label for e in rep.missing] == ["4-fake"]
    assert len(rep.unexpected) == 1  # the true form is not in the fake registry


def test_classify_without_baseline_still_lists_forms(tmp_path):
    path = _write_golden(tmp_path, [_G2_ENTRY])
    rep = classify_equal_rank(_rs("F4"), path)  # file has no F4 entries
    assert rep.no_golden_baseline
    assert rep.ok  # nothing to diff against
    assert len(rep.found) == 1


def test_classify_untested_classical_rank_degrades_to_no_baseline():
    """A buildable rank beyond the generator's tested span still classifies."""
    rep = classify_equal_rank(_rs("A9"))
    assert rep.no_golden_baseline
    assert rep.ok
    assert len(rep.found) == 5  # the five P^u x P^{8-u} products, u = 0..4


def test_env_var_selects_golden(tmp_path, monkeypatch):
    path = _write_golden(tmp_path, [_G2_ENTRY])
    monkeypatch.setenv("QUATFORMS_GOLDEN", path)
    rep = classify_equal_rank(_rs("G2"))
    assert rep.ok and not rep.no_golden_baseline
    rep = classify_equal_rank(_rs("F4"))
    assert rep.no_golden_baseline
