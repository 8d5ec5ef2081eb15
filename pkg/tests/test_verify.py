import json

import pytest

from zsigraph.graphs import dominates, validate_chordless_cycle, validate_cycle,\
    validate_path
from zsigraph.linegraph import build_line_graph
from zsigraph.model import ModelConfig, build_gamma
from zsigraph.verify import (ALL_THEOREM_IDS, Status,
                             check_chordality_gamma, check_common_neighbor,
                             check_complemented, check_connectivity_diameter,
                             check_cycle_pair_gamma,
                             check_distance_characterization, check_domination,
                             check_line_cycles, check_line_metrics,
                             check_radius, check_triangulation,
                             check_vnr_condition, default_sweep, run_all)


def one(checks, check_id):
    matches = [c for c in checks if c.id == check_id]
    assert len(matches) == 1
    return matches[0]


# -- connectivity / diameter / radius ------------------------------------------


def test_t21_connected_diameter_two():
    c = one(check_connectivity_diameter(ModelConfig(3, 3)), "T2.1")
    assert c.status == Status.PASS
    assert c.observed == {"components": 1, "diameter": 2}


def test_t21_two_point_space_splits_into_class_cliques():
    c = one(check_connectivity_diameter(ModelConfig(2, 3)), "T2.1")
    assert c.status == Status.PASS
    assert c.observed["components"] == 2
    assert c.observed["component_sizes"] == [3, 3]
    assert c.observed["diameter"] == "inf"


def test_t21_zero_vertex_joins_the_cliques():
    c = one(check_connectivity_diameter(ModelConfig(2, 2, True)), "T2.1")
    assert c.status == Status.ANOMALY and c.anomaly == "A1"
    assert c.observed["components"] == 1
    assert c.observed["diameter"] == 2
    assert c.witness["zero_vertex"] == "0,1:1"


def test_c22_common_neighbors():
    assert one(check_common_neighbor(ModelConfig(3, 3)), "C2.2").status == Status.PASS
    hv = one(check_common_neighbor(ModelConfig(2, 1)), "C2.2")
    assert hv.status == Status.HYPOTHESIS_VIOLATION


def test_c23_distance_characterization():
    ok = one(check_distance_characterization(ModelConfig(3, 1)), "C2.3")
    assert ok.status == Status.PASS
    hv = one(check_distance_characterization(ModelConfig(2, 2)), "C2.3")
    assert hv.status == Status.HYPOTHESIS_VIOLATION


def test_t24_radius():
    assert one(check_radius(ModelConfig(3, 3)), "T2.4").status == Status.PASS
    assert one(check_radius(ModelConfig(4, 1)), "T2.4").status == Status.PASS
    z = one(check_radius(ModelConfig(3, 3, True)), "T2.4")
    assert z.status == Status.ANOMALY and z.anomaly == "RAD1"
    assert z.observed["radius"] == 1


# -- triangulation / girth ------------------------------------------------------


def test_t31_c32():
    checks = check_triangulation(ModelConfig(2, 3))
    assert one(checks, "T3.1").status == Status.PASS
    assert one(checks, "C3.2").status == Status.PASS

    checks = check_triangulation(ModelConfig(3, 1))
    assert one(checks, "T3.1").status == Status.PASS
    assert one(checks, "C3.2").observed["girth"] == 3

    # two copies of two disjoint classes carry no triangle at all
    checks = check_triangulation(ModelConfig(2, 2))
    assert one(checks, "T3.1").status == Status.HYPOTHESIS_VIOLATION
    assert one(checks, "C3.2").status == Status.HYPOTHESIS_VIOLATION
    assert one(checks, "C3.2").observed["girth"] == "inf"


def test_t31_same_class_triangle_witness():
    c = one(check_triangulation(ModelConfig(3, 3)), "T3.1")
    assert c.witness == {"same_class_triangle": ["0:1", "0:2", "0:3"]}


# -- cycles through pairs --------------------------------------------------------


def test_t33_cycle_cases():
    assert one(check_cycle_pair_gamma(ModelConfig(3, 2)), "T3.3").status == Status.PASS
    assert one(check_cycle_pair_gamma(ModelConfig(4, 2)), "T3.3").status == Status.PASS

    hv = one(check_cycle_pair_gamma(ModelConfig(3, 1)), "T3.3")
    assert hv.status == Status.HYPOTHESIS_VIOLATION
    assert hv.observed["first_violation"]["c"] == 5
    assert hv.observed["first_violation"]["pair"] == ["0:1", "1:1"]


def test_t34_chordality():
    assert one(check_chordality_gamma(ModelConfig(3, 4)), "T3.4").status == Status.PASS
    c4 = one(check_chordality_gamma(ModelConfig(4, 1)), "T3.4")
    assert c4.status == Status.PASS
    assert not c4.observed["chordal"]
    assert c4.witness["four_class_square"] == ["0,3:1", "0,1:1", "1,2:1", "2,3:1"]
    assert one(check_chordality_gamma(ModelConfig(5, 2)), "T3.4").status == Status.PASS


# -- complementation -------------------------------------------------------------


def test_t35_t44():
    checks = check_complemented(ModelConfig(3, 3))
    t35 = one(checks, "T3.5")
    assert t35.status == Status.PASS
    assert t35.observed["orthogonal_pairs"] == 0
    t44 = one(checks, "T4.4")
    assert t44.status == Status.ANOMALY and t44.anomaly == "A2"
    assert t44.observed["every_vertex_has_disjoint_dominating_partner"] is True

    # at n=2, m=2 the class cliques make the graph complemented and the
    # biconditional happens to hold
    checks = check_complemented(ModelConfig(2, 2))
    assert one(checks, "T3.5").status == Status.HYPOTHESIS_VIOLATION
    assert one(checks, "T4.4").status == Status.PASS


# -- domination ------------------------------------------------------------------


def test_t41_t42():
    checks = check_domination(ModelConfig(3, 3))
    t41 = one(checks, "T4.1")
    assert t41.status == Status.PASS
    assert t41.observed["domination_number"] == 2
    assert t41.observed["witness_classes_complementary"] is True
    assert t41.witness["dominating_set"] == ["0:1", "1,2:1"]
    assert one(checks, "T4.2").status == Status.PASS

    z = one(check_domination(ModelConfig(3, 1, True)), "T4.1")
    assert z.status == Status.ANOMALY and z.anomaly == "DOM1"
    assert z.observed["domination_number"] == 1


def test_t42_holds_with_zero_vertex():
    assert one(check_domination(ModelConfig(3, 2, True)), "T4.2").status == Status.PASS


def test_t43():
    assert one(check_vnr_condition(ModelConfig(3, 2)), "T4.3").status == Status.PASS
    assert one(check_vnr_condition(ModelConfig(4, 1)), "T4.3").status == Status.PASS
    z = one(check_vnr_condition(ModelConfig(3, 2, True)), "T4.3")
    assert z.status == Status.ANOMALY and z.anomaly == "VNR0"
    assert z.witness["failing_vertex"] == "0,1,2:1"


# -- line graph checks -----------------------------------------------------------


def test_line_metrics_pass():
    checks = check_line_metrics(ModelConfig(3, 2))
    for cid in ("L5.1", "T5.2", "C5.3", "T5.4", "C5.5"):
        assert one(checks, cid).status == Status.PASS
    t52 = one(checks, "T5.2")
    assert t52.observed["cases_partition_pairs"] is True
    t54 = one(checks, "T5.4")
    assert t54.witness["covering_edge"]["eccentricity"] == 2
    assert t54.witness["non_covering_edge"]["eccentricity"] == 3


def test_line_cycles_pass():
    checks = check_line_cycles(ModelConfig(3, 3))
    for cid in ("T5.6", "T5.7", "T5.8", "T5.9"):
        assert one(checks, cid).status == Status.PASS
    t58 = one(checks, "T5.8")
    assert t58.observed["table_matches"] is True
    assert t58.observed["pairs"] == sum(
        t58.observed[f"c{v}"] for v in (3, 4, 5, 6))


def test_line_cycles_same_class_square_at_m4():
    t59 = one(check_line_cycles(ModelConfig(3, 4)), "T5.9")
    assert t59.status == Status.PASS
    assert t59.observed["same_class_square_validates"] is True
    assert t59.witness["same_class_square"] == [
        "[0:1|0:2]", "[0:2|0:3]", "[0:3|0:4]", "[0:1|0:4]"]


def test_line_cycle_table_cap_skips_table():
    checks = check_line_cycles(ModelConfig(4, 2), cycle_table_edge_cap=10)
    assert [c.id for c in checks] == ["T5.6", "T5.7", "T5.9"]


# -- sweep driver ----------------------------------------------------------------


def test_run_all_rejects_empty_sweep():
    with pytest.raises(ValueError):
        run_all([])


def test_run_all_rejects_unknown_theorems():
    with pytest.raises(ValueError):
        run_all(default_sweep(), theorems={"T9.9"})


def test_run_all_skips_one_point_space():
    report = run_all([ModelConfig(1, 1), ModelConfig(3, 1)], oracle_graphs=0)
    assert any("one-point" in s["reason"] or "empty" in s["reason"]
               for s in report.skipped)
    assert all(c.config.n == 3 for c in report.checks)


def test_default_sweep_is_green_and_complete():
    report = run_all(default_sweep(), oracle_graphs=5)
    assert report.exit_code == 0
    assert report.summary["FAIL"] == 0
    assert report.anomaly_codes == ["A2"]
    seen = {c.id for c in report.checks}
    assert seen == set(ALL_THEOREM_IDS)
    # deterministic id ordering
    ids = [c.id for c in report.checks]
    assert ids == sorted(ids, key=lambda i: tuple(
        int(x) for x in i[1:].split(".")))
    assert report.oracle_selftest["ok"] is True


def test_theorem_filter_counts():
    report = run_all([ModelConfig(n, 4) for n in (2, 3, 4, 5)],
                     theorems={"T3.4"}, oracle_graphs=0)
    assert len(report.checks) == 4
    assert all(c.id == "T3.4" for c in report.checks)


def test_outcomes_stable_above_each_hypothesis_minimum():
    """Raising m past a check's recorded minimum never changes the outcome."""
    minimums = {"T2.1": 1, "C2.2": 1, "C2.3": 1, "T2.4": 1, "T3.1": 1,
                "C3.2": 1, "T3.3": 2, "T3.4": 1, "T3.5": 3, "T4.4": 3,
                "T4.1": 1, "T4.2": 1, "T4.3": 1, "L5.1": 2, "T5.2": 2,
                "C5.3": 2, "T5.4": 2, "C5.5": 2, "T5.6": 2, "T5.7": 2,
                "T5.8": 3, "T5.9": 4}

    def outcomes(m):
        report = run_all([ModelConfig(3, m)], oracle_graphs=0)
        return {c.id: c.status for c in report.checks}

    by_m = {m: outcomes(m) for m in (1, 2, 3, 4)}
    for cid, m_min in minimums.items():
        if cid not in by_m[4]:
            continue
        for m in range(m_min, 5):
            if cid in by_m[m]:
                assert by_m[m][cid] == by_m[4][cid], (cid, m)


def label_map(g):
    return {lab: i for i, lab in enumerate(g.labels)}


def test_witnesses_revalidate():
    """Every embedded path/cycle/dominating-set witness checks out against
    the graph it was computed on."""
    report = run_all(default_sweep(), oracle_graphs=0)
    graphs = {}
    for c in report.checks:
        key = (c.config.n, c.config.m, c.config.include_zero)
        if key not in graphs:
            base = build_gamma(ModelConfig(*key))
            graphs[key] = (base, build_line_graph(base).graph)
        base, line = graphs[key]
        g = line if c.id.startswith(("T5", "L5", "C5")) else base
        ids = label_map(g)
        if not c.witness:
            continue
        for name, value in c.witness.items():
            if not isinstance(value, list) or not value \
                    or not all(isinstance(x, str) for x in value):
                continue
            seq = [ids[x] for x in value]
            if "path" in name:
                assert validate_path(g, seq), (c.id, name)
            elif "chordless" in name or "square" in name:
                assert validate_chordless_cycle(g, seq), (c.id, name)
            elif "cycle" in name or "triangle" in name:
                assert validate_cycle(g, seq), (c.id, name)
            elif "dominating" in name:
                assert dominates(g, seq), (c.id, name)


def test_report_serialization_round_trips():
    report = run_all([ModelConfig(3, 2)], oracle_graphs=3)
    payload = report.to_json()
    text = json.dumps(payload, indent=2)
    again = json.loads(text)
    assert again["schema_version"] == "1"
    assert again["summary"] == report.summary
    assert again["exit_code"] == 0
    md = report.to_markdown()
    assert "| id |" in md and "T3.4" in md


def test_include_zero_anomaly_codes():
    report = run_all(default_sweep(include_zero=True), oracle_graphs=0)
    assert report.summary["FAIL"] == 0
    assert report.anomaly_codes == ["A1", "A2", "DOM1", "RAD1", "VNR0"]
