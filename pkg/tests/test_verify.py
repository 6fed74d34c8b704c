"""Verifier outcomes: certificates, honest failures, and report shape."""

from __future__ import annotations

import json
import math

import pytest

from distspec.graph6 import decode_graph6
from distspec.graphs import GraphError, PendantPath, build_graph
from distspec.transforms import GraftSite, RelocationSpec, make_base, make_relocation_spec
from distspec.verify import (
    pendant_report_for_site,
    report_json,
    sweep_graft,
    sweep_min_cut_edges,
    sweep_min_cut_vertices,
    verify_distance_monotonicity,
    verify_graft_monotonicity,
    verify_min_cut_edges,
    verify_min_cut_vertices,
    verify_pendant_sum,
    verify_perturbation_bound,
    verify_relocation,
)


def test_graft_strict_shift_passes():
    site = GraftSite(base=make_base("complete", 3), u=0, v=1, k=2, l=1)
    rep = verify_graft_monotonicity(site)
    assert rep.outcome == "PASS"
    assert rep.certified_gap > 0.6
    assert rep.witness["shift_to_u_member_bracket"]["lambda"] < rep.witness["shift_to_u_shift_bracket"]["lambda"]


def test_graft_disjunction_names_winner():
    site = GraftSite(base=make_base("complete", 3), u=0, v=1, k=1, l=1)
    rep = verify_graft_monotonicity(site)
    assert rep.outcome == "PASS"
    assert rep.witness["certified_disjunct"] in ("shift_to_u", "shift_to_v")


def test_graft_two_vertex_base_fails_by_isomorphism():
    """Both attach points on a single edge give one path graph per total
    length, so every shift is isomorphic to the member and the strict
    inequality is exactly refuted."""
    site = GraftSite(base=make_base("complete", 2), u=0, v=1, k=1, l=1)
    rep = verify_graft_monotonicity(site)
    assert rep.outcome == "FAIL"
    assert rep.certified_gap == 0.0
    assert rep.witness["shift_to_u_isomorphic_to_member"] is True
    assert rep.witness["shift_to_v_isomorphic_to_member"] is True

    strict = verify_graft_monotonicity(
        GraftSite(base=make_base("complete", 2), u=0, v=1, k=2, l=1)
    )
    assert strict.outcome == "FAIL"


def test_graft_requires_positive_budgets():
    with pytest.raises(GraphError):
        verify_graft_monotonicity(
            GraftSite(base=make_base("complete", 3), u=0, v=1, k=1, l=2)
        )
    with pytest.raises(GraphError):
        verify_graft_monotonicity(
            GraftSite(base=make_base("complete", 3), u=0, v=1, k=1, l=0)
        )


def test_pendant_sum_pass_and_validation():
    site = GraftSite(base=make_base("complete", 3), u=0, v=1, k=2, l=1)
    rep = pendant_report_for_site(site)
    assert rep.outcome == "PASS"
    assert rep.witness["long_sum_with_root"] > rep.witness["short_sum_with_root"]

    member = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5)])
    with pytest.raises(GraphError, match="adjacent"):
        verify_pendant_sum(
            member,
            PendantPath(root=2, vertices=(3, 4), length=2),
            PendantPath(root=0, vertices=(5,), length=1),
        )
    with pytest.raises(GraphError, match="k > l"):
        pendant_report_for_site(
            GraftSite(base=make_base("complete", 3), u=0, v=1, k=1, l=1)
        )


def test_relocation_star_instance():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    rep = verify_relocation(make_relocation_spec(star, 0, 1, (2,)))
    assert rep.outcome == "PASS"
    assert abs(rep.certified_gap - (math.sqrt(10) - math.sqrt(7))) < 1e-6


def test_relocation_inconclusive_without_witness():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    rep = verify_relocation(make_relocation_spec(star, 0, 1, (2, 3)))
    assert rep.outcome == "INCONCLUSIVE"
    assert rep.witness["failed_clause"] == "witness"


def test_relocation_inconclusive_on_bad_hypothesis():
    g = build_graph(4, [(0, 1), (1, 2), (0, 3)])
    spec = RelocationSpec(
        g=g, u=0, v=1, c1=frozenset({1, 2}), targets=(3,), witness=None
    )
    rep = verify_relocation(spec)
    assert rep.outcome == "INCONCLUSIVE"
    assert rep.witness["failed_clause"] == "neighborhood"


def test_relocation_counterexample_fails_honestly():
    """A valid witnessed move whose radius strictly drops.

    Moving edge 0-1 onto the pendant 3 opens a shortcut from vertex 5 to
    vertex 3 (3 hops down to 2), which the move's distance accounting does
    not cover; the radius falls from about 8.8990 to 8.8219, certified by
    disjoint brackets, so the verifier must report FAIL, not PASS.
    """
    g = decode_graph6("Es`_")
    assert g.edges == frozenset(
        {(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5)}
    )
    spec = make_relocation_spec(g, 0, 3, (1,))
    rep = verify_relocation(spec)
    assert rep.outcome == "FAIL"
    assert (
        rep.witness["original_bracket"]["lower"]
        > rep.witness["relocated_bracket"]["upper"]
    )


def test_perturbation_bound_both_directions():
    p4 = make_base("path", 4)
    c4 = make_base("cycle", 4)
    rep = verify_perturbation_bound(p4, c4)
    assert rep.outcome == "PASS"
    assert set(rep.witness["directions"]) == {"forward", "reverse"}
    assert rep.witness["worst_margin"] > -1e-8

    same = verify_perturbation_bound(p4, p4)
    assert same.outcome == "PASS"

    with pytest.raises(GraphError):
        verify_perturbation_bound(p4, make_base("path", 5))


def test_monotonicity_reports():
    rep = verify_distance_monotonicity(make_base("cycle", 5))
    assert rep.outcome == "PASS"
    assert rep.witness["relation_original_vs_closure"] == "GREATER"
    assert rep.certified_gap > 1.9  # 6 vs 4

    tree = verify_distance_monotonicity(make_base("path", 4))
    assert tree.outcome == "PASS"
    assert tree.witness["relation_original_vs_closure"] == "EQUAL"


def test_min_cut_vertices_small():
    rep = verify_min_cut_vertices(5, 2)
    assert rep.outcome == "PASS"
    assert rep.instance["class_size"] == 3
    assert rep.certified_gap > 0
    assert rep.witness["minimizer_isomorphic_to_target"] is True

    single = verify_min_cut_vertices(5, 3)
    assert single.outcome == "PASS"
    assert single.instance["class_size"] == 1
    assert single.certified_gap is None


def test_min_cut_edges_small_and_empty():
    rep = verify_min_cut_edges(5, 4)
    assert rep.outcome == "PASS"
    assert rep.witness["runner_up_bracket"]["lower"] > rep.witness["minimizer_bracket"]["upper"]
    with pytest.raises(GraphError, match="cut edges"):
        verify_min_cut_edges(5, 3)


def test_min_sweeps_cover_expected_grid():
    cv = sweep_min_cut_vertices(5)
    assert [r.instance["k"] for r in cv] == [0, 1, 2, 3]
    ce = sweep_min_cut_edges(5)
    assert [r.instance["k"] for r in ce] == [0, 1, 2, 4]
    assert all(r.outcome == "PASS" for r in cv + ce)


def test_report_json_shape():
    rep = verify_min_cut_vertices(4, 1)
    text = report_json(rep)
    loaded = json.loads(text)
    assert list(loaded) == ["theorem", "instance", "outcome", "certified_gap", "witness"]
    assert "wall_time" not in text
    assert rep.wall_time >= 0
    assert report_json(verify_min_cut_vertices(4, 1)) == text


def test_jobs_do_not_change_reports():
    seq = sweep_graft(max_base_n=3, max_total=4)
    par = sweep_graft(max_base_n=3, max_total=4, jobs=4)
    assert [report_json(r) for r in seq] == [report_json(r) for r in par]
    seq_min = verify_min_cut_vertices(6, 2, jobs=1)
    par_min = verify_min_cut_vertices(6, 2, jobs=4)
    assert report_json(seq_min) == report_json(par_min)
