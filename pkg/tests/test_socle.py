import pytest

from src.core.cells import build_atlas
from src.core.coxeter import build_system, element_from_word, enumerate_group
from src.core.ji_catalog import classify, compare_with_figure, typeB_ji
from src.core.socle import (
    AMBIGUOUS,
    FORCED,
    ChainCertificate,
    SocleContext,
    chain_certificate,
    check_multiplicity_free,
    ext1_bounds,
    forced_multiplicity_problems,
    intersection_check,
    is_socle_killing,
    socle_closed_form,
    socle_degree_window,
    socle_window_report,
    type_cap,
)
from src.utils.errors import DerivationError, PreconditionError


def test_socle_killing_relation(socle_contexts):
    b3 = socle_contexts["B3"].system
    x, y = element_from_word(b3, "0"), element_from_word(b3, "0 1 0")
    assert is_socle_killing(x, y)
    with pytest.raises(PreconditionError):
        is_socle_killing(x, b3.w0)
    with pytest.raises(PreconditionError):
        is_socle_killing(y, y)


def test_chain_statistics_in_b3(socle_contexts):
    context = socle_contexts["B3"]
    b1, b2, b3 = (typeB_ji(2, 0, 0, "b", k) for k in (1, 2, 3))
    assert (context.skal(b1), context.skbl(b1)) == (0, 2)
    assert (context.skal(b2), context.skbl(b2)) == (1, 1)
    assert (context.skal(b3), context.skbl(b3)) == (2, 0)


def test_window_collapses_for_b2(socle_contexts):
    context = socle_contexts["B3"]
    window = context.window(typeB_ji(2, 0, 0, "b", 2))
    assert (window.low, window.high) == (6, 6)
    assert window.absolute == (-6, -6)


def test_window_arithmetic():
    ladder = [(4, 1), (6, 1), (8, 1)]
    window = socle_degree_window(ladder, 1, 0)
    assert (window.low, window.high) == (6, 8)
    assert not window.homogeneous
    assert socle_degree_window(ladder, 2, 0).homogeneous
    with pytest.raises(DerivationError):
        socle_degree_window(ladder, 2, 1)
    with pytest.raises(PreconditionError):
        socle_degree_window([], 0, 0)


def test_b3_socle_of_first_chain_element(socle_contexts):
    context = socle_contexts["B3"]
    x = typeB_ji(2, 0, 0, "b", 1)
    report = socle_closed_form(x, context)
    (entry,) = report.entries
    assert entry.member == "w"
    assert entry.shift == 4
    assert entry.describe() == "L_w⟨-4⟩"
    assert report.simple
    assert report.consistency_problems(context.atlas) == []


def test_g2_socle_is_sigma_of_x(socle_contexts):
    context = socle_contexts["G2"]
    x = element_from_word(context.system, "12")
    report = socle_closed_form(x, context)
    (entry,) = report.entries
    assert entry.element.text() == "21"
    assert entry.shift == 2
    assert report.window.contains(2)
    assert report.to_dict()["entries"][0]["degree"] == -2


def test_f4_socle_from_table(socle_contexts):
    context = socle_contexts["F4"]
    x = element_from_word(context.system, "12342321")
    report = socle_closed_form(x, context, with_window=False)
    assert sorted((e.member, e.shift) for e in report.entries) == [("u", 19), ("w", 17)]
    assert all(e.status == FORCED for e in report.entries)
    assert not report.simple


def test_b_middle_range_reports_two_alternatives():
    context = SocleContext(build_system("B4"))
    x = typeB_ji(3, 1, 1, "x", 2)
    assert classify(context.system, "1", "1")[x] == ("x", 2)
    report = socle_closed_form(x, context, with_window=False)
    assert len(report.alternatives) == 2
    assert {e.member for e in report.entries} == {"u", "w"}
    assert all(e.status == AMBIGUOUS for e in report.entries)
    assert not report.simple


def test_non_join_irreducible_is_rejected(socle_contexts):
    context = socle_contexts["D4"]
    w = element_from_word(context.system, "1 0+ 0- 2 1")
    with pytest.raises(PreconditionError):
        socle_closed_form(w, context)


@pytest.mark.parametrize("tag", ["B3", "D4", "G2"])
def test_forced_degrees_inside_windows(socle_contexts, tag):
    context = socle_contexts[tag]
    for s, t in context.atlas.cells:
        for x in context.poset(s, t).elements:
            report = socle_closed_form(x, context)
            assert report.consistency_problems(context.atlas) == [], x.text()


def test_forced_entries_bounded_by_ladder(socle_contexts):
    context = socle_contexts["G2"]
    for s, t in context.atlas.cells:
        assert forced_multiplicity_problems(context, s, t) == []


def test_chain_certificates_in_b3(socle_contexts):
    context = socle_contexts["B3"]
    certificate = chain_certificate(context, "1", "1")
    assert certificate.valid
    assert len(certificate.chain) == 4 == certificate.target
    short = chain_certificate(context, "0", "2")
    assert short.valid
    assert len(short.chain) == 1


@pytest.mark.parametrize("tag", ["D4", "G2", "F4"])
def test_chain_certificates_for_every_cell(socle_contexts, tag):
    context = socle_contexts[tag]
    for s, t in context.atlas.cells:
        assert chain_certificate(context, s, t).valid, (s, t)


def test_ext1_cases(socle_contexts):
    context = socle_contexts["B3"]
    system = context.system
    outside = ext1_bounds(system.identity, system.w0, context)
    assert (outside.case, outside.value, outside.exact) == ("a", 0, True)
    top = ext1_bounds(system.w0, system.w0, context)
    assert (top.case, top.value, top.exact) == ("b", 0, True)
    assert ext1_bounds(system.w0, system.identity, context).value == 3
    x = context.atlas.cells[("1", "1")][-1]
    middle = ext1_bounds(x, system.w0, context)
    assert middle.case == "c"
    assert not middle.exact
    assert middle.value <= 4
    assert middle.to_dict()["kind"] == "upper-bound"


def test_intersection_check_on_b2(kl_tables, systems):
    table = kl_tables["B2"]
    atlas = build_atlas(systems["B2"])
    for w in enumerate_group(systems["B2"]).elements:
        verdict = intersection_check(w, table, atlas)
        assert verdict.passed, verdict.describe()


@pytest.mark.slow
def test_intersection_check_on_b3(kl_tables, systems):
    table = kl_tables["B3"]
    atlas = build_atlas(systems["B3"])
    check_multiplicity_free(table, atlas)
    for w in enumerate_group(systems["B3"]).elements:
        assert intersection_check(w, table, atlas, verified=True).passed


def test_intersection_check_refuses_other_types(kl_tables, systems):
    with pytest.raises(PreconditionError):
        check_multiplicity_free(kl_tables["G2"], build_atlas(systems["G2"]))


def test_ext1_type_caps(systems):
    assert type_cap(systems["B3"]) == 1
    assert type_cap(systems["D4"]) == 2
    assert type_cap(build_system("E6")) == 3


def test_window_only_report(socle_contexts):
    context = socle_contexts["G2"]
    report = socle_window_report(element_from_word(context.system, "12"), context)
    assert report.entries == []
    assert report.window.contains(2)
    assert any("ventana" in note for note in report.notes)


def test_compare_poset_with_its_own_drawing(socle_contexts):
    poset = socle_contexts["G2"].poset("1", "1")
    figure = {
        "nodes": [x.text() for x in poset.graph.nodes],
        "edges": [[a.text(), b.text(), poset.socle_killing(a, b)] for a, b in poset.graph.edges],
    }
    assert compare_with_figure(poset, figure).passed
    dropped = dict(figure, edges=figure["edges"][1:])
    comparison = compare_with_figure(poset, dropped)
    assert not comparison.passed
    assert len(comparison.missing_edges) == 1


def test_b3_o_element_coinciding_with_f_has_a_socle(socle_contexts):
    context = socle_contexts["B3"]
    report = socle_closed_form(element_from_word(context.system, "1 0 2 1"), context)
    assert {e.member for e in report.entries} == {"u", "w"}
    assert all(e.status == FORCED for e in report.entries)


def test_f4_chain_gap_is_covered_by_socle_table(socle_contexts):
    certificate = chain_certificate(socle_contexts["F4"], "3", "3")
    assert certificate.target == 12
    assert len(certificate.chain) == 10
    assert not certificate.reaches_target
    assert certificate.fallback is not None
    assert certificate.valid
    assert certificate.to_dict()["reaches_target"] is False


def test_short_chain_without_table_is_invalid(socle_contexts):
    context = socle_contexts["G2"]
    x = context.poset("1", "1").elements[0]
    certificate = ChainCertificate("1", "1", [x], 5, "a mano")
    assert not certificate.valid
