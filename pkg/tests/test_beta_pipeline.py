import pytest

from src.components.data_ingestion import parse_group_spec
from src.exception import CustomException, SubgroupCapExceeded, UsageError
from src.pipeline.beta_pipeline import (
    FIELD_TAGS,
    analyze,
    parse_fields,
    render_presentation,
    summary_table,
)
from src.pipeline.golden import CASES, SEGAL_GROUPS, SYMMETRIC_GROUPS
from src.utils import Settings

SLOW = {"2D14", "2D16", "2I"}


def _pair(quotient):
    return quotient.free_rank, tuple(quotient.invariant_factors)


@pytest.mark.parametrize("name", [
    pytest.param(name, marks=pytest.mark.slow) if name in SLOW else name for name in CASES
])
def test_cokernels_of_worked_examples(name, report_of):
    case = CASES[name]
    report = report_of(name)
    assert report.kernel_rank == case.kernel_rank
    assert report.kernel_rank == len(report.lattice) - report.cyclic_class_count
    for tag, expected in case.cokernels.items():
        assert _pair(report.cokernels[tag]) == expected, tag


@pytest.mark.parametrize("name", ["2D4", "2D6", "2D8", "2D10", "2D12", "2T", "2O"])
def test_integer_real_cokernel_vanishes(name, report_of):
    assert report_of(name).cokernels["int-r"].is_trivial


@pytest.mark.parametrize("name", [
    pytest.param(name, marks=pytest.mark.slow) if name in SLOW else name for name in SEGAL_GROUPS
])
def test_rational_surjectivity_for_p_groups(name, settings):
    report = analyze(name, "q", settings)
    assert report.surjective == {"q": True}


@pytest.mark.parametrize("name", SYMMETRIC_GROUPS)
def test_symmetric_groups_are_surjective(name, settings):
    report = analyze(name, "q,r,c", settings)
    assert all(report.surjective.values())
    assert report.fields == ("q", "r", "c")


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_groups_have_trivial_kernel(n, settings):
    report = analyze(f"C{n}", ["q"], settings)
    assert report.kernel_rank == 0
    assert report.cokernels["q"].is_trivial


@pytest.mark.slow
@pytest.mark.parametrize("n", range(13, 31))
def test_larger_cyclic_groups_have_trivial_kernel(n, settings):
    assert analyze(f"C{n}", ["q"], settings).kernel_rank == 0


def test_binary_octahedral_and_gl2f3_differ(report_of):
    octahedral, linear = report_of("2O"), report_of("GL2F3")
    assert octahedral.group.order == linear.group.order == 48
    assert len(octahedral.classes) == len(linear.classes) == 8
    assert (len(octahedral.lattice), len(linear.lattice)) == (13, 16)
    assert _pair(octahedral.cokernels["c"]) == (1, (2, 2))
    assert _pair(linear.cokernels["c"]) == (1, ())


def test_quaternion_image_lands_on_twice_rho5(report_of):
    report = report_of("2D4")
    assert report.coordinates["c"][-1] == (0, 0, 0, 0, 2)
    assert report.image_characters[-1].as_ints() == (4, -4, 0, 0, 0)
    assert report.presentations["c"] == "Z[rho5]/Z[2rho5]"
    assert report.basis.norms[-1] == 4


def test_presentations_of_c3(report_of):
    report = report_of("C3")
    assert report.presentations["q"] == "0"
    assert report.presentations["r"] == "0"
    assert report.presentations["c"] == "Z[rho2,rho3]/Z[rho2+rho3]"
    assert report.surjective == {"q": True, "r": True, "c": False, "int": True, "int-r": True}
    assert all(report.effective.values())
    assert report.effective_rows["c"] == (True, True)


def test_render_presentation():
    names = ["rho1", "rho2"]
    assert render_presentation(names, [[1, 0], [0, 1]]) == "0"
    assert render_presentation(names, [[1, 0], [0, 2]]) == "Z[rho2]/Z[2rho2]"
    assert render_presentation(names, [[1, 1]]) == "Z[rho1,rho2]/Z[rho1+rho2]"
    assert render_presentation(names, []) == "Z[rho1,rho2]"
    # a unit relation exposed by an earlier cancellation
    assert render_presentation(names, [[1, 1], [1, 0]]) == "0"


def test_parse_fields():
    assert parse_fields(None) == FIELD_TAGS
    assert parse_fields("c, Q") == ("q", "c")
    assert parse_fields(["int", "int", "int-r"]) == ("int", "int-r")
    with pytest.raises(UsageError):
        parse_fields("h")


def test_analyze_group_spec(settings):
    spec = parse_group_spec("domain: permutation 3\n1 2 0\n", source="c3.txt")
    report = analyze(spec, "c", settings)
    assert report.group_name == "c3.txt"
    assert report.group.order == 3
    assert _pair(report.cokernels["c"]) == (1, ())


def test_errors_are_labelled_with_their_stage():
    with pytest.raises(SubgroupCapExceeded) as info:
        analyze("S4", "q", Settings(subgroup_cap=5))
    assert info.value.stage == "subgroups"
    assert str(info.value).startswith("[stage subgroups]")
    with pytest.raises(UsageError):
        analyze("D4", "q", Settings())
    with pytest.raises(CustomException):
        analyze(42, "q", Settings())


def test_summary_table(settings):
    rows = summary_table(["C2", "C3"], settings)
    assert [r["group"] for r in rows] == ["C2", "C3"]
    assert all(rows[0][tag] == "0" for tag in FIELD_TAGS)
    assert rows[1]["kernel_rank"] == "0"
    assert rows[1]["c"] == "Z[rho2,rho3]/Z[rho2+rho3]"
