import pytest

from src.components.subgroup_lattice import (
    close_subgroup,
    distinct_conjugates,
    enumerate_subgroup_classes,
    fixed_points,
    linear_extension,
    paper_labels,
    table_of_marks,
)
from src.exception import InvariantViolation, SubgroupCapExceeded


def test_paper_labels():
    assert paper_labels(3) == ["C", "B", "A"]
    labels = paper_labels(30)
    assert labels[-1] == "A"
    assert labels[0] == "AD"
    assert len(set(labels)) == 30


def test_close_subgroup_and_conjugates(build_group):
    G = build_group("S3")
    transposition = G.generators[0]
    members = close_subgroup(G, [transposition])
    assert len(members) == 2
    assert len(distinct_conjugates(G, members)) == 3
    assert len(close_subgroup(G, list(G.generators))) == 6
    assert list(close_subgroup(G, [])) == [G.identity_index]


def test_subgroup_classes_of_s4(build_group):
    lattice = enumerate_subgroup_classes(build_group("S4"))
    assert len(lattice) == 11
    assert [c.order for c in lattice.classes] == sorted(c.order for c in lattice.classes)
    assert sum(c.conjugate_count for c in lattice.classes) == 30
    assert len(lattice.cyclic_indices()) == 5


def test_subgroup_cap(build_group):
    with pytest.raises(SubgroupCapExceeded):
        enumerate_subgroup_classes(build_group("S4"), subgroup_cap=10)


def test_lookup_and_subconjugacy(lattice_of):
    lattice = lattice_of("2D4")
    trivial, whole = 0, len(lattice) - 1
    assert lattice.classes[trivial].order == 1
    assert lattice.classes[whole].order == 8
    assert lattice.class_of_subgroup(range(8)) == whole
    assert lattice.is_subconjugate(trivial, whole)
    assert not lattice.is_subconjugate(whole, trivial)
    fours = [i for i, c in enumerate(lattice.classes) if c.order == 4]
    assert len(fours) == 3
    assert not lattice.is_subconjugate(fours[0], fours[1])
    with pytest.raises(InvariantViolation):
        lattice.class_of_subgroup([0, 1, 2])
    assert lattice.classes[whole].normalizer_order == 8


def test_marks_of_cyclic_groups(build_group, lattice_of):
    for name, expected in [
        ("C2", [[2, 0], [1, 1]]),
        ("C4", [[4, 0, 0], [2, 2, 0], [1, 1, 1]]),
    ]:
        marks = table_of_marks(build_group(name), linear_extension(lattice_of(name)))
        assert marks.marks.to_lists() == expected


def test_marks_of_s3(build_group):
    G = build_group("S3")
    marks = table_of_marks(G, linear_extension(enumerate_subgroup_classes(G)))
    assert marks.marks.to_lists() == [
        [6, 0, 0, 0],
        [3, 1, 0, 0],
        [2, 0, 2, 0],
        [1, 1, 1, 1],
    ]


@pytest.mark.parametrize("name", ["2D4", "2D6", "2T", "GL2F3"])
def test_marks_properties(name, build_group, lattice_of):
    G = build_group(name)
    ordering = linear_extension(lattice_of(name))
    marks = table_of_marks(G, ordering).marks
    assert marks.is_lower_triangular()
    for i, cls in enumerate(ordering):
        # first column counts cosets, last row is all ones
        assert marks[i, 0] == cls.index
        assert marks[len(ordering) - 1, i] == 1
        assert marks[i, i] == cls.normalizer_order // cls.order


def test_fixed_points_match_first_marks_column(build_group, classes_of, lattice_of):
    G = build_group("2T")
    classes = classes_of("2T")
    for cls in lattice_of("2T").classes:
        counts = fixed_points(G, classes, cls.representative)
        assert counts[0] == cls.index
        assert sum(s * f for s, f in zip(classes.sizes, counts)) % G.order == 0
