import pytest

from src.components.characters import (
    INTEGRAL,
    ClassFunction,
    complex_irreducibles,
    complex_lattice,
    compose_name,
    decompose_complex,
    dixon_prime,
    inner_product,
    integer_valued_sublattice,
    lattices_for,
    permutation_character,
    rational_irreducible_basis,
    real_irreducible_basis,
    square_roots_of_identity,
)
from src.components.int_matrix import solve_integer
from src.exception import InvariantViolation, LatticeMembershipError, SchurIndexMismatch


def _table(name, build_group, classes_of):
    return complex_irreducibles(build_group(name), classes_of(name))


def test_dixon_prime():
    assert dixon_prime(8, 4) == 5
    assert dixon_prime(8, 4, after=5) == 13
    assert dixon_prime(24, 12) == 13
    assert dixon_prime(1, 1) == 3


def test_compose_name():
    names = ["rho1", "rho2", "rho3"]
    assert compose_name([1, 0, 0], names) == "rho1"
    assert compose_name([0, 2, 2], names) == "2rho2+2rho3"
    assert compose_name([1, -1, 0], names) == "rho1-rho2"
    assert compose_name([0, 0, 0], names) == "0"
    assert compose_name([2], ["rho2+rho3"]) == "2(rho2+rho3)"
    assert compose_name([-1], ["rho2+rho3"]) == "-(rho2+rho3)"


@pytest.mark.parametrize("name", ["C5", "S3", "2D4", "2D6", "2T", "S4"])
def test_table_is_orthonormal(name, build_group, classes_of):
    G = build_group(name)
    classes = classes_of(name)
    table = complex_irreducibles(G, classes)
    assert len(table) == len(classes)
    assert sum(d * d for d in table.degrees) == G.order
    assert table.chars[0].as_ints() == (1,) * len(classes)
    for i, chi in enumerate(table.chars):
        for j, psi in enumerate(table.chars):
            assert inner_product(classes, chi, psi) == (1 if i == j else 0)
    assert (table.prime - 1) % table.exponent == 0


@pytest.mark.parametrize("name, expected", [
    ("C3", 1), ("2D4", 2), ("2D6", 2), ("2T", 2), ("S3", 4), ("S4", 10),
])
def test_indicators_count_square_roots_of_identity(name, expected, build_group, classes_of):
    table = _table(name, build_group, classes_of)
    assert square_roots_of_identity(build_group(name)) == expected
    assert sum(f * d for f, d in zip(table.fs_indicators, table.degrees)) == expected


def test_quaternion_characters(build_group, classes_of):
    table = _table("2D4", build_group, classes_of)
    assert table.degrees == (1, 1, 1, 1, 2)
    assert table.fs_indicators == (1, 1, 1, 1, -1)
    assert all(chi.is_integer_valued() for chi in table.chars)
    assert table.names[-1] == "rho5"

    real = real_irreducible_basis(table)
    assert real.names == ("rho1", "rho2", "rho3", "rho4", "2rho5")
    rational = rational_irreducible_basis(table, cyclic_classes=5)
    assert rational.names == real.names
    with pytest.raises(SchurIndexMismatch):
        rational_irreducible_basis(table, cyclic_classes=4)


def test_cyclic_characters_pair_up_over_the_reals(build_group, classes_of):
    table = _table("C3", build_group, classes_of)
    assert table.fs_indicators == (1, 0, 0)
    real = real_irreducible_basis(table)
    assert real.names == ("rho1", "rho2+rho3")
    assert real.basis[1].as_ints() == (2, -1, -1)


def test_integer_valued_sublattice_of_c3(build_group, classes_of):
    table = _table("C3", build_group, classes_of)
    lattice = integer_valued_sublattice(complex_lattice(table), table)
    assert lattice.tag == INTEGRAL
    assert len(lattice) == 2
    assert all(chi.is_integer_valued() for chi in lattice.basis)
    coords = lattice.coords_in_complex.to_lists()
    solve_integer(coords, [0, 1, 1])
    with pytest.raises(LatticeMembershipError):
        solve_integer(coords, [0, 1, 0])


@pytest.mark.parametrize("name", ["C4", "C6", "2D6", "2D8", "2T", "S4"])
def test_rational_count_equals_cyclic_classes(name, build_group, classes_of, lattice_of):
    table = _table(name, build_group, classes_of)
    cyclic = len(lattice_of(name).cyclic_indices())
    assert len(rational_irreducible_basis(table, cyclic_classes=cyclic)) == cyclic


def test_real_basis_of_binary_tetrahedral(report_of):
    table = report_of("2T").table
    assert table.degrees == (1, 1, 1, 2, 2, 2, 3)
    real = real_irreducible_basis(table)
    assert len(real) == 5
    assert sorted(chi.degree for chi in real.basis) == [1, 2, 3, 4, 4]
    assert all(v.is_rational() for chi in real.basis for v in chi.values)


def test_lattices_for_every_tag(report_of):
    table = report_of("2D6").table
    lattices = lattices_for(table, ["q", "r", "c", "int", "int-r"], cyclic_classes=5)
    assert {tag: len(lat) for tag, lat in lattices.items()} == {"q": 5, "r": 5, "c": 6, "int": 5, "int-r": 5}
    with pytest.raises(ValueError):
        lattices_for(table, ["h"])


def test_permutation_characters_decompose(build_group, classes_of, lattice_of):
    G = build_group("2D4")
    classes = classes_of("2D4")
    table = complex_irreducibles(G, classes)
    trivial = lattice_of("2D4").classes[0]
    regular = permutation_character(G, classes, trivial)
    assert regular.as_ints() == (8, 0, 0, 0, 0)
    assert decompose_complex(table, regular) == (1, 1, 1, 1, 2)


def test_index_of_rejects_non_characters(report_of):
    table = report_of("C2").table
    assert table.index_of(table.chars[1]) == 1
    with pytest.raises(InvariantViolation):
        table.index_of(ClassFunction.from_ints([2, 0]))
