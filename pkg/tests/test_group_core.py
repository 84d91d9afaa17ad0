import numpy as np
import pytest

from src.components.cyclotomic import zeta
from src.components.group_core import (
    CyclotomicMatrixDomain,
    PermutationDomain,
    PrimeFieldMatrixDomain,
    close_generators,
    conjugacy_classes,
    power_map,
)
from src.exception import NonInvertibleGenerator, OrderCapExceeded


def test_permutation_closure_s3():
    G = close_generators([(1, 0, 2), (1, 2, 0)], PermutationDomain(3), name="S3")
    assert G.order == 6
    assert G.elements[0] == (0, 1, 2)
    assert sorted(int(x) for x in G.element_orders()) == [1, 2, 2, 2, 3, 3]
    assert G.exponent() == 6
    T = G.cayley
    assert (T[np.arange(6), G.inverse] == 0).all()


def test_cayley_table_matches_composition():
    domain = PermutationDomain(4)
    G = close_generators([(1, 2, 3, 0), (1, 0, 2, 3)], domain)
    assert G.order == 24
    for a in (0, 3, 7, 19):
        for b in (1, 5, 11, 23):
            expected = domain.compose(G.elements[a], G.elements[b])
            assert G.elements[G.cayley[a, b]] == expected


def test_prime_field_matrices():
    domain = PrimeFieldMatrixDomain(3, 2)
    assert domain.determinant(((1, 1), (0, 1))) == 1
    assert not domain.is_invertible(((1, 1), (1, 1)))
    G = close_generators([((1, 1), (0, 1)), ((0, 1), (2, 0))], domain)
    assert G.order == 24
    with pytest.raises(NonInvertibleGenerator):
        close_generators([((1, 1), (1, 1))], domain)


def test_cyclotomic_matrices_build_q8():
    domain = CyclotomicMatrixDomain(4, 2)
    i = domain.normalize([[zeta(4), 0], [0, zeta(4, 3)]])
    j = domain.normalize([[0, -1], [1, 0]])
    G = close_generators([i, j], domain)
    assert G.order == 8
    assert int(np.count_nonzero(G.element_orders() == 4)) == 6


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        close_generators([(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], PermutationDomain(5), order_cap=50)


def test_power_and_centralizer():
    G = close_generators([(1, 2, 3, 4, 5, 0)], PermutationDomain(6))
    g = G.generators[0]
    assert G.power(6)[g] == G.identity_index
    assert G.power(-1)[g] == G.inverse[g]
    assert G.centralizer_order(g) == 6


def test_conjugacy_classes_of_s4():
    G = close_generators([(1, 2, 3, 0), (1, 0, 2, 3)], PermutationDomain(4))
    classes = conjugacy_classes(G)
    assert len(classes) == 5
    assert classes.labels == ("1", "2A", "2B", "3", "4")
    assert classes.sizes == (1, 3, 6, 8, 6)
    assert sum(classes.sizes) == 24
    for c, rep in enumerate(classes.representatives):
        assert G.centralizer_order(rep) * classes.sizes[c] == 24
    assert classes.inverse_class == tuple(range(5))


def test_power_map_sends_classes_to_classes(classes_of, build_group):
    G = build_group("2T")
    classes = classes_of("2T")
    squares = power_map(G, classes, 2)
    assert squares[0] == 0
    # elements of order 4 square to the central involution
    assert squares[classes.labels.index("4")] == classes.labels.index("2")
    cubes = power_map(G, classes, 3)
    assert classes.element_orders[cubes[classes.labels.index("6A")]] == 2


def test_class_sizes_of_worked_examples(classes_of):
    assert classes_of("2D4").sizes == (1, 1, 2, 2, 2)
    assert classes_of("2D6").labels == ("1", "2", "3", "4A", "4B", "6")
    assert classes_of("2D6").sizes == (1, 1, 2, 3, 3, 2)
    assert classes_of("2T").sizes == (1, 1, 4, 4, 6, 4, 4)
    assert sorted(classes_of("2O").sizes) == sorted((1, 1, 8, 6, 12, 8, 6, 6))
    assert sorted(classes_of("GL2F3").sizes) == sorted((1, 1, 12, 8, 6, 8, 6, 6))
