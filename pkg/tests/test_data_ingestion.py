import os
from fractions import Fraction

import pytest

from src.components.cyclotomic import Cyclotomic, zeta
from src.components.data_ingestion import load_group_spec, parse_group_spec
from src.components.group_core import (
    CyclotomicMatrixDomain,
    PermutationDomain,
    PrimeFieldMatrixDomain,
    close_generators,
)
from src.exception import GroupSpecParseError, UsageError

RAW_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "raw")


def test_permutation_document():
    spec = parse_group_spec("domain: permutation 4\n1 0 2 3  # swap\n1 2 3 0\n")
    assert isinstance(spec.domain, PermutationDomain)
    assert spec.generators == [(1, 0, 2, 3), (1, 2, 3, 0)]
    assert close_generators(spec.generators, spec.domain).order == 24


def test_prime_field_document():
    spec = parse_group_spec("domain: GF 5 2\n[[1,1],[0,1]] [[0,1],[4,0]]\n")
    assert isinstance(spec.domain, PrimeFieldMatrixDomain)
    assert spec.generators == [((1, 1), (0, 1)), ((0, 1), (4, 0))]


def test_cyclotomic_document():
    spec = parse_group_spec("domain: cyclotomic 4 2\n0,1 0 0 0,-1\n1/2 0 0 2\n")
    assert isinstance(spec.domain, CyclotomicMatrixDomain)
    i = spec.generators[0]
    assert i[0][0] == zeta(4)
    assert i[1][1] == -zeta(4)
    assert spec.generators[1][0][0] == Cyclotomic.rational(Fraction(1, 2))


@pytest.mark.parametrize("document, line, column", [
    ("", 1, 1),
    ("1 2 0\n", 1, 1),
    ("domain: foo 3\n1 0\n", 1, 9),
    ("domain: gf 4 2\n", 1, 8),
    ("domain: permutation\n", 1, 8),
    ("domain: permutation 3\n1 2 2\n", 2, 1),
    ("domain: permutation 3\n1 2 x\n", 2, 5),
    ("domain: permutation 3\n1 2 0 1\n", 2, 7),
    ("# header only\ndomain: permutation 3\n", 2, 1),
    ("domain: permutation 3\ndomain: permutation 3\n", 2, 1),
    ("domain: cyclotomic 4 1\n0,1/0\n", 2, 1),
    ("domain: cyclotomic 4 1\n0 a\n", 2, 3),
])
def test_parse_errors_carry_position(document, line, column):
    with pytest.raises(GroupSpecParseError) as info:
        parse_group_spec(document)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)
    assert isinstance(info.value, UsageError)
    assert info.value.exit_code == 2


@pytest.mark.parametrize("file_name, order", [
    ("c3_permutation.txt", 3),
    ("gl2f3_borel.txt", 12),
    ("q8_gaussian.txt", 8),
])
def test_bundled_documents(file_name, order):
    spec = load_group_spec(os.path.join(RAW_DIR, file_name))
    assert spec.source == file_name
    assert close_generators(spec.generators, spec.domain).order == order


@pytest.mark.slow
def test_bundled_sl2_f5():
    spec = load_group_spec(os.path.join(RAW_DIR, "sl2_f5.txt"))
    assert close_generators(spec.generators, spec.domain).order == 120


def test_borel_document_has_both_diagonal_generators():
    spec = load_group_spec(os.path.join(RAW_DIR, "gl2f3_borel.txt"))
    assert len(spec.generators) == 3
    G = close_generators(spec.generators, spec.domain)
    assert G.order == 12
    assert G.exponent() == 6
