# Named groups: cyclic, binary dihedral, binary polyhedral, GL(2,3), symmetric.

import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from src.components.cyclotomic import zeta
from src.components.group_core import (
    CyclotomicMatrixDomain,
    FiniteGroup,
    PermutationDomain,
    PrimeFieldMatrixDomain,
    close_generators,
    conjugacy_classes,
)
from src.exception import UnknownGroupError
from src.logger import logging

logger = logging.getLogger(__name__)

CYCLIC = "cyclic"
BINARY_DIHEDRAL = "binary_dihedral"
BINARY_TETRAHEDRAL = "2T"
BINARY_OCTAHEDRAL = "2O"
BINARY_ICOSAHEDRAL = "2I"
GL2F3 = "GL2F3"
SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class CatalogId:
    kind: str
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind in (CYCLIC, SYMMETRIC, BINARY_DIHEDRAL):
            if self.n is None or self.n < 1:
                raise UnknownGroupError(f"{self.kind} needs a positive parameter", sys)
            if self.kind == SYMMETRIC and self.n > 8:
                raise UnknownGroupError("symmetric groups are limited to n <= 8", sys)
            if self.kind == BINARY_DIHEDRAL and self.n < 2:
                raise UnknownGroupError("binary dihedral groups need n >= 2 (2D4 and up)", sys)
        elif self.kind not in (BINARY_TETRAHEDRAL, BINARY_OCTAHEDRAL, BINARY_ICOSAHEDRAL, GL2F3):
            raise UnknownGroupError(f"unknown catalog kind {self.kind!r}", sys)

    @property
    def name(self) -> str:
        if self.kind == CYCLIC:
            return f"C{self.n}"
        if self.kind == BINARY_DIHEDRAL:
            return f"2D{2 * self.n}"
        if self.kind == SYMMETRIC:
            return f"S{self.n}"
        return self.kind

    def __str__(self):
        return self.name


def Cyclic(n: int) -> CatalogId:
    return CatalogId(CYCLIC, n)


def BinaryDihedral(n: int) -> CatalogId:
    return CatalogId(BINARY_DIHEDRAL, n)


def Symmetric(n: int) -> CatalogId:
    return CatalogId(SYMMETRIC, n)


BinaryTetrahedral = CatalogId(BINARY_TETRAHEDRAL)
BinaryOctahedral = CatalogId(BINARY_OCTAHEDRAL)
BinaryIcosahedral = CatalogId(BINARY_ICOSAHEDRAL)
GeneralLinear23 = CatalogId(GL2F3)

_NAME = re.compile(r"^(?:C(?P<c>\d+)|2D(?P<d>\d+)|S(?P<s>\d+)|(?P<x>2T|2O|2I|GL2F3))$")


def parse_catalog_name(text: str) -> CatalogId:
    match = _NAME.match(text.strip())
    if not match:
        raise UnknownGroupError(f"unknown group name {text!r}", sys)
    if match.group("c"):
        return Cyclic(int(match.group("c")))
    if match.group("d"):
        two_n = int(match.group("d"))
        if two_n % 2:
            raise UnknownGroupError(f"2D<2n> needs an even subscript, got {text!r}", sys)
        return BinaryDihedral(two_n // 2)
    if match.group("s"):
        return Symmetric(int(match.group("s")))
    return CatalogId(match.group("x"))


def catalog_name(group_id: CatalogId) -> str:
    return group_id.name


def dynkin_label(group_id: CatalogId) -> Optional[str]:
    """ADE type of the finite subgroups of SU(2); None outside that family."""
    if group_id.kind == CYCLIC:
        return f"A{group_id.n - 1}" if group_id.n > 1 else None
    if group_id.kind == BINARY_DIHEDRAL:
        return f"D{group_id.n + 2}"
    return {BINARY_TETRAHEDRAL: "E6", BINARY_OCTAHEDRAL: "E7", BINARY_ICOSAHEDRAL: "E8"}.get(group_id.kind)


def _sl2_generators(p: int):
    domain = PrimeFieldMatrixDomain(p, 2)
    gens = [domain.normalize([[1, 1], [0, 1]]), domain.normalize([[0, 1], [-1, 0]])]
    return gens, domain


def _gl2f3_generators():
    domain = PrimeFieldMatrixDomain(3, 2)
    gens = []
    for a, b, c, d in product(range(3), repeat=4):
        if (a * d - b * c) % 3:
            gens.append(domain.normalize([[a, b], [c, d]]))
    return gens, domain


def _diagonal_pair(e: int):
    return [[zeta(e, 1), 0], [0, zeta(e, -1)]]


def _binary_octahedral_generators():
    domain = CyclotomicMatrixDomain(8, 2)
    i = zeta(8, 2)
    half = Fraction(1, 2)
    quat_i = [[i, 0], [0, -i]]
    quat_j = [[0, -1], [1, 0]]
    omega = [[(i - 1) * half, (-i - 1) * half], [(1 - i) * half, (-i - 1) * half]]
    gens = [quat_i, quat_j, omega, _diagonal_pair(8)]
    return [domain.normalize(g) for g in gens], domain


def generators_for(group_id: CatalogId):
    """(generators, domain) realizing the catalog group."""
    kind = group_id.kind
    if kind == CYCLIC:
        domain = CyclotomicMatrixDomain(group_id.n, 2)
        return [domain.normalize(_diagonal_pair(group_id.n))], domain
    if kind == BINARY_DIHEDRAL:
        e = 2 * group_id.n
        domain = CyclotomicMatrixDomain(e, 2)
        return [domain.normalize(_diagonal_pair(e)), domain.normalize([[0, -1], [1, 0]])], domain
    if kind == BINARY_TETRAHEDRAL:
        return _sl2_generators(3)
    if kind == BINARY_ICOSAHEDRAL:
        return _sl2_generators(5)
    if kind == BINARY_OCTAHEDRAL:
        return _binary_octahedral_generators()
    if kind == GL2F3:
        return _gl2f3_generators()
    if kind == SYMMETRIC:
        n = group_id.n
        domain = PermutationDomain(n)
        transposition = tuple([1, 0] + list(range(2, n))) if n > 1 else (0,)
        cycle = tuple(list(range(1, n)) + [0])
        return [transposition, cycle], domain
    raise UnknownGroupError(f"no constructor for {group_id}", sys)


def build(group_id: CatalogId, order_cap: int = 1000, assoc_samples: int = 2000) -> FiniteGroup:
    gens, domain = generators_for(group_id)
    G = close_generators(gens, domain, order_cap=order_cap, assoc_samples=assoc_samples,
                         name=group_id.name)
    logger.info("built %s of order %d", group_id.name, G.order)
    return G


# (order, cosets, conjugates, cyclic) per subgroup class, largest first
_SUBGROUP_TABLES = {
    "C2": [(2, 1, 1, True), (1, 2, 1, True)],
    "C3": [(3, 1, 1, True), (1, 3, 1, True)],
    "C4": [(4, 1, 1, True), (2, 2, 1, True), (1, 4, 1, True)],
    "2D4": [(8, 1, 1, False), (4, 2, 1, True), (4, 2, 1, True), (4, 2, 1, True),
            (2, 4, 1, True), (1, 8, 1, True)],
    "2D6": [(12, 1, 1, False), (6, 2, 1, True), (4, 3, 3, True), (3, 4, 1, True),
            (2, 6, 1, True), (1, 12, 1, True)],
    "2D8": [(16, 1, 1, False), (8, 2, 1, True), (8, 2, 1, False), (8, 2, 1, False),
            (4, 4, 2, True), (4, 4, 1, True), (4, 4, 2, True), (2, 8, 1, True), (1, 16, 1, True)],
    "2D10": [(20, 1, 1, False), (10, 2, 1, True), (5, 4, 1, True), (4, 5, 5, True),
             (2, 10, 1, True), (1, 20, 1, True)],
    "2D12": [(24, 1, 1, False), (12, 2, 1, True), (12, 2, 1, False), (12, 2, 1, False),
             (8, 3, 3, False), (6, 4, 1, True), (4, 6, 3, True), (4, 6, 1, True),
             (4, 6, 3, True), (3, 8, 1, True), (2, 12, 1, True), (1, 24, 1, True)],
    "2D14": [(28, 1, 1, False), (14, 2, 1, True), (7, 4, 1, True), (4, 7, 7, True),
             (2, 14, 1, True), (1, 28, 1, True)],
    "2D16": [(32, 1, 1, False), (16, 2, 1, False), (16, 2, 1, True), (16, 2, 1, False),
             (8, 4, 1, True), (8, 4, 2, False), (8, 4, 2, False), (4, 8, 4, True),
             (4, 8, 4, True), (4, 8, 1, True), (2, 16, 1, True), (1, 32, 1, True)],
    "2T": [(24, 1, 1, False), (8, 3, 1, False), (6, 4, 4, True), (4, 6, 3, True),
           (3, 8, 4, True), (2, 12, 1, True), (1, 24, 1, True)],
    "2O": [(48, 1, 1, False), (24, 2, 1, False), (16, 3, 3, False), (12, 4, 4, False),
           (8, 6, 3, False), (8, 6, 1, False), (8, 6, 3, True), (6, 8, 4, True),
           (4, 12, 6, True), (4, 12, 3, True), (3, 16, 4, True), (2, 24, 1, True),
           (1, 48, 1, True)],
    "2I": [(120, 1, 1, False), (24, 5, 5, False), (20, 6, 6, False), (12, 10, 10, False),
           (10, 12, 6, True), (8, 15, 5, False), (6, 20, 10, True), (5, 24, 6, True),
           (4, 30, 15, True), (3, 40, 10, True), (2, 60, 1, True), (1, 120, 1, True)],
    "GL2F3": [(48, 1, 1, False), (24, 2, 1, False), (16, 3, 3, False), (12, 4, 4, False),
              (8, 6, 3, True), (8, 6, 1, False), (8, 6, 3, False), (6, 8, 4, False),
              (6, 8, 4, False), (6, 8, 4, True), (4, 12, 6, False), (4, 12, 3, True),
              (3, 16, 4, True), (2, 24, 1, True), (2, 24, 12, True), (1, 48, 1, True)],
}

# (order, element classes) for every worked example
_GROUP_FACTS = {
    "C2": (2, 2), "C3": (3, 3), "C4": (4, 4),
    "2D4": (8, 5), "2D6": (12, 6), "2D8": (16, 7), "2D10": (20, 8),
    "2D12": (24, 9), "2D14": (28, 10), "2D16": (32, 11),
    "2T": (24, 7), "2O": (48, 8), "2I": (120, 9), "GL2F3": (48, 8),
}

PAPER_GROUPS = ("C2", "C3", "C4", "2D4", "2D6", "2D8", "2D10", "2D12", "2D14", "2D16",
                "2T", "2O", "2I", "GL2F3")


def paper_groups() -> Tuple[CatalogId, ...]:
    return tuple(parse_catalog_name(name) for name in PAPER_GROUPS)


def expected_subgroup_table(group_id: CatalogId) -> Optional[List[Tuple[int, int, int, bool]]]:
    return _SUBGROUP_TABLES.get(group_id.name)


@dataclass
class ValidationReport:
    group: str
    checks: List[Tuple[str, object, object, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for *_, ok in self.checks)

    def add(self, check: str, expected, actual) -> None:
        self.checks.append((check, expected, actual, expected == actual))


def validate_against_paper(group_id: CatalogId, G: FiniteGroup, lattice=None) -> ValidationReport:
    """Compare order, class counts and subgroup tuples with the embedded tables."""
    from src.components.subgroup_lattice import enumerate_subgroup_classes

    report = ValidationReport(group_id.name)
    facts = _GROUP_FACTS.get(group_id.name)
    table = _SUBGROUP_TABLES.get(group_id.name)
    if facts is None:
        return report
    order, class_count = facts
    report.add("order", order, G.order)
    report.add("element classes", class_count, len(conjugacy_classes(G)))
    if lattice is None:
        lattice = enumerate_subgroup_classes(G)
    actual = sorted(
        ((c.order, c.index, c.conjugate_count, c.is_cyclic) for c in lattice.classes), reverse=True
    )
    report.add("subgroup classes", len(table), len(actual))
    report.add("cyclic subgroup classes", sum(1 for row in table if row[3]),
               sum(1 for row in actual if row[3]))
    report.add("subgroup tuples", sorted(table, reverse=True), actual)
    for check, expected, got, ok in report.checks:
        if not ok:
            logger.warning("%s: %s expected %s, got %s", group_id.name, check, expected, got)
    return report
