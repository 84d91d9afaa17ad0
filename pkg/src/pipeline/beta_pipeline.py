# End-to-end analysis of the linearization map from the Burnside ring into
# the representation rings: image, kernel rank and cokernels per field.

import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.components import catalog
from src.components.burnside import BurnsideStructure, ImageBasis, image_basis, structure_constants
from src.components.catalog import CatalogId
from src.components.characters import (
    COMPLEX,
    INTEGRAL,
    INTEGRAL_REAL,
    RATIONAL,
    REAL,
    CharacterLattice,
    ClassFunction,
    IrreducibleTable,
    complex_irreducibles,
    compose_name,
    decompose_complex,
    inner_product,
    lattices_for,
    permutation_character,
)
from src.components.data_ingestion import GroupSpec
from src.components.group_core import ConjClasses, FiniteGroup, close_generators, conjugacy_classes
from src.components.int_matrix import IntMatrix, LatticeQuotient, lattice_quotient, solve_integer
from src.components.subgroup_lattice import (
    MarksTable,
    SubgroupLattice,
    enumerate_subgroup_classes,
    linear_extension,
    table_of_marks,
)
from src.exception import CustomException, InvariantViolation, LatticeMembershipError, UsageError
from src.logger import logging
from src.utils import Settings, load_settings

logger = logging.getLogger(__name__)

FIELD_TAGS = (RATIONAL, REAL, COMPLEX, INTEGRAL, INTEGRAL_REAL)


@dataclass
class BetaReport:
    group_name: str
    group: FiniteGroup
    classes: ConjClasses
    lattice: SubgroupLattice
    marks: MarksTable
    structure: BurnsideStructure
    basis: ImageBasis
    permutation_characters: Tuple[ClassFunction, ...]
    image_characters: Tuple[ClassFunction, ...]
    table: IrreducibleTable
    fields: Tuple[str, ...]
    lattices: Dict[str, CharacterLattice] = field(default_factory=dict)
    coordinates: Dict[str, Tuple[Tuple[int, ...], ...]] = field(default_factory=dict)
    cokernels: Dict[str, LatticeQuotient] = field(default_factory=dict)
    presentations: Dict[str, str] = field(default_factory=dict)
    kernel_rank: int = 0

    @property
    def surjective(self) -> Dict[str, bool]:
        return {tag: q.is_trivial for tag, q in self.cokernels.items()}

    @property
    def effective_rows(self) -> Dict[str, Tuple[bool, ...]]:
        """Per field, whether each V_i has non-negative coordinates."""
        return {tag: tuple(all(x >= 0 for x in row) for row in rows) for tag, rows in self.coordinates.items()}

    @property
    def effective(self) -> Dict[str, bool]:
        return {tag: all(flags) for tag, flags in self.effective_rows.items()}

    @property
    def cyclic_class_count(self) -> int:
        return len(self.lattice.cyclic_indices())


@contextmanager
def stage(name: str):
    try:
        yield
    except CustomException as e:
        if e.stage is None:
            e.stage = name
        raise
    except Exception as e:
        raise CustomException(e, sys, stage=name) from e


def parse_fields(text: Optional[Union[str, Iterable[str]]]) -> Tuple[str, ...]:
    if text is None:
        return FIELD_TAGS
    items = text.split(",") if isinstance(text, str) else list(text)
    tags = []
    for item in items:
        tag = item.strip().lower()
        if not tag:
            continue
        if tag not in FIELD_TAGS:
            raise UsageError(f"unknown field tag {item!r}; choose from {', '.join(FIELD_TAGS)}", sys)
        if tag not in tags:
            tags.append(tag)
    return tuple(t for t in FIELD_TAGS if t in tags)


def image_characters(basis: ImageBasis, permutation_chars: Sequence[ClassFunction],
                     classes: ConjClasses) -> List[ClassFunction]:
    """chi_{V_i} = sum_l U_i^l chi_{G/H_l}, checked orthogonal with norms d_i."""
    fixed = [chi.as_ints() for chi in permutation_chars]
    out = []
    for row in basis.v_defs:
        values = [sum(u * f[c] for u, f in zip(row, fixed)) for c in range(len(classes))]
        out.append(ClassFunction.from_ints(values))
    for i, chi in enumerate(out):
        for j in range(i, len(out)):
            expected = basis.norms[i] if i == j else 0
            if inner_product(classes, chi, out[j]) != expected:
                raise InvariantViolation(f"<V{i + 1}, V{j + 1}> differs from {expected}", sys, stage="burnside")
    return out


def decompose(chi: ClassFunction, lattice: CharacterLattice, table: IrreducibleTable) -> Tuple[int, ...]:
    complex_coords = decompose_complex(table, chi)
    if lattice.tag == COMPLEX:
        coords = complex_coords
    else:
        try:
            coords = solve_integer(lattice.coords_in_complex, complex_coords)
        except LatticeMembershipError as e:
            raise LatticeMembershipError(
                f"class function with coordinates {complex_coords} is outside the {lattice.tag} lattice",
                sys, stage="decompose",
            ) from e
    rebuilt = None
    for c, b in zip(coords, lattice.basis):
        if c:
            term = b.scale(c)
            rebuilt = term if rebuilt is None else rebuilt + term
    if rebuilt is None:
        rebuilt = ClassFunction.from_ints([0] * len(chi))
    if rebuilt != chi:
        raise InvariantViolation("decomposition does not reproduce the class function", sys, stage="decompose")
    return tuple(coords)


def cokernel(coordinates: Sequence[Sequence[int]], lattice: CharacterLattice) -> LatticeQuotient:
    return lattice_quotient(len(lattice), IntMatrix.from_rows(coordinates, len(lattice)))


def render_presentation(names: Sequence[str], relations: Sequence[Sequence[int]]) -> str:
    """Z[basis]/Z[relations] after cancelling relations that equal a single basis vector."""
    alive = list(range(len(names)))
    rows = [list(r) for r in relations]
    changed = True
    while changed:
        changed = False
        for r in rows:
            support = [k for k in alive if r[k]]
            if len(support) == 1 and abs(r[support[0]]) == 1:
                alive.remove(support[0])
                rows.remove(r)
                changed = True
                break
    rows = [r for r in rows if any(r[k] for k in alive)]
    if not alive:
        return "0"
    kept = [names[k] for k in alive]
    text = "Z[" + ",".join(kept) + "]"
    if rows:
        text += "/Z[" + ", ".join(compose_name([r[k] for k in alive], kept) for r in rows) + "]"
    return text


def kernel_rank(report: BetaReport) -> int:
    rank = len(report.lattice) - len(report.basis)
    q = report.cokernels.get(RATIONAL)
    if q is not None and q.is_trivial and rank != len(report.lattice) - report.cyclic_class_count:
        raise InvariantViolation("kernel rank disagrees with the cyclic subgroup count", sys)
    return rank


def resolve_group(source, settings: Settings) -> Tuple[str, FiniteGroup]:
    if isinstance(source, FiniteGroup):
        return source.name, source
    if isinstance(source, str):
        source = catalog.parse_catalog_name(source)
    if isinstance(source, CatalogId):
        return source.name, catalog.build(source, settings.order_cap, settings.assoc_samples)
    if isinstance(source, GroupSpec):
        G = close_generators(source.generators, source.domain, order_cap=settings.order_cap,
                             assoc_samples=settings.assoc_samples, name=source.source)
        return source.source, G
    raise UsageError(f"cannot analyze {type(source).__name__}", sys)


def analyze(source, fields=None, settings: Optional[Settings] = None) -> BetaReport:
    """Build the group, then marks, constants, image basis, characters and cokernels."""
    settings = settings or load_settings()
    tags = parse_fields(fields)
    with stage("build"):
        name, G = resolve_group(source, settings)
        classes = conjugacy_classes(G)
    with stage("subgroups"):
        lattice = enumerate_subgroup_classes(G, settings.subgroup_cap)
        ordering = linear_extension(lattice)
    with stage("marks"):
        marks = table_of_marks(G, ordering)
    with stage("burnside"):
        structure = structure_constants(marks)
        basis = image_basis(structure)
        perm_chars = tuple(permutation_character(G, classes, c) for c in ordering)
        images = tuple(image_characters(basis, perm_chars, classes))
        cyclic = [perm_chars[i].as_ints() for i in lattice.cyclic_indices()]
        if IntMatrix.from_rows(cyclic, len(classes)).rank() != len(cyclic):
            raise InvariantViolation("cyclic permutation characters are linearly dependent", sys)
    with stage("characters"):
        table = complex_irreducibles(G, classes)
        lattices = lattices_for(table, tags, cyclic_classes=len(lattice.cyclic_indices()))

    report = BetaReport(
        group_name=name, group=G, classes=classes, lattice=lattice, marks=marks,
        structure=structure, basis=basis, permutation_characters=perm_chars,
        image_characters=images, table=table, fields=tags, lattices=lattices,
    )
    with stage("decompose"):
        for tag in tags:
            report.coordinates[tag] = tuple(decompose(chi, lattices[tag], table) for chi in images)
    with stage("cokernel"):
        for tag in tags:
            quotient = cokernel(report.coordinates[tag], lattices[tag])
            report.cokernels[tag] = quotient
            report.presentations[tag] = render_presentation(lattices[tag].names, report.coordinates[tag])
        complex_q = report.cokernels.get(COMPLEX)
        if complex_q is not None and complex_q.free_rank != len(classes) - len(basis):
            raise InvariantViolation("free rank over C differs from #classes - #V", sys)
        report.kernel_rank = kernel_rank(report)
    logger.info("%s: kernel rank %d, cokernels %s", name, report.kernel_rank,
                {t: q.describe() for t, q in report.cokernels.items()})
    return report


def summary_table(sources: Iterable, settings: Optional[Settings] = None) -> List[Dict[str, str]]:
    """One row per group with the cokernel presentation for every field tag."""
    rows = []
    for source in sources:
        report = analyze(source, FIELD_TAGS, settings)
        row = {"group": report.group_name, "kernel_rank": str(report.kernel_rank)}
        row.update({tag: report.presentations[tag] for tag in FIELD_TAGS})
        rows.append(row)
    return rows
