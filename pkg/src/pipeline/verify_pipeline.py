# Golden suite over the worked example groups plus the family-wide properties
# (p-group and symmetric-group surjectivity, kernel rank of cyclic groups).

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import pandas as pd

from src.components import catalog
from src.components.burnside import hom_count_multiplicities, oracle_structure_constants
from src.components.characters import COMPLEX, RATIONAL, REAL, square_roots_of_identity
from src.components.int_matrix import row_reduce_upper
from src.components.subgroup_lattice import fixed_points
from src.exception import CustomException
from src.logger import logging
from src.pipeline.beta_pipeline import FIELD_TAGS, BetaReport, analyze
from src.pipeline.golden import (
    SEGAL_GROUPS,
    SYMMETRIC_GROUPS,
    GoldenCase,
    cases,
    find_relabeling,
    rows_match,
)
from src.pipeline.report import RULE
from src.utils import Settings, load_settings

logger = logging.getLogger(__name__)

ORACLE_ORDER_LIMIT = 48
ORACLE_SAMPLES = 200
CYCLIC_LIMIT = 30


@dataclass
class GoldenResult:
    group: str
    family: str
    checks: Dict[str, bool] = field(default_factory=dict)
    error: Optional[str] = None
    # row key of the pass/fail matrix; defaults to the group name
    section: str = ""

    @property
    def passed(self) -> bool:
        return self.error is None and all(self.checks.values())

    @property
    def status(self) -> str:
        if self.error is not None:
            return "ERROR"
        return "ok" if self.passed else "FAIL"

    @property
    def key(self) -> str:
        return self.section or self.group


def _cokernel_pair(report: BetaReport, tag: str):
    q = report.cokernels[tag]
    return q.free_rank, tuple(q.invariant_factors)


def structure_oracle_agrees(report: BetaReport, samples: Optional[int] = None, seed: int = 0) -> bool:
    """Formula constants equal the orbit decomposition of G/H_i x G/H_j."""
    G, lattice = report.group, report.lattice
    ordering = [lattice.class_of_subgroup(c.representative) for c in report.marks.ordering]
    position = {cid: k for k, cid in enumerate(ordering)}
    n = len(ordering)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    if samples is not None and samples < len(pairs):
        pairs = random.Random(seed).sample(pairs, samples)
    for i, j in pairs:
        counts = oracle_structure_constants(G, lattice, ordering[i], ordering[j])
        expected = [0] * n
        for cid, mult in counts.items():
            expected[position[cid]] = mult
        if tuple(expected) != report.structure.constants[i][j]:
            logger.warning("%s: structure constants differ at (%d, %d)", report.group_name, i, j)
            return False
    return True


def hom_count_agrees(report: BetaReport) -> bool:
    fixed = [fixed_points(report.group, report.classes, c.representative) for c in report.marks.ordering]
    M = hom_count_multiplicities(report.group.order, report.classes.sizes, fixed)
    return M == report.structure.multiplicities


def character_sanity(report: BetaReport) -> bool:
    table = report.table
    fs_weighted = sum(f * d for f, d in zip(table.fs_indicators, table.degrees))
    return (
        sum(d * d for d in table.degrees) == report.group.order
        and all(f in (-1, 0, 1) for f in table.fs_indicators)
        and fs_weighted == square_roots_of_identity(report.group)
    )


def _triangular_form_agrees(case: GoldenCase, report: BetaReport, perm: Optional[List[int]]) -> bool:
    """H~ of the relabeled multiplicities equals the worked triangular form."""
    if perm is None:
        return False
    if perm == list(range(len(perm))):
        return report.basis.h_tilde.to_lists() == case.h_tilde
    M = report.structure.multiplicities.to_lists()
    pres = [report.basis.presentation[p] for p in perm]
    relabeled = [[M[a][b] for b in pres] for a in pres]
    try:
        h_tilde, _ = row_reduce_upper(relabeled)
    except CustomException:
        return False
    return h_tilde.to_lists() == case.h_tilde


def check_case(case: GoldenCase, settings: Settings, quick: bool = False) -> GoldenResult:
    result = GoldenResult(case.group, case.family, section=case.section)
    try:
        group_id = catalog.parse_catalog_name(case.group)
        report = analyze(group_id, FIELD_TAGS, settings)
        validation = catalog.validate_against_paper(group_id, report.group, report.lattice)
        result.checks["subgroups"] = validation.passed
        result.checks["kernel rank"] = report.kernel_rank == case.kernel_rank
        cyclic = report.cyclic_class_count
        result.checks["kernel = non-cyclic"] = report.kernel_rank == len(report.lattice) - cyclic
        for tag, expected in case.cokernels.items():
            result.checks[f"coker {tag}"] = _cokernel_pair(report, tag) == expected

        presented = [report.marks.ordering[i] for i in report.basis.presentation]
        keys = [(c.order, c.index, c.conjugate_count, c.is_cyclic) for c in presented]
        if case.multiplicities is not None:
            M = report.structure.multiplicities.to_lists()
            order = report.basis.presentation
            actual = [[M[a][b] for b in order] for a in order]
            worked = catalog.expected_subgroup_table(group_id) or keys
            perm = find_relabeling(case.multiplicities, actual, worked, keys)
            result.checks["multiplicities"] = perm is not None
            if case.h_tilde is not None:
                result.checks["triangular form"] = _triangular_form_agrees(case, report, perm)
        if case.image_rows is not None:
            columns = list(zip(report.classes.element_orders, report.classes.sizes))
            rows = [chi.as_ints() for chi in report.image_characters]
            result.checks["image characters"] = rows_match(case.image_rows, rows,
                                                           case.columns or columns, columns)

        result.checks["hom count"] = hom_count_agrees(report)
        result.checks["characters"] = character_sanity(report)
        if report.group.order <= ORACLE_ORDER_LIMIT:
            result.checks["structure oracle"] = structure_oracle_agrees(report)
        elif not quick:
            result.checks["structure oracle"] = structure_oracle_agrees(report, samples=ORACLE_SAMPLES)
    except CustomException as e:
        result.error = str(e)
        logger.error("%s failed: %s", case.group, e)
    return result


def check_surjective(name: str, tags, family: str, settings: Settings) -> GoldenResult:
    result = GoldenResult(name, family, section=f"{family}-surjectivity/{name}")
    try:
        report = analyze(name, tags, settings)
        for tag in tags:
            result.checks[f"coker {tag}"] = report.cokernels[tag].is_trivial
        result.checks["kernel = non-cyclic"] = (
            report.kernel_rank == len(report.lattice) - report.cyclic_class_count
        )
    except CustomException as e:
        result.error = str(e)
    return result


def check_cyclic_kernels(settings: Settings, limit: int = CYCLIC_LIMIT) -> GoldenResult:
    name = f"C1..C{limit}"
    result = GoldenResult(name, "cyclic", section=f"cyclic-injectivity/{name}")
    try:
        injective, surjective = [], []
        for n in range(1, limit + 1):
            report = analyze(catalog.Cyclic(n), (RATIONAL,), settings)
            if report.kernel_rank != 0:
                injective.append(n)
            if not report.cokernels[RATIONAL].is_trivial:
                surjective.append(n)
        if injective or surjective:
            logger.warning("cyclic groups with nonzero kernel %s, nonzero rational cokernel %s",
                           injective, surjective)
        result.checks["kernel rank"] = not injective
        result.checks[f"coker {RATIONAL}"] = not surjective
    except CustomException as e:
        result.error = str(e)
    return result


def run_golden_suite(quick: bool = False, settings: Optional[Settings] = None) -> List[GoldenResult]:
    settings = settings or load_settings()
    results = [check_case(case, settings, quick) for case in cases(quick)]
    for name in SEGAL_GROUPS:
        results.append(check_surjective(name, (RATIONAL,), "p-group", settings))
    for name in SYMMETRIC_GROUPS:
        results.append(check_surjective(name, (RATIONAL, REAL, COMPLEX), "symmetric", settings))
    if not quick:
        results.append(check_cyclic_kernels(settings))
    failed = [r.group for r in results if not r.passed]
    logger.info("golden suite: %d groups, %d failed %s", len(results), len(failed), failed)
    return results


def result_matrix(results: List[GoldenResult]) -> pd.DataFrame:
    """Pass/fail matrix: one row per section, one column per check, "-" where a check does not apply."""
    sections = [r.key for r in results]
    checks = list(dict.fromkeys(name for r in results for name in r.checks))
    long = pd.DataFrame(
        [{"section": r.key, "check": name, "mark": "ok" if ok else "FAIL"}
         for r in results for name, ok in r.checks.items()],
        columns=["section", "check", "mark"],
    )
    if long.empty:
        matrix = pd.DataFrame(index=pd.Index(sections, name="section"), columns=checks)
    else:
        matrix = long.pivot(index="section", columns="check", values="mark")
    matrix = matrix.reindex(index=sections, columns=checks).fillna("-")
    matrix.insert(0, "status", [r.status for r in results])
    matrix.columns.name = None
    matrix.index.name = "section"
    return matrix.reset_index()


def render_results(results: List[GoldenResult]) -> str:
    lines = [RULE, "WORKED EXAMPLE VERIFICATION", RULE, result_matrix(results).to_string(index=False)]
    for r in results:
        if r.error is not None:
            lines.append(f"{r.key}: {r.error}")
    passed = sum(r.passed for r in results)
    lines += [RULE, f"{passed}/{len(results)} passed", ""]
    return "\n".join(lines)
