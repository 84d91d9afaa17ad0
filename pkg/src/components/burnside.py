# Burnside ring structure constants, the multiplicity (Gram) matrix and the
# orthogonal image basis obtained by naive integral row reduction.

import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.components.group_core import FiniteGroup
from src.components.int_matrix import IntMatrix, row_reduce_upper, triangular_inverse
from src.components.subgroup_lattice import MarksTable, SubgroupLattice, paper_labels
from src.exception import InvariantViolation
from src.logger import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BurnsideStructure:
    """n[i][j][l]: multiplicity of G/H_l in G/H_i x G/H_j (increasing class order)."""

    marks: MarksTable
    constants: Tuple[Tuple[Tuple[int, ...], ...], ...]
    multiplicities: IntMatrix

    def __len__(self):
        return len(self.constants)


@dataclass(frozen=True)
class ImageBasis:
    """
    Reduction of M in presentation order (largest subgroup first).
    u_tilde and h_tilde are indexed by presentation position; v_defs re-index
    the rows of u_tilde by the increasing class order.
    """

    presentation: Tuple[int, ...]
    u_tilde: IntMatrix
    h_tilde: IntMatrix
    v_defs: Tuple[Tuple[int, ...], ...]
    norms: Tuple[int, ...]
    pivots: Tuple[int, ...]

    def __len__(self):
        return len(self.norms)


def structure_constants(marks: MarksTable) -> BurnsideStructure:
    m = marks.marks.to_lists()
    n = len(m)
    inverse = triangular_inverse(m)
    denom = lcm(*(x.denominator for row in inverse for x in row)) if n else 1
    scaled = np.array([[int(x * denom) for x in row] for row in inverse], dtype=object)
    m_cols = np.array(m, dtype=object)

    constants = []
    for i in range(n):
        # weights[j, k] = m_ik * m_jk
        weights = m_cols[i][None, :] * m_cols
        raw = weights.dot(scaled)
        row = []
        for j in range(n):
            values = []
            for value in raw[j]:
                q, r = divmod(int(value), denom)
                if r or q < 0:
                    raise InvariantViolation(
                        f"structure constant n[{i}][{j}] = {Fraction(int(value), denom)} is not a non-negative integer",
                        sys, stage="burnside",
                    )
                values.append(q)
            row.append(tuple(values))
        constants.append(tuple(row))

    for i in range(n):
        for j in range(i):
            if constants[i][j] != constants[j][i]:
                raise InvariantViolation(f"structure constants not symmetric at ({i},{j})", sys)
    multiplicities = IntMatrix.from_rows([[sum(constants[i][j]) for j in range(n)] for i in range(n)], n)
    logger.info("structure constants for %d subgroup classes", n)
    return BurnsideStructure(marks=marks, constants=tuple(constants), multiplicities=multiplicities)


def coset_action(G: FiniteGroup, members: Sequence[int]) -> np.ndarray:
    """act[x, c]: the coset x * (coset c) of G/H, cosets numbered by first element."""
    T = G.cayley
    members = np.asarray(members, dtype=np.int64)
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset_of[g] < 0:
            coset_of[T[g, members]] = len(reps)
            reps.append(g)
    return coset_of[T[:, reps]]


def oracle_structure_constants(G: FiniteGroup, lattice: SubgroupLattice, i: int, j: int) -> Dict[int, int]:
    """Orbit decomposition of G/H_i x G/H_j; maps class index to multiplicity."""
    act_i = coset_action(G, lattice.classes[i].representative)
    act_j = coset_action(G, lattice.classes[j].representative)
    ni, nj = act_i.shape[1], act_j.shape[1]
    labelled = np.zeros(ni * nj, dtype=bool)
    counts: Counter = Counter()
    for point in range(ni * nj):
        if labelled[point]:
            continue
        a, b = divmod(point, nj)
        labelled[np.unique(act_i[:, a] * nj + act_j[:, b])] = True
        stabilizer = np.flatnonzero((act_i[:, a] == a) & (act_j[:, b] == b))
        counts[lattice.class_of_subgroup(stabilizer)] += 1
    return dict(counts)


def image_basis(structure: BurnsideStructure) -> ImageBasis:
    n = len(structure)
    presentation = tuple(range(n - 1, -1, -1))
    M = structure.multiplicities.to_lists()
    M_pres = [[M[a][b] for b in presentation] for a in presentation]
    h_tilde, u_tilde = row_reduce_upper(M_pres)

    U = u_tilde.to_lists()
    gram = (u_tilde @ IntMatrix.from_rows(M_pres, n)) @ u_tilde.transpose()
    norms = []
    pivots = []
    for r, row in enumerate(h_tilde.rows):
        for s in range(gram.nrows):
            if s != r and gram[r, s]:
                raise InvariantViolation(f"V_{r + 1} and V_{s + 1} are not orthogonal", sys, stage="burnside")
        d = gram[r, r]
        if d <= 0 or any(x % d for x in row):
            raise InvariantViolation(f"norm {d} does not divide row {r + 1} of H", sys, stage="burnside")
        norms.append(d)
        pivots.append(next(k for k, x in enumerate(row) if x))

    v_defs = []
    for row in U:
        by_class = [0] * n
        for k, coeff in enumerate(row):
            by_class[presentation[k]] = coeff
        v_defs.append(tuple(by_class))
    logger.info("image basis: %d of %d classes survive, norms %s", len(norms), n, norms)
    return ImageBasis(
        presentation=presentation,
        u_tilde=u_tilde,
        h_tilde=h_tilde,
        v_defs=tuple(v_defs),
        norms=tuple(norms),
        pivots=tuple(pivots),
    )


def beta_matrix(basis: ImageBasis) -> IntMatrix:
    """Row i, column j: coefficient of V_i in beta([G/H_j]), presentation order."""
    return IntMatrix.from_rows(
        ([x // d for x in row] for row, d in zip(basis.h_tilde.rows, basis.norms)),
        basis.h_tilde.ncols,
    )


def hom_count_multiplicities(order: int, class_sizes: Sequence[int],
                             fixed: Sequence[Sequence[int]]) -> IntMatrix:
    """(1/|G|) sum_g |(G/H_i)^g| |(G/H_j)^g| from per-class fixed-point counts."""
    n = len(fixed)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            total = sum(s * a * b for s, a, b in zip(class_sizes, fixed[i], fixed[j]))
            if total % order:
                raise InvariantViolation("hom count is not an integer", sys)
            row.append(total // order)
        rows.append(row)
    return IntMatrix.from_rows(rows, n)


def product_table(structure: BurnsideStructure) -> List[List[str]]:
    """Products [G/H_i][G/H_j] as letter sums, both axes in presentation order."""
    n = len(structure)
    labels = paper_labels(n)
    order = range(n - 1, -1, -1)
    table = []
    for i in order:
        row = []
        for j in order:
            terms = []
            for l in order:
                c = structure.constants[i][j][l]
                if c:
                    terms.append(labels[l] if c == 1 else f"{c}{labels[l]}")
            row.append(" + ".join(terms) if terms else "0")
        table.append(row)
    return table
