# Subgroup classes, an inclusion-compatible ordering and the table of marks.

import sys
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from src.components.group_core import FiniteGroup
from src.components.int_matrix import IntMatrix
from src.exception import InvariantViolation, SubgroupCapExceeded
from src.logger import logging

logger = logging.getLogger(__name__)

Members = Tuple[int, ...]


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups, represented by its smallest conjugate."""

    representative: Members
    order: int
    index: int
    conjugate_count: int
    is_cyclic: bool

    @property
    def normalizer_order(self) -> int:
        return self.order * self.index // self.conjugate_count


@dataclass
class SubgroupLattice:
    group: FiniteGroup
    classes: List[SubgroupClass]
    lookup: Dict[Members, int]

    def __len__(self):
        return len(self.classes)

    def class_of_subgroup(self, members: Sequence[int]) -> int:
        key = tuple(sorted(int(x) for x in members))
        if key not in self.lookup:
            raise InvariantViolation(f"subgroup of order {len(key)} is not in the lattice", sys)
        return self.lookup[key]

    def is_subconjugate(self, i: int, j: int) -> bool:
        """Some conjugate of H_i lies inside H_j."""
        small, big = self.classes[i], self.classes[j]
        if big.order % small.order:
            return False
        inside = np.zeros(self.group.order, dtype=bool)
        inside[list(big.representative)] = True
        return bool(inside[conjugation_rows(self.group, small.representative)].all(axis=1).any())

    def cyclic_indices(self) -> List[int]:
        return [i for i, c in enumerate(self.classes) if c.is_cyclic]


def paper_labels(n: int) -> List[str]:
    """Letters for classes in increasing order, so that the largest subgroup is A."""
    labels = []
    for i in range(n):
        k = n - 1 - i
        label = ""
        k += 1
        while k:
            k, r = divmod(k - 1, 26)
            label = chr(ord("A") + r) + label
        labels.append(label)
    return labels


def close_subgroup(G: FiniteGroup, gens: Sequence[int], start: np.ndarray = None) -> np.ndarray:
    """Sorted members of the subgroup generated by gens (and the set start)."""
    T = G.cayley
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity_index] = True
    frontier = np.array([G.identity_index], dtype=np.int64)
    if start is not None:
        mask[start] = True
        frontier = np.asarray(start, dtype=np.int64)
    gens = np.asarray(gens, dtype=np.int64)
    if gens.size == 0:
        return np.flatnonzero(mask)
    while frontier.size:
        products = T[np.ix_(frontier, gens)].ravel()
        fresh = np.unique(products[~mask[products]])
        mask[fresh] = True
        frontier = fresh
    return np.flatnonzero(mask)


def conjugation_rows(G: FiniteGroup, members: Sequence[int]) -> np.ndarray:
    """Row g holds g^-1 h g for the members h (unsorted)."""
    T = G.cayley
    members = np.asarray(members, dtype=np.int64)
    g = np.arange(G.order)
    return T[T[G.inverse[:, None], members[None, :]], g[:, None]]


def distinct_conjugates(G: FiniteGroup, members: Sequence[int]) -> np.ndarray:
    """Distinct conjugates as sorted rows, lexicographically ordered."""
    return np.unique(np.sort(conjugation_rows(G, members), axis=1), axis=0)


def enumerate_subgroup_classes(G: FiniteGroup, subgroup_cap: int = 5000) -> SubgroupLattice:
    """
    All subgroup classes: seed with every cyclic subgroup, extend each class
    representative by one cyclic subgroup at a time, close, and dedupe by
    member set across all conjugates.
    """
    orders = G.element_orders()
    cyclic_gens: List[int] = []
    seen_cyclic = set()
    for g in range(G.order):
        key = tuple(close_subgroup(G, [g]).tolist())
        if key not in seen_cyclic:
            seen_cyclic.add(key)
            cyclic_gens.append(g)

    lookup: Dict[Members, int] = {}
    found: List[Tuple[np.ndarray, Tuple[int, ...], np.ndarray]] = []
    total = 0

    def register(members: np.ndarray, gens: Tuple[int, ...]):
        nonlocal total
        key = tuple(members.tolist())
        if key in lookup:
            return None
        conj = distinct_conjugates(G, members)
        total += len(conj)
        if total > subgroup_cap:
            raise SubgroupCapExceeded(
                f"more than {subgroup_cap} subgroups in {G.name}", sys, stage="subgroups"
            )
        cid = len(found)
        for row in conj:
            lookup[tuple(row.tolist())] = cid
        found.append((members, gens, conj))
        return cid

    for g in cyclic_gens:
        register(close_subgroup(G, [g]), (g,))

    queue = deque(range(len(found)))
    while queue:
        cid = queue.popleft()
        members, gens, _ = found[cid]
        inside = np.zeros(G.order, dtype=bool)
        inside[members] = True
        for g in cyclic_gens:
            if inside[g]:
                continue
            bigger = close_subgroup(G, gens + (g,), start=members)
            new = register(bigger, gens + (g,))
            if new is not None:
                queue.append(new)

    order_of = sorted(range(len(found)), key=lambda c: (len(found[c][0]), tuple(found[c][2][0].tolist())))
    remap = {old: new for new, old in enumerate(order_of)}
    classes = []
    for old in order_of:
        members, _, conj = found[old]
        size = len(members)
        classes.append(SubgroupClass(
            representative=tuple(conj[0].tolist()),
            order=size,
            index=G.order // size,
            conjugate_count=len(conj),
            is_cyclic=bool(orders[members].max() == size),
        ))
    lookup = {key: remap[cid] for key, cid in lookup.items()}
    logger.info("%s: %d subgroups in %d classes", G.name, total, len(classes))
    return SubgroupLattice(group=G, classes=classes, lookup=lookup)


def linear_extension(lattice: SubgroupLattice) -> List[SubgroupClass]:
    """Increasing order compatible with inclusion up to conjugacy (trivial subgroup first)."""
    ordering = sorted(range(len(lattice)), key=lambda i: (lattice.classes[i].order,
                                                          lattice.classes[i].representative))
    position = {c: k for k, c in enumerate(ordering)}
    for i in range(len(lattice)):
        for j in range(len(lattice)):
            if i != j and position[i] > position[j] and lattice.is_subconjugate(i, j):
                raise InvariantViolation("ordering does not extend inclusion", sys)
    return [lattice.classes[i] for i in ordering]


def fixed_points(G: FiniteGroup, classes, members: Sequence[int]) -> Tuple[int, ...]:
    """|(G/H)^g| for a representative g of every element class."""
    inside = np.zeros(G.order, dtype=bool)
    inside[list(members)] = True
    counts = []
    for c, size in enumerate(classes.sizes):
        meet = int(inside[classes.members[c]].sum())
        value, rest = divmod(G.order // size * meet, len(members))
        if rest:
            raise InvariantViolation("fixed-point count is not an integer", sys)
        counts.append(value)
    return tuple(counts)


@dataclass(frozen=True)
class MarksTable:
    ordering: Tuple[SubgroupClass, ...]
    marks: IntMatrix

    def __len__(self):
        return len(self.ordering)


def table_of_marks(G: FiniteGroup, ordering: Sequence[SubgroupClass]) -> MarksTable:
    """m_ij = number of cosets in G/H_i fixed by H_j."""
    n = len(ordering)
    masks = []
    for cls in ordering:
        mask = np.zeros(G.order, dtype=bool)
        mask[list(cls.representative)] = True
        masks.append(mask)
    marks = [[0] * n for _ in range(n)]
    for j, cls in enumerate(ordering):
        rows = conjugation_rows(G, cls.representative)
        for i, big in enumerate(ordering):
            if big.order % cls.order:
                continue
            fixing = int(masks[i][rows].all(axis=1).sum())
            if fixing % big.order:
                raise InvariantViolation("fixed-point count not divisible by the subgroup order", sys)
            marks[i][j] = fixing // big.order
    table = IntMatrix.from_rows(marks, n)
    if not table.is_lower_triangular():
        raise InvariantViolation("table of marks is not lower triangular", sys)
    for i, cls in enumerate(ordering):
        if marks[i][i] != cls.normalizer_order // cls.order or marks[i][i] <= 0:
            raise InvariantViolation(f"bad diagonal mark at {i}", sys)
    return MarksTable(ordering=tuple(ordering), marks=table)
