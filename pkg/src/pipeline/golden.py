# Expected results for the worked example groups, and comparisons that are
# insensitive to how ties between equal-looking classes are broken.

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from src.components.characters import COMPLEX, INTEGRAL, INTEGRAL_REAL, RATIONAL, REAL

Cokernel = Tuple[int, Tuple[int, ...]]
# (element order, class size)
ClassColumn = Tuple[int, int]
ZERO: Cokernel = (0, ())


@dataclass(frozen=True)
class GoldenCase:
    group: str
    family: str
    section: str
    kernel_rank: int
    cokernels: Dict[str, Cokernel]
    # presentation order, largest subgroup first, rows as in the catalog subgroup table
    multiplicities: Optional[List[List[int]]] = None
    h_tilde: Optional[List[List[int]]] = None
    # image characters with their column headers, in the order the worked display uses
    image_rows: Optional[List[Tuple[int, ...]]] = None
    columns: Optional[List[ClassColumn]] = None
    slow: bool = False
    notes: Tuple[str, ...] = field(default=())


def _all(c=ZERO, r=ZERO, integral=ZERO) -> Dict[str, Cokernel]:
    return {RATIONAL: ZERO, REAL: r, COMPLEX: c, INTEGRAL: integral, INTEGRAL_REAL: ZERO}


CASES: Dict[str, GoldenCase] = {
    "C2": GoldenCase(
        "C2", "cyclic", "cyclic/C2", 0, _all(),
        multiplicities=[[1, 1], [1, 2]],
        h_tilde=[[1, 1], [0, 1]],
        image_rows=[(1, 1), (1, -1)],
        columns=[(1, 1), (2, 1)],
    ),
    "C3": GoldenCase(
        "C3", "cyclic", "cyclic/C3", 0, _all(c=(1, ())),
        multiplicities=[[1, 1], [1, 3]],
        h_tilde=[[1, 1], [0, 2]],
        image_rows=[(1, 1, 1), (2, -1, -1)],
        columns=[(1, 1), (3, 1), (3, 1)],
        notes=("the summary matrix lists the quotient under R; the worked display and this code put it under C",),
    ),
    "C4": GoldenCase(
        "C4", "cyclic", "cyclic/C4", 0, _all(c=(1, ())),
        multiplicities=[[1, 1, 1], [1, 2, 2], [1, 2, 4]],
        h_tilde=[[1, 1, 1], [0, 1, 1], [0, 0, 2]],
        # columns are the powers 1, g, g^2, g^3
        image_rows=[(1, 1, 1, 1), (1, -1, 1, -1), (2, 0, -2, 0)],
        columns=[(1, 1), (4, 1), (2, 1), (4, 1)],
        notes=("same R/C placement difference as C3",),
    ),
    "2D4": GoldenCase(
        "2D4", "binary dihedral", "binary-dihedral/2D4", 1, _all(c=(0, (2,)), integral=(0, (2,))),
        multiplicities=[
            [1, 1, 1, 1, 1, 1],
            [1, 2, 1, 1, 2, 2],
            [1, 1, 2, 1, 2, 2],
            [1, 1, 1, 2, 2, 2],
            [1, 2, 2, 2, 4, 4],
            [1, 2, 2, 2, 4, 8],
        ],
        h_tilde=[
            [1, 1, 1, 1, 1, 1],
            [0, 1, 0, 0, 1, 1],
            [0, 0, 1, 0, 1, 1],
            [0, 0, 0, 1, 1, 1],
            [0, 0, 0, 0, 0, 4],
        ],
        image_rows=[(1, 1, 1, 1, 1), (1, 1, -1, 1, -1), (1, 1, -1, -1, 1),
                    (1, 1, 1, -1, -1), (4, -4, 0, 0, 0)],
        columns=[(1, 1), (2, 1), (4, 2), (4, 2), (4, 2)],
    ),
    "2D6": GoldenCase(
        "2D6", "binary dihedral", "binary-dihedral/2D6", 1, _all(c=(1, (2,)), integral=(0, (2,))),
        multiplicities=[
            [1, 1, 1, 1, 1, 1],
            [1, 2, 1, 2, 2, 2],
            [1, 1, 2, 1, 3, 3],
            [1, 2, 1, 4, 2, 4],
            [1, 2, 3, 2, 6, 6],
            [1, 2, 3, 4, 6, 12],
        ],
        h_tilde=[
            [1, 1, 1, 1, 1, 1],
            [0, 1, 0, 1, 1, 1],
            [0, 0, 1, 0, 2, 2],
            [0, 0, 0, 2, 0, 2],
            [0, 0, 0, 0, 0, 4],
        ],
        image_rows=[(1, 1, 1, 1, 1, 1), (1, 1, 1, -1, -1, 1), (2, 2, -1, 0, 0, -1),
                    (2, -2, 2, 0, 0, -2), (4, -4, -2, 0, 0, 2)],
        columns=[(1, 1), (2, 1), (3, 2), (4, 3), (4, 3), (6, 2)],
    ),
    "2D8": GoldenCase(
        "2D8", "binary dihedral", "binary-dihedral/2D8", 3,
        _all(c=(1, (2,)), r=(1, ()), integral=(0, (2,))),
        multiplicities=[
            [1, 1, 1, 1, 1, 1, 1, 1, 1],
            [1, 2, 1, 1, 1, 2, 1, 2, 2],
            [1, 1, 2, 1, 2, 2, 1, 2, 2],
            [1, 1, 1, 2, 1, 2, 2, 2, 2],
            [1, 1, 2, 1, 3, 2, 2, 4, 4],
            [1, 2, 2, 2, 2, 4, 2, 4, 4],
            [1, 1, 1, 2, 2, 2, 3, 4, 4],
            [1, 2, 2, 2, 4, 4, 4, 8, 8],
            [1, 2, 2, 2, 4, 4, 4, 8, 16],
        ],
        h_tilde=[
            [1, 1, 1, 1, 1, 1, 1, 1, 1],
            [0, 1, 0, 0, 0, 1, 0, 1, 1],
            [0, 0, 1, 0, 1, 1, 0, 1, 1],
            [0, 0, 0, 1, 0, 1, 1, 1, 1],
            [0, 0, 0, 0, 1, 0, 1, 2, 2],
            [0, 0, 0, 0, 0, 0, 0, 0, 8],
        ],
        image_rows=[(1, 1, 1, 1, 1, 1, 1), (1, 1, 1, -1, 1, -1, -1), (1, 1, 1, -1, -1, 1, 1),
                    (1, 1, 1, 1, -1, -1, -1), (2, 2, -2, 0, 0, 0, 0), (8, -8, 0, 0, 0, 0, 0)],
        columns=[(1, 1), (2, 1), (4, 2), (4, 4), (4, 4), (8, 2), (8, 2)],
    ),
    "2D10": GoldenCase(
        "2D10", "binary dihedral", "binary-dihedral/2D10", 1,
        _all(c=(3, (2,)), r=(2, ()), integral=(0, (2,))),
        multiplicities=[
            [1, 1, 1, 1, 1, 1],
            [1, 2, 2, 1, 2, 2],
            [1, 2, 4, 1, 2, 4],
            [1, 1, 1, 3, 5, 5],
            [1, 2, 2, 5, 10, 10],
            [1, 2, 4, 5, 10, 20],
        ],
        h_tilde=[
            [1, 1, 1, 1, 1, 1],
            [0, 1, 1, 0, 1, 1],
            [0, 0, 2, 0, 0, 2],
            [0, 0, 0, 2, 4, 4],
            [0, 0, 0, 0, 0, 8],
        ],
        image_rows=[(1, 1, 1, 1, 1, 1, 1, 1), (1, 1, -1, -1, 1, 1, 1, 1),
                    (2, -2, 0, 0, 2, 2, -2, -2), (4, 4, 0, 0, -1, -1, -1, -1),
                    (8, -8, 0, 0, -2, -2, 2, 2)],
        columns=[(1, 1), (2, 1), (4, 5), (4, 5), (5, 2), (5, 2), (10, 2), (10, 2)],
        notes=("the worked display lists rho3 and rho4 separately over R; the computed free rank is 2",),
    ),
    "2D12": GoldenCase(
        "2D12", "binary dihedral", "binary-dihedral/2D12", 4,
        _all(c=(1, (2, 2)), r=(1, ()), integral=(0, (2, 2))),
        multiplicities=[
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2],
            [1, 1, 2, 1, 1, 2, 2, 1, 1, 2, 2, 2],
            [1, 1, 1, 2, 1, 2, 1, 1, 2, 2, 2, 2],
            [1, 1, 1, 1, 2, 1, 2, 3, 2, 1, 3, 3],
            [1, 2, 2, 2, 1, 4, 2, 2, 2, 4, 4, 4],
            [1, 1, 2, 1, 2, 2, 4, 3, 3, 2, 6, 6],
            [1, 2, 1, 1, 3, 2, 3, 6, 3, 2, 6, 6],
            [1, 1, 1, 2, 2, 2, 3, 3, 4, 2, 6, 6],
            [1, 2, 2, 2, 1, 4, 2, 2, 2, 8, 4, 8],
            [1, 2, 2, 2, 3, 4, 6, 6, 6, 4, 12, 12],
            [1, 2, 2, 2, 3, 4, 6, 6, 6, 8, 12, 24],
        ],
        h_tilde=[
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1],
            [0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1],
            [0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 1],
            [0, 0, 0, 0, 1, 0, 1, 2, 1, 0, 2, 2],
            [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 2],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 4],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8],
        ],
        image_rows=[(1, 1, 1, 1, 1, 1, 1, 1, 1), (1, 1, 1, -1, -1, 1, 1, 1, 1),
                    (1, 1, 1, -1, 1, -1, 1, -1, -1), (1, 1, 1, 1, -1, -1, 1, -1, -1),
                    (2, 2, -1, 0, 0, 2, -1, -1, -1), (2, 2, -1, 0, 0, -2, -1, 1, 1),
                    (4, -4, 4, 0, 0, 0, -4, 0, 0), (8, -8, -4, 0, 0, 0, 4, 0, 0)],
        columns=[(1, 1), (2, 1), (3, 2), (4, 6), (4, 6), (4, 2), (6, 2), (12, 2), (12, 2)],
        notes=("rho8+rho9 is missing from the worked INT display, which adds a Z/2",
               "the summary matrix swaps the C and R entries"),
    ),
    "2D14": GoldenCase("2D14", "binary dihedral", "binary-dihedral/2D14", 1,
                       {RATIONAL: ZERO, INTEGRAL_REAL: ZERO}),
    "2D16": GoldenCase("2D16", "binary dihedral", "binary-dihedral/2D16", 5,
                       {RATIONAL: ZERO, INTEGRAL_REAL: ZERO}),
    "2T": GoldenCase(
        "2T", "binary exceptional", "binary-exceptional/2T", 2, _all(c=(2, (2,)), integral=(0, (2,))),
        multiplicities=[
            [1, 1, 1, 1, 1, 1, 1],
            [1, 3, 1, 3, 1, 3, 3],
            [1, 1, 2, 2, 2, 4, 4],
            [1, 3, 2, 4, 2, 6, 6],
            [1, 1, 2, 2, 4, 4, 8],
            [1, 3, 4, 6, 4, 12, 12],
            [1, 3, 4, 6, 8, 12, 24],
        ],
        h_tilde=[
            [1, 1, 1, 1, 1, 1, 1],
            [0, 2, 0, 2, 0, 2, 2],
            [0, 0, 1, 1, 1, 3, 3],
            [0, 0, 0, 0, 2, 0, 4],
            [0, 0, 0, 0, 0, 0, 4],
        ],
        image_rows=[(1, 1, 1, 1, 1, 1, 1), (2, 2, -1, -1, 2, -1, -1), (3, 3, 0, 0, -1, 0, 0),
                    (4, -4, 1, 1, 0, -1, -1), (4, -4, -2, -2, 0, 2, 2)],
        columns=[(1, 1), (2, 1), (3, 4), (3, 4), (4, 6), (6, 4), (6, 4)],
    ),
    "2O": GoldenCase(
        "2O", "binary exceptional", "binary-exceptional/2O", 6,
        _all(c=(1, (2, 2)), r=(1, ()), integral=(0, (2, 2))),
        multiplicities=[
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2, 2],
            [1, 1, 2, 1, 2, 3, 2, 1, 2, 3, 1, 3, 3],
            [1, 1, 1, 2, 2, 1, 1, 2, 3, 2, 2, 4, 4],
            [1, 1, 2, 2, 3, 3, 2, 2, 4, 4, 2, 6, 6],
            [1, 2, 3, 1, 3, 6, 3, 2, 3, 6, 2, 6, 6],
            [1, 1, 2, 1, 2, 3, 3, 2, 3, 4, 2, 6, 6],
            [1, 2, 1, 2, 2, 2, 2, 4, 4, 4, 4, 8, 8],
            [1, 1, 2, 3, 4, 3, 3, 4, 7, 6, 4, 12, 12],
            [1, 2, 3, 2, 4, 6, 4, 4, 6, 8, 4, 12, 12],
            [1, 2, 1, 2, 2, 2, 2, 4, 4, 4, 8, 8, 16],
            [1, 2, 3, 4, 6, 6, 6, 8, 12, 12, 8, 24, 24],
            [1, 2, 3, 4, 6, 6, 6, 8, 12, 12, 16, 24, 48],
        ],
        h_tilde=[
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1],
            [0, 0, 1, 0, 1, 2, 1, 0, 1, 2, 0, 2, 2],
            [0, 0, 0, 1, 1, 0, 0, 1, 2, 1, 1, 3, 3],
            [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 3, 3],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 8],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8],
        ],
        image_rows=[(1, 1, 1, 1, 1, 1, 1, 1), (1, 1, 1, 1, -1, 1, -1, -1),
                    (2, 2, -1, 2, 0, -1, 0, 0), (3, 3, 0, -1, 1, 0, -1, -1),
                    (3, 3, 0, -1, -1, 0, 1, 1), (8, -8, 2, 0, 0, -2, 0, 0),
                    (8, -8, -4, 0, 0, 4, 0, 0)],
        columns=[(1, 1), (2, 1), (3, 8), (4, 6), (4, 12), (6, 8), (8, 6), (8, 6)],
        notes=("rho6+rho7 is missing from the worked INT display, which adds a Z/2",),
    ),
    "2I": GoldenCase(
        "2I", "binary exceptional", "binary-exceptional/2I", 5,
        _all(c=(2, (2, 2, 2)), r=(2, ()), integral=(0, (2, 2, 2))),
        multiplicities=[
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [1, 2, 1, 2, 1, 2, 3, 1, 3, 3, 5, 5],
            [1, 1, 2, 2, 2, 3, 2, 2, 4, 2, 6, 6],
            [1, 2, 2, 3, 2, 4, 4, 2, 6, 4, 10, 10],
            [1, 1, 2, 2, 4, 3, 4, 4, 6, 4, 12, 12],
            [1, 2, 3, 4, 3, 6, 5, 3, 9, 5, 15, 15],
            [1, 3, 2, 4, 4, 5, 8, 4, 10, 8, 20, 20],
            [1, 1, 2, 2, 4, 3, 4, 8, 6, 8, 12, 24],
            [1, 3, 4, 6, 6, 9, 10, 6, 16, 10, 30, 30],
            [1, 3, 2, 4, 4, 5, 8, 8, 10, 16, 20, 40],
            [1, 5, 6, 10, 12, 15, 20, 12, 30, 20, 60, 60],
            [1, 5, 6, 10, 12, 15, 20, 24, 30, 40, 60, 120],
        ],
        h_tilde=[
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [0, 1, 0, 1, 0, 1, 2, 0, 2, 2, 4, 4],
            [0, 0, 1, 1, 1, 2, 1, 1, 3, 1, 5, 5],
            [0, 0, 0, 0, 2, 0, 2, 2, 2, 2, 6, 6],
            [0, 0, 0, 0, 0, 0, 0, 4, 0, 4, 0, 12],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 8],
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8],
        ],
        image_rows=[(1, 1, 1, 1, 1, 1, 1, 1, 1), (4, 4, 1, 0, -1, -1, 1, -1, -1),
                    (5, 5, -1, 1, 0, 0, -1, 0, 0), (6, 6, 0, -2, 1, 1, 0, 1, 1),
                    (12, -12, 0, 0, 2, 2, 0, -2, -2), (8, -8, 2, 0, -2, -2, -2, 2, 2),
                    (8, -8, -4, 0, -2, -2, 4, 2, 2)],
        columns=[(1, 1), (2, 1), (3, 20), (4, 30), (5, 12), (5, 12), (6, 20), (10, 12), (10, 12)],
        slow=True,
    ),
    "GL2F3": GoldenCase(
        "GL2F3", "general linear", "general-linear/GL2F3", 9, _all(c=(1, ())),
        image_rows=[(1, 1, 1, 1, 1, 1, 1, 1), (1, 1, -1, 1, 1, 1, -1, -1),
                    (2, 2, 0, -1, 2, -1, 0, 0), (3, 3, 1, 0, -1, 0, -1, -1),
                    (3, 3, -1, 0, -1, 0, 1, 1), (4, -4, 0, 1, 0, -1, 0, 0),
                    (4, -4, 0, -2, 0, 2, 0, 0)],
        columns=[(1, 1), (2, 1), (2, 12), (3, 8), (4, 6), (6, 8), (8, 6), (8, 6)],
        notes=("the worked multiplicity table gives 5 for the order-6 classes against the centre; "
               "the centre is normal so that entry is 24|H n Z|/|H|, i.e. 4 or 8, and M and H are "
               "not compared",),
    ),
}

# p-groups whose rational cokernel vanishes, and symmetric groups surjective over q, r, c
SEGAL_GROUPS = ("C2", "C4", "C8", "C9", "2D4", "2D8", "2D16")
SYMMETRIC_GROUPS = ("S2", "S3", "S4", "S5")


def matchings(expected_keys: Sequence[Hashable], actual_keys: Sequence[Hashable]) -> Iterator[List[int]]:
    """
    Bijections p from expected positions to actual positions with
    actual_keys[p[i]] == expected_keys[i]. Nothing is yielded when the key
    multisets differ.
    """
    if len(expected_keys) != len(actual_keys):
        return
    wanted: Dict[Hashable, List[int]] = {}
    available: Dict[Hashable, List[int]] = {}
    for i, key in enumerate(expected_keys):
        wanted.setdefault(key, []).append(i)
    for i, key in enumerate(actual_keys):
        available.setdefault(key, []).append(i)
    if {k: len(v) for k, v in wanted.items()} != {k: len(v) for k, v in available.items()}:
        return
    keys = list(wanted)
    for choice in product(*(permutations(available[k]) for k in keys)):
        perm = [0] * len(expected_keys)
        for key, image in zip(keys, choice):
            for src, dst in zip(wanted[key], image):
                perm[src] = dst
        yield perm


def find_relabeling(expected: Sequence[Sequence[int]], actual: Sequence[Sequence[int]],
                    expected_keys: Sequence[Hashable], actual_keys: Sequence[Hashable]) -> Optional[List[int]]:
    """A matching p with expected[i][j] == actual[p[i]][p[j]] for all i, j."""
    n = len(expected)
    if len(actual) != n:
        return None
    for perm in matchings(expected_keys, actual_keys):
        if all(expected[i][j] == actual[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return perm
    return None


def same_up_to_relabeling(expected, actual, expected_keys, actual_keys) -> bool:
    return find_relabeling(expected, actual, expected_keys, actual_keys) is not None


def rows_match(expected: Sequence[Sequence[int]], actual: Sequence[Sequence[int]],
               expected_keys: Sequence[Hashable], actual_keys: Sequence[Hashable]) -> bool:
    """Rows agree as multisets once each expected column is sent to an actual column with the same key."""
    want = sorted(tuple(r) for r in expected)
    for perm in matchings(expected_keys, actual_keys):
        got = sorted(tuple(row[perm[c]] for c in range(len(perm))) for row in actual)
        if got == want:
            return True
    return False


def cases(quick: bool = False) -> List[GoldenCase]:
    return [c for c in CASES.values() if not (quick and c.slow)]
