# Finite groups materialized from generators: element domains, Cayley table,
# conjugacy classes and power maps.

import sys
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Hashable, List, Sequence, Tuple

import numpy as np

from src.components.cyclotomic import Cyclotomic
from src.exception import InvariantViolation, NonInvertibleGenerator, OrderCapExceeded
from src.logger import logging

logger = logging.getLogger(__name__)


class PermutationDomain:
    """Permutations of {0..n-1} as image tuples; (a*b)(x) = a(b(x))."""

    kind = "permutation"

    def __init__(self, degree: int):
        self.degree = degree

    def identity(self):
        return tuple(range(self.degree))

    def compose(self, a, b):
        return tuple(a[x] for x in b)

    def key(self, element) -> Hashable:
        return element

    def is_invertible(self, element) -> bool:
        return sorted(element) == list(range(self.degree))

    def describe(self) -> str:
        return f"permutation {self.degree}"

    def format(self, element) -> str:
        return " ".join(str(x) for x in element)


class PrimeFieldMatrixDomain:
    """Square matrices with entries in Z/p, stored as tuples of row tuples."""

    kind = "gf"

    def __init__(self, p: int, dim: int):
        self.p = p
        self.dim = dim

    def normalize(self, rows):
        return tuple(tuple(int(x) % self.p for x in row) for row in rows)

    def identity(self):
        return tuple(tuple(1 if i == j else 0 for j in range(self.dim)) for i in range(self.dim))

    def compose(self, a, b):
        cols = list(zip(*b))
        return tuple(tuple(sum(x * y for x, y in zip(row, col)) % self.p for col in cols) for row in a)

    def key(self, element) -> Hashable:
        return element

    def determinant(self, element) -> int:
        p = self.p
        m = [list(row) for row in element]
        det = 1
        for c in range(self.dim):
            pivot = next((r for r in range(c, self.dim) if m[r][c] % p), None)
            if pivot is None:
                return 0
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det = det * m[c][c] % p
            inv = pow(m[c][c], -1, p)
            for r in range(c + 1, self.dim):
                factor = m[r][c] * inv % p
                m[r] = [(x - factor * y) % p for x, y in zip(m[r], m[c])]
        return det % p

    def is_invertible(self, element) -> bool:
        return self.determinant(element) != 0

    def describe(self) -> str:
        return f"gf {self.p} {self.dim}"

    def format(self, element) -> str:
        return "[" + ", ".join("[" + ",".join(str(x) for x in row) + "]" for row in element) + "]"


class CyclotomicMatrixDomain:
    """Square matrices over Q(zeta_e); entries are kept at order e."""

    kind = "cyclotomic"

    def __init__(self, e: int, dim: int):
        self.e = e
        self.dim = dim

    def normalize(self, rows):
        return tuple(tuple(Cyclotomic.coerce(x).lift(self.e) for x in row) for row in rows)

    def identity(self):
        return self.normalize([[1 if i == j else 0 for j in range(self.dim)] for i in range(self.dim)])

    def compose(self, a, b):
        cols = list(zip(*b))
        out = []
        for row in a:
            out_row = []
            for col in cols:
                acc = Cyclotomic.rational(0)
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                out_row.append(acc.lift(self.e))
            out.append(tuple(out_row))
        return tuple(out)

    def key(self, element) -> Hashable:
        return tuple(entry.coeffs for row in element for entry in row)

    def determinant(self, element) -> Cyclotomic:
        rows = [list(row) for row in element]
        return _laplace(rows)

    def is_invertible(self, element) -> bool:
        return bool(self.determinant(element))

    def describe(self) -> str:
        return f"cyclotomic {self.e} {self.dim}"

    def format(self, element) -> str:
        return "[" + ", ".join("[" + ", ".join(x.pretty() for x in row) + "]" for row in element) + "]"


def _laplace(rows) -> Cyclotomic:
    n = len(rows)
    if n == 1:
        return Cyclotomic.coerce(rows[0][0])
    total = Cyclotomic.rational(0)
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _laplace(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


@dataclass
class FiniteGroup:
    """
    A fully materialized finite group. Element 0 is the identity; element
    indices follow breadth-first discovery from the identity.
    """

    domain: object
    elements: List[object]
    cayley: np.ndarray
    inverse: np.ndarray
    generators: Tuple[int, ...]
    identity_index: int = 0
    name: str = "custom"
    _orders: np.ndarray = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            T = self.cayley
            idx = np.arange(self.order)
            orders = np.zeros(self.order, dtype=np.int64)
            current = idx.copy()
            k = 1
            while (orders == 0).any():
                orders[(current == self.identity_index) & (orders == 0)] = k
                current = T[current, idx]
                k += 1
            self._orders = orders
        return self._orders

    def exponent(self) -> int:
        result = 1
        for o in set(int(x) for x in self.element_orders()):
            result = result * o // gcd(result, o)
        return result

    def power(self, k: int) -> np.ndarray:
        """Index array g -> g^k."""
        if k < 0:
            return self.power(-k)[self.inverse]
        T = self.cayley
        result = np.full(self.order, self.identity_index, dtype=np.int64)
        base = np.arange(self.order)
        while k:
            if k & 1:
                result = T[result, base]
            base = T[base, base]
            k >>= 1
        return result

    def conjugates_of(self, x: int) -> np.ndarray:
        """g^-1 x g for every g, indexed by g."""
        T = self.cayley
        return T[T[self.inverse, x], np.arange(self.order)]

    def centralizer_order(self, x: int) -> int:
        return int(np.count_nonzero(self.conjugates_of(x) == x))


def _check_group_axioms(T: np.ndarray, inverse: np.ndarray, assoc_samples: int) -> None:
    n = T.shape[0]
    idx = np.arange(n)
    if not (np.sort(T, axis=1) == idx).all() or not (np.sort(T, axis=0) == idx[:, None]).all():
        raise InvariantViolation("Cayley table is not a Latin square", sys)
    if not (T[0] == idx).all() or not (T[:, 0] == idx).all():
        raise InvariantViolation("identity law fails", sys)
    if not (T[idx, inverse] == 0).all() or not (T[inverse, idx] == 0).all():
        raise InvariantViolation("inverse law fails", sys)
    if n <= 64:
        if not (T[T] == T[:, T]).all():
            raise InvariantViolation("associativity fails", sys)
    else:
        rng = np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, assoc_samples))
        if not (T[T[a, b], c] == T[a, T[b, c]]).all():
            raise InvariantViolation("associativity fails on sampled triples", sys)


def close_generators(gens: Sequence[object], domain, order_cap: int = 1000,
                     assoc_samples: int = 2000, name: str = "custom") -> FiniteGroup:
    """Close generators under composition; elements in breadth-first order from the identity."""
    gens = list(gens)
    for position, g in enumerate(gens):
        if not domain.is_invertible(g):
            raise NonInvertibleGenerator(
                f"generator {position} is not invertible: {domain.format(g)}", sys, stage="build"
            )
    identity = domain.identity()
    elements = [identity]
    index: Dict[Hashable, int] = {domain.key(identity): 0}
    parent, via = [-1], [-1]
    right: List[List[int]] = []
    k = 0
    while k < len(elements):
        row = []
        for s, g in enumerate(gens):
            h = domain.compose(elements[k], g)
            key = domain.key(h)
            if key not in index:
                if len(elements) >= order_cap:
                    raise OrderCapExceeded(
                        f"closure exceeds the order cap {order_cap}", sys, stage="build"
                    )
                index[key] = len(elements)
                elements.append(h)
                parent.append(k)
                via.append(s)
            row.append(index[key])
        right.append(row)
        k += 1

    n = len(elements)
    right_table = np.array(right, dtype=np.int64).reshape(n, len(gens))
    T = np.empty((n, n), dtype=np.int64)
    T[:, 0] = np.arange(n)
    for b in range(1, n):
        T[:, b] = right_table[T[:, parent[b]], via[b]]
    inverse = np.argmax(T == 0, axis=1).astype(np.int64)
    _check_group_axioms(T, inverse, assoc_samples)

    gen_indices = tuple(index[domain.key(g)] for g in gens)
    logger.info("closed %d generators in %s: order %d", len(gens), domain.describe(), n)
    return FiniteGroup(domain=domain, elements=elements, cayley=T, inverse=inverse,
                       generators=gen_indices, name=name)


@dataclass(frozen=True)
class ConjClasses:
    class_of: np.ndarray
    representatives: Tuple[int, ...]
    sizes: Tuple[int, ...]
    labels: Tuple[str, ...]
    element_orders: Tuple[int, ...]
    members: Tuple[np.ndarray, ...]
    inverse_class: Tuple[int, ...]

    def __len__(self):
        return len(self.sizes)


def _letters(k: int) -> str:
    out = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        out = chr(ord("A") + r) + out
    return out


def conjugacy_classes(G: FiniteGroup) -> ConjClasses:
    """Orbits of conjugation, sorted by (element order, size, first element)."""
    n = G.order
    orders = G.element_orders()
    seen = np.zeros(n, dtype=bool)
    orbits = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = np.unique(G.conjugates_of(x))
        seen[orbit] = True
        orbits.append(orbit)
    orbits.sort(key=lambda o: (int(orders[o[0]]), len(o), int(o[0])))

    class_of = np.empty(n, dtype=np.int64)
    for c, orbit in enumerate(orbits):
        class_of[orbit] = c

    class_orders = [int(orders[o[0]]) for o in orbits]
    labels = []
    for c, o in enumerate(class_orders):
        same = [d for d, q in enumerate(class_orders) if q == o]
        labels.append(str(o) if len(same) == 1 else f"{o}{_letters(same.index(c))}")

    reps = tuple(int(o[0]) for o in orbits)
    inverse_class = tuple(int(class_of[G.inverse[r]]) for r in reps)
    sizes = tuple(len(o) for o in orbits)
    if sum(sizes) != n:
        raise InvariantViolation("class sizes do not sum to the group order", sys)
    logger.info("%s: %d conjugacy classes", G.name, len(orbits))
    return ConjClasses(
        class_of=class_of,
        representatives=reps,
        sizes=sizes,
        labels=tuple(labels),
        element_orders=tuple(class_orders),
        members=tuple(orbits),
        inverse_class=inverse_class,
    )


def power_map(G: FiniteGroup, classes: ConjClasses, k: int) -> Tuple[int, ...]:
    """Class of g^k for each class of g."""
    image = classes.class_of[G.power(k)]
    result = []
    for c, members in enumerate(classes.members):
        targets = np.unique(image[members])
        if len(targets) != 1:
            raise InvariantViolation(f"power map {k} not constant on class {classes.labels[c]}", sys)
        result.append(int(targets[0]))
    return tuple(result)
