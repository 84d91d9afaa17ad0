# Character tables over C (Dixon-Schneider), Frobenius-Schur indicators,
# the derived real and rational bases, integer-valued sublattices and
# permutation characters.

import sys
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import GF, nextprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from src.components.cyclotomic import Cyclotomic, euler_phi
from src.components.group_core import ConjClasses, FiniteGroup, power_map
from src.components.int_matrix import IntMatrix, integer_kernel
from src.components.subgroup_lattice import SubgroupClass, fixed_points
from src.exception import (
    CharacterLiftError,
    InvariantViolation,
    PrimeSearchExhausted,
    SchurIndexMismatch,
)
from src.logger import logging

logger = logging.getLogger(__name__)

COMPLEX, REAL, RATIONAL, INTEGRAL, INTEGRAL_REAL = "c", "r", "q", "int", "int-r"


@dataclass(frozen=True)
class ClassFunction:
    values: Tuple[Cyclotomic, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, c):
        return self.values[c]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, k: int) -> "ClassFunction":
        return ClassFunction(tuple(v * k for v in self.values))

    def permute(self, targets: Sequence[int]) -> "ClassFunction":
        return ClassFunction(tuple(self.values[t] for t in targets))

    @property
    def degree(self) -> int:
        return int(self.values[0])

    def is_integer_valued(self) -> bool:
        return all(v.is_integer() for v in self.values)

    def as_ints(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.values)

    def lifted(self, order: int) -> "ClassFunction":
        return ClassFunction(tuple(v.lift(order) for v in self.values))

    @classmethod
    def from_ints(cls, values: Sequence[int]) -> "ClassFunction":
        return cls(tuple(Cyclotomic.rational(v) for v in values))


@dataclass(frozen=True)
class IrreducibleTable:
    group: FiniteGroup
    classes: ConjClasses
    exponent: int
    prime: int
    chars: Tuple[ClassFunction, ...]
    fs_indicators: Tuple[int, ...]

    def __len__(self):
        return len(self.chars)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(chi.degree for chi in self.chars)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(f"rho{i + 1}" for i in range(len(self.chars)))

    def index_of(self, chi: ClassFunction) -> int:
        for i, row in enumerate(self.chars):
            if row == chi:
                return i
        raise InvariantViolation("class function is not an irreducible character", sys)


@dataclass(frozen=True)
class CharacterLattice:
    tag: str
    basis: Tuple[ClassFunction, ...]
    names: Tuple[str, ...]
    coords_in_complex: IntMatrix

    def __len__(self):
        return len(self.basis)


def inner_product(classes: ConjClasses, chi: ClassFunction, psi: ClassFunction) -> int:
    """(1/|G|) sum over classes of size * chi(c) * psi(c^-1); must be an integer."""
    order = sum(classes.sizes)
    total = Cyclotomic.rational(0)
    for c, size in enumerate(classes.sizes):
        a, b = chi.values[c], psi.values[classes.inverse_class[c]]
        if a and b:
            total = total + a * b * size
    value = total / order
    if not value.is_integer():
        raise InvariantViolation(f"inner product {value.pretty()} is not an integer", sys)
    return int(value)


def class_coefficients(G: FiniteGroup, classes: ConjClasses) -> np.ndarray:
    """a[r, s, t] = #{x in C_r : x^-1 z_t in C_s} for the representative z_t of C_t."""
    k = len(classes)
    T = G.cayley
    coeffs = np.zeros((k, k, k), dtype=np.int64)
    for r in range(k):
        inv_r = G.inverse[classes.members[r]]
        for t, z in enumerate(classes.representatives):
            coeffs[r, :, t] = np.bincount(classes.class_of[T[inv_r, z]], minlength=k)
    return coeffs


def dixon_prime(order: int, exponent: int, after: int = 0) -> int:
    """Smallest prime p = 1 mod exponent with p > 2 sqrt(order) (and p > after)."""
    p = max(2 * isqrt(order), after)
    while True:
        p = int(nextprime(p))
        if (p - 1) % exponent == 0:
            return p


def _fp(rows, p) -> DomainMatrix:
    field = GF(p)
    return DomainMatrix([[field(int(x) % p) for x in row] for row in rows], (len(rows), len(rows[0])), field)


def _to_ints(dm: DomainMatrix, p: int) -> List[List[int]]:
    return [[int(x) % p for x in row] for row in dm.to_list()]


def _roots_mod_p(coeffs: Sequence[int], p: int) -> List[int]:
    roots = []
    for lam in range(p):
        acc = 0
        for c in coeffs:
            acc = (acc * lam + c) % p
        if acc == 0:
            roots.append(lam)
    return roots


def _split_spaces(coeffs: np.ndarray, p: int) -> List[List[int]]:
    """Common right eigenvectors of the class matrices A_r[s, t] = a[r, s, t] over F_p."""
    k = coeffs.shape[0]
    spaces = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for r in range(1, k):
        if all(len(S) == 1 for S in spaces):
            break
        a_t = coeffs[r].T.tolist()
        refined = []
        for S in spaces:
            if len(S) == 1:
                refined.append(S)
                continue
            basis, pivots = _fp(S, p).rref()
            basis_rows = _to_ints(basis, p)
            image = _to_ints(_fp(basis_rows, p) * _fp(a_t, p), p)
            restricted = [[row[c] for c in pivots] for row in image]
            d = len(restricted)
            charpoly = [int(x) % p for x in _fp(restricted, p).charpoly()]
            found = 0
            for lam in _roots_mod_p(charpoly, p):
                shifted = [[(restricted[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]
                transposed = [list(col) for col in zip(*shifted)]
                null = _to_ints(_fp(transposed, p).nullspace(), p)
                if not null:
                    continue
                sub = _fp(null, p) * _fp(basis_rows, p)
                sub_rref, _ = sub.rref()
                rows = [row for row in _to_ints(sub_rref, p) if any(row)]
                found += len(rows)
                refined.append(rows)
            if found != d:
                logger.debug("class matrix %d does not diagonalize mod %d", r, p)
                return []
        spaces = refined
    return [S[0] for S in spaces if len(S) == 1] if all(len(S) == 1 for S in spaces) else []


def _power_table(G: FiniteGroup, classes: ConjClasses) -> List[List[int]]:
    """pm[t][k]: class of g_t^k for 0 <= k < order(g_t)."""
    T = G.cayley
    table = []
    for t, g in enumerate(classes.representatives):
        row, current = [], G.identity_index
        for _ in range(classes.element_orders[t]):
            row.append(int(classes.class_of[current]))
            current = int(T[current, g])
        table.append(row)
    return table


def _characters_mod_p(G, classes, coeffs, p) -> Optional[List[Tuple[int, List[int]]]]:
    vectors = _split_spaces(coeffs, p)
    if len(vectors) != len(classes):
        return None
    order = G.order
    out = []
    for v in vectors:
        if v[0] % p == 0:
            raise CharacterLiftError("eigenvector vanishes on the identity class", sys)
        scale = pow(v[0], -1, p)
        omega = [x * scale % p for x in v]
        inv_sizes = [pow(s, -1, p) for s in classes.sizes]
        dot = sum(omega[t] * omega[classes.inverse_class[t]] * inv_sizes[t] for t in range(len(v))) % p
        degree_sq = order * pow(dot, -1, p) % p
        root = sqrt_mod(degree_sq, p)
        if root is None:
            raise CharacterLiftError(f"degree square {degree_sq} has no root mod {p}", sys)
        degree = min(int(root), p - int(root))
        if degree == 0 or order % degree or degree * degree > order:
            raise CharacterLiftError(f"implausible degree {degree} mod {p}", sys)
        values = [degree * omega[t] * inv_sizes[t] % p for t in range(len(v))]
        out.append((degree, values))
    return out


def _lift(values_mod_p, degree, pm, element_orders, exponent, p, zeta_hat) -> ClassFunction:
    lifted = []
    for t, o in enumerate(element_orders):
        root = pow(zeta_hat, exponent // o, p)
        powers = [pow(root, m, p) for m in range(o)]
        inv_o = pow(o, -1, p)
        terms = {}
        total = 0
        for j in range(o):
            acc = 0
            for k in range(o):
                acc += values_mod_p[pm[t][k]] * powers[(-j * k) % o]
            multiplicity = acc * inv_o % p
            total += multiplicity
            if multiplicity:
                terms[j * (exponent // o)] = multiplicity
        if total != degree:
            raise CharacterLiftError(f"eigenvalue multiplicities sum to {total}, not {degree}", sys)
        lifted.append(Cyclotomic.from_exponents(exponent, terms))
    return ClassFunction(tuple(lifted))


def complex_irreducibles(G: FiniteGroup, classes: ConjClasses, max_primes: int = 5) -> IrreducibleTable:
    """Dixon-Schneider over F_p, lifted to exact cyclotomic values."""
    exponent = G.exponent()
    coeffs = class_coefficients(G, classes)
    pm = _power_table(G, classes)
    p = 0
    for _ in range(max_primes):
        p = dixon_prime(G.order, exponent, after=p)
        rows = _characters_mod_p(G, classes, coeffs, p)
        if rows is not None:
            break
        logger.warning("%s: class matrices do not split mod %d, trying the next prime", G.name, p)
    else:
        raise PrimeSearchExhausted(f"no splitting prime among {max_primes} candidates", sys, stage="characters")

    zeta_hat = pow(int(primitive_root(p)), (p - 1) // exponent, p)
    chars = [_lift(values, degree, pm, classes.element_orders, exponent, p, zeta_hat) for degree, values in rows]

    trivial = tuple(Cyclotomic.rational(1).lift(exponent) for _ in classes.sizes)

    def sort_key(chi: ClassFunction):
        return (chi.degree, chi.values != trivial, tuple(v.sort_key(exponent) for v in chi.values))

    chars.sort(key=sort_key)
    if sum(chi.degree ** 2 for chi in chars) != G.order:
        raise CharacterLiftError("squared degrees do not sum to the group order", sys)
    for i, chi in enumerate(chars):
        for j in range(i, len(chars)):
            if inner_product(classes, chi, chars[j]) != (1 if i == j else 0):
                raise CharacterLiftError(f"rows {i + 1} and {j + 1} are not orthonormal", sys)

    squares = power_map(G, classes, 2)
    indicators = tuple(fs_indicator(classes, chi, squares) for chi in chars)
    logger.info("%s: %d irreducible characters via p = %d", G.name, len(chars), p)
    return IrreducibleTable(group=G, classes=classes, exponent=exponent, prime=p,
                            chars=tuple(chars), fs_indicators=indicators)


def fs_indicator(classes: ConjClasses, chi: ClassFunction, squares: Sequence[int]) -> int:
    """(1/|G|) sum_g chi(g^2), with squares the power map for k = 2."""
    total = Cyclotomic.rational(0)
    for c, size in enumerate(classes.sizes):
        total = total + chi.values[squares[c]] * size
    value = (total / sum(classes.sizes))
    if not value.is_rational() or value.to_fraction() not in (-1, 0, 1):
        raise InvariantViolation(f"Frobenius-Schur indicator {value.pretty()} outside {{-1, 0, 1}}", sys)
    return int(value.to_fraction())


def _term(coeff: int, name: str) -> str:
    compound = "+" in name or "-" in name[1:] or name[0].isdigit()
    if compound and coeff != 1:
        name = f"({name})"
    if coeff == 1:
        return name
    if coeff == -1:
        return f"-{name}"
    return f"{coeff}{name}"


def compose_name(coords: Sequence[int], names: Sequence[str]) -> str:
    text = ""
    for c, name in zip(coords, names):
        if not c:
            continue
        term = _term(c, name)
        text += term if not text or term.startswith("-") else f"+{term}"
    return text or "0"


def _lattice(tag, table: IrreducibleTable, coords: List[List[int]]) -> CharacterLattice:
    n = len(table)
    basis = []
    for row in coords:
        acc = None
        for i, c in enumerate(row):
            if c:
                term = table.chars[i].scale(c)
                acc = term if acc is None else acc + term
        basis.append(acc)
    names = tuple(compose_name(row, table.names) for row in coords)
    return CharacterLattice(tag=tag, basis=tuple(basis), names=names,
                            coords_in_complex=IntMatrix.from_rows(coords, n))


def complex_lattice(table: IrreducibleTable) -> CharacterLattice:
    return _lattice(COMPLEX, table, IntMatrix.identity(len(table)).to_lists())


def _conjugate_index(table: IrreducibleTable, i: int) -> int:
    return table.index_of(table.chars[i].permute(table.classes.inverse_class))


def real_irreducible_basis(table: IrreducibleTable) -> CharacterLattice:
    n = len(table)
    coords = []
    done = set()
    for i in range(n):
        if i in done:
            continue
        row = [0] * n
        fs = table.fs_indicators[i]
        if fs == 1:
            row[i] = 1
        elif fs == -1:
            row[i] = 2
        else:
            j = _conjugate_index(table, i)
            if j == i:
                raise InvariantViolation(f"rho{i + 1} has indicator 0 but is self-conjugate", sys)
            row[i] = row[j] = 1
            done.add(j)
        done.add(i)
        coords.append(row)
    return _lattice(REAL, table, coords)


def rational_irreducible_basis(table: IrreducibleTable, cyclic_classes: Optional[int] = None) -> CharacterLattice:
    """One vector per Galois orbit; quaternionic orbits are doubled."""
    G, classes = table.group, table.classes
    n = len(table)
    units = [a for a in range(1, table.exponent + 1) if gcd(a, table.exponent) == 1]
    galois_maps = [power_map(G, classes, a) for a in units]
    coords = []
    done = set()
    for i in range(n):
        if i in done:
            continue
        orbit = sorted({table.index_of(table.chars[i].permute(m)) for m in galois_maps})
        scale = 2 if table.fs_indicators[i] == -1 else 1
        row = [0] * n
        for j in orbit:
            row[j] = scale
            done.add(j)
        coords.append(row)
    if cyclic_classes is not None and len(coords) != cyclic_classes:
        raise SchurIndexMismatch(
            f"{len(coords)} rational irreducibles but {cyclic_classes} cyclic subgroup classes",
            sys, stage="characters",
        )
    return _lattice(RATIONAL, table, coords)


def integer_valued_sublattice(lattice: CharacterLattice, table: IrreducibleTable, tag: str = INTEGRAL) -> CharacterLattice:
    """Integer combinations of the lattice basis whose values are rational integers."""
    e = table.exponent
    width = euler_phi(e)
    constraints = []
    for c in range(len(table.classes)):
        lifted = [b.values[c].lift(e).coeffs for b in lattice.basis]
        for k in range(1, width):
            row = []
            for coeffs in lifted:
                if coeffs[k].denominator != 1:
                    raise InvariantViolation("character value is not an algebraic integer", sys)
                row.append(int(coeffs[k]))
            if any(row):
                constraints.append(row)
    kernel = integer_kernel(IntMatrix.from_rows(constraints, len(lattice.basis)))
    coords = (kernel @ lattice.coords_in_complex).to_lists()
    return _lattice(tag, table, coords)


def permutation_character(G: FiniteGroup, classes: ConjClasses, subgroup: SubgroupClass) -> ClassFunction:
    return ClassFunction.from_ints(fixed_points(G, classes, subgroup.representative))


def decompose_complex(table: IrreducibleTable, chi: ClassFunction) -> Tuple[int, ...]:
    return tuple(inner_product(table.classes, chi, rho) for rho in table.chars)


def lattices_for(table: IrreducibleTable, tags: Sequence[str], cyclic_classes: Optional[int] = None) -> Dict[str, CharacterLattice]:
    out: Dict[str, CharacterLattice] = {}
    complex_basis = complex_lattice(table)
    real_basis = None
    for tag in tags:
        if tag == COMPLEX:
            out[tag] = complex_basis
        elif tag == REAL:
            out[tag] = real_basis = real_basis or real_irreducible_basis(table)
        elif tag == RATIONAL:
            out[tag] = rational_irreducible_basis(table, cyclic_classes)
        elif tag == INTEGRAL:
            out[tag] = integer_valued_sublattice(complex_basis, table, INTEGRAL)
        elif tag == INTEGRAL_REAL:
            real_basis = real_basis or real_irreducible_basis(table)
            out[tag] = integer_valued_sublattice(real_basis, table, INTEGRAL_REAL)
        else:
            raise ValueError(f"unknown field tag {tag!r}")
    return out


def square_roots_of_identity(G: FiniteGroup) -> int:
    return int(np.count_nonzero(G.power(2) == G.identity_index))
