# Group-spec documents: a domain header followed by generator lines.
#
#   domain: permutation <n> | gf <p> <dim> | cyclotomic <e> <dim>
#   1 2 0                      # permutation image list
#   [[1,1],[0,1]] [[0,1],[4,0]]  # gf matrices, row-major, several per line
#   0,1 0 0 0,-1               # cyclotomic entries a0,a1,.../den
#
# '#' starts a comment. Line and column numbers in errors are 1-based.

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from sympy import isprime

from src.components.cyclotomic import Cyclotomic
from src.components.group_core import CyclotomicMatrixDomain, PermutationDomain, PrimeFieldMatrixDomain
from src.exception import GroupSpecParseError
from src.logger import logging

logger = logging.getLogger(__name__)

_INT_TOKEN = re.compile(r"-?\d+|[^\s\[\],]")
_CYCLO_TOKEN = re.compile(r"[^\s\[\]]+")
_CYCLO_ENTRY = re.compile(r"^(-?\d+(?:,-?\d+)*)(?:/(\d+))?$")


@dataclass
class GroupSpec:
    domain: object
    generators: List[object]
    source: str = "<string>"


def _header(text: str, line_no: int):
    body = text.split(":", 1)
    if len(body) != 2 or body[0].strip().lower() != "domain":
        raise GroupSpecParseError("expected a 'domain: ...' header", line_no, 1)
    offset = text.index(":") + 1
    words = body[1].split()
    if not words:
        raise GroupSpecParseError("missing domain kind", line_no, offset + 1)
    kind, params = words[0].lower(), words[1:]
    expected = {"permutation": 1, "gf": 2, "cyclotomic": 2}
    if kind not in expected:
        raise GroupSpecParseError(f"unknown domain kind {words[0]!r}", line_no, text.index(words[0]) + 1)
    if len(params) != expected[kind] or not all(w.isdigit() for w in params):
        raise GroupSpecParseError(
            f"domain {kind} takes {expected[kind]} positive integer parameter(s)", line_no, offset + 1
        )
    values = [int(w) for w in params]
    if any(v <= 0 for v in values):
        raise GroupSpecParseError("domain parameters must be positive", line_no, offset + 1)
    if kind == "permutation":
        return PermutationDomain(values[0])
    if kind == "gf":
        if not isprime(values[0]):
            raise GroupSpecParseError(f"{values[0]} is not prime", line_no, offset + 1)
        return PrimeFieldMatrixDomain(values[0], values[1])
    return CyclotomicMatrixDomain(values[0], values[1])


def _integers(text: str, line_no: int) -> List[Tuple[int, int]]:
    out = []
    for match in _INT_TOKEN.finditer(text):
        token = match.group(0)
        if not re.fullmatch(r"-?\d+", token):
            raise GroupSpecParseError(f"unexpected character {token!r}", line_no, match.start() + 1)
        out.append((int(token), match.start() + 1))
    return out


def _cyclotomics(text: str, line_no: int, e: int) -> List[Tuple[Cyclotomic, int]]:
    out = []
    for match in _CYCLO_TOKEN.finditer(text):
        token = match.group(0)
        parsed = _CYCLO_ENTRY.match(token)
        if not parsed:
            raise GroupSpecParseError(f"malformed cyclotomic entry {token!r}", line_no, match.start() + 1)
        coeffs = [int(a) for a in parsed.group(1).split(",")]
        den = int(parsed.group(2) or 1)
        if den == 0:
            raise GroupSpecParseError("zero denominator", line_no, match.start() + 1)
        value = Cyclotomic.from_exponents(e, [Fraction(a, den) for a in coeffs])
        out.append((value, match.start() + 1))
    return out


def parse_group_spec(document: str, source: str = "<string>") -> GroupSpec:
    domain = None
    generators: List[object] = []
    for line_no, raw in enumerate(document.splitlines(), start=1):
        text = raw.split("#", 1)[0]
        if not text.strip():
            continue
        if domain is None:
            domain = _header(text, line_no)
            continue
        if text.strip().lower().startswith("domain"):
            raise GroupSpecParseError("duplicate domain header", line_no, text.index("d") + 1)

        if isinstance(domain, CyclotomicMatrixDomain):
            entries = _cyclotomics(text, line_no, domain.e)
            chunk = domain.dim * domain.dim
        else:
            entries = _integers(text, line_no)
            chunk = domain.degree if isinstance(domain, PermutationDomain) else domain.dim * domain.dim
        if len(entries) % chunk:
            raise GroupSpecParseError(
                f"{len(entries)} entries do not split into generators of {chunk} entries for {domain.describe()}",
                line_no, entries[-1][1] if entries else 1,
            )
        for start in range(0, len(entries), chunk):
            block = [value for value, _ in entries[start:start + chunk]]
            column = entries[start][1]
            if isinstance(domain, PermutationDomain):
                if sorted(block) != list(range(domain.degree)):
                    raise GroupSpecParseError(
                        f"not a permutation of 0..{domain.degree - 1}", line_no, column
                    )
                generators.append(tuple(block))
            else:
                rows = [block[r * domain.dim:(r + 1) * domain.dim] for r in range(domain.dim)]
                generators.append(domain.normalize(rows))

    if domain is None:
        raise GroupSpecParseError("empty document: missing 'domain:' header", 1, 1)
    if not generators:
        raise GroupSpecParseError("no generators given", max(1, len(document.splitlines())), 1)
    logger.info("parsed %d generators over %s from %s", len(generators), domain.describe(), source)
    return GroupSpec(domain=domain, generators=generators, source=source)


def load_group_spec(path: str) -> GroupSpec:
    with open(path, encoding="utf-8") as file_obj:
        return parse_group_spec(file_obj.read(), source=os.path.basename(path))
