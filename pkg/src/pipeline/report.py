# Text, JSON and LaTeX renderings of a BetaReport and of the smaller
# marks / character-table / summary documents. Output is byte-stable for a
# fixed input: no timestamps, sorted JSON keys, fixed column order.

import json
import sys
from typing import Dict, List, Sequence

import pandas as pd

from src.components.burnside import product_table
from src.components.catalog import PAPER_GROUPS, dynkin_label, parse_catalog_name
from src.components.characters import CharacterLattice
from src.components.cyclotomic import Cyclotomic, _format_fraction
from src.components.int_matrix import LatticeQuotient
from src.components.subgroup_lattice import MarksTable, paper_labels
from src.exception import UsageError
from src.logger import logging
from src.pipeline.beta_pipeline import BetaReport

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FORMATS = ("text", "json", "latex")
RULE = "=" * 70
THIN_RULE = "-" * 70


def _check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}", sys, stage="report")
    return fmt


# -- value encoding -----------------------------------------------------------

def cyclotomic_json(value: Cyclotomic):
    if value.is_integer():
        return int(value)
    reduced = value.reduced()
    return {
        "order": reduced.order,
        "coeffs": [_format_fraction(c) for c in reduced.coeffs],
        "text": reduced.pretty(),
    }


def generators_json(quotient: LatticeQuotient, names: Sequence[str]) -> List[dict]:
    out = []
    for order, vector in quotient.generators:
        terms = [[names[k], int(c)] for k, c in enumerate(vector) if c]
        out.append({"order": int(order), "terms": terms})
    return out


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


# -- shared tables ------------------------------------------------------------

def _presentation_labels(report: BetaReport) -> List[str]:
    labels = paper_labels(len(report.marks))
    return [labels[i] for i in report.basis.presentation]


def subgroups_frame(report: BetaReport) -> pd.DataFrame:
    labels = paper_labels(len(report.marks))
    rows = []
    for i in report.basis.presentation:
        cls = report.marks.ordering[i]
        rows.append({
            "label": labels[i],
            "order": cls.order,
            "cosets": cls.index,
            "conjugates": cls.conjugate_count,
            "cyclic": "yes" if cls.is_cyclic else "no",
        })
    return pd.DataFrame(rows, columns=["label", "order", "cosets", "conjugates", "cyclic"])


def marks_frame(marks: MarksTable) -> pd.DataFrame:
    labels = paper_labels(len(marks))
    return pd.DataFrame(marks.marks.to_lists(), index=labels, columns=labels)


def _square_frame(rows, labels) -> pd.DataFrame:
    return pd.DataFrame(rows, index=labels, columns=labels)


def multiplicities_presented(report: BetaReport) -> List[List[int]]:
    M = report.structure.multiplicities.to_lists()
    order = report.basis.presentation
    return [[M[a][b] for b in order] for a in order]


def lattice_frame(lattice: CharacterLattice, class_labels: Sequence[str]) -> pd.DataFrame:
    rows = [[v.pretty() for v in chi.values] for chi in lattice.basis]
    return pd.DataFrame(rows, index=list(lattice.names), columns=list(class_labels))


def image_frame(report: BetaReport) -> pd.DataFrame:
    rows = [list(chi.as_ints()) for chi in report.image_characters]
    index = [f"V{i + 1}" for i in range(len(rows))]
    return pd.DataFrame(rows, index=index, columns=list(report.classes.labels))


def _frame_text(frame: pd.DataFrame, index: bool = True) -> str:
    return frame.to_string(index=index)


# -- full report ----------------------------------------------------------------

def report_to_dict(report: BetaReport) -> dict:
    classes = report.classes
    labels = paper_labels(len(report.marks))
    tables = {}
    for tag, lattice in report.lattices.items():
        tables[tag] = {
            "names": list(lattice.names),
            "coords_in_complex": lattice.coords_in_complex.to_lists(),
            "values": [[cyclotomic_json(v) for v in chi.values] for chi in lattice.basis],
        }
    cokernels = {}
    for tag, quotient in report.cokernels.items():
        cokernels[tag] = {
            "free_rank": quotient.free_rank,
            "invariant_factors": list(quotient.invariant_factors),
            "generators": generators_json(quotient, report.lattices[tag].names),
            "presentation": report.presentations[tag],
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "group": {
            "name": report.group_name,
            "order": report.group.order,
            "classes": [
                {"label": classes.labels[c], "size": classes.sizes[c], "order": classes.element_orders[c]}
                for c in range(len(classes))
            ],
        },
        "subgroups": [
            {
                "label": labels[i],
                "order": report.marks.ordering[i].order,
                "cosets": report.marks.ordering[i].index,
                "conjugates": report.marks.ordering[i].conjugate_count,
                "cyclic": report.marks.ordering[i].is_cyclic,
            }
            for i in report.basis.presentation
        ],
        "marks": report.marks.marks.to_lists(),
        "products": product_table(report.structure),
        "multiplicities": multiplicities_presented(report),
        "h_tilde": report.basis.h_tilde.to_lists(),
        "u_tilde": report.basis.u_tilde.to_lists(),
        "norms": list(report.basis.norms),
        "image_characters": [list(chi.as_ints()) for chi in report.image_characters],
        "tables": tables,
        "coordinates": {tag: [list(r) for r in rows] for tag, rows in report.coordinates.items()},
        "cokernels": cokernels,
        "kernel_rank": report.kernel_rank,
        "surjective": report.surjective,
        "effective": report.effective,
    }


def _cokernel_lines(report: BetaReport) -> List[str]:
    lines = []
    for tag, quotient in report.cokernels.items():
        names = report.lattices[tag].names
        gens = []
        for order, vector in quotient.generators:
            text = "+".join(f"{c}*{names[k]}" if c != 1 else names[k] for k, c in enumerate(vector) if c)
            gens.append(f"{text} (order {order if order else 'inf'})")
        lines.append(f"{tag:6} | {quotient.describe():24} | {report.presentations[tag]}")
        if gens:
            lines.append(f"{'':6} | generators: {', '.join(gens)}")
    return lines


def to_text(report: BetaReport) -> str:
    classes = report.classes
    pres_labels = _presentation_labels(report)
    out = [
        RULE,
        f"LINEARIZATION OF THE BURNSIDE RING: {report.group_name} (order {report.group.order})",
        RULE,
        "",
        "ELEMENT CLASSES",
        THIN_RULE,
        _frame_text(pd.DataFrame(
            {"label": classes.labels, "size": classes.sizes, "order": classes.element_orders}
        ), index=False),
        "",
        "SUBGROUPS",
        THIN_RULE,
        _frame_text(subgroups_frame(report), index=False),
        "",
        "TABLE OF MARKS (trivial subgroup first)",
        THIN_RULE,
        _frame_text(marks_frame(report.marks)),
        "",
        "BURNSIDE RING PRODUCT",
        THIN_RULE,
        _frame_text(_square_frame(product_table(report.structure), pres_labels)),
        "",
        "TABLE OF MULTIPLICITIES",
        THIN_RULE,
        _frame_text(_square_frame(multiplicities_presented(report), pres_labels)),
        "",
        "UPPER TRIANGULAR FORM",
        THIN_RULE,
        _frame_text(pd.DataFrame(report.basis.h_tilde.to_lists(),
                                 index=[f"V{i + 1}" for i in range(len(report.basis))],
                                 columns=pres_labels)),
        "",
        "IMAGE CHARACTERS",
        THIN_RULE,
        _frame_text(image_frame(report)),
    ]
    for tag, lattice in report.lattices.items():
        out += ["", f"IRREDUCIBLE BASIS [{tag}]", THIN_RULE, _frame_text(lattice_frame(lattice, classes.labels))]
        coords = pd.DataFrame(report.coordinates[tag], index=[f"V{i + 1}" for i in range(len(report.basis))],
                              columns=list(lattice.names))
        coords["effective"] = ["yes" if ok else "no" for ok in report.effective_rows[tag]]
        out += ["", f"IMAGE COORDINATES [{tag}]", THIN_RULE, _frame_text(coords)]
    out += ["", "COKERNELS", THIN_RULE, *_cokernel_lines(report), "",
            f"KERNEL RANK: {report.kernel_rank}", RULE, ""]
    return "\n".join(out)


def _latex_matrix(title: str, rows, row_labels, col_labels) -> List[str]:
    spec = "l|" + "r" * len(col_labels)
    lines = [f"\\subsection*{{{title}}}", f"\\begin{{tabular}}{{{spec}}}",
             " & " + " & ".join(col_labels) + " \\\\", "\\hline"]
    for label, row in zip(row_labels, rows):
        lines.append(f"{label} & " + " & ".join(str(x) for x in row) + " \\\\")
    lines.append("\\end{tabular}")
    return lines


def _latex_name(name: str) -> str:
    out = ""
    i = 0
    while i < len(name):
        if name.startswith("rho", i):
            j = i + 3
            while j < len(name) and name[j].isdigit():
                j += 1
            out += f"\\rho_{{{name[i + 3:j]}}}"
            i = j
        else:
            out += name[i]
            i += 1
    return f"${out}$"


def _latex_presentation(text: str) -> str:
    if text == "0":
        return "$0$"
    body = text.replace("Z[", "\\mathbb{Z}[")
    return _latex_name(body)


def to_latex(report: BetaReport) -> str:
    classes = report.classes
    pres_labels = _presentation_labels(report)
    lines = [
        "\\documentclass{article}",
        "\\usepackage{amsmath,amssymb}",
        "\\begin{document}",
        f"\\section*{{{report.group_name}, order {report.group.order}}}",
    ]
    sub = subgroups_frame(report)
    lines += _latex_matrix("Subgroups", sub[["order", "cosets", "conjugates", "cyclic"]].values.tolist(),
                           list(sub["label"]), ["order", "cosets", "conjugates", "cyclic"])
    labels = paper_labels(len(report.marks))
    lines += _latex_matrix("Table of marks", report.marks.marks.to_lists(), labels, labels)
    lines += _latex_matrix("Table of multiplicities", multiplicities_presented(report), pres_labels, pres_labels)
    v_labels = [f"$V_{{{i + 1}}}$" for i in range(len(report.basis))]
    lines += _latex_matrix("Upper triangular form", report.basis.h_tilde.to_lists(), v_labels, pres_labels)
    lines += _latex_matrix("Image characters", [chi.as_ints() for chi in report.image_characters],
                           v_labels, list(classes.labels))
    for tag, lattice in report.lattices.items():
        rows = [[f"${v.latex()}$" for v in chi.values] for chi in lattice.basis]
        lines += _latex_matrix(f"Irreducible basis ({tag})", rows,
                               [_latex_name(n) for n in lattice.names], list(classes.labels))
    lines += ["\\subsection*{Cokernels}", "\\begin{tabular}{l|l|l}"]
    for tag, quotient in report.cokernels.items():
        described = quotient.describe().replace("Z", "\\mathbb{Z}")
        lines.append(f"{tag} & ${described}$ & {_latex_presentation(report.presentations[tag])} \\\\")
    lines += ["\\end{tabular}", "", f"Kernel rank: {report.kernel_rank}.", "\\end{document}", ""]
    return "\n".join(lines)


def render(report: BetaReport, fmt: str = "text") -> str:
    fmt = _check_format(fmt)
    if fmt == "json":
        return dumps(report_to_dict(report))
    if fmt == "latex":
        return to_latex(report)
    return to_text(report)


# -- smaller documents --------------------------------------------------------

def render_marks(name: str, marks: MarksTable, fmt: str = "text") -> str:
    fmt = _check_format(fmt)
    labels = paper_labels(len(marks))
    if fmt == "json":
        return dumps({
            "schema_version": SCHEMA_VERSION,
            "group": name,
            "labels": labels,
            "orders": [c.order for c in marks.ordering],
            "marks": marks.marks.to_lists(),
        })
    if fmt == "latex":
        return "\n".join(_latex_matrix(f"Table of marks of {name}", marks.marks.to_lists(), labels, labels)) + "\n"
    return "\n".join([RULE, f"TABLE OF MARKS: {name}", RULE, _frame_text(marks_frame(marks)), ""])


def render_lattice(name: str, lattice: CharacterLattice, class_labels: Sequence[str], fmt: str = "text") -> str:
    fmt = _check_format(fmt)
    if fmt == "json":
        return dumps({
            "schema_version": SCHEMA_VERSION,
            "group": name,
            "field": lattice.tag,
            "classes": list(class_labels),
            "names": list(lattice.names),
            "values": [[cyclotomic_json(v) for v in chi.values] for chi in lattice.basis],
        })
    if fmt == "latex":
        rows = [[f"${v.latex()}$" for v in chi.values] for chi in lattice.basis]
        return "\n".join(_latex_matrix(f"Character table of {name} ({lattice.tag})", rows,
                                       [_latex_name(n) for n in lattice.names], list(class_labels))) + "\n"
    return "\n".join([RULE, f"CHARACTER TABLE [{lattice.tag}]: {name}", RULE,
                      _frame_text(lattice_frame(lattice, class_labels)), ""])


def render_summary(rows: List[Dict[str, str]], fmt: str = "text") -> str:
    fmt = _check_format(fmt)
    if fmt == "json":
        return dumps({"schema_version": SCHEMA_VERSION, "rows": rows})
    frame = pd.DataFrame(rows)
    if fmt == "latex":
        cols = list(frame.columns)
        return "\n".join(_latex_matrix("Cokernels", frame[cols[1:]].values.tolist(),
                                       list(frame[cols[0]]), cols[1:])) + "\n"
    return "\n".join([RULE, "COKERNEL SUMMARY", RULE, _frame_text(frame, index=False), ""])


def render_group_list(fmt: str = "text") -> str:
    fmt = _check_format(fmt)
    rows = []
    for name in PAPER_GROUPS:
        label = dynkin_label(parse_catalog_name(name))
        rows.append({"group": name, "dynkin": label or "-"})
    families = "C<n>, 2D<2n> (n >= 2), S<n> (n <= 8), 2T, 2O, 2I, GL2F3"
    if fmt == "json":
        return dumps({"schema_version": SCHEMA_VERSION, "worked_examples": rows, "families": families})
    frame = pd.DataFrame(rows)
    if fmt == "latex":
        return "\n".join(_latex_matrix("Catalog", frame[["dynkin"]].values.tolist(),
                                       list(frame["group"]), ["dynkin"])) + "\n"
    return "\n".join([RULE, "CATALOG GROUPS", RULE, f"families: {families}", "",
                      _frame_text(frame, index=False), ""])
