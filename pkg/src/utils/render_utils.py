"""
Utility functions for rendering results as canonical JSON or as plain-text tables.
"""

import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence

from monomial_core import MonomialIdeal
from utils.parsing_utils import render_ideal

RULE = "-" * 80


def rational_json(x: Fraction) -> Dict[str, str]:
    """A rational as {"num": ..., "den": ...} with decimal strings."""
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rationals_json(values: Iterable[Fraction]) -> List[Dict[str, str]]:
    return [rational_json(x) for x in sorted(values)]


def ideal_json(ideal: MonomialIdeal) -> Dict[str, Any]:
    return {"n": ideal.ambient_dim, "gens": [list(g) for g in ideal.generators]}


def ideal_from_json(data: Dict[str, Any]) -> MonomialIdeal:
    return MonomialIdeal(data["n"], data["gens"])


def dumps(document: Dict[str, Any]) -> str:
    """Canonical JSON: sorted keys, fixed separators, one line."""
    return json.dumps(document, sort_keys=True, separators=(", ", ": "))


def render_table(title: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    A plain-text table framed by rules.

    Args:
        title: Heading printed above the table
        header: Column names
        rows: Cell values, converted with str

    Returns:
        The table as a single string
    """
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = [f"\n{title}:", RULE, "  ".join(h.ljust(w) for h, w in zip(header, widths)), RULE]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    lines.append(RULE)
    return "\n".join(lines)


def ideal_text(data: Dict[str, Any]) -> str:
    """Textual form of an ideal given in JSON form."""
    return render_ideal(ideal_from_json(data))
