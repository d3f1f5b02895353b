"""JSON presentation files and report serialisation."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import FieldMatrix
from .errors import PresentationParseError, TokenError
from .fox import AdmissiblePresentation, Word, validate
from .invariants import InvariantReport

_KEYS = {"name", "genus", "z_count", "relations"}


def parse_presentation(text: str, default_name: str | None = None) -> AdmissiblePresentation:
    """Decode ``{"name", "genus", "z_count", "relations"}`` and validate it."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationParseError(f"malformed JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict):
        raise PresentationParseError("top level must be a JSON object")
    unknown = set(doc) - _KEYS
    if unknown:
        raise PresentationParseError(f"unknown keys: {sorted(unknown)}")
    for key in ("genus", "z_count", "relations"):
        if key not in doc:
            raise PresentationParseError(f"missing key {key!r}")
    genus, z_count, relations = doc["genus"], doc["z_count"], doc["relations"]
    if not isinstance(genus, int) or isinstance(genus, bool):
        raise PresentationParseError("'genus' must be an integer")
    if not isinstance(z_count, int) or isinstance(z_count, bool):
        raise PresentationParseError("'z_count' must be an integer")
    if not isinstance(relations, list) or not all(isinstance(r, list) for r in relations):
        raise PresentationParseError("'relations' must be a list of token lists")
    name = doc.get("name", default_name)
    if name is not None and not isinstance(name, str):
        raise PresentationParseError("'name' must be a string")
    words = []
    for j, rel in enumerate(relations, 1):
        for tok in rel:
            if not isinstance(tok, str):
                raise TokenError(f"relation {j}: token {tok!r} is not a string")
        try:
            words.append(Word.from_tokens(rel))
        except TokenError as exc:
            raise TokenError(f"relation {j}: {exc}") from exc
    return validate(AdmissiblePresentation(genus, z_count, tuple(words), name))


def load_presentation(path: str | Path) -> AdmissiblePresentation:
    path = Path(path)
    return parse_presentation(path.read_text(encoding="utf-8"), default_name=path.stem)


def presentation_to_dict(p: AdmissiblePresentation) -> dict[str, Any]:
    return {
        "name": p.name,
        "genus": p.genus,
        "z_count": p.internal_count,
        "relations": [rel.tokens() for rel in p.relations],
    }


def serialize_presentation(p: AdmissiblePresentation) -> str:
    """One relation per line, so files diff cleanly."""
    head = json.dumps({k: v for k, v in presentation_to_dict(p).items() if k != "relations"})[:-1]
    rels = ",\n  ".join(json.dumps(r) for r in presentation_to_dict(p)["relations"])
    return f'{head}, "relations": [\n  {rels}\n]}}\n'


def magnus_to_json(m: FieldMatrix) -> list[list[dict[str, str]]]:
    return [[{"num": e.num.to_text(), "den": e.den.to_text()} for e in row] for row in m.to_rows()]


def report_to_dict(r: InvariantReport) -> dict[str, Any]:
    return {
        "name": r.name,
        "genus": r.genus,
        "z_count": r.internal_count,
        "homology_classes": r.homology.by_token(),
        "monodromy": r.monodromy.rows(),
        "torsion_det": {
            "unit": r.torsion.unit.to_text(),
            "normal": r.torsion.normal.to_text(),
            "raw": r.torsion_raw.to_text(),
        },
        "magnus": magnus_to_json(r.magnus),
        "alexander": list(r.alexander.coefficients),
        "verdict": verdict_to_dict(r.fiberedness),
        "warnings": list(r.warnings),
    }


def verdict_to_dict(v) -> dict[str, Any]:
    return {
        "torsion_trivial": v.torsion_trivial,
        "magnus_integral": v.magnus_integral,
        "verdict": v.verdict.value,
        "reasons": list(v.reasons),
    }


def format_report(r: InvariantReport) -> str:
    """Human-readable rendering of a report."""
    lines = [f"{r.name or 'presentation'}: genus {r.genus}, {r.internal_count} internal generators", ""]
    lines.append("Homology classes of generators:")
    for token, vec in r.homology.by_token().items():
        mono = "*".join(f"g{i + 1}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(vec) if e) or "1"
        lines.append(f"  {token:>4} = {mono}")
    lines.append("")
    lines.append("Homological monodromy:")
    width = max((len(str(x)) for row in r.monodromy.sigma for x in row), default=1)
    for row in r.monodromy.sigma:
        lines.append("  [ " + " ".join(str(x).rjust(width) for x in row) + " ]")
    lines.append("")
    lines.append(f"det(torsion) = {r.torsion_raw.pretty()}")
    lines.append(f"             = ({r.torsion.unit.pretty()}) * ({r.torsion.normal.pretty()})")
    lines.append("")
    lines.append("Magnus matrix:")
    for row in r.magnus.to_rows():
        for j, e in enumerate(row):
            lines.append(("  [ " if j == 0 else "    ") + e.pretty() + (" ]" if j == len(row) - 1 else ","))
    lines.append("")
    lines.append(f"Alexander polynomial = {r.alexander}")
    lines.append("")
    lines.append(format_verdict(r.fiberedness))
    for w in r.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def format_verdict(v) -> str:
    lines = [f"Verdict: {v.verdict.value}",
             f"  torsion trivial: {v.torsion_trivial}",
             f"  Magnus matrix integral: {v.magnus_integral}"]
    lines += [f"  - {reason}" for reason in v.reasons]
    return "\n".join(lines)
