"""JSON encodings of fields, arrangements, point sets and labelled configurations.

Scalars are always strings ("3/4"), or lists of strings over Q(zeta_n), so
that nothing passes through a float.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .arrangement import Arrangement
from .errors import InputFormatError
from .fields import FieldSpec, PrimeField, QQ, Cyclotomic, from_payload
from .slopes import PointConfig
from .ssconfig import SSConfig


def parse_field(text) -> FieldSpec:
    """Accepts "Q", "Fp:7", "F7", "cyclotomic:12", or the JSON object forms."""
    try:
        if isinstance(text, dict):
            if "Fp" in text:
                return PrimeField(int(text["Fp"]))
            if "cyclotomic" in text:
                return Cyclotomic(int(text["cyclotomic"]))
            raise InputFormatError(f"unknown field object {text!r}")
        s = str(text).strip()
        if s in ("Q", "QQ", "Rationals"):
            return QQ
        if s.startswith("Fp:"):
            return PrimeField(int(s[3:]))
        if s.startswith("F") and s[1:].isdigit():
            return PrimeField(int(s[1:]))
        if s.startswith("cyclotomic:"):
            return Cyclotomic(int(s.split(":", 1)[1]))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InputFormatError):
            raise
        raise InputFormatError(f"bad field {text!r}: {exc}") from None
    raise InputFormatError(f"unknown field {text!r}")


def field_to_json(spec: FieldSpec):
    if spec.kind == "Q":
        return "Q"
    if spec.kind == "Fp":
        return {"Fp": spec.modulus}
    return {"cyclotomic": spec.modulus}


def arrangement_to_json(A: Arrangement) -> dict:
    doc = {"field": field_to_json(A.spec), "lines": [l.to_text() for l in A.lines]}
    if A.name:
        doc["name"] = A.name
    return doc


def arrangement_from_json(doc: dict, spec: FieldSpec | None = None) -> Arrangement:
    if not isinstance(doc, dict) or "lines" not in doc:
        raise InputFormatError("an arrangement document needs a 'lines' list")
    spec = spec or parse_field(doc.get("field", "Q"))
    try:
        lines = [tuple(from_payload(spec, c) for c in row) for row in doc["lines"]]
        if any(len(row) != 3 for row in lines):
            raise InputFormatError("every line needs three coordinates")
        return Arrangement(lines, spec, name=doc.get("name", ""))
    except InputFormatError:
        raise
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"bad line coordinates: {exc}") from None


def points_from_json(doc: dict) -> PointConfig:
    if not isinstance(doc, dict) or "points" not in doc:
        raise InputFormatError("a point document needs a 'points' list")
    try:
        return PointConfig(tuple((Fraction(str(x)), Fraction(str(y))) for x, y in doc["points"]))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"bad points: {exc}") from None


def points_to_json(cfg: PointConfig) -> dict:
    return {"points": [[_q(x), _q(y)] for x, y in cfg.points]}


def _q(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ssconfig_to_json(cfg: SSConfig) -> dict:
    return {"m": cfg.m, "k": {f"{i},{j}": t for (i, j), t in cfg.k.items()}}


def ssconfig_from_json(doc: dict) -> SSConfig:
    try:
        k = {tuple(int(x) for x in key.split(",")): int(t) for key, t in doc["k"].items()}
        if any(len(p) != 2 for p in k):
            raise InputFormatError("pair keys look like \"1,2\"")
        return SSConfig(int(doc["m"]), k)
    except InputFormatError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputFormatError(f"bad configuration document: {exc}") from None


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from None


def dump_json(doc, path=None, canonical: bool = False) -> str:
    text = json.dumps(doc, indent=None if canonical else 2, sort_keys=canonical, separators=(",", ":") if canonical else None)
    if path:
        Path(path).write_text(text + "\n")
    return text
