"""Batch input records and the JSON reports built from them."""

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterator, List, Optional, Tuple

from .braid import BraidWord, make_braid, parse_braid, seifert_matrix_from_braid
from .errors import KnotCertError, RecordError
from .exactalg import IntMatrix
from .invariants import SeifertMatrix, alexander, certify_definite, signature, validate


@dataclass(frozen=True)
class KnotRecord:
    name: str
    seifert_matrix: Optional[IntMatrix] = None
    braid: Optional[BraidWord] = None
    minimal_genus_asserted: bool = False
    periods: Tuple[int, ...] = ()

    def surface(self) -> SeifertMatrix:
        if self.braid is not None:
            return seifert_matrix_from_braid(self.braid)
        return validate(self.seifert_matrix, self.name)

    def echo(self) -> dict:
        if self.braid is not None:
            src = {"braid": list(self.braid.letters), "strands": self.braid.strands}
        else:
            src = {"seifert_matrix": self.seifert_matrix.tolist()}
        src["minimal_genus_asserted"] = self.minimal_genus_asserted
        return src


def _int_rows(rows) -> IntMatrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise RecordError("seifert_matrix must be a list of integer rows")
    if any(isinstance(x, bool) or not isinstance(x, int) for r in rows for x in r):
        raise RecordError("seifert_matrix entries must be integers")
    return IntMatrix(rows)


def record_from_dict(obj, default_name: str = "") -> KnotRecord:
    """Build and validate a record from its JSON object form."""
    if not isinstance(obj, dict):
        raise RecordError("record must be a JSON object")
    name = str(obj.get("name", default_name))
    has_m, has_b = "seifert_matrix" in obj, "braid" in obj
    if has_m == has_b:
        raise RecordError(f"record {name!r}: give exactly one of seifert_matrix or braid")
    flag = obj.get("minimal_genus_asserted", False)
    if not isinstance(flag, bool):
        raise RecordError(f"record {name!r}: minimal_genus_asserted must be a boolean")
    periods = obj.get("periods", ())
    if not isinstance(periods, (list, tuple)) or not all(
            isinstance(p, int) and not isinstance(p, bool) for p in periods):
        raise RecordError(f"record {name!r}: periods must be a list of integers")
    try:
        if has_b:
            braid = obj["braid"]
            if isinstance(braid, str):
                b = parse_braid(braid)
                if "strands" in obj:
                    b = make_braid(b.letters, int(obj["strands"]))
            elif isinstance(braid, list) and all(
                    isinstance(x, int) and not isinstance(x, bool) for x in braid):
                b = make_braid(braid, obj.get("strands"))
            else:
                raise RecordError(f"record {name!r}: braid must be a list of integers")
            rec = KnotRecord(name, braid=b, minimal_genus_asserted=flag, periods=tuple(periods))
        else:
            m = _int_rows(obj["seifert_matrix"])
            validate(m, name)
            rec = KnotRecord(name, seifert_matrix=m, minimal_genus_asserted=flag,
                             periods=tuple(periods))
    except RecordError:
        raise
    except (KnotCertError, TypeError, ValueError) as exc:
        raise RecordError(f"record {name!r}: {type(exc).__name__}: {exc}") from exc
    return rec


def parse_matrix_cell(text: str) -> list:
    """``"-1 1; 0 -1"`` (or with commas inside rows) -> [[-1, 1], [0, -1]]."""
    text = text.strip()
    if not text:
        return []
    rows = []
    for chunk in text.split(";"):
        parts = chunk.replace(",", " ").split()
        try:
            rows.append([int(x) for x in parts])
        except ValueError:
            raise RecordError(f"bad matrix cell {text!r}") from None
    return rows


def _truthy(text: str) -> bool:
    return text.strip().lower() in ("1", "true", "yes", "y")


def iter_raw_records(text: str, fmt: str = "json") -> Iterator[Tuple[str, object]]:
    """Yield (label, payload) per record; payload is a dict or an exception."""
    if fmt == "csv":
        reader = csv.DictReader(io.StringIO(text))
        for k, row in enumerate(reader, start=1):
            label = row.get("name") or f"row {k}"
            try:
                obj = {"name": label, "seifert_matrix": parse_matrix_cell(row.get("seifert_matrix") or "")}
                if row.get("minimal_genus_asserted"):
                    obj["minimal_genus_asserted"] = _truthy(row["minimal_genus_asserted"])
                yield label, obj
            except RecordError as exc:
                yield label, exc
        return
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            items = json.loads(stripped)
        except json.JSONDecodeError as exc:
            yield "input", RecordError(f"invalid JSON: {exc}")
            return
        for k, obj in enumerate(items, start=1):
            label = obj.get("name", f"record {k}") if isinstance(obj, dict) else f"record {k}"
            yield str(label), obj
        return
    for k, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            yield f"line {k}", RecordError(f"line {k}: invalid JSON: {exc}")
            continue
        label = obj.get("name", f"line {k}") if isinstance(obj, dict) else f"line {k}"
        yield str(label), obj


def load_records(text: str, fmt: str = "json") -> List[Tuple[str, object]]:
    """Parse all records; failures are kept in place as RecordError values."""
    out = []
    for label, obj in iter_raw_records(text, fmt):
        if isinstance(obj, Exception):
            out.append((label, obj))
            continue
        try:
            out.append((label, record_from_dict(obj, default_name=label)))
        except RecordError as exc:
            out.append((label, exc))
    return out


def knot_report(rec: KnotRecord) -> dict:
    s = rec.surface()
    delta = alexander(s)
    cert = certify_definite(s, rec.minimal_genus_asserted)
    return {
        "name": rec.name,
        "input": rec.echo(),
        "seifert_matrix": s.v.tolist(),
        "sigma": signature(s),
        "alexander": delta.to_pairs(),
        "width": delta.width,
        "surface_genus": s.dim // 2,
        "certificate": cert.to_dict(),
    }


def certificate_report(rec: KnotRecord) -> dict:
    return {"name": rec.name,
            "certificate": certify_definite(rec.surface(), rec.minimal_genus_asserted).to_dict()}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def bundled_text(filename: str) -> str:
    return resources.files("knotcert").joinpath("data", filename).read_text(encoding="utf-8")
