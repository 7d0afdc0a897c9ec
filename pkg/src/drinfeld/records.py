"""Flat record schema and jsonl/csv persistence.

Every scan row uses one fixed field order; fields that do not apply to a
record kind are null/empty.  Polynomials are ascending coefficient-code
lists; infinite valuations are the string "inf"; flags are short tokens.
Serialization round-trips exactly in both formats.
"""
from __future__ import annotations

import csv
import io
import json

FIELD_ORDER = (
    "q", "p", "e", "phi", "a", "P", "g", "r", "annihilator", "valuation",
    "wieferich", "super", "thakur", "chain_break", "mersenne",
    "mersenne_prime", "flags", "config_hash", "seed", "version",
)

_INT_FIELDS = {"q", "p", "e", "seed"}
_OPT_INT_FIELDS = {"valuation", "chain_break"}
_BOOL_FIELDS = {"wieferich", "super", "thakur", "mersenne_prime"}
_LIST_FIELDS = {"a", "P", "g", "r", "annihilator", "mersenne"}
_NESTED_LIST_FIELDS = {"phi"}


def base_record(field, phi, a, config_hash: str, seed: int, version: str) -> dict:
    rec = {k: None for k in FIELD_ORDER}
    rec["q"] = field.q
    rec["p"] = field.p
    rec["e"] = field.e
    rec["phi"] = [list(c.coeffs) for c in phi.coeffs]
    rec["a"] = list(a.coeffs) if a is not None else None
    rec["flags"] = []
    rec["config_hash"] = config_hash
    rec["seed"] = seed
    rec["version"] = version
    return rec


def record_from_status(status, base: dict) -> dict:
    rec = dict(base)
    rec["P"] = list(status.P.coeffs)
    rec["g"] = list(status.g.coeffs)
    rec["r"] = list(status.r.coeffs)
    rec["annihilator"] = list(status.annihilator.coeffs)
    rec["valuation"] = "inf" if status.valuation is None else status.valuation
    rec["wieferich"] = status.is_wieferich
    rec["super"] = status.is_super
    rec["thakur"] = status.thakur
    rec["chain_break"] = "inf" if status.chain_break is None else status.chain_break
    rec["flags"] = status.flags()
    return rec


def record_from_mersenne(mrec, base: dict) -> dict:
    rec = dict(base)
    rec["P"] = list(mrec.P.coeffs)
    rec["a"] = list(mrec.a.coeffs)
    rec["mersenne"] = None if mrec.value is None else list(mrec.value.coeffs)
    rec["mersenne_prime"] = mrec.is_prime
    rec["wieferich"] = mrec.wieferich_of_value
    rec["flags"] = [f"base_class={mrec.base_class}"] + list(mrec.flags)
    return rec


def record_from_fitting(fd, base: dict) -> dict:
    rec = dict(base)
    rec["P"] = list(fd.P.coeffs)
    rec["g"] = list(fd.g.coeffs)
    rec["r"] = list(fd.r.coeffs)
    return rec


def record_from_annihilator(ann, power: int, base: dict) -> dict:
    rec = dict(base)
    rec["P"] = list(ann.modulus.coeffs)
    rec["annihilator"] = list(ann.generator.coeffs)
    rec["flags"] = [f"modulus_power={power}"]
    return rec


def _csv_cell(key, value):
    if value is None:
        return ""
    if key == "flags":
        return ";".join(value)
    if key in _BOOL_FIELDS:
        return "true" if value else "false"
    if isinstance(value, list):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _csv_uncell(key, text):
    if text == "":
        return None
    if key == "flags":
        return text.split(";") if text else []
    if key in _BOOL_FIELDS:
        return text == "true"
    if key in _INT_FIELDS:
        return int(text)
    if key in _OPT_INT_FIELDS:
        return text if text == "inf" else int(text)
    if key in _LIST_FIELDS or key in _NESTED_LIST_FIELDS:
        return json.loads(text)
    return text


def dumps_records(records, fmt: str) -> str:
    """Serialize records ('jsonl' or 'csv') to text."""
    if fmt == "jsonl":
        lines = []
        for rec in records:
            ordered = {k: rec.get(k) for k in FIELD_ORDER}
            lines.append(json.dumps(ordered, separators=(",", ":")))
        return "".join(line + "\n" for line in lines)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELD_ORDER)
        for rec in records:
            writer.writerow([_csv_cell(k, rec.get(k)) for k in FIELD_ORDER])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r} (expected jsonl or csv)")


def write_records(path: str, records, fmt: str) -> None:
    text = dumps_records(records, fmt)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write records to {path}: {exc}") from exc


def loads_records(text: str, fmt: str):
    if fmt == "jsonl":
        out = []
        for line in text.splitlines():
            if line.strip():
                out.append(json.loads(line))
        return out
    if fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        rows = list(reader)
        if not rows:
            return []
        header = rows[0]
        out = []
        for row in rows[1:]:
            rec = {}
            for key, cell in zip(header, row):
                rec[key] = _csv_uncell(key, cell)
            # flags is a list even when empty
            if rec.get("flags") is None:
                rec["flags"] = []
            out.append(rec)
        return out
    raise ValueError(f"unknown format {fmt!r} (expected jsonl or csv)")


def read_records(path: str, fmt: str):
    with open(path, encoding="utf-8", newline="") as fh:
        return loads_records(fh.read(), fmt)
