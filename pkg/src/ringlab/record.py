"""JSON records for ring profiles: schema, conversion and text rendering.

The text renderers read only from a record, so a profile re-read from the
JSONL cache prints exactly as it did when it was computed.
"""

from __future__ import annotations

import json

import jsonschema

from .classes import CLASS_NAMES

YES, NO = "✓", "✗"

RECORD_SCHEMA = {
    "type": "object",
    "required": ["expr", "order", "classes", "witnesses", "timings_ms"],
    "additionalProperties": False,
    "properties": {
        "expr": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "classes": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "witnesses": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["element", "detail"],
                "additionalProperties": False,
                "properties": {
                    "element": {"type": "string"},
                    "detail": {"type": "string"},
                },
            },
        },
        "timings_ms": {"type": "object", "additionalProperties": {"type": "integer"}},
    },
}


def make_record(expr, profile, timings_ms=None):
    rec = {
        "expr": expr,
        "order": int(profile.order),
        "classes": {name: bool(profile.verdicts[name]) for name in CLASS_NAMES},
        "witnesses": {name: {"element": w.label, "detail": w.detail}
                      for name, w in profile.witnesses.items()},
        "timings_ms": dict(timings_ms or {}),
    }
    validate_record(rec)
    return rec


def validate_record(rec):
    jsonschema.validate(rec, RECORD_SCHEMA)
    return rec


def dumps(rec):
    return json.dumps(rec, sort_keys=True, ensure_ascii=False)


def mark(flag):
    return YES if flag else NO


def render_record(rec, *, timings=False):
    """Multi-line text view: one line per class, witnesses for false verdicts."""
    lines = [f"ring {rec['expr']}  order {rec['order']}"]
    width = max(len(name) for name in rec["classes"])
    for name, flag in rec["classes"].items():
        line = f"  {name:<{width}}  {mark(flag)}"
        w = rec["witnesses"].get(name)
        if w is not None:
            line += f"  witness {w['element']}: {w['detail']}"
        lines.append(line)
    if timings and rec["timings_ms"]:
        stages = ", ".join(f"{k} {v} ms" for k, v in rec["timings_ms"].items())
        lines.append(f"  timings: {stages}")
    return "\n".join(lines)


SUMMARY_CLASSES = ("CSNC", "NCUC", "CUNC", "NCSUC", "NCC", "UU")


def render_summary(rec):
    """One line per ring, used by the survey stream."""
    flags = " ".join(f"{name}{mark(rec['classes'][name])}" for name in SUMMARY_CLASSES)
    return f"{rec['expr']:<24} {rec['order']:>5}  {flags}"
