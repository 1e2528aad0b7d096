"""JSON schemas for every machine-readable CLI output."""

from __future__ import annotations

_INT_LIST = {"type": "array", "items": {"type": "integer"}}

ENTRY = {
    "type": "object",
    "required": ["weight", "coeff"],
    "properties": {"weight": _INT_LIST, "coeff": {"type": "integer", "minimum": 1}},
    "additionalProperties": False,
}

HOMRANK = {
    "type": "object",
    "required": ["family", "rank", "s", "k", "convention_dependent", "entries"],
    "properties": {
        "family": {"enum": ["A", "B", "C", "D"]},
        "rank": {"type": "integer", "minimum": 1},
        "s": _INT_LIST,
        "k": {"type": "integer", "minimum": 0},
        "convention_dependent": {"type": "boolean"},
        "entries": {"type": "array", "items": ENTRY},
    },
}

FUNDCHAR = {
    "type": "object",
    "required": ["family", "rank", "node", "k", "convention_dependent", "entries"],
    "properties": {
        "family": {"enum": ["A", "B", "C", "D"]},
        "rank": {"type": "integer", "minimum": 1},
        "node": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 0},
        "convention_dependent": {"type": "boolean"},
        "entries": {"type": "array", "items": ENTRY},
    },
}

DETCNK = {
    "type": "object",
    "required": ["N", "K", "det", "predicted", "match"],
    "properties": {
        "N": {"type": "integer"}, "K": {"type": "integer"}, "det": {"type": "integer"},
        "predicted": {"type": "integer"}, "match": {"type": "boolean"},
    },
}

COEXPAND = {
    "type": "object",
    "required": ["input", "k", "l", "terms", "text"],
    "properties": {
        "input": {"type": "string"},
        "k": {"type": "integer"},
        "l": {"type": "integer"},
        "text": {"type": "string"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["left", "right", "coeff"],
                "properties": {"left": {"type": "string"}, "right": {"type": "string"}, "coeff": {"type": "string"}},
            },
        },
    },
}

INVDIM = {
    "type": "object",
    "required": ["config", "ring", "mu", "dim", "predicted", "distinct_points", "basis"],
    "properties": {
        "config": {"type": "string"},
        "ring": {"enum": ["poly", "laurent"]},
        "mu": _INT_LIST,
        "dim": {"type": "integer", "minimum": 0},
        "predicted": {"type": ["integer", "null"]},
        "distinct_points": {"type": "boolean"},
        "basis": {"type": "array", "items": {"type": "object", "additionalProperties": {"type": "string"}}},
    },
}

REPORT = {
    "type": "object",
    "required": ["check", "params", "window", "verdict"],
    "properties": {
        "check": {"type": "string"},
        "params": {"type": "object"},
        "window": {"type": "object"},
        "verdict": {"enum": ["pass", "fail", "inconclusive"]},
        "witness": {},
    },
}

SYMCHECK = {
    "type": "object",
    "required": ["r", "k", "l", "samples", "invariant", "closed", "passed"],
    "properties": {
        "r": _INT_LIST, "k": {"type": "integer"}, "l": {"type": "integer"},
        "samples": {"type": "integer"}, "invariant": {"type": "integer"}, "closed": {"type": "integer"},
        "passed": {"type": "boolean"},
    },
}

SUITE = {
    "type": "object",
    "required": ["passed", "criteria"],
    "properties": {
        "passed": {"type": "boolean"},
        "criteria": {
            "type": "array",
            "minItems": 10,
            "items": {
                "type": "object",
                "required": ["criterion", "name", "passed", "elapsed_s", "budget_s", "instances", "detail"],
                "properties": {
                    "criterion": {"type": "integer"},
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "elapsed_s": {"type": "number", "minimum": 0},
                    "budget_s": {"type": "number"},
                    "instances": {"type": "integer"},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}

SCHEMAS = {
    "homrank": HOMRANK, "fundchar": FUNDCHAR, "detcnk": DETCNK, "coexpand": COEXPAND,
    "invdim": INVDIM, "weylglob": REPORT, "symcheck": SYMCHECK, "check-suite": SUITE,
}
