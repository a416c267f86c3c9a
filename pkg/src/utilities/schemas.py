"""Published JSON schemas of every command's output"""
from jsonschema import Draft202012Validator

_WORD = {"type": "string", "pattern": "^[01]+$"}
_WORDS = {"type": "array", "items": _WORD}
_INT = {"type": "integer"}
_NULLABLE_INT = {"type": ["integer", "null"]}
_NULLABLE_STRING = {"type": ["string", "null"]}
_BIT = {"type": "integer", "enum": [0, 1]}

ORBIT_RECORD = {
    "type": "object",
    "required": ["transient", "cycle", "limit_set"],
    "properties": {
        "transient": {"type": "integer", "minimum": 0},
        "cycle": {"type": "integer", "minimum": 1},
        "limit_set": _WORDS,
    },
}

RULE_INFO = {
    "type": "object",
    "required": ["rule", "table", "activity", "symmetry_class", "representative",
                 "das_condition", "walls", "wolfram_class", "published_category", "n",
                 "fixed_points"],
    "properties": {
        "rule": {"type": "integer", "minimum": 0, "maximum": 255},
        "table": {"type": "object", "additionalProperties": _BIT},
        "activity": {"type": "object",
                     "additionalProperties": {"enum": ["active", "passive"]}},
        "symmetry_class": {"type": "array", "items": _INT, "minItems": 1, "maxItems": 4},
        "representative": _INT,
        "das_condition": {"enum": ["i", "ii", "iii", None]},
        "walls": {"type": "object", "additionalProperties": _WORDS},
        "wolfram_class": _NULLABLE_STRING,
        "published_category": _NULLABLE_STRING,
        "n": _NULLABLE_INT,
        "fixed_points": {"type": ["array", "null"], "items": _WORD},
    },
}

ORBIT = {
    "type": "object",
    "required": ["rule", "n", "mode", "config", "trace", "rows", "step_rows", "record"],
    "properties": {
        "rule": _INT,
        "n": _INT,
        "mode": {"type": "string"},
        "config": _WORD,
        "trace": {"enum": ["steps", "substeps"]},
        "rows": _WORDS,
        "step_rows": {"type": "array", "items": {"type": "boolean"}},
        "record": ORBIT_RECORD,
    },
}

FIXED_POINTS = {
    "type": "object",
    "required": ["rule", "n", "exists", "fixed_points", "isolated", "degenerate"],
    "properties": {
        "rule": _INT,
        "n": _INT,
        "exists": {"type": "boolean"},
        "fixed_points": _WORDS,
        "isolated": {"type": ["array", "null"], "items": _WORD},
        "degenerate": {"type": ["boolean", "null"]},
    },
}


def _search_kind(kind: str, required: list[str], properties: dict) -> dict:
    return {
        "type": "object",
        "required": ["kind", "rule", "n", *required],
        "properties": {"kind": {"const": kind}, "rule": _INT, "n": _INT, **properties},
    }


SEARCH = {
    "oneOf": [
        _search_kind("universal", ["mode", "universal", "witness", "orbit"], {
            "mode": {"type": "string"},
            "universal": {"type": "boolean"},
            "witness": {"anyOf": [_WORD, {"type": "null"}]},
            "orbit": {"anyOf": [ORBIT_RECORD, {"type": "null"}]},
            "converged": _INT,
            "max_transient": _NULLABLE_INT,
            "mean_transient": {"type": ["number", "null"]},
        }),
        _search_kind("count", ["count", "counting", "published", "discrepancy"], {
            "count": {"type": "integer", "minimum": 0},
            "counting": {"enum": ["raw", "classes"]},
            "raw": _NULLABLE_INT,
            "classes": _NULLABLE_INT,
            "published": _NULLABLE_INT,
            "discrepancy": {"type": "boolean"},
            "modes": {"type": "array", "items": {"type": "string"}},
        }),
        _search_kind("covering", ["strategy", "covering", "witnesses"], {
            "strategy": {"enum": ["greedy", "exact"]},
            "covering": {"type": ["array", "null"], "items": {"type": "string"}},
            "assignment": {"type": "object", "additionalProperties": {"type": "string"}},
            "witnesses": _WORDS,
        }),
        _search_kind("nonconv", ["count", "configurations"], {
            "count": {"type": "integer", "minimum": 0},
            "configurations": _WORDS,
        }),
        _search_kind("blocker", ["word", "blocked"], {
            "word": _WORD,
            "blocked": {"type": "boolean"},
        }),
        _search_kind("composed", ["assignment", "witnesses"], {
            "assignment": {"type": "object", "additionalProperties": {"type": "string"}},
            "witnesses": _WORDS,
        }),
    ]
}

CLASSIFICATION_REPORT = {
    "type": "object",
    "required": ["rule", "category", "restriction", "condition", "wolfram_class", "expected",
                 "discrepancy", "conjectured", "per_n", "parity"],
    "properties": {
        "rule": _INT,
        "category": {"type": "string"},
        "restriction": {"enum": ["E", "T", None]},
        "condition": {"enum": ["i", "ii", "iii", None]},
        "wolfram_class": _NULLABLE_STRING,
        "expected": _NULLABLE_STRING,
        "discrepancy": {"type": "boolean"},
        "conjectured": {"type": "boolean"},
        "per_n": {"type": "object", "additionalProperties": {"type": "string"}},
        "parity": {"type": "object", "additionalProperties": {"type": "string"}},
    },
}

CLASSIFY = {
    "type": "object",
    "required": ["n_values", "rules", "table", "totals", "discrepancies"],
    "properties": {
        "n_values": {"type": "array", "items": _INT},
        "rules": {"type": "array", "items": CLASSIFICATION_REPORT},
        "table": {"type": "object", "additionalProperties": {
            "type": "object", "additionalProperties": {"type": "array", "items": _INT}}},
        "totals": {"type": "object", "additionalProperties": _INT},
        "discrepancies": {"type": "array", "items": _INT},
    },
}

CERTIFICATE = {
    "type": "object",
    "required": ["id", "kind", "statement", "status", "n_values", "checks"],
    "properties": {
        "id": {"type": "string"},
        "kind": {"enum": ["theorem", "lemma", "corollary", "conjecture", "count"]},
        "statement": {"type": "string"},
        "status": {"enum": ["pass", "fail", "evidence", "discrepancy"]},
        "n_values": {"type": "array", "items": _INT},
        "checks": {"type": "array", "items": {
            "type": "object",
            "required": ["rule", "n", "claim", "ok", "detail", "published", "discrepancy"],
            "properties": {
                "rule": _INT,
                "n": _INT,
                "claim": {"type": "string"},
                "ok": {"type": "boolean"},
                "detail": _NULLABLE_STRING,
                "published": _NULLABLE_INT,
                "discrepancy": {"type": "boolean"},
            },
        }},
    },
}

VERIFY = {
    "type": "object",
    "required": ["passed", "certificates"],
    "properties": {
        "passed": {"type": "boolean"},
        "certificates": {"type": "array", "items": CERTIFICATE},
    },
}

SCHEMAS = {
    "rule-info": RULE_INFO,
    "orbit": ORBIT,
    "fixed-points": FIXED_POINTS,
    "search": SEARCH,
    "classify": CLASSIFY,
    "verify": VERIFY,
}


def validate_document(kind: str, document: dict) -> None:
    """Raise jsonschema.ValidationError if document does not match the schema for kind"""
    Draft202012Validator(SCHEMAS[kind]).validate(document)
