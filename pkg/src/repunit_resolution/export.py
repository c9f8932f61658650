"""Serialisation of resolutions: JSON, plain text and CAS input scripts."""

from __future__ import annotations

import json

from .encomplex import GradedComplex, build_resolution
from .polyalg import PolyMatrix, SparsePolynomial
from .semigroup import construct

SCHEMA_VERSION = "repunit-resolution/1"

JSON_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "params", "generators", "extended", "c", "levels"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "params": {
            "type": "object",
            "required": ["b", "n", "a"],
            "additionalProperties": False,
            "properties": {k: {"type": "integer"} for k in ("b", "n", "a")},
        },
        "generators": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "extended": {"type": "integer"},
        "c": {"type": "integer"},
        "levels": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["j", "betti", "shifts", "entries"],
                "additionalProperties": False,
                "properties": {
                    "j": {"type": "integer", "minimum": 1},
                    "betti": {"type": "integer", "minimum": 1},
                    "shifts": {"type": "array", "items": {"type": "integer"}},
                    "entries": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "prefixItems": [{"type": "integer"}, {"type": "integer"},
                                            {"type": "string"}],
                            "minItems": 3,
                            "maxItems": 3,
                        },
                    },
                },
            },
        },
    },
}


def to_dict(gc: GradedComplex) -> dict:
    S = gc.semigroup
    return {
        "schema": SCHEMA_VERSION,
        "params": {"b": S.b, "n": S.n, "a": S.a},
        "generators": list(S.generators),
        "extended": S.extended,
        "c": S.c,
        "levels": [
            {
                "j": j,
                "betti": len(gc.shifts_at(j)),
                "shifts": list(gc.shifts_at(j)),
                "entries": [[r, q, p.to_str()] for (r, q), p in gc.delta(j).items()],
            }
            for j in range(1, gc.length + 1)
        ],
    }


def to_json(gc: GradedComplex) -> str:
    return json.dumps(to_dict(gc), indent=2) + "\n"


def from_dict(data: dict) -> GradedComplex:
    """Rebuild a complex from its JSON form (bases are regenerated from params)."""
    if data.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {data.get('schema')!r}")
    p = data["params"]
    S = construct(p["b"], p["n"], p["a"])
    template = build_resolution(S)
    diffs, level_shifts = [], []
    for level in data["levels"]:
        j = level["j"]
        rows = 1 if j == 1 else len(template.shifts_at(j - 1))
        entries = {(r, q): SparsePolynomial.parse(text, S.n) for r, q, text in level["entries"]}
        diffs.append(PolyMatrix(rows, level["betti"], S.n, entries))
        level_shifts.append(list(level["shifts"]))
    return GradedComplex(S, template.bases, level_shifts, diffs)


def from_json(text: str) -> GradedComplex:
    return from_dict(json.loads(text))


def to_text(gc: GradedComplex) -> str:
    S = gc.semigroup
    lines = [f"S = <{', '.join(map(str, S.generators))}>  (b={S.b}, n={S.n}, a={S.a})",
             f"a_{S.n + 1} = {S.extended}, c = {S.c}, betti = {gc.betti}"]
    for j in range(1, gc.length + 1):
        lines.append(f"level {j}: {gc.delta(j).rows}x{gc.delta(j).cols}")
        for e, s in zip(gc.bases[j - 1], gc.shifts_at(j)):
            lines.append(f"  {str(e):32s} degree {s}")
        for (r, q), p in gc.delta(j).items():
            lines.append(f"  [{r},{q}] {p}")
    return "\n".join(lines) + "\n"


def _ideal_terms(gc: GradedComplex) -> str:
    return ", ".join(p.to_str().replace(" ", "") for _, p in gc.delta(1).items())


def to_macaulay2(gc: GradedComplex) -> str:
    S = gc.semigroup
    variables = ", ".join(f"x{i}" for i in range(1, S.n + 1))
    degs = ", ".join(str(g) for g in S.generators)
    return (
        f"-- generalized repunit semigroup b={S.b} n={S.n} a={S.a}\n"
        f"-- generators {list(S.generators)}; expected shifts {[gc.shifts_at(j) for j in range(1, gc.length + 1)]}\n"
        f"R = QQ[{variables}, Degrees => {{{degs}}}];\n"
        f"I = ideal({_ideal_terms(gc)});\n"
        f"C = res(R^1/I);\n"
        f"betti C\n"
        f"for j from 1 to length C list sort flatten degrees C_j\n"
    )


def to_singular(gc: GradedComplex) -> str:
    S = gc.semigroup
    variables = ",".join(f"x{i}" for i in range(1, S.n + 1))
    degs = ",".join(str(g) for g in S.generators)
    return (
        f"// generalized repunit semigroup b={S.b} n={S.n} a={S.a}\n"
        f"// generators {list(S.generators)}; expected shifts {[gc.shifts_at(j) for j in range(1, gc.length + 1)]}\n"
        f"ring R = 0, ({variables}), wp({degs});\n"
        f"ideal I = {_ideal_terms(gc)};\n"
        f"resolution F = mres(I, 0);\n"
        f"print(betti(F), \"betti\");\n"
    )
