__all__ = [
    "fraction_str",
    "exact_to_json",
    "exact_from_json",
    "to_dict",
    "tiling_to_dict",
    "serialize_tiling",
    "vertices_from_json",
    "quad_from_str",
]

import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any, Union

from ..exactfield import QuadNum, quad
from ..models.tiling import PrototileSet, Tiling

Exact = Union[int, Fraction, QuadNum]


def fraction_str(x: Union[int, Fraction]) -> str:
    """Reduced fraction as "p/q" (or "p" for integers)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def exact_to_json(x: Exact) -> list[str]:
    """a + b sqrt D as ["a", "b"]; D is carried once in the document meta."""
    if isinstance(x, QuadNum):
        return [fraction_str(x.a), fraction_str(x.b)]
    return [fraction_str(x), "0"]


def exact_from_json(pair: list[str], D: int) -> QuadNum:
    return QuadNum(Fraction(pair[0]), Fraction(pair[1]), D)


def to_dict(d) -> dict:
    """Dataclass to dict, dropping private fields and stringifying exact
    numbers."""
    d = asdict(d) if is_dataclass(d) else dict(d)
    result = {}
    for key, value in d.items():
        if isinstance(key, str) and key[0] == "_" and key[1] != "_":
            continue
        result[key] = _plain(value)
    return result


def _plain(value: Any) -> Any:
    if isinstance(value, QuadNum):
        return exact_to_json(value)
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def tiling_to_dict(tiling: Tiling, display, prototiles: PrototileSet | None = None) -> dict:
    """Document of a tiling: meta, vertices, faces and prototile classes.

    `display` maps frame coordinates to the floats written as `pos_float`.
    Vertices are listed in the order of their nu-vectors, which makes the
    document independent of construction order.
    """
    order = sorted(tiling.vertices)
    index = {nu: i for i, nu in enumerate(order)}
    vertices = [
        {
            "nu": [fraction_str(x) for x in nu],
            "pos_exact": [exact_to_json(x) for x in tiling.vertices[nu]],
            "pos_float": [round(x, 12) for x in display(tiling.vertices[nu])],
        }
        for nu in order
    ]
    faces = sorted(
        ({"cells": [index[nu] for nu in f.cells], "class_id": f.class_id} for f in tiling.faces),
        key=lambda f: f["cells"],
    )
    classes = []
    if prototiles is not None:
        classes = [
            {
                "shape": list(c.shape),
                "decoration": _plain(c.decoration),
                "inflation_patch": _plain(c.inflation_patch),
            }
            for c in prototiles.classes
        ]
    return {
        "meta": _plain(tiling.meta),
        "vertices": vertices,
        "faces": faces,
        "classes": classes,
    }


def serialize_tiling(tiling: Tiling, display, prototiles: PrototileSet | None = None) -> str:
    return json.dumps(tiling_to_dict(tiling, display, prototiles), indent=1, sort_keys=True, ensure_ascii=False)


def vertices_from_json(document: Union[str, dict]) -> dict[tuple[Fraction, ...], tuple[QuadNum, ...]]:
    """Exact vertex positions of a serialized tiling, keyed by nu."""
    if isinstance(document, str):
        document = json.loads(document)
    D = int(document["meta"]["D"])
    return {
        tuple(Fraction(x) for x in v["nu"]): tuple(exact_from_json(p, D) for p in v["pos_exact"])
        for v in document["vertices"]
    }


def quad_from_str(text: str, D: int) -> QuadNum:
    """"a", "a/b" or "a,b" (rational and sqrt D parts) to a field element."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == 1:
        return quad(Fraction(parts[0]), D)
    return QuadNum(Fraction(parts[0]), Fraction(parts[1]), D)
