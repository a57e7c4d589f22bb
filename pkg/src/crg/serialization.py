"""JSON wire formats.

Element: {"perm": [w(1),...,w(n)], "weights": [a1,...,an]}.
Factorization: {"v": 1, "group": "d,e,n", "factors": [element, ...]} with
"inf" as the cover marker in the group string.  Braid words are arrays of
nonzero signed integers.
"""

from __future__ import annotations

import json

from .groups import GroupError, GroupParams, WreathElement
from .hurwitz import Factorization, HurwitzError
from .reflections import classify


def element_to_json(x: WreathElement) -> dict:
    return {"perm": list(x.perm), "weights": list(x.weights)}


def element_from_json(obj: dict, params: GroupParams) -> WreathElement:
    try:
        perm = [int(v) for v in obj["perm"]]
        weights = [int(v) for v in obj["weights"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GroupError(f"malformed element object: {exc}") from None
    return WreathElement.create(perm, weights, params)


def factorization_to_json(f: Factorization) -> dict:
    return {
        "v": 1,
        "group": str(f.params),
        "factors": [element_to_json(t.element) for t in f.factors],
    }


def factorization_from_json(obj: dict, params: GroupParams | None = None) -> Factorization:
    if params is None:
        try:
            params = GroupParams.parse(obj["group"])
        except (KeyError, TypeError) as exc:
            raise GroupError(f"malformed factorization object: {exc}") from None
    factors = []
    for idx, entry in enumerate(obj.get("factors", [])):
        x = element_from_json(entry, params)
        r = classify(x)
        if r is None:
            raise GroupError(f"factor {idx} is not a reflection")
        factors.append(r)
    return Factorization(tuple(factors), params)


def braid_from_string(text: str) -> list[int]:
    try:
        word = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HurwitzError(f"malformed braid word: {exc}") from None
    if not isinstance(word, list) or not all(isinstance(v, int) for v in word):
        raise HurwitzError("braid word must be an array of integers")
    if any(v == 0 for v in word):
        raise HurwitzError("braid letters are nonzero (1-indexed) integers")
    return word
