"""Poset files and DOT rendering.

A poset file is a JSON object with fields:

* ``n``      -- element count (int >= 0),
* ``strict`` -- array of ``[i, j]`` pairs of 0-based indices meaning i < j;
  any generating set is accepted, the loader closes it transitively,
* ``names``  -- optional array of n element labels.

Hand-written files need not spell out implied pairs; saving always writes
the cover pairs of the closed order, so load/save round trips preserve the
relation exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import ParseError


def load_poset_payload(path: str) -> dict[str, Any]:
    """Read and shape-check a poset file; closure and cycle detection happen
    when the payload is turned into a poset."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    return shape_check(raw, source=path)


def shape_check(raw: Any, source: str = "<payload>") -> dict[str, Any]:
    if not isinstance(raw, dict):
        raise ParseError(f"{source}: expected a JSON object")
    if "n" not in raw or "strict" not in raw:
        raise ParseError(f"{source}: fields 'n' and 'strict' are required")
    n = raw["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"{source}: 'n' must be a nonnegative integer")
    strict = raw["strict"]
    if not isinstance(strict, list):
        raise ParseError(f"{source}: 'strict' must be an array of [i, j] pairs")
    pairs = []
    for entry in strict:
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise ParseError(f"{source}: bad strict pair {entry!r}")
        pairs.append((entry[0], entry[1]))
    names = raw.get("names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
            raise ParseError(f"{source}: 'names' must be an array of strings")
        if len(names) != n:
            raise ParseError(f"{source}: 'names' must list exactly n labels")
    return {"n": n, "strict": pairs, "names": names}


def save_poset_payload(path: str, n: int, strict: list[tuple[int, int]], names: list[str] | None = None) -> None:
    payload: dict[str, Any] = {"n": n, "strict": [list(p) for p in strict]}
    if names is not None:
        payload["names"] = list(names)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def to_dot(n: int, edges: list[tuple[int, int]], names: list[str] | None = None) -> str:
    """Render cover pairs as a DOT digraph, ranked bottom-to-top."""
    labels = names if names is not None else [str(i) for i in range(n)]
    lines = ["digraph poset {", "  rankdir=BT;"]
    for i in range(n):
        lines.append(f'  {i} [label="{labels[i]}"];')
    for p, q in edges:
        lines.append(f"  {p} -> {q};")
    lines.append("}")
    return "\n".join(lines) + "\n"
