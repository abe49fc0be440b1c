"""Reading and writing 1-based operation tensors.

Text format: the first line is ``n``; then ``n`` blocks separated by blank
lines, block ``i`` holding ``n`` rows of ``n`` integers (row ``j``, column
``k`` is ``[i, j, k]``).  Lines starting with ``#`` are comments.  JSON
documents ``{"n": n, "tensor": [[[...]]]}`` are accepted as well.
"""

from __future__ import annotations

import json
from pathlib import Path

__all__ = ["dumps_tensor", "load_tensor", "loads_tensor", "tensor_json"]


def loads_tensor(text: str) -> list:
    """Parse tensor text (or JSON) into a 1-based nested list."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        t = doc["tensor"]
        n = int(doc.get("n", len(t)))
        _check_shape(t, n)
        return t
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise ValueError("empty tensor file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the order n, got {lines[0]!r}") from None
    rows = [ln for ln in lines[1:] if ln]
    if len(rows) != n * n:
        raise ValueError(f"expected {n * n} rows for n={n}, found {len(rows)}")
    vals = [[int(x) for x in r.replace(",", " ").split()] for r in rows]
    t = [vals[i * n:(i + 1) * n] for i in range(n)]
    _check_shape(t, n)
    return t


def _check_shape(t, n: int) -> None:
    ok = len(t) == n and all(len(m) == n and all(len(r) == n for r in m) for m in t)
    if not ok:
        raise ValueError(f"tensor is not {n} x {n} x {n}")


def load_tensor(path) -> list:
    return loads_tensor(Path(path).read_text())


def dumps_tensor(t, comment: str | None = None) -> str:
    n = len(t)
    width = len(str(n))
    out = []
    if comment:
        out += [f"# {ln}" for ln in comment.splitlines()]
    out.append(str(n))
    for i, m in enumerate(t):
        if i:
            out.append("")
        out += [" ".join(str(v).rjust(width) for v in row) for row in m]
    return "\n".join(out) + "\n"


def tensor_json(t) -> dict:
    return {"n": len(t), "tensor": t}
