"""Text format for codes: header `q n k count`, then blocks.

Each block is k lines of n base-q digits (most significant coordinate
first); blocks are separated by blank lines.  Lines starting with `#` after
the header carry metadata and are ignored by the parser apart from being
collected into the meta dict.  Blocks are canonicalized on load and
duplicates are rejected.
"""

from __future__ import annotations

from .constructions import PackingCode
from .errors import CodeFileError, ParameterError
from .gf import Subspace, field


def dumps(code: PackingCode) -> str:
    out = [f"{code.q} {code.n} {code.k} {code.size}"]
    for key, val in code.meta.items():
        out.append(f"# {key}: {val}")
    for b in code.blocks:
        out.append("")
        out.extend(b.to_lines())
    return "\n".join(out) + "\n"


def loads(text: str) -> PackingCode:
    lines = text.splitlines()
    if not lines:
        raise CodeFileError("empty code file")
    head = lines[0].split()
    if len(head) != 4:
        raise CodeFileError("header must be 'q n k count'")
    try:
        q, n, k, count = (int(x) for x in head)
    except ValueError as e:
        raise CodeFileError(f"bad header: {e}") from None
    meta: dict[str, str] = {}
    blocks: list[Subspace] = []
    cur: list[str] = []
    try:
        f = field(q)
    except ParameterError as e:
        raise CodeFileError(str(e)) from None

    def close():
        if not cur:
            return
        if len(cur) != k:
            raise CodeFileError(f"block with {len(cur)} rows, expected {k}")
        try:
            s = Subspace.from_lines(f, n, cur)
        except ParameterError as e:
            raise CodeFileError(str(e)) from None
        if s.dim != k:
            raise CodeFileError("block rows are linearly dependent")
        blocks.append(s)
        cur.clear()

    for raw in lines[1:]:
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if ":" in body:
                key, _, val = body.partition(":")
                meta[key.strip()] = val.strip()
            continue
        if not line:
            close()
            continue
        cur.append(line)
    close()
    if len(blocks) != count:
        raise CodeFileError(f"header says {count} blocks, found {len(blocks)}")
    try:
        return PackingCode(q, n, k, tuple(blocks), meta)
    except ParameterError as e:
        raise CodeFileError(str(e)) from None


def dump(code: PackingCode, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(code))


def load(path: str) -> PackingCode:
    with open(path) as fh:
        return loads(fh.read())
