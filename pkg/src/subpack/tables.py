"""Bound tables: one cell per (k, t) with provenance, plus fixture comparison.

Cells cover 2 <= k <= n-1 and 1 <= t <= k.  The comparison mode checks each
cell against the bundled registry interval: the engine never contradicts a
fixture when its upper stays >= the fixture's lower and its lower stays <=
the fixture's upper.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import BoundEngine, BoundResult, KnownValues
from .params import PackingParams


@dataclass(frozen=True)
class TableCell:
    k: int
    t: int
    result: BoundResult
    fixture: tuple[int | None, int | None, str] | None

    @property
    def consistent(self) -> bool | None:
        if self.fixture is None:
            return None
        lo, hi, _ = self.fixture
        ok = True
        if lo is not None:
            ok = ok and self.result.upper >= lo
        if hi is not None:
            ok = ok and self.result.lower <= hi
        return ok


def table_cells(q: int, n: int, lam: int, engine: BoundEngine,
                fixtures: KnownValues | None = None) -> list[TableCell]:
    cells = []
    for k in range(2, n):
        for t in range(1, k + 1):
            p = PackingParams(q, n, k, t, lam)
            res = engine.result(p)
            fx = None
            if fixtures is not None:
                kv = fixtures.get(q, n, k, t, lam)
                if kv is not None:
                    fx = (kv.lower, kv.upper, kv.source)
            cells.append(TableCell(k, t, res, fx))
    return cells


def _cell_text(lower: int, upper: int) -> str:
    return str(upper) if lower == upper else f"{lower}-{upper}"


def render(q: int, n: int, lam: int, cells: list[TableCell], compare: bool = False) -> str:
    by_kt = {(c.k, c.t): c for c in cells}
    tmax = max(c.t for c in cells)
    width = max(len(_cell_text(c.result.lower, c.result.upper)) for c in cells) + 2
    head = f"bounds for A_{q}({n},k,t;{lam})   (cell: lower-upper, single value when exact)"
    lines = [head, ""]
    header = "k\\t".ljust(5) + "".join(str(t).rjust(width) for t in range(1, tmax + 1))
    lines.append(header)
    for k in range(2, n):
        row = str(k).ljust(5)
        for t in range(1, tmax + 1):
            c = by_kt.get((k, t))
            row += ("" if c is None else _cell_text(c.result.lower, c.result.upper)).rjust(width)
        lines.append(row)
    lines.append("")
    lines.append("provenance (method attaining each side):")
    for c in cells:
        up_m = min(c.result.upper_methods, key=lambda mv: mv[1])[0]
        lo_m = max(c.result.lower_methods, key=lambda mv: mv[1])[0]
        lines.append(f"  k={c.k} t={c.t}: upper {c.result.upper} via {up_m}; lower {c.result.lower} via {lo_m}")
    if compare:
        lines.append("")
        lines.append("fixture comparison:")
        for c in cells:
            if c.fixture is None:
                lines.append(f"  k={c.k} t={c.t}: no fixture")
                continue
            lo, hi, src = c.fixture
            verdict = "consistent" if c.consistent else "CONTRADICTION"
            lines.append(
                f"  k={c.k} t={c.t}: engine [{c.result.lower},{c.result.upper}]"
                f" vs {src} [{lo},{hi}] -> {verdict}"
            )
    return "\n".join(lines) + "\n"
