"""Integer-linear-program export of the maximum-packing search problem.

One binary variable per k-subspace (canonical enumeration order), one
coverage row per t-subspace, optional strengthening rows per i-subspace for
1 <= i < t whose right-hand sides come from the bound engine.  The model is
emitted, never solved; both an LP-format and a fixed-MPS writer are
provided, plus parsers for our own emissions so a round trip can be checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import BoundEngine, KnownValues
from .errors import ParameterError, SizeCapError
from .gf import Subspace, enumerate_subspaces, subspaces_of
from .params import PackingParams
from .qcalc import gaussian_binomial

DEFAULT_MAX_VARIABLES = 20_000
DEFAULT_MAX_ROWS = 50_000

FORMATS = ("lp", "mps")


@dataclass(frozen=True)
class IlpRow:
    name: str
    variables: tuple[int, ...]
    rhs: int


@dataclass(frozen=True)
class IlpModel:
    params: PackingParams
    blocks: tuple[Subspace, ...]
    rows: tuple[IlpRow, ...]
    strengthened: bool

    @property
    def num_variables(self) -> int:
        return len(self.blocks)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def coverage_rows(self) -> list[IlpRow]:
        return [r for r in self.rows if r.name.startswith("cov")]


def build_model(p: PackingParams, strengthen: bool = False,
                engine: BoundEngine | None = None,
                max_variables: int = DEFAULT_MAX_VARIABLES,
                max_rows: int = DEFAULT_MAX_ROWS) -> IlpModel:
    """Build the coverage model; raises SizeCapError with counts when too big."""
    nvars = gaussian_binomial(p.n, p.k, p.q)
    nrows = gaussian_binomial(p.n, p.t, p.q)
    if strengthen:
        nrows += sum(gaussian_binomial(p.n, i, p.q) for i in range(1, p.t))
    if nvars > max_variables or nrows > max_rows:
        raise SizeCapError(
            f"model for {p.label()} has {nvars} variables / {nrows} rows "
            f"(caps {max_variables} / {max_rows})",
            variables=nvars, rows=nrows,
            max_variables=max_variables, max_rows=max_rows,
        )
    blocks = tuple(enumerate_subspaces(p.n, p.k, p.q))
    rows: list[IlpRow] = []
    rows.extend(_incidence_rows(p, blocks, p.t, "cov", p.lam))
    if strengthen:
        if engine is None:
            engine = BoundEngine(KnownValues.bundled())
        for i in range(1, p.t):
            rhs = engine.upper_value(p.q, p.n - i, p.k - i, p.t - i, p.lam)
            rows.extend(_incidence_rows(p, blocks, i, f"st{i}_", rhs))
    return IlpModel(p, blocks, tuple(rows), strengthen)


def _incidence_rows(p: PackingParams, blocks, dim: int, prefix: str, rhs: int) -> list[IlpRow]:
    index: dict[tuple, int] = {}
    members: list[list[int]] = []
    for v, b in enumerate(blocks):
        for s in subspaces_of(b, dim):
            i = index.setdefault(s.packed, len(index))
            if i == len(members):
                members.append([])
            members[i].append(v)
    return [IlpRow(f"{prefix}{i}", tuple(vs), rhs) for i, vs in enumerate(members)]


def index_lines(model: IlpModel) -> str:
    """Companion index: one line per variable, `x{i} <block rows joined by '/'>`."""
    out = []
    for i, b in enumerate(model.blocks):
        out.append(f"x{i} " + "/".join(b.to_lines()))
    return "\n".join(out) + "\n"


# --- emission ----------------------------------------------------------------

def _wrap_terms(terms: list[str], indent: str = "      ", width: int = 100) -> list[str]:
    lines = []
    cur = indent
    for t in terms:
        if len(cur) + len(t) + 1 > width and cur.strip():
            lines.append(cur)
            cur = indent
        cur += (" " if cur.strip() else "") + t
    if cur.strip():
        lines.append(cur)
    return lines


def emit_lp(model: IlpModel) -> str:
    p = model.params
    out = [f"\\ packing model q={p.q} n={p.n} k={p.k} t={p.t} lambda={p.lam}"]
    out.append("Maximize")
    obj_terms = [("x0" if i == 0 else f"+ x{i}") for i in range(model.num_variables)]
    out.append(" obj:")
    out.extend(_wrap_terms(obj_terms))
    out.append("Subject To")
    for row in model.rows:
        terms = [(f"x{v}" if j == 0 else f"+ x{v}") for j, v in enumerate(row.variables)]
        out.append(f" {row.name}:")
        out.extend(_wrap_terms(terms))
        out.append(f"      <= {row.rhs}")
    out.append("Binary")
    out.extend(_wrap_terms([f"x{i}" for i in range(model.num_variables)], indent="  "))
    out.append("End")
    return "\n".join(out) + "\n"


def emit_mps(model: IlpModel) -> str:
    p = model.params
    def f(a: str, b: str = "", c: str = "", d: str = "", e: str = "", g: str = "") -> str:
        return f" {a:<2} {b:<10}{c:<12}{d:<12}{e:<12}{g}".rstrip()
    out = [f"NAME          PACKING_{p.q}_{p.n}_{p.k}_{p.t}_{p.lam}"]
    out.append("OBJSENSE")
    out.append("    MAX")
    out.append("ROWS")
    out.append(f(" N", "OBJ"))
    for row in model.rows:
        out.append(f(" L", row.name.upper()))
    out.append("COLUMNS")
    out.append("    MARKER                 'MARKER'                 'INTORG'")
    by_var: list[list[str]] = [[] for _ in range(model.num_variables)]
    for row in model.rows:
        for v in row.variables:
            by_var[v].append(row.name.upper())
    for i in range(model.num_variables):
        entries = [("OBJ", 1)] + [(r, 1) for r in by_var[i]]
        for j in range(0, len(entries), 2):
            pair = entries[j:j + 2]
            if len(pair) == 2:
                out.append(f("  ", f"X{i}", pair[0][0], str(pair[0][1]), pair[1][0], str(pair[1][1])))
            else:
                out.append(f("  ", f"X{i}", pair[0][0], str(pair[0][1])))
    out.append("    MARKER                 'MARKER'                 'INTEND'")
    out.append("RHS")
    for row in model.rows:
        out.append(f("  ", "RHS", row.name.upper(), str(row.rhs)))
    out.append("BOUNDS")
    for i in range(model.num_variables):
        out.append(f" UP BND       X{i:<10} 1")
    out.append("ENDATA")
    return "\n".join(out) + "\n"


def emit(model: IlpModel, fmt: str) -> str:
    if fmt == "lp":
        return emit_lp(model)
    if fmt == "mps":
        return emit_mps(model)
    raise ParameterError(f"unsupported format {fmt!r}; expected one of {FORMATS}")


# --- parsing (round-trip check of our own emissions) --------------------------

@dataclass(frozen=True)
class ParsedModel:
    objective: frozenset[int]
    rows: dict[str, tuple[tuple[int, ...], int]]
    binaries: frozenset[int]


def normalize(model: IlpModel) -> ParsedModel:
    return ParsedModel(
        frozenset(range(model.num_variables)),
        {r.name.lower(): (tuple(sorted(r.variables)), r.rhs) for r in model.rows},
        frozenset(range(model.num_variables)),
    )


def _var_id(token: str) -> int:
    token = token.lower()
    if not token.startswith("x"):
        raise ParameterError(f"expected a variable token, got {token!r}")
    return int(token[1:])


def parse_lp(text: str) -> ParsedModel:
    section = None
    objective: set[int] = set()
    binaries: set[int] = set()
    rows: dict[str, tuple[tuple[int, ...], int]] = {}
    cur_name = None
    cur_vars: list[int] = []
    def close_row(rhs: int):
        nonlocal cur_name, cur_vars
        rows[cur_name] = (tuple(sorted(cur_vars)), rhs)
        cur_name, cur_vars = None, []
    for raw in text.splitlines():
        line = raw.split("\\")[0].strip()
        if not line:
            continue
        low = line.lower()
        if low in ("maximize", "minimize", "subject to", "binary", "end", "bounds"):
            section = low
            continue
        if section == "maximize":
            if line.endswith(":"):
                continue
            for tok in line.replace("+", " ").split():
                if tok != "obj:":
                    objective.add(_var_id(tok))
        elif section == "subject to":
            if line.endswith(":"):
                cur_name = line[:-1].strip()
            elif line.startswith("<="):
                close_row(int(line[2:].strip()))
            else:
                for tok in line.replace("+", " ").split():
                    cur_vars.append(_var_id(tok))
        elif section == "binary":
            for tok in line.split():
                binaries.add(_var_id(tok))
    return ParsedModel(frozenset(objective), rows, frozenset(binaries))


def parse_mps(text: str) -> ParsedModel:
    section = None
    objective: set[int] = set()
    binaries: set[int] = set()
    integer_mode = False
    rows: dict[str, list[int]] = {}
    rhs: dict[str, int] = {}
    for raw in text.splitlines():
        if not raw.strip():
            continue
        if not raw.startswith(" "):
            section = raw.split()[0].upper()
            continue
        parts = raw.split()
        if section == "OBJSENSE":
            continue
        if section == "ROWS":
            if parts[0] == "L":
                rows[parts[1].lower()] = []
        elif section == "COLUMNS":
            if len(parts) >= 3 and parts[1] == "'MARKER'":
                integer_mode = parts[2] == "'INTORG'"
                continue
            var = _var_id(parts[0])
            if integer_mode:
                binaries.add(var)
            for name, coef in zip(parts[1::2], parts[2::2]):
                if name.upper() == "OBJ":
                    if int(coef):
                        objective.add(var)
                else:
                    rows[name.lower()].append(var)
        elif section == "RHS":
            for name, val in zip(parts[1::2], parts[2::2]):
                rhs[name.lower()] = int(val)
    return ParsedModel(
        frozenset(objective),
        {name: (tuple(sorted(vs)), rhs[name]) for name, vs in rows.items()},
        frozenset(binaries),
    )


def check_feasible_point(model: IlpModel, chosen_blocks) -> bool:
    """Mechanically substitute a code into every row of the model."""
    keys = {b.packed for b in chosen_blocks}
    chosen = {i for i, b in enumerate(model.blocks) if b.packed in keys}
    return all(sum(1 for v in row.variables if v in chosen) <= row.rhs for row in model.rows)
