"""FastAPI service wrapping the core package.

The process keeps two bound engines alive (with and without the known-value
registry) so memoized recursions are shared across requests.  Domain errors
map to 400, size/budget caps to 413; the structured error body carries a
stable `code` so thin clients can translate to exit codes.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, codefile, ilp, tables
from ..bounds import BoundEngine, KnownValues
from ..constructions import (
    PackingCode,
    build_covering,
    linkage_lower,
    packing_from_dual,
    packing_lower,
)
from ..errors import CodeFileError, NotApplicableError, ParameterError, SizeCapError
from ..oracle import SearchResult, exhaustive_max, greedy_lower, verify_covering, verify_packing
from ..params import CoveringParams, PackingParams
from . import schemas

app = FastAPI(title="subpack service", version=__version__)

_REGISTRY = KnownValues.bundled()
_ENGINES = {False: BoundEngine(_REGISTRY), True: BoundEngine(None)}


def _engine(paper_free: bool) -> BoundEngine:
    return _ENGINES[bool(paper_free)]


def _fail(status: int, code: str, message: str, counts: dict | None = None):
    raise HTTPException(status, detail={"code": code, "message": message, "counts": counts or {}})


def _packing_params(q, n, k, t, lam) -> PackingParams:
    try:
        return PackingParams(q, n, k, t, lam)
    except ParameterError as e:
        _fail(400, "invalid-params", str(e))


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/bound", response_model=schemas.BoundResponse, response_model_by_alias=True)
def bound(req: schemas.BoundRequest):
    p = _packing_params(req.q, req.n, req.k, req.t, req.lam)
    res = _engine(req.paper_free).result(p)
    methods = [schemas.MethodValue(method=m, value=v, side="upper") for m, v in res.upper_methods]
    methods += [schemas.MethodValue(method=m, value=v, side="lower") for m, v in res.lower_methods]
    return schemas.BoundResponse(
        q=p.q, n=p.n, k=p.k, t=p.t, lam=p.lam,
        lower=res.lower, upper=res.upper, exact=res.exact, methods=methods,
    )


@app.post("/construct", response_model=schemas.ConstructResponse)
def construct(req: schemas.ConstructRequest):
    try:
        if req.method == "dual-linkage":
            if req.t is None or req.lam is None:
                _fail(400, "invalid-params", "dual-linkage needs t and lambda")
            p = _packing_params(req.q, req.n, req.k, req.t, req.lam)
            code = packing_from_dual(p, size_cap=req.size_cap)
            if code is None:
                _fail(400, "not-applicable", f"dual linkage does not apply to {p.label()}")
            formula = packing_lower(p)
            verified = None
            if req.verify:
                verified = verify_packing(code, p.t, p.lam).valid
            mode = "packing"
            label = p.label()
        else:
            if req.delta is None or req.alpha is None:
                _fail(400, "invalid-params", f"{req.method} needs delta and alpha")
            c = CoveringParams(req.q, req.n, req.k, req.delta, req.alpha)
            if req.method == "lifted-mrd":
                from ..constructions import construction_1
                code = construction_1(c)
            else:
                code = build_covering(c, t_choice=req.t_choice, size_cap=req.size_cap)
            formula = linkage_lower(c)
            verified = None
            if req.verify:
                verified = verify_covering(code, c.delta, c.alpha).valid
            mode = "covering"
            label = c.label()
    except SizeCapError as e:
        _fail(413, "size-cap", str(e), e.counts)
    except NotApplicableError as e:
        _fail(400, "not-applicable", str(e))
    except ParameterError as e:
        _fail(400, "invalid-params", str(e))
    return schemas.ConstructResponse(
        method=req.method, params=label, size=code.size, formula=formula,
        verified=verified, verify_mode=mode, code=codefile.dumps(code),
    )


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest):
    try:
        code = codefile.loads(req.code)
    except CodeFileError as e:
        _fail(400, "bad-code-file", str(e))
    try:
        if req.mode == "packing":
            if req.t is None or req.lam is None:
                _fail(400, "invalid-params", "packing mode needs t and lambda")
            rep = verify_packing(code, req.t, req.lam)
        else:
            if req.delta is None or req.alpha is None:
                _fail(400, "invalid-params", "covering mode needs delta and alpha")
            rep = verify_covering(code, req.delta, req.alpha, budget=req.budget, seed=req.seed)
    except ParameterError as e:
        _fail(400, "invalid-params", str(e))
    return schemas.VerifyResponse(
        mode=rep.mode, valid=rep.valid, checked=rep.checked, exhaustive=rep.exhaustive,
        histogram=rep.histogram, worst_value=rep.worst_value,
        worst_witness=list(rep.worst_witness), detail=rep.detail, report=rep.to_text(),
    )


@app.post("/table", response_model=schemas.TableResponse, response_model_by_alias=True)
def table(req: schemas.TableRequest):
    if req.paper_free and req.compare:
        _fail(400, "invalid-params", "compare mode reads the registry; not available paper-free")
    if req.n < 3:
        _fail(400, "invalid-params", "tables need n >= 3")
    fixtures = None if req.paper_free else _REGISTRY
    try:
        cells = tables.table_cells(req.q, req.n, req.lam, _engine(req.paper_free), fixtures)
    except ParameterError as e:
        _fail(400, "invalid-params", str(e))
    out = []
    for c in cells:
        up_m = min(c.result.upper_methods, key=lambda mv: mv[1])[0]
        lo_m = max(c.result.lower_methods, key=lambda mv: mv[1])[0]
        cell = schemas.TableCellOut(
            k=c.k, t=c.t, lower=c.result.lower, upper=c.result.upper,
            exact=c.result.exact, upper_method=up_m, lower_method=lo_m,
        )
        if c.fixture is not None:
            cell.fixture_lower, cell.fixture_upper, cell.fixture_source = c.fixture
            cell.consistent = c.consistent
        out.append(cell)
    rendered = tables.render(req.q, req.n, req.lam, cells, compare=req.compare)
    return schemas.TableResponse(q=req.q, n=req.n, lam=req.lam, cells=out, rendered=rendered)


@app.post("/ilp", response_model=schemas.IlpResponse)
def ilp_export(req: schemas.IlpRequest):
    p = _packing_params(req.q, req.n, req.k, req.t, req.lam)
    try:
        model = ilp.build_model(
            p, strengthen=req.strengthen, engine=_engine(req.paper_free),
            max_variables=req.max_variables, max_rows=req.max_rows,
        )
        text = ilp.emit(model, req.format)
    except SizeCapError as e:
        _fail(413, "size-cap", str(e), e.counts)
    except ParameterError as e:
        _fail(400, "invalid-params", str(e))
    return schemas.IlpResponse(
        num_variables=model.num_variables, num_rows=model.num_rows,
        strengthened=model.strengthened, model_text=text, index_text=ilp.index_lines(model),
    )


@app.post("/search", response_model=schemas.SearchResponse)
def search(req: schemas.SearchRequest):
    p = _packing_params(req.q, req.n, req.k, req.t, req.lam)
    try:
        if req.mode == "greedy":
            code = greedy_lower(p, seed=req.seed, passes=req.passes)
            result = SearchResult(p, code.size, code, True, 0, None)
        else:
            result = exhaustive_max(p, budget=req.budget, max_blocks=req.max_blocks,
                                    engine=_engine(req.paper_free))
    except SizeCapError as e:
        _fail(413, "size-cap", str(e), e.counts)
    except ParameterError as e:
        _fail(400, "invalid-params", str(e))
    return schemas.SearchResponse(
        mode=req.mode, value=result.value, complete=result.complete,
        nodes=result.nodes, cutoff=result.cutoff, code=codefile.dumps(result.code),
    )
