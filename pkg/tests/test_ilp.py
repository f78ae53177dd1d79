import pytest

from subpack.bounds import BoundEngine, KnownValues
from subpack.errors import ParameterError, SizeCapError
from subpack.ilp import (
    build_model,
    check_feasible_point,
    emit,
    emit_lp,
    emit_mps,
    index_lines,
    normalize,
    parse_lp,
    parse_mps,
)
from subpack.oracle import exhaustive_max
from subpack.params import PackingParams
from subpack.qcalc import gaussian_binomial


@pytest.fixture(scope="module")
def engine():
    return BoundEngine(KnownValues.bundled())


@pytest.fixture(scope="module")
def model():
    return build_model(PackingParams(2, 4, 2, 1, 1))


def test_counts(model):
    assert model.num_variables == 35
    assert model.num_rows == 15
    assert all(row.rhs == 1 for row in model.rows)
    # every block covers [k;t]_q = 3 point rows
    per_var = [0] * model.num_variables
    for row in model.rows:
        for v in row.variables:
            per_var[v] += 1
    assert set(per_var) == {3}


def test_t_equals_k_is_identity(model):
    m = build_model(PackingParams(2, 4, 2, 2, 1))
    assert m.num_variables == 35 and m.num_rows == 35
    assert all(len(row.variables) == 1 for row in m.rows)
    covered = sorted(row.variables[0] for row in m.rows)
    assert covered == list(range(35))


def test_lp_emission_and_roundtrip(model):
    text = emit_lp(model)
    assert "Maximize" in text and "Binary" in text and text.count("<=") == 15
    assert parse_lp(text) == normalize(model)


def test_mps_emission_and_roundtrip(model):
    text = emit_mps(model)
    assert text.startswith("NAME") and "ENDATA" in text
    assert parse_mps(text) == normalize(model)


def test_lp_and_mps_agree(model):
    assert parse_lp(emit_lp(model)) == parse_mps(emit_mps(model))
    m2 = build_model(PackingParams(2, 5, 2, 1, 2))
    assert parse_lp(emit_lp(m2)) == parse_mps(emit_mps(m2)) == normalize(m2)


def test_emit_format_token(model):
    assert emit(model, "lp") == emit_lp(model)
    with pytest.raises(ParameterError):
        emit(model, "pdf")


def test_witness_satisfies_model(model, engine):
    r = exhaustive_max(PackingParams(2, 4, 2, 1, 1), engine=engine)
    assert r.value == 5
    assert check_feasible_point(model, r.code.blocks)
    # overfull selection violates
    from subpack.gf import enumerate_subspaces

    all_blocks = list(enumerate_subspaces(4, 2, 2))
    assert not check_feasible_point(model, all_blocks)


def test_strengthening_rows(engine):
    m = build_model(PackingParams(2, 5, 3, 2, 2), strengthen=True, engine=engine)
    cov = [r for r in m.rows if r.name.startswith("cov")]
    st = [r for r in m.rows if r.name.startswith("st1_")]
    assert len(cov) == gaussian_binomial(5, 2, 2)
    assert len(st) == gaussian_binomial(5, 1, 2)
    assert all(r.rhs == engine.upper_value(2, 4, 2, 1, 2) == 10 for r in st)
    # strengthened model still round-trips in both formats
    assert parse_lp(emit_lp(m)) == parse_mps(emit_mps(m)) == normalize(m)


def test_index_file(model):
    lines = index_lines(model).strip().splitlines()
    assert len(lines) == 35
    assert lines[0].startswith("x0 ")
    encoding = lines[0].split(" ", 1)[1]
    assert encoding == "1000/0100"


def test_size_cap():
    with pytest.raises(SizeCapError) as exc:
        build_model(PackingParams(2, 6, 3, 2, 2), max_variables=100)
    assert exc.value.counts["variables"] == gaussian_binomial(6, 3, 2)


def test_variable_order_is_enumeration_order(model):
    from subpack.gf import enumerate_subspaces

    expected = [s.packed for s in enumerate_subspaces(4, 2, 2)]
    assert [b.packed for b in model.blocks] == expected
