import pytest

from subpack.bounds import BoundEngine, KnownValues
from subpack.constructions import PackingCode, construction_1, build_covering, packing_lower
from subpack.errors import SizeCapError
from subpack.gf import contains, enumerate_subspaces, hyperplanes
from subpack.oracle import (
    exhaustive_max,
    greedy_lower,
    verify_covering,
    verify_packing,
)
from subpack.params import CoveringParams, PackingParams
from subpack.qcalc import gaussian_binomial, q_int


@pytest.fixture(scope="module")
def engine():
    return BoundEngine(KnownValues.bundled())


def test_verify_packing_conflict():
    subs = list(enumerate_subspaces(4, 2, 2))
    # two planes through a common point
    from subpack.gf import span_dim

    b0 = subs[0]
    b1 = next(s for s in subs[1:] if span_dim([b0, s]) == 3)
    rep = verify_packing(PackingCode(2, 4, 2, (b0, b1), {}), 1, 1)
    assert not rep.valid and rep.worst_value == 2
    rep2 = verify_packing(PackingCode(2, 4, 2, (b0, b1), {}), 1, 2)
    assert rep2.valid


def test_verify_packing_single_block():
    b = next(iter(enumerate_subspaces(5, 3, 2)))
    for lam in (1, 2, 5):
        assert verify_packing(PackingCode(2, 5, 3, (b,), {}), 2, lam).valid


def test_verify_packing_histogram_totals():
    code = PackingCode(2, 4, 2, tuple(enumerate_subspaces(4, 2, 2)), {})
    rep = verify_packing(code, 2, 1)
    assert rep.valid
    assert rep.histogram[1] == gaussian_binomial(4, 2, 2)
    assert sum(rep.histogram.values()) == gaussian_binomial(4, 2, 2)
    rep1 = verify_packing(code, 1, 1)
    assert not rep1.valid
    assert sum(rep1.histogram.values()) == gaussian_binomial(4, 1, 2)


def test_verify_covering_construction():
    code = construction_1(CoveringParams(2, 4, 2, 2, 2))
    rep = verify_covering(code, 2, 2)
    assert rep.valid and rep.exhaustive and rep.worst_value == 4


def test_verify_covering_detects_flat_subsets():
    # alpha blocks inside a common hyperplane of their span violate covering
    subs = [s for s in enumerate_subspaces(4, 2, 2)]
    from subpack.gf import span_dim

    b0 = subs[0]
    b1 = next(s for s in subs[1:] if span_dim([b0, s]) == 3)
    rep = verify_covering(PackingCode(2, 4, 2, (b0, b1), {}), 2, 2)
    assert not rep.valid and rep.worst_value == 3


def test_verify_covering_sampling_flag():
    code = build_covering(CoveringParams(2, 7, 3, 2, 2))
    rep = verify_covering(code, 2, 2, budget=100, seed=5)
    assert not rep.exhaustive and rep.checked == 100
    assert rep.valid
    rep2 = verify_covering(code, 2, 2, budget=100, seed=5)
    assert rep2.histogram == rep.histogram  # deterministic for a seed


def test_verify_covering_vacuous_below_alpha():
    b = next(iter(enumerate_subspaces(4, 2, 2)))
    rep = verify_covering(PackingCode(2, 4, 2, (b,), {}), 2, 3)
    assert rep.valid and rep.checked == 0


def test_exhaustive_reference_points(engine):
    r = exhaustive_max(PackingParams(2, 4, 2, 1, 1), engine=engine)
    assert r.value == 5 and r.complete
    assert verify_packing(r.code, 1, 1).valid
    r2 = exhaustive_max(PackingParams(2, 4, 2, 2, 1), engine=engine)
    assert r2.value == 35 and r2.complete


def test_exhaustive_partial_spread_f2_5(engine):
    r = exhaustive_max(PackingParams(2, 5, 2, 1, 1), engine=engine)
    assert r.value == 9 and r.complete


def test_exhaustive_two_fold_lines_f2_5(engine):
    r = exhaustive_max(PackingParams(2, 5, 2, 1, 2), engine=engine)
    assert r.value == 20 and r.complete
    assert verify_packing(r.code, 1, 2).valid


def test_exhaustive_budget_cutoff(engine):
    p = PackingParams(2, 5, 3, 2, 2)
    r = exhaustive_max(p, budget=5_000, engine=engine)
    assert not r.complete
    assert packing_lower(p) <= r.value <= engine.best_upper(p)
    assert verify_packing(r.code, p.t, p.lam).valid


def test_exhaustive_block_cap():
    with pytest.raises(SizeCapError):
        exhaustive_max(PackingParams(2, 6, 3, 2, 2))


def test_greedy_properties():
    p = PackingParams(2, 5, 2, 1, 2)
    g1 = greedy_lower(p, seed=9, passes=3)
    g2 = greedy_lower(p, seed=9, passes=3)
    assert [b.packed for b in g1.blocks] == [b.packed for b in g2.blocks]
    assert verify_packing(g1, p.t, p.lam).valid
    g3 = greedy_lower(p, seed=10, passes=3)
    assert verify_packing(g3, p.t, p.lam).valid


def test_greedy_quality_floor():
    # empirical floor with the structured start (the registry target is 180)
    p = PackingParams(2, 6, 3, 2, 2)
    g = greedy_lower(p, seed=0, passes=20)
    assert g.size >= 135
    assert verify_packing(g, 2, 2).valid


def test_hyperplane_histogram_identities(engine):
    # for lam=2, k=n-2, t=n-3 codes: sum a_i = [n]_q, sum i a_i = (q+1)|C|,
    # sum i(i-1) a_i <= [n-2]_q |C|, where a_i counts hyperplanes containing
    # exactly i codewords
    for n, budget in ((4, 100_000), (5, 50_000)):
        p = PackingParams(2, n, n - 2, n - 3, 2)
        code = exhaustive_max(p, budget=budget, engine=engine).code
        hs = hyperplanes(2, n)
        counts = [sum(1 for b in code.blocks if contains(h, b)) for h in hs]
        hist = {}
        for c in counts:
            hist[c] = hist.get(c, 0) + 1
        assert sum(hist.values()) == q_int(n, 2)
        assert sum(i * a for i, a in hist.items()) == (2 + 1) * code.size
        assert sum(i * (i - 1) * a for i, a in hist.items()) <= q_int(n - 2, 2) * code.size


def test_sandwich_small_grid(engine):
    for n in range(2, 5):
        for k in range(1, n + 1):
            for t in range(1, k + 1):
                for lam in (1, 2):
                    p = PackingParams(2, n, k, t, lam)
                    r = exhaustive_max(p, budget=200_000, engine=engine)
                    assert packing_lower(p) <= r.value <= engine.best_upper(p)
