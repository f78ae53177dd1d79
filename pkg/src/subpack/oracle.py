"""Ground-truth engine: exhaustive verification and exact/greedy search.

Coverage counting is keyed by the canonical RREF encoding of t-subspaces and
enumerates them inside each block ([k;t]_q per block), so the cost scales
with the code rather than with the ambient Grassmannian.  The exact-maximum
search is a branch-and-bound over the candidate block enumeration, with the
first block fixed by symmetry (the full linear group is transitive on
k-subspaces), coverage-capacity pruning, and the bound engine's value as an
incumbent cutoff; it degrades gracefully to a best-found answer when the
node budget runs out.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field as dc_field

from .bounds import BoundEngine, KnownValues
from .constructions import PackingCode, packing_from_dual
from .errors import ParameterError, SizeCapError
from .gf import Subspace, enumerate_subspaces, span_dim, subspaces_of
from .params import PackingParams
from .qcalc import gaussian_binomial

DEFAULT_SUBSET_BUDGET = 10_000_000
DEFAULT_NODE_BUDGET = 1_000_000
MAX_CANDIDATE_BLOCKS = 700


@dataclass
class VerifyReport:
    """Outcome of a packing or covering check.

    For packing mode the histogram maps coverage counts to the number of
    t-subspaces covered exactly that often (0 included), so the histogram
    totals the whole ambient Grassmannian.  For covering mode it maps span
    dimensions to the number of checked alpha-subsets.
    """

    mode: str
    valid: bool
    checked: int
    exhaustive: bool
    histogram: dict[int, int]
    worst_value: int
    worst_witness: tuple
    detail: dict = dc_field(default_factory=dict)

    def to_text(self) -> str:
        lines = [
            f"mode: {self.mode}",
            f"valid: {'yes' if self.valid else 'no'}",
            f"checked: {self.checked}{'' if self.exhaustive else ' (sampled, probabilistic)'}",
            "histogram: " + " ".join(f"{k}:{v}" for k, v in sorted(self.histogram.items())),
            f"worst: {self.worst_value} at {self.worst_witness}",
        ]
        return "\n".join(lines)


def verify_packing(code: PackingCode, t: int, lam: int) -> VerifyReport:
    """Count, for every t-subspace of any block, its number of containing blocks."""
    if t < 1 or t > code.k:
        raise ParameterError(f"need 1 <= t <= k={code.k}, got t={t}")
    if lam < 1:
        raise ParameterError("lam must be >= 1")
    counts: dict[tuple, int] = {}
    for b in code.blocks:
        for s in subspaces_of(b, t):
            counts[s.packed] = counts.get(s.packed, 0) + 1
    total_t = gaussian_binomial(code.n, t, code.q)
    hist: dict[int, int] = {}
    worst_key, worst = None, 0
    for key, c in counts.items():
        hist[c] = hist.get(c, 0) + 1
        if c > worst:
            worst_key, worst = key, c
    hist[0] = total_t - len(counts)
    return VerifyReport(
        mode="packing",
        valid=worst <= lam,
        checked=len(counts),
        exhaustive=True,
        histogram=hist,
        worst_value=worst,
        worst_witness=worst_key if worst_key is not None else (),
        detail={"t": t, "lam": lam, "blocks": code.size},
    )


def verify_covering(code: PackingCode, delta: int, alpha: int,
                    budget: int = DEFAULT_SUBSET_BUDGET, seed: int = 0) -> VerifyReport:
    """Check that every alpha-subset of blocks spans dimension >= k + delta.

    All subsets are checked when their number fits the budget; otherwise a
    seeded uniform sample of `budget` subsets is checked and the verdict is
    flagged as probabilistic.
    """
    if alpha < 2:
        raise ParameterError("alpha must be >= 2")
    nblocks = code.size
    need = code.k + delta
    hist: dict[int, int] = {}
    worst_span, worst_subset = None, ()
    if nblocks < alpha:
        return VerifyReport("covering", True, 0, True, {}, 0, (),
                            {"delta": delta, "alpha": alpha, "note": "fewer than alpha blocks"})
    total = math.comb(nblocks, alpha)
    exhaustive = total <= budget
    if exhaustive:
        subsets = itertools.combinations(range(nblocks), alpha)
        checked = total
    else:
        rng = random.Random(seed)
        subsets = (tuple(sorted(rng.sample(range(nblocks), alpha))) for _ in range(budget))
        checked = budget
    blocks = code.blocks
    for idxs in subsets:
        d = span_dim([blocks[i] for i in idxs])
        hist[d] = hist.get(d, 0) + 1
        if worst_span is None or d < worst_span:
            worst_span, worst_subset = d, idxs
    return VerifyReport(
        mode="covering",
        valid=worst_span >= need,
        checked=checked,
        exhaustive=exhaustive,
        histogram=hist,
        worst_value=worst_span,
        worst_witness=worst_subset,
        detail={"delta": delta, "alpha": alpha, "blocks": nblocks, "required_span": need},
    )


# --- search -----------------------------------------------------------------

def greedy_lower(p: PackingParams, seed: int = 0, passes: int = 1,
                 structured_start: bool = True) -> PackingCode:
    """Randomized greedy maximal packing; deterministic for a given seed.

    Each pass fills a shuffled block order greedily; with `structured_start`
    the dual-linkage construction (when available) is planted first and the
    passes extend it, which is markedly stronger than a cold start.
    """
    blocks = list(enumerate_subspaces(p.n, p.k, p.q))
    tidx = _coverage_indices(blocks, p.t)
    starts: list[list[int]] = [[]]
    if structured_start:
        dual = packing_from_dual(p)
        if dual is not None:
            key2idx = {b.packed: i for i, b in enumerate(blocks)}
            starts.append([key2idx[b.packed] for b in dual.blocks])
    rng = random.Random(seed)
    order = list(range(len(blocks)))
    best: list[int] = []
    for _ in range(max(1, passes)):
        rng.shuffle(order)
        for start in starts:
            cov: dict[int, int] = {}
            chosen = list(start)
            taken = set(start)
            for b in start:
                for i in tidx[b]:
                    cov[i] = cov.get(i, 0) + 1
            for b in order:
                if b in taken:
                    continue
                idxs = tidx[b]
                if all(cov.get(i, 0) < p.lam for i in idxs):
                    for i in idxs:
                        cov[i] = cov.get(i, 0) + 1
                    chosen.append(b)
            if len(chosen) > len(best):
                best = chosen
    return PackingCode(
        p.q, p.n, p.k, tuple(blocks[i] for i in sorted(best)),
        {"kind": "packing", "construction": "greedy", "params": p.label(),
         "seed": seed, "passes": passes, "verified_by": "greedy"},
    )


def _coverage_indices(blocks: list[Subspace], t: int) -> list[tuple[int, ...]]:
    index: dict[tuple, int] = {}
    out = []
    for b in blocks:
        idxs = []
        for s in subspaces_of(b, t):
            i = index.setdefault(s.packed, len(index))
            idxs.append(i)
        out.append(tuple(idxs))
    return out


@dataclass
class SearchResult:
    params: PackingParams
    value: int
    code: PackingCode
    complete: bool
    nodes: int
    cutoff: int | None


class _Done(Exception):
    pass


class _BudgetUp(Exception):
    pass


def exhaustive_max(p: PackingParams, budget: int = DEFAULT_NODE_BUDGET,
                   max_blocks: int = MAX_CANDIDATE_BLOCKS,
                   engine: BoundEngine | None = None) -> SearchResult:
    """Exact maximum packing size by branch-and-bound (budgeted).

    The incumbent is seeded from greedy passes and, when available, from the
    dual-linkage construction, so the result always sits between the
    certified lower bound and the engine's upper bound even if the node
    budget is exhausted (`complete` is False in that case).
    """
    nblocks = gaussian_binomial(p.n, p.k, p.q)
    if nblocks > max_blocks:
        raise SizeCapError(
            f"{nblocks} candidate blocks exceed the search cap {max_blocks}",
            blocks=nblocks, cap=max_blocks,
        )
    if engine is None:
        engine = BoundEngine(KnownValues.bundled())
    cutoff = engine.best_upper(p)
    blocks = list(enumerate_subspaces(p.n, p.k, p.q))

    # trivial regime: coverage can never exceed 1 when t = k
    if p.t == p.k:
        code = PackingCode(p.q, p.n, p.k, tuple(blocks),
                           {"kind": "packing", "construction": "all-blocks",
                            "params": p.label(), "verified_by": "construction"})
        return SearchResult(p, nblocks, code, True, 0, cutoff)

    tidx = _coverage_indices(blocks, p.t)
    per_block = len(tidx[0])
    ntsub = gaussian_binomial(p.n, p.t, p.q)
    lam = p.lam

    incumbent = greedy_lower(p, seed=0, passes=8)
    best_set = [i for i, b in enumerate(blocks) if b in set(incumbent.blocks)]
    dual = packing_from_dual(p)
    if dual is not None and dual.size > len(best_set):
        keyset = {b.packed for b in dual.blocks}
        best_set = [i for i, b in enumerate(blocks) if b.packed in keyset]
    best = len(best_set)

    nodes = 0
    complete = True
    if best < cutoff:
        cov = [0] * ntsub
        cap_left = lam * ntsub
        chosen: list[int] = [0]
        best_stack = list(best_set)
        for i in tidx[0]:
            cov[i] += 1
        cap_left -= per_block

        def dfs(cands: list[int], depth: int):
            nonlocal nodes, best, best_stack, cap_left
            nodes += 1
            if nodes > budget:
                raise _BudgetUp
            if depth > best:
                best = depth
                best_stack = chosen[:]
                if best >= cutoff:
                    raise _Done
            cap_bound = cap_left // per_block
            for i, b in enumerate(cands):
                if depth + min(len(cands) - i, cap_bound) <= best:
                    break
                idxs = tidx[b]
                for j in idxs:
                    cov[j] += 1
                cap_left -= per_block
                chosen.append(b)
                nxt = []
                for c in cands[i + 1:]:
                    ok = True
                    for j in tidx[c]:
                        if cov[j] >= lam:
                            ok = False
                            break
                    if ok:
                        nxt.append(c)
                dfs(nxt, depth + 1)
                chosen.pop()
                cap_left += per_block
                for j in idxs:
                    cov[j] -= 1

        # symmetry: some maximum packing contains the first canonical block
        first_cands = []
        for c in range(1, nblocks):
            if all(cov[j] < lam for j in tidx[c]):
                first_cands.append(c)
        try:
            dfs(first_cands, 1)
        except _Done:
            pass
        except _BudgetUp:
            complete = False
        best_set = best_stack

    code = PackingCode(
        p.q, p.n, p.k, tuple(blocks[i] for i in sorted(best_set)),
        {"kind": "packing", "construction": "branch-and-bound", "params": p.label(),
         "complete": complete, "verified_by": "search"},
    )
    assert len(code.blocks) == best
    return SearchResult(p, best, code, complete, nodes, cutoff)
