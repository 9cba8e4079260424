"""Exact extremal numbers at desk scale, by two independent routes.

``brute_force_ex`` enumerates isomorphism classes of family-free graphs one
vertex at a time.  Level m holds one representative of every class of free
graphs on m vertices that can still sit inside an n-vertex free graph with
at least ``best`` edges, where ``best`` is the strongest known lower bound
(seed constructions plus an internal Turan seed).  The retained set is
complete: every induced subgraph of a free graph is free, and an m-vertex
induced subgraph of an n-vertex graph with e edges has at least
e - (C(n,2) - C(m,2)) edges, so every extremal graph keeps a full deletion
chain above the per-level bound.  Freeness of a child is decided by a search
restricted to embeddings through the new vertex, which is exact because the
parent is already known to be free.

``labeled_filter_ex`` is a deliberately different second oracle for n <= 7:
it materializes all 2^C(n,2) labeled graphs as a numpy vector of edge-set
bitmasks, knocks out every mask that contains some labeled copy of the
forbidden union, and reads the maximum popcount off the survivors.  The two
oracles share no search code, so their agreement is a real cross-check.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Callable, Iterable, Sequence

import numpy as np

from .canonical import certificate
from .containment import (
    ForbiddenFamily,
    contains_disjoint_family,
    contains_disjoint_family_through,
    is_free,
)
from .graph6 import decode_graph6, encode_graph6
from .graphs import SimpleGraph, complete, disjoint_union, turan


@dataclass(frozen=True)
class SearchBudget:
    """Caps on an enumeration run; None disables the corresponding cap."""

    max_candidates: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_candidates is not None and self.max_candidates < 1:
            raise ValueError(f"max_candidates must be >= 1, got {self.max_candidates}")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError(f"max_seconds must be positive, got {self.max_seconds}")


@dataclass(frozen=True)
class ExtremalResult:
    """Outcome of an extremal computation.

    ``witnesses`` lists the extremal graphs up to isomorphism, sorted by
    canonical certificate.  ``exhaustive`` is False only on partial results
    attached to a budget error, where ``ex_value`` is just the best known
    lower bound (-1 when no free graph on n vertices has been seen) and
    ``witnesses`` is empty.  ``candidates`` counts isomorphism classes
    admitted by the level search, or labeled free graphs for the filter
    oracle.
    """

    n: int
    family: ForbiddenFamily
    ex_value: int
    witnesses: tuple[SimpleGraph, ...]
    exhaustive: bool
    candidates: int

    def to_json_dict(self) -> dict:
        return {
            "schema": "extremal-result/1",
            "n": self.n,
            "family": [encode_graph6(p) for p in self.family],
            "ex_value": self.ex_value,
            "witness_count": len(self.witnesses),
            "witnesses": [encode_graph6(w) for w in self.witnesses],
            "exhaustive": self.exhaustive,
            "candidates": self.candidates,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExtremalResult":
        if data.get("schema") != "extremal-result/1":
            raise ValueError(f"unknown result schema: {data.get('schema')!r}")
        return cls(
            n=data["n"],
            family=ForbiddenFamily([decode_graph6(s) for s in data["family"]]),
            ex_value=data["ex_value"],
            witnesses=tuple(decode_graph6(s) for s in data["witnesses"]),
            exhaustive=data["exhaustive"],
            candidates=data["candidates"],
        )


class BudgetExceededError(RuntimeError):
    """Raised when a budget cap trips; ``partial`` holds what is known."""

    def __init__(self, message: str, partial: ExtremalResult):
        super().__init__(message)
        self.partial = partial


def _as_family(family) -> ForbiddenFamily:
    if isinstance(family, ForbiddenFamily):
        return family
    return ForbiddenFamily(family)


def _augment(parent: SimpleGraph, nb_mask: int) -> SimpleGraph:
    """Add one vertex adjacent to exactly the masked parent vertices."""
    m = parent.n
    rows = list(parent.adj)
    rows.append(nb_mask)
    mask = nb_mask
    while mask:
        low = mask & -mask
        rows[low.bit_length() - 1] |= 1 << m
        mask ^= low
    return SimpleGraph._from_rows(m + 1, rows)


def brute_force_ex(
    n: int,
    family: ForbiddenFamily | Sequence[SimpleGraph],
    budget: SearchBudget | None = None,
    seeds: Sequence[SimpleGraph] = (),
    hard_cap: int = 10,
    allow_large: bool = False,
) -> ExtremalResult:
    """Exact ex(n, family) with the complete witness list up to isomorphism.

    ``seeds`` are caller-supplied n-vertex graphs known to be free; they
    tighten the per-level pruning bound and are re-validated here (a wrong
    seed would silently corrupt the answer, so it raises instead).  Orders
    above ``hard_cap`` need ``allow_large=True``.  Raises ValueError when no
    graph on n vertices avoids the family, which happens exactly when some
    pattern with no edges fits inside n vertices.
    """
    fam = _as_family(family)
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")
    if n > hard_cap and not allow_large:
        raise ValueError(
            f"n={n} exceeds hard_cap={hard_cap}; pass allow_large=True to force"
        )

    if fam.total_order > n:
        # the union cannot fit at all, so the complete graph is the unique
        # extremal graph
        return ExtremalResult(n, fam, comb(n, 2), (complete(n),), True, 1)

    started = time.monotonic()
    best = -1
    for seed in seeds:
        if seed.n != n:
            raise ValueError(f"seed has {seed.n} vertices, expected {n}")
        if not is_free(seed, fam):
            raise ValueError("seed contains the forbidden family")
        best = max(best, seed.edge_count)
    r = fam.min_chromatic - 1
    if r >= 1:
        t = turan(n, r)
        assert is_free(t, fam), "internal seed must be free"
        best = max(best, t.edge_count)

    candidates = 0

    def check_budget():
        if budget is None:
            return
        over = None
        if budget.max_candidates is not None and candidates > budget.max_candidates:
            over = f"candidate cap {budget.max_candidates} exceeded"
        elif (
            budget.max_seconds is not None
            and time.monotonic() - started > budget.max_seconds
        ):
            over = f"time cap {budget.max_seconds}s exceeded"
        if over is not None:
            partial = ExtremalResult(n, fam, best, (), False, candidates)
            raise BudgetExceededError(over, partial)

    total_pairs = comb(n, 2)
    current: list[SimpleGraph] = []
    g1 = SimpleGraph(1)
    if contains_disjoint_family(g1, fam) is None:
        current = [g1]
        candidates = 1
    check_budget()

    for m in range(1, n):
        size = m + 1
        bound = best - (total_pairs - comb(size, 2))
        seen: dict[bytes, SimpleGraph] = {}
        for parent in current:
            for nb in range(1 << m):
                if parent.edge_count + nb.bit_count() < bound:
                    continue
                child = _augment(parent, nb)
                if contains_disjoint_family_through(child, fam, m):
                    continue
                cert = certificate(child)
                if cert in seen:
                    continue
                seen[cert] = child
                candidates += 1
                check_budget()
        current = [seen[c] for c in sorted(seen)]

    if not current:
        raise ValueError(
            f"every graph on {n} vertices contains the family; ex is undefined"
        )
    top = max(g.edge_count for g in current)
    ex_value = max(best, top)
    witnesses = tuple(
        g for g in current if g.edge_count == ex_value
    )
    assert witnesses, "a validated seed must be rediscovered at the top level"
    return ExtremalResult(n, fam, ex_value, witnesses, True, candidates)


def labeled_filter_ex(
    n: int, family: ForbiddenFamily | Sequence[SimpleGraph]
) -> ExtremalResult:
    """Exact ex(n, family) over the full labeled space, n <= 7.

    ``candidates`` reports the number of labeled free graphs.  Witnesses are
    deduplicated to isomorphism classes and sorted by certificate, so the
    result is directly comparable with brute_force_ex.
    """
    fam = _as_family(family)
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")
    if n > 7:
        raise ValueError(
            f"the labeled filter holds all 2^C(n,2) graphs, so n <= 7; got n={n}"
        )
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    index = {p: e for e, p in enumerate(pairs)}

    union = disjoint_union(list(fam))
    masks: set[int] = set()
    if union.n <= n:
        uedges = union.edges()
        for image in permutations(range(n), union.n):
            m = 0
            for a, b in uedges:
                x, y = image[a], image[b]
                if x > y:
                    x, y = y, x
                m |= 1 << index[(x, y)]
            masks.add(m)

    # C(7,2) = 21 edge slots at most, so 32-bit masks cover the whole space
    space = np.arange(1 << len(pairs), dtype=np.uint32)
    free = np.ones(space.shape, dtype=bool)
    for m in sorted(masks):
        mm = np.uint32(m)
        free &= (space & mm) != mm
    if not free.any():
        raise ValueError(
            f"every graph on {n} vertices contains the family; ex is undefined"
        )
    survivors = space[free]
    counts = np.bitwise_count(survivors)
    ex_value = int(counts.max())

    classes: dict[bytes, SimpleGraph] = {}
    for mask in survivors[counts == ex_value].tolist():
        rows = [0] * n
        for e, (i, j) in enumerate(pairs):
            if mask >> e & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = SimpleGraph._from_rows(n, rows)
        cert = certificate(g)
        if cert not in classes:
            classes[cert] = g
    witnesses = tuple(classes[c] for c in sorted(classes))
    return ExtremalResult(n, fam, ex_value, witnesses, True, int(free.sum()))


@dataclass(frozen=True)
class ThresholdRow:
    """One scanned order: formula value vs oracle value.

    ``oracle_value``/``witness_count``/``match`` are None when the budget
    tripped at this order, leaving it unknown.
    """

    n: int
    formula_value: int
    oracle_value: int | None
    witness_count: int | None
    match: bool | None


@dataclass(frozen=True)
class ThresholdReport:
    """Formula-vs-oracle comparison across a range of orders.

    ``first_agreement`` is the order starting the maximal trailing run of
    matching rows (None when the last row is unknown or disagrees), i.e. the
    empirical onset of the formula within the scanned window.
    """

    family: ForbiddenFamily
    rows: tuple[ThresholdRow, ...]
    first_agreement: int | None

    def to_json_dict(self) -> dict:
        return {
            "schema": "threshold-report/1",
            "family": [encode_graph6(p) for p in self.family],
            "rows": [
                {
                    "n": r.n,
                    "formula": r.formula_value,
                    "oracle": r.oracle_value,
                    "witness_count": r.witness_count,
                    "match": r.match,
                }
                for r in self.rows
            ],
            "first_agreement": self.first_agreement,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"{'n':>4}  {'formula':>8}  {'oracle':>7}  {'witnesses':>9}  match"]
        for r in self.rows:
            if r.match is None:
                oracle, wit, match = "?", "?", "unknown"
            else:
                oracle, wit = str(r.oracle_value), str(r.witness_count)
                match = "yes" if r.match else "NO"
            lines.append(
                f"{r.n:>4}  {r.formula_value:>8}  {oracle:>7}  {wit:>9}  {match}"
            )
        if self.first_agreement is None:
            lines.append("no trailing agreement in the scanned range")
        else:
            lines.append(f"formula agrees from n = {self.first_agreement} onward")
        return "\n".join(lines) + "\n"


def threshold_scan(
    family: ForbiddenFamily | Sequence[SimpleGraph],
    n_range: Iterable[int],
    formula: Callable[[int], int],
    budget: SearchBudget | None = None,
    seeds_provider: Callable[[int], Sequence[SimpleGraph]] | None = None,
    hard_cap: int = 10,
    allow_large: bool = False,
) -> ThresholdReport:
    """Compare a closed-form formula with the exact oracle over n_range.

    ``seeds_provider`` may supply known free graphs per order to speed the
    oracle up; it must return an empty sequence where it has nothing.
    Budget trips mark single rows unknown instead of aborting the scan.
    """
    fam = _as_family(family)
    rows: list[ThresholdRow] = []
    for n in n_range:
        formula_value = int(formula(n))
        seeds = tuple(seeds_provider(n)) if seeds_provider is not None else ()
        try:
            res = brute_force_ex(
                n, fam, budget=budget, seeds=seeds,
                hard_cap=hard_cap, allow_large=allow_large,
            )
        except BudgetExceededError:
            rows.append(ThresholdRow(n, formula_value, None, None, None))
            continue
        rows.append(
            ThresholdRow(
                n, formula_value, res.ex_value, len(res.witnesses),
                res.ex_value == formula_value,
            )
        )
    first = None
    for row in reversed(rows):
        if row.match:
            first = row.n
        else:
            break
    return ThresholdReport(fam, tuple(rows), first)


@dataclass(frozen=True)
class MaximalityReport:
    """Edge-maximality audit: ``violations`` lists non-edges whose addition
    leaves the graph free, so the graph is maximal iff that list is empty."""

    maximal: bool
    violations: tuple[tuple[int, int], ...]


def maximality_audit(
    g: SimpleGraph, family: ForbiddenFamily | Sequence[SimpleGraph]
) -> MaximalityReport:
    """Check that every single-edge addition creates the forbidden family.

    The input must itself be free (raises otherwise).  Each probe only
    searches embeddings through one endpoint of the added edge: an embedding
    avoiding that endpoint would live inside the original free graph.
    """
    fam = _as_family(family)
    if not is_free(g, fam):
        raise ValueError("graph already contains the family; maximality is moot")
    violations = []
    for u, v in g.non_edges():
        probe = g.with_edge(u, v)
        if not contains_disjoint_family_through(probe, fam, u):
            violations.append((u, v))
    return MaximalityReport(not violations, tuple(violations))
