"""Structural diagnostics for extremal graphs.

The extremal characterization says each extremal graph for a properly
ordered family splits as a clique joined onto a smaller extremal graph.
This module makes the machinery around that statement executable at desk
scale: minimum-internal-edge r-partitions (exact subset DP up to a cap,
multi-start local search above it), the degree-threshold W-set of a
partition, a minimum-degree audit, and the clique/inner-graph structure
audit itself.

The local search uses single-vertex moves: shift a vertex to the part where
it has strictly fewer neighbors.  Every move lowers the internal edge total,
so the search terminates, and a fixpoint is exactly a partition where each
vertex already sits in a part minimizing its internal degree.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .containment import ForbiddenFamily, contains_subgraph, is_free
from .graphs import SimpleGraph, complete, join


@dataclass(frozen=True)
class PartitionDiagnostics:
    """An r-partition with its internal-edge count and degree-threshold set.

    ``w_set`` holds the vertices whose internal degree (neighbors inside
    their own part) is at least theta * n.
    """

    parts: tuple[tuple[int, ...], ...]
    internal_edges: int
    theta: float
    w_set: tuple[int, ...]
    mode: str

    def to_json_dict(self) -> dict:
        return {
            "schema": "partition-diagnostics/1",
            "parts": [list(p) for p in self.parts],
            "internal_edges": self.internal_edges,
            "theta": self.theta,
            "w_set": list(self.w_set),
            "mode": self.mode,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def _part_masks(g: SimpleGraph, parts: Sequence[Sequence[int]]) -> list[int]:
    masks = []
    seen = 0
    for part in parts:
        m = 0
        for v in part:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range for n={g.n}")
            m |= 1 << v
        if m & seen:
            raise ValueError("parts overlap")
        seen |= m
        masks.append(m)
    if seen != (1 << g.n) - 1:
        raise ValueError("parts do not cover the vertex set")
    return masks


def _internal_edges(g: SimpleGraph, masks: Sequence[int]) -> int:
    total = 0
    for m in masks:
        total += sum((g.adj[v] & m).bit_count() for v in range(g.n) if m >> v & 1)
    return total // 2


def w_set(
    g: SimpleGraph, parts: Sequence[Sequence[int]], theta: float
) -> tuple[int, ...]:
    """Vertices with at least theta * n neighbors inside their own part."""
    if not 0 < theta < 1:
        raise ValueError(f"theta must lie in (0, 1), got {theta}")
    masks = _part_masks(g, parts)
    out = []
    for m in masks:
        for v in range(g.n):
            if m >> v & 1 and (g.adj[v] & m).bit_count() >= theta * g.n:
                out.append(v)
    return tuple(sorted(out))


def _exact_min_partition(g: SimpleGraph, r: int) -> list[int]:
    """Globally minimum internal-edge r-partition, as part bitmasks.

    Subset DP: split off one part at a time.  Each chosen part must contain
    the lowest remaining vertex, which halves the submask work without
    losing any unordered partition.  Ties prefer the numerically smallest
    part mask, so the result is deterministic.
    """
    n = g.n
    full = (1 << n) - 1
    esub = [0] * (1 << n)
    adj = g.adj
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        esub[mask] = esub[rest] + (adj[v] & rest).bit_count()

    prev = esub[:]
    choices: list[list[int]] = []
    for _ in range(r - 1):
        cur = [0] * (1 << n)
        ch = [0] * (1 << n)
        for s in range(1, 1 << n):
            low = s & -s
            body = s ^ low
            # the split-off part is t | low for every submask t of body
            t = body
            best = prev[body] + esub[low]
            best_t = low
            while t:
                part = t | low
                val = prev[s ^ part] + esub[part]
                if val < best or (val == best and part < best_t):
                    best, best_t = val, part
                t = (t - 1) & body
            cur[s], ch[s] = best, best_t
        prev = cur
        choices.append(ch)

    masks: list[int] = []
    s = full
    for ch in reversed(choices):
        part = ch[s] if s else 0
        masks.append(part)
        s ^= part
    masks.append(s)
    masks.reverse()
    return masks


def _local_search_once(g: SimpleGraph, r: int, rng: random.Random) -> list[int]:
    n = g.n
    adj = g.adj
    assign = [rng.randrange(r) for _ in range(n)]
    masks = [0] * r
    for v, i in enumerate(assign):
        masks[i] |= 1 << v
    moved = True
    while moved:
        moved = False
        for v in range(n):
            i = assign[v]
            row = adj[v]
            target = i
            best = (row & masks[i]).bit_count()
            for j in range(r):
                if j == i:
                    continue
                d = (row & masks[j]).bit_count()
                if d < best:
                    target, best = j, d
            if target != i:
                masks[i] ^= 1 << v
                masks[target] |= 1 << v
                assign[v] = target
                moved = True
    return masks


def is_vertex_move_optimal(g: SimpleGraph, parts: Sequence[Sequence[int]]) -> bool:
    """True iff no vertex has strictly fewer neighbors in another part."""
    masks = _part_masks(g, parts)
    for i, m in enumerate(masks):
        for v in range(g.n):
            if not m >> v & 1:
                continue
            here = (g.adj[v] & m).bit_count()
            for j, other in enumerate(masks):
                if j != i and (g.adj[v] & other).bit_count() < here:
                    return False
    return True


def min_internal_partition(
    g: SimpleGraph,
    r: int,
    mode: str = "exact",
    theta: float = 0.1,
    cap: int = 14,
    starts: int = 20,
    seed: int = 0,
) -> PartitionDiagnostics:
    """Partition V(g) into r parts minimizing the internal edge total.

    Exact mode is a subset DP and refuses n > cap; local-search mode runs
    ``starts`` seeded random restarts of the vertex-move descent and keeps
    the best partition found (ties broken by the lexicographically least
    part layout).  Local-search results are always vertex-move optimal but
    only heuristically minimum.
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    if not 0 < theta < 1:
        raise ValueError(f"theta must lie in (0, 1), got {theta}")
    if mode == "exact":
        if g.n > cap:
            raise ValueError(
                f"exact mode caps at n={cap} (got n={g.n}); use mode='local-search'"
            )
        masks = _exact_min_partition(g, r)
    elif mode == "local-search":
        if starts < 1:
            raise ValueError(f"need starts >= 1, got {starts}")
        rng = random.Random(seed)
        best_masks: list[int] | None = None
        best_key: tuple | None = None
        for _ in range(starts):
            masks = _local_search_once(g, r, rng)
            val = _internal_edges(g, masks)
            layout = tuple(tuple(v for v in range(g.n) if m >> v & 1) for m in masks)
            key = (val, layout)
            if best_key is None or key < best_key:
                best_key, best_masks = key, masks
        masks = best_masks
    else:
        raise ValueError(f"mode must be 'exact' or 'local-search', got {mode!r}")

    parts = tuple(tuple(v for v in range(g.n) if m >> v & 1) for m in masks)
    return PartitionDiagnostics(
        parts=parts,
        internal_edges=_internal_edges(g, masks),
        theta=theta,
        w_set=w_set(g, parts, theta) if g.n else (),
        mode=mode,
    )


def min_degree_audit(g: SimpleGraph, r: int, theta: float) -> bool:
    """True iff the minimum degree exceeds (1 - 1/r - theta) * n."""
    if g.n < 1:
        raise ValueError("minimum degree needs at least one vertex")
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    if not 0 < theta < 1:
        raise ValueError(f"theta must lie in (0, 1), got {theta}")
    return min(g.degrees()) > (1 - 1 / r - theta) * g.n


def dominating_clique(g: SimpleGraph) -> tuple[int, ...]:
    """All universal vertices (degree n-1); pairwise adjacent by definition."""
    full = (1 << g.n) - 1
    return tuple(
        v for v in range(g.n) if g.adj[v] == full ^ (1 << v)
    )


@dataclass(frozen=True)
class StructureAudit:
    """Clique-join decomposition report for a family-free graph.

    q universal vertices give ell = q + 1.  The graph always equals the join
    of its universal set with the rest; ``shape_ok`` re-verifies that by
    reconstruction.  ``inner_free`` and ``expected_inner_edges`` are None
    when ell exceeds the family size (flagged by ``ell_in_range``), which
    the characterization rules out for genuine extremal graphs.
    """

    q: int
    ell: int
    ell_in_range: bool
    shape_ok: bool
    inner_free: bool | None
    inner_edges: int
    expected_inner_edges: int | None
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "schema": "structure-audit/1",
            "q": self.q,
            "ell": self.ell,
            "ell_in_range": self.ell_in_range,
            "shape_ok": self.shape_ok,
            "inner_free": self.inner_free,
            "inner_edges": self.inner_edges,
            "expected_inner_edges": self.expected_inner_edges,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def structure_audit(
    g: SimpleGraph,
    family: ForbiddenFamily | Sequence[SimpleGraph],
    ex_provider: Callable[[int, int], int],
) -> StructureAudit:
    """Check the clique-join shape of a family-free graph.

    Passes iff the universal-vertex count q gives ell = q + 1 within the
    family, the graph is exactly K_q joined to the remainder H, H avoids
    F_ell, and e(H) matches ex_provider(n - q, ell).
    """
    fam = family if isinstance(family, ForbiddenFamily) else ForbiddenFamily(family)
    if not is_free(g, fam):
        raise ValueError("graph contains the family; structure audit expects free input")
    clique = dominating_clique(g)
    q = len(clique)
    ell = q + 1
    in_range = ell <= len(fam)
    others = [v for v in range(g.n) if v not in clique]
    inner = g.induced(others)

    rebuilt = join([complete(q), inner]) if q else inner
    perm = [0] * g.n
    for new, old in enumerate(list(clique) + others):
        perm[old] = new
    shape_ok = g.relabel(perm) == rebuilt

    inner_free: bool | None = None
    expected: int | None = None
    if in_range:
        inner_free = contains_subgraph(inner, fam[ell - 1]) is None
        expected = ex_provider(g.n - q, ell)
    passed = bool(
        in_range and shape_ok and inner_free and inner.edge_count == expected
    )
    return StructureAudit(
        q=q,
        ell=ell,
        ell_in_range=in_range,
        shape_ok=shape_ok,
        inner_free=inner_free,
        inner_edges=inner.edge_count,
        expected_inner_edges=expected,
        passed=passed,
    )
