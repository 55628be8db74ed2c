"""Paths, rank functions, and the coloring predicates of Hasse diagrams.

Distances are taken in the underlying undirected Hasse graph, since paths
may use ascending and descending steps.  ``distance_modular`` evaluates the
rank identity 2*rank(s v t) - rank(s) - rank(t), which equals the graph
distance exactly when the lattice is modular; ``mountainize`` and
``valleyize`` rewrite a simple path into a single-peak (single-dip) path of
no greater length.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    EnumerationCapExceeded,
    IncomparableEndpoints,
    NotConnected,
    NotConnectedPair,
    NotDiamondColored,
    NotRanked,
    ValidationError,
)
from .structures import Color, EdgeColoredPoset, _HasseCore


class Step(NamedTuple):
    target: str
    ascending: bool
    color: Color


class Path:
    """Walk in an edge-colored poset: a start vertex plus directed colored steps."""

    def __init__(self, poset: EdgeColoredPoset, start: str, steps: Iterable[Step] = ()):
        poset.index_of(start)
        self.poset = poset
        self.start = start
        steps = tuple(Step(*s) for s in steps)
        prev = start
        for s in steps:
            lower, upper = (prev, s.target) if s.ascending else (s.target, prev)
            if not poset.has_cover(lower, upper):
                raise ValidationError(f"no cover edge {lower!r} -> {upper!r} along path")
            if poset.edge_color(lower, upper) != s.color:
                raise ValidationError(
                    f"step {prev!r} -> {s.target!r} declares color {s.color}, "
                    f"edge has color {poset.edge_color(lower, upper)}"
                )
            prev = s.target
        self.steps = steps

    @classmethod
    def from_vertices(cls, poset: EdgeColoredPoset, vertices: Sequence[str]) -> "Path":
        """Build a path through consecutive cover-adjacent vertices."""
        if not vertices:
            raise ValidationError("a path needs at least one vertex")
        steps = []
        for a, b in zip(vertices, vertices[1:]):
            if poset.has_cover(a, b):
                steps.append(Step(b, True, poset.edge_color(a, b)))
            elif poset.has_cover(b, a):
                steps.append(Step(b, False, poset.edge_color(b, a)))
            else:
                raise ValidationError(f"{a!r} and {b!r} are not cover-adjacent")
        return cls(poset, vertices[0], steps)

    @property
    def end(self) -> str:
        return self.steps[-1].target if self.steps else self.start

    @property
    def length(self) -> int:
        return len(self.steps)

    def vertex_sequence(self) -> tuple[str, ...]:
        return (self.start,) + tuple(s.target for s in self.steps)

    def is_simple(self) -> bool:
        seq = self.vertex_sequence()
        return len(set(seq)) == len(seq)

    def apex(self) -> str | None:
        """The peak vertex when the path ascends then descends, else None."""
        dirs = [s.ascending for s in self.steps]
        k = 0
        while k < len(dirs) and dirs[k]:
            k += 1
        if any(dirs[k:]):
            return None
        return self.vertex_sequence()[k]

    def nadir(self) -> str | None:
        """The dip vertex when the path descends then ascends, else None."""
        dirs = [s.ascending for s in self.steps]
        k = 0
        while k < len(dirs) and not dirs[k]:
            k += 1
        if not all(dirs[k:]):
            return None
        return self.vertex_sequence()[k]

    def is_mountain(self) -> bool:
        return self.is_simple() and self.apex() is not None

    def is_valley(self) -> bool:
        return self.is_simple() and self.nadir() is not None

    def __repr__(self):
        return f"Path({' -> '.join(self.vertex_sequence())})"


@dataclass(frozen=True)
class RankFunction:
    """Total rank map; covers raise rank by exactly one, image is 0..length."""

    rank: dict[str, int]
    length: int

    def validate(self, poset: _HasseCore) -> None:
        values = set(self.rank.values())
        if values != set(range(self.length + 1)):
            raise NotRanked("rank image is not 0..length")
        for v in poset.vertices:
            for w in poset.ancestors(v):
                if self.rank[w] != self.rank[v] + 1:
                    raise NotRanked(f"cover {v!r} -> {w!r} does not raise rank by one")


def ascent_descent_counts(path: Path) -> dict[Color, tuple[int, int]]:
    """Per color: (ascending step count, descending step count)."""
    up: Counter = Counter()
    down: Counter = Counter()
    for s in path.steps:
        (up if s.ascending else down)[s.color] += 1
    return {c: (up.get(c, 0), down.get(c, 0)) for c in set(up) | set(down)}


def compute_rank(p: _HasseCore) -> RankFunction:
    """The unique rank function of a connected poset, or NotRanked."""
    if len(p) == 0:
        raise NotConnected("empty poset has no rank function")
    if not p.is_connected():
        raise NotConnected("rank functions are only unique on connected posets")
    level = {p.vertices[0]: 0}
    queue = deque([p.vertices[0]])
    while queue:
        v = queue.popleft()
        for w in p.ancestors(v):
            if w in level:
                if level[w] != level[v] + 1:
                    raise NotRanked(f"inconsistent levels at cover {v!r} -> {w!r}")
            else:
                level[w] = level[v] + 1
                queue.append(w)
        for w in p.descendants(v):
            if w in level:
                if level[w] != level[v] - 1:
                    raise NotRanked(f"inconsistent levels at cover {w!r} -> {v!r}")
            else:
                level[w] = level[v] - 1
                queue.append(w)
    # BFS assigns relative levels; a second pass catches cross edges.
    for a, b in ((x, y) for x in p.vertices for y in p.ancestors(x)):
        if level[b] != level[a] + 1:
            raise NotRanked(f"inconsistent levels at cover {a!r} -> {b!r}")
    low = min(level.values())
    rank = {v: l - low for v, l in level.items()}
    return RankFunction(rank, max(rank.values()))


def rank_via_path(p: EdgeColoredPoset, path: Path) -> int:
    """rank(start) plus the signed color-step sum; equals rank(end) when ranked."""
    if path.poset is not p and path.poset != p:
        raise ValidationError("path does not belong to the given poset")
    rf = compute_rank(p)
    counts = ascent_descent_counts(path)
    return rf.rank[path.start] + sum(a - d for a, d in counts.values())


class DiamondWitness(NamedTuple):
    bottom: str
    left: str
    right: str
    top: str


class CheckResult(NamedTuple):
    ok: bool
    witness: object

    def __bool__(self) -> bool:
        return self.ok


def check_diamond_colored(p: EdgeColoredPoset) -> CheckResult:
    """Within every diamond of covers, parallel edges must share a color."""
    n = len(p)
    for iu in range(n):
        u = p.vertices[iu]
        lowers = p.descendants(u)
        for a in range(len(lowers)):
            for b in range(a + 1, len(lowers)):
                s, t = lowers[a], lowers[b]
                common = sorted(set(p.descendants(s)) & set(p.descendants(t)), key=p.index_of)
                for bot in common:
                    if (
                        p.edge_color(bot, s) != p.edge_color(t, u)
                        or p.edge_color(bot, t) != p.edge_color(s, u)
                    ):
                        return CheckResult(False, DiamondWitness(bot, s, t, u))
    return CheckResult(True, None)


class VeeWitness(NamedTuple):
    kind: str  # "open-up" or "open-down"
    base: str
    left: str
    right: str
    closers: int


def check_topographically_balanced(p: _HasseCore) -> CheckResult:
    """Every non-chain length-two mountain is balanced by a unique valley, and dually."""
    n = len(p)
    ups = [set(p._up_adj[i]) for i in range(n)]
    downs = [set(p._down_adj[i]) for i in range(n)]
    for i in range(n):
        nbrs = sorted(ups[i])
        for a in range(len(nbrs)):
            for b in range(a + 1, len(nbrs)):
                closers = len(ups[nbrs[a]] & ups[nbrs[b]])
                if closers != 1:
                    return CheckResult(
                        False,
                        VeeWitness(
                            "open-up",
                            p.vertices[i],
                            p.vertices[nbrs[a]],
                            p.vertices[nbrs[b]],
                            closers,
                        ),
                    )
    for i in range(n):
        nbrs = sorted(downs[i])
        for a in range(len(nbrs)):
            for b in range(a + 1, len(nbrs)):
                closers = len(downs[nbrs[a]] & downs[nbrs[b]])
                if closers != 1:
                    return CheckResult(
                        False,
                        VeeWitness(
                            "open-down",
                            p.vertices[i],
                            p.vertices[nbrs[a]],
                            p.vertices[nbrs[b]],
                            closers,
                        ),
                    )
    return CheckResult(True, None)


def distance(p: _HasseCore, s: str, t: str) -> int:
    """Graph distance in the undirected Hasse diagram."""
    si, ti = p.index_of(s), p.index_of(t)
    if si == ti:
        return 0
    dist = {si: 0}
    queue = deque([si])
    while queue:
        i = queue.popleft()
        for j in p._up_adj[i] + p._down_adj[i]:
            if j not in dist:
                dist[j] = dist[i] + 1
                if j == ti:
                    return dist[j]
                queue.append(j)
    raise NotConnectedPair(f"{s!r} and {t!r} lie in different components")


def distance_modular(L, s: str, t: str) -> int:
    """Distance via ranks in a modular lattice: 2*rank(s v t) - rank(s) - rank(t)."""
    L.ensure_modular()
    rank = L.rank_function.rank
    via_join = 2 * rank[L.join(s, t)] - rank[s] - rank[t]
    via_meet = rank[s] + rank[t] - 2 * rank[L.meet(s, t)]
    if via_join != via_meet:
        raise NotRanked("rank identity failed; lattice is not modular")
    return via_join


def _erase_loops(vs: list[str]) -> list[str]:
    out: list[str] = []
    pos: dict[str, int] = {}
    for v in vs:
        if v in pos:
            for w in out[pos[v] + 1 :]:
                del pos[w]
            del out[pos[v] + 1 :]
        else:
            out.append(v)
            pos[v] = len(out) - 1
    return out


def _rewrite_path(L, path: Path, to_mountain: bool) -> Path:
    p = L.poset
    if path.poset is not p and path.poset != p:
        raise ValidationError("path does not belong to the given lattice")
    L.ensure_modular()
    rank = L.rank_function.rank
    vs = list(path.vertex_sequence())
    uppers = {v: set(p.ancestors(v)) for v in p.vertices}
    lowers = {v: set(p.descendants(v)) for v in p.vertices}

    while True:
        vs = _erase_loops(vs)
        k = len(vs) - 1
        j = None
        for m in range(1, k):
            before_up = rank[vs[m]] > rank[vs[m - 1]]
            after_up = rank[vs[m + 1]] > rank[vs[m]]
            if to_mountain and (not before_up) and after_up:
                j = m
                break
            if not to_mountain and before_up and not after_up:
                j = m
                break
        if j is None:
            break
        if to_mountain:
            closers = uppers[vs[j - 1]] & uppers[vs[j + 1]]
        else:
            closers = lowers[vs[j - 1]] & lowers[vs[j + 1]]
        if len(closers) != 1:
            raise NotRanked("balance failed mid-rewrite; lattice is not modular")
        (u,) = closers
        if j >= 2 and vs[j - 2] == u:
            del vs[j - 1 : j + 1]
        elif j + 2 <= k and vs[j + 2] == u:
            del vs[j : j + 2]
        else:
            vs[j] = u
    return Path.from_vertices(p, vs)


def mountainize(L, path: Path) -> Path:
    """Rewrite a simple path into a mountain path with the same endpoints.

    Never lengthens the path; on a shortest path the result keeps its length
    and peaks at the join of the endpoints.
    """
    return _rewrite_path(L, path, to_mountain=True)


def valleyize(L, path: Path) -> Path:
    """Dual of mountainize: the result dips at the meet of the endpoints."""
    return _rewrite_path(L, path, to_mountain=False)


@dataclass
class PathColorReport:
    """Exhaustive comparison of the ascending paths between two elements."""

    s: str
    t: str
    path_count: int
    color_multiset: tuple[Color, ...]
    multiset_ok: bool = True
    incomparable_pairs: int = 0
    incomparable_ok: bool = True
    comparable_pairs: int = 0
    comparable_with_equal_ends: int = 0

    @property
    def passed(self) -> bool:
        return self.multiset_ok and self.incomparable_ok


def _ascending_paths(L, s: str, t: str, cap: int) -> list[tuple[tuple[str, ...], tuple[Color, ...]]]:
    p = L.poset
    if not p.leq(s, t):
        raise IncomparableEndpoints(f"{s!r} is not below {t!r}")
    counts: dict[str, int] = {t: 1}

    def count(v: str) -> int:
        if v not in counts:
            counts[v] = sum(count(u) for u, _ in p.up_steps(v) if p.leq(u, t))
        return counts[v]

    total = count(s)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} ascending paths exceed cap {cap}")
    out: list[tuple[tuple[str, ...], tuple[Color, ...]]] = []
    stack = [(s, (s,), ())]
    while stack:
        v, verts, colors = stack.pop()
        if v == t:
            out.append((verts, colors))
            continue
        for u, c in reversed(p.up_steps(v)):
            if p.leq(u, t):
                stack.append((u, verts + (u,), colors + (c,)))
    out.sort()
    return out


def verify_path_colors(L, s: str, t: str, cap: int = 100_000, pair_cap: int = 4_000_000) -> PathColorReport:
    """Check that all ascending paths s -> t agree in length and color multiset.

    Additionally, whenever the second vertex of one path is incomparable to
    the second-to-last vertex of another, their first and last colors must
    coincide; comparable configurations are recorded, not asserted.
    """
    diamond = check_diamond_colored(L.poset)
    if not diamond.ok:
        raise NotDiamondColored(f"diamond violation at {diamond.witness}")
    L.ensure_modular()
    paths = _ascending_paths(L, s, t, cap)
    report = PathColorReport(
        s, t, len(paths), tuple(sorted(paths[0][1])) if paths else ()
    )
    for _, colors in paths:
        if tuple(sorted(colors)) != report.color_multiset:
            report.multiset_ok = False
            return report
    if len(paths) ** 2 > pair_cap:
        raise EnumerationCapExceeded(
            f"{len(paths)}^2 ordered path pairs exceed cap {pair_cap}"
        )
    p = L.poset
    for verts_a, colors_a in paths:
        if len(colors_a) < 2:
            continue
        for verts_b, colors_b in paths:
            r1, r_last = verts_a[1], verts_b[-2]
            if p.leq(r1, r_last) or p.leq(r_last, r1):
                report.comparable_pairs += 1
                if colors_a[0] == colors_b[-1]:
                    report.comparable_with_equal_ends += 1
            else:
                report.incomparable_pairs += 1
                if colors_a[0] != colors_b[-1]:
                    report.incomparable_ok = False
                    return report
    return report


def verify_path_colors_all(L, cap: int = 100_000) -> list[PathColorReport]:
    """Run verify_path_colors over every ordered pair s <= t."""
    p = L.poset
    reports = []
    for s in p.vertices:
        for t in p.vertices:
            if p.leq(s, t):
                reports.append(verify_path_colors(L, s, t, cap=cap))
    return reports
