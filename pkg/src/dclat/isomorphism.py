"""Color-preserving isomorphism testing for colored posets.

Both structures are refined jointly by iterated neighbourhood signatures
(vertex color, then multisets of (direction, edge color, class) over
incident covers).  The stable classes seed a backtracking search with
forward candidate pruning; the worst case is exponential, which is fine at
desk scale.
"""

from __future__ import annotations

import sys

from .errors import ValidationError
from .structures import EdgeColoredPoset, Structure, VertexColoredPoset


class _Graph:
    """Uniform adjacency view: keys are ('u'|'d', color)."""

    def __init__(self, p: Structure):
        n = len(p)
        self.n = n
        self.nbrs = [dict() for _ in range(n)]  # key -> frozenset of node ids
        self.adj = [[] for _ in range(n)]  # list of (other, key)
        if isinstance(p, EdgeColoredPoset):
            self.init_label = [0] * n
            for a, b, c in p.covers:
                ia, ib = p.index_of(a), p.index_of(b)
                self.adj[ia].append((ib, ("u", c)))
                self.adj[ib].append((ia, ("d", c)))
        else:
            self.init_label = [("v", p.colors[v]) for v in p.vertices]
            for a, b in p.covers:
                ia, ib = p.index_of(a), p.index_of(b)
                self.adj[ia].append((ib, ("u", 0)))
                self.adj[ib].append((ia, ("d", 0)))
        for i in range(n):
            buckets = {}
            for j, key in self.adj[i]:
                buckets.setdefault(key, set()).add(j)
            self.nbrs[i] = {k: frozenset(v) for k, v in buckets.items()}


def _joint_refine(ga: _Graph, gb: _Graph):
    """Refine both graphs with a shared signature table until stable.

    Returns (classes_a, classes_b) as lists of class ids, or None when the
    class histograms ever disagree (certificate of non-isomorphism).
    """
    la = list(ga.init_label)
    lb = list(gb.init_label)
    canon = {}

    def norm(labels, g):
        out = []
        for i in range(g.n):
            sig = (labels[i], tuple(sorted((key, labels[j]) for j, key in g.adj[i])))
            if sig not in canon:
                canon[sig] = len(canon)
            out.append(canon[sig])
        return out

    def histogram(labels):
        h = {}
        for x in labels:
            h[x] = h.get(x, 0) + 1
        return h

    for _ in range(max(ga.n, 1)):
        canon.clear()
        na = norm(la, ga)
        nb = norm(lb, gb)
        if histogram(na) != histogram(nb):
            return None
        stable = len(set(na)) == len(set(la)) and len(set(nb)) == len(set(lb))
        la, lb = na, nb
        if stable:
            break
    return la, lb


def _invert(key: tuple[str, int]) -> tuple[str, int]:
    d, c = key
    return ("d" if d == "u" else "u", c)


def find_isomorphism(a: Structure, b: Structure) -> dict[str, str] | None:
    """A color- and edge-preserving bijection from a to b, or None.

    The witness maps vertex labels of ``a`` to vertex labels of ``b``.
    """
    if type(a) is not type(b):
        raise ValidationError("isomorphism requires two structures of the same kind")
    if len(a) != len(b):
        return None
    if isinstance(a, EdgeColoredPoset):
        ca = {}
        for _, _, c in a.covers:
            ca[c] = ca.get(c, 0) + 1
        cb = {}
        for _, _, c in b.covers:
            cb[c] = cb.get(c, 0) + 1
        if ca != cb:
            return None
    if len(a) == 0:
        return {}

    ga, gb = _Graph(a), _Graph(b)
    refined = _joint_refine(ga, gb)
    if refined is None:
        return None
    la, lb = refined

    by_class = {}
    for j, cls in enumerate(lb):
        by_class.setdefault(cls, set()).add(j)

    n = ga.n
    mapping = [-1] * n
    used = set()
    live = [set(by_class[la[i]]) for i in range(n)]
    trail: list[list[tuple[int, set]]] = []

    def pick() -> int:
        best, best_size = -1, None
        for i in range(n):
            if mapping[i] != -1:
                continue
            size = len(live[i])
            if best_size is None or size < best_size:
                best, best_size = i, size
        return best

    def consistent(i: int, j: int) -> bool:
        # every already-mapped neighbour of i must relate to j the same way
        for other, key in ga.adj[i]:
            m = mapping[other]
            if m != -1 and j not in gb.nbrs[m].get(_invert(key), frozenset()):
                return False
        return True

    def prune(i: int, j: int) -> bool:
        # forward-check: shrink unmapped neighbours of i to neighbours of j
        changes = []
        ok = True
        for other, key in ga.adj[i]:
            if mapping[other] != -1:
                continue
            allowed = gb.nbrs[j].get(key, frozenset())
            cur = live[other]
            new = cur & allowed
            if len(new) != len(cur):
                changes.append((other, cur))
                live[other] = new
                if not new - used:
                    ok = False
                    break
        trail.append(changes)
        return ok

    def undo():
        for other, old in trail.pop():
            live[other] = old

    def search() -> bool:
        i = pick()
        if i == -1:
            return True
        for j in sorted(live[i] - used):
            if not consistent(i, j):
                continue
            mapping[i] = j
            used.add(j)
            if prune(i, j) and search():
                return True
            undo()
            used.discard(j)
            mapping[i] = -1
        return False

    limit = sys.getrecursionlimit()
    if n + 100 > limit:
        sys.setrecursionlimit(n + 200)
    try:
        if not search():
            return None
    finally:
        sys.setrecursionlimit(limit)

    witness = {a.vertices[i]: b.vertices[mapping[i]] for i in range(n)}
    if not _verify_witness(a, b, witness):
        raise AssertionError("internal error: search produced an invalid witness")
    return witness


def _verify_witness(a: Structure, b: Structure, witness: dict[str, str]) -> bool:
    if sorted(witness) != sorted(a.vertices) or sorted(witness.values()) != sorted(b.vertices):
        return False
    if isinstance(a, EdgeColoredPoset):
        mapped = {(witness[x], witness[y], c) for x, y, c in a.covers}
        return mapped == set(b.covers)
    mapped = {(witness[x], witness[y]) for x, y in a.covers}
    if mapped != set(b.covers):
        return False
    return all(b.colors[witness[v]] == c for v, c in a.colors.items())


def isomorphic(a: Structure, b: Structure) -> bool:
    """True iff a color- and edge-preserving bijection exists."""
    return find_isomorphism(a, b) is not None
