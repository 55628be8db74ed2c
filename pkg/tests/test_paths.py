"""Path machinery: counts, ranks, coloring predicates, distances, rewrites."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import edge_chain, hexagon, m3, n5, random_distributive_lattices, random_modular_lattices
from dclat import (
    EnumerationCapExceeded,
    NotConnected,
    NotConnectedPair,
    NotRanked,
    Path,
    Step,
    ValidationError,
    ascent_descent_counts,
    as_lattice,
    boolean_lattice,
    check_diamond_colored,
    check_topographically_balanced,
    compute_rank,
    distance,
    distance_modular,
    is_modular,
    mountainize,
    rank_via_path,
    valleyize,
    verify_path_colors,
    verify_path_colors_all,
)
from dclat.structures import EdgeColoredPoset
from _oracles import rank_assignments


class TestPathBasics:
    def test_invalid_step_rejected(self):
        p = edge_chain(2)
        with pytest.raises(ValidationError):
            Path(p, "c0", [Step("c2", True, 1)])

    def test_wrong_color_rejected(self):
        p = edge_chain(2)
        with pytest.raises(ValidationError):
            Path(p, "c0", [Step("c1", True, 9)])

    def test_empty_path_counts(self):
        p = edge_chain(2)
        path = Path(p, "c1")
        assert path.length == 0 and path.end == "c1"
        assert ascent_descent_counts(path) == {}

    def test_ascending_chain_counts(self):
        p = edge_chain(3, (1, 2, 1))
        path = Path.from_vertices(p, ["c0", "c1", "c2", "c3"])
        counts = ascent_descent_counts(path)
        assert counts == {1: (2, 0), 2: (1, 0)}

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_walk_counts_sum_to_length(self, seed):
        rng = random.Random(seed)
        b3 = boolean_lattice(3)
        cur = rng.choice(b3.vertices)
        seq = [cur]
        for _ in range(rng.randint(0, 8)):
            nbrs = [w for w, _ in b3.up_steps(cur) + b3.down_steps(cur)]
            cur = rng.choice(sorted(nbrs))
            seq.append(cur)
        path = Path.from_vertices(b3, seq)
        counts = ascent_descent_counts(path)
        assert sum(a + d for a, d in counts.values()) == path.length


class TestRank:
    def test_chain_ranks(self):
        p = edge_chain(4)
        rf = compute_rank(p)
        assert rf.length == 4
        assert [rf.rank[f"c{i}"] for i in range(5)] == list(range(5))

    def test_fig_lattice_length_is_poset_size(self, fig_poset, fig_lattice):
        assert compute_rank(fig_lattice).length == len(fig_poset)

    def test_pentagon_not_ranked(self):
        with pytest.raises(NotRanked):
            compute_rank(n5())
        assert rank_assignments(n5().vertices, [(a, b) for a, b, _ in n5().covers], 4) == []

    def test_disconnected_rejected(self):
        p = EdgeColoredPoset(["a", "b"], [])
        with pytest.raises(NotConnected):
            compute_rank(p)

    def test_unique_against_brute_force(self):
        p = m3()
        rf = compute_rank(p)
        assignments = rank_assignments(p.vertices, [(a, b) for a, b, _ in p.covers], len(p))
        assert assignments == [rf.rank]

    def test_validate_rejects_perturbation(self):
        p = edge_chain(3)
        rf = compute_rank(p)
        from dclat import RankFunction

        broken = dict(rf.rank)
        broken["c2"] += 1
        with pytest.raises(NotRanked):
            RankFunction(broken, rf.length).validate(p)


class TestRankViaPath:
    def test_zero_length_path(self):
        p = edge_chain(3)
        assert rank_via_path(p, Path(p, "c2")) == 2

    def test_bottom_to_top_chain(self, fig_lattice, fig_view):
        seq = [fig_view.minimum]
        while seq[-1] != fig_view.maximum:
            seq.append(fig_lattice.up_steps(seq[-1])[0][0])
        assert rank_via_path(fig_lattice, Path.from_vertices(fig_lattice, seq)) == fig_view.length

    def test_zigzag_matches_rank(self):
        b3 = boolean_lattice(3)
        rf = compute_rank(b3)
        seq = ["empty", "a0", "a0.a1", "a1", "a1.a2"]
        path = Path.from_vertices(b3, seq)
        assert rank_via_path(b3, path) == rf.rank["a1.a2"]


class TestDiamondColoring:
    def test_fig_lattice_is_diamond(self, fig_lattice):
        assert check_diamond_colored(fig_lattice).ok

    def test_mismatched_diamond_with_witness(self):
        p = EdgeColoredPoset(
            ["bot", "s", "t", "top"],
            [("bot", "s", 1), ("bot", "t", 2), ("s", "top", 1), ("t", "top", 2)],
        )
        res = check_diamond_colored(p)
        assert not res.ok
        assert {res.witness.left, res.witness.right} == {"s", "t"}

    def test_vacuous_when_no_diamond(self):
        assert check_diamond_colored(n5()).ok


class TestBalance:
    def test_single_diamond_balanced(self):
        assert check_topographically_balanced(boolean_lattice(2)).ok

    def test_open_vee_fails(self):
        p = EdgeColoredPoset(["r", "s", "t"], [("r", "s", 1), ("r", "t", 1)])
        res = check_topographically_balanced(p)
        assert not res.ok and res.witness.kind == "open-up" and res.witness.closers == 0

    def test_corpus_balance_iff_modular(self):
        for L in random_modular_lattices(12, 48, seed=4) + [n5(), hexagon()]:
            balanced = check_topographically_balanced(L).ok
            try:
                modular = is_modular(as_lattice(L))
            except Exception:
                modular = False
            assert balanced == modular


class TestDistance:
    def test_self_distance(self, fig_lattice):
        assert distance(fig_lattice, "v5", "v5") == 0

    def test_b2_atoms(self):
        b2 = boolean_lattice(2)
        assert distance(b2, "a0", "a1") == 2

    def test_disconnected_pair(self):
        p = EdgeColoredPoset(["a", "b"], [])
        with pytest.raises(NotConnectedPair):
            distance(p, "a", "b")

    def test_fig_lattice_bottom_to_top(self, fig_lattice, fig_view):
        assert distance(fig_lattice, fig_view.minimum, fig_view.maximum) == 6

    def test_comparable_pairs_use_rank_difference(self, fig_view):
        rank = fig_view.rank_function.rank
        p = fig_view.poset
        for s in p.vertices:
            for t in p.vertices:
                if p.leq(s, t):
                    assert distance_modular(fig_view, s, t) == rank[t] - rank[s]

    def test_formula_equals_bfs_everywhere(self):
        for L in random_modular_lattices(15, 40, seed=11):
            view = as_lattice(L)
            length = view.length
            for s in L.vertices:
                for t in L.vertices:
                    d = distance(L, s, t)
                    assert d == distance_modular(view, s, t)
                    assert d <= length


class TestRewrites:
    def test_mountain_path_unchanged(self):
        b2 = boolean_lattice(2)
        view = as_lattice(b2)
        path = Path.from_vertices(b2, ["a0", "a0.a1", "a1"])
        assert mountainize(view, path).vertex_sequence() == path.vertex_sequence()

    def test_valley_becomes_mountain(self):
        b2 = boolean_lattice(2)
        view = as_lattice(b2)
        path = Path.from_vertices(b2, ["a0", "empty", "a1"])
        out = mountainize(view, path)
        assert out.length == 2 and out.apex() == "a0.a1"

    def test_idempotent_and_never_longer(self):
        rng = random.Random(7)
        for L in random_modular_lattices(10, 32, seed=21):
            view = as_lattice(L)
            verts = L.vertices
            for _ in range(5):
                s, t = rng.choice(verts), rng.choice(verts)
                walk = _shortest_walk(L, s, t, rng)
                out = mountainize(view, walk)
                assert out.length <= walk.length
                assert out.is_mountain()
                again = mountainize(view, out)
                assert again.vertex_sequence() == out.vertex_sequence()

    def test_shortest_paths_hit_join_and_meet(self):
        rng = random.Random(3)
        for L in random_modular_lattices(10, 32, seed=31):
            view = as_lattice(L)
            verts = L.vertices
            for _ in range(5):
                s, t = rng.choice(verts), rng.choice(verts)
                walk = _shortest_walk(L, s, t, rng)
                up = mountainize(view, walk)
                down = valleyize(view, walk)
                assert up.length == walk.length and up.apex() == view.join(s, t)
                assert down.length == walk.length and down.nadir() == view.meet(s, t)


def _shortest_walk(L, s, t, rng):
    from collections import deque

    dist = {t: 0}
    queue = deque([t])
    while queue:
        v = queue.popleft()
        for w, _ in L.up_steps(v) + L.down_steps(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    seq = [s]
    while seq[-1] != t:
        nbrs = sorted(w for w, _ in L.up_steps(seq[-1]) + L.down_steps(seq[-1]) if dist[w] == dist[seq[-1]] - 1)
        seq.append(rng.choice(nbrs))
    return Path.from_vertices(L, seq)


class TestPathColors:
    def test_unique_path_chain(self):
        chain = edge_chain(3, (1, 2))
        view = as_lattice(chain)
        rep = verify_path_colors(view, "c0", "c3")
        assert rep.passed and rep.path_count == 1

    def test_diamond_swaps_the_pair(self):
        p = EdgeColoredPoset(
            ["bot", "s", "t", "top"],
            [("bot", "s", 1), ("bot", "t", 2), ("s", "top", 2), ("t", "top", 1)],
        )
        view = as_lattice(p)
        rep = verify_path_colors(view, "bot", "top")
        assert rep.passed
        assert rep.path_count == 2
        assert rep.color_multiset == (1, 2)
        assert rep.incomparable_pairs > 0

    def test_fig_lattice_exhaustive(self, fig_view):
        reports = verify_path_colors_all(fig_view)
        assert all(r.passed for r in reports)

    def test_random_lattices_exhaustive(self):
        for L in random_distributive_lattices(10, 32, seed=13):
            assert all(r.passed for r in verify_path_colors_all(as_lattice(L)))

    def test_cap_exceeded(self):
        b2 = boolean_lattice(2)
        view = as_lattice(b2)
        with pytest.raises(EnumerationCapExceeded):
            verify_path_colors(view, "empty", "a0.a1", cap=1)

    def test_mismatched_diamond_rejected(self):
        from dclat import NotDiamondColored

        p = EdgeColoredPoset(
            ["bot", "s", "t", "top"],
            [("bot", "s", 1), ("bot", "t", 2), ("s", "top", 1), ("t", "top", 2)],
        )
        with pytest.raises(NotDiamondColored):
            verify_path_colors(as_lattice(p), "bot", "top")

    def test_nonmodular_rejected(self):
        from dclat import NotModular

        with pytest.raises(NotModular):
            verify_path_colors(as_lattice(hexagon()), "bot", "top")


class TestRewriteErrors:
    def test_mountainize_requires_modular(self):
        from dclat import NotModular

        view = as_lattice(n5())
        path = Path.from_vertices(n5(), ["bot", "a"])
        with pytest.raises(NotModular):
            mountainize(view, path)

    def test_distance_modular_requires_modular(self):
        from dclat import NotModular

        with pytest.raises(NotModular):
            distance_modular(as_lattice(n5()), "a", "b")
