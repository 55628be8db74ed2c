"""Corrupted inputs must be detected, not silently verified.

Each test perturbs a known-good structure minimally and asserts the
relevant predicate or verifier notices.
"""

import pytest

from dclat import (
    EdgeColoredPoset,
    NotDiamondColored,
    ValidationError,
    as_lattice,
    check_diamond_colored,
    check_sublattice,
    check_topographically_balanced,
    extract_j,
    is_birkhoff_representable,
    is_modular,
    isomorphic,
)


def recolor_one_edge(lattice: EdgeColoredPoset) -> EdgeColoredPoset:
    covers = sorted(lattice.covers)
    a, b, c = covers[0]
    mutated = [(a, b, c + 1)] + covers[1:]
    return EdgeColoredPoset(lattice.vertices, mutated)


def test_single_recolored_edge_breaks_diamond(fig_lattice):
    mutated = recolor_one_edge(fig_lattice)
    assert not check_diamond_colored(mutated).ok
    ok, witness = is_birkhoff_representable(mutated)
    assert not ok and witness is None
    with pytest.raises(NotDiamondColored):
        extract_j(mutated)


def test_single_recolored_edge_breaks_isomorphism(fig_lattice):
    assert not isomorphic(fig_lattice, recolor_one_edge(fig_lattice))


def test_color_mutation_clears_edge_colored_flag(fig_lattice, fig_view):
    mutated = recolor_one_edge(fig_lattice)
    emb = check_sublattice(as_lattice(mutated), fig_view)
    assert emb.full_length and not emb.edge_colored


def test_removed_element_breaks_balance(fig_lattice):
    # dropping a mid-rank element leaves an open vee somewhere
    keep = [v for v in fig_lattice.vertices if v != "v2.v4.v5"]
    sub_covers = [
        (a, b, c) for a, b, c in fig_lattice.covers if a in keep and b in keep
    ]
    try:
        mutated = EdgeColoredPoset(keep, sub_covers)
    except ValidationError:
        pytest.skip("deletion already rejected at construction")
    res = check_topographically_balanced(mutated)
    assert not res.ok


def test_expected_poset_mismatch_is_detected(fig_poset, fig_lattice):
    from dclat import antichain_poset, build_J

    wrong = antichain_poset(6, color=2)
    assert not isomorphic(build_J(wrong).lattice, fig_lattice)
    assert not isomorphic(wrong, fig_poset)


def test_modularity_detects_missing_closure():
    # a copy of the three-atom diamond with one atom's top edge removed is
    # no longer a lattice at all; adding a bypass instead breaks the ranks
    bent = EdgeColoredPoset(
        ["bot", "a", "b", "c", "mid", "top"],
        [("bot", "a", 1), ("bot", "b", 1), ("bot", "c", 1),
         ("a", "mid", 1), ("mid", "top", 1), ("b", "top", 1), ("c", "top", 1)],
    )
    assert not is_modular(as_lattice(bent))
    assert not check_topographically_balanced(bent).ok
