"""The colored correspondence between posets and distributive lattices.

``build_J`` sends a vertex-colored poset to its lattice of order ideals
(edges colored by the added vertex); ``build_M`` is the filter-side dual.
``extract_j`` / ``extract_m`` recover the vertex-colored posets of join and
meet irreducibles.  The verification suites here confirm, instance by
instance, that these constructions invert each other and commute with
dual, recoloring, disjoint sum, and product.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    InvalidDescendantSet,
    NotDiamondColored,
    NotDistributive,
    SizeCapExceeded,
    UnknownVertex,
    ValidationError,
)
from .isomorphism import find_isomorphism
from .lattice import LatticeView, as_lattice, is_boolean, is_distributive_fast
from .paths import check_diamond_colored, compute_rank
from .report import Report
from .structures import (
    Color,
    EdgeColoredPoset,
    VertexColoredPoset,
    cartesian_product,
    disjoint_sum,
    dual,
    recolor,
    _bits,
)

DEFAULT_ELEMENT_CAP = 1 << 20
VERIFY_SIZE_LIMIT = 512


def _unique_labels(raw: list[str]) -> list[str]:
    seen: dict[str, int] = {}
    out = []
    for lab in raw:
        if lab not in seen:
            seen[lab] = 1
            out.append(lab)
        else:
            seen[lab] += 1
            out.append(f"{lab}_{seen[lab]}")
    return out


class IdealLattice:
    """Lattice of order ideals (or filters) of a source poset.

    Elements are vertex subsets encoded as bitmasks over the source's
    declaration order; element order is ascending bitmask value, which is a
    linear extension of containment.
    """

    def __init__(self, source: VertexColoredPoset, mode: str, masks: list[int], lattice: EdgeColoredPoset):
        self.source = source
        self.mode = mode  # "ideal" | "filter"
        self.masks = tuple(masks)
        self.lattice = lattice
        self.mask_of_label = dict(zip(lattice.vertices, masks))
        self.label_of_mask = {m: v for v, m in self.mask_of_label.items()}

    def members(self, label: str) -> frozenset[str]:
        if label not in self.mask_of_label:
            raise UnknownVertex(f"unknown element {label!r}")
        m = self.mask_of_label[label]
        return frozenset(self.source.vertices[i] for i in _bits(m))

    def label_for(self, subset: Iterable[str]) -> str:
        m = 0
        for v in subset:
            m |= 1 << self.source.index_of(v)
        if m not in self.label_of_mask:
            raise UnknownVertex(f"{sorted(subset)} is not an element of the {self.mode} lattice")
        return self.label_of_mask[m]

    def __len__(self) -> int:
        return len(self.masks)

    def __repr__(self):
        return f"IdealLattice(mode={self.mode!r}, {len(self)} elements)"


def _subset_label(P: VertexColoredPoset, mask: int) -> str:
    if mask == 0:
        return "empty"
    return ".".join(P.vertices[i] for i in _bits(mask))


def _cover_down_masks(P: VertexColoredPoset) -> list[int]:
    out = []
    for v in P.vertices:
        m = 0
        for w in P.descendants(v):
            m |= 1 << P.index_of(w)
        out.append(m)
    return out


def _cover_up_masks(P: VertexColoredPoset) -> list[int]:
    out = []
    for v in P.vertices:
        m = 0
        for w in P.ancestors(v):
            m |= 1 << P.index_of(w)
        out.append(m)
    return out


def enumerate_ideal_masks(P: VertexColoredPoset, cap: int = DEFAULT_ELEMENT_CAP) -> list[int]:
    """All order ideals of P as bitmasks, ascending.

    Depth-first extension along a linear extension; a vertex may enter only
    once its lower covers are present.
    """
    n = len(P)
    order = list(P._at)  # topological ids
    down = _cover_down_masks(P)
    out: list[int] = []

    def rec(k: int, cur: int):
        if k == n:
            if len(out) >= cap:
                raise SizeCapExceeded(f"ideal count exceeds cap {cap}")
            out.append(cur)
            return
        v = order[k]
        rec(k + 1, cur)
        if down[v] & cur == down[v]:
            rec(k + 1, cur | (1 << v))

    rec(0, 0)
    out.sort()
    return out


def build_J(P: VertexColoredPoset, cap: int = DEFAULT_ELEMENT_CAP, verify: bool | None = None) -> IdealLattice:
    """The diamond-colored distributive lattice of order ideals of P.

    Ideals are ordered by containment; x -> y exactly when y adds one
    vertex, maximal in y, and the edge takes that vertex's color.
    """
    masks = enumerate_ideal_masks(P, cap)
    labels = _unique_labels([_subset_label(P, m) for m in masks])
    label_of = dict(zip(masks, labels))
    down = _cover_down_masks(P)
    covers = []
    for m in masks:
        lab = label_of[m]
        for i, v in enumerate(P.vertices):
            if not (m >> i) & 1 and down[i] & m == down[i]:
                covers.append((lab, label_of[m | (1 << i)], P.colors[v]))
    lattice = EdgeColoredPoset(labels, covers)
    out = IdealLattice(P, "ideal", masks, lattice)
    if verify or (verify is None and len(masks) <= VERIFY_SIZE_LIMIT):
        _verify_subset_lattice(out)
    return out


def build_M(P: VertexColoredPoset, cap: int = DEFAULT_ELEMENT_CAP, verify: bool | None = None) -> IdealLattice:
    """The diamond-colored distributive lattice of filters of P.

    Filters are ordered by reverse containment; x -> y exactly when x drops
    one of its minimal vertices, and the edge takes that vertex's color.
    """
    full = (1 << len(P)) - 1
    masks = sorted(full ^ m for m in enumerate_ideal_masks(P, cap))
    labels = _unique_labels([_subset_label(P, m) for m in masks])
    label_of = dict(zip(masks, labels))
    down = _cover_down_masks(P)
    covers = []
    for m in masks:
        lab = label_of[m]
        for i, v in enumerate(P.vertices):
            # v minimal in the filter m: nothing of m strictly below it
            if (m >> i) & 1 and down[i] & m == 0:
                covers.append((lab, label_of[m ^ (1 << i)], P.colors[v]))
    lattice = EdgeColoredPoset(labels, covers)
    out = IdealLattice(P, "filter", masks, lattice)
    if verify or (verify is None and len(masks) <= VERIFY_SIZE_LIMIT):
        _verify_subset_lattice(out)
    return out


def _verify_subset_lattice(il: IdealLattice) -> None:
    """Postconditions of build_J / build_M, checked on the built object.

    The reachability order must coincide with (reverse) containment and the
    family must be closed under union and intersection; together these prove
    the lattice distributive with join/meet given by the set operations.
    Diamond coloring, the rank formula, and the extremes are checked
    directly.
    """
    P, lat, masks = il.source, il.lattice, il.masks
    mask_set = set(masks)
    n = len(masks)
    ids = {lab: i for i, lab in enumerate(lat.vertices)}
    reverse = il.mode == "filter"
    for i in range(n):
        mi = masks[i]
        for k in range(i + 1, n):
            mk = masks[k]
            if (mi | mk) not in mask_set or (mi & mk) not in mask_set:
                raise ValidationError("element family is not closed under union/intersection")
            contained = mi & mk == mi
            contains = mi & mk == mk
            li, lk = lat.vertices[i], lat.vertices[k]
            if reverse:
                contained, contains = contains, contained
            if lat.leq(li, lk) != contained or lat.leq(lk, li) != contains:
                raise ValidationError("lattice order does not match containment")
    diamond = check_diamond_colored(lat)
    if not diamond.ok:
        raise ValidationError(f"ideal lattice is not diamond-colored: {diamond.witness}")
    rf = compute_rank(lat)
    full = (1 << len(P)) - 1
    for lab, m in il.mask_of_label.items():
        expect = m.bit_count() if not reverse else len(P) - m.bit_count()
        if rf.rank[lab] != expect:
            raise ValidationError(f"rank of {lab!r} is {rf.rank[lab]}, expected {expect}")
    lo, hi = (0, full) if not reverse else (full, 0)
    if il.mask_of_label[lat.minimal_elements()[0]] != lo or il.mask_of_label[lat.maximal_elements()[0]] != hi:
        raise ValidationError("extremes of the subset lattice are wrong")


def principal_ideal(P: VertexColoredPoset, v: str) -> frozenset[str]:
    """All vertices below v, inclusive; the ideal generated by v."""
    return P.down_set(v)


def principal_filter(P: VertexColoredPoset, v: str) -> frozenset[str]:
    return P.up_set(v)


@dataclass
class IrreduciblePoset:
    """Vertex-colored poset of the join (or meet) irreducibles of a lattice."""

    poset: VertexColoredPoset
    provenance: str  # "join" | "meet"


def _require_dcdl(view: LatticeView) -> None:
    diamond = check_diamond_colored(view.poset)
    if not diamond.ok:
        raise NotDiamondColored(f"diamond violation at {diamond.witness}")
    if not is_distributive_fast(view):
        raise NotDistributive("lattice is not distributive")


def _coerce_view(L) -> LatticeView:
    if isinstance(L, LatticeView):
        return L
    if isinstance(L, IdealLattice):
        return as_lattice(L.lattice)
    return as_lattice(L)


def extract_j(L) -> IrreduciblePoset:
    """Poset of elements covering exactly one element, colored by that edge."""
    view = _coerce_view(L)
    _require_dcdl(view)
    p = view.poset
    irr = view.join_irreducibles()
    if len(irr) != view.length:
        raise NotDistributive(
            f"{len(irr)} join irreducibles for length {view.length}; lattice cannot be distributive"
        )
    colors = {}
    for x in irr:
        (below,) = p.descendants(x)
        colors[x] = p.edge_color(below, x)
    covers = p.induced_cover_pairs(irr)
    return IrreduciblePoset(VertexColoredPoset(irr, covers, colors), "join")


def extract_m(L) -> IrreduciblePoset:
    """Poset of elements covered by exactly one element, colored by that edge."""
    view = _coerce_view(L)
    _require_dcdl(view)
    p = view.poset
    irr = view.meet_irreducibles()
    if len(irr) != view.length:
        raise NotDistributive(
            f"{len(irr)} meet irreducibles for length {view.length}; lattice cannot be distributive"
        )
    colors = {}
    for x in irr:
        (above,) = p.ancestors(x)
        colors[x] = p.edge_color(x, above)
    covers = p.induced_cover_pairs(irr)
    return IrreduciblePoset(VertexColoredPoset(irr, covers, colors), "meet")


def cover_color_profile(il: IdealLattice, x: str) -> tuple[tuple[Color, ...], tuple[Color, ...]]:
    """(colors of edges above x, colors of edges below x), cross-checked.

    In the ideal lattice, the colors below an element are the colors of its
    maximal vertices and those above are the colors of its addable vertices;
    both are compared against the incident Hasse edges before returning.
    """
    P = il.source
    m = il.mask_of_label[x] if x in il.mask_of_label else il.mask_of_label[il.label_for([x])]
    down = _cover_down_masks(P)
    up = _cover_up_masks(P)
    if il.mode == "ideal":
        # edges below an ideal drop one of its maximal vertices; edges above add
        removable = [i for i in _bits(m) if up[i] & m == 0]
        addable = [i for i in range(len(P)) if not (m >> i) & 1 and down[i] & m == down[i]]
        down_ids, up_ids = removable, addable
    else:
        # edges above a filter drop one of its minimal vertices; edges below add
        removable = [i for i in _bits(m) if down[i] & m == 0]
        addable = [i for i in range(len(P)) if not (m >> i) & 1 and up[i] & m == up[i]]
        down_ids, up_ids = addable, removable
    down_colors = tuple(sorted(P.colors[P.vertices[i]] for i in down_ids))
    up_colors = tuple(sorted(P.colors[P.vertices[i]] for i in up_ids))
    lab = il.label_of_mask[m]
    edge_down = tuple(sorted(c for _, c in il.lattice.down_steps(lab)))
    edge_up = tuple(sorted(c for _, c in il.lattice.up_steps(lab)))
    if edge_down != down_colors or edge_up != up_colors:
        raise ValidationError(
            f"cover color profile of {lab!r} disagrees with incident edges"
        )
    return up_colors, down_colors


def verify_fundamental(L) -> Report:
    """Both lattice-side roundtrips through the irreducible posets.

    Rebuilds the lattice from its join irreducibles and from its meet
    irreducibles and demands exact color-preserving isomorphisms.
    """
    view = _coerce_view(L)
    report = Report("lattice roundtrips through irreducibles")
    jp = extract_j(view)
    mp = extract_m(view)
    report.record("join and meet irreducible counts equal the length",
                  len(jp.poset) == view.length == len(mp.poset))
    wit_j = find_isomorphism(view.poset, build_J(jp.poset).lattice)
    report.record("lattice rebuilt from join irreducibles", wit_j is not None)
    wit_m = find_isomorphism(view.poset, build_M(mp.poset).lattice)
    report.record("lattice rebuilt from meet irreducibles", wit_m is not None)
    report.details["join_witness"] = wit_j
    report.details["meet_witness"] = wit_m
    return report


def verify_fundamental_poset(P: VertexColoredPoset) -> Report:
    """Both poset-side roundtrips, plus the principal-ideal and profile checks."""
    report = Report("poset roundtrips through subset lattices")
    jl = build_J(P)
    wit_j = find_isomorphism(P, extract_j(jl).poset)
    report.record("poset recovered from its ideal lattice", wit_j is not None)
    ml = build_M(P)
    wit_m = find_isomorphism(P, extract_m(ml).poset)
    report.record("poset recovered from its filter lattice", wit_m is not None)
    # join irreducibles of the ideal lattice are exactly the principal ideals
    principal = {frozenset(principal_ideal(P, v)) for v in P.vertices}
    irreducible = {jl.members(x) for x in as_lattice(jl.lattice).join_irreducibles()}
    report.record("join irreducibles are the principal ideals", principal == irreducible)
    profile_ok = True
    try:
        for lab in jl.lattice.vertices:
            cover_color_profile(jl, lab)
        for lab in ml.lattice.vertices:
            cover_color_profile(ml, lab)
    except ValidationError:
        profile_ok = False
    report.record("cover color profiles match incident edges", profile_ok)
    report.details["join_witness"] = wit_j
    report.details["meet_witness"] = wit_m
    return report


def is_birkhoff_representable(L) -> tuple[bool, VertexColoredPoset | None]:
    """A distributive lattice arises from a vertex-colored poset iff diamond-colored.

    When it does, the witness poset is materialized and its ideal lattice is
    checked against L before returning.
    """
    view = _coerce_view(L)
    if not is_distributive_fast(view):
        raise NotDistributive("lattice is not distributive")
    if not check_diamond_colored(view.poset).ok:
        return False, None
    witness = extract_j(view).poset
    if find_isomorphism(view.poset, build_J(witness).lattice) is None:
        raise ValidationError("witness poset failed to rebuild the lattice")
    return True, witness


def verify_transform_identities(
    P: VertexColoredPoset, Q: VertexColoredPoset, sigma: Mapping[Color, Color]
) -> Report:
    """How the ideal/filter constructions interact with *, recoloring, +, x.

    Covers the six poset-side identities (ideal and filter lattices of the
    dual, the recoloring, and the disjoint sum) and the six lattice-side
    identities (irreducibles of the dual, the recoloring, and the product).
    """
    report = Report("transform identities for the subset-lattice constructions")

    def iso(a, b) -> bool:
        return find_isomorphism(a, b) is not None

    JP, JQ = build_J(P), build_J(Q)
    MP = build_M(P)
    report.record("ideals of the dual = dual of the ideals",
                  iso(build_J(dual(P)).lattice, dual(JP.lattice)))
    report.record("ideals of a recoloring = recoloring of the ideals",
                  iso(build_J(recolor(P, sigma)).lattice, recolor(JP.lattice, sigma)))
    report.record("ideals of a disjoint sum = product of the ideals",
                  iso(build_J(disjoint_sum(P, Q)).lattice, cartesian_product(JP.lattice, JQ.lattice)))
    report.record("filters of the dual = dual of the filters",
                  iso(build_M(dual(P)).lattice, dual(MP.lattice)))
    report.record("filters of a recoloring = recoloring of the filters",
                  iso(build_M(recolor(P, sigma)).lattice, recolor(MP.lattice, sigma)))
    report.record("filters of a disjoint sum = product of the filters",
                  iso(build_M(disjoint_sum(P, Q)).lattice, cartesian_product(MP.lattice, build_M(Q).lattice)))

    L, K = JP.lattice, JQ.lattice
    product = cartesian_product(L, K)
    report.record("join irreducibles of the dual = dual of the join irreducibles",
                  iso(extract_j(dual(L)).poset, dual(extract_j(L).poset)))
    report.record("join irreducibles of a recoloring = recoloring of join irreducibles",
                  iso(extract_j(recolor(L, sigma)).poset, recolor(extract_j(L).poset, sigma)))
    report.record("join irreducibles of a product = disjoint sum of join irreducibles",
                  iso(extract_j(product).poset, disjoint_sum(extract_j(L).poset, extract_j(K).poset)))
    report.record("meet irreducibles of the dual = dual of meet irreducibles",
                  iso(extract_m(dual(L)).poset, dual(extract_m(L).poset)))
    report.record("meet irreducibles of a recoloring = recoloring of meet irreducibles",
                  iso(extract_m(recolor(L, sigma)).poset, recolor(extract_m(L).poset, sigma)))
    report.record("meet irreducibles of a product = disjoint sum of meet irreducibles",
                  iso(extract_m(product).poset, disjoint_sum(extract_m(L).poset, extract_m(K).poset)))
    return report


@dataclass
class IntervalBooleanResult:
    """Whether [bound, t] matches the subset lattice built from the cover set."""

    bound: str
    contains_set: bool
    matches: bool
    boolean: bool

    @property
    def verdict(self) -> bool:
        return self.contains_set and self.matches and self.boolean


def descendant_interval_boolean(L, t: str, D: Sequence[str]) -> IntervalBooleanResult:
    """For a set D of descendants of t: [meet(D), t] is the filter lattice of D.

    D is treated as an antichain colored by the edge into t.  The interval
    matches exactly at the meet of D; it is a Boolean lattice there.
    """
    view = _coerce_view(L)
    _require_dcdl(view)
    D = list(dict.fromkeys(D))
    if not D:
        raise InvalidDescendantSet("need at least one descendant")
    desc = set(view.poset.descendants(t))
    bad = [s for s in D if s not in desc]
    if bad:
        raise InvalidDescendantSet(f"{bad} are not descendants of {t!r}")
    colors = {s: view.poset.edge_color(s, t) for s in D}
    antichain = VertexColoredPoset(sorted(D, key=view.poset.index_of), [], colors)
    r = view.meet_all(D)
    inner = view.interval(r, t)
    matches = find_isomorphism(inner, build_M(antichain).lattice) is not None
    contains = all(s in set(inner.vertices) for s in D)
    boolean = is_boolean(as_lattice(inner))
    return IntervalBooleanResult(r, contains, matches, boolean)


def ancestor_interval_boolean(L, t: str, A: Sequence[str]) -> IntervalBooleanResult:
    """Dual form: [t, join(A)] is the ideal lattice of the ancestor set A."""
    view = _coerce_view(L)
    _require_dcdl(view)
    A = list(dict.fromkeys(A))
    if not A:
        raise InvalidDescendantSet("need at least one ancestor")
    anc = set(view.poset.ancestors(t))
    bad = [s for s in A if s not in anc]
    if bad:
        raise InvalidDescendantSet(f"{bad} are not ancestors of {t!r}")
    colors = {s: view.poset.edge_color(t, s) for s in A}
    antichain = VertexColoredPoset(sorted(A, key=view.poset.index_of), [], colors)
    u = view.join_all(A)
    inner = view.interval(t, u)
    matches = find_isomorphism(inner, build_J(antichain).lattice) is not None
    contains = all(s in set(inner.vertices) for s in A)
    boolean = is_boolean(as_lattice(inner))
    return IntervalBooleanResult(u, contains, matches, boolean)
