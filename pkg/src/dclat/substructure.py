"""Full-length sublattices, color-restricted components, and subordinates.

The constructions here relate substructures of a lattice to substructures
of its poset of join irreducibles: weakening a poset's order embeds its
ideal lattice as a full-length sublattice, deleting all edges outside a
color set J splits the lattice into components that are themselves ideal
lattices of induced "J-subordinate" subposets, and both directions are
verified instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .birkhoff import (
    IdealLattice,
    build_J,
    enumerate_ideal_masks,
    extract_j,
    _cover_down_masks,
    _cover_up_masks,
)
from .errors import (
    EnumerationCapExceeded,
    HypothesisViolated,
    NotASublattice,
    NotDiamondColored,
    NotModular,
    NotWeakSubposet,
    UnknownVertex,
    ValidationError,
)
from .isomorphism import find_isomorphism
from .lattice import LatticeView, as_lattice, is_distributive_fast, is_modular
from .paths import check_diamond_colored, distance
from .report import Report
from .structures import (
    EdgeColoredPoset,
    ProductView,
    VertexColoredPoset,
    _bits,
    reduce_relation,
)


@dataclass
class SublatticeEmbedding:
    """A verified lattice inclusion with meet/join agreement."""

    sub: EdgeColoredPoset
    parent: EdgeColoredPoset
    sub_view: LatticeView
    parent_view: LatticeView
    full_length: bool
    edge_colored: bool

    @property
    def inclusion(self) -> dict[str, str]:
        return {v: v for v in self.sub.vertices}


def check_sublattice(K, L) -> SublatticeEmbedding:
    """Verify that K's meets and joins agree pairwise with L's.

    K's vertex labels must be a subset of L's; K carries its own lattice
    order.  Flags record whether the embedding is full-length and whether
    every K-edge is an L-edge of the same color.
    """
    from .errors import NotALattice

    try:
        kv = K if isinstance(K, LatticeView) else as_lattice(K)
    except NotALattice as e:
        raise NotASublattice(f"candidate is not a lattice in its own order: {e}",
                             witness=e.witness) from None
    lv = L if isinstance(L, LatticeView) else as_lattice(L)
    missing = [v for v in kv.poset.vertices if v not in lv.poset]
    if missing:
        raise ValidationError(f"sublattice candidate has foreign vertices {missing[:3]}")
    verts = kv.poset.vertices
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if kv.join(x, y) != lv.join(x, y):
                raise NotASublattice(
                    f"join of {x!r}, {y!r} is {kv.join(x, y)!r} inside, {lv.join(x, y)!r} in the parent",
                    witness=(x, y, "join"),
                )
            if kv.meet(x, y) != lv.meet(x, y):
                raise NotASublattice(
                    f"meet of {x!r}, {y!r} is {kv.meet(x, y)!r} inside, {lv.meet(x, y)!r} in the parent",
                    witness=(x, y, "meet"),
                )
    try:
        full_length = kv.length == lv.length
    except Exception:
        full_length = False
    edge_colored = all(
        lv.poset.has_cover(a, b) and lv.poset.edge_color(a, b) == c
        for a, b, c in kv.poset.covers
    )
    return SublatticeEmbedding(kv.poset, lv.poset, kv, lv, full_length, edge_colored)


def verify_full_length_agreement(emb: SublatticeEmbedding) -> Report:
    """Ranks and covers of a full-length sublattice coincide with the parent's.

    On a non-full-length embedding the report simply fails its first check;
    nothing is asserted.
    """
    report = Report("full-length sublattice rank and cover agreement")
    if not report.record("embedding is full-length", emb.full_length):
        return report
    kr = emb.sub_view.rank_function.rank
    lr = emb.parent_view.rank_function.rank
    report.record("ranks agree on every element", all(kr[x] == lr[x] for x in emb.sub.vertices))
    sub_pairs = {(a, b) for a, b, _ in emb.sub.covers}
    parent_pairs = {
        (a, b)
        for a, b, _ in emb.parent.covers
        if a in emb.sub._index and b in emb.sub._index
    }
    report.record("covers agree in both directions", sub_pairs == parent_pairs)
    return report


def _diamond_modular(view: LatticeView, what: str) -> None:
    if not check_diamond_colored(view.poset).ok:
        raise NotDiamondColored(f"{what} is not diamond-colored")
    if not is_modular(view):
        raise NotModular(f"{what} is not modular")


def verify_product_closure(factors: Sequence[EdgeColoredPoset], K_labels: Iterable[str]) -> Report:
    """A componentwise-closed spanning subset of a product is a full-length sublattice.

    Hypotheses: every factor is a diamond-colored modular lattice, K contains
    the product's extremes, K is closed under componentwise joins and meets,
    and some Hasse path joins bottom to top inside K.  The conclusions are
    then verified: K is a full-length diamond-colored modular (distributive
    when all factors are) sublattice, and the product itself has additive
    ranks and componentwise bounds.
    """
    views = []
    for idx, f in enumerate(factors):
        v = as_lattice(f)
        try:
            _diamond_modular(v, f"factor {idx}")
        except (NotDiamondColored, NotModular) as e:
            raise HypothesisViolated(str(e)) from None
        views.append(v)
    all_distributive = all(is_distributive_fast(v) for v in views)
    pv = ProductView(factors)
    L = pv.poset
    lv = as_lattice(L)
    K = sorted(set(K_labels), key=lambda x: L.index_of(x))
    kset = set(K)
    if lv.minimum not in kset or lv.maximum not in kset:
        raise HypothesisViolated("subset must contain the product's extremes")
    for i, x in enumerate(K):
        for y in K[i + 1 :]:
            cw_join = pv.label_of([views[q].join(a, b) for q, (a, b) in enumerate(zip(pv.coords[x], pv.coords[y]))])
            cw_meet = pv.label_of([views[q].meet(a, b) for q, (a, b) in enumerate(zip(pv.coords[x], pv.coords[y]))])
            if cw_join not in kset or cw_meet not in kset:
                raise HypothesisViolated(
                    f"subset not closed under componentwise bounds at ({x!r}, {y!r})"
                )
    # a bottom-to-top Hasse path inside K
    frontier = {lv.minimum}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for v in frontier:
            for w in list(L.ancestors(v)) + list(L.descendants(v)):
                if w in kset and w not in seen:
                    seen.add(w)
                    nxt.add(w)
        frontier = nxt
    if lv.maximum not in seen:
        raise HypothesisViolated("no bottom-to-top path inside the subset")

    report = Report("product closure yields a full-length sublattice")
    rank = lv.rank_function.rank
    report.record("product length is the sum of factor lengths",
                  lv.length == sum(v.length for v in views))
    report.record(
        "product rank is the sum of coordinate ranks",
        all(
            rank[lab] == sum(views[q].rank_function.rank[c] for q, c in enumerate(pv.coords[lab]))
            for lab in L.vertices
        ),
    )
    report.record(
        "product extremes are the coordinate extremes",
        lv.minimum == pv.label_of([v.minimum for v in views])
        and lv.maximum == pv.label_of([v.maximum for v in views]),
    )
    pair_ok = True
    verts = L.vertices
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            cw = pv.label_of([views[q].join(a, b) for q, (a, b) in enumerate(zip(pv.coords[x], pv.coords[y]))])
            if lv.join(x, y) != cw:
                pair_ok = False
                break
            cw = pv.label_of([views[q].meet(a, b) for q, (a, b) in enumerate(zip(pv.coords[x], pv.coords[y]))])
            if lv.meet(x, y) != cw:
                pair_ok = False
                break
        if not pair_ok:
            break
    report.record("product joins and meets are componentwise", pair_ok)
    report.record("product is modular", is_modular(lv))
    report.record("product is diamond-colored", check_diamond_colored(L).ok)
    if all_distributive:
        report.record("product is distributive", is_distributive_fast(lv))

    sub = L.induced(K)
    emb = check_sublattice(as_lattice(sub), lv)
    report.record("subset is a sublattice", True)  # check_sublattice would have raised
    report.record("subset sublattice is full-length", emb.full_length)
    report.record("subset sublattice is edge-colored", emb.edge_colored)
    report.record("subset sublattice is modular", is_modular(emb.sub_view))
    report.record("subset sublattice is diamond-colored", check_diamond_colored(sub).ok)
    if all_distributive:
        report.record("subset sublattice is distributive", is_distributive_fast(emb.sub_view))
    agreement = verify_full_length_agreement(emb)
    report.record("rank and cover agreement", agreement.passed)
    return report


@dataclass
class WeakeningEmbedding:
    """Ideal lattice of a poset inside the ideal lattice of a weakening."""

    embedding: SublatticeEmbedding
    sub_ideals: IdealLattice  # ideals of the stronger order
    parent_ideals: IdealLattice  # ideals of the weak subposet


def _require_weak_subposet(P: VertexColoredPoset, Q: VertexColoredPoset) -> None:
    if set(P.vertices) != set(Q.vertices):
        raise NotWeakSubposet("orders must share one vertex set")
    for v in P.vertices:
        if P.colors[v] != Q.colors[v]:
            raise NotWeakSubposet(f"vertex {v!r} changes color between the orders")
    for a, b in Q.covers:
        if not P.leq(a, b):
            raise NotWeakSubposet(f"relation {a!r} <= {b!r} does not hold in the parent order")


def weak_subposet(P: VertexColoredPoset, relation) -> VertexColoredPoset:
    """Normalize a relation list over P's vertices into a poset with P's colors.

    The relation need not be transitively reduced; it is closed and reduced
    here, then validated against P's order by the caller.
    """
    covers = reduce_relation(P.vertices, relation)
    return VertexColoredPoset(P.vertices, covers, dict(P.colors))


def sublattice_from_weak_subposet(P: VertexColoredPoset, Q) -> WeakeningEmbedding:
    """Ideals of P form a full-length edge-colored sublattice of ideals of Q.

    Q is a weak subposet of P on the same colored vertex set, given either
    as a poset or as a raw relation list (normalized first); fewer relations
    mean more ideals, so the inclusion runs from the ideal lattice of P into
    that of Q.  The embedding is fully verified before returning.
    """
    if not isinstance(Q, VertexColoredPoset):
        Q = weak_subposet(P, Q)
    _require_weak_subposet(P, Q)
    K = build_J(P)
    # realign Q to P's declaration order so identical ideals get identical
    # masks and labels in both lattices
    Lp = build_J(weak_subposet(P, Q.covers))
    missing = [m for m in K.masks if m not in set(Lp.masks)]
    if missing:
        raise ValidationError("an ideal of the stronger order is not an ideal of the weaker one")
    emb = check_sublattice(as_lattice(K.lattice), as_lattice(Lp.lattice))
    if not emb.full_length or not emb.edge_colored:
        raise ValidationError("weakening did not produce a full-length edge-colored sublattice")
    return WeakeningEmbedding(emb, K, Lp)


@dataclass
class SubposetRecovery:
    """Inverse direction: the weak subposet recovered from a sublattice."""

    phi: dict[str, str]
    recovered: VertexColoredPoset
    report: Report


def weak_subposet_from_sublattice(L, K) -> SubposetRecovery:
    """Recover, from a full-length edge-colored sublattice K of L, a weak
    subposet presentation of K's irreducibles inside L's.

    For each join irreducible x of L, the elements of K above x have a
    unique minimal element, itself join irreducible in K; that map is a
    color-preserving monotone bijection between the irreducible posets, and
    transporting the sub-order along it lands inside the parent order.
    """
    lv = L if isinstance(L, LatticeView) else as_lattice(L)
    kv = K if isinstance(K, LatticeView) else as_lattice(K)
    emb = check_sublattice(kv, lv)
    if not emb.full_length:
        raise ValidationError("sublattice is not full-length")
    if not emb.edge_colored:
        raise ValidationError("sublattice is not edge-colored")
    Q = extract_j(lv).poset
    Pp = extract_j(kv).poset

    report = Report("weak subposet recovered from a full-length sublattice")
    phi: dict[str, str] = {}
    ok_unique = True
    ok_irr = True
    for x in Q.vertices:
        above = [y for y in kv.poset.vertices if lv.leq(x, y)]
        minimal = [y for y in above if not any(z != y and lv.leq(z, y) for z in above)]
        if len(minimal) != 1:
            ok_unique = False
            break
        w = minimal[0]
        if w not in Pp._index:
            ok_irr = False
            break
        phi[x] = w
    report.record("each filter of sublattice elements has a unique minimum", ok_unique)
    report.record("those minima are join irreducible in the sublattice", ok_unique and ok_irr)
    if not (ok_unique and ok_irr):
        return SubposetRecovery(phi, Pp, report)
    report.record("the map is a bijection onto the sublattice irreducibles",
                  sorted(phi.values()) == sorted(Pp.vertices))
    report.record("the map preserves vertex colors",
                  all(Q.colors[x] == Pp.colors[w] for x, w in phi.items()))
    monotone = all(
        Pp.leq(phi[u], phi[v])
        for u in Q.vertices
        for v in Q.vertices
        if Q.leq(u, v)
    )
    report.record("the map is monotone into the recovered order", monotone)

    relation = [(phi[u], phi[v]) for u in Q.vertices for v in Q.vertices if u != v and Q.leq(u, v)]
    covers = reduce_relation(Pp.vertices, relation)
    recovered = VertexColoredPoset(Pp.vertices, covers, dict(Pp.colors))
    transported = Q.relabel(phi)
    report.record("transported order equals the recovered order",
                  set(transported.covers) == set(recovered.covers)
                  and transported.colors == recovered.colors)
    report.record("recovered order is isomorphic to the original irreducibles",
                  find_isomorphism(Q, recovered) is not None)
    weak = all(Pp.leq(a, b) for a, b in recovered.covers)
    report.record("recovered order is a weak subposet of the sublattice irreducibles", weak)
    return SubposetRecovery(phi, recovered, report)


@dataclass
class ComponentInfo:
    labels: tuple[str, ...]
    poset: EdgeColoredPoset
    minimum: str
    maximum: str


@dataclass
class JComponentDecomposition:
    colors: frozenset[int]
    components: tuple[ComponentInfo, ...]

    def component_of(self, label: str) -> ComponentInfo:
        for comp in self.components:
            if label in comp.poset._index:
                return comp
        raise UnknownVertex(f"unknown vertex {label!r}")

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c.labels) for c in self.components)


def j_components(L, colors: Iterable[int], verify: bool = True) -> JComponentDecomposition:
    """Split a diamond-colored modular lattice along edges with colors in J.

    Each component is returned with its own lattice structure and is checked
    to be a meet/join-closed edge-colored sublattice, modular, distributive
    whenever the parent is, with inner shortest paths that are also shortest
    in the parent.
    """
    lv = L if isinstance(L, LatticeView) else as_lattice(L)
    p = lv.poset
    J = frozenset(colors)
    _diamond_modular(lv, "lattice")
    n = len(p)
    adj = [[] for _ in range(n)]
    for a, b, c in p.covers:
        if c in J:
            ia, ib = p.index_of(a), p.index_of(b)
            adj[ia].append(ib)
            adj[ib].append(ia)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack, acc = [start], [start]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
                    acc.append(j)
        comps.append(sorted(acc))

    infos = []
    distributive_parent = is_distributive_fast(lv)
    for ids in comps:
        labels = tuple(p.vertices[i] for i in ids)
        label_set = set(labels)
        covers = [
            (a, b, c)
            for a, b, c in p.covers
            if c in J and a in label_set and b in label_set
        ]
        sub = EdgeColoredPoset(labels, covers)
        mins = sub.minimal_elements()
        maxs = sub.maximal_elements()
        if len(mins) != 1 or len(maxs) != 1:
            raise ValidationError("color-restricted component is not bounded")
        infos.append(ComponentInfo(labels, sub, mins[0], maxs[0]))
        if verify:
            sv = as_lattice(sub)
            for i, x in enumerate(labels):
                for y in labels[i + 1 :]:
                    if lv.join(x, y) not in sub._index or lv.meet(x, y) not in sub._index:
                        raise ValidationError(
                            f"component not closed under parent bounds at ({x!r}, {y!r})"
                        )
            check_sublattice(sv, lv)
            if not check_diamond_colored(sub).ok:
                raise ValidationError("component is not diamond-colored")
            if not is_modular(sv):
                raise ValidationError("component is not modular")
            if distributive_parent and not is_distributive_fast(sv):
                raise ValidationError("component of a distributive lattice is not distributive")
            for i, x in enumerate(labels):
                for y in labels[i + 1 :]:
                    if distance(sub, x, y) != distance(p, x, y):
                        raise ValidationError(
                            f"inner distance differs from parent distance at ({x!r}, {y!r})"
                        )
    return JComponentDecomposition(J, tuple(infos))


def verify_component_structure(L, colors: Iterable[int] | None = None) -> Report:
    """Run the component decomposition, with verification, for color subsets.

    When ``colors`` is None every subset of the color set is tried.
    """
    lv = L if isinstance(L, LatticeView) else as_lattice(L)
    report = Report("color-restricted components are verified sublattices")
    palette = sorted(lv.poset.colors_used)
    if colors is None:
        subsets = []
        for mask in range(1 << len(palette)):
            subsets.append([palette[i] for i in range(len(palette)) if (mask >> i) & 1])
    else:
        subsets = [list(colors)]
    for J in subsets:
        decomp = j_components(lv, J, verify=True)
        total = sum(decomp.sizes())
        report.record(
            f"colors {sorted(J)}: {len(decomp.components)} components partition the lattice",
            total == len(lv.poset),
        )
    return report


@dataclass(frozen=True)
class JSubordinate:
    """Induced subposet sandwiched between an ideal and a larger ideal.

    ``vertex_set`` determines the subordinate; ``witness_ideal`` is the
    ideal below it whose boundary avoids the designated colors.
    """

    vertex_set: frozenset[str]
    poset: VertexColoredPoset
    witness_ideal: frozenset[str]


def subordinate_of(il: IdealLattice, t, colors: Iterable[int]) -> JSubordinate:
    """The subordinate attached to the component of element t.

    Greedy peeling computes the deletable set (maximal vertices with a
    designated color, repeatedly) and the addable set; the result is
    cross-checked against the actual color-restricted component of t in the
    ideal lattice.
    """
    if il.mode != "ideal":
        raise ValidationError("subordinates are computed on ideal lattices")
    P = il.source
    J = frozenset(colors)
    if isinstance(t, str) and t in il.mask_of_label:
        t_label = t
    else:
        t_label = il.label_for(t if not isinstance(t, str) else [t])
    t_mask = il.mask_of_label[t_label]
    down = _cover_down_masks(P)
    up = _cover_up_masks(P)
    color_of = [P.colors[v] for v in P.vertices]

    r_mask = t_mask
    changed = True
    while changed:
        changed = False
        for i in _bits(r_mask):
            if color_of[i] in J and up[i] & r_mask == 0:
                r_mask ^= 1 << i
                changed = True
                break
    top_mask = t_mask
    changed = True
    while changed:
        changed = False
        for i in range(len(P)):
            if not (top_mask >> i) & 1 and color_of[i] in J and down[i] & top_mask == down[i]:
                top_mask |= 1 << i
                changed = True
    q_mask = (t_mask ^ r_mask) | (top_mask ^ t_mask)

    # cross-check against the component of t in the lattice itself
    lat = il.lattice
    stack = [t_label]
    seen = {t_label}
    while stack:
        v = stack.pop()
        for w, c in lat.up_steps(v) + lat.down_steps(v):
            if c in J and w not in seen:
                seen.add(w)
                stack.append(w)
    comp_masks = [il.mask_of_label[w] for w in seen]
    if min(comp_masks, key=lambda m: m.bit_count()) != r_mask or max(
        comp_masks, key=lambda m: m.bit_count()
    ) != top_mask:
        raise ValidationError("greedy peeling disagrees with the lattice component")

    q_labels = frozenset(P.vertices[i] for i in _bits(q_mask))
    r_labels = frozenset(P.vertices[i] for i in _bits(r_mask))
    sub = P.induced(q_labels)
    if not set(sub.colors.values()) <= J:
        raise ValidationError("subordinate carries a color outside the designated set")
    # maximality: the boundary of the witness ideal avoids the designated colors
    for i in _bits(r_mask):
        if up[i] & r_mask == 0 and color_of[i] in J:
            raise ValidationError("witness ideal has a removable designated-color vertex")
    outside = [i for i in range(len(P)) if not ((r_mask | q_mask) >> i) & 1]
    for i in outside:
        if down[i] & (r_mask | q_mask) == down[i] and color_of[i] in J:
            raise ValidationError("a designated-color vertex is still addable above the subordinate")
    return JSubordinate(q_labels, sub, r_labels)


def enumerate_subordinates(P: VertexColoredPoset, colors: Iterable[int]) -> list[JSubordinate]:
    """Distinct subordinates arising from elements of the ideal lattice."""
    il = build_J(P)
    J = frozenset(colors)
    seen: dict[frozenset[str], JSubordinate] = {}
    for lab in il.lattice.vertices:
        sub = subordinate_of(il, lab, J)
        seen.setdefault(sub.vertex_set, sub)
    return sorted(
        seen.values(), key=lambda s: (len(s.vertex_set), sorted(P.index_of(v) for v in s.vertex_set))
    )


def subordinates_by_definition(
    P: VertexColoredPoset, colors: Iterable[int], cap: int = 12
) -> set[frozenset[str]]:
    """Deliberately naive search straight from the definition.

    Enumerates pairs (ideal r, candidate vertex set Q) and keeps Q when: all
    its colors are designated, it is disjoint from r, r unioned with Q is an
    ideal, and the boundary (maximal vertices of r, minimal vertices outside
    the union) avoids the designated colors.  Exponential; capped.
    """
    if len(P) > cap:
        raise EnumerationCapExceeded(f"definition search is capped at {cap} vertices")
    J = frozenset(colors)
    n = len(P)
    down = _cover_down_masks(P)
    up = _cover_up_masks(P)
    color_of = [P.colors[v] for v in P.vertices]
    found: set[frozenset[str]] = set()
    for r_mask in enumerate_ideal_masks(P):
        if any(
            up[i] & r_mask == 0 and color_of[i] in J for i in _bits(r_mask)
        ):
            continue  # a maximal vertex of r carries a designated color
        pool = [i for i in range(n) if not (r_mask >> i) & 1 and color_of[i] in J]
        for sub_mask in range(1 << len(pool)):
            q_mask = 0
            for b in range(len(pool)):
                if (sub_mask >> b) & 1:
                    q_mask |= 1 << pool[b]
            union = r_mask | q_mask
            if any(down[i] & union != down[i] for i in _bits(q_mask)):
                continue  # union is not downward closed
            boundary_ok = True
            for i in range(n):
                if not (union >> i) & 1 and down[i] & union == down[i] and color_of[i] in J:
                    boundary_ok = False
                    break
            if boundary_ok:
                found.add(frozenset(P.vertices[i] for i in _bits(q_mask)))
    return found


def verify_subordinate_correspondence(P: VertexColoredPoset, colors: Iterable[int]) -> Report:
    """Subordinates attached to components are exactly the definable ones,
    and each component is the ideal lattice of its subordinate.

    The component-versus-ideal-lattice comparison is done three ways: by the
    explicit union map (edge by edge), by a generic isomorphism search, and
    through the irreducible poset.
    """
    J = frozenset(colors)
    report = Report(f"subordinate correspondence for colors {sorted(J)}")
    il = build_J(P)
    lv = as_lattice(il.lattice)
    decomp = j_components(lv, J, verify=True)
    from_components = {s.vertex_set for s in enumerate_subordinates(P, J)}
    from_definition = subordinates_by_definition(P, J)
    report.record("component subordinates match the definition search",
                  from_components == from_definition)

    for comp in decomp.components:
        sub = subordinate_of(il, comp.minimum, J)
        r_labels = sub.witness_ideal
        jq = build_J(sub.poset)
        # explicit map: ideal x of the subordinate -> witness ideal united with x
        expected_elements = {
            frozenset(jq.members(lab)) | r_labels for lab in jq.lattice.vertices
        }
        actual_elements = {frozenset(il.members(lab)) for lab in comp.labels}
        elements_ok = expected_elements == actual_elements
        edges_ok = True
        if elements_ok:
            lift = {
                lab: il.label_for(frozenset(jq.members(lab)) | r_labels)
                for lab in jq.lattice.vertices
            }
            lifted_edges = {(lift[a], lift[b], c) for a, b, c in jq.lattice.covers}
            edges_ok = lifted_edges == set(comp.poset.covers)
        report.record(
            f"component at {comp.minimum!r}: union map is an edge-color bijection",
            elements_ok and edges_ok,
        )
        report.record(
            f"component at {comp.minimum!r}: generic isomorphism with the subordinate's ideals",
            find_isomorphism(comp.poset, jq.lattice) is not None,
        )
        report.record(
            f"component at {comp.minimum!r}: irreducibles give back the subordinate",
            find_isomorphism(extract_j(as_lattice(comp.poset)).poset, sub.poset) is not None,
        )
    return report
