"""Domination of weighted diagrams and linear adjacency of their types.

A consistent diagram (D', nu') dominates (D, nu) when some
predecessor-closed piece of D embeds into D' preserving the root, parents
and the proximity pattern, such that transporting the weights of D' back
onto D through the embedding (zero off the embedded part) gives a system
of values at least that of nu at every vertex of D.  The embedding plus
the transported weights and both value systems form a
:class:`GeqWitness`, independently re-checkable by
:func:`check_geq_witness` without trusting the search.

One singularity type is *linear adjacent* to another when some consistent
representative of the first class dominates the minimal diagram of the
second.  Class representatives differ from the minimal diagram by extra
free weight-1 vertices, of which an unbounded number could in principle be
needed; :func:`linear_adjacent` therefore searches up to an explicit
number of added vertices and reports an honest
"no witness within this bound" otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping

from .diagram import (
    DiagramType,
    InconsistentDiagramError,
    WeightedDiagram,
    add_free_leaf,
    canonical_order,
    is_consistent,
    require_valid,
    validate_axioms,
)

__all__ = [
    "SubdiagramEmbedding",
    "GeqWitness",
    "AdjacencyVerdict",
    "geq",
    "check_geq_witness",
    "class_representatives",
    "linear_adjacent",
]


@dataclass(frozen=True)
class SubdiagramEmbedding:
    """Isomorphism between predecessor-closed subdiagrams, as (lower, upper) pairs."""

    pairs: tuple[tuple[int, int], ...]

    @cached_property
    def mapping(self) -> Mapping[int, int]:
        return dict(self.pairs)

    @cached_property
    def source_subset(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.pairs)

    @cached_property
    def target_subset(self) -> frozenset[int]:
        return frozenset(u for _, u in self.pairs)


@dataclass(frozen=True)
class GeqWitness:
    """Certificate that the upper diagram dominates the lower one.

    ``kappa`` holds the transported weights on the lower diagram's
    vertices (upper weight at the image, zero off the embedded part);
    ``ord_nu`` and ``ord_kappa`` are the value systems of the lower
    weights and of ``kappa``, both computed in the lower diagram.  All
    three are (vertex, value) pairs sorted by vertex.
    """

    embedding: SubdiagramEmbedding
    kappa: tuple[tuple[int, int], ...]
    ord_nu: tuple[tuple[int, int], ...]
    ord_kappa: tuple[tuple[int, int], ...]

    @property
    def ord_check(self) -> tuple[tuple[int, int, int], ...]:
        """Per-vertex triples (vertex, ord_nu, ord_kappa)."""
        kappa_ord = dict(self.ord_kappa)
        return tuple((v, o, kappa_ord[v]) for v, o in self.ord_nu)


@dataclass(frozen=True)
class AdjacencyVerdict:
    """Outcome of a bounded linear-adjacency search.

    ``holds`` means certified: ``representative`` is a consistent member
    of the source class and ``witness`` proves it dominates the target's
    minimal diagram.  Otherwise no representative with at most
    ``extra_vertex_bound`` added free weight-1 vertices works; the
    relation might still hold beyond the bound.
    """

    holds: bool
    extra_vertex_bound: int
    representative: WeightedDiagram | None = None
    witness: GeqWitness | None = None


def geq(upper: WeightedDiagram, lower: WeightedDiagram) -> GeqWitness | None:
    """Search for a witness that ``upper`` dominates ``lower``.

    ``upper`` must be a valid consistent diagram; ``lower`` must be valid.
    Lower vertices are processed root-first in canonical order, each being
    either mapped to an unused child of its parent's image with the same
    kind (a satellite's second target must correspond) or excluded
    together with its whole subtree.  Every decision fixes the transported
    value at that vertex, so a violated inequality prunes immediately.
    Candidate images are tried in canonical order before exclusion, which
    makes the returned witness the lexicographically smallest one.
    Returns None when no embedding satisfies all inequalities.
    """
    require_valid(upper.diagram)
    require_valid(lower.diagram)
    if not is_consistent(upper):
        raise InconsistentDiagramError("the dominating diagram must be consistent")

    lo = lower.diagram
    up = upper.diagram
    order = canonical_order(lower)
    upper_position = {u: i for i, u in enumerate(canonical_order(upper))}
    ord_nu = lower.orders
    count = len(order)

    image: dict[int, int] = {}
    used: set[int] = set()
    kappa: dict[int, int] = {}
    ord_kappa: dict[int, int] = {}

    def attempt(index: int) -> bool:
        if index == count:
            return True
        v = order[index]
        v_targets = lo.prox_targets[v]
        candidates: list[int | None] = []
        if v == lo.root:
            candidates.append(up.root)
        else:
            parent_image = image.get(lo.parent[v])
            if parent_image is not None:
                for u in sorted(up.children[parent_image], key=upper_position.__getitem__):
                    if u in used:
                        continue
                    u_targets = up.prox_targets[u]
                    if len(u_targets) != len(v_targets):
                        continue
                    if len(v_targets) == 2 and image.get(v_targets[1]) != u_targets[1]:
                        continue
                    candidates.append(u)
        candidates.append(None)
        for choice in candidates:
            value = upper.nu[choice] if choice is not None else 0
            ord_value = value + sum(ord_kappa[t] for t in v_targets)
            if ord_nu[v] > ord_value:
                continue
            if choice is not None:
                image[v] = choice
                used.add(choice)
            kappa[v] = value
            ord_kappa[v] = ord_value
            if attempt(index + 1):
                return True
            if choice is not None:
                del image[v]
                used.discard(choice)
            del kappa[v]
            del ord_kappa[v]
        return False

    if not attempt(0):
        return None
    return GeqWitness(
        embedding=SubdiagramEmbedding(pairs=tuple(sorted(image.items()))),
        kappa=tuple(sorted(kappa.items())),
        ord_nu=tuple(sorted(ord_nu.items())),
        ord_kappa=tuple(sorted(ord_kappa.items())),
    )


def check_geq_witness(
    upper: WeightedDiagram, lower: WeightedDiagram, witness: GeqWitness
) -> bool:
    """Re-derive everything a witness claims; True only if all of it holds.

    Checks are independent of the search: diagram validity, injectivity
    and predecessor-closedness of the embedding, preservation of root,
    parent, kind and satellite targets, the transported weights, both
    value systems recomputed from scratch, and the domination inequality
    at every vertex of ``lower``.  Any defect, including a tampered array,
    returns False.
    """
    if validate_axioms(upper.diagram) or validate_axioms(lower.diagram):
        return False
    if not is_consistent(upper):
        return False
    lo = lower.diagram
    up = upper.diagram
    image = dict(witness.embedding.pairs)
    if len(image) != len(witness.embedding.pairs):
        return False
    if len(set(image.values())) != len(image):
        return False
    lower_vertices = set(lo.vertices)
    if not set(image).issubset(lower_vertices):
        return False
    if not set(image.values()).issubset(set(up.vertices)):
        return False
    for v, u in image.items():
        if v == lo.root:
            if u != up.root:
                return False
            continue
        parent = lo.parent[v]
        if parent not in image:
            return False
        if up.parent.get(u) != image[parent]:
            return False
        v_targets = lo.prox_targets[v]
        u_targets = up.prox_targets[u]
        if len(v_targets) != len(u_targets):
            return False
        if len(v_targets) == 2 and image.get(v_targets[1]) != u_targets[1]:
            return False

    kappa = dict(witness.kappa)
    if set(kappa) != lower_vertices or len(kappa) != len(witness.kappa):
        return False
    for v in lo.vertices:
        expected = upper.nu[image[v]] if v in image else 0
        if kappa[v] != expected:
            return False

    ord_kappa: dict[int, int] = {}
    for v in lo.preorder:
        ord_kappa[v] = kappa[v] + sum(ord_kappa[t] for t in lo.prox_targets[v])
    if dict(witness.ord_nu) != dict(lower.orders):
        return False
    if dict(witness.ord_kappa) != ord_kappa:
        return False
    return all(lower.orders[v] <= ord_kappa[v] for v in lo.vertices)


def class_representatives(
    source: DiagramType, extra_vertices: int
) -> Iterator[WeightedDiagram]:
    """Consistent members of the class, by number of added free weight-1 vertices.

    Level zero is the minimal diagram itself; each further level attaches
    one more pendant free weight-1 vertex at any vertex whose excess
    allows it (keeping the diagram consistent), deduplicated by canonical
    key.  Within a level the order follows the canonical keys, so the
    stream is deterministic.
    """
    level = {source.representative.key: source.representative}
    yield source.representative
    for _ in range(extra_vertices):
        next_level: dict[str, WeightedDiagram] = {}
        for key in sorted(level):
            current = level[key]
            for at in current.diagram.vertices:
                if current.excess[at] < 1:
                    continue
                grown = add_free_leaf(current, at, 1)
                grown_key = grown.key
                if grown_key not in next_level:
                    next_level[grown_key] = grown
        level = next_level
        for key in sorted(level):
            yield level[key]


def linear_adjacent(
    source: DiagramType, target: DiagramType, extra_bound: int | None = None
) -> AdjacencyVerdict:
    """Decide, up to a representative-size bound, whether ``source`` is
    linear adjacent to ``target``.

    Tries every consistent representative of the source class with up to
    ``extra_bound`` added free weight-1 vertices (default: the number of
    vertices of the target's minimal diagram) against the target's minimal
    diagram; the first domination witness in canonical order is returned.
    A negative verdict is only conclusive up to the bound.
    """
    if extra_bound is None:
        extra_bound = len(target.representative)
    if extra_bound < 0:
        raise ValueError(f"extra_bound must be nonnegative, got {extra_bound}")
    lower = target.representative
    for representative in class_representatives(source, extra_bound):
        witness = geq(representative, lower)
        if witness is not None:
            return AdjacencyVerdict(
                holds=True,
                extra_vertex_bound=extra_bound,
                representative=representative,
                witness=witness,
            )
    return AdjacencyVerdict(holds=False, extra_vertex_bound=extra_bound)
