"""Generator subsets, finite-type classification, normaliser decomposition,
and the torsion-freeness criterion.

Sphericity (finiteness of a standard parabolic subgroup) is decided from the
classification of finite Coxeter diagrams: a subset is spherical iff every
connected component of its induced diagram is isomorphic, as an edge-labelled
graph, to one of A_n, B_n, D_n, E6, E7, E8, F4, H3, H4 or a dihedral I2(m)
with m finite.  Components are matched against generated templates after
screening by edge count and label multiset.

An element is torsion-free when it has no length-additive factorisation
w = w_I * n_I with I spherical, w_I a nontrivial element of W_I and n_I
normalising W_I.  Because the normaliser of a spherical W_I splits as
W_I x| N_I with additive lengths, this is equivalent to the scan implemented
by :func:`torsion_witness`: no spherical I is normalised by w while meeting
the left descents of w.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import networkx as nx
from networkx.algorithms.isomorphism import categorical_edge_match

from .core import (
    DEFAULT_CAP,
    INFINITY,
    CoxeterMatrix,
    Element,
    conjugate,
    inverse,
    left_descents,
    multiply,
    support,
)
from .errors import NotNormalising, NotSpherical

Members = Union[Iterable[int], "GeneratorSubset"]


def _members(matrix: CoxeterMatrix, subset: Members) -> frozenset:
    if isinstance(subset, GeneratorSubset):
        if subset.system != matrix:
            raise ValueError("generator subset belongs to a different system")
        return subset.members
    members = frozenset(subset)
    for i in members:
        if not isinstance(i, int) or not 0 <= i < matrix.rank:
            raise ValueError(f"invalid generator index {i!r}")
    return members


@dataclass(frozen=True)
class GeneratorSubset:
    """A subset of the generators with its diagram components and sphericity."""

    system: CoxeterMatrix
    members: frozenset
    components: tuple  # of frozensets, ordered by least member
    spherical: bool

    def names(self) -> tuple:
        return tuple(self.system.names[i] for i in sorted(self.members))

    def __str__(self):
        return "{" + ",".join(self.names()) + "}"


def diagram_components(matrix: CoxeterMatrix, subset: Members) -> tuple:
    """Partition into diagram-connected pieces (edges where m(s,t) != 2)."""
    members = _members(matrix, subset)
    remaining = set(members)
    components = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in remaining - comp:
                if matrix.m(i, j) != 2:
                    comp.add(j)
                    frontier.append(j)
        components.append(frozenset(comp))
        remaining -= comp
    components.sort(key=min)
    return tuple(components)


def _path_graph(labels) -> nx.Graph:
    g = nx.Graph()
    g.add_node(0)
    for i, m in enumerate(labels):
        g.add_edge(i, i + 1, m=m)
    return g


def _tripod_graph(p: int, q: int, r: int) -> nx.Graph:
    """Three simply-laced arms of lengths p, q, r glued at one centre node."""
    g = nx.Graph()
    centre = 0
    g.add_node(centre)
    node = 0
    for arm in (p, q, r):
        prev = centre
        for _ in range(arm):
            node += 1
            g.add_edge(prev, node, m=3)
            prev = node
    return g


def _finite_templates(n: int):
    """Connected finite-type diagrams on n >= 3 nodes (rank 1 and 2 are
    decided directly)."""
    yield _path_graph([3] * (n - 1))                      # A_n
    yield _path_graph([4] + [3] * (n - 2))                # B_n
    if n >= 4:
        yield _tripod_graph(1, 1, n - 3)                  # D_n
    if n in (6, 7, 8):
        yield _tripod_graph(1, 2, n - 4)                  # E6, E7, E8
    if n == 4:
        yield _path_graph([3, 4, 3])                      # F4
    if n == 3:
        yield _path_graph([5, 3])                         # H3
    if n == 4:
        yield _path_graph([5, 3, 3])                      # H4


def _component_graph(matrix: CoxeterMatrix, comp: frozenset) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(comp)
    for i, j in itertools.combinations(sorted(comp), 2):
        m = matrix.m(i, j)
        if m != 2:
            g.add_edge(i, j, m=m)
    return g


def _component_is_finite_type(matrix: CoxeterMatrix, comp: frozenset) -> bool:
    n = len(comp)
    if n == 1:
        return True
    graph = _component_graph(matrix, comp)
    labels = sorted(data["m"] for _, _, data in graph.edges(data=True))
    if any(m == INFINITY for m in labels):
        return False
    if n == 2:
        return True  # I2(m) with m finite
    if len(labels) != n - 1:
        return False  # finite diagrams are trees
    match = categorical_edge_match("m", None)
    for template in _finite_templates(n):
        t_labels = sorted(data["m"] for _, _, data in template.edges(data=True))
        if t_labels != labels:
            continue
        if nx.is_isomorphic(graph, template, edge_match=match):
            return True
    return False


def is_spherical(matrix: CoxeterMatrix, subset: Members) -> bool:
    """True iff the subset generates a finite standard parabolic subgroup."""
    members = _members(matrix, subset)
    key = ("spherical", members)
    cache = matrix._scratch.setdefault("parabolic", {})
    hit = cache.get(key)
    if hit is None:
        hit = all(
            _component_is_finite_type(matrix, comp)
            for comp in diagram_components(matrix, members)
        )
        cache[key] = hit
    return hit


def generator_subset(matrix: CoxeterMatrix, subset: Members) -> GeneratorSubset:
    members = _members(matrix, subset)
    return GeneratorSubset(
        system=matrix,
        members=members,
        components=diagram_components(matrix, members),
        spherical=is_spherical(matrix, members),
    )


def spherical_subsets(matrix: CoxeterMatrix) -> tuple:
    """All spherical subsets of the generators, by size then lexicographically."""
    cache = matrix._scratch.setdefault("parabolic", {})
    hit = cache.get("all_spherical")
    if hit is None:
        out = []
        indices = range(matrix.rank)
        for size in range(matrix.rank + 1):
            for combo in itertools.combinations(indices, size):
                if is_spherical(matrix, combo):
                    out.append(frozenset(combo))
        hit = tuple(out)
        cache["all_spherical"] = hit
    return hit


def element_of_parabolic(w: Element, subset: Members) -> bool:
    """Membership in a standard parabolic: the support must lie inside it."""
    return support(w) <= _members(w.system, subset)


def normalises(w: Element, subset: Members, cap: int = DEFAULT_CAP) -> bool:
    """True iff conjugation by w keeps every generator of the subset in W_I."""
    members = _members(w.system, subset)
    return all(
        support(conjugate(w, w.system.generator(i), cap)) <= members
        for i in sorted(members)
    )


def centralises(w: Element, generators: Iterable[Element], cap: int = DEFAULT_CAP) -> bool:
    """True iff conjugation by w fixes each given element."""
    return all(conjugate(w, g, cap) == g for g in generators)


def min_coset_rep(subset: Members, w: Element, cap: int = DEFAULT_CAP) -> Element:
    """The unique shortest element of the coset W_I * w (strip left descents in I)."""
    members = _members(w.system, subset)
    cur = w
    while True:
        ds = sorted(left_descents(cur, cap) & members)
        if not ds:
            return cur
        cur = multiply(w.system.generator(ds[0]), cur, cap)


@dataclass(frozen=True)
class NormaliserDecomposition:
    """w = torsion_part * straight_part with additive lengths, torsion_part in
    W_I and straight_part in the complement N_I of the normaliser."""

    subset: GeneratorSubset
    torsion_part: Element
    straight_part: Element


def normaliser_decomposition(w: Element, subset: Members,
                             cap: int = DEFAULT_CAP) -> NormaliserDecomposition:
    matrix = w.system
    sub = generator_subset(matrix, _members(matrix, subset))
    if not sub.spherical:
        raise NotSpherical(f"subset {sub} does not generate a finite subgroup")
    if not normalises(w, sub.members, cap):
        raise NotNormalising(f"element {w} does not normalise W_{sub}")
    n_part = min_coset_rep(sub.members, w, cap)
    w_part = multiply(w, inverse(n_part, cap), cap)
    if not (support(w_part) <= sub.members
            and w_part.length + n_part.length == w.length
            and not (left_descents(n_part, cap) & sub.members)
            and normalises(n_part, sub.members, cap)):
        raise NotNormalising(f"element {w} admits no semidirect splitting over {sub}")
    return NormaliserDecomposition(sub, w_part, n_part)


def torsion_witness(w: Element, cap: int = DEFAULT_CAP) -> Optional[frozenset]:
    """A spherical subset witnessing a torsion factor of w, or None.

    The scan ranges over every spherical I (not only subsets of the support):
    the first I, in canonical order, that w normalises while having a left
    descent inside it.
    """
    lds = left_descents(w, cap)
    if not lds:
        return None
    for members in spherical_subsets(w.system):
        if members and (lds & members) and normalises(w, members, cap):
            return members
    return None


def is_torsion_free(w: Element, cap: int = DEFAULT_CAP) -> bool:
    """No length-additive factorisation w_I * n_I with nontrivial spherical
    torsion part; equivalent to having no torsion witness."""
    return torsion_witness(w, cap) is None


def standard_parabolic_closure(w: Element) -> GeneratorSubset:
    """The smallest standard parabolic subgroup containing w: its support."""
    return generator_subset(w.system, support(w))


def only_infinite_irreducible_components(matrix_or_subset,
                                         subset: Optional[Members] = None) -> bool:
    """True iff the subset is empty or no component matches a finite type.

    Accepts either a GeneratorSubset or (matrix, members).
    """
    if isinstance(matrix_or_subset, GeneratorSubset):
        sub = matrix_or_subset
        matrix, members = sub.system, sub.members
    else:
        matrix = matrix_or_subset
        members = _members(matrix, subset if subset is not None else ())
    return all(
        not _component_is_finite_type(matrix, comp)
        for comp in diagram_components(matrix, members)
    )
