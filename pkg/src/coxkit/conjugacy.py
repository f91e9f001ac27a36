"""Cyclic shifts, closure graphs, cyclic reduction, conjugacy, torsion order.

An element u is *elementary related* to v when some reduced word of u,
rotated by some amount, spells v after reduction.  The transitive closure of
this move system (the kappa closure) never increases length, so it is finite;
its minimal-length stratum holds cyclically reduced conjugates of u.  Two
elements with intersecting strata are certainly conjugate, and the converse
holds for elements of infinite order satisfying the centralising property
checked by :func:`has_cent_prime` — that is what lets the tester return a
definite "not conjugate" without enumerating the group.

Every positive answer carries a :class:`MoveCertificate`: a flat, replayable
list of braid moves, rotations and cancellations from the canonical word of
the start element to the canonical word of the target.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import (
    DEFAULT_CAP,
    BraidStep,
    CancelStep,
    CoxeterMatrix,
    Element,
    RotateStep,
    Step,
    Word,
    apply_step,
    braid_class,
    braid_word_path,
    is_reduced,
    multiply,
    inverse,
    reduce_word,
    reduce_word_with_path,
    support,
)
from .errors import CapExceeded, InvariantViolation, ReplayError
from . import oracle, parabolic


def rotations(word: Word) -> list:
    """All cyclic rotations of a word, by one letter up to the full length."""
    n = len(word)
    if n == 0:
        return [word]
    return [word[k:] + word[:k] for k in range(1, n + 1)]


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class MoveCertificate:
    """A replayable move path between two words.

    Replaying the steps from ``start`` must land exactly on ``end``; the
    verifier raises ReplayError otherwise.
    """

    start: Word
    steps: tuple
    end: Word

    def replay(self, matrix: CoxeterMatrix) -> Word:
        word = self.start
        for step in self.steps:
            word = apply_step(matrix, word, step)
        if word != self.end:
            raise ReplayError("certificate does not reach its claimed end word")
        return word

    def then(self, other: "MoveCertificate") -> "MoveCertificate":
        if self.end != other.start:
            raise ReplayError("certificates do not compose")
        return MoveCertificate(self.start, self.steps + other.steps, other.end)


def format_step(matrix: CoxeterMatrix, step: Step) -> str:
    if isinstance(step, BraidStep):
        a, b = step.pair
        return f"braid pos={step.pos} pair={matrix.names[a]},{matrix.names[b]}"
    if isinstance(step, RotateStep):
        return f"rotate k={step.k} word={matrix.word_str(step.word)}"
    if isinstance(step, CancelStep):
        return f"cancel pos={step.pos}"
    raise ValueError(f"unknown step {step!r}")


def parse_step(matrix: CoxeterMatrix, line: str) -> Step:
    """Parse the one-move-per-line format emitted by :func:`format_step`."""
    text = line.strip()
    kind, _, rest = text.partition(" ")
    try:
        if kind == "braid":
            pos_field, pair_field = rest.split()
            pos = int(pos_field.removeprefix("pos="))
            a, b = pair_field.removeprefix("pair=").split(",")
            return BraidStep(pos, (matrix.index(a), matrix.index(b)))
        if kind == "rotate":
            k_field, _, word_field = rest.partition(" ")
            k = int(k_field.removeprefix("k="))
            word = matrix.word(word_field.removeprefix("word="))
            return RotateStep(k, word)
        if kind == "cancel":
            return CancelStep(int(rest.removeprefix("pos=")))
    except (ValueError, TypeError) as exc:
        raise ReplayError(f"cannot parse move {line!r}: {exc}") from None
    raise ReplayError(f"cannot parse move {line!r}")


# ---------------------------------------------------------------------------
# the move system


def _elementary_edges(u: Element, cap: int = DEFAULT_CAP) -> tuple:
    """Outgoing moves of one element: (reduced word, rotation amount, target).

    Deterministic order: reduced words shortlex, then rotation amount.
    """
    cache = u.system._scratch.setdefault("elementary_edges", {})
    hit = cache.get(u.word)
    if hit is None:
        out = []
        for rho in sorted(braid_class(u.system, u.word, cap)):
            for k in range(1, len(rho) + 1):
                rotated = rho[k:] + rho[:k]
                out.append((rho, k, reduce_word(u.system, rotated, cap)))
        hit = tuple(out)
        cache[u.word] = hit
    return hit


def elementary_related(u: Element, cap: int = DEFAULT_CAP) -> frozenset:
    """Elements spelled by rotations of reduced words of u (includes u)."""
    if u.is_identity():
        return frozenset({u})
    return frozenset(target for _, _, target in _elementary_edges(u, cap))


def _closure_search(u: Element, cap: int = DEFAULT_CAP):
    """Transitive closure under elementary moves, with discovery back-pointers.

    Returns (nodes, parents) where parents[v] = (previous, rho, k) describes
    the first discovered move reaching v.
    """
    nodes = {u}
    parents = {}
    queue = deque([u])
    while queue:
        cur = queue.popleft()
        for rho, k, target in _elementary_edges(cur, cap):
            if target in nodes:
                continue
            if len(nodes) >= cap:
                raise CapExceeded(f"cyclic-shift closure exceeded the node cap of {cap}")
            nodes.add(target)
            parents[target] = (cur, rho, k)
            queue.append(target)
    return nodes, parents


@dataclass(frozen=True)
class KappaClosure:
    """The reachable set under braid moves, cyclic shifts and cancellations.

    ``edges`` holds every discovered move as (source, (word, rotation), target);
    both nodes and edges are canonically ordered.
    """

    start: Element
    nodes: tuple
    edges: tuple
    min_length: int
    min_stratum: tuple
    length_preserved: bool


def kappa_closure(u: Element, cap: int = DEFAULT_CAP) -> KappaClosure:
    nodes, _ = _closure_search(u, cap)
    edges = []
    for src in sorted(nodes):
        if src.is_identity():
            continue
        for rho, k, target in _elementary_edges(src, cap):
            edges.append((src, (rho, k), target))
    min_length = min(v.length for v in nodes)
    stratum = tuple(sorted(v for v in nodes if v.length == min_length))
    return KappaClosure(
        start=u,
        nodes=tuple(sorted(nodes)),
        edges=tuple(edges),
        min_length=min_length,
        min_stratum=stratum,
        length_preserved=(min_length == u.length),
    )


def _hop_certificate(prev: Element, rho: Word, k: int, target: Element,
                     cap: int) -> MoveCertificate:
    """Certificate of one elementary move: braid into rho, rotate, reduce."""
    steps = list(braid_word_path(prev.system, prev.word, rho, cap))
    steps.append(RotateStep(k, rho))
    rotated = rho[k:] + rho[:k]
    landed, reduction = reduce_word_with_path(prev.system, rotated, cap)
    if landed != target:
        raise InvariantViolation("elementary move replays to an unexpected element")
    steps.extend(reduction)
    return MoveCertificate(prev.word, tuple(steps), target.word)


def _path_certificate(start: Element, parents: dict, target: Element,
                      cap: int) -> MoveCertificate:
    hops = []
    cur = target
    while cur != start:
        prev, rho, k = parents[cur]
        hops.append((prev, rho, k, cur))
        cur = prev
    cert = MoveCertificate(start.word, (), start.word)
    for prev, rho, k, nxt in reversed(hops):
        cert = cert.then(_hop_certificate(prev, rho, k, nxt, cap))
    return cert


def is_cyclically_reduced(w: Element, cap: int = DEFAULT_CAP) -> bool:
    """Every rotation of every reduced word of w stays reduced."""
    cache = w.system._scratch.setdefault("cyclically_reduced", {})
    hit = cache.get(w.word)
    if hit is None:
        hit = all(
            is_reduced(w.system, sigma, cap)
            for rho in sorted(braid_class(w.system, w.word, cap))
            for sigma in rotations(rho)
        )
        cache[w.word] = hit
    return hit


def cyclic_reduce(w: Element, cap: int = DEFAULT_CAP):
    """A minimal-length element of the move closure of w, with a certificate.

    The result is cyclically reduced and conjugate to w; its length equals
    the closure minimum.  When the closure preserves length, w itself is
    already minimal and is returned with an empty certificate.
    """
    nodes, parents = _closure_search(w, cap)
    low = min(x.length for x in nodes)
    if low == w.length:
        return w, MoveCertificate(w.word, (), w.word)
    target = min(x for x in nodes if x.length == low)
    return target, _path_certificate(w, parents, target, cap)


# ---------------------------------------------------------------------------
# torsion and the centralising property


def is_finite_order(w: Element, cap: int = DEFAULT_CAP) -> bool:
    """True iff some closure node has spherical support.

    Sound because such a node lies in a finite standard parabolic subgroup;
    complete because a finite-order element always reaches one by these moves.
    """
    nodes, _ = _closure_search(w, cap)
    return any(parabolic.is_spherical(w.system, support(v)) for v in nodes)


def _cent_prime_candidates(matrix: CoxeterMatrix, cap: int) -> tuple:
    """Spherical subgroups of the form w_I W_J w_I^-1, deduplicated by their
    generating sets; each entry is (generators, w_I, J)."""
    cache = matrix._scratch.setdefault("cent_prime_candidates", {})
    hit = cache.get(cap)
    if hit is None:
        out = []
        seen_gensets = set()
        for members in parabolic.spherical_subsets(matrix):
            if not members:
                continue
            subgroup = oracle.enumerate_elements(matrix, None, cap=cap, letters=members)
            for w_i in subgroup:
                for j_set in parabolic.spherical_subsets(matrix):
                    if not j_set or not j_set <= members:
                        continue
                    gens = tuple(
                        multiply(multiply(w_i, matrix.generator(j), cap), inverse(w_i, cap), cap)
                        for j in sorted(j_set)
                    )
                    genset = frozenset(gens)
                    if genset in seen_gensets:
                        continue
                    seen_gensets.add(genset)
                    out.append((gens, w_i, j_set))
        hit = tuple(out)
        cache[cap] = hit
    return hit


def _normalises_conjugated(w: Element, gens: tuple, w_i: Element, j_set: frozenset,
                           cap: int) -> bool:
    # x lies in w_I W_J w_I^-1 iff w_I^-1 x w_I has support inside J
    w_i_inv = inverse(w_i, cap)
    for g in gens:
        conj = multiply(multiply(w, g, cap), inverse(w, cap), cap)
        pulled = multiply(multiply(w_i_inv, conj, cap), w_i, cap)
        if not support(pulled) <= j_set:
            return False
    return True


def has_cent_prime(u: Element, cap: int = DEFAULT_CAP) -> bool:
    """Along the whole closure of a cyclically reduced u: normalising any
    spherical subgroup of the form w_I W_J w_I^-1 implies centralising it."""
    if not is_cyclically_reduced(u, cap):
        raise ValueError("has_cent_prime requires a cyclically reduced element")
    matrix = u.system
    cache = matrix._scratch.setdefault("cent_prime", {})
    hit = cache.get(u.word)
    if hit is not None:
        return hit
    candidates = _cent_prime_candidates(matrix, cap)
    nodes, _ = _closure_search(u, cap)
    verdict = True
    for w in sorted(nodes):
        for gens, w_i, j_set in candidates:
            if _normalises_conjugated(w, gens, w_i, j_set, cap):
                if not parabolic.centralises(w, gens, cap):
                    verdict = False
                    break
        if not verdict:
            break
    cache[u.word] = verdict
    return verdict


# ---------------------------------------------------------------------------
# conjugacy


class ConjugacyStatus(Enum):
    CONJUGATE = "conjugate"
    NOT_CONJUGATE = "not-conjugate"
    UNKNOWN = "unknown"


class CompletenessBasis(Enum):
    CENT_PRIME_INFINITE_ORDER = "cent-prime-infinite-order"
    BRUTE_FORCE = "brute-force"


@dataclass(frozen=True)
class ConjugacyVerdict:
    """Outcome of the conjugacy test.

    A CONJUGATE verdict always carries a replayable witness: either a pair of
    move certificates meeting at ``meeting``, or an explicit ``conjugator`` v
    with v u1 v^-1 = u2 found by the brute-force fallback.  A NOT_CONJUGATE
    verdict always names its completeness basis.
    """

    status: ConjugacyStatus
    certificates: Optional[tuple] = None
    meeting: Optional[Element] = None
    conjugator: Optional[Element] = None
    basis: Optional[CompletenessBasis] = None


def are_conjugate(u1: Element, u2: Element, *, cap: int = DEFAULT_CAP,
                  brute_force: bool = False, brute_len_cap: int = 16) -> ConjugacyVerdict:
    """Decide conjugacy through minimal strata of the move closures.

    Intersecting strata prove conjugacy with certificates.  Disjoint strata
    prove non-conjugacy only under the completeness hypotheses (infinite
    order plus the centralising property, on either input), or through the
    brute-force fallback when it can enumerate the whole group; otherwise the
    verdict is UNKNOWN.
    """
    if u1.system != u2.system:
        raise ValueError("elements live in different Coxeter systems")
    matrix = u1.system

    v1, cert1 = cyclic_reduce(u1, cap)
    v2, cert2 = cyclic_reduce(u2, cap)
    nodes1, parents1 = _closure_search(v1, cap)
    nodes2, parents2 = _closure_search(v2, cap)
    low1 = min(x.length for x in nodes1)
    low2 = min(x.length for x in nodes2)
    stratum1 = {x for x in nodes1 if x.length == low1}
    stratum2 = {x for x in nodes2 if x.length == low2}

    common = stratum1 & stratum2
    if common:
        meeting = min(common)
        full1 = cert1.then(_path_certificate(v1, parents1, meeting, cap))
        full2 = cert2.then(_path_certificate(v2, parents2, meeting, cap))
        return ConjugacyVerdict(
            ConjugacyStatus.CONJUGATE,
            certificates=(full1, full2),
            meeting=meeting,
        )

    for v in (v1, v2):
        if not is_finite_order(v, cap) and has_cent_prime(v, cap):
            return ConjugacyVerdict(
                ConjugacyStatus.NOT_CONJUGATE,
                basis=CompletenessBasis.CENT_PRIME_INFINITE_ORDER,
            )

    if brute_force:
        conjugators = oracle.enumerate_elements(matrix, brute_len_cap, cap=cap)
        exhaustive = not conjugators or conjugators[-1].length < brute_len_cap
        for v in conjugators:
            if multiply(multiply(v, u1, cap), inverse(v, cap), cap) == u2:
                return ConjugacyVerdict(ConjugacyStatus.CONJUGATE, conjugator=v)
        if exhaustive:
            return ConjugacyVerdict(
                ConjugacyStatus.NOT_CONJUGATE,
                basis=CompletenessBasis.BRUTE_FORCE,
            )

    return ConjugacyVerdict(ConjugacyStatus.UNKNOWN)


# ---------------------------------------------------------------------------
# minimality


class TriState(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def is_min_in_conjugacy_class(w: Element, cap: int = DEFAULT_CAP) -> TriState:
    """Minimal length in the conjugacy class: certain when the closure
    shortens (NO), or when w is cyclically reduced with finite order or the
    centralising property (YES); UNKNOWN otherwise."""
    nodes, _ = _closure_search(w, cap)
    if min(x.length for x in nodes) < w.length:
        return TriState.NO
    if is_finite_order(w, cap) or has_cent_prime(w, cap):
        return TriState.YES
    return TriState.UNKNOWN
