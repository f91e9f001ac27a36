"""Core word engine for Coxeter systems.

Everything here is exact and purely combinatorial.  An element is known only
through its reduced words, and every question about words is answered by
searching the graph of braid moves (Tits' solution to the word problem):

  * a word is reduced iff no sequence of braid moves produces two equal
    adjacent letters;
  * two reduced words spell the same element iff they are connected by braid
    moves, so the shortlex-least word of the braid class is a normal form.

Closure searches carry a node cap; exceeding it raises CapExceeded rather
than returning a guess.  All values are immutable after construction; the
per-system dictionaries on :class:`CoxeterMatrix` are memo caches only.

Words are stored as ``bytes`` of generator indices (rank is capped at 255):
hashing and slicing of bytes dominate the closure searches and are far
cheaper than tuples.  Shortlex order on words of equal length coincides with
the bytes ordering.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    CapExceeded,
    MalformedMatrix,
    NotReduced,
    ReplayError,
    WordSyntaxError,
)

INFINITY = math.inf

#: Default node cap for braid-move and cyclic-shift closure searches.
DEFAULT_CAP = 1_000_000

# braid classes up to this size are cached once per member word
_MEMBER_CACHE_LIMIT = 20_000

#: A word is a bytes object of generator indices into the ambient matrix.
Word = bytes

WordLike = Union[str, bytes, Sequence[int]]


def _check_order(value) -> bool:
    if value == INFINITY:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 2


class CoxeterMatrix:
    """A Coxeter system (W, S): generator names plus the order table m(s, t).

    ``table[i][j]`` is the order of the product of generators i and j:
    1 on the diagonal, an integer >= 2 or ``INFINITY`` off it, symmetric.
    Instances are immutable and hashable; two systems are equal iff they have
    the same names in the same order and the same table.
    """

    __slots__ = ("names", "table", "_index", "_single_char", "_hash", "_scratch")

    def __init__(self, names: Sequence[str], table: Sequence[Sequence]) -> None:
        names = tuple(names)
        if not names:
            raise MalformedMatrix("at least one generator is required")
        if len(names) > 255:
            raise MalformedMatrix("at most 255 generators are supported")
        index = {}
        for pos, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise MalformedMatrix(f"generator names must be nonempty strings, got {name!r}")
            if any(ch.isspace() for ch in name) or "," in name or name == "-" or name.startswith("#"):
                raise MalformedMatrix(f"generator name {name!r} would be unreadable in word syntax")
            if name in index:
                raise MalformedMatrix(f"duplicate generator name {name!r}")
            index[name] = pos
        n = len(names)
        rows = tuple(tuple(row) for row in table)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise MalformedMatrix(f"order table must be {n}x{n}")
        for i in range(n):
            if rows[i][i] != 1:
                raise MalformedMatrix(f"m({names[i]},{names[i]}) must be 1")
            for j in range(i + 1, n):
                if not _check_order(rows[i][j]):
                    raise MalformedMatrix(
                        f"m({names[i]},{names[j]}) must be an integer >= 2 or INFINITY, got {rows[i][j]!r}"
                    )
                if rows[j][i] != rows[i][j]:
                    raise MalformedMatrix(f"order table is not symmetric at ({names[i]},{names[j]})")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_single_char", all(len(nm) == 1 for nm in names))
        object.__setattr__(self, "_hash", hash((names, rows)))
        # memo caches shared with sibling modules; never part of equality
        object.__setattr__(self, "_scratch", {})

    def __setattr__(self, name, value):
        raise AttributeError("CoxeterMatrix is immutable")

    @classmethod
    def from_pairs(cls, names: Sequence[str], orders=None) -> "CoxeterMatrix":
        """Build a system from ``{(s, t): m}`` pairs; unlisted pairs default to 2."""
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        n = len(names)
        table = [[2] * n for _ in range(n)]
        for i in range(n):
            table[i][i] = 1
        for (a, b), m in (orders or {}).items():
            if a not in index or b not in index:
                missing = a if a not in index else b
                raise MalformedMatrix(f"order given for undeclared generator {missing!r}")
            i, j = index[a], index[b]
            table[i][j] = table[j][i] = m
        return cls(names, table)

    # -- basic queries ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.names)

    def m(self, i: int, j: int):
        return self.table[i][j]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise WordSyntaxError(f"unknown generator {name!r}") from None

    def __eq__(self, other):
        if not isinstance(other, CoxeterMatrix):
            return NotImplemented
        return self.names == other.names and self.table == other.table

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"CoxeterMatrix(names={self.names!r})"

    # -- words and elements ----------------------------------------------

    def word(self, text: WordLike) -> Word:
        """Read a word: a string of tokens, or a sequence of generator indices.

        String syntax: whitespace-separated generator tokens; a run of
        single-character tokens may be written contiguously; ``-`` (or the
        empty string) is the empty word.
        """
        if isinstance(text, bytes):
            if any(letter >= len(self.names) for letter in text):
                raise WordSyntaxError("word contains an invalid generator index")
            return text
        if isinstance(text, str):
            s = text.strip()
            if s in ("", "-"):
                return b""
            letters = []
            for piece in s.split():
                if piece in self._index:
                    letters.append(self._index[piece])
                elif self._single_char and all(ch in self._index for ch in piece):
                    letters.extend(self._index[ch] for ch in piece)
                else:
                    raise WordSyntaxError(
                        f"cannot read {piece!r} as generators of this system"
                    )
            return bytes(letters)
        letters = list(text)
        for letter in letters:
            if not isinstance(letter, int) or not 0 <= letter < len(self.names):
                raise WordSyntaxError(f"invalid generator index {letter!r}")
        return bytes(letters)

    def word_str(self, word: Word) -> str:
        """Render a word in the same syntax :meth:`word` reads."""
        if not word:
            return "-"
        if self._single_char:
            return "".join(self.names[i] for i in word)
        return " ".join(self.names[i] for i in word)

    def identity(self) -> "Element":
        return Element(self, b"")

    def generator(self, which: Union[int, str]) -> "Element":
        i = which if isinstance(which, int) else self.index(which)
        if not 0 <= i < self.rank:
            raise WordSyntaxError(f"invalid generator index {i!r}")
        return Element(self, bytes([i]))

    def generators(self) -> tuple:
        return tuple(Element(self, bytes([i])) for i in range(self.rank))

    def element(self, word: WordLike, cap: int = DEFAULT_CAP) -> "Element":
        """Parse and reduce a word to the element it spells."""
        return reduce_word(self, self.word(word), cap)


def new_system(names: Sequence[str], entries: Sequence[Sequence]) -> CoxeterMatrix:
    """Validate and build an immutable system descriptor from a full table."""
    return CoxeterMatrix(names, entries)


# ---------------------------------------------------------------------------
# word moves


@dataclass(frozen=True)
class BraidStep:
    """Replace the alternating factor stst... of length m(s,t) at ``pos`` by tsts..."""

    pos: int
    pair: tuple


@dataclass(frozen=True)
class RotateStep:
    """Left-rotate the named word by ``k`` letters; the word is recorded for replay."""

    k: int
    word: Word


@dataclass(frozen=True)
class CancelStep:
    """Delete the equal adjacent pair at positions pos, pos+1."""

    pos: int


Step = Union[BraidStep, RotateStep, CancelStep]

_ALT_MEMO = {}


def _alternating(a: int, b: int, m: int) -> Word:
    pattern = _ALT_MEMO.get((a, b, m))
    if pattern is None:
        pattern = bytes((a if i % 2 == 0 else b) for i in range(m))
        _ALT_MEMO[(a, b, m)] = pattern
    return pattern


def apply_step(matrix: CoxeterMatrix, word: Word, step: Step) -> Word:
    """Apply one move to a word, validating its applicability."""
    if isinstance(step, BraidStep):
        a, b = step.pair
        m = matrix.m(a, b)
        if m == INFINITY:
            raise ReplayError(
                f"no braid relation between {matrix.names[a]} and {matrix.names[b]}"
            )
        if step.pos < 0 or word[step.pos : step.pos + m] != _alternating(a, b, m):
            raise ReplayError(f"braid move does not apply at position {step.pos}")
        return word[: step.pos] + _alternating(b, a, m) + word[step.pos + m :]
    if isinstance(step, RotateStep):
        if word != step.word:
            raise ReplayError("rotation applied to an unexpected word")
        if not 0 <= step.k <= len(word):
            raise ReplayError(f"rotation amount {step.k} out of range")
        return word[step.k :] + word[: step.k]
    if isinstance(step, CancelStep):
        p = step.pos
        if p < 0 or p + 1 >= len(word) or word[p] != word[p + 1]:
            raise ReplayError(f"no equal adjacent pair at position {p}")
        return word[:p] + word[p + 2 :]
    raise ReplayError(f"unknown move {step!r}")


def _braid_moves(matrix: CoxeterMatrix, word: Word, only_commutations: bool = False):
    """All applicable braid moves of a word, in deterministic position order."""
    out = []
    n = len(word)
    table = matrix.table
    for pos in range(n - 1):
        a, b = word[pos], word[pos + 1]
        if a == b:
            continue
        m = table[a][b]
        if m == INFINITY or pos + m > n or (only_commutations and m != 2):
            continue
        if word[pos : pos + m] == _alternating(a, b, m):
            replaced = word[:pos] + _alternating(b, a, m) + word[pos + m :]
            out.append((BraidStep(pos, (a, b)), replaced))
    return out


def _first_repeat(word: Word) -> Optional[int]:
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            return i
    return None


def _orbit_scan(matrix, word, cap, parents=None, only_commutations=False):
    """Breadth-first search of the braid-move orbit of ``word``.

    Stops at the first word carrying an equal adjacent pair, returning
    ``(seen, (word, pos))``; otherwise exhausts the orbit and returns
    ``(seen, None)``.  ``parents`` (when given) collects first-discovery
    back-pointers ``word -> (previous word, BraidStep)``.
    """
    p = _first_repeat(word)
    if p is not None:
        return {word}, (word, p)
    seen = {word}
    queue = deque([word])
    if parents is not None:
        # slower path with step objects, used only when a path is wanted
        while queue:
            cur = queue.popleft()
            for step, nxt in _braid_moves(matrix, cur, only_commutations):
                if nxt in seen:
                    continue
                if len(seen) >= cap:
                    raise CapExceeded(f"braid-move orbit exceeded the node cap of {cap}")
                seen.add(nxt)
                parents[nxt] = (cur, step)
                p = _first_repeat(nxt)
                if p is not None:
                    return seen, (nxt, p)
                queue.append(nxt)
        return seen, None
    table = matrix.table
    alternating = _alternating
    while queue:
        cur = queue.popleft()
        n = len(cur)
        for pos in range(n - 1):
            a, b = cur[pos], cur[pos + 1]
            m = table[a][b]
            if m == INFINITY or pos + m > n or (only_commutations and m != 2):
                continue
            if cur[pos : pos + m] != alternating(a, b, m):
                continue
            nxt = cur[:pos] + alternating(b, a, m) + cur[pos + m :]
            if nxt in seen:
                continue
            if len(seen) >= cap:
                raise CapExceeded(f"braid-move orbit exceeded the node cap of {cap}")
            seen.add(nxt)
            p = _first_repeat(nxt)
            if p is not None:
                return seen, (nxt, p)
            queue.append(nxt)
    return seen, None


def _cache(matrix, name) -> dict:
    return matrix._scratch.setdefault(name, {})


def is_reduced(matrix: CoxeterMatrix, word: WordLike, cap: int = DEFAULT_CAP) -> bool:
    """Decide reducedness by closure search with early exit on a repeated pair."""
    word = matrix.word(word)
    cache = _cache(matrix, "reduced")
    hit = cache.get(word)
    if hit is not None:
        return hit
    seen, repeat = _orbit_scan(matrix, word, cap)
    verdict = repeat is None
    if len(seen) <= _MEMBER_CACHE_LIMIT:
        # every word of one orbit shares the verdict
        for w in seen:
            cache[w] = verdict
    else:
        cache[word] = verdict
    return verdict


def braid_class(matrix: CoxeterMatrix, word: WordLike, cap: int = DEFAULT_CAP) -> frozenset:
    """The set of words reachable from a reduced word by braid moves.

    By Tits' theorem this is exactly the set of reduced words of the element.
    """
    word = matrix.word(word)
    classes = _cache(matrix, "class")
    hit = classes.get(word)
    if hit is not None:
        return hit
    seen, repeat = _orbit_scan(matrix, word, cap)
    reduced = _cache(matrix, "reduced")
    if repeat is not None:
        for w in seen:
            reduced[w] = False
        raise NotReduced(f"word {matrix.word_str(word)} is not reduced")
    cls = frozenset(seen)
    if len(seen) <= _MEMBER_CACHE_LIMIT:
        for w in seen:
            reduced[w] = True
            classes[w] = cls
    else:
        reduced[word] = True
    return cls


def commutation_class(matrix: CoxeterMatrix, word: WordLike, cap: int = DEFAULT_CAP) -> frozenset:
    """Orbit of a reduced word under commutation moves only (pairs with m = 2)."""
    word = matrix.word(word)
    if not is_reduced(matrix, word, cap):
        raise NotReduced(f"word {matrix.word_str(word)} is not reduced")
    seen, _ = _orbit_scan(matrix, word, cap, only_commutations=True)
    return frozenset(seen)


def canonical_word(matrix: CoxeterMatrix, word: WordLike, cap: int = DEFAULT_CAP) -> Word:
    """Shortlex-least reduced word of the element spelled by ``word``.

    Repeatedly searches the braid orbit for an equal adjacent pair, deletes
    it, and restarts; once no deletion applies, takes the least orbit member.
    """
    cur = matrix.word(word)
    canon_cache = _cache(matrix, "canon")
    reduced = _cache(matrix, "reduced")
    trail = []
    while True:
        hit = canon_cache.get(cur)
        if hit is not None:
            canon = hit
            break
        trail.append(cur)
        seen, repeat = _orbit_scan(matrix, cur, cap)
        if repeat is None:
            canon = min(seen)
            if len(seen) <= _MEMBER_CACHE_LIMIT:
                cls = frozenset(seen)
                classes = _cache(matrix, "class")
                for w in seen:
                    reduced[w] = True
                    classes[w] = cls
                    canon_cache[w] = canon
            else:
                reduced[cur] = True
                reduced[canon] = True
                canon_cache[canon] = canon
            break
        if len(seen) <= _MEMBER_CACHE_LIMIT:
            for w in seen:
                reduced[w] = False
        sigma, p = repeat
        cur = sigma[:p] + sigma[p + 2 :]
    for w in trail:
        canon_cache[w] = canon
    return canon


def _walk_parents(parents, target) -> list:
    chain = []
    w = target
    while w in parents:
        w, step = parents[w]
        chain.append(step)
    chain.reverse()
    return chain


def reduce_word_with_path(matrix: CoxeterMatrix, word: WordLike, cap: int = DEFAULT_CAP):
    """Like :func:`reduce_word`, also returning the replayable move path."""
    cur = matrix.word(word)
    steps = []
    while True:
        parents = {}
        seen, repeat = _orbit_scan(matrix, cur, cap, parents)
        if repeat is None:
            canon = canonical_word(matrix, cur, cap)
            steps.extend(_walk_parents(parents, canon))
            return Element(matrix, canon), steps
        sigma, p = repeat
        steps.extend(_walk_parents(parents, sigma))
        steps.append(CancelStep(p))
        cur = sigma[:p] + sigma[p + 2 :]


def braid_word_path(matrix: CoxeterMatrix, source: WordLike, target: WordLike,
                    cap: int = DEFAULT_CAP) -> list:
    """A braid-move path between two words of one braid class."""
    source = matrix.word(source)
    target = matrix.word(target)
    if source == target:
        return []
    parents = {}
    seen = {source}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        for step, nxt in _braid_moves(matrix, cur):
            if nxt in seen:
                continue
            if len(seen) >= cap:
                raise CapExceeded(f"braid-move orbit exceeded the node cap of {cap}")
            seen.add(nxt)
            parents[nxt] = (cur, step)
            if nxt == target:
                return _walk_parents(parents, target)
            queue.append(nxt)
    raise ValueError(
        f"{matrix.word_str(source)} and {matrix.word_str(target)} are not braid-related"
    )


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class Element:
    """A group element, held as its shortlex-least reduced word.

    Do not construct directly from an arbitrary word; go through
    :meth:`CoxeterMatrix.element` or :func:`reduce_word`, which canonicalise.
    """

    system: CoxeterMatrix
    word: Word

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def inverse(self) -> "Element":
        return inverse(self)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return multiply(self, other)

    def __pow__(self, n: int) -> "Element":
        return power(self, n)

    def __lt__(self, other: "Element") -> bool:
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __str__(self):
        return self.system.word_str(self.word)

    def __repr__(self):
        return f"Element({self.system.word_str(self.word)!r})"


def sort_key(x: Element):
    """Canonical element order: by length, then shortlex on the canonical word."""
    return (len(x.word), x.word)


def _same_system(x: Element, y: Element) -> CoxeterMatrix:
    if x.system != y.system:
        raise ValueError("elements live in different Coxeter systems")
    return x.system


def reduce_word(matrix: CoxeterMatrix, word: WordLike, cap: int = DEFAULT_CAP) -> Element:
    """Reduce a word and return the element it spells."""
    return Element(matrix, canonical_word(matrix, word, cap))


def multiply(x: Element, y: Element, cap: int = DEFAULT_CAP) -> Element:
    matrix = _same_system(x, y)
    cache = _cache(matrix, "mul")
    key = (x.word, y.word)
    hit = cache.get(key)
    if hit is None:
        hit = canonical_word(matrix, x.word + y.word, cap)
        cache[key] = hit
    return Element(matrix, hit)


def inverse(x: Element, cap: int = DEFAULT_CAP) -> Element:
    cache = _cache(x.system, "inv")
    hit = cache.get(x.word)
    if hit is None:
        # the reverse of a reduced word is reduced; only canonicalisation remains
        hit = canonical_word(x.system, x.word[::-1], cap)
        cache[x.word] = hit
    return Element(x.system, hit)


def power(x: Element, n: int, cap: int = DEFAULT_CAP) -> Element:
    if n < 0:
        return power(inverse(x, cap), -n, cap)
    acc = x.system.identity()
    for _ in range(n):
        acc = multiply(acc, x, cap)
    return acc


def conjugate(v: Element, x: Element, cap: int = DEFAULT_CAP) -> Element:
    """v * x * v^-1."""
    return multiply(multiply(v, x, cap), inverse(v, cap), cap)


def left_descents(x: Element, cap: int = DEFAULT_CAP) -> frozenset:
    """{s : l(s*x) < l(x)}; equivalently the first letters over all reduced words."""
    return frozenset(w[0] for w in braid_class(x.system, x.word, cap) if w)


def right_descents(x: Element, cap: int = DEFAULT_CAP) -> frozenset:
    return frozenset(w[-1] for w in braid_class(x.system, x.word, cap) if w)


def support(x: Element) -> frozenset:
    """Generator indices occurring in the canonical word (the same for every
    reduced word, since braid moves preserve the letter set)."""
    return frozenset(x.word)
