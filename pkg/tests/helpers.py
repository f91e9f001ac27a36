"""Shared test systems and small independent oracles.

The systems are module-level singletons so that every test module reuses the
same memo caches.  The oracles here are deliberately naive re-derivations
(fixpoint iteration, explicit subgroup enumeration) kept independent of the
engine's search machinery.
"""

import itertools
import math

from coxkit import CoxeterMatrix

INF = math.inf

A1 = CoxeterMatrix.from_pairs(["s"], {})
A2 = CoxeterMatrix.from_pairs("st", {("s", "t"): 3})
A1A1 = CoxeterMatrix.from_pairs("st", {})
B2 = CoxeterMatrix.from_pairs("st", {("s", "t"): 4})
DINF = CoxeterMatrix.from_pairs("st", {("s", "t"): INF})
A3 = CoxeterMatrix.from_pairs(["s1", "s2", "s3"], {("s1", "s2"): 3, ("s2", "s3"): 3})
B3 = CoxeterMatrix.from_pairs(["s1", "s2", "s3"], {("s1", "s2"): 4, ("s2", "s3"): 3})
A2T = CoxeterMatrix.from_pairs("stu", {("s", "t"): 3, ("t", "u"): 3, ("s", "u"): 3})
U3 = CoxeterMatrix.from_pairs(
    "abc", {("a", "b"): INF, ("b", "c"): INF, ("a", "c"): INF}
)

#: systems named by the word-problem equivalence sweep
WORD_PROBLEM_SYSTEMS = (A3, B3, A2T, DINF, U3)


def all_words(matrix, max_len):
    """Every word over the alphabet, lengths 0..max_len."""
    for length in range(max_len + 1):
        for letters in itertools.product(range(matrix.rank), repeat=length):
            yield bytes(letters)


def naive_braid_orbit(matrix, word):
    """Independent braid-orbit oracle: plain fixpoint iteration.

    Applies every applicable braid move to every known word until nothing new
    appears.  No queues, no early exits, no caching.
    """
    def moves(w):
        out = []
        for pos in range(len(w) - 1):
            a, b = w[pos], w[pos + 1]
            m = matrix.m(a, b)
            if m == INF or pos + m > len(w):
                continue
            factor = bytes((a if i % 2 == 0 else b) for i in range(m))
            if w[pos : pos + m] == factor:
                swapped = bytes((b if i % 2 == 0 else a) for i in range(m))
                out.append(w[:pos] + swapped + w[pos + m :])
        return out

    orbit = {word}
    while True:
        grown = set()
        for w in orbit:
            for new in moves(w):
                if new not in orbit:
                    grown.add(new)
        if not grown:
            return orbit
        orbit |= grown


def naive_is_reduced(matrix, word):
    """Reducedness by the same fixpoint iteration: no orbit word repeats."""
    return not any(
        any(w[i] == w[i + 1] for i in range(len(w) - 1))
        for w in naive_braid_orbit(matrix, word)
    )
