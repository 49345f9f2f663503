"""Classical string similarities used as comparison points.

Levenshtein (LEV), longest common subsequence (LCSq, gaps allowed) and
longest common substring (LCSt, contiguous), each normalized into [0, 1].
Against a set of normal sequences the score is the similarity to the
nearest member.
"""

from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence as PySequence

from .errors import ConfigurationError


class BaselineKind(Enum):
    LEV = "LEV"
    LCSQ = "LCSq"
    LCST = "LCSt"


def _syms(s) -> tuple:
    got = getattr(s, "symbols", None)
    return got if got is not None else tuple(s)


def levenshtein_distance(a: PySequence, b: PySequence) -> int:
    """Unit-cost edit distance, two-row dynamic program (O(min(n,m)) memory)."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, x in enumerate(a):
        current = [i + 1]
        for j, y in enumerate(b):
            current.append(min(
                previous[j + 1] + 1,        # deletion
                current[j] + 1,             # insertion
                previous[j] + (x != y),     # substitution / match
            ))
        previous = current
    return previous[-1]


def lcsq_length(a: PySequence, b: PySequence) -> int:
    """Length of a longest (gapped) common subsequence, two-row DP."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return 0
    previous = [0] * (len(b) + 1)
    for x in a:
        current = [0]
        for j, y in enumerate(b):
            if x == y:
                current.append(previous[j] + 1)
            else:
                current.append(max(previous[j + 1], current[j]))
        previous = current
    return previous[-1]


class _SuffixAutomaton:
    """Suffix automaton of one sequence; dict transitions over int symbols."""

    __slots__ = ("next", "link", "length")

    def __init__(self, seq):
        self.next: list[dict] = [{}]
        self.link: list[int] = [-1]
        self.length: list[int] = [0]
        last = 0
        for c in seq:
            last = self._extend(last, c)

    def _extend(self, last: int, c) -> int:
        cur = len(self.next)
        self.next.append({})
        self.length.append(self.length[last] + 1)
        self.link.append(-1)
        p = last
        while p != -1 and c not in self.next[p]:
            self.next[p][c] = cur
            p = self.link[p]
        if p == -1:
            self.link[cur] = 0
            return cur
        q = self.next[p][c]
        if self.length[p] + 1 == self.length[q]:
            self.link[cur] = q
            return cur
        clone = len(self.next)
        self.next.append(dict(self.next[q]))
        self.length.append(self.length[p] + 1)
        self.link.append(self.link[q])
        while p != -1 and self.next[p].get(c) == q:
            self.next[p][c] = clone
            p = self.link[p]
        self.link[q] = clone
        self.link[cur] = clone
        return cur


def lcst_length(a: PySequence, b: PySequence) -> int:
    """Length of the longest contiguous common substring in O(n + m):
    stream one sequence through the suffix automaton of the other."""
    if not a or not b:
        return 0
    sam = _SuffixAutomaton(a)
    state = 0
    matched = 0
    best = 0
    for c in b:
        while state and c not in sam.next[state]:
            state = sam.link[state]
            matched = sam.length[state]
        if c in sam.next[state]:
            state = sam.next[state][c]
            matched += 1
            if matched > best:
                best = matched
        else:
            state = 0
            matched = 0
    return best


def _normalizer(n: int, m: int, norm: str) -> int:
    if norm == "max":
        return max(n, m)
    if norm == "sum":
        return n + m
    raise ConfigurationError(f"unknown LEV normalization {norm!r} (use 'max' or 'sum')")


def lev_similarity(s1, s2, norm: str = "max") -> Fraction:
    """1 - LEV(s1, s2) / max(|s1|, |s2|), in [0, 1]; 1 for two empties.

    ``norm='sum'`` divides by |s1| + |s2| instead (looser normalization some
    write-ups use; rankings between fixed sequences are unaffected).
    """
    a, b = _syms(s1), _syms(s2)
    if not a and not b:
        return Fraction(1)
    return 1 - Fraction(levenshtein_distance(a, b), _normalizer(len(a), len(b), norm))


def lcsq_similarity(s1, s2) -> Fraction:
    """LCSq(s1, s2) / max(|s1|, |s2|); 1 for two empties."""
    a, b = _syms(s1), _syms(s2)
    if not a and not b:
        return Fraction(1)
    return Fraction(lcsq_length(a, b), max(len(a), len(b)))


def lcst_similarity(s1, s2) -> Fraction:
    """LCSt(s1, s2) / max(|s1|, |s2|); 1 for two empties."""
    a, b = _syms(s1), _syms(s2)
    if not a and not b:
        return Fraction(1)
    return Fraction(lcst_length(a, b), max(len(a), len(b)))


def pairwise_baseline(kind: BaselineKind, s1, s2, lev_norm: str = "max") -> Fraction:
    if kind is BaselineKind.LEV:
        return lev_similarity(s1, s2, norm=lev_norm)
    if kind is BaselineKind.LCSQ:
        return lcsq_similarity(s1, s2)
    if kind is BaselineKind.LCST:
        return lcst_similarity(s1, s2)
    raise ConfigurationError(f"unknown baseline kind {kind!r}")


def nearest_similarity_to_set(
    kind: BaselineKind, model_sequences: Iterable, s, lev_norm: str = "max"
) -> Fraction:
    """Similarity of s to the closest member of the normal set (max over members)."""
    best: Fraction | None = None
    for ref in model_sequences:
        value = pairwise_baseline(kind, s, ref, lev_norm=lev_norm)
        if best is None or value > best:
            best = value
    if best is None:
        raise ConfigurationError("nearest-similarity scoring needs a non-empty normal set")
    return best
