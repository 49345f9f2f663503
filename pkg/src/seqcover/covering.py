"""Optimal sequence coverings and the covering similarity.

A covering of a test sequence is a contiguous partition into segments, each
of which is either a single symbol or a verbatim substring of some normal
sequence. The greedy left-to-right extraction (always take the longest
admissible segment) yields a covering of provably minimal cardinality k,
and the similarity of the sequence to the normal set is (|s| - k + 1) / |s|.

Two equivalent extractors are provided: a linear walk that extends each
segment symbol by symbol down the suffix tree, and a binary-search variant
that locates each segment's break with O(log |s|) fresh membership probes.
They return identical segment lists; only their cost profiles differ.

Similarities are exact rationals (``fractions.Fraction``) so that ranking
by score never hinges on floating-point tie-breaking.
"""

from dataclasses import dataclass
from fractions import Fraction

from .model import NormalModel
from .traces import Sequence


@dataclass(frozen=True)
class Covering:
    """Contiguous, exhaustive partition of a sequence into admissible
    segments, stored as half-open (start, end) index pairs."""

    segments: tuple[tuple[int, int], ...]
    covered_length: int

    @property
    def size(self) -> int:
        return len(self.segments)


def _symbols(s) -> tuple[int, ...]:
    got = getattr(s, "symbols", None)
    if got is not None:
        return got
    return s if isinstance(s, tuple) else tuple(s)


def _as_sequence(s) -> Sequence:
    return s if isinstance(s, Sequence) else Sequence(tuple(s))


def greedy_cover_linear(model: NormalModel, s) -> Covering:
    """Left-to-right greedy covering, each segment maximally extended.

    One suffix-tree descent per segment: the walk consumes each symbol of s
    at most once, so extraction is linear in |s|.
    """
    symbols = _symbols(s)
    n = len(symbols)
    if n == 0:
        raise ValueError("cannot cover the empty sequence (its similarity is defined as 1)")
    index = model.index
    segments = []
    start = 0
    while start < n:
        length = index.longest_match_from(symbols, start)
        segments.append((start, start + length))
        start += length
    return Covering(tuple(segments), n)


def find_break_binary(model: NormalModel, s, start: int, end_bound: int) -> int:
    """Largest t in (start, end_bound] with s[start:t] admissible.

    t == start + 1 is always admissible (single symbol), and admissibility
    of s[start:t] is monotone in t because substring membership is closed
    under prefixes, so a binary search applies. Each probe is a fresh
    membership descent from the root, costing at most the probed length.
    """
    symbols = _symbols(s)
    if not 0 <= start < end_bound <= len(symbols):
        raise ValueError(
            f"break search bounds [{start}, {end_bound}) invalid for length {len(symbols)}"
        )
    index = model.index
    lo, hi = start + 1, end_bound
    while lo < hi:
        mid = (lo + hi + 1) // 2  # mid - start >= 2: never the single-symbol case
        if index.contains_range(symbols, start, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def greedy_cover_binary(model: NormalModel, s) -> Covering:
    """Greedy covering with each break located by binary search.

    Returns exactly the same segments as ``greedy_cover_linear``; worst-case
    cost O(k * |s| * log|s|) for a covering of size k.
    """
    symbols = _symbols(s)
    n = len(symbols)
    if n == 0:
        raise ValueError("cannot cover the empty sequence (its similarity is defined as 1)")
    segments = []
    start = 0
    while start < n:
        t = find_break_binary(model, symbols, start, n)
        segments.append((start, t))
        start = t
    return Covering(tuple(segments), n)


def greedy_cover(model: NormalModel, s, variant: str = "binary") -> Covering:
    """Dispatch between the two equivalent extractors."""
    if variant == "binary":
        return greedy_cover_binary(model, s)
    if variant == "linear":
        return greedy_cover_linear(model, s)
    raise ValueError(f"unknown covering variant {variant!r}")


def covering_similarity(model: NormalModel, s, variant: str = "binary") -> Fraction:
    """Similarity of s to the model's sequence set: (|s| - k + 1) / |s|.

    Exactly 1 for the empty sequence; 1/|s| when nothing longer than a
    single symbol matches (in particular against an empty model, where the
    substring pool degenerates to the bare alphabet).
    """
    symbols = _symbols(s)
    n = len(symbols)
    if n == 0:
        return Fraction(1)
    k = greedy_cover(model, symbols, variant).size
    return Fraction(n - k + 1, n)


def pairwise_similarity(s1, s2) -> Fraction:
    """Symmetrized covering similarity between two sequences.

    Average of covering s1 with substrings of s2 and vice versa; 1 exactly
    when the sequences are equal, always positive.
    """
    a = _as_sequence(s1)
    b = _as_sequence(s2)
    forward = covering_similarity(NormalModel((b,)), a)
    backward = covering_similarity(NormalModel((a,)), b)
    return Fraction(1, 2) * (forward + backward)


def dp_optimal_cover_oracle(model: NormalModel, s, max_len: int = 256) -> int:
    """Exact minimum segment count, independent of the greedy extractors.

    Shortest path over the segmentation DAG whose edge (i, j) exists iff
    j == i + 1 or s[i:j] is a verbatim substring of the model. Candidate
    edges get their own membership probe (no reliance on prefix closure or
    maximal extension), which is quadratically many tests, hence the cap.
    """
    symbols = _symbols(s)
    n = len(symbols)
    if n == 0:
        raise ValueError("oracle requires a non-empty sequence")
    if n > max_len:
        raise ValueError(f"oracle capped at {max_len} symbols to bound probe count, got {n}")
    infinity = n + 1
    dist = [0] + [infinity] * n
    for i in range(n):
        step = dist[i] + 1
        if step >= infinity:
            continue
        for j in range(i + 1, n + 1):
            if step < dist[j] and (j == i + 1 or model.in_s_sub(symbols[i:j])):
                dist[j] = step
    return dist[n]


def ratio_str(value: Fraction) -> str:
    """Render an exact similarity as ``numerator/denominator``."""
    return f"{value.numerator}/{value.denominator}"
