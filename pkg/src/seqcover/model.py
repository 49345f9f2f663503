"""The normal model: the reference set S plus its suffix index."""

from typing import Iterable

from .suffix_tree import GeneralizedSuffixIndex
from .traces import Sequence


class NormalModel:
    """Set of normal sequences with a generalized suffix index over them.

    Treated as immutable: enrichment produces a new model via ``extended``,
    rebuilding the index from scratch (construction is cheap next to the
    covering extractions it serves).
    """

    __slots__ = ("sequences", "index")

    def __init__(self, sequences: Iterable[Sequence] = ()):
        self.sequences: tuple[Sequence, ...] = tuple(sequences)
        self.index = GeneralizedSuffixIndex(self.sequences)

    def __len__(self) -> int:
        return len(self.sequences)

    def extended(self, more: Iterable[Sequence]) -> "NormalModel":
        return NormalModel(self.sequences + tuple(more))

    def in_s_sub(self, symbols) -> bool:
        """Admissibility of a covering segment.

        Single symbols are always admissible (the substring pool is drawn
        from S together with the whole alphabet); longer segments must occur
        verbatim inside one indexed sequence.
        """
        if len(symbols) == 1:
            return True
        return self.index.contains(symbols)
