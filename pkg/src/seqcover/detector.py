"""Score-and-threshold decision procedure over the normal model."""

from dataclasses import dataclass
from fractions import Fraction

from .covering import Covering, greedy_cover, ratio_str
from .errors import ConfigurationError
from .model import NormalModel
from .traces import Sequence

NORMAL = "normal"
ANOMALY = "anomaly"


def _as_fraction(value) -> Fraction:
    # floats are read as their decimal rendering: sigma=0.97 means 97/100
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class DetectorConfig:
    """Decision threshold sigma in [0, 1]; similarity >= sigma is normal.

    0.97 is a sensible default for system-call traces (coverings no larger
    than a few percent of the sequence); fine-tuning is application work.
    """

    sigma: Fraction = Fraction(97, 100)

    def __post_init__(self):
        sigma = _as_fraction(self.sigma)
        if not 0 <= sigma <= 1:
            raise ConfigurationError(f"sigma must lie in [0, 1], got {sigma}")
        object.__setattr__(self, "sigma", sigma)


@dataclass(frozen=True)
class ScoredSequence:
    """A scored test sequence; the covering doubles as anomaly localization.

    ``covering`` is None when the score came from a baseline similarity,
    which has no covering to attach.
    """

    source_id: str
    similarity: Fraction
    covering: Covering | None
    verdict: str

    def as_record(self) -> dict:
        """One JSON-ready record per sequence."""
        return {
            "source_id": self.source_id,
            "similarity": ratio_str(self.similarity),
            "similarity_decimal": f"{float(self.similarity):.6f}",
            "covering_size": self.covering.size if self.covering else None,
            "segments": [list(seg) for seg in self.covering.segments] if self.covering else None,
            "verdict": self.verdict,
        }


def anomaly_score(similarity: Fraction) -> Fraction:
    """Ranking score for evaluation: higher means more anomalous."""
    return 1 - similarity


def classify(model: NormalModel, config: DetectorConfig, s: Sequence,
             variant: str = "binary") -> ScoredSequence:
    """Cover s against the model, score it, and apply the threshold.

    The empty sequence scores 1 by convention (it is a substring of
    anything), with an empty covering attached.
    """
    n = len(s.symbols) if isinstance(s, Sequence) else len(s)
    if n == 0:
        cover = Covering((), 0)
        similarity = Fraction(1)
    else:
        cover = greedy_cover(model, s, variant)
        similarity = Fraction(n - cover.size + 1, n)
    verdict = NORMAL if similarity >= config.sigma else ANOMALY
    source_id = getattr(s, "source_id", "")
    return ScoredSequence(source_id, similarity, cover, verdict)


def score_batch(model: NormalModel, config: DetectorConfig, batch,
                variant: str = "binary") -> list[ScoredSequence]:
    """Element-wise classify, input order preserved."""
    return [classify(model, config, s, variant) for s in batch]
