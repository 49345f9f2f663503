"""ROC curves, AUC and score histograms over scored normal vs attack sets.

Attacks are the positive class and inputs are anomaly scores (higher means
more anomalous). All arithmetic is exact: the trapezoidal area under the
ROC curve equals the Mann-Whitney rank statistic (ties get half credit) to
the last digit, not merely within tolerance.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigurationError


def _fractions(values) -> list[Fraction]:
    return [value if isinstance(value, Fraction) else Fraction(value) for value in values]


@dataclass(frozen=True)
class RocCurve:
    """(false positive rate, true positive rate) points from (0,0) to (1,1),
    one per distinct score as the decision threshold sweeps downward."""

    points: tuple[tuple[Fraction, Fraction], ...]


def roc_curve(normal_scores, attack_scores) -> RocCurve:
    """Sweep the pooled scores from most to least anomalous."""
    if not attack_scores:
        raise ConfigurationError("ROC needs attack scores: the positive class is empty")
    if not normal_scores:
        raise ConfigurationError("ROC needs normal scores: the negative class is empty")
    negatives = len(normal_scores)
    positives = len(attack_scores)
    pooled = [(score, 1) for score in _fractions(attack_scores)]
    pooled += [(score, 0) for score in _fractions(normal_scores)]
    pooled.sort(key=lambda pair: pair[0], reverse=True)

    points = [(Fraction(0), Fraction(0))]
    true_pos = false_pos = 0
    i = 0
    total = len(pooled)
    while i < total:
        threshold = pooled[i][0]
        while i < total and pooled[i][0] == threshold:
            if pooled[i][1]:
                true_pos += 1
            else:
                false_pos += 1
            i += 1
        points.append((Fraction(false_pos, negatives), Fraction(true_pos, positives)))
    return RocCurve(tuple(points))


def auc(curve: RocCurve) -> Fraction:
    """Trapezoidal area under the curve, exact."""
    area = Fraction(0)
    points = curve.points
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        area += (x1 - x0) * (y0 + y1) / 2
    return area


def rank_auc(normal_scores, attack_scores) -> Fraction:
    """Probability a random attack outscores a random normal, ties half credit.

    Independent cross-check for the trapezoidal area; computed directly from
    the score pairs via binary search over the sorted normals.
    """
    if not attack_scores or not normal_scores:
        raise ConfigurationError("rank AUC needs both classes non-empty")
    normals = sorted(_fractions(normal_scores))
    total = Fraction(0)
    for score in _fractions(attack_scores):
        below = bisect_left(normals, score)
        tied = bisect_right(normals, score) - below
        total += below + Fraction(tied, 2)
    return total / (len(normals) * len(attack_scores))


def auc_from_scores(normal_scores, attack_scores) -> Fraction:
    return auc(roc_curve(normal_scores, attack_scores))


def histogram(scores, bin_count: int) -> list[tuple[Fraction, int]]:
    """Counts over equal-width bins of [0, 1]; the last bin is right-closed
    so a score of exactly 1 lands in it. Returns (bin lower edge, count)."""
    if bin_count < 1:
        raise ValueError(f"bin_count must be >= 1, got {bin_count}")
    counts = [0] * bin_count
    for value in _fractions(scores):
        if value < 0 or value > 1:
            raise ValueError(f"score {value} outside [0, 1]")
        idx = (value.numerator * bin_count) // value.denominator
        if idx == bin_count:
            idx -= 1
        counts[idx] += 1
    return [(Fraction(i, bin_count), count) for i, count in enumerate(counts)]
