"""Instance-selection loop growing the normal model from validation data.

Protocol per iteration: build the model from the current training set,
score every remaining normal validation sequence and every attack sequence,
record separability (AUC, attacks positive, anomaly score = 1 - similarity),
then move the worst-scoring normals into the training set. Repeats until
the stop rule fires, or until the validation pool is exhausted, in which
case the trace is flagged as truncated.

Only normal data ever enters the model; attacks are scored but never
selected. Two AUC variants are recorded: over all attacks, and excluding
attacks whose similarity is exactly 1 at that iteration (attacks that are
verbatim substrings of the training data, which no history-based score can
separate).
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .baselines import BaselineKind, nearest_similarity_to_set
from .detector import ANOMALY, NORMAL, DetectorConfig, ScoredSequence, anomaly_score, score_batch
from .errors import ConfigurationError
from .evaluation import auc_from_scores
from .model import NormalModel
from .traces import Dataset, Sequence

METHODS = ("SC4ID", "LEV", "LCSq", "LCSt")
_BASELINE_BY_METHOD = {"LEV": BaselineKind.LEV, "LCSq": BaselineKind.LCSQ, "LCSt": BaselineKind.LCST}


@dataclass(frozen=True)
class EnrichmentConfig:
    """Initial-model selection, batch size, stop rule and RNG seed.

    ``initial_selection='fixed_list'`` takes the dataset's training split as
    the initial model and its validation split as the pool;
    ``'random_fraction'`` pools both splits and draws ``init_fraction`` of
    them at random. Exactly one stop rule must be set.
    """

    initial_selection: str = "fixed_list"
    init_fraction: float = 0.1
    batch_size: int = 1
    stop_train_fraction: float | None = 0.5
    stop_max_iterations: int | None = None
    stop_auc_target: float | None = None
    rng_seed: int = 0

    def __post_init__(self):
        if self.initial_selection not in ("fixed_list", "random_fraction"):
            raise ConfigurationError(
                f"initial_selection must be 'fixed_list' or 'random_fraction', got {self.initial_selection!r}"
            )
        if self.initial_selection == "random_fraction" and not 0 < self.init_fraction < 1:
            raise ConfigurationError(f"init_fraction must lie in (0, 1), got {self.init_fraction}")
        if self.batch_size < 1:
            raise ConfigurationError(f"batch_size must be >= 1, got {self.batch_size}")
        rules = [self.stop_train_fraction, self.stop_max_iterations, self.stop_auc_target]
        if sum(rule is not None for rule in rules) != 1:
            raise ConfigurationError("exactly one stop rule must be set")
        if self.stop_train_fraction is not None and not 0 < self.stop_train_fraction <= 1:
            raise ConfigurationError(f"stop_train_fraction must lie in (0, 1], got {self.stop_train_fraction}")
        if self.stop_max_iterations is not None and self.stop_max_iterations < 1:
            raise ConfigurationError("stop_max_iterations must be >= 1")


@dataclass(frozen=True)
class EnrichmentRecord:
    iteration: int
    train_size: int
    train_fraction: Fraction
    auc: Fraction
    auc_excluding_exact_matches: Fraction | None
    elapsed_seconds: float
    added_source_ids: tuple[str, ...]


@dataclass(frozen=True)
class EnrichmentTrace:
    """Per-iteration records plus run-level flags.

    ``truncated``: the pool was exhausted before the stop rule fired.
    ``aborted``: the per-method time budget expired (comparison runs).
    """

    method: str
    records: tuple[EnrichmentRecord, ...]
    total_normals: int
    truncated: bool = False
    aborted: bool = False


def select_worst_k(scored: list[ScoredSequence], k: int) -> list[ScoredSequence]:
    """The min(k, len) items with the lowest similarity; ties break toward
    the lexicographically smaller source_id for determinism."""
    if not scored:
        raise ValueError("select_worst_k over an empty scored list")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ranked = sorted(scored, key=lambda item: (item.similarity, item.source_id))
    return ranked[: min(k, len(ranked))]


def _initial_split(dataset: Dataset, config: EnrichmentConfig) -> tuple[list[Sequence], list[Sequence]]:
    if config.initial_selection == "fixed_list":
        return list(dataset.normal_train), list(dataset.normal_validation)
    pool = list(dataset.normal_train) + list(dataset.normal_validation)
    if len(pool) < 2:
        raise ConfigurationError("random initialization needs at least two normal sequences")
    # always leave something to enrich from
    count = max(1, min(round(config.init_fraction * len(pool)), len(pool) - 1))
    rng = random.Random(config.rng_seed)
    chosen = set(rng.sample(range(len(pool)), count))
    train = [pool[i] for i in sorted(chosen)]
    rest = [pool[i] for i in range(len(pool)) if i not in chosen]
    return train, rest


def _make_scorer(method: str, train: list[Sequence], sigma: DetectorConfig,
                 variant: str, lev_norm: str) -> Callable[[list[Sequence]], list[ScoredSequence]]:
    if method == "SC4ID":
        model = NormalModel(train)
        return lambda batch: score_batch(model, sigma, batch, variant)
    kind = _BASELINE_BY_METHOD[method]
    reference = list(train)

    def score(batch: list[Sequence]) -> list[ScoredSequence]:
        out = []
        for seq in batch:
            similarity = nearest_similarity_to_set(kind, reference, seq, lev_norm=lev_norm)
            verdict = NORMAL if similarity >= sigma.sigma else ANOMALY
            out.append(ScoredSequence(seq.source_id, similarity, None, verdict))
        return out

    return score


def run_enrichment(
    dataset: Dataset,
    config: EnrichmentConfig,
    method: str = "SC4ID",
    variant: str = "binary",
    lev_norm: str = "max",
    time_budget_seconds: float | None = None,
    on_iteration: Callable[[EnrichmentRecord, list[ScoredSequence], list[ScoredSequence]], None] | None = None,
) -> EnrichmentTrace:
    """Run the enrichment loop and return its full trace.

    ``on_iteration`` (if given) receives each record together with the
    iteration's scored pool and scored attacks, in order; the CLI uses it to
    emit per-iteration ROC and histogram files without the trace having to
    retain every score.
    """
    if method not in METHODS:
        raise ConfigurationError(f"unknown method {method!r}, expected one of {METHODS}")
    train, pool = _initial_split(dataset, config)
    attacks = list(dataset.attacks)
    if not train:
        raise ConfigurationError("initial training set is empty")
    if not attacks:
        raise ConfigurationError("no attack sequences to evaluate against")
    ids = [seq.source_id for seq in train + pool]
    if len(set(ids)) != len(ids):
        raise ConfigurationError("normal sequences need unique source_ids for deterministic selection")

    total_normals = len(train) + len(pool)
    stop_fraction = Fraction(str(config.stop_train_fraction)) if config.stop_train_fraction is not None else None
    auc_target = Fraction(str(config.stop_auc_target)) if config.stop_auc_target is not None else None
    sigma = DetectorConfig()

    records: list[EnrichmentRecord] = []
    truncated = False
    aborted = False
    iteration = 0
    run_started = time.perf_counter()

    while True:
        if not pool:
            truncated = True  # nothing left to score or to select from
            break
        # the initial evaluation always runs; the budget gates continuation
        if (time_budget_seconds is not None and records
                and time.perf_counter() - run_started > time_budget_seconds):
            aborted = True
            break

        step_started = time.perf_counter()
        train_size = len(train)
        scorer = _make_scorer(method, train, sigma, variant, lev_norm)
        scored_pool = scorer(pool)
        scored_attacks = scorer(attacks)

        normal_anomaly = [anomaly_score(item.similarity) for item in scored_pool]
        attack_anomaly = [anomaly_score(item.similarity) for item in scored_attacks]
        auc_all = auc_from_scores(normal_anomaly, attack_anomaly)
        separable = [score for item, score in zip(scored_attacks, attack_anomaly) if item.similarity != 1]
        auc_excl = auc_from_scores(normal_anomaly, separable) if separable else None
        elapsed = time.perf_counter() - step_started

        stop = False
        if stop_fraction is not None and Fraction(train_size, total_normals) >= stop_fraction:
            stop = True
        if config.stop_max_iterations is not None and iteration + 1 >= config.stop_max_iterations:
            stop = True
        if auc_target is not None and auc_all >= auc_target:
            stop = True

        added: tuple[str, ...] = ()
        if not stop:
            worst = select_worst_k(scored_pool, min(config.batch_size, len(scored_pool)))
            added = tuple(item.source_id for item in worst)
            added_set = set(added)
            by_id = {seq.source_id: seq for seq in pool}
            train.extend(by_id[source_id] for source_id in added)
            pool = [seq for seq in pool if seq.source_id not in added_set]

        record = EnrichmentRecord(
            iteration=iteration,
            train_size=train_size,
            train_fraction=Fraction(train_size, total_normals),
            auc=auc_all,
            auc_excluding_exact_matches=auc_excl,
            elapsed_seconds=elapsed,
            added_source_ids=added,
        )
        records.append(record)
        if on_iteration is not None:
            on_iteration(record, scored_pool, scored_attacks)
        if stop:
            break
        iteration += 1

    return EnrichmentTrace(
        method=method,
        records=tuple(records),
        total_normals=total_normals,
        truncated=truncated,
        aborted=aborted,
    )
