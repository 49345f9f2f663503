"""Symbolic sequences (system-call traces) and dataset ingestion.

A trace is a plain-text file of whitespace-separated decimal system-call
numbers. A dataset is up to three directories of traces: normal training,
normal validation and attacks. Attack traces pick up a category label from
their immediate subdirectory when the attack directory is nested (the usual
public-corpus layout, e.g. Attack_Data_Master/Adduser_1/...).
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ConfigurationError, TraceParseError

log = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class Sequence:
    """An ordered sequence of non-negative integer symbols.

    ``source_id`` is an opaque identifier (file path, or ``path:line`` in
    one-trace-per-line mode) used for deterministic tie-breaking and
    reporting.
    """

    symbols: tuple[int, ...]
    source_id: str = ""

    def __post_init__(self):
        symbols = self.symbols
        if not isinstance(symbols, tuple):
            symbols = tuple(symbols)
            object.__setattr__(self, "symbols", symbols)
        if symbols and min(symbols) < 0:
            raise ValueError(
                f"negative symbol in sequence {self.source_id!r}"
            )

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, item):
        return self.symbols[item]

    def __repr__(self) -> str:
        body = " ".join(map(str, self.symbols[:8]))
        if len(self.symbols) > 8:
            body += " ..."
        return f"Sequence([{body}], len={len(self.symbols)}, source_id={self.source_id!r})"


@dataclass(frozen=True)
class Dataset:
    """Loaded trace corpus: normal training/validation splits plus attacks.

    ``attack_categories`` is aligned with ``attacks`` (None when an attack
    trace sits directly in the attack directory).
    """

    normal_train: tuple[Sequence, ...]
    normal_validation: tuple[Sequence, ...]
    attacks: tuple[Sequence, ...]
    attack_categories: tuple[str | None, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        object.__setattr__(self, "normal_train", tuple(self.normal_train))
        object.__setattr__(self, "normal_validation", tuple(self.normal_validation))
        object.__setattr__(self, "attacks", tuple(self.attacks))
        cats = self.attack_categories
        if cats is None:
            cats = (None,) * len(self.attacks)
        object.__setattr__(self, "attack_categories", tuple(cats))
        if len(self.attack_categories) != len(self.attacks):
            raise ValueError("attack_categories must align with attacks")


def parse_trace(text: str, source_id: str = "") -> Sequence:
    """Parse whitespace-separated decimal symbols into a Sequence.

    Raises TraceParseError on any non-integer or negative token, naming the
    token and its character offset. Empty input parses to an empty Sequence.
    """
    where = f" in {source_id}" if source_id else ""
    symbols = []
    for match in _TOKEN.finditer(text):
        token = match.group()
        try:
            value = int(token, 10)
        except ValueError:
            raise TraceParseError(
                f"non-integer token {token!r} at offset {match.start()}{where}"
            ) from None
        if value < 0:
            raise TraceParseError(
                f"negative system-call number {token!r} at offset {match.start()}{where}"
            )
        symbols.append(value)
    return Sequence(tuple(symbols), source_id)


def serialize_trace(sequence: Sequence) -> str:
    """Render a Sequence back into the on-disk text format."""
    return " ".join(str(s) for s in sequence.symbols)


def deduplicate(sequences: Iterable[Sequence]) -> list[Sequence]:
    """Drop exact-content duplicates, keeping the first occurrence in order."""
    seen: set[tuple[int, ...]] = set()
    out = []
    for seq in sequences:
        if seq.symbols not in seen:
            seen.add(seq.symbols)
            out.append(seq)
    return out


def _trace_files(root: Path) -> list[Path]:
    # sorted for deterministic dataset order regardless of filesystem
    return sorted(p for p in root.rglob("*") if p.is_file())


def _read_dir(root: Path, one_trace_per: str) -> Iterator[Sequence]:
    for path in _trace_files(root):
        text = path.read_text()
        if one_trace_per == "file":
            seq = parse_trace(text, str(path))
            if len(seq) == 0:
                log.warning("dropping empty trace %s", path)
                continue
            yield seq
        else:
            for lineno, line in enumerate(text.splitlines(), start=1):
                if not line.strip():
                    continue
                yield parse_trace(line, f"{path}:{lineno}")


def load_traces(directory, one_trace_per: str = "file") -> list[Sequence]:
    """Load every trace under a directory (recursively, sorted by path)."""
    root = Path(directory)
    if not root.is_dir():
        raise ConfigurationError(f"not a directory: {root}")
    if one_trace_per not in ("file", "line"):
        raise ConfigurationError(f"one_trace_per must be 'file' or 'line', got {one_trace_per!r}")
    return list(_read_dir(root, one_trace_per))


def _category_of(path_str: str, attack_root: Path) -> str | None:
    try:
        rel = Path(path_str.split(":", 1)[0]).relative_to(attack_root)
    except ValueError:
        return None
    return rel.parts[0] if len(rel.parts) > 1 else None


def load_dataset(
    train_dir,
    validation_dir,
    attack_dir,
    one_trace_per: str = "file",
    dedup: bool = True,
) -> Dataset:
    """Load a full dataset from trace directories.

    ``validation_dir`` may be None for corpora that ship a single normal
    pool (the enrichment protocols can then split it randomly). With
    ``dedup`` on, exact-content duplicates are removed within each normal
    split and any validation sequence already present in training is
    dropped, so no sequence appears in both. Attack traces are never
    deduplicated.
    """
    train = load_traces(train_dir, one_trace_per)
    validation = load_traces(validation_dir, one_trace_per) if validation_dir else []
    attack_root = Path(attack_dir)
    attacks = load_traces(attack_dir, one_trace_per)

    if dedup:
        train = deduplicate(train)
        validation = deduplicate(validation)
        train_contents = {seq.symbols for seq in train}
        validation = [seq for seq in validation if seq.symbols not in train_contents]

    if not train:
        raise ConfigurationError(f"no training sequences loaded from {train_dir}")
    if validation_dir and not validation:
        raise ConfigurationError(f"no validation sequences loaded from {validation_dir}")
    if not attacks:
        raise ConfigurationError(f"no attack sequences loaded from {attack_dir}")

    categories = tuple(_category_of(seq.source_id, attack_root) for seq in attacks)
    return Dataset(tuple(train), tuple(validation), tuple(attacks), categories)
