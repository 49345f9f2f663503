"""Command-line surface: cover, detect, enrich, compare.

Every command that writes files also writes a ``manifest.json`` capturing
the exact flags, so a run can be repeated identically (all randomness flows
from the single --seed flag; emitted files are written in a fixed order).
"""

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .covering import Covering, greedy_cover, ratio_str
from .detector import ANOMALY, DetectorConfig, anomaly_score, score_batch
from .enrichment import METHODS, EnrichmentConfig, EnrichmentTrace, run_enrichment
from .errors import ConfigurationError, TraceParseError
from .evaluation import histogram, roc_curve
from .model import NormalModel
from .traces import Dataset, load_dataset, load_traces, parse_trace


def _write_manifest(out_dir: Path, command: str, args: argparse.Namespace) -> None:
    skip = {"func"}
    payload = {
        "tool": "seqcover",
        "version": __version__,
        "command": command,
        "args": {
            key: (str(value) if isinstance(value, Path) else value)
            for key, value in sorted(vars(args).items())
            if key not in skip
        },
    }
    (out_dir / "manifest.json").write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _csv_writer(path: Path):
    handle = path.open("w", newline="")
    return handle, csv.writer(handle, lineterminator="\n")


def _fmt(value: Fraction | float | None) -> str:
    return "" if value is None else f"{float(value):.6f}"


def _load_model(model_dir, one_trace_per: str) -> NormalModel:
    sequences = load_traces(model_dir, one_trace_per)
    if not sequences:
        raise ConfigurationError(f"no model sequences loaded from {model_dir}")
    return NormalModel(sequences)


def _cover_record(model: NormalModel, trace, variant: str) -> dict:
    n = len(trace)
    if n == 0:
        cover = Covering((), 0)
        similarity = Fraction(1)
    else:
        cover = greedy_cover(model, trace, variant)
        similarity = Fraction(n - cover.size + 1, n)
    return {
        "source_id": trace.source_id,
        "length": n,
        "variant": variant,
        "covering_size": cover.size,
        "segments": [list(seg) for seg in cover.segments],
        "similarity": ratio_str(similarity),
        "similarity_decimal": f"{float(similarity):.6f}",
    }


def cmd_cover(args) -> int:
    model = _load_model(args.model_dir, args.one_trace_per)
    trace_path = Path(args.trace)
    trace = parse_trace(trace_path.read_text(), str(trace_path))
    record = _cover_record(model, trace, args.variant)
    line = json.dumps(record)
    print(line)
    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "covering.json").write_text(line + "\n")
        _write_manifest(out_dir, "cover", args)
    return 0


def _load_batch(traces_path, one_trace_per: str):
    path = Path(traces_path)
    if path.is_dir():
        return load_traces(path, one_trace_per)
    if path.is_file():
        if one_trace_per == "line":
            return [
                parse_trace(line, f"{path}:{lineno}")
                for lineno, line in enumerate(path.read_text().splitlines(), start=1)
                if line.strip()
            ]
        return [parse_trace(path.read_text(), str(path))]
    raise ConfigurationError(f"traces path does not exist: {path}")


def cmd_detect(args) -> int:
    model = _load_model(args.model_dir, args.one_trace_per)
    batch = _load_batch(args.traces, args.one_trace_per)
    if not batch:
        raise ConfigurationError(f"no traces loaded from {args.traces}")
    config = DetectorConfig(args.sigma)
    scored = score_batch(model, config, batch, args.variant)
    lines = [json.dumps(item.as_record()) for item in scored]
    for line in lines:
        print(line)
    anomalies = sum(1 for item in scored if item.verdict == ANOMALY)
    print(
        f"scored {len(scored)} traces at sigma={float(config.sigma):g}: "
        f"{len(scored) - anomalies} normal, {anomalies} anomaly",
        file=sys.stderr,
    )
    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "scores.jsonl").write_text("\n".join(lines) + "\n")
        _write_manifest(out_dir, "detect", args)
    return 0


def _dataset_from_args(args) -> Dataset:
    dataset = load_dataset(
        args.train_dir,
        args.validation_dir,
        args.attack_dir,
        one_trace_per=args.one_trace_per,
    )
    init_list = getattr(args, "init_list", None)
    if init_list:
        names = {line.strip() for line in Path(init_list).read_text().splitlines() if line.strip()}
        normals = list(dataset.normal_train) + list(dataset.normal_validation)
        initial = [s for s in normals if s.source_id in names or Path(s.source_id).name in names]
        matched = {Path(s.source_id).name for s in initial} | {s.source_id for s in initial}
        missing = names - matched
        if missing:
            raise ConfigurationError(f"init list entries not found in normal data: {sorted(missing)}")
        chosen = {s.source_id for s in initial}
        rest = [s for s in normals if s.source_id not in chosen]
        dataset = Dataset(tuple(initial), tuple(rest), dataset.attacks, dataset.attack_categories)
    return dataset


def _enrichment_config(args) -> EnrichmentConfig:
    stop_fraction = args.stop_fraction
    if stop_fraction is None and args.stop_iterations is None and args.stop_auc is None:
        stop_fraction = 0.5
    return EnrichmentConfig(
        initial_selection="fixed_list" if args.init == "fixed" else "random_fraction",
        init_fraction=args.init_fraction,
        batch_size=args.batch_size,
        stop_train_fraction=stop_fraction,
        stop_max_iterations=args.stop_iterations,
        stop_auc_target=args.stop_auc,
        rng_seed=args.seed,
    )


def _iteration_writer(out_dir: Path, bins: int):
    def write(record, scored_pool, scored_attacks):
        tag = f"{record.iteration:04d}"
        normal_anom = [anomaly_score(item.similarity) for item in scored_pool]
        attack_anom = [anomaly_score(item.similarity) for item in scored_attacks]
        curve = roc_curve(normal_anom, attack_anom)
        handle, writer = _csv_writer(out_dir / f"roc_{tag}.csv")
        with handle:
            writer.writerow(["false_positive_rate", "true_positive_rate"])
            for x, y in curve.points:
                writer.writerow([f"{float(x):.10g}", f"{float(y):.10g}"])
        normal_hist = histogram([item.similarity for item in scored_pool], bins)
        attack_hist = histogram([item.similarity for item in scored_attacks], bins)
        handle, writer = _csv_writer(out_dir / f"hist_{tag}.csv")
        with handle:
            writer.writerow(["bin_lower_edge", "normal_count", "attack_count"])
            for (edge, n_count), (_, a_count) in zip(normal_hist, attack_hist):
                writer.writerow([f"{float(edge):.10g}", n_count, a_count])

    return write


def _write_trace_csv(path: Path, trace: EnrichmentTrace) -> None:
    handle, writer = _csv_writer(path)
    with handle:
        writer.writerow([
            "iteration", "train_size", "train_fraction",
            "auc", "auc_excluding_exact_substring_attacks", "elapsed_seconds",
        ])
        for rec in trace.records:
            writer.writerow([
                rec.iteration, rec.train_size, _fmt(rec.train_fraction),
                _fmt(rec.auc), _fmt(rec.auc_excluding_exact_matches),
                f"{rec.elapsed_seconds:.6f}",
            ])


def cmd_enrich(args) -> int:
    dataset = _dataset_from_args(args)
    config = _enrichment_config(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_manifest(out_dir, "enrich", args)
    trace = run_enrichment(
        dataset, config,
        variant=args.variant,
        on_iteration=_iteration_writer(out_dir, args.bins),
    )
    _write_trace_csv(out_dir / "trace.csv", trace)
    last = trace.records[-1] if trace.records else None
    status = "truncated" if trace.truncated else "completed"
    final = f", final auc {float(last.auc):.4f}" if last else ""
    print(f"enrichment {status} after {len(trace.records)} iterations{final}; outputs in {out_dir}")
    return 0


def _parse_methods(raw: str) -> list[str]:
    canonical = {name.lower(): name for name in METHODS}
    out = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        name = canonical.get(token.lower())
        if name is None:
            raise ConfigurationError(f"unknown method {token!r}, expected any of {', '.join(METHODS)}")
        if name not in out:
            out.append(name)
    if not out:
        raise ConfigurationError("no methods requested")
    return out


def cmd_compare(args) -> int:
    methods = _parse_methods(args.methods)
    dataset = _dataset_from_args(args)
    config = _enrichment_config(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    _write_manifest(out_dir, "compare", args)

    traces: dict[str, EnrichmentTrace] = {}
    for method in methods:
        traces[method] = run_enrichment(
            dataset, config,
            method=method,
            variant=args.variant,
            lev_norm=args.lev_norm,
            time_budget_seconds=args.per_method_budget_seconds,
        )

    depth = max(len(trace.records) for trace in traces.values())
    handle, writer = _csv_writer(out_dir / "compare.csv")
    with handle:
        writer.writerow(["iteration", "train_size", "train_fraction"]
                        + [f"auc_{method}" for method in methods])
        for i in range(depth):
            sized = next(t.records[i] for t in traces.values() if len(t.records) > i)
            row = [sized.iteration, sized.train_size, _fmt(sized.train_fraction)]
            for method in methods:
                recs = traces[method].records
                row.append(_fmt(recs[i].auc) if len(recs) > i else "")
            writer.writerow(row)

    handle, writer = _csv_writer(out_dir / "times.csv")
    with handle:
        writer.writerow(["method", "iterations", "total_elapsed_seconds",
                         "mean_elapsed_seconds", "aborted"])
        for method in methods:
            trace = traces[method]
            total = sum(rec.elapsed_seconds for rec in trace.records)
            mean = total / len(trace.records) if trace.records else 0.0
            writer.writerow([method, len(trace.records), f"{total:.6f}",
                             f"{mean:.6f}", str(trace.aborted).lower()])

    print(f"compared {', '.join(methods)} over {depth} iterations; outputs in {out_dir}")
    return 0


def _add_trace_format_flag(parser) -> None:
    parser.add_argument("--one-trace-per", choices=["file", "line"], default="file",
                        help="trace granularity inside input files (default: file)")


def _add_protocol_flags(parser) -> None:
    parser.add_argument("--train-dir", required=True, help="directory of normal training traces")
    parser.add_argument("--validation-dir", default=None,
                        help="directory of normal validation traces (optional)")
    parser.add_argument("--attack-dir", required=True, help="directory of attack traces")
    parser.add_argument("--init", choices=["fixed", "random"], default="fixed",
                        help="initial model: the training split as-is, or a random fraction "
                             "of all normal data (default: fixed)")
    parser.add_argument("--init-fraction", type=float, default=0.1,
                        help="fraction of normal data for --init random (default: 0.1)")
    parser.add_argument("--init-list", default=None,
                        help="file of trace names pinning the fixed initial model")
    parser.add_argument("--batch-size", type=int, default=1,
                        help="worst-scoring normals moved into training per iteration (default: 1)")
    parser.add_argument("--stop-fraction", type=float, default=None,
                        help="stop once this fraction of normal data is in training (default: 0.5)")
    parser.add_argument("--stop-iterations", type=int, default=None,
                        help="stop after this many iterations")
    parser.add_argument("--stop-auc", type=float, default=None,
                        help="stop once AUC reaches this value")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    parser.add_argument("--bins", type=int, default=20,
                        help="histogram bin count for per-iteration outputs (default: 20)")
    parser.add_argument("--variant", choices=["binary", "linear"], default="binary",
                        help="covering extractor (default: binary)")
    parser.add_argument("--out-dir", required=True, help="output directory")
    _add_trace_format_flag(parser)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcover",
        description="Covering-similarity anomaly detection over system-call traces",
    )
    parser.add_argument("--version", action="version", version=f"seqcover {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    cover = commands.add_parser("cover", help="print the optimal covering of one trace")
    cover.add_argument("--model-dir", required=True, help="directory of normal traces")
    cover.add_argument("--trace", required=True, help="trace file to cover")
    cover.add_argument("--variant", choices=["binary", "linear"], default="binary")
    cover.add_argument("--out-dir", default=None, help="also write covering.json and manifest here")
    _add_trace_format_flag(cover)
    cover.set_defaults(func=cmd_cover)

    detect = commands.add_parser("detect", help="classify traces against a normal model")
    detect.add_argument("--model-dir", required=True, help="directory of normal traces")
    detect.add_argument("--traces", required=True, help="trace file or directory to classify")
    detect.add_argument("--sigma", default="0.97",
                        help="decision threshold in [0,1] (default: 0.97)")
    detect.add_argument("--variant", choices=["binary", "linear"], default="binary")
    detect.add_argument("--out-dir", default=None, help="also write scores.jsonl and manifest here")
    _add_trace_format_flag(detect)
    detect.set_defaults(func=cmd_detect)

    enrich = commands.add_parser("enrich", help="run the model-enrichment protocol")
    _add_protocol_flags(enrich)
    enrich.set_defaults(func=cmd_enrich)

    compare = commands.add_parser("compare", help="enrichment runs for several similarity methods")
    _add_protocol_flags(compare)
    compare.add_argument("--methods", default="SC4ID",
                         help="comma-separated subset of SC4ID,LEV,LCSq,LCSt")
    compare.add_argument("--lev-norm", choices=["max", "sum"], default="max",
                         help="Levenshtein similarity normalizer (default: max)")
    compare.add_argument("--per-method-budget-seconds", type=float, default=None,
                         help="abort a method once its total runtime exceeds this")
    compare.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TraceParseError, ConfigurationError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
