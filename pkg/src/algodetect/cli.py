"""Command-line entry point.

Subcommands: extract, filter, classify, obfuscate, split, evaluate, report,
sweep. Every run writes a manifest JSON (config + versions + seeds) next to
its outputs so any output file's producing configuration is recoverable.
Exit codes: 0 success, 1 usage error, 2 data error, 3 backend error.
"""

from __future__ import annotations

import argparse
import json
import platform
import sys
from pathlib import Path

from . import __version__
from . import keywords as kw
from . import structural as st
from .backends import BackendError, get_backend
from .classify import VerdictCache
from .corpus import CorpusError, extract_directory, load_corpus, save_corpus, write_jsonl
from .metrics import sweep_thresholds
from .obfuscate import obfuscate_corpus
from .pipeline import FilterSpec, load_results, run_pipeline, save_results
from .prompts import ExampleLibrary, PromptConfigError
from .report import RunContext, write_report
from .resources import (
    bundled_example_library,
    bundled_keyword_patterns,
    bundled_structural_patterns,
    icl_examples_path,
)
from .splits import SplitError, SplitSpec, make_split, reduced_dataset
from .truth import TruthError, load_ground_truth

USAGE_EXIT, DATA_EXIT, BACKEND_EXIT = 1, 2, 3

DATA_ERRORS = (
    CorpusError,
    TruthError,
    kw.PatternError,
    st.DslError,
    SplitError,
    PromptConfigError,
    FileNotFoundError,
    json.JSONDecodeError,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE_EXIT)


def _manifest(args: argparse.Namespace, path: Path) -> None:
    config = {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in ("func", "config") and not key.startswith("_")
    }
    payload = {
        "tool": "algodetect",
        "version": __version__,
        "python": platform.python_version(),
        "config": config,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n", encoding="utf-8")


def _load_examples(args) -> ExampleLibrary:
    if getattr(args, "examples", None):
        return ExampleLibrary.load(args.examples)
    return bundled_example_library()


def _filter_spec(args) -> FilterSpec:
    kind = args.filter
    if kind == "none":
        return FilterSpec("none")
    if kind == "keyword":
        if args.patterns:
            path = Path(args.patterns)
            patterns = (
                kw.load_pattern_dir(path) if path.is_dir() else {None: kw.load_pattern_file(path)}
            )
            if None in patterns:
                pattern = patterns.pop(None)
                patterns[pattern.algorithm] = pattern
        else:
            patterns = bundled_keyword_patterns(args.pattern_family or "recall_focused")
        return FilterSpec("keyword", keyword_patterns=patterns)
    if args.patterns:
        path = Path(args.patterns)
        if path.is_dir():
            patterns = st.load_pattern_dir(path)
        else:
            pattern = st.load_pattern_file(path)
            patterns = {pattern.algorithm: pattern}
    else:
        patterns = bundled_structural_patterns(args.pattern_family or "prominent_feature")
    return FilterSpec("structural", structural_patterns=patterns)


# -- subcommand implementations --------------------------------------------


def cmd_extract(args) -> int:
    corpus_path = Path(args.corpus)
    if not corpus_path.exists():
        raise CorpusError(f"corpus path does not exist: {corpus_path}")
    if corpus_path.is_dir():
        report = extract_directory(corpus_path)
        records = report.records
        if report.skipped_regions:
            print(f"warning: skipped {report.skipped_regions} unbalanced region(s)", file=sys.stderr)
        for rejected in report.rejected_files:
            print(f"warning: rejected non-UTF-8 file {rejected}", file=sys.stderr)
    else:
        records = load_corpus(corpus_path)
    save_corpus(records, args.out)
    _manifest(args, Path(args.out).with_suffix(".manifest.json"))
    print(f"extracted {len(records)} methods -> {args.out}")
    return 0


def cmd_filter_keywords(args) -> int:
    pattern = kw.load_pattern_file(args.patterns)
    records = load_corpus(args.corpus)
    rows = []
    excluded = 0
    for record in records:
        decision = kw.evaluate(pattern, record)
        excluded += 0 if decision.passed else 1
        rows.append(
            {
                "method_id": record.method_id,
                "algorithm": pattern.algorithm,
                "passed": decision.passed,
                "group_hits": decision.group_hits,
            }
        )
    write_jsonl(rows, args.out)
    _manifest(args, Path(args.out).with_suffix(".manifest.json"))
    reduction = excluded / len(records) if records else 0.0
    print(f"{pattern.algorithm}: excluded {excluded}/{len(records)} (reduction {reduction:.4f})")
    return 0


def cmd_filter_structural(args) -> int:
    pattern = st.load_pattern_file(args.pattern)
    records = load_corpus(args.corpus)
    rows = []
    excluded = 0
    for record in records:
        decision = st.decide(pattern, record)
        excluded += 0 if decision.passed else 1
        rows.append(
            {
                "method_id": record.method_id,
                "algorithm": pattern.algorithm,
                "passed": decision.passed,
                "pass_reason": decision.pass_reason,
            }
        )
    write_jsonl(rows, args.out)
    _manifest(args, Path(args.out).with_suffix(".manifest.json"))
    reduction = excluded / len(records) if records else 0.0
    print(f"{pattern.algorithm}: excluded {excluded}/{len(records)} (reduction {reduction:.4f})")
    return 0


def cmd_classify(args) -> int:
    from .classify import run_batch
    from .prompts import make_style

    records = load_corpus(args.corpus)
    backend = get_backend(args.backend)
    library = _load_examples(args)
    style = make_style(args.style, library=library, algorithm=args.algorithm,
                       negative_kind=args.negative_kind)
    cache = VerdictCache(args.cache_dir) if args.cache_dir else None
    batch = run_batch(
        style,
        args.algorithm,
        records,
        backend,
        parallelism=args.parallelism,
        cache=cache,
        lenient=args.lenient,
    )
    rows = [v.to_json() for v in batch.verdicts]
    rows += [
        {"method_id": e.method_id, "error": e.reason, "message": e.message}
        for e in batch.errors
    ]
    write_jsonl(rows, args.out)
    _manifest(args, Path(args.out).with_suffix(".manifest.json"))
    print(f"classified {len(batch.verdicts)} methods, {len(batch.errors)} errors -> {args.out}")
    return 0


def cmd_obfuscate(args) -> int:
    records = load_corpus(args.corpus)
    out_records = obfuscate_corpus(records, args.seed, strip_comments=args.strip_comments)
    save_corpus(out_records, args.out)
    _manifest(args, Path(args.out).with_suffix(".manifest.json"))
    print(f"obfuscated {len(out_records)} methods with seed {args.seed} -> {args.out}")
    return 0


def cmd_split(args) -> int:
    records = load_corpus(args.corpus)
    truth = load_ground_truth(args.truth, corpus=records)
    spec = make_split(records, truth, ratio=args.ratio, seed=args.seed)
    spec.save(args.out)
    _manifest(args, Path(args.out).with_suffix(".manifest.json"))
    print(
        f"split {len(spec.assignment)} methods at ratio {args.ratio} "
        f"(KS D={spec.ks_statistic:.4f}, p={spec.ks_p_value:.4f}) -> {args.out}"
    )
    return 0


def cmd_evaluate(args) -> int:
    records = load_corpus(args.corpus)
    truth = load_ground_truth(args.truth, corpus=records)
    if args.reduced:
        reduced = reduced_dataset(records, truth, keep_fraction=args.keep_fraction, seed=args.seed)
        records, truth = reduced.records, reduced.truth
    split = SplitSpec.load(args.split) if args.split else None
    backend = get_backend(args.backend)
    library = _load_examples(args)
    cache = VerdictCache(args.cache_dir) if args.cache_dir else None
    mode = "lower_bound" if args.mode == "lower-bound" else "standard"
    results = run_pipeline(
        records,
        truth,
        _filter_spec(args),
        args.style,
        backend,
        mode=mode,
        library=library,
        negative_kind=args.negative_kind,
        split=split,
        split_side=args.split_side,
        parallelism=args.parallelism,
        cache=cache,
    )
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    save_results(results, out_dir / "results.jsonl")
    report = sweep_thresholds(results, algorithms=list(truth.algorithms), mode=mode)
    context = RunContext(filter=args.filter, style=args.style, backend=args.backend)
    write_report(report, context, out_dir)
    _manifest(args, out_dir / "manifest.json")
    print(
        f"evaluated {len(results)} (algorithm, method) pairs; "
        f"best ST={report.best_threshold}, macro-F1={report.macro_f1[report.best_threshold]:.4f}, "
        f"reduction micro={report.reduction_micro:.4f} macro={report.reduction_macro:.4f}"
    )
    print(f"report -> {out_dir / 'report.csv'}")
    return 0


def cmd_sweep(args) -> int:
    results = load_results(args.results)
    mode = "lower_bound" if args.mode == "lower-bound" else "standard"
    report = sweep_thresholds(results, mode=mode)
    context = RunContext(filter=args.filter, style=args.style, backend=args.backend)
    out_dir = Path(args.out_dir)
    write_report(report, context, out_dir)
    _manifest(args, out_dir / "manifest.json")
    print(f"best ST={report.best_threshold}; report -> {out_dir / 'report.csv'}")
    return 0


def cmd_report(args) -> int:
    from .report import load_report

    report, context = load_report(args.metrics)
    out_dir = Path(args.out_dir)
    write_report(report, context, out_dir, basename=args.basename)
    _manifest(args, out_dir / "manifest.json")
    print(f"report -> {out_dir / (args.basename + '.csv')}")
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="algodetect", description=__doc__)
    parser.add_argument("--config", help="JSON config file; flags override its values")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract methods from .java files or re-emit a JSONL corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("filter", help="run one filter pattern over a corpus")
    filter_sub = p.add_subparsers(dest="filter_kind", required=True)
    pk = filter_sub.add_parser("keywords")
    pk.add_argument("--patterns", required=True, help="keyword pattern JSON file")
    pk.add_argument("--corpus", required=True)
    pk.add_argument("--out", required=True)
    pk.set_defaults(func=cmd_filter_keywords)
    ps = filter_sub.add_parser("structural")
    ps.add_argument("--pattern", required=True, help="structural pattern file")
    ps.add_argument("--corpus", required=True)
    ps.add_argument("--out", required=True)
    ps.set_defaults(func=cmd_filter_structural)

    p = sub.add_parser("classify", help="classify a corpus for one algorithm")
    p.add_argument("--style", required=True,
                   help="score | yesno | icl:2p0n | icl:0p2n | icl:2p2n | icl:4p4n | cot")
    p.add_argument("--algorithm", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--backend", default="mock")
    p.add_argument("--examples", default=str(icl_examples_path()))
    p.add_argument("--negative-kind", choices=("similar", "random"), default="similar")
    p.add_argument("--cache-dir")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--lenient", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("obfuscate", help="rename method-declared identifiers to random names")
    p.add_argument("--corpus", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--strip-comments", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_obfuscate)

    p = sub.add_parser("split", help="build a validated test/validation split")
    p.add_argument("--corpus", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--ratio", type=float, default=0.70)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("evaluate", help="filter + classify + metrics, end to end")
    p.add_argument("--corpus", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--filter", choices=("none", "keyword", "structural"), default="none")
    p.add_argument("--patterns", help="pattern file or directory (default: bundled)")
    p.add_argument("--pattern-family",
                   help="bundled family: recall_focused | recall_focused_enhanced | "
                        "prominent_feature | standalone | standalone_loose")
    p.add_argument("--style", default="score")
    p.add_argument("--backend", default="mock")
    p.add_argument("--mode", choices=("standard", "lower-bound"), default="standard")
    p.add_argument("--split", help="split JSON from the split subcommand")
    p.add_argument("--split-side", choices=("test", "validation", "all"), default="all")
    p.add_argument("--examples", default=str(icl_examples_path()))
    p.add_argument("--negative-kind", choices=("similar", "random"), default="similar")
    p.add_argument("--cache-dir")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--reduced", action="store_true",
                   help="thin bubble_sort/binary_search negatives before evaluating")
    p.add_argument("--keep-fraction", type=float, default=0.10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep", help="recompute threshold sweep from a results file")
    p.add_argument("--results", required=True)
    p.add_argument("--mode", choices=("standard", "lower-bound"), default="standard")
    p.add_argument("--filter", default="none")
    p.add_argument("--style", default="score")
    p.add_argument("--backend", default="mock")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("report", help="re-emit CSV/JSON from a report JSON mirror")
    p.add_argument("--metrics", required=True)
    p.add_argument("--basename", default="report")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        probe, _ = parser.parse_known_args(argv)
        if probe.config:
            config = json.loads(Path(probe.config).read_text(encoding="utf-8"))
            if not isinstance(config, dict):
                raise TruthError(f"{probe.config}: config must be a JSON object")
            parser.set_defaults(**config)
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    except DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except BackendError as exc:
        print(f"backend error: {exc}", file=sys.stderr)
        return BACKEND_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
