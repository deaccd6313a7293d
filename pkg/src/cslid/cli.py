"""Command-line surface: train, profile-train, predict, eval, prep, stats,
and the streaming corpus filter.

All commands read and write UTF-8 and accept ``-`` for standard input or
output. Prediction and filtering are streaming: memory use is bounded by
the model plus a fixed chunk size, independent of input length.
"""

from __future__ import annotations

import argparse
import sys
import time
from contextlib import nullcontext
from typing import Iterable, Iterator

from . import datasets, decode, langcodes, metrics, textprep, trigram
from . import model as model_mod
from .errors import CslidError, LengthMismatch
from .model import BatchScorer, LossMode, ScoreVector, TrainConfig

CHUNK_LINES = 4096


def _open_in(path: str):
    if path == "-":
        return nullcontext(sys.stdin)  # leave the stream open
    return open(path, encoding="utf-8")


def _open_out(path: str):
    if path == "-":
        return nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def _chunks(it: Iterable[str], n: int) -> Iterator[list[str]]:
    buf = []
    for x in it:
        buf.append(x)
        if len(buf) >= n:
            yield buf
            buf = []
    if buf:
        yield buf


def _load_universe(arg: str, aliases: str | None) -> langcodes.LabelUniverse:
    if arg == "default":
        uni = langcodes.default_universe()
        if aliases:
            uni = langcodes.LabelUniverse(
                uni.tags, langcodes.load_aliases(aliases))
        return uni
    return langcodes.load_universe(arg, aliases)


# --- prediction engine --------------------------------------------------


class Predictions:
    """Streams (line, predicted labels, per-label scores) over raw lines."""

    def __init__(self, args):
        if args.model:
            linear = model_mod.load(args.model)
            pset = None
        else:
            linear = None
            pset = trigram.load_profiles(args.profiles)
        self._init(linear, pset, getattr(args, "decode", None))

    @classmethod
    def from_components(cls, linear=None, pset=None, strategy_text=None):
        self = cls.__new__(cls)
        self._init(linear, pset, strategy_text)
        return self

    def _init(self, linear, pset, strategy_text):
        self.linear = linear
        self.pset = pset
        if linear is not None:
            self.scorer = BatchScorer(linear)
            kind = self.scorer.score_kind
        else:
            self.scorer = None
            kind = "scaled"
        if strategy_text:
            self.strategy = decode.parse_strategy(strategy_text)
        else:
            self.strategy = decode.default_strategy(kind)

    def label_space(self) -> tuple[str, ...]:
        if self.linear is not None:
            return self.linear.labels
        return tuple(p.language for p in self.pset.profiles)

    def run(self, lines: Iterable[str]
            ) -> Iterator[tuple[str, frozenset[str], dict[str, float]]]:
        if self.linear is not None:
            labels = self.linear.labels
            kind = self.scorer.score_kind
            for chunk in _chunks(lines, CHUNK_LINES):
                scores, has = self.scorer.score_lines(chunk)
                for i, line in enumerate(chunk):
                    if not has[i]:
                        yield line, frozenset(), {}
                        continue
                    sv = ScoreVector(labels, scores[i], kind)
                    pred = decode.decode(sv, self.strategy)
                    idx = self.linear.label_index
                    yield line, pred, {t: float(scores[i][idx[t]])
                                       for t in pred}
        else:
            for line in lines:
                sv = trigram.classify_trigram(textprep.clean(line), self.pset)
                if len(sv.labels) == 0:
                    yield line, frozenset(), {}
                    continue
                pred = decode.decode(sv, self.strategy)
                smap = dict(zip(sv.labels, (float(x) for x in sv.scores)))
                yield line, pred, {t: smap[t] for t in pred}


def _format_prediction(pred: frozenset[str], smap: dict[str, float]) -> str:
    tags = sorted(pred)
    labels = ",".join(tags)
    scores = ",".join(f"{smap[t]:.6f}" for t in tags)
    return f"{labels}\t{scores}"


# --- subcommands ---------------------------------------------------------


def cmd_train(args) -> int:
    examples = []
    with _open_in(args.corpus) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parsed = datasets.parse_labeled_line(line)
            if parsed is None:
                raise CslidError(
                    f"{args.corpus}: no __label__ prefix on line {lineno}")
            text, gold = parsed
            if args.mode == "softmax" and len(gold) != 1:
                raise CslidError(
                    f"{args.corpus}: line {lineno} has {len(gold)} labels; "
                    "softmax training needs exactly one")
            examples.append((text, gold))
    cfg = TrainConfig(dim=args.dim, epochs=args.epochs, lr0=args.lr,
                      min_word_count=args.min_count, ngram_lo=args.ngram_min,
                      ngram_hi=args.ngram_max, seed=args.seed)
    mode = (LossMode.SOFTMAX_CE if args.mode == "softmax"
            else LossMode.SIGMOID_BCE)
    stats = model_mod.TrainStats()
    m = model_mod.train(examples, cfg, mode, stats)
    model_mod.save(m, args.output)
    if args.export_vocab:
        with open(args.export_vocab, "w", encoding="utf-8") as f:
            f.write(textprep.vocabulary_to_tsv(m.vocab))
    print(f"trained {m.n_labels} labels, vocab {m.vocab.n_words} words + "
          f"{m.vocab.n_ngrams} ngrams, {stats.n_steps} steps, "
          f"mean loss {stats.mean_loss_last_epoch:.4f} (last epoch), "
          f"{stats.n_dropped_empty} featureless examples dropped",
          file=sys.stderr)
    return 0


def cmd_profile_train(args) -> int:
    stream = []
    with _open_in(args.corpus) as f:
        for lineno, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parsed = datasets.parse_labeled_line(line)
            if parsed is None:
                raise CslidError(
                    f"{args.corpus}: no __label__ prefix on line {lineno}")
            text, gold = parsed
            stream.append((textprep.clean(text), gold))
    pset = trigram.train_profiles(stream, args.profile_size)
    trigram.save_profiles(pset, args.output)
    total = sum(len(p.ranks) for p in pset.profiles)
    print(f"profiled {len(pset.profiles)} languages, size {pset.size}, "
          f"{total} ranked trigrams", file=sys.stderr)
    return 0


def cmd_predict(args) -> int:
    engine = Predictions(args)
    n = 0
    t0 = time.perf_counter()
    with _open_in(args.input) as fin, _open_out(args.output) as fout:
        lines = (ln.rstrip("\n") for ln in fin)
        for _, pred, smap in engine.run(lines):
            fout.write(_format_prediction(pred, smap))
            fout.write("\n")
            n += 1
    dt = time.perf_counter() - t0
    rate = n / dt if dt > 0 else float("inf")
    print(f"{n} lines in {dt:.1f}s ({rate:,.0f} lines/s)", file=sys.stderr)
    return 0


def _parse_query(text: str, label_space: tuple[str, ...]):
    kind, _, arg = text.partition(":")
    space = set(label_space)
    if kind == "cs":
        if arg:
            raise CslidError("cs query takes no parameter")
        return lambda pred: len(pred) >= 2
    if kind == "pair":
        tags = arg.split(",")
        if len(tags) != 2 or not all(tags):
            raise CslidError("pair query needs two tags: pair:<a>,<b>")
        missing = [t for t in tags if t not in space]
        if missing:
            raise CslidError(f"query tags not predictable by this model: "
                             f"{','.join(missing)}")
        want = frozenset(tags)
        return lambda pred: want <= pred
    if kind == "lang":
        if not arg:
            raise CslidError("lang query needs a tag: lang:<tag>")
        if arg not in space:
            raise CslidError(f"query tag not predictable by this model: {arg}")
        return lambda pred: arg in pred
    raise CslidError(f"unknown query {text!r} (expected cs, pair:a,b, lang:t)")


def cmd_filter(args) -> int:
    engine = Predictions(args)
    keep = _parse_query(args.query, engine.label_space())
    n_read = n_kept = 0
    with _open_in(args.input) as fin, _open_out(args.output) as fout:
        lines = (ln.rstrip("\n") for ln in fin)
        for line, pred, _ in engine.run(lines):
            n_read += 1
            if keep(pred):
                n_kept += 1
                fout.write(f"{','.join(sorted(pred))}\t{line}\n")
    print(f"read {n_read} lines, kept {n_kept}", file=sys.stderr)
    return 0


def _read_gold(args) -> list[datasets.Example]:
    if args.gold_config:
        config = datasets.load_config(args.gold_config)
    else:
        config = datasets.DatasetConfig(format=args.gold_format)
    report = datasets.ReadReport()
    with _open_in(args.gold) as f:
        examples = list(datasets.read_dataset(f, config, report))
    if report.n_malformed:
        print(f"gold: {report.summary()}", file=sys.stderr)
    return examples


def _parse_pred_file(path: str) -> list[frozenset[str]]:
    preds = []
    with _open_in(path) as f:
        for line in f:
            field = line.rstrip("\n").split("\t")[0]
            preds.append(frozenset(field.split(",")) if field else frozenset())
    return preds


def cmd_eval(args) -> int:
    examples = _read_gold(args)
    if not examples:
        raise CslidError("gold dataset produced no examples")

    if args.universe == "auto":
        universe = langcodes.universe_from_tags(
            t for ex in examples for t in ex.gold)
    else:
        universe = _load_universe(args.universe, args.aliases)

    bad = sorted({t for ex in examples for t in ex.gold if t not in universe})
    if bad:
        raise CslidError(
            f"gold labels outside the universe: {', '.join(bad[:8])}"
            f"{'...' if len(bad) > 8 else ''} "
            "(pass --universe auto or a matching tag list)")

    if args.pred:
        preds = _parse_pred_file(args.pred)
        if len(preds) != len(examples):
            raise LengthMismatch(
                f"{len(examples)} gold examples vs {len(preds)} predictions")
    else:
        if not (args.model or args.profiles):
            raise CslidError("need --pred, --model, or --profiles")
        engine = Predictions(args)
        preds = [p for _, p, _ in engine.run(ex.text for ex in examples)]

    instances = [
        metrics.EvalInstance(ex.gold, langcodes.normalize_set(p, universe))
        for ex, p in zip(examples, preds)]

    report_all = metrics.evaluate(instances, universe.tags,
                                  observed_only=args.observed_only,
                                  top_k=args.top_preds)
    cs = metrics.cs_subset(instances)
    report_cs = None
    if cs:
        report_cs = metrics.evaluate(cs, universe.tags,
                                     observed_only=args.observed_only,
                                     top_k=args.top_preds)
    out = ["[all]", report_all.render_text(per_lang=args.per_lang)]
    if report_cs is not None:
        out += ["[cs-only]", report_cs.render_text(per_lang=args.per_lang)]
    else:
        out += ["[cs-only]", "n_instances\t0\n"]
    sys.stdout.write("\n".join(out))
    if args.tsv:
        with open(args.tsv, "w", encoding="utf-8") as f:
            f.write(metrics.render_tsv(report_all, report_cs))
    return 0


def cmd_prep(args) -> int:
    if args.config:
        config = datasets.load_config(args.config)
    else:
        config = datasets.DatasetConfig(format=args.format)
    universe = None
    if args.universe:
        universe = _load_universe(args.universe, args.aliases)
    report = datasets.ReadReport()
    unmapped = 0
    n_out = 0
    with _open_in(args.input) as fin, _open_out(args.output) as fout:
        for ex in datasets.read_dataset(fin, config, report):
            gold = ex.gold
            if universe is not None:
                mapped = langcodes.normalize_set(gold, universe)
                unmapped += len(gold) - len(mapped)
                if not mapped:
                    report.n_discarded += 1
                    continue
                gold = mapped
            fout.write(datasets.format_labeled_line(ex.text, gold) + "\n")
            n_out += 1
    msg = f"{report.summary()}, written {n_out}"
    if universe is not None:
        msg += f", unmappable gold tags {unmapped}"
    print(msg, file=sys.stderr)
    return 0


def cmd_stats(args) -> int:
    if args.pred:
        instances = [metrics.EvalInstance(frozenset(), p)
                     for p in _parse_pred_file(args.input)]
        if not instances:
            raise CslidError("no predictions read")
        empty = sum(1 for i in instances if not i.pred) / len(instances)
        print(f"n_predictions\t{len(instances)}")
        print(f"empty_rate\t{empty:.6f}")
        for rank, (labels, count) in enumerate(
                metrics.prediction_histogram(instances, args.top), 1):
            print(f"top_pred_{rank}\t{','.join(labels)}\t{count}")
        return 0

    if args.config:
        config = datasets.load_config(args.config)
    else:
        config = datasets.DatasetConfig(format=args.format)
    report = datasets.ReadReport()
    with _open_in(args.input) as f:
        examples = list(datasets.read_dataset(f, config, report))
    if not examples:
        raise CslidError("dataset produced no examples")
    prop = datasets.cs_proportion(examples)
    print(f"n_examples\t{len(examples)}")
    print(f"cs_proportion\t{prop:.6f}")
    gold_sets = [metrics.EvalInstance(frozenset(), ex.gold)
                 for ex in examples]
    for rank, (labels, count) in enumerate(
            metrics.prediction_histogram(gold_sets, args.top), 1):
        print(f"top_gold_{rank}\t{','.join(labels)}\t{count}")
    print(report.summary(), file=sys.stderr)
    return 0


# --- parser --------------------------------------------------------------


def _add_model_args(p: argparse.ArgumentParser, required: bool):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--model", help="linear model file")
    g.add_argument("--profiles", help="trigram profile file")
    p.add_argument("--decode", metavar="STRATEGY",
                   help="top1 | fixed:<k> | dynamic:<m> | closest:<c> "
                        "(default depends on the model)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cslid",
        description="Multi-label language identification for code-switched "
                    "text and web-corpus filtering.")
    sub = p.add_subparsers(dest="cmd", required=True)

    tr = sub.add_parser("train", help="train a linear model")
    tr.add_argument("corpus", help="__label__-prefixed lines, - for stdin")
    tr.add_argument("-o", "--output", required=True)
    tr.add_argument("--mode", choices=["softmax", "sigmoid"],
                    default="softmax")
    tr.add_argument("--dim", type=int, default=256)
    tr.add_argument("--epochs", type=int, default=2)
    tr.add_argument("--lr", type=float, default=0.5)
    tr.add_argument("--min-count", type=int, default=1000,
                    help="keep words seen strictly more often than this")
    tr.add_argument("--ngram-min", type=int, default=2)
    tr.add_argument("--ngram-max", type=int, default=5)
    tr.add_argument("--seed", type=int, default=0)
    tr.add_argument("--export-vocab", metavar="TSV")
    tr.set_defaults(fn=cmd_train)

    pt = sub.add_parser("profile-train", help="train trigram profiles")
    pt.add_argument("corpus")
    pt.add_argument("-o", "--output", required=True)
    pt.add_argument("--profile-size", type=int,
                    default=trigram.DEFAULT_PROFILE_SIZE)
    pt.set_defaults(fn=cmd_profile_train)

    pr = sub.add_parser("predict", help="label a stream of text lines")
    _add_model_args(pr, required=True)
    pr.add_argument("input", nargs="?", default="-")
    pr.add_argument("-o", "--output", default="-")
    pr.set_defaults(fn=cmd_predict)

    ev = sub.add_parser("eval", help="score predictions against gold labels")
    ev.add_argument("--gold", required=True)
    ev.add_argument("--gold-format", choices=list(datasets.FORMATS),
                    default="labeled-lines")
    ev.add_argument("--gold-config", help="dataset config JSON")
    ev.add_argument("--pred", help="predictions TSV from `cslid predict`")
    _add_model_args(ev, required=False)
    ev.add_argument("--universe", default="default",
                    help="tag list file, 'default', or 'auto' (from gold)")
    ev.add_argument("--aliases", help="raw<TAB>target alias TSV")
    ev.add_argument("--observed-only", action="store_true",
                    help="macro-FPR over observed languages only")
    ev.add_argument("--top-preds", type=int, default=5)
    ev.add_argument("--per-lang", action=argparse.BooleanOptionalAction,
                    default=True)
    ev.add_argument("--tsv", help="also write metric rows to this file")
    ev.set_defaults(fn=cmd_eval)

    pp = sub.add_parser("prep", help="convert a dataset to labeled lines")
    pp.add_argument("input")
    pp.add_argument("-o", "--output", default="-")
    pp.add_argument("--config", help="dataset config JSON")
    pp.add_argument("--format", choices=list(datasets.FORMATS),
                    default="labeled-lines")
    pp.add_argument("--universe", help="normalize gold tags into this universe")
    pp.add_argument("--aliases")
    pp.set_defaults(fn=cmd_prep)

    st = sub.add_parser("stats", help="dataset or prediction statistics")
    st.add_argument("input")
    st.add_argument("--config")
    st.add_argument("--format", choices=list(datasets.FORMATS),
                    default="labeled-lines")
    st.add_argument("--pred", action="store_true",
                    help="input is a predictions TSV")
    st.add_argument("--top", type=int, default=5)
    st.set_defaults(fn=cmd_stats)

    fl = sub.add_parser("filter", help="keep lines whose prediction matches")
    _add_model_args(fl, required=True)
    fl.add_argument("--query", required=True,
                    help="cs | pair:<a>,<b> | lang:<tag>")
    fl.add_argument("input", nargs="?", default="-")
    fl.add_argument("-o", "--output", default="-")
    fl.set_defaults(fn=cmd_filter)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BrokenPipeError:
        return 0
    except (CslidError, ValueError, OSError) as e:
        print(f"cslid: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
