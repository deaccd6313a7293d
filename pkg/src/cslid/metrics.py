"""Multi-label evaluation: exact match, Hamming loss, macro FPR, per-label
precision/recall, and the diagnostic side statistics.

Conventions that matter for comparability:

* Hamming loss divides by the size of the configured label universe, not
  by the number of languages observed, so values are comparable across
  models scored against the same universe.
* Macro FPR averages over universe languages that have at least one ground
  truth negative; languages with none are excluded and counted.
* Precision/recall with a zero denominator are UNDEFINED (None), never
  silently coerced; aggregates skip them and report how many were skipped.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyDataset

LabelSet = frozenset[str]


@dataclass(frozen=True)
class EvalInstance:
    gold: LabelSet
    pred: LabelSet


@dataclass(frozen=True)
class Confusion:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0


def _require(instances: Sequence[EvalInstance]) -> Sequence[EvalInstance]:
    if len(instances) == 0:
        raise EmptyDataset("no evaluation instances")
    return instances


def confusion_counts(instances: Sequence[EvalInstance],
                     universe: Sequence[str]) -> dict[str, Confusion]:
    _require(instances)
    n = len(instances)
    tp = Counter()
    fp = Counter()
    fn = Counter()
    for inst in instances:
        for t in inst.gold & inst.pred:
            tp[t] += 1
        for t in inst.pred - inst.gold:
            fp[t] += 1
        for t in inst.gold - inst.pred:
            fn[t] += 1
    out = {}
    for t in universe:
        c = Confusion(tp[t], fp[t], fn[t], n - tp[t] - fp[t] - fn[t])
        out[t] = c
    return out


def exact_match(instances: Sequence[EvalInstance]) -> float:
    """Fraction of instances whose predicted set equals the gold set."""
    _require(instances)
    hits = sum(1 for inst in instances if inst.pred == inst.gold)
    return hits / len(instances)


def hamming_loss(instances: Sequence[EvalInstance],
                 universe: Sequence[str]) -> float:
    """Wrong indicator bits over all instances and universe languages."""
    _require(instances)
    if len(universe) < 1:
        raise ValueError("empty universe")
    wrong = sum(len(inst.gold ^ inst.pred) for inst in instances)
    return wrong / (len(universe) * len(instances))


def macro_fpr(instances: Sequence[EvalInstance], universe: Sequence[str],
              observed_only: bool = False) -> float:
    """Mean per-language FP / (FP + TN).

    Languages with zero ground-truth negatives are excluded. With
    observed_only, only languages appearing in some gold or predicted set
    enter the average (the default averages over the whole universe).
    """
    value, _ = macro_fpr_detail(instances, universe, observed_only)
    return value


def macro_fpr_detail(instances: Sequence[EvalInstance],
                     universe: Sequence[str],
                     observed_only: bool = False) -> tuple[float, int]:
    """(macro FPR, number of excluded languages)."""
    counts = confusion_counts(instances, universe)
    if observed_only:
        seen = set()
        for inst in instances:
            seen |= inst.gold | inst.pred
        langs = [t for t in universe if t in seen]
    else:
        langs = list(universe)
    rates = []
    excluded = 0
    for t in langs:
        c = counts[t]
        if c.fp + c.tn == 0:
            excluded += 1
            continue
        rates.append(c.fp / (c.fp + c.tn))
    if not rates:
        return 0.0, excluded
    return sum(rates) / len(rates), excluded


def precision_recall(instances: Sequence[EvalInstance],
                     universe: Sequence[str],
                     ) -> dict[str, tuple[float | None, float | None]]:
    """Per-language (precision, recall); None marks an undefined value."""
    counts = confusion_counts(instances, universe)
    out = {}
    for t in universe:
        c = counts[t]
        p = c.tp / (c.tp + c.fp) if c.tp + c.fp > 0 else None
        r = c.tp / (c.tp + c.fn) if c.tp + c.fn > 0 else None
        out[t] = (p, r)
    return out


@dataclass(frozen=True)
class AuxStats:
    empty_rate: float
    cs_empty_rate: float
    unique_langs_predicted: int
    mean_preds: float


def auxiliary_stats(instances: Sequence[EvalInstance]) -> AuxStats:
    """Empty-prediction rates, distinct predicted languages, mean set size.

    cs_empty_rate covers instances with two or more gold labels and is 0
    when there are none.
    """
    _require(instances)
    n = len(instances)
    empty = sum(1 for i in instances if not i.pred)
    cs = [i for i in instances if len(i.gold) >= 2]
    cs_empty = sum(1 for i in cs if not i.pred)
    uniq = set()
    for i in instances:
        uniq |= i.pred
    mean_preds = sum(len(i.pred) for i in instances) / n
    return AuxStats(
        empty_rate=empty / n,
        cs_empty_rate=cs_empty / len(cs) if cs else 0.0,
        unique_langs_predicted=len(uniq),
        mean_preds=mean_preds,
    )


def cs_subset(instances: Iterable[EvalInstance]) -> list[EvalInstance]:
    """Instances with at least two gold labels, order preserved."""
    return [i for i in instances if len(i.gold) >= 2]


def prediction_histogram(instances: Sequence[EvalInstance],
                         k: int) -> list[tuple[tuple[str, ...], int]]:
    """Top-k most frequent predicted label sets (count desc, then lexicographic)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    counts = Counter(tuple(sorted(i.pred)) for i in instances)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:k]


@dataclass(frozen=True)
class MetricsReport:
    n_instances: int
    exact_match: float
    hamming: float
    macro_fpr: float
    fpr_excluded: int
    precision_macro: float | None
    recall_macro: float | None
    undefined_pr_count: int
    per_lang: dict[str, tuple[float | None, float | None]]
    empty_rate: float
    cs_empty_rate: float
    unique_langs_predicted: int
    mean_preds: float
    top_predictions: tuple[tuple[tuple[str, ...], int], ...] = ()

    def render_text(self, per_lang: bool = True) -> str:
        """Stable key/value text block, 6-decimal rates."""
        def fmt(v):
            return "UNDEFINED" if v is None else f"{v:.6f}"

        lines = [
            f"n_instances\t{self.n_instances}",
            f"exact_match\t{fmt(self.exact_match)}",
            f"hamming_loss\t{fmt(self.hamming)}",
            f"macro_fpr\t{fmt(self.macro_fpr)}",
            f"macro_fpr_excluded\t{self.fpr_excluded}",
            f"precision_macro\t{fmt(self.precision_macro)}",
            f"recall_macro\t{fmt(self.recall_macro)}",
            f"undefined_pr_count\t{self.undefined_pr_count}",
            f"empty_rate\t{fmt(self.empty_rate)}",
            f"cs_empty_rate\t{fmt(self.cs_empty_rate)}",
            f"unique_langs_predicted\t{self.unique_langs_predicted}",
            f"mean_preds\t{fmt(self.mean_preds)}",
        ]
        for rank, (labels, count) in enumerate(self.top_predictions, 1):
            shown = ",".join(labels)
            lines.append(f"top_pred_{rank}\t{shown}\t{count}")
        if per_lang:
            for tag in sorted(self.per_lang):
                p, r = self.per_lang[tag]
                lines.append(f"per_lang\t{tag}\t{fmt(p)}\t{fmt(r)}")
        return "\n".join(lines) + "\n"


def evaluate(instances: Sequence[EvalInstance], universe: Sequence[str],
             observed_only: bool = False, top_k: int = 5) -> MetricsReport:
    """All metrics over one instance sequence."""
    _require(instances)
    fpr, excluded = macro_fpr_detail(instances, universe, observed_only)
    pr = precision_recall(instances, universe)
    defined_p = [p for p, _ in pr.values() if p is not None]
    defined_r = [r for _, r in pr.values() if r is not None]
    undefined = sum(p is None for p, _ in pr.values()) + \
        sum(r is None for _, r in pr.values())
    aux = auxiliary_stats(instances)
    return MetricsReport(
        n_instances=len(instances),
        exact_match=exact_match(instances),
        hamming=hamming_loss(instances, universe),
        macro_fpr=fpr,
        fpr_excluded=excluded,
        precision_macro=sum(defined_p) / len(defined_p) if defined_p else None,
        recall_macro=sum(defined_r) / len(defined_r) if defined_r else None,
        undefined_pr_count=undefined,
        per_lang=pr,
        empty_rate=aux.empty_rate,
        cs_empty_rate=aux.cs_empty_rate,
        unique_langs_predicted=aux.unique_langs_predicted,
        mean_preds=aux.mean_preds,
        top_predictions=tuple(prediction_histogram(instances, top_k)),
    )


def render_tsv(report_all: MetricsReport,
               report_cs: MetricsReport | None) -> str:
    """metric<TAB>all<TAB>cs_only rows (cs column empty without CS data)."""
    def fmt(v):
        if v is None:
            return "UNDEFINED"
        if isinstance(v, int):
            return str(v)
        return f"{v:.6f}"

    rows = [("metric", "all", "cs_only")]
    names = ["n_instances", "exact_match", "hamming", "macro_fpr",
             "precision_macro", "recall_macro", "empty_rate",
             "cs_empty_rate", "unique_langs_predicted", "mean_preds"]
    for name in names:
        a = fmt(getattr(report_all, name))
        c = fmt(getattr(report_cs, name)) if report_cs is not None else ""
        rows.append((name, a, c))
    return "\n".join("\t".join(r) for r in rows) + "\n"
