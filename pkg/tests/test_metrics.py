import numpy as np
import pytest

from cslid.errors import EmptyDataset
from cslid.metrics import (AuxStats, EvalInstance, auxiliary_stats,
                           confusion_counts, cs_subset, evaluate, exact_match,
                           hamming_loss, macro_fpr, macro_fpr_detail,
                           precision_recall, prediction_histogram, render_tsv)


def inst(gold, pred):
    return EvalInstance(frozenset(gold), frozenset(pred))


class TestExactMatch:
    def test_perfect(self):
        xs = [inst({"a"}, {"a"}), inst({"a", "b"}, {"b", "a"})]
        assert exact_match(xs) == 1.0

    def test_half(self):
        xs = [inst({"eng"}, {"eng"}), inst({"tur", "eng"}, {"tur"})]
        assert exact_match(xs) == 0.5

    def test_empty_pred_is_mismatch(self):
        assert exact_match([inst({"eng"}, set())]) == 0.0

    def test_empty_dataset(self):
        with pytest.raises(EmptyDataset):
            exact_match([])


class TestHamming:
    def test_perfect(self):
        xs = [inst({"a"}, {"a"})] * 3
        assert hamming_loss(xs, ["a", "b"]) == 0.0

    def test_one_wrong_bit(self):
        xs = [inst({"a"}, {"a"}), inst({"a"}, {"a", "b"})]
        assert hamming_loss(xs, ["a", "b", "c", "d"]) == 0.125

    def test_complement_is_one(self):
        uni = ["a", "b", "c"]
        xs = [inst({"a"}, {"b", "c"}), inst({"b", "c"}, {"a"})]
        assert hamming_loss(xs, uni) == 1.0


class TestMacroFpr:
    def test_no_false_positives(self):
        xs = [inst({"a"}, {"a"}), inst({"b"}, set())]
        assert macro_fpr(xs, ["a", "b"]) == 0.0

    def test_worked_example(self):
        uni = ["A", "B", "C"]
        xs = [inst({"A"}, {"A"}), inst({"B"}, {"C"}), inst({"A", "B"}, {"A"})]
        assert macro_fpr(xs, uni) == pytest.approx(1 / 9)

    def test_predict_everything(self):
        uni = ["a", "b"]
        xs = [inst({"a"}, {"a", "b"}), inst({"b"}, {"a", "b"})]
        assert macro_fpr(xs, uni) == 1.0

    def test_zero_negative_language_excluded(self):
        uni = ["a", "b"]
        # "a" appears in every gold: no negatives for it
        xs = [inst({"a"}, {"a"}), inst({"a", "b"}, {"a"})]
        value, excluded = macro_fpr_detail(xs, uni)
        assert excluded == 1
        assert value == 0.0

    def test_observed_only_flag(self):
        uni = ["a", "b", "zz"]
        # FPR_a = 1/(1+0) = 1, FPR_b = 0, FPR_zz = 0 (unobserved)
        xs = [inst({"a"}, {"a"}), inst({"b"}, {"a"})]
        full = macro_fpr(xs, uni)
        observed = macro_fpr(xs, uni, observed_only=True)
        assert full == pytest.approx(1.0 / 3)
        assert observed == pytest.approx(1.0 / 2)

    def test_order_invariant(self):
        uni = ["a", "b", "c"]
        xs = [inst({"a"}, {"b"}), inst({"b"}, {"b"}), inst({"c"}, {"a"})]
        assert macro_fpr(xs, uni) == macro_fpr(list(reversed(xs)), uni)


class TestPrecisionRecall:
    def test_perfect(self):
        xs = [inst({"a"}, {"a"})]
        assert precision_recall(xs, ["a"])["a"] == (1.0, 1.0)

    def test_never_predicted_never_gold(self):
        xs = [inst({"a"}, {"a"})]
        assert precision_recall(xs, ["a", "b"])["b"] == (None, None)

    def test_worked_example(self):
        xs = [inst({"A"}, {"A"}), inst({"A"}, {"B"})]
        pr = precision_recall(xs, ["A", "B"])
        assert pr["A"] == (1.0, 0.5)
        assert pr["B"][0] == 0.0
        assert pr["B"][1] is None


class TestAuxStats:
    def test_clean_case(self):
        xs = [inst({"a"}, {"a"}), inst({"b"}, {"b"})]
        got = auxiliary_stats(xs)
        assert got == AuxStats(0.0, 0.0, 2, 1.0)

    def test_worked_example(self):
        xs = [inst({"A", "B"}, set()), inst({"A"}, {"A"}),
              inst({"A", "B"}, {"A", "B"})]
        got = auxiliary_stats(xs)
        assert got.empty_rate == pytest.approx(1 / 3)
        assert got.cs_empty_rate == pytest.approx(1 / 2)
        assert got.unique_langs_predicted == 2
        assert got.mean_preds == 1.0

    def test_all_empty(self):
        xs = [inst({"a"}, set())] * 3
        got = auxiliary_stats(xs)
        assert got.empty_rate == 1.0 and got.mean_preds == 0.0

    def test_no_cs_instances(self):
        xs = [inst({"a"}, set())]
        assert auxiliary_stats(xs).cs_empty_rate == 0.0


class TestCsSubset:
    def test_empty(self):
        assert cs_subset([inst({"a"}, {"a"})]) == []

    def test_picks_multi_gold(self):
        xs = [inst({"a"}, {"a"}), inst({"a", "b"}, set()), inst({"c"}, {"c"})]
        assert cs_subset(xs) == [xs[1]]

    def test_idempotent(self):
        xs = [inst({"a", "b"}, {"a"}), inst({"a"}, {"a"})]
        assert cs_subset(cs_subset(xs)) == cs_subset(xs)


class TestHistogram:
    def test_all_identical(self):
        xs = [inst({"a"}, {"x", "y"})] * 5
        assert prediction_histogram(xs, 3) == [(("x", "y"), 5)]

    def test_tie_rule(self):
        xs = ([inst(set(), {"c"})] * 3 + [inst(set(), {"b"})] * 2
              + [inst(set(), {"a"})] * 2)
        got = prediction_histogram(xs, 2)
        assert got == [(("c",), 3), (("a",), 2)]

    def test_k_larger_than_distinct(self):
        xs = [inst(set(), {"a"}), inst(set(), set())]
        got = prediction_histogram(xs, 10)
        assert len(got) == 2
        assert ((), 1) in got


class TestBiconditional:
    def test_exact_match_one_iff_hamming_zero(self):
        rng = np.random.default_rng(0)
        uni = ["a", "b", "c", "d"]
        for _ in range(200):
            xs = []
            for _ in range(rng.integers(1, 8)):
                gold = {uni[i] for i in np.flatnonzero(rng.random(4) < 0.4)}
                pred = {uni[i] for i in np.flatnonzero(rng.random(4) < 0.4)}
                xs.append(inst(gold or {"a"}, pred))
            em = exact_match(xs)
            hl = hamming_loss(xs, uni)
            assert (em == 1.0) == (hl == 0.0)


# --- brute-force oracle -------------------------------------------------
# Independent implementation over the full N x L indicator matrix.


def brute_force(instances, universe):
    uni = list(universe)
    n, L = len(instances), len(uni)
    Y = np.zeros((n, L), dtype=bool)
    P = np.zeros((n, L), dtype=bool)
    for i, x in enumerate(instances):
        for j, t in enumerate(uni):
            Y[i, j] = t in x.gold
            P[i, j] = t in x.pred
    em = float(np.mean([(Y[i] == P[i]).all() for i in range(n)]))
    hl = float(np.sum(Y ^ P)) / (n * L)
    tp = (Y & P).sum(axis=0)
    fp = (~Y & P).sum(axis=0)
    fn = (Y & ~P).sum(axis=0)
    tn = (~Y & ~P).sum(axis=0)
    rates = [fp[j] / (fp[j] + tn[j]) for j in range(L) if fp[j] + tn[j] > 0]
    fpr = float(np.mean(rates)) if rates else 0.0
    pr = {}
    for j, t in enumerate(uni):
        p = tp[j] / (tp[j] + fp[j]) if tp[j] + fp[j] else None
        r = tp[j] / (tp[j] + fn[j]) if tp[j] + fn[j] else None
        pr[t] = (p, r)
    empty = float(np.mean(~P.any(axis=1)))
    cs_rows = Y.sum(axis=1) >= 2
    cs_empty = float(np.mean(~P[cs_rows].any(axis=1))) if cs_rows.any() else 0.0
    uniq = int(P.any(axis=0).sum())
    mean_preds = float(P.sum()) / n
    return em, hl, fpr, pr, (empty, cs_empty, uniq, mean_preds)


def random_instances(rng, max_n=20, max_l=6):
    L = int(rng.integers(1, max_l + 1))
    uni = [f"t{i}" for i in range(L)]
    n = int(rng.integers(1, max_n + 1))
    xs = []
    for _ in range(n):
        gold = {t for t in uni if rng.random() < 0.35}
        if not gold:
            gold = {uni[int(rng.integers(L))]}
        pred = {t for t in uni if rng.random() < 0.35}
        xs.append(inst(gold, pred))
    return xs, uni


def test_brute_force_oracle_equivalence():
    rng = np.random.default_rng(123)
    for _ in range(100):
        xs, uni = random_instances(rng)
        em, hl, fpr, pr, aux = brute_force(xs, uni)
        assert exact_match(xs) == pytest.approx(em, abs=1e-12)
        assert hamming_loss(xs, uni) == pytest.approx(hl, abs=1e-12)
        assert macro_fpr(xs, uni) == pytest.approx(fpr, abs=1e-12)
        got_pr = precision_recall(xs, uni)
        for t in uni:
            for a, b in zip(got_pr[t], pr[t]):
                if b is None:
                    assert a is None
                else:
                    assert a == pytest.approx(b, abs=1e-12)
        got_aux = auxiliary_stats(xs)
        assert got_aux.empty_rate == pytest.approx(aux[0], abs=1e-12)
        assert got_aux.cs_empty_rate == pytest.approx(aux[1], abs=1e-12)
        assert got_aux.unique_langs_predicted == aux[2]
        assert got_aux.mean_preds == pytest.approx(aux[3], abs=1e-12)


class TestConfusion:
    def test_partition(self):
        rng = np.random.default_rng(5)
        xs, uni = random_instances(rng)
        counts = confusion_counts(xs, uni)
        for t in uni:
            c = counts[t]
            assert c.tp + c.fp + c.fn + c.tn == len(xs)


class TestReport:
    def test_render_text_stable(self):
        xs = [inst({"a"}, {"a"}), inst({"a", "b"}, set())]
        rep = evaluate(xs, ["a", "b"])
        text = rep.render_text()
        keys = [ln.split("\t")[0] for ln in text.strip().splitlines()]
        assert keys[:4] == ["n_instances", "exact_match", "hamming_loss",
                            "macro_fpr"]
        assert "per_lang" in keys
        assert text == rep.render_text()

    def test_undefined_rendered(self):
        xs = [inst({"a"}, set())]
        rep = evaluate(xs, ["a", "b"])
        assert "UNDEFINED" in rep.render_text()

    def test_tsv_columns(self):
        xs = [inst({"a", "b"}, {"a"}), inst({"a"}, {"a"})]
        rep_all = evaluate(xs, ["a", "b"])
        rep_cs = evaluate(cs_subset(xs), ["a", "b"])
        tsv = render_tsv(rep_all, rep_cs)
        header, *rows = tsv.strip().splitlines()
        assert header == "metric\tall\tcs_only"
        assert all(len(r.split("\t")) == 3 for r in rows)
