"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s`` to see
them live).

Criterion 5b (code-switched pair recovery with the dynamic decoder over a
5-language model) is expected to fail: with L labels, the second-largest
score of any vector is at most mean + sigma*sqrt((L-2)/2), so at L=5 it can
never clear the mean + 2*sigma threshold. See tests below for the
demonstration at larger L.
"""

import math
import os
import statistics
import time
from contextlib import contextmanager

import numpy as np
import pytest

from conftest import SyntheticLid
from test_metrics import brute_force, random_instances

from cslid.decode import (decode_closest_plus, decode_dynamic, decode_fixed,
                          dynamic_threshold)
from cslid.errors import FormatError
from cslid.metrics import (EvalInstance, auxiliary_stats, exact_match,
                           hamming_loss, macro_fpr, precision_recall)
from cslid.model import (BatchScorer, LinearModel, LossMode, ScoreVector,
                         TrainConfig, load, loss_from_wh, loss_gradients,
                         save, train)
from cslid.textprep import build_vocabulary


@contextmanager
def criterion(name):
    try:
        yield
    except Exception:
        print(f"\nACCEPTANCE {name}: FAIL", flush=True)
        raise
    print(f"\nACCEPTANCE {name}: PASS", flush=True)


def test_01_metric_oracle_equivalence():
    with criterion("01 metric-oracle-equivalence"):
        rng = np.random.default_rng(2024)
        t0 = time.perf_counter()
        for _ in range(1000):
            xs, uni = random_instances(rng, max_n=20, max_l=6)
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
            got = auxiliary_stats(xs)
            assert got.empty_rate == pytest.approx(aux[0], abs=1e-12)
            assert got.cs_empty_rate == pytest.approx(aux[1], abs=1e-12)
            assert got.unique_langs_predicted == aux[2]
            assert got.mean_preds == pytest.approx(aux[3], abs=1e-12)
        elapsed = time.perf_counter() - t0
        assert elapsed < 10.0, f"oracle sweep took {elapsed:.1f}s"


def test_02_hand_value_fixtures():
    with criterion("02 hand-value-fixtures"):
        f = frozenset
        # Hamming 0.125: L=4, N=2, one wrong bit
        xs = [EvalInstance(f({"a"}), f({"a"})),
              EvalInstance(f({"a"}), f({"a", "b"}))]
        assert hamming_loss(xs, ["a", "b", "c", "d"]) == 0.125
        # macro FPR 1/9
        xs = [EvalInstance(f({"A"}), f({"A"})),
              EvalInstance(f({"B"}), f({"C"})),
              EvalInstance(f({"A", "B"}), f({"A"}))]
        assert macro_fpr(xs, ["A", "B", "C"]) == (0 + 0 + 1 / 3) / 3
        assert macro_fpr(xs, ["A", "B", "C"]) == pytest.approx(1 / 9, abs=1e-12)
        # exact match 0.5
        xs = [EvalInstance(f({"eng"}), f({"eng"})),
              EvalInstance(f({"tur", "eng"}), f({"tur"}))]
        assert exact_match(xs) == 0.5
        # auxiliary (1/3, 1/2, 2, 1.0)
        xs = [EvalInstance(f({"A", "B"}), f()),
              EvalInstance(f({"A"}), f({"A"})),
              EvalInstance(f({"A", "B"}), f({"A", "B"}))]
        aux = auxiliary_stats(xs)
        assert aux.empty_rate == 1 / 3
        assert aux.cs_empty_rate == 1 / 2
        assert aux.unique_langs_predicted == 2
        assert aux.mean_preds == 1.0


def test_03_gradient_check():
    with criterion("03 gradient-check"):
        rng = np.random.default_rng(7)
        t0 = time.perf_counter()
        eps = 1e-4
        for trial in range(200):
            L = int(rng.integers(2, 6))
            dim = int(rng.integers(2, 9))
            W = rng.standard_normal((L, dim))
            h = rng.standard_normal(dim)
            mode = (LossMode.SOFTMAX_CE if trial % 2 == 0
                    else LossMode.SIGMOID_BCE)
            if mode == LossMode.SOFTMAX_CE:
                gold = [int(rng.integers(L))]
            else:
                k = int(rng.integers(1, L + 1))
                gold = sorted(int(x) for x in
                              rng.choice(L, size=k, replace=False))
            _, dW, dh = loss_gradients(W, h, gold, mode)
            for l in range(L):
                for d in range(dim):
                    Wp, Wm = W.copy(), W.copy()
                    Wp[l, d] += eps
                    Wm[l, d] -= eps
                    num = (loss_from_wh(Wp, h, gold, mode)
                           - loss_from_wh(Wm, h, gold, mode)) / (2 * eps)
                    assert num == pytest.approx(dW[l, d], rel=1e-4, abs=1e-8)
            for d in range(dim):
                hp, hm = h.copy(), h.copy()
                hp[d] += eps
                hm[d] -= eps
                num = (loss_from_wh(W, hp, gold, mode)
                       - loss_from_wh(W, hm, gold, mode)) / (2 * eps)
                assert num == pytest.approx(dh[d], rel=1e-4, abs=1e-8)
        elapsed = time.perf_counter() - t0
        assert elapsed < 30.0, f"gradient sweep took {elapsed:.1f}s"


def test_04_decoder_contracts():
    with criterion("04 decoder-contracts"):
        rng = np.random.default_rng(99)
        for _ in range(10_000):
            n = int(rng.integers(2, 9))
            x = rng.random(n)
            x /= x.sum()
            labels = tuple(f"t{i}" for i in range(n))
            assert len(decode_fixed(
                ScoreVector(labels, x, "softmax"), 0.3)) <= 3
            assert 1 <= len(decode_dynamic(
                ScoreVector(labels, x, "sigmoid"))) <= 2
            assert 1 <= len(decode_closest_plus(
                ScoreVector(labels, x / x.max(), "scaled"))) <= 2

        # worked dynamic-threshold examples, to 1e-9
        s = np.zeros(200)
        s[0], s[1] = 0.9, 0.7
        theta = float(s.mean()) + 2 * statistics.pstdev(s.tolist())
        assert abs(dynamic_threshold(s) - theta) <= 1e-9
        labels = tuple(f"t{i:03d}" for i in range(200))
        assert len(decode_dynamic(ScoreVector(labels, s, "sigmoid"))) == 2

        s_eq = np.full(6, 0.4)
        assert abs(dynamic_threshold(s_eq) - 0.4) <= 1e-9
        got = decode_dynamic(
            ScoreVector(tuple("abcdef"), s_eq, "sigmoid"))
        assert len(got) == 1

        s5 = np.array([0.9, 0.7, 0.0, 0.0, 0.0])
        mean5 = 1.6 / 5
        var5 = (0.81 + 0.49) / 5 - mean5 ** 2
        theta5 = mean5 + 2 * math.sqrt(var5)
        assert abs(dynamic_threshold(s5) - theta5) <= 1e-9
        assert abs(theta5 - 1.114) < 1e-3
        got = decode_dynamic(ScoreVector(tuple("abcde"), s5, "sigmoid"))
        assert len(got) == 1


@pytest.fixture(scope="module")
def toy_end_to_end():
    gen = SyntheticLid(5, seed=2024)
    train_pairs = gen.corpus(1000)
    test_sents = [(gen.sentence(i), gen.labels[i])
                  for i in range(5) for _ in range(200)]
    cfg = TrainConfig(dim=128, epochs=2, lr0=0.5, min_word_count=5, seed=1)
    t0 = time.perf_counter()
    m_soft = train(train_pairs, cfg, LossMode.SOFTMAX_CE)
    m_sig = train(train_pairs, cfg, LossMode.SIGMOID_BCE)
    elapsed = time.perf_counter() - t0
    return gen, test_sents, m_soft, m_sig, elapsed


def test_05a_toy_softmax_top1(toy_end_to_end):
    with criterion("05a toy-softmax-top1"):
        gen, test_sents, m_soft, _, train_time = toy_end_to_end
        scorer = BatchScorer(m_soft)
        t0 = time.perf_counter()
        S, has = scorer.score_lines([s for s, _ in test_sents])
        ok = sum(m_soft.labels[int(np.argmax(S[i]))] == tag
                 for i, (_, tag) in enumerate(test_sents))
        acc = ok / len(test_sents)
        elapsed = train_time + (time.perf_counter() - t0)
        print(f"\n  top-1 accuracy {acc:.4f} over {len(test_sents)} "
              f"held-out lines ({elapsed:.0f}s incl. training)")
        assert acc >= 0.99
        assert elapsed < 120.0


def test_05b_toy_sigmoid_dynamic_cs_pairs(toy_end_to_end):
    # Known-red: provably unattainable with 5 labels (see module docstring).
    with criterion("05b toy-sigmoid-dynamic-cs-pairs"):
        gen, test_sents, _, m_sig, _ = toy_end_to_end
        rng = np.random.default_rng(5)
        by_lang = {}
        for s, tag in test_sents:
            by_lang.setdefault(tag, []).append(s)
        pairs, golds = [], []
        tags = list(m_sig.labels)
        for _ in range(500):
            a, b = rng.choice(5, size=2, replace=False)
            pairs.append(rng.choice(by_lang[tags[a]]) + " "
                         + rng.choice(by_lang[tags[b]]))
            golds.append(frozenset({tags[a], tags[b]}))
        scorer = BatchScorer(m_sig)
        S, _ = scorer.score_lines(pairs)
        hits = 0
        for i in range(len(pairs)):
            pred = decode_dynamic(ScoreVector(m_sig.labels, S[i], "sigmoid"))
            hits += pred == golds[i]
        rate = hits / len(pairs)
        print(f"\n  both-label exact match {rate:.3f} over {len(pairs)} "
              "concatenated pairs")
        assert rate >= 0.80


def test_05_supplement_dynamic_two_labels_reachable_at_larger_l():
    # Companion evidence for 05b: identical pipeline, 16 languages, the
    # dynamic rule does admit second labels once L >= 10.
    gen = SyntheticLid(16, seed=77)
    cfg = TrainConfig(dim=64, epochs=2, lr0=0.5, min_word_count=2, seed=2)
    m = train(gen.corpus(300), cfg, LossMode.SIGMOID_BCE)
    rng = np.random.default_rng(3)
    scorer = BatchScorer(m)
    pairs, golds = [], []
    for _ in range(200):
        a, b = rng.choice(16, size=2, replace=False)
        k = int(rng.integers(4, 9))
        pairs.append(gen.sentence(a, k) + " " + gen.sentence(b, k))
        golds.append(frozenset({m.labels[a], m.labels[b]}))
    S, _ = scorer.score_lines(pairs)
    hits = sum(
        decode_dynamic(ScoreVector(m.labels, S[i], "sigmoid")) == golds[i]
        for i in range(len(pairs)))
    assert hits > 0, "dynamic decoding never returned both labels at L=16"


def test_06_determinism_and_serialization(tmp_path):
    with criterion("06 determinism-serialization"):
        gen = SyntheticLid(3, seed=31)
        corpus = gen.corpus(60)
        cfg = TrainConfig(dim=16, epochs=2, lr0=0.4, min_word_count=1, seed=4)
        p1, p2, p3 = (tmp_path / n for n in ("a.bin", "b.bin", "c.bin"))
        save(train(corpus, cfg, LossMode.SOFTMAX_CE), p1)
        save(train(corpus, cfg, LossMode.SOFTMAX_CE), p2)
        assert p1.read_bytes() == p2.read_bytes()

        m = load(p1)
        save(m, p3)
        assert p3.read_bytes() == p1.read_bytes()
        m2 = load(p3)
        assert np.array_equal(m2.E, m.E) and np.array_equal(m2.W, m.W)
        assert m2.labels == m.labels and m2.vocab == m.vocab
        assert m2.loss_mode == m.loss_mode and m2.dim == m.dim

        data = p1.read_bytes()
        corrupted = [data[:20], b"WRONG" + data[5:], data + b"\x00"]
        for i, blob in enumerate(corrupted):
            bad = tmp_path / f"bad{i}.bin"
            bad.write_bytes(blob)
            with pytest.raises(FormatError):
                load(bad)


def test_07_dataset_rule_conformance():
    with criterion("07 dataset-rules"):
        from cslid.datasets import (DatasetConfig, ReadReport, cs_proportion,
                                    read_dataset)
        config = DatasetConfig(format="token-tsv", tag_map={
            "es": "spa_Latn", "en": "eng_Latn", "ne": None, "other": None})
        lines = ["hola\tes", "amigo\tes", "",
                 "delete\ten", "that\ten", "ya\tes", "lo\tes", "",
                 "@USER\tne", "\U0001F602\tother", ""]
        report = ReadReport()
        got = list(read_dataset(lines, config, report))
        assert [ex.gold for ex in got] == [
            frozenset({"spa_Latn"}),
            frozenset({"eng_Latn", "spa_Latn"})]
        assert got[0].text == "hola amigo"
        assert got[1].text == "delete that ya lo"
        assert report.n_discarded == 1

        # 379-line fixture, 375 code-switched
        tsv = []
        for i in range(375):
            tsv += [f"w{i}\ten", f"v{i}\tes", ""]
        for i in range(4):
            tsv += [f"m{i}\tes", ""]
        exs = list(read_dataset(tsv, config))
        assert len(exs) == 379
        assert round(cs_proportion(exs), 3) == 0.989


def test_08_throughput():
    with criterion("08 throughput"):
        try:
            from threadpoolctl import threadpool_limits
        except ImportError:
            pytest.skip("threadpoolctl unavailable")
        import psutil

        rng = np.random.default_rng(8)
        letters = [chr(c) for c in range(0x61, 0x7B)]
        words = sorted({"".join(rng.choice(letters,
                                           size=rng.integers(3, 9)))
                        for _ in range(2000)})
        vocab = build_vocabulary([words, words], min_word_count=1)
        labels = tuple(f"l{i:03d}_Latn" for i in range(200))
        dim = 256
        E = (rng.random((vocab.size, dim), dtype=np.float32) - 0.5) * 0.1
        W = (rng.random((200, dim), dtype=np.float32) - 0.5) * 0.5
        E.setflags(write=False)
        W.setflags(write=False)
        m = LinearModel(vocab, dim, E, W, labels, LossMode.SOFTMAX_CE)

        warr = np.array(words)
        def line_stream(n):
            for _ in range(n):
                yield " ".join(rng.choice(warr, size=25))[:100]

        from cslid.cli import Predictions, _format_prediction

        engine = Predictions.from_components(linear=m,
                                             strategy_text="fixed:0.3")

        sink_chars = 0
        proc = psutil.Process()
        with threadpool_limits(1):
            for _, pred, smap in engine.run(line_stream(2000)):  # warm-up
                sink_chars += len(_format_prediction(pred, smap))
            rss0 = proc.memory_info().rss
            n = 100_000
            t0 = time.perf_counter()
            for _, pred, smap in engine.run(line_stream(n)):
                sink_chars += len(_format_prediction(pred, smap))
            dt = time.perf_counter() - t0
            rss1 = proc.memory_info().rss
        rate = n / dt
        grown = (rss1 - rss0) / 1e6
        print(f"\n  {n} lines in {dt:.2f}s = {rate:,.0f} lines/s "
              f"(rss +{grown:.0f} MB)")
        assert rate >= 10_000, f"{rate:,.0f} lines/s below target"
        assert grown < 500, f"memory grew {grown:.0f} MB on a bounded stream"


OPENLID_TRAIN = os.environ.get("CSLID_OPENLID_TRAIN")
FLORES_DEVTEST = os.environ.get("CSLID_FLORES_DEVTEST")


@pytest.mark.skipif(
    not (OPENLID_TRAIN and FLORES_DEVTEST),
    reason="data-gated: set CSLID_OPENLID_TRAIN and CSLID_FLORES_DEVTEST "
           "to labeled-lines files to enable")
def test_09_openlid_flores_exact_match(tmp_path):
    with criterion("09 openlid-flores"):
        from cslid.cli import main

        model_path = tmp_path / "openlid.bin"
        assert main(["train", OPENLID_TRAIN, "-o", str(model_path),
                     "--mode", "softmax"]) == 0
        import io
        from contextlib import redirect_stdout

        buf = io.StringIO()
        with redirect_stdout(buf):
            assert main(["eval", "--gold", FLORES_DEVTEST,
                         "--model", str(model_path),
                         "--decode", "top1", "--no-per-lang"]) == 0
        text = buf.getvalue()
        em = None
        for line in text.splitlines():
            if line.startswith("exact_match\t"):
                em = float(line.split("\t")[1])
                break
        assert em is not None
        assert abs(em - 0.926) <= 0.02
