import json
from importlib import resources

import pytest

from cslid.datasets import (DatasetConfig, Example, ReadReport,
                            TokenTaggedSentence, cs_proportion,
                            format_labeled_line, load_config,
                            parse_labeled_line, read_dataset,
                            to_sentence_level)
from cslid.errors import EmptyDataset, FormatError

SPA_ENG = DatasetConfig(format="token-tsv", tag_map={
    "eng": "eng_Latn", "spa": "spa_Latn", "ne": None, "other": None})


class TestToSentenceLevel:
    def test_monolingual(self):
        s = TokenTaggedSentence((("hola", "spa"), ("amigo", "spa")))
        ex = to_sentence_level(s, SPA_ENG)
        assert ex == Example("hola amigo", frozenset({"spa_Latn"}))

    def test_code_switched(self):
        toks = [("delete", "eng"), ("that", "eng"), ("tweet", "eng"),
                ("ya", "spa"), ("lo", "spa"), ("hize", "spa")]
        ex = to_sentence_level(TokenTaggedSentence(tuple(toks)), SPA_ENG)
        assert ex.gold == {"eng_Latn", "spa_Latn"}
        assert ex.text == "delete that tweet ya lo hize"

    def test_discard_non_language_only(self):
        s = TokenTaggedSentence((("@USER", "ne"), ("\U0001F602", "other")))
        assert to_sentence_level(s, SPA_ENG) is None

    def test_unknown_tags_counted(self):
        s = TokenTaggedSentence((("x", "weird"), ("hola", "spa")))
        report = ReadReport()
        ex = to_sentence_level(s, SPA_ENG, report)
        assert ex.gold == {"spa_Latn"}
        assert report.unknown_tags == {"weird": 1}

    def test_never_empty_gold(self):
        s = TokenTaggedSentence((("a", "ne"),))
        assert to_sentence_level(s, SPA_ENG) is None


class TestCsProportion:
    def test_all_monolingual(self):
        exs = [Example("a", frozenset({"x"}))] * 4
        assert cs_proportion(exs) == 0.0

    def test_half(self):
        exs = [Example("a", frozenset({"x"})),
               Example("b", frozenset({"x", "y"}))] * 2
        assert cs_proportion(exs) == 0.5

    def test_turkish_english_style_fixture(self):
        exs = [Example("a b", frozenset({"tur_Latn", "eng_Latn"}))] * 375
        exs += [Example("c", frozenset({"tur_Latn"}))] * 4
        assert len(exs) == 379
        assert round(cs_proportion(exs), 3) == 0.989

    def test_empty(self):
        with pytest.raises(EmptyDataset):
            cs_proportion([])

    def test_matches_brute_force_recount(self):
        import numpy as np

        rng = np.random.default_rng(17)
        tags = ["a_X", "b_X", "c_X"]
        for _ in range(50):
            exs = []
            for _ in range(int(rng.integers(1, 30))):
                k = int(rng.integers(1, 4))
                gold = frozenset(rng.choice(tags, size=k, replace=False))
                exs.append(Example("t", gold))
            recount = sum(1 for e in exs if len(e.gold) > 1) / len(exs)
            assert cs_proportion(exs) == recount


class TestLabeledLines:
    def test_parse(self):
        assert parse_labeled_line("__label__a __label__b some text") == \
            ("some text", frozenset({"a", "b"}))

    def test_no_labels_is_none(self):
        assert parse_labeled_line("just text") is None

    def test_format_round_trip(self):
        line = format_labeled_line("some text", frozenset({"b", "a"}))
        assert line == "__label__a __label__b some text"
        assert parse_labeled_line(line) == ("some text", frozenset({"a", "b"}))

    def test_reader_counts_malformed(self):
        lines = ["__label__x ok", "no labels here", "__label__y fine"]
        report = ReadReport()
        config = DatasetConfig(format="labeled-lines")
        got = list(read_dataset(lines, config, report))
        assert len(got) == 2
        assert report.n_malformed == 1
        assert report.first_malformed_line == 2


class TestTokenTsv:
    def test_all_ne_sentence_discarded(self):
        lines = ["@USER\tne", "\U0001F602\tother", ""]
        report = ReadReport()
        got = list(read_dataset(lines, SPA_ENG, report))
        assert got == []
        assert report.n_discarded == 1

    def test_blank_line_separates(self):
        lines = ["hola\tspa", "", "delete\teng", "ya\tspa"]
        got = list(read_dataset(lines, SPA_ENG))
        assert [ex.gold for ex in got] == [
            frozenset({"spa_Latn"}), frozenset({"eng_Latn", "spa_Latn"})]

    def test_structural_error_has_line_number(self):
        lines = ["hola\tspa", "broken line without tab"]
        with pytest.raises(FormatError) as ei:
            list(read_dataset(lines, SPA_ENG))
        assert "line 2" in str(ei.value)

    def test_read_twice_identical(self):
        lines = ["hola\tspa", "", "delete\teng", "", "x\tne"]
        a = list(read_dataset(lines, SPA_ENG))
        b = list(read_dataset(lines, SPA_ENG))
        assert a == b


UTT = DatasetConfig(format="utterance-json", text_field="text",
                    labels_field="language",
                    tag_map={"es": "spa_Latn", "eu": "eus_Latn",
                             "cs": ["spa_Latn", "eus_Latn"]})


class TestUtteranceJson:
    def test_jsonl_order_preserved(self):
        lines = [json.dumps({"text": f"s{i}", "language": "es"})
                 for i in range(4)]
        got = list(read_dataset(lines, UTT))
        assert [ex.text for ex in got] == ["s0", "s1", "s2", "s3"]

    def test_list_valued_tag(self):
        lines = [json.dumps({"text": "kaixo hola", "language": "cs"})]
        got = list(read_dataset(lines, UTT))
        assert got[0].gold == {"spa_Latn", "eus_Latn"}

    def test_string_or_list_labels(self):
        lines = [json.dumps({"text": "a", "language": ["es", "eu"]})]
        got = list(read_dataset(lines, UTT))
        assert got[0].gold == {"spa_Latn", "eus_Latn"}

    def test_json_array_form(self):
        payload = json.dumps([{"text": "a", "language": "es"},
                              {"text": "b", "language": "eu"}], indent=1)
        got = list(read_dataset(payload.splitlines(), UTT))
        assert len(got) == 2

    def test_bad_json_line_number(self):
        lines = ['{"text": "ok", "language": "es"}', "{broken"]
        with pytest.raises(FormatError) as ei:
            list(read_dataset(lines, UTT))
        assert "line 2" in str(ei.value)

    def test_missing_field_counted(self):
        lines = [json.dumps({"text": "no label field"})]
        report = ReadReport()
        got = list(read_dataset(lines, UTT, report))
        assert got == [] and report.n_malformed == 1

    def test_unknown_label_discards(self):
        lines = [json.dumps({"text": "x", "language": "fr"})]
        report = ReadReport()
        got = list(read_dataset(lines, UTT, report))
        assert got == []
        assert report.n_discarded == 1
        assert report.unknown_tags == {"fr": 1}


class TestConfigs:
    def test_load_config_round_trip(self, tmp_path):
        p = tmp_path / "c.json"
        p.write_text(json.dumps({"format": "token-tsv",
                                 "tag_map": {"a": "a_Latn", "ne": None}}))
        cfg = load_config(p)
        assert cfg.map_tag("a") == ("a_Latn",)
        assert cfg.map_tag("ne") is None

    def test_unknown_key_rejected(self, tmp_path):
        p = tmp_path / "c.json"
        p.write_text(json.dumps({"format": "token-tsv", "oops": 1}))
        with pytest.raises(FormatError):
            load_config(p)

    def test_bad_format_rejected(self):
        with pytest.raises(ValueError):
            DatasetConfig(format="parquet")

    def test_packaged_configs_load(self):
        base = resources.files("cslid") / "data" / "dataset_configs"
        names = [p.name for p in base.iterdir() if p.name.endswith(".json")]
        assert len(names) == 6
        for name in names:
            with resources.as_file(base / name) as path:
                cfg = load_config(str(path))
            assert cfg.format in ("token-tsv", "utterance-json")
