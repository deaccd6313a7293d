import pytest

from cslid.errors import FormatError
from cslid.langcodes import (EMPTY, LabelUniverse, default_universe,
                             load_aliases, load_universe, normalize,
                             normalize_set, universe_from_tags)


@pytest.fixture(scope="module")
def uni():
    return default_universe()


class TestNormalize:
    def test_identity(self, uni):
        assert normalize("eng_Latn", uni) == "eng_Latn"

    def test_alias(self, uni):
        assert normalize("tur", uni) == "tur_Latn"
        assert normalize("en", uni) == "eng_Latn"
        assert normalize("cmn", uni) == "zho_Hans"

    def test_unknown_is_empty(self, uni):
        assert normalize("qqq_Qaaa", uni) is EMPTY
        assert normalize("", uni) is EMPTY

    def test_idempotent_on_image(self, uni):
        for raw in ("eng_Latn", "tur", "zh", "nonsense"):
            tag = normalize(raw, uni)
            if tag is not EMPTY:
                assert normalize(tag, uni) == tag

    def test_never_outside_universe(self, uni):
        for raw in ("en", "fr", "zho", "xx", "arb_Arab", "klingon"):
            tag = normalize(raw, uni)
            assert tag is EMPTY or tag in uni

    def test_normalize_set_drops_empty(self, uni):
        got = normalize_set(["eng_Latn", "tur", "qqq"], uni)
        assert got == {"eng_Latn", "tur_Latn"}


class TestDefaultUniverse:
    def test_201_tags(self, uni):
        assert len(uni) == 201

    def test_tag_shape(self, uni):
        for tag in uni.tags:
            lang, _, script = tag.partition("_")
            assert len(lang) == 3 and lang.islower()
            assert len(script) == 4 and script[0].isupper()

    def test_known_members(self, uni):
        for tag in ("eng_Latn", "tur_Latn", "arz_Arab", "zho_Hans"):
            assert tag in uni

    def test_alias_targets_inside(self, uni):
        assert all(v in uni for v in uni.aliases.values())


class TestConstruction:
    def test_duplicate_tags_rejected(self):
        with pytest.raises(ValueError):
            LabelUniverse(("a_Latn", "a_Latn"))

    def test_alias_outside_dropped(self):
        u = LabelUniverse(("a_Latn",), {"x": "b_Latn", "y": "a_Latn"})
        assert u.aliases == {"y": "a_Latn"}

    def test_universe_from_tags_sorted_unique(self):
        u = universe_from_tags(["b_X", "a_X", "b_X"])
        assert u.tags == ("a_X", "b_X")


class TestFiles:
    def test_load_universe(self, tmp_path):
        p = tmp_path / "u.txt"
        p.write_text("# comment\nb_Latn\na_Latn\n\n")
        u = load_universe(p)
        assert u.tags == ("b_Latn", "a_Latn")  # file order preserved

    def test_empty_universe_file(self, tmp_path):
        p = tmp_path / "u.txt"
        p.write_text("# nothing\n")
        with pytest.raises(FormatError):
            load_universe(p)

    def test_load_aliases(self, tmp_path):
        p = tmp_path / "a.tsv"
        p.write_text("# c\nfoo\tbar_Latn\n")
        assert load_aliases(p) == {"foo": "bar_Latn"}

    def test_bad_alias_line(self, tmp_path):
        p = tmp_path / "a.tsv"
        p.write_text("justonefield\n")
        with pytest.raises(FormatError) as ei:
            load_aliases(p)
        assert "line 1" in str(ei.value)
