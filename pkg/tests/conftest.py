import numpy as np
import pytest

from cslid.model import LossMode, TrainConfig, train

# Letter pool carved into disjoint five-letter alphabets, one per language.
_POOL = ([chr(c) for c in range(0x61, 0x7B)]           # a-z
         + [chr(c) for c in range(0x3B1, 0x3C9)]       # Greek
         + [chr(c) for c in range(0x430, 0x450)]       # Cyrillic
         + [chr(c) for c in range(0x5D0, 0x5EA)])      # Hebrew


class SyntheticLid:
    """Seeded generator of monolingual sentences over disjoint alphabets."""

    def __init__(self, n_langs: int, seed: int = 0, lexicon_size: int = 40):
        assert n_langs * 5 <= len(_POOL)
        self.rng = np.random.default_rng(seed)
        self.labels = tuple(f"l{i:02d}_Latn" for i in range(n_langs))
        self.lexicons = []
        for i in range(n_langs):
            alpha = list(_POOL[i * 5:(i + 1) * 5])
            self.lexicons.append([
                "".join(self.rng.choice(alpha, size=self.rng.integers(3, 8)))
                for _ in range(lexicon_size)])

    def sentence(self, lang: int, n_words: int | None = None) -> str:
        n = n_words or int(self.rng.integers(4, 9))
        return " ".join(self.rng.choice(self.lexicons[lang], size=n))

    def corpus(self, lines_per_lang: int) -> list[tuple[str, frozenset[str]]]:
        out = []
        for i, tag in enumerate(self.labels):
            for _ in range(lines_per_lang):
                out.append((self.sentence(i), frozenset({tag})))
        return out


@pytest.fixture(scope="session")
def synth3():
    return SyntheticLid(3, seed=11)


@pytest.fixture(scope="session")
def toy_softmax_model(synth3):
    cfg = TrainConfig(dim=32, epochs=2, lr0=0.5, min_word_count=2, seed=5)
    return train(synth3.corpus(300), cfg, LossMode.SOFTMAX_CE)


@pytest.fixture(scope="session")
def toy_sigmoid_model(synth3):
    cfg = TrainConfig(dim=32, epochs=2, lr0=0.5, min_word_count=2, seed=5)
    return train(synth3.corpus(300), cfg, LossMode.SIGMOID_BCE)
