"""cslid: multi-label language identification for code-switched text.

Three classifier families behind one toolkit: a softmax linear model with
threshold decoding, a sigmoid (binary cross-entropy) linear model with
dynamic-threshold decoding, and a character-trigram rank-profile classifier
with script gating. Plus dataset preparation, multi-label metrics, and a
streaming corpus filter. See the ``cslid`` command for the operator
surface.
"""

from .datasets import DatasetConfig, Example, TokenTaggedSentence
from .decode import (DecodeStrategy, decode_closest_plus, decode_dynamic,
                     decode_fixed, decode_top1, dynamic_threshold,
                     parse_strategy)
from .errors import (CslidError, EmptyDataset, EmptyVocabulary, FormatError,
                     LengthMismatch, MultiLabelGold, NoFeatures,
                     NonFiniteLoss, UnknownLabel)
from .langcodes import (EMPTY, LabelUniverse, default_universe,
                        load_universe, normalize, normalize_set)
from .metrics import (EvalInstance, MetricsReport, auxiliary_stats,
                      cs_subset, evaluate, exact_match, hamming_loss,
                      macro_fpr, precision_recall, prediction_histogram)
from .model import (BatchScorer, LinearModel, LossMode, ScoreVector,
                    TrainConfig, bce_loss, ce_loss, forward, load, save,
                    train)
from .textprep import (Vocabulary, build_vocabulary, char_ngrams, clean,
                       featurize, tokenize)
from .trigram import (ProfileSet, TrigramProfile, classify_trigram,
                      detect_script, distance, load_profiles, profile,
                      save_profiles, train_profiles)

__version__ = "0.1.0"
