"""scikit-learn style front end for idiom correction.

``IdiomCorrector`` is a stateless-text transformer: ``fit`` resolves
the pinyin table and idiom dictionary (bundled data by default, or a
vocabulary passed as ``X``), ``transform`` maps an iterable of
sentences to corrected sentences, and ``predict`` returns the
correction records per sentence. The estimator follows the usual
``get_params``/``set_params``/``clone`` contract so it can sit inside
pipelines.
"""

from __future__ import annotations

import os
from typing import Iterable, Mapping

from sklearn.base import BaseEstimator, TransformerMixin

from . import data as _data
from .corrector import Correction, CorrectionConfig, correct_sentence, dedupe_adjacent
from .dictionary import IdiomDict, IdiomEntry, deserialize
from .pinyin import PinyinTable, load_table
from .scoring import ScoreWeights

__all__ = ["IdiomCorrector"]


def _check_texts(X) -> list[str]:
    """Validate an iterable of sentences, rejecting scalars and non-strings."""
    if X is None:
        raise ValueError("X must be an iterable of strings, got None")
    if isinstance(X, (str, bytes)):
        raise TypeError("X must be an iterable of strings, not a single string")
    texts = list(X)
    for i, t in enumerate(texts):
        if not isinstance(t, str):
            raise TypeError(f"X[{i}] must be a string, got {type(t).__name__}")
    return texts


def _resolve_table(table) -> PinyinTable:
    if table is None:
        return load_table(_data.default_table_path())
    if isinstance(table, PinyinTable):
        return table
    if isinstance(table, (str, os.PathLike)):
        return load_table(table)
    raise TypeError(f"table must be a PinyinTable or a path, got {type(table).__name__}")


def _resolve_dictionary(dictionary) -> IdiomDict:
    if dictionary is None:
        return deserialize(_data.default_dict_path().read_bytes())
    if isinstance(dictionary, IdiomDict):
        return dictionary
    if isinstance(dictionary, (str, os.PathLike)):
        with open(dictionary, "rb") as fh:
            return deserialize(fh.read())
    raise TypeError(
        f"dictionary must be an IdiomDict or a path, got {type(dictionary).__name__}"
    )


def _resolve_weights(weights) -> ScoreWeights:
    if weights is None:
        return ScoreWeights()
    if isinstance(weights, ScoreWeights):
        return weights
    if isinstance(weights, Mapping):
        return ScoreWeights.from_mapping(weights)
    if isinstance(weights, (str, os.PathLike)):
        return ScoreWeights.from_file(weights)
    raise TypeError("weights must be ScoreWeights, a mapping, or a path")


class IdiomCorrector(BaseEstimator, TransformerMixin):
    """Correct garbled idioms in Chinese sentences.

    Parameters
    ----------
    dictionary : IdiomDict, path, or None
        Idiom dictionary; None loads the bundled one. Ignored when a
        vocabulary is passed to ``fit``.
    table : PinyinTable, path, or None
        Character pinyin table; None loads the bundled one.
    window_len : int
        Characters per candidate window.
    threshold_ratio : float
        Accept a match when its score reaches this fraction of the
        idiom's self-score.
    min_absolute : float
        Additional absolute score floor.
    weights : ScoreWeights, mapping, path, or None
        Scoring constants; None uses the defaults.
    dedupe : bool
        Remove the token overlap between consecutive input sentences
        before correcting, as with consecutive recognizer segments.
    """

    def __init__(
        self,
        dictionary=None,
        table=None,
        window_len: int = 4,
        threshold_ratio: float = 0.55,
        min_absolute: float = 0.0,
        weights=None,
        dedupe: bool = False,
    ):
        self.dictionary = dictionary
        self.table = table
        self.window_len = window_len
        self.threshold_ratio = threshold_ratio
        self.min_absolute = min_absolute
        self.weights = weights
        self.dedupe = dedupe

    def fit(self, X: Iterable[str] | None = None, y=None) -> "IdiomCorrector":
        """Resolve the table and dictionary.

        ``X`` may be an iterable of idiom words to build the dictionary
        from (readings generated from the table); ``None`` uses the
        ``dictionary`` parameter or the bundled data.
        """
        self.table_ = _resolve_table(self.table)
        if X is not None:
            words = _check_texts(X)
            entries = []
            seen = set()
            for word in words:
                if word in seen:
                    continue
                readings = self.table_.sentence_pinyin(word)
                if not word or any(s is None for s in readings):
                    raise ValueError(f"cannot build entry for {word!r}: missing readings")
                seen.add(word)
                entries.append(IdiomEntry(word, tuple(readings)))
            self.dictionary_ = IdiomDict(entries)
        else:
            self.dictionary_ = _resolve_dictionary(self.dictionary)
        self.config_ = CorrectionConfig(
            window_len=self.window_len,
            weights=_resolve_weights(self.weights),
            threshold_ratio=self.threshold_ratio,
            min_absolute=self.min_absolute,
        )
        self.n_entries_ = len(self.dictionary_)
        return self

    def _checked_texts(self, X) -> list[str]:
        if not hasattr(self, "dictionary_"):
            raise RuntimeError("IdiomCorrector is not fitted; call fit() first")
        texts = _check_texts(X)
        if self.dedupe:
            for k in range(len(texts) - 1):
                _, texts[k + 1] = dedupe_adjacent(texts[k], texts[k + 1])
        return texts

    def transform(self, X: Iterable[str]) -> list[str]:
        """Corrected copy of every sentence."""
        return [
            correct_sentence(t, self.dictionary_, self.table_, self.config_)[0]
            for t in self._checked_texts(X)
        ]

    def predict(self, X: Iterable[str]) -> list[list[Correction]]:
        """Correction records per sentence, without applying them anywhere."""
        return [
            correct_sentence(t, self.dictionary_, self.table_, self.config_)[1]
            for t in self._checked_texts(X)
        ]
