"""Rotation word sets and brute-force nearest-word classification."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import DegenerateClassError, InvalidInputError
from .sax import _CELL_TABLES, SaxConfig, SaxWord, breakpoints, sax_transform
from .signature import DEFAULT_BINS, BinaryImage, rotate_image, signature


@dataclass(frozen=True)
class ClassificationResult:
    label: str
    distance: float
    nearest_word: SaxWord


@dataclass(frozen=True, eq=False)
class WordSetDatabase:
    """Per-class word sets over one alphabet size and word length.

    Construction validates that all words share ``alphabet_size`` and
    ``word_length`` and that no word belongs to two classes.  ``conflicts``
    maps each word dropped during :func:`build_word_sets` to the labels that
    produced it; it is informational and not part of equality.
    """

    alphabet_size: int
    word_length: int
    classes: Mapping[str, frozenset]
    conflicts: Mapping[SaxWord, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        breakpoints(self.alphabet_size)
        classes = {}
        owner: dict[SaxWord, str] = {}
        for label in sorted(self.classes):
            if not isinstance(label, str) or not label or "\t" in label or "\n" in label:
                raise InvalidInputError(f"invalid class label {label!r}")
            words = frozenset(self.classes[label])
            for word in words:
                if word.alphabet_size != self.alphabet_size or len(word) != self.word_length:
                    raise InvalidInputError(
                        f"word {word.letters!r} in class {label!r} does not match "
                        f"a={self.alphabet_size} w={self.word_length}"
                    )
                if word in owner:
                    raise InvalidInputError(
                        f"word {word.letters!r} appears in classes {owner[word]!r} and {label!r}"
                    )
                owner[word] = label
            classes[label] = words
        object.__setattr__(self, "classes", classes)
        # Flattened (label, word) entries in lexicographic order, so the first
        # minimum found is also the tie-break winner.
        entries = sorted((label, w) for label, ws in classes.items() for w in ws)
        object.__setattr__(self, "_entries", entries)
        matrix = np.array([w.symbols for _, w in entries], dtype=np.int64).reshape(len(entries), self.word_length)
        object.__setattr__(self, "_matrix", matrix - 1)

    def __eq__(self, other):
        if not isinstance(other, WordSetDatabase):
            return NotImplemented
        return (self.alphabet_size, self.word_length, dict(self.classes)) == (
            other.alphabet_size, other.word_length, dict(other.classes))

    __hash__ = None

    @property
    def config(self) -> SaxConfig:
        return SaxConfig(self.alphabet_size, self.word_length)

    def __len__(self):
        return len(self._entries)

    def entries(self) -> list[tuple[str, SaxWord]]:
        return list(self._entries)


def image_word(image: BinaryImage, config: SaxConfig, bins: int = DEFAULT_BINS) -> SaxWord:
    return sax_transform(signature(image, bins).samples, config)


def rotation_variants(image: BinaryImage, count: int) -> list[BinaryImage]:
    """``count`` in-plane rotations at uniform angles ``2*pi*k/count``.

    ``k = 0`` is the image itself; ``count <= 1`` returns just the image.
    """
    if count <= 1:
        return [image]
    return [image] + [rotate_image(image, 2 * math.pi * k / count) for k in range(1, count)]


def build_word_sets(
    labeled_images: Iterable[tuple[str, BinaryImage]],
    config: SaxConfig,
    bins: int = DEFAULT_BINS,
) -> WordSetDatabase:
    """Turn labelled images into mutually exclusive per-class word sets.

    Words produced by more than one class are removed from every class and
    recorded in ``conflicts``.  A class emptied by that removal is an error.
    """
    sets: dict[str, set] = {}
    for label, image in labeled_images:
        sets.setdefault(label, set()).add(image_word(image, config, bins))
    if not sets:
        raise InvalidInputError("no labelled images given")

    owners: dict[SaxWord, list[str]] = {}
    for label, words in sets.items():
        for word in words:
            owners.setdefault(word, []).append(label)
    conflicts = {w: tuple(sorted(ls)) for w, ls in owners.items() if len(ls) > 1}
    conflicts = dict(sorted(conflicts.items(), key=lambda kv: kv[0].letters))
    for label in sorted(sets):
        sets[label] -= conflicts.keys()
        if not sets[label]:
            raise DegenerateClassError(label, conflicts=conflicts)
    return WordSetDatabase(config.alphabet_size, config.word_length, sets, conflicts)


def distances_hundredths(candidate: SaxWord, db: WordSetDatabase) -> np.ndarray:
    """Distance from ``candidate`` to every entry of ``db`` (entry order), in hundredths."""
    if candidate.alphabet_size != db.alphabet_size or len(candidate) != db.word_length:
        raise InvalidInputError(
            f"candidate a={candidate.alphabet_size} w={len(candidate)} does not match "
            f"database a={db.alphabet_size} w={db.word_length}"
        )
    table = _CELL_TABLES[db.alphabet_size]
    cand = np.asarray(candidate.symbols, dtype=np.int64) - 1
    return table[cand[None, :], db._matrix].sum(axis=1)


def classify(candidate: SaxWord, db: WordSetDatabase) -> ClassificationResult:
    """Label of the stored word nearest to ``candidate``.

    Ties go to the lexicographically smallest label, then smallest word.
    """
    if len(db) == 0:
        raise InvalidInputError("word-set database is empty")
    d = distances_hundredths(candidate, db)
    best = int(np.argmin(d))
    label, word = db._entries[best]
    return ClassificationResult(label, int(d[best]) / 100, word)


def classify_image(
    image: BinaryImage,
    db: WordSetDatabase,
    config: SaxConfig | None = None,
    bins: int = DEFAULT_BINS,
) -> ClassificationResult:
    config = db.config if config is None else config
    if (config.alphabet_size, config.word_length) != (db.alphabet_size, db.word_length):
        raise InvalidInputError("config does not match the word-set database")
    return classify(image_word(image, config, bins), db)
