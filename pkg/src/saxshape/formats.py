"""Readers and writers for PBM images, series text files and word-set files.

Every reader raises :class:`~saxshape.errors.ParseError` (or a subclass) on
malformed input and nothing else.
"""
from __future__ import annotations

import math
import re

import numpy as np

from .classifier import WordSetDatabase
from .errors import InvalidInputError, ParseError
from .sax import SaxWord, breakpoints
from .signature import BinaryImage

# Refuse headers that would make us allocate absurd buffers.
MAX_PBM_SIDE = 1 << 15
MAX_PBM_PIXELS = 1 << 26

_PBM_WHITESPACE = b" \t\n\r\v\f"


class _Cursor:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def skip_ws_and_comments(self):
        d = self.data
        while self.pos < len(d):
            c = d[self.pos:self.pos + 1]
            if c in _PBM_WHITESPACE:
                self.pos += 1
            elif c == b"#":
                end = d.find(b"\n", self.pos)
                self.pos = len(d) if end < 0 else end + 1
            else:
                return

    def read_int(self, what: str) -> int:
        self.skip_ws_and_comments()
        start = self.pos
        d = self.data
        while self.pos < len(d) and 48 <= d[self.pos] <= 57:
            self.pos += 1
            if self.pos - start > 9:
                raise ParseError(f"PBM {what} too large", offset=start)
        if self.pos == start:
            if start >= len(d):
                raise ParseError(f"truncated PBM header: missing {what}", offset=start)
            raise ParseError(f"expected PBM {what}, found {d[start:start + 1]!r}", offset=start)
        return int(d[start:self.pos])


def read_pbm(data: bytes, invert: bool = False) -> BinaryImage:
    """Parse a plain (P1) or raw (P4) portable bitmap.

    By default a PBM ``1`` pixel is shape foreground; ``invert=True`` makes
    ``0`` the foreground instead.
    """
    if isinstance(data, str):
        data = data.encode("latin-1", errors="replace")
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P1", b"P4"):
        raise ParseError(f"bad PBM magic number {magic!r}", offset=0)
    cur = _Cursor(data)
    cur.pos = 2
    if cur.pos < len(data) and data[cur.pos:cur.pos + 1] not in _PBM_WHITESPACE + b"#":
        raise ParseError("missing whitespace after PBM magic number", offset=2)
    width = cur.read_int("width")
    height = cur.read_int("height")
    if width < 1 or height < 1:
        raise ParseError(f"PBM dimensions must be positive, got {width}x{height}", offset=cur.pos)
    if width > MAX_PBM_SIDE or height > MAX_PBM_SIDE or width * height > MAX_PBM_PIXELS:
        raise ParseError(f"PBM dimensions {width}x{height} exceed supported size", offset=cur.pos)

    if magic == b"P1":
        bits = _read_plain_bits(cur, width * height)
    else:
        if cur.pos >= len(data) or data[cur.pos:cur.pos + 1] not in _PBM_WHITESPACE:
            raise ParseError("expected single whitespace before P4 raster", offset=cur.pos)
        start = cur.pos + 1
        row_bytes = (width + 7) // 8
        need = row_bytes * height
        raster = data[start:start + need]
        if len(raster) < need:
            raise ParseError(
                f"truncated P4 raster: expected {need} bytes, found {len(raster)}",
                offset=start + len(raster),
            )
        packed = np.frombuffer(raster, dtype=np.uint8).reshape(height, row_bytes)
        bits = np.unpackbits(packed, axis=1)[:, :width].astype(bool)
    mask = bits.reshape(height, width)
    return BinaryImage(~mask if invert else mask)


def _read_plain_bits(cur: _Cursor, count: int) -> np.ndarray:
    out = np.empty(count, dtype=bool)
    d = cur.data
    k = 0
    while k < count:
        cur.skip_ws_and_comments()
        if cur.pos >= len(d):
            raise ParseError(f"truncated P1 raster: got {k} of {count} pixels", offset=cur.pos)
        c = d[cur.pos]
        if c == 48:
            out[k] = False
        elif c == 49:
            out[k] = True
        else:
            raise ParseError(f"invalid P1 pixel {bytes([c])!r}", offset=cur.pos)
        cur.pos += 1
        k += 1
    return out


def write_pbm(image: BinaryImage) -> bytes:
    """Plain (P1) encoding, one raster row per line; rows wider than 35
    pixels wrap to keep lines within 70 characters."""
    lines = [b"P1", f"{image.width} {image.height}".encode()]
    for row in image.mask:
        digits = ["1" if v else "0" for v in row]
        for i in range(0, len(digits), 35):
            lines.append(" ".join(digits[i:i + 35]).encode())
    return b"\n".join(lines) + b"\n"


def write_pbm_raw(image: BinaryImage) -> bytes:
    """Raw (P4) encoding."""
    header = f"P4\n{image.width} {image.height}\n".encode()
    return header + np.packbits(image.mask, axis=1).tobytes()


def _as_text(data, what: str) -> str:
    if isinstance(data, str):
        return data
    try:
        return bytes(data).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{what} is not valid UTF-8", offset=exc.start) from None


def read_series(text) -> np.ndarray:
    """One decimal sample per line; ``#`` lines and blank lines are skipped."""
    text = _as_text(text, "series file")
    values = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = float(line)
        except ValueError:
            raise ParseError(f"cannot parse sample {line[:40]!r}", line=lineno) from None
        if not math.isfinite(v):
            raise ParseError(f"non-finite sample {line[:40]!r}", line=lineno)
        values.append(v)
    if not values:
        raise ParseError("series file contains no samples")
    return np.array(values, dtype=np.float64)


def write_series(series) -> str:
    return "".join(f"{float(v):.9g}\n" for v in series)


_HEADER_RE = re.compile(r"#sax a=([0-9]+) w=([0-9]+)")


def read_word_sets(text) -> WordSetDatabase:
    """Parse the ``#sax a=.. w=..`` header plus ``label<TAB>letters`` lines."""
    text = _as_text(text, "word-set file")
    lines = text.split("\n")
    m = _HEADER_RE.fullmatch(lines[0])
    if m is None:
        raise ParseError("expected header '#sax a=<alphabet> w=<length>'", line=1)
    a, w = int(m.group(1)), int(m.group(2))
    try:
        breakpoints(a)
    except InvalidInputError as exc:
        raise ParseError(str(exc), line=1) from None
    if w < 1:
        raise ParseError("word length must be positive", line=1)

    classes: dict[str, set] = {}
    owner: dict[SaxWord, str] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise ParseError("expected '<label>\\t<word>'", line=lineno)
        label, letters = parts
        if len(letters) != w:
            raise ParseError(f"word {letters[:40]!r} has length {len(letters)}, header says {w}", line=lineno)
        try:
            word = SaxWord.from_letters(letters, a)
        except InvalidInputError as exc:
            raise ParseError(str(exc), line=lineno) from None
        if owner.get(word, label) != label:
            raise ParseError(
                f"word {letters!r} appears in classes {owner[word]!r} and {label!r}", line=lineno
            )
        owner[word] = label
        classes.setdefault(label, set()).add(word)
    try:
        return WordSetDatabase(a, w, classes)
    except InvalidInputError as exc:
        raise ParseError(str(exc)) from None


def write_word_sets(db: WordSetDatabase) -> str:
    """Canonical form: header, then entries sorted by label and word."""
    out = [f"#sax a={db.alphabet_size} w={db.word_length}\n"]
    out += [f"{label}\t{word.letters}\n" for label, word in db.entries()]
    return "".join(out)
