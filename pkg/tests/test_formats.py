import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from saxshape import shapes
from saxshape.classifier import WordSetDatabase
from saxshape.errors import ParseError
from saxshape.formats import (
    read_pbm,
    read_series,
    read_word_sets,
    write_pbm,
    write_pbm_raw,
    write_series,
    write_word_sets,
)
from saxshape.sax import SaxWord
from saxshape.signature import BinaryImage

masks = st.integers(1, 20).flatmap(
    lambda w: st.integers(1, 20).flatmap(
        lambda h: arrays(bool, (h, w))
    )
)


# -- PBM ------------------------------------------------------------------------------

def test_read_p1_minimal():
    img = read_pbm(b"P1\n2 2\n1 1\n1 1\n")
    assert (img.width, img.height) == (2, 2) and img.mask.all()


def test_read_p1_background():
    img = read_pbm(b"P1\n1 1\n0\n")
    assert img.foreground_count == 0


def test_read_p1_comments_and_packed_digits():
    img = read_pbm(b"P1 # made by hand\n3 # width\n2\n101010")
    assert img.mask.tolist() == [[True, False, True], [False, True, False]]


def test_invert_flag():
    img = read_pbm(b"P1\n2 1\n1 0\n", invert=True)
    assert img.mask.tolist() == [[False, True]]


def test_p4_matches_p1():
    p1 = b"P1\n3 3\n1 1 0\n1 1 0\n0 0 0\n"
    # rows: 110 -> 0b11000000, 110 -> 0b11000000, 000 -> 0
    p4 = b"P4\n3 3\n" + bytes([0b11000000, 0b11000000, 0])
    assert read_pbm(p4) == read_pbm(p1)


def test_write_pbm_golden():
    assert write_pbm(BinaryImage([[True]])) == b"P1\n1 1\n1\n"
    checker = BinaryImage([[1, 0], [0, 1], [1, 0]])
    assert write_pbm(checker) == b"P1\n2 3\n1 0\n0 1\n1 0\n"


def test_write_pbm_wraps_wide_rows():
    out = write_pbm(shapes.disk((80, 3), 30))
    assert max(len(line) for line in out.split(b"\n")) <= 70
    assert read_pbm(out) == shapes.disk((80, 3), 30)


@given(masks)
def test_pbm_round_trips(mask):
    img = BinaryImage(mask)
    assert read_pbm(write_pbm(img)) == img
    assert read_pbm(write_pbm_raw(img)) == img


@pytest.mark.parametrize(
    "data,offset",
    [
        (b"", 0),
        (b"P2\n1 1\n0\n", 0),
        (b"P1", 2),
        (b"P1x1 1\n0", 2),
        (b"P1\n2 2\n1 1 1", 12),
        (b"P1\n2 2\n1 2 1 1", 9),
        (b"P4\n8 2\n\xff", 8),
        (b"P1\n0 3\n", 6),
        (b"P1\n100000 100000\n", 16),
        (b"P1\n99999999999 1\n", 3),
    ],
)
def test_pbm_errors_carry_offsets(data, offset):
    with pytest.raises(ParseError) as err:
        read_pbm(data)
    assert err.value.offset == offset
    assert f"byte {offset}" in str(err.value)


@given(st.binary(max_size=64))
def test_pbm_fuzz(data):
    try:
        read_pbm(data)
    except ParseError:
        pass


@given(st.binary(max_size=40))
def test_pbm_fuzz_after_valid_header(tail):
    for head in (b"P1\n3 2\n", b"P4\n9 2\n", b"P1 "):
        try:
            read_pbm(head + tail)
        except ParseError:
            pass


# -- series ---------------------------------------------------------------------------

def test_read_series_examples():
    assert read_series("1\n2\n3\n").tolist() == [1, 2, 3]
    assert read_series("# header\n1.5\n\n2.5\n").tolist() == [1.5, 2.5]
    assert read_series(b"  -4e2\r\n").tolist() == [-400.0]


@pytest.mark.parametrize("text,line", [("1\nfoo\n", 2), ("1\n\n# c\nnan\n", 4), ("inf", 1)])
def test_read_series_errors(text, line):
    with pytest.raises(ParseError) as err:
        read_series(text)
    assert err.value.line == line


def test_read_series_rejects_empty_and_bad_utf8():
    with pytest.raises(ParseError):
        read_series("# only a comment\n")
    with pytest.raises(ParseError):
        read_series(b"\xff\xfe1\n")


def test_write_series_format():
    assert write_series([1.0, 0.1, 1 / 3, 1e-12]) == "1\n0.1\n0.333333333\n1e-12\n"


@given(arrays(np.float64, st.integers(1, 50), elements=st.floats(allow_nan=False, allow_infinity=False)))
def test_series_write_read_idempotent(x):
    once = write_series(read_series(write_series(x)))
    assert write_series(read_series(once)) == once
    np.testing.assert_allclose(read_series(write_series(x)), x, rtol=5e-9)


@given(st.binary(max_size=64))
def test_series_fuzz(data):
    try:
        read_series(data)
    except ParseError:
        pass


# -- word sets ------------------------------------------------------------------------

def W(letters, a):
    return SaxWord.from_letters(letters, a)


def test_read_word_sets_minimal():
    db = read_word_sets("#sax a=3 w=2\ncircle\tbb\n")
    assert db == WordSetDatabase(3, 2, {"circle": {W("bb", 3)}})


@pytest.mark.parametrize(
    "text,line",
    [
        ("#sax a=3 w=2\nx\tab\ny\tab\n", 3),
        ("#sax a=3 w=2\nx\tad\n", 2),
        ("#sax a=3 w=2\nx\tabc\n", 2),
        ("#sax a=3\nx\tab\n", 1),
        ("#sax a=9 w=2\n", 1),
        ("#sax a=3 w=0\n", 1),
        ("#sax a=3 w=2\nx ab\n", 2),
        ("#sax a=3 w=2\n\tab\n", 2),
    ],
)
def test_word_set_validation_names_line(text, line):
    with pytest.raises(ParseError) as err:
        read_word_sets(text)
    assert err.value.line == line


def test_word_sets_golden_round_trip():
    db = WordSetDatabase(
        4, 3,
        {
            "triangle": {W("dad", 4), W("add", 4)},
            "circle": {W("bcb", 4)},
            "octagon": {W("cdc", 4), W("aaa", 4), W("dcd", 4)},
        },
    )
    golden = (
        "#sax a=4 w=3\n"
        "circle\tbcb\n"
        "octagon\taaa\n"
        "octagon\tcdc\n"
        "octagon\tdcd\n"
        "triangle\tadd\n"
        "triangle\tdad\n"
    )
    assert write_word_sets(db) == golden
    assert read_word_sets(golden) == db
    shuffled = golden.split("\n")
    shuffled = "\n".join([shuffled[0]] + shuffled[1:][::-1])
    assert write_word_sets(read_word_sets(shuffled)) == golden


@given(st.binary(max_size=64))
def test_word_set_fuzz(data):
    for prefix in (b"", b"#sax a=4 w=2\n"):
        try:
            read_word_sets(prefix + data)
        except ParseError:
            pass
