"""Command-line front end.

Exit codes: 0 success, 1 user or input error, 2 internal error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .bench import OPS, BenchConfig, run_bench
from .classifier import build_word_sets, classify_image, rotation_variants
from .errors import DegenerateClassError, SaxError
from .sax import SaxConfig, detect_transitions, sax_transform
from .signature import DEFAULT_BINS, signature


class UsageError(SaxError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_bytes(path) -> bytes:
    if str(path) == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_text(path, text: str):
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def cmd_sax(args) -> int:
    series = formats.read_series(_read_bytes(args.input))
    word = sax_transform(series, SaxConfig(args.alphabet, args.word_length))
    print(word.letters)
    return 0


def cmd_signature(args) -> int:
    image = formats.read_pbm(_read_bytes(args.input), invert=args.invert)
    sig = signature(image, args.bins)
    _write_text(args.output, formats.write_series(sig.samples))
    return 0


def _class_images(root: Path, invert: bool):
    if not root.is_dir():
        raise UsageError(f"{root} is not a directory")
    class_dirs = sorted(p for p in root.iterdir() if p.is_dir())
    if not class_dirs:
        raise UsageError(f"{root} has no class subdirectories")
    for class_dir in class_dirs:
        files = sorted(p for p in class_dir.iterdir() if p.is_file() and p.suffix.lower() == ".pbm")
        if not files:
            raise UsageError(f"class directory {class_dir} contains no .pbm files")
        for f in files:
            yield class_dir.name, formats.read_pbm(f.read_bytes(), invert=invert)


def _report_conflicts(conflicts):
    for word, labels in conflicts.items():
        print(f"conflict\t{word.letters}\t{','.join(labels)}", file=sys.stderr)


def cmd_build_sets(args) -> int:
    config = SaxConfig(args.alphabet, args.word_length)
    labeled = (
        (label, variant)
        for label, image in _class_images(Path(args.input), args.invert)
        for variant in rotation_variants(image, args.rotations)
    )
    try:
        db = build_word_sets(labeled, config, args.bins)
    except DegenerateClassError as exc:
        _report_conflicts(exc.conflicts)
        raise
    _report_conflicts(db.conflicts)
    _write_text(args.output, formats.write_word_sets(db))
    return 0


def cmd_classify(args) -> int:
    db = formats.read_word_sets(_read_bytes(args.sets))
    image = formats.read_pbm(_read_bytes(args.input), invert=args.invert)
    result = classify_image(image, db, bins=args.bins)
    if args.threshold is not None and result.distance > args.threshold:
        print("UNKNOWN")
    else:
        print(f"{result.label}\t{result.distance:g}")
    return 0


def cmd_events(args) -> int:
    series = formats.read_series(_read_bytes(args.input))
    word = sax_transform(series, SaxConfig(args.alphabet, args.word_length))
    for event in detect_transitions(word):
        print(event.render())
    return 0


def cmd_bench(args) -> int:
    cfg = BenchConfig(args.op, args.size, args.reps, args.seed, args.alphabet, args.word_length)
    sys.stdout.write(run_bench(cfg).to_tsv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="saxshape", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sax_flags(p, alphabet_default=None, word_default=None):
        p.add_argument("--alphabet", type=int, required=alphabet_default is None, default=alphabet_default,
                       help="alphabet size, 3-8")
        p.add_argument("--word-length", type=int, required=word_default is None, default=word_default)

    p = sub.add_parser("sax", help="print the SAX word of a series file")
    p.add_argument("--input", required=True)
    sax_flags(p)
    p.set_defaults(func=cmd_sax)

    p = sub.add_parser("signature", help="write the centroid-distance signature of a PBM shape")
    p.add_argument("--input", required=True)
    p.add_argument("--bins", type=int, default=DEFAULT_BINS)
    p.add_argument("--output", default=None, help="series file (default: stdout)")
    p.add_argument("--invert", action="store_true", help="treat PBM 0 pixels as the shape")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("build-sets", help="build per-class rotation word sets")
    p.add_argument("--input", required=True, help="directory with one subdirectory of PBMs per class")
    sax_flags(p)
    p.add_argument("--bins", type=int, default=DEFAULT_BINS)
    p.add_argument("--rotations", type=int, default=0,
                   help="in-plane rotations per image at uniform angles (0 = image only)")
    p.add_argument("--output", default=None, help="word-set file (default: stdout)")
    p.add_argument("--invert", action="store_true")
    p.set_defaults(func=cmd_build_sets)

    p = sub.add_parser("classify", help="classify a PBM shape against word sets")
    p.add_argument("--sets", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--bins", type=int, default=DEFAULT_BINS)
    p.add_argument("--threshold", type=float, default=None,
                   help="print UNKNOWN when the nearest word is farther than this")
    p.add_argument("--invert", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("events", help="list letter transitions of a series' SAX word")
    p.add_argument("--input", required=True)
    sax_flags(p)
    p.set_defaults(func=cmd_events)

    p = sub.add_parser("bench", help="time a pipeline operation on synthetic input")
    p.add_argument("--op", required=True, help=f"one of {', '.join(OPS)}")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--reps", type=int, default=10)
    p.add_argument("--seed", type=int, default=BenchConfig.seed)
    sax_flags(p, alphabet_default=4, word_default=64)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except SaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
