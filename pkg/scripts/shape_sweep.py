"""Held-out rotation accuracy of nearest-word shape classification over (a, w).

Training sets hold one word per 10-degree rotation of a disk, an octagon and
a triangle.  Test shapes are rotated by 5 + 12k degrees, which never falls on
the training grid.  Also reported: how many words were dropped because two
classes produced them.
"""
import argparse
import math
from dataclasses import dataclass

from saxshape import SaxConfig, build_word_sets, classify_image, rotate_image, rotation_variants, shapes
from saxshape.errors import DegenerateClassError


@dataclass
class SweepConfig:
    alphabets: tuple = (3, 4, 5, 6, 8)
    word_lengths: tuple = (12, 24, 36, 60, 90)
    image_side: int = 256
    radius: float = 100.0
    training_rotations: int = 36
    held_out: int = 30


def base_shapes(cfg: SweepConfig):
    return {
        "circle": shapes.disk(cfg.image_side, cfg.radius),
        "octagon": shapes.octagon(cfg.image_side, cfg.radius),
        "triangle": shapes.triangle(cfg.image_side, cfg.radius),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller grid")
    args = parser.parse_args()
    cfg = SweepConfig(alphabets=(3, 5), word_lengths=(12, 36)) if args.quick else SweepConfig()

    base = base_shapes(cfg)
    training = {k: rotation_variants(img, cfg.training_rotations) for k, img in base.items()}
    angles = [math.radians(5 + 12 * k) for k in range(cfg.held_out)]
    tests = {k: [rotate_image(img, a) for a in angles] for k, img in base.items()}

    print("a\tw\taccuracy\tconflicts\tstored_words")
    for a in cfg.alphabets:
        for w in cfg.word_lengths:
            config = SaxConfig(a, w)
            labeled = [(k, v) for k, vs in training.items() for v in vs]
            try:
                db = build_word_sets(labeled, config)
            except DegenerateClassError as err:
                print(f"{a}\t{w}\t-\t{len(err.conflicts)}\tclass {err.label!r} emptied")
                continue
            hits = sum(classify_image(img, db).label == k for k, imgs in tests.items() for img in imgs)
            total = sum(len(v) for v in tests.values())
            print(f"{a}\t{w}\t{hits / total:.3f}\t{len(db.conflicts)}\t{len(db)}")


if __name__ == "__main__":
    main()
