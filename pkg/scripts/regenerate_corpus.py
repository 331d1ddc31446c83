"""Rewrite data/golden_corpus.jsonl from the current build.

This replaces the regression baseline; review the diff before committing.
"""

import argparse
from pathlib import Path

from multirigid.corpus import corpus_text

DEFAULT = Path(__file__).resolve().parent.parent / "data" / "golden_corpus.jsonl"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=DEFAULT)
    args = ap.parse_args()
    text = corpus_text()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_bytes(text.encode("ascii"))
    print(f"wrote {len(text.splitlines())} records to {args.out}")


if __name__ == "__main__":
    main()
