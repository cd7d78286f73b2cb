"""Regenerate tests/data/snowball_english.tsv (word<TAB>expected_stem).

The word list is the Snowball English test vocabulary (voc.txt, 29417 words)
as shipped in the pinned PyStemmer 3.1.0 sdist. Expected stems come from the
reference Python code generated by the Snowball compiler, pinned to
snowballstemmer 2.2.0 (the classic Porter 2 English algorithm; 3.x revised
a few rules). Needs ``pip install snowballstemmer==2.2.0`` in the running
environment; semtok itself never imports it.
"""

import argparse
import hashlib
import io
import tarfile
import urllib.request
from pathlib import Path

VOC_URL = (
    "https://files.pythonhosted.org/packages/78/95/"
    "bb893462b08db211b248f6b1aaa0dc07d068dc86f180178bc9072fef86bb/pystemmer-3.1.0.tar.gz"
)
VOC_SHA256 = "083cc3ed90f4c3b0668f8e31c2925cbb4db3bf0fd6d710e0ad0914f33685f7df"
VOC_MEMBER = "pystemmer-3.1.0/tests/en_voc.txt"
REFERENCE_VERSION = "2.2.0"


def main() -> None:
    from importlib.metadata import version

    import snowballstemmer

    if version("snowballstemmer") != REFERENCE_VERSION:
        raise SystemExit(f"need snowballstemmer=={REFERENCE_VERSION}, found {version('snowballstemmer')}")

    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path,
                        default=Path(__file__).resolve().parent.parent / "tests" / "data" / "snowball_english.tsv")
    args = parser.parse_args()

    with urllib.request.urlopen(VOC_URL, timeout=120) as resp:
        blob = resp.read()
    if hashlib.sha256(blob).hexdigest() != VOC_SHA256:
        raise SystemExit("PyStemmer sdist sha256 mismatch")
    with tarfile.open(fileobj=io.BytesIO(blob), mode="r:gz") as tar:
        words = tar.extractfile(VOC_MEMBER).read().decode("utf-8").split()

    ref = snowballstemmer.stemmer("english")
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        for word in words:
            fh.write(f"{word}\t{ref.stemWord(word)}\n")
    print(f"wrote {len(words)} pairs to {args.out}")


if __name__ == "__main__":
    main()
