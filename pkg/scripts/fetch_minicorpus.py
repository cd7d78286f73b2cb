"""Rebuild data/minicorpus.txt.gz from pinned public-domain sources on PyPI.

Sources (all public-domain texts redistributed inside PyPI sdists):

* ``shakespeare==0.6`` -- Project Gutenberg modern-spelling plays and poems
* ``shakespeare==0.6`` -- Milton's major works (Gutenberg editions)
* ``freebible==0.1a8`` -- World English Bible verse table

Each archive is verified against a pinned sha256 before extraction. The
output has one document per line (blank lines dropped) and is written with a
zero gzip mtime so that reruns are byte-identical.

    python scripts/fetch_minicorpus.py [--out data/minicorpus.txt.gz]
"""

import argparse
import csv
import gzip
import hashlib
import io
import re
import tarfile
import urllib.request
from pathlib import Path

SOURCES = {
    "shakespeare": (
        "https://files.pythonhosted.org/packages/a4/45/"
        "699c3869c2590579d0ef89df3cbd28b17eb77a14dd9f1841c51cd7d4dc1c/shakespeare-0.6.tar.gz",
        "f393d09d07ea4d0e19957838046b3601ad09e0a5bd1c5ad0454240eacff393be",
    ),
    "freebible": (
        "https://files.pythonhosted.org/packages/ad/d8/"
        "ccd2a402e11b6be5cf3dc668db76ab40232d50bc318993dfffc55f0a2de2/freebible-0.1a8.tar.gz",
        "93c0ce7c5614d6a33c2106fcf57580d74034ec3fd3c6a18dd1a2b701a0257c57",
    ),
}

MILTON = [
    "paradise_lost_(no_introduction)_gut.txt",
    "paradise_regained_gut.txt",
    "comus_gut.txt",
    "areopagitica_gut.txt",
    "poemata_gut.txt",
]

FOOTNOTE = re.compile(r"\{[^}]*\}")


def fetch(name: str) -> tarfile.TarFile:
    url, digest = SOURCES[name]
    with urllib.request.urlopen(url, timeout=120) as resp:
        blob = resp.read()
    got = hashlib.sha256(blob).hexdigest()
    if got != digest:
        raise SystemExit(f"{name}: sha256 mismatch ({got} != {digest})")
    return tarfile.open(fileobj=io.BytesIO(blob), mode="r:gz")


def shakespeare_lines(tar: tarfile.TarFile):
    members = sorted(tar.getmembers(), key=lambda m: m.name)
    plays = [m for m in members if m.name.startswith("shakespeare-0.6/shksprdata/texts/")
             and m.name.endswith("_gut.txt")]
    milton = {m.name.rsplit("/", 1)[-1]: m for m in members
              if m.name.startswith("shakespeare-0.6/miltondata/texts/")}
    for member in plays + [milton[n] for n in MILTON]:
        text = tar.extractfile(member).read().decode("utf-8", errors="strict")
        yield from text.splitlines()


def bible_lines(tar: tarfile.TarFile):
    member = tar.getmember("freebible-0.1a8/freebible/data/web/t_web.csv.gz")
    raw = gzip.decompress(tar.extractfile(member).read()).decode("utf-8")
    rows = csv.reader(io.StringIO(raw))
    next(rows)  # header
    for row in rows:
        yield FOOTNOTE.sub("", row[4])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path,
                        default=Path(__file__).resolve().parent.parent / "data" / "minicorpus.txt.gz")
    args = parser.parse_args()

    lines = []
    lines.extend(shakespeare_lines(fetch("shakespeare")))
    lines.extend(bible_lines(fetch("freebible")))
    docs = [" ".join(line.split()) for line in lines]
    docs = [d for d in docs if d]

    payload = ("\n".join(docs) + "\n").encode("utf-8")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "wb") as fh:
        with gzip.GzipFile(filename="", mode="wb", fileobj=fh, mtime=0, compresslevel=9) as gz:
            gz.write(payload)
    print(f"wrote {args.out}: {len(docs)} documents, {len(payload)} bytes,"
          f" sha256={hashlib.sha256(payload).hexdigest()}")


if __name__ == "__main__":
    main()
