#!/usr/bin/env python3
# (C) Copyright 2026 piiguard contributors
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# Refreshes the gazetteer lexicons in data/gazetteer/ from public name and
# place lists. Network access happens only here; the engine itself ships the
# checked-in snapshots, and the tests never call this script.
#
# The manifest maps output files to source URLs:
#
#   {
#     "first_names_en.txt": {
#       "url": "https://example.org/names/en.txt",
#       "format": "plain",          # plain | csv | tsv
#       "column": 0,                 # for csv/tsv
#       "min_length": 2
#     },
#     ...
#   }
#
# Entries are lowercased, NFC-normalized, deduplicated, and sorted so that
# diffs against the previous snapshot stay reviewable.

import argparse
import csv
import io
import json
import sys
import unicodedata
import urllib.request
from pathlib import Path

HEADER = (
    "# Generated by tools/scripts/fetch_gazetteer.py; one entry per line.\n"
    "# Matching is case-insensitive on NFC-normalized text.\n"
)


def fetch(url: str, timeout: float) -> str:
    req = urllib.request.Request(url, headers={"User-Agent": "piiguard-fetch/1.0"})
    with urllib.request.urlopen(req, timeout=timeout) as resp:
        charset = resp.headers.get_content_charset() or "utf-8"
        return resp.read().decode(charset, errors="replace")


def extract(raw: str, spec: dict) -> list[str]:
    fmt = spec.get("format", "plain")
    column = int(spec.get("column", 0))
    if fmt == "plain":
        return raw.splitlines()
    delimiter = "," if fmt == "csv" else "\t"
    rows = csv.reader(io.StringIO(raw), delimiter=delimiter)
    return [row[column] for row in rows if len(row) > column]


def normalize(entries: list[str], min_length: int) -> list[str]:
    seen = set()
    for entry in entries:
        entry = unicodedata.normalize("NFC", entry).strip().lower()
        if len(entry) < min_length or entry.startswith("#"):
            continue
        # Lexicon lines are single tokens or short phrases; anything with a
        # digit is a scrape artifact, not a name.
        if any(c.isdigit() for c in entry):
            continue
        seen.add(entry)
    return sorted(seen)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("manifest", type=Path, help="JSON manifest of sources")
    ap.add_argument(
        "--out-dir",
        type=Path,
        default=Path(__file__).resolve().parents[2] / "data" / "gazetteer",
    )
    ap.add_argument("--timeout", type=float, default=30.0)
    ap.add_argument(
        "--dry-run", action="store_true", help="report counts, write nothing"
    )
    args = ap.parse_args()

    manifest = json.loads(args.manifest.read_text(encoding="utf-8"))
    if not isinstance(manifest, dict):
        print("manifest must be a JSON object", file=sys.stderr)
        return 2

    args.out_dir.mkdir(parents=True, exist_ok=True)
    failures = 0
    for filename, spec in sorted(manifest.items()):
        try:
            raw = fetch(spec["url"], args.timeout)
        except Exception as e:  # noqa: BLE001 - report and continue
            print(f"{filename}: fetch failed: {e}", file=sys.stderr)
            failures += 1
            continue
        entries = normalize(extract(raw, spec), int(spec.get("min_length", 2)))
        if not entries:
            print(f"{filename}: source produced no entries", file=sys.stderr)
            failures += 1
            continue
        print(f"{filename}: {len(entries)} entries")
        if not args.dry_run:
            out = args.out_dir / filename
            out.write_text(HEADER + "\n".join(entries) + "\n", encoding="utf-8")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
