#!/usr/bin/env python3
# (C) Copyright 2026 piiguard contributors
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#
# Exports a pull request into the JSON document `piiguard triage-pr` consumes:
#   {"pr_id": ..., "files": [{"path": ..., "content": ...}], "source_meta": [...]}
#
# Talks to any GitHub-compatible REST API. Reads GITHUB_TOKEN from the
# environment when present; unauthenticated requests work for public repos
# within the usual rate limits. Tests never call this script.

import argparse
import base64
import json
import os
import sys
import urllib.request

API_VERSION = "2022-11-28"


def api_get(base: str, path: str, token: str | None):
    req = urllib.request.Request(
        f"{base}{path}",
        headers={
            "Accept": "application/vnd.github+json",
            "X-GitHub-Api-Version": API_VERSION,
            "User-Agent": "piiguard-export/1.0",
            **({"Authorization": f"Bearer {token}"} if token else {}),
        },
    )
    with urllib.request.urlopen(req, timeout=30) as resp:
        return json.loads(resp.read().decode("utf-8"))


def list_pr_files(base: str, repo: str, number: int, token: str | None):
    files, page = [], 1
    while True:
        batch = api_get(
            base, f"/repos/{repo}/pulls/{number}/files?per_page=100&page={page}", token
        )
        files.extend(batch)
        if len(batch) < 100:
            return files
        page += 1


def blob_text(base: str, repo: str, sha: str, token: str | None) -> str | None:
    blob = api_get(base, f"/repos/{repo}/git/blobs/{sha}", token)
    if blob.get("encoding") != "base64":
        return None
    raw = base64.b64decode(blob.get("content", ""))
    if b"\x00" in raw[:8192]:
        return None  # binary; the scanner would skip it anyway
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError:
        return None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("repo", help="owner/name")
    ap.add_argument("number", type=int, help="pull request number")
    ap.add_argument("--api", default="https://api.github.com", help="API base URL")
    ap.add_argument("--output", default="-", help="destination file, - for stdout")
    args = ap.parse_args()

    token = os.environ.get("GITHUB_TOKEN")
    meta = [f"repo:{args.repo}", f"pull:{args.number}"]
    files = []
    for entry in list_pr_files(args.api, args.repo, args.number, token):
        path = entry.get("filename", "")
        if entry.get("status") == "removed":
            meta.append(f"skipped removed: {path}")
            continue
        sha = entry.get("sha")
        content = blob_text(args.api, args.repo, sha, token) if sha else None
        if content is None:
            meta.append(f"skipped binary: {path}")
            continue
        files.append({"path": path, "content": content})

    doc = {
        "pr_id": f"{args.repo.replace('/', '-')}-{args.number}",
        "files": sorted(files, key=lambda f: f["path"]),
        "source_meta": meta,
    }
    payload = json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    if args.output == "-":
        sys.stdout.write(payload)
    else:
        with open(args.output, "w", encoding="utf-8") as out:
            out.write(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
