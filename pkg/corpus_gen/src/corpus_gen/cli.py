"""Command line entry points: generate a corpus, self-check one."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .build import generate_corpus
from .selfcheck import CheckError, check_fixture
from .spec import SpecError, ToolchainMissing, load_corpus


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corpus-gen",
        description="Synthesize SVG chart fixtures with ground-truth sidecars")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="render a corpus description")
    gen.add_argument("--corpus", default="corpus.yaml",
                     help="corpus YAML file (default: corpus.yaml)")
    gen.add_argument("--out", default="fixtures",
                     help="output root (default: fixtures)")
    gen.add_argument("--only", default=None,
                     help="generate a single fixture or scenario by name")

    chk = sub.add_parser("check", help="self-check generated fixtures")
    chk.add_argument("--dir", default="fixtures",
                     help="fixture root to scan (default: fixtures)")
    return parser


def _iter_fixture_svgs(root: Path):
    for sidecar in sorted(root.rglob("sidecar.json")):
        yield sidecar.with_name("chart.svg"), sidecar
    for sidecar in sorted(root.rglob("*.sidecar.json")):
        stem = sidecar.name[:-len(".sidecar.json")]
        yield sidecar.with_name(stem + ".svg"), sidecar


def cmd_generate(args) -> int:
    corpus = load_corpus(args.corpus)
    written = generate_corpus(corpus, args.out, only=args.only)
    if not written:
        print("nothing matched %r" % args.only, file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


def cmd_check(args) -> int:
    root = Path(args.dir)
    failures = 0
    seen = 0
    for svg_path, sidecar_path in _iter_fixture_svgs(root):
        seen += 1
        try:
            result = check_fixture(svg_path, sidecar_path)
        except CheckError as exc:
            print("%s: FAIL (%s)" % (svg_path, exc))
            failures += 1
            continue
        verdict = "ok" if result.ok else "FAIL"
        print("%s: %s (worst %.4f px)" % (svg_path, verdict, result.worst))
        if not result.ok:
            failures += 1
    if seen == 0:
        print("no fixtures under %s" % root, file=sys.stderr)
        return 1
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "generate":
            return cmd_generate(args)
        return cmd_check(args)
    except (SpecError, ToolchainMissing, FileNotFoundError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
