"""`chromaseg` command dispatcher."""

from __future__ import annotations

import argparse
import sys

from src.harness import run_bench, run_gen_scene
from src.pipeline import run_segment

COMMANDS = {
    "segment": run_segment.main,
    "gen-scene": run_gen_scene.main,
    "bench": run_bench.main,
}


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(prog="chromaseg", description="Color object detection, segmentation and measurement")
    p.add_argument("command", choices=sorted(COMMANDS))
    argv = sys.argv[1:] if argv is None else list(argv)
    # only the command word is parsed here; the rest belongs to the subcommand
    ns = p.parse_args(argv[:1])
    return COMMANDS[ns.command](argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
