"""Thin CLI: ``present-bridge synth schedule.json out.wav``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import BridgeError
from .schedule_io import load_schedule
from .synthesize import synthesize, write_wav
from .toy import TinyDpeModel


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="present-bridge",
        description="Apply a present/1 prosody schedule to an "
                    "explicit-DPE TTS model at inference time.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("synth", help="synthesize a schedule file to WAV")
    p.add_argument("schedule", help="path to a present/1 schedule JSON file")
    p.add_argument("output", help="output WAV path")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the bundled stand-in model")
    p.set_defaults(func=cmd_synth)
    return parser


def cmd_synth(args) -> int:
    schedule = load_schedule(Path(args.schedule).read_bytes())
    model = TinyDpeModel(seed=args.seed)
    waveform = synthesize(schedule, model)
    write_wav(args.output, waveform, model.sample_rate)
    print(f"wrote {args.output}: {len(waveform)} samples "
          f"at {model.sample_rate} Hz")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BridgeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
