"""Command-line front end for the prosody schedule compiler.

Subcommands: effects (annotated English text), transfer (IPA for de/hu/es),
mandarin (toned pinyin), align (grapheme-phoneme alignment debug), lint
(dictionary check), plot (render a schedule file).

Exit codes: 0 success, 1 domain error (error name on stderr, no traceback),
2 usage error.  Default data files resolve from $PROSCHED_DATA, falling
back to the packaged data directory.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import aligner, lexicon, mandarin, markup, plotting, rules, schedule
from .errors import PipelineError

DATA_ENV = "PROSCHED_DATA"


def data_path(name: str, override: str | None = None) -> Path:
    if override:
        return Path(override)
    root = os.environ.get(DATA_ENV)
    if root:
        return Path(root) / name
    return Path(__file__).parent / "data" / name


def _read_input(parser: argparse.ArgumentParser, text: str | None) -> str:
    if text is None or text == "":
        parser.error("empty input text")
    if text == "-":
        data = sys.stdin.read()
        if not data.strip():
            parser.error("empty input on stdin")
        return data
    candidate = Path(text)
    try:
        if candidate.is_file():
            return candidate.read_text(encoding="utf-8")
    except OSError:
        pass
    return text


def _write_output(data: bytes | str, out: str | None) -> None:
    blob = data.encode("utf-8") if isinstance(data, str) else data
    if out and out != "-":
        Path(out).write_bytes(blob)
    else:
        sys.stdout.buffer.write(blob)
        sys.stdout.buffer.flush()


def _load_lexicon(args) -> lexicon.Lexicon:
    with open(data_path("lexicon_en.dict", args.lexicon), "rb") as fh:
        return lexicon.load_lexicon(fh)


def _load_mappings(args):
    with open(data_path("mappings_en.tsv", args.mappings), "rb") as fh:
        return lexicon.load_mappings(fh)


def _load_rules(language: str, override: str | None) -> rules.RuleSet:
    with open(data_path(f"rules_{language}.rules", override), "rb") as fh:
        return rules.load_rules(fh, language)


def _load_acronyms(args) -> frozenset[str]:
    path = data_path("acronyms_en.txt", args.acronyms)
    if not path.is_file():
        return frozenset()
    words = [line.strip().upper() for line in path.read_text(encoding="utf-8").splitlines()]
    return frozenset(w for w in words if w and not w.startswith("#"))


def _policy(args) -> schedule.EffectPolicy:
    policy = schedule.EffectPolicy()
    if getattr(args, "policy_file", None):
        policy = schedule.EffectPolicy.from_file(
            Path(args.policy_file).read_text(encoding="utf-8"), base=policy)
    for item in getattr(args, "policy", None) or []:
        policy = schedule.EffectPolicy.from_file(item, base=policy)
    return policy


def cmd_effects(parser, args) -> int:
    raw = _read_input(parser, args.text)
    lex = _load_lexicon(args)
    maps = _load_mappings(args)
    clean, effects = markup.parse_markup(raw, lex, _load_acronyms(args))
    sched = schedule.build_english(clean, effects, lex, maps, _policy(args))
    _write_output(schedule.serialize(sched), args.output)
    return 0


def cmd_transfer(parser, args) -> int:
    text = _read_input(parser, args.text)
    rule_set = _load_rules(args.language, args.rules)
    phones = rules.convert_ipa(text.strip(), rule_set)
    sched = schedule.from_annotated(phones, args.language, text.strip())
    _write_output(schedule.serialize(sched), args.output)
    return 0


def cmd_mandarin(parser, args) -> int:
    text = args.pinyin if args.pinyin else _read_input(parser, args.text)
    if not text or not text.strip():
        parser.error("empty input text")
    rule_set = _load_rules("cmn", args.rules)
    config = mandarin.MandarinConfig(
        subdivisions=args.subdivisions,
        max_pitch_jump=args.max_jump,
        word_pause_duration=args.word_pause,
        insert_word_pauses=not args.no_word_pauses)
    plan = mandarin.compile_pinyin(text.strip(), rule_set, config)
    sched = schedule.from_annotated(plan, "cmn", text.strip())
    _write_output(schedule.serialize(sched), args.output)
    return 0


def cmd_align(parser, args) -> int:
    maps = _load_mappings(args)
    phones = tuple(args.phones.split())
    result = aligner.align(args.word.lower(), phones, maps)
    print(str(result))
    print(f"cost {result.cost}")
    return 0


def cmd_lint(parser, args) -> int:
    lex = _load_lexicon(args)
    maps = _load_mappings(args)
    report = lexicon.lint_dictionary(lex, maps)
    for word, pron, alignment, cost in report[: args.limit]:
        print(f"{word}\t{' '.join(pron)}\tcost {cost}\t{alignment}")
    if not report:
        print("no suspicious entries")
    return 0


def cmd_plot(parser, args) -> int:
    sched = schedule.deserialize(Path(args.schedule).read_bytes())
    if args.format == "svg":
        _write_output(plotting.render_svg(sched), args.output)
    else:
        _write_output(plotting.render_ascii(sched), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prosched",
        description="Compile annotated text, IPA, or toned pinyin into "
                    "duration/pitch/energy schedules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("effects", help="annotated English text to schedule")
    p.add_argument("text", help="inline text, a file path, or - for stdin")
    p.add_argument("--lexicon")
    p.add_argument("--mappings")
    p.add_argument("--acronyms")
    p.add_argument("--policy-file")
    p.add_argument("--policy", action="append", metavar="KEY=VALUE")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_effects)

    p = sub.add_parser("transfer", help="IPA text to schedule")
    p.add_argument("--language", required=True, choices=["de", "hu", "es"])
    p.add_argument("text", help="inline IPA, a file path, or - for stdin")
    p.add_argument("--rules")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("mandarin", help="toned pinyin to schedule")
    p.add_argument("text", nargs="?", help="inline pinyin, a file path, or - for stdin")
    p.add_argument("--pinyin", help="inline pinyin (same as the positional)")
    p.add_argument("--rules")
    p.add_argument("--subdivisions", type=int, default=3)
    p.add_argument("--max-jump", type=float, default=2.0)
    p.add_argument("--word-pause", type=float, default=0.3)
    p.add_argument("--no-word-pauses", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mandarin)

    p = sub.add_parser("align", help="print a grapheme-phoneme alignment")
    p.add_argument("--word", required=True)
    p.add_argument("--phones", required=True, help='space separated, e.g. "W EH R"')
    p.add_argument("--mappings")
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("lint", help="report suspicious dictionary entries")
    p.add_argument("--lexicon")
    p.add_argument("--mappings")
    p.add_argument("--limit", type=int, default=50)
    p.set_defaults(func=cmd_lint)

    p = sub.add_parser("plot", help="render a schedule's pitch contour")
    p.add_argument("schedule", help="path to a schedule JSON file")
    p.add_argument("--format", choices=["svg", "ascii"], default="svg")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except PipelineError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
