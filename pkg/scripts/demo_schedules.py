#!/usr/bin/env python3
"""Compile a demo batch of schedules (all input modes) into ./out/.

Writes one schedule JSON plus an SVG contour per demo line, and a WAV per
schedule when the bridge package is installed.

Usage: python scripts/demo_schedules.py [outdir]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from prosched import cli, mandarin, markup, plotting, rules, schedule
from prosched.lexicon import load_lexicon, load_mappings

DEMOS = [
    ("effects", "en", "A looooong time"),
    ("effects", "en", "What was that?"),
    ("effects", "en", "s^_uuuuure!"),
    ("transfer", "de", "ˈliːbə ʃøːn"),
    ("transfer", "es", "o.ˈi apa"),
    ("transfer", "hu", "kːuˈɟ"),
    ("mandarin", "cmn", "tian2"),
    ("mandarin", "cmn", "ni3hao3 ma5"),
    ("mandarin", "cmn", "zhi1 chi1 ai4"),
]


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
    outdir.mkdir(parents=True, exist_ok=True)

    with open(cli.data_path("lexicon_en.dict"), "rb") as fh:
        lex = load_lexicon(fh)
    with open(cli.data_path("mappings_en.tsv"), "rb") as fh:
        maps = load_mappings(fh)
    rule_sets = {}
    for lang in ("de", "hu", "es", "cmn"):
        with open(cli.data_path(f"rules_{lang}.rules"), "rb") as fh:
            rule_sets[lang] = rules.load_rules(fh, lang)

    try:
        from present_bridge.synthesize import synthesize, write_wav
        from present_bridge.toy import TinyDpeModel
        from present_bridge.schedule_io import load_schedule
        model = TinyDpeModel()
    except ImportError:
        model = None

    for i, (mode, lang, text) in enumerate(DEMOS):
        if mode == "effects":
            clean, effects = markup.parse_markup(text, lex)
            sched = schedule.build_english(clean, effects, lex, maps)
        elif mode == "transfer":
            phones = rules.convert_ipa(text, rule_sets[lang])
            sched = schedule.from_annotated(phones, lang, text)
        else:
            plan = mandarin.compile_pinyin(text, rule_sets["cmn"])
            sched = schedule.from_annotated(plan, "cmn", text)
        stem = outdir / f"{i:02d}_{mode}_{lang}"
        blob = schedule.serialize(sched)
        stem.with_suffix(".json").write_bytes(blob)
        stem.with_suffix(".svg").write_text(plotting.render_svg(sched))
        if model is not None:
            wav = synthesize(load_schedule(blob), model)
            write_wav(stem.with_suffix(".wav"), wav, model.sample_rate)
        print(f"{stem.name}: {len(sched.entries)} entries, "
              f"{sum(e.repeat for e in sched.entries)} subphonemes")
    return 0


if __name__ == "__main__":
    sys.exit(main())
