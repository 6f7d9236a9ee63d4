#!/usr/bin/env python3
"""Regenerate the committed golden fixtures from the live pipeline.

Run only when an intentional pipeline change moves a golden; the test
suite byte-compares against these files.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT / "src"))

from prosched import cli, mandarin, rules, schedule


def main() -> int:
    with open(cli.data_path("rules_cmn.rules"), "rb") as fh:
        cmn = rules.load_rules(fh, "cmn")
    plan = mandarin.compile_pinyin("tian2", cmn)
    sched = schedule.from_annotated(plan, "cmn", "tian2")
    target = ROOT / "tests" / "fixtures" / "tian2_schedule.json"
    target.write_bytes(schedule.serialize(sched))
    print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
