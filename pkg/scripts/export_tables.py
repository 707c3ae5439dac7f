#!/usr/bin/env python3
"""Export character tables for a list of groups as JSON and CSV files.

Example:
    python3 scripts/export_tables.py --out-dir tables Z3 Z4 Z8 S3 Q8 V4 D4
"""

from __future__ import annotations

import argparse
import json
import pathlib

from bentgroups import character_table, group_from_label, table_to_csv, table_to_json


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("groups", nargs="+", help="group labels, e.g. Z6 S3 Q8")
    parser.add_argument("--out-dir", default="tables", help="output directory")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for label in args.groups:
        table = character_table(group_from_label(label))
        (out_dir / f"{label}.json").write_text(
            json.dumps(table_to_json(table), indent=2) + "\n", encoding="utf-8"
        )
        (out_dir / f"{label}.csv").write_text(table_to_csv(table), encoding="utf-8")
        print(f"wrote {out_dir / label}.{{json,csv}} ({table.n_irreps} characters)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
