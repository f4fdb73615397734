#!/usr/bin/env python3
"""Fetch the UCI benchmark datasets and convert them to csv + schema sidecars.

Canonical sources (UCI Machine Learning Repository):
  zoo           https://archive.ics.uci.edu/dataset/111/zoo
  lymphography  https://archive.ics.uci.edu/dataset/63/lymphography
  nursery       https://archive.ics.uci.edu/dataset/76/nursery
  vote          https://archive.ics.uci.edu/dataset/105/congressional+voting+records

Downloads ARFF copies from a mirror of renatopp/arff-datasets (same data,
machine-readable headers), or reads local .arff files via --arff-dir.
Output goes to datasets/<name>.csv and datasets/<name>.schema, label last.
"""

import argparse
import sys
import urllib.request
from pathlib import Path

DEFAULT_BASE = "https://raw.githubusercontent.com/renatopp/arff-datasets/master"

# name -> (arff file, drop columns, label column, ordinal columns, n, d, classes)
DATASETS = {
    "zoo": {
        "arff": "zoo.arff",
        "path": "classification/zoo.arff",
        "drop": ["animal"],
        "label": "type",
        "ordinal": [],
        "expect": (101, 16, 7),
    },
    "lymphography": {
        "arff": "lymph.arff",
        "path": "classification/lymph.arff",
        "drop": [],
        "label": "class",
        "ordinal": [],
        "expect": (148, 18, 4),
    },
    "nursery": {
        "arff": "nursery.arff",
        "path": "classification/nursery.arff",
        "drop": [],
        "label": "class",
        "ordinal": ["parents", "has_nurs", "form", "children", "housing", "social", "health"],
        "expect": (12960, 8, 5),
    },
    "vote": {
        "arff": "vote.arff",
        "path": "classification/vote.arff",
        "drop": [],
        "label": "Class",
        "ordinal": [],
        "missing_value": "unknown",
        "expect": (435, 16, 2),
    },
}


def unquote(token):
    token = token.strip()
    if len(token) >= 2 and token[0] == token[-1] and token[0] in "'\"":
        token = token[1:-1]
    return token.strip()


def parse_arff(text):
    """Returns (attributes, rows); attributes are (name, declared-values or None)."""
    attributes = []
    rows = []
    in_data = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        low = line.lower()
        if in_data:
            rows.append([unquote(cell) for cell in line.split(",")])
        elif low.startswith("@attribute"):
            rest = line[len("@attribute"):].strip()
            if "{" in rest:
                name, _, tail = rest.partition("{")
                values = [unquote(v) for v in tail.rsplit("}", 1)[0].split(",")]
                attributes.append((unquote(name), values))
            else:
                name = rest.split()[0]
                attributes.append((unquote(name), None))
        elif low.startswith("@data"):
            in_data = True
    return attributes, rows


def convert(name, cfg, text, dest):
    attributes, rows = parse_arff(text)
    names = [a[0] for a in attributes]
    if cfg["label"] not in names:
        raise SystemExit(f"{name}: label column {cfg['label']!r} not in ARFF header")
    keep = [i for i, n in enumerate(names) if n not in cfg["drop"] and n != cfg["label"]]
    label_idx = names.index(cfg["label"])
    missing = cfg.get("missing_value")

    schema_lines = []
    for i in keep:
        attr_name, values = attributes[i]
        if attr_name in cfg["ordinal"]:
            if not values:
                raise SystemExit(f"{name}: ordinal column {attr_name!r} lacks declared values")
            schema_lines.append(f"{attr_name}: ordinal[{', '.join(values)}]")
        elif values and not missing:
            schema_lines.append(f"{attr_name}: nominal[{', '.join(values)}]")
        else:
            schema_lines.append(f"{attr_name}: nominal")  # open set; '?' may add a value
    schema_lines.append(f"{cfg['label']}: label")

    csv_lines = []
    for row in rows:
        if len(row) != len(names):
            raise SystemExit(f"{name}: row width {len(row)} != header width {len(names)}")
        cells = []
        for i in keep:
            cell = row[i]
            if cell == "?":
                if not missing:
                    raise SystemExit(f"{name}: unexpected missing cell in column {names[i]!r}")
                cell = missing
            cells.append(cell)
        cells.append(row[label_idx])
        csv_lines.append(",".join(cells))

    n, d, classes = cfg["expect"]
    got_classes = len({row[label_idx] for row in rows})
    if (len(rows), len(keep), got_classes) != (n, d, classes):
        raise SystemExit(
            f"{name}: expected {n} rows x {d} attrs, {classes} classes; "
            f"got {len(rows)} x {len(keep)}, {got_classes}")

    dest.mkdir(parents=True, exist_ok=True)
    (dest / f"{name}.csv").write_text("\n".join(csv_lines) + "\n")
    (dest / f"{name}.schema").write_text("\n".join(schema_lines) + "\n")
    print(f"{name}: {len(rows)} rows, {len(keep)} attributes, {got_classes} classes -> "
          f"{dest / (name + '.csv')}")


def main():
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("names", nargs="*", default=[], help="subset of datasets (default: all)")
    ap.add_argument("--dest", default=str(Path(__file__).resolve().parent.parent / "datasets"))
    ap.add_argument("--mirror", default=DEFAULT_BASE,
                    help="base URL serving the arff-datasets tree")
    ap.add_argument("--arff-dir", default=None,
                    help="directory with already-downloaded .arff files (skips download)")
    args = ap.parse_args()

    names = args.names or sorted(DATASETS)
    unknown = [n for n in names if n not in DATASETS]
    if unknown:
        raise SystemExit(f"unknown dataset(s): {', '.join(unknown)}; have {', '.join(sorted(DATASETS))}")

    for name in names:
        cfg = DATASETS[name]
        if args.arff_dir:
            text = (Path(args.arff_dir) / cfg["arff"]).read_text()
        else:
            url = f"{args.mirror.rstrip('/')}/{cfg['path']}"
            print(f"{name}: downloading {url}")
            with urllib.request.urlopen(url) as resp:
                text = resp.read().decode("utf-8")
        convert(name, cfg, text, Path(args.dest))


if __name__ == "__main__":
    sys.exit(main())
