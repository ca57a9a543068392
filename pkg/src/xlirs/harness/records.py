"""CSV and manifest output."""

import csv
import io
import json
import math

__all__ = ["CSV_HEADER", "sorted_records", "records_to_csv", "write_records", "write_manifest"]

CSV_HEADER = ("experiment", "scheme", "sweep_var", "sweep_value", "metric", "value",
              "trials", "seed")


def _fmt(value):
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _value_key(value):
    # Numbers sort numerically ahead of labels, labels lexically.
    if isinstance(value, (int, float)):
        return (0, float(value), "")
    return (1, 0.0, str(value))


def sorted_records(records):
    """Canonical order: experiment, scheme, sweep value; stable within ties."""
    keyed = sorted(enumerate(records),
                   key=lambda p: (p[1].experiment, p[1].scheme, _value_key(p[1].sweep_value), p[0]))
    return [r for _, r in keyed]


def records_to_csv(records):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in sorted_records(records):
        if not math.isfinite(r.value):
            raise ValueError(f"non-finite value for {r.experiment}/{r.scheme}/{r.metric}")
        writer.writerow([r.experiment, r.scheme, r.sweep_var, _fmt(r.sweep_value), r.metric,
                         _fmt(r.value), r.trials, r.seed])
    return buf.getvalue()


def write_records(records, path):
    text = records_to_csv(records)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def write_manifest(path, configs, version, wall_time):
    manifest = {
        "version": version,
        "seed": sorted({c.seed for c in configs}),
        "wall_time_s": wall_time,
        "experiments": [c.experiment for c in configs],
        "config": [c.to_dict() for c in configs],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
