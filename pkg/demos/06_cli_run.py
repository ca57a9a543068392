"""Driving the experiment harness from a JSON config.

Equivalent shell usage::

    xlirs validate config.json
    xlirs run config.json --out results
"""

import csv
import json
import pathlib
import tempfile

from xlirs.cli import main

config = {
    "experiment": "SnrVsBsIrsDistance",
    "sweep": [1, 5, 10, 20, 30],
    "physical": {"tx_power_dbm": 40, "noise_power_dbm": -94},
    "seed": 0,
}

with tempfile.TemporaryDirectory() as tmp:
    path = pathlib.Path(tmp) / "config.json"
    path.write_text(json.dumps(config))
    assert main(["validate", str(path)]) == 0
    assert main(["run", str(path), "--out", str(pathlib.Path(tmp) / "out")]) == 0
    rows = list(csv.DictReader(open(pathlib.Path(tmp) / "out" / "records.csv")))

snr = {}
for r in rows:
    snr.setdefault(float(r["sweep_value"]), {})[r["scheme"]] = float(r["value"])
for d, per in sorted(snr.items()):
    print(f"D = {d:4.0f} m  " + "  ".join(f"{s} {v:6.2f} dB" for s, v in sorted(per.items()))
          + f"  AO gain {per['Ao'] - per['Angle']:.2f} dB")
