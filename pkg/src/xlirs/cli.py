"""Command-line entry point: ``xlirs {run,validate,list-experiments}``.

Exit codes: 0 on success, 1 on a configuration error, 2 on a runtime error.
"""

import argparse
import logging
import os
import sys
import time

from . import __version__
from .exceptions import InvalidConfigError
from .harness import EXPERIMENTS, load_configs, run_experiment, write_manifest, write_records

log = logging.getLogger("xlirs")


def _parser():
    parser = argparse.ArgumentParser(prog="xlirs", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the experiments described by a JSON config")
    run.add_argument("config")
    run.add_argument("--out", default="out", help="output directory (default: %(default)s)")
    run.add_argument("-v", "--verbose", action="store_true")

    validate = sub.add_parser("validate", help="check a JSON config without running it")
    validate.add_argument("config")

    sub.add_parser("list-experiments", help="print the available experiment names")
    return parser


def _load(path):
    try:
        return load_configs(path)
    except InvalidConfigError as exc:
        print(f"{path}: invalid config: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"{path}: cannot read config: {exc.strerror}", file=sys.stderr)
    return None


def main(argv=None):
    args = _parser().parse_args(argv)

    if args.command == "list-experiments":
        for name in EXPERIMENTS:
            print(name)
        return 0

    configs = _load(args.config)
    if configs is None:
        return 1
    if args.command == "validate":
        print(f"{args.config}: ok ({', '.join(c.experiment for c in configs)})")
        return 0

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s: %(message)s")
    start = time.perf_counter()
    try:
        records = []
        for cfg in configs:
            log.info("running %s", cfg.experiment)
            records.extend(run_experiment(cfg))
        os.makedirs(args.out, exist_ok=True)
        write_records(records, os.path.join(args.out, "records.csv"))
        write_manifest(os.path.join(args.out, "manifest.json"), configs, __version__,
                       time.perf_counter() - start)
    except Exception as exc:  # noqa: BLE001 - every runtime failure maps to exit code 2
        print(f"{args.config}: run failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
