"""Experiment orchestration: configs, the six experiments, CSV output."""

from .config import EXPERIMENTS, ExperimentConfig, config_from_dict, configs_from_dict, load_configs
from .experiments import (
    Record,
    ao_iteration_seconds,
    run_beam_pattern,
    run_convergence_experiment,
    run_experiment,
    run_power_distribution,
    run_snr_vs_bsirs_distance,
    run_training_experiments,
)
from .records import CSV_HEADER, records_to_csv, sorted_records, write_manifest, write_records
