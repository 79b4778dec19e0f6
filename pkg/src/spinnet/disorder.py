"""Monte-Carlo robustness of state transfer under coupling errors.

Two static error models on cross-polytope networks: couplings drawn
uniformly from [1-delta, 1+delta], and a fixed fraction of bonds removed
at random. Per-trial seeds derive from a counter-based split of the
master seed, so trials are independent streams and results are bitwise
reproducible for any execution order or thread count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .dynamics import default_steps, hamiltonian, max_fidelity, spectral_decompose
from .graphs import break_bonds, cross_polytope, perturb_couplings
from .parallel import thread_map

__all__ = [
    "DisorderConfig",
    "TrialPeak",
    "DisorderStats",
    "derive_seed",
    "run_trials",
    "sweep_delta",
    "sweep_broken",
    "trials_csv",
    "summary_dict",
    "summary_json",
]

_COUPLING_STREAM = 0
_BOND_STREAM = 1


@dataclass(frozen=True)
class DisorderConfig:
    """Parameters of one Monte-Carlo experiment."""

    n: int
    delta: float = 0.0
    broken: float = 0.0
    trials: int = 100
    master_seed: int = 42
    t_max: float = 10.0
    steps: int | None = None
    source: int = 1

    def __post_init__(self) -> None:
        if self.n % 2 != 0 or self.n < 4:
            raise ValueError(f"network size must be even and >= 4, got {self.n}")
        if not 0.0 <= self.delta <= 1.0:
            raise ValueError(f"delta must be in [0,1], got {self.delta}")
        if not 0.0 <= self.broken < 1.0:
            raise ValueError(f"broken ratio must be in [0,1), got {self.broken}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.t_max <= 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if self.steps is not None and self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if not 1 <= self.source <= self.n:
            raise ValueError(f"source vertex {self.source} out of range 1..{self.n}")


@dataclass(frozen=True)
class TrialPeak:
    trial: int
    t_peak: float
    f_peak: float


@dataclass(frozen=True)
class DisorderStats:
    """Per-trial peak fidelities with their summary statistics."""

    per_trial: tuple[TrialPeak, ...]
    mean: float
    std: float
    min: float
    max: float
    failures: int = 0


def derive_seed(master_seed: int, trial: int, stream: int) -> int:
    """Counter-based per-trial seed; independent streams per error type."""
    entropy = (master_seed & 0xFFFFFFFFFFFFFFFF, trial, stream)
    return int(np.random.SeedSequence(entropy).generate_state(1, np.uint64)[0])


def _run_one(cfg: DisorderConfig, trial: int) -> TrialPeak:
    g = cross_polytope(cfg.n)
    g = perturb_couplings(g, cfg.delta, derive_seed(cfg.master_seed, trial, _COUPLING_STREAM))
    g = break_bonds(g, cfg.broken, derive_seed(cfg.master_seed, trial, _BOND_STREAM))
    spectrum = spectral_decompose(hamiltonian(g))
    t_peak, f_peak = max_fidelity(spectrum, cfg.t_max, cfg.steps, cfg.source)
    return TrialPeak(trial, t_peak, f_peak)


def run_trials(cfg: DisorderConfig, threads: int | None = None) -> DisorderStats:
    """Run all trials and aggregate peak-fidelity statistics.

    Trials that hit eigensolver non-convergence are excluded and counted
    in ``failures``. Output is independent of the thread count.
    """

    def worker(trial: int) -> TrialPeak | None:
        try:
            return _run_one(cfg, trial)
        except np.linalg.LinAlgError:
            return None

    results = thread_map(worker, range(cfg.trials), threads)
    peaks = tuple(r for r in results if r is not None)
    failures = cfg.trials - len(peaks)
    if not peaks:
        raise np.linalg.LinAlgError("all Monte-Carlo trials failed to diagonalize")
    f = np.array([p.f_peak for p in peaks])
    return DisorderStats(
        per_trial=peaks,
        mean=float(np.mean(f)),
        std=float(np.std(f)),
        min=float(np.min(f)),
        max=float(np.max(f)),
        failures=failures,
    )


def sweep_delta(
    cfg: DisorderConfig, deltas: Sequence[float], threads: int | None = None
) -> list[tuple[float, DisorderStats]]:
    """run_trials for each disorder amplitude, other parameters fixed."""
    return [(d, run_trials(replace(cfg, delta=d), threads)) for d in deltas]


def sweep_broken(
    cfg: DisorderConfig, ratios: Sequence[float], threads: int | None = None
) -> list[tuple[float, DisorderStats]]:
    """run_trials for each broken-bond ratio, other parameters fixed."""
    return [(b, run_trials(replace(cfg, broken=b), threads)) for b in ratios]


def trials_csv(stats: DisorderStats) -> str:
    """CSV export with columns ``trial,t_peak,f_peak``."""
    lines = ["trial,t_peak,f_peak"]
    for p in stats.per_trial:
        lines.append(f"{p.trial},{p.t_peak:.15g},{p.f_peak:.15g}")
    return "\n".join(lines) + "\n"


def summary_dict(cfg: DisorderConfig, stats: DisorderStats) -> dict:
    """JSON-ready summary of one experiment."""
    return {
        "n": cfg.n,
        "delta": cfg.delta,
        "broken": cfg.broken,
        "trials": cfg.trials,
        "seed": cfg.master_seed,
        "mean": stats.mean,
        "std": stats.std,
        "min": stats.min,
        "max": stats.max,
    }


def summary_json(cfg: DisorderConfig, stats: DisorderStats) -> str:
    return json.dumps(summary_dict(cfg, stats), indent=2, sort_keys=True)
