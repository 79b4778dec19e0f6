"""Complementary-network transfer analysis.

A network Hamiltonian H and its complement n*P - H (P the uniform
rank-one projector) produce asymptotically equal transfer-amplitude
magnitudes whenever the coupling between the projector subspace and its
complement is small. This module builds complements, computes the
cross-coupling norm, and measures the amplitude discrepancy numerically
as the network grows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .dynamics import (
    Hamiltonian,
    amplitude_series,
    hamiltonian,
    spectral_decompose,
    transfer_amplitude,
)
from .graphs import Graph, complete, opposite, pair_matching, single_edge

__all__ = [
    "BabinetCase",
    "plus_projector",
    "scaled_projector",
    "babinet_complement",
    "coupling_norm",
    "coupling_norm_frobenius",
    "discrepancy",
    "make_case",
    "scaling_study",
    "scaling_csv",
    "FAMILIES",
]


@dataclass(frozen=True)
class BabinetCase:
    """A Hamiltonian, its complement, and their measured disagreement."""

    n: int
    h_n: Hamiltonian
    h_c: Hamiltonian
    coupling_norm: float
    discrepancy: dict[float, float]


def plus_projector(n: int) -> Hamiltonian:
    """Rank-one projector onto the uniform superposition: every entry 1/n."""
    if n < 1:
        raise ValueError(f"projector needs n >= 1, got {n}")
    return Hamiltonian(np.full((n, n), 1.0 / n))


def scaled_projector(n: int) -> np.ndarray:
    """The matrix n*P used as the reference 'free' Hamiltonian."""
    return n * plus_projector(n).matrix


def babinet_complement(h: Hamiltonian) -> Hamiltonian:
    """Complement Hamiltonian n*P - H; an involution."""
    return Hamiltonian(scaled_projector(h.n) - h.matrix)


def _cross_block(h: Hamiltonian) -> np.ndarray:
    p = plus_projector(h.n).matrix
    m = h.matrix
    pm = p @ m
    # P H (1-P) + (1-P) H P = PH + HP - 2 PHP
    return pm + pm.T - 2.0 * (pm @ p)


def coupling_norm(h: Hamiltonian) -> float:
    """Spectral norm of the cross-coupling block P H (1-P) + (1-P) H P.

    The block is symmetric, so the norm is the largest eigenvalue
    magnitude. Vanishes for regular graphs, whose uniform vector is an
    eigenvector.
    """
    x = _cross_block(h)
    return float(np.max(np.abs(np.linalg.eigvalsh(x))))


def coupling_norm_frobenius(h: Hamiltonian) -> float:
    """Frobenius-norm companion of :func:`coupling_norm`, for reference."""
    return float(np.linalg.norm(_cross_block(h)))


def discrepancy(h_n: Hamiltonian, t: float, k: int) -> float:
    """|amplitude| difference between H and its complement at time t.

    Both amplitudes take vertex k to its opposite and are computed by
    exact spectral evolution.
    """
    n = h_n.n
    target = opposite(k, n)
    s_n = spectral_decompose(h_n)
    s_c = spectral_decompose(babinet_complement(h_n))
    a_n = abs(transfer_amplitude(s_n, t, k, target))
    a_c = abs(transfer_amplitude(s_c, t, k, target))
    return abs(a_n - a_c)


def _max_discrepancy(h_n: Hamiltonian, t_max: float, k: int, steps: int) -> float:
    n = h_n.n
    target = opposite(k, n)
    times = np.linspace(0.0, t_max, steps)
    s_n = spectral_decompose(h_n)
    s_c = spectral_decompose(babinet_complement(h_n))
    a_n = np.abs(amplitude_series(s_n, times, k, target))
    a_c = np.abs(amplitude_series(s_c, times, k, target))
    return float(np.max(np.abs(a_n - a_c)))


def make_case(h_n: Hamiltonian, times: Sequence[float], k: int = 1) -> BabinetCase:
    """Bundle a Hamiltonian with its complement and per-time discrepancies."""
    disc = {float(t): discrepancy(h_n, float(t), k) for t in times}
    return BabinetCase(h_n.n, h_n, babinet_complement(h_n), coupling_norm(h_n), disc)


def scaling_study(
    family: Callable[[int], Graph],
    sizes: Sequence[int],
    t_max: float,
    k: int = 1,
    steps: int = 801,
) -> list[tuple[int, float, float]]:
    """One row (n, coupling_norm, max discrepancy on a t-grid) per size."""
    rows = []
    for n in sizes:
        h = hamiltonian(family(n))
        rows.append((n, coupling_norm(h), _max_discrepancy(h, t_max, k, steps)))
    return rows


def scaling_csv(rows: Sequence[tuple[int, float, float]]) -> str:
    """CSV export with columns ``n,coupling_norm,max_discrepancy``."""
    lines = ["n,coupling_norm,max_discrepancy"]
    for n, norm, disc in rows:
        lines.append(f"{n},{norm:.15g},{disc:.15g}")
    return "\n".join(lines) + "\n"


def _hybrid(n: int) -> Graph:
    # pair matching plus one extra edge; cross-coupling norm ~ 1/sqrt(n)
    weights = dict(pair_matching(n).weights)
    weights[(1, 2)] = 1.0
    return Graph(n, weights)


FAMILIES: dict[str, Callable[[int], Graph]] = {
    "pair": pair_matching,
    "single_edge": single_edge,
    "hybrid": _hybrid,
    "complete": complete,
}
