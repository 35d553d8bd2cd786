"""Heisenberg spin-network Hamiltonians and their single-excitation walks.

A network of spin-1/2 particles coupled along the edges of a graph evolves,
inside the one-excitation sector, exactly like a continuous-time quantum
walk on the graph. Which walk appears depends on the coupling anisotropy:
equal transverse couplings with ``jz = 0`` give the adjacency walk,
``jz = jx`` the Laplacian walk (up to an energy rezeroing), and ``jz = -jx``
the signless-Laplacian walk. This module builds the full exponential-size
Hamiltonian, projects it onto the one-excitation sector, and certifies which
walk it realizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .evolve import WalkKind
from .graph import (
    Graph,
    adjacency_matrix,
    laplacian,
    signless_laplacian,
)

__all__ = [
    "MAX_SPIN_VERTICES",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
    "CouplingConstants",
    "heisenberg_hamiltonian",
    "single_excitation_basis",
    "project_single_excitation",
    "certify_walk_equivalence",
    "demo_graph",
]

# Full-space construction is 2^n dense; 14 spins (16384-dim) is the largest
# size that stays desk-scale.
MAX_SPIN_VERTICES = 14

EQUIVALENCE_TOL = 1e-10

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_I2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class CouplingConstants:
    """Exchange couplings ``jx``, ``jy``, ``jz`` (energy units, hbar = 1)."""

    jx: float
    jy: float
    jz: float

    def __post_init__(self) -> None:
        for name in ("jx", "jy", "jz"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"coupling {name} must be finite")


def _pair_operator(pauli: np.ndarray, n: int, i: int, j: int) -> np.ndarray:
    """Kronecker embedding of ``pauli (x) pauli`` on sites ``i`` and ``j``."""
    factors = [pauli if site in (i, j) else _I2 for site in range(n)]
    return reduce(np.kron, factors)


def heisenberg_hamiltonian(g: Graph, j: CouplingConstants) -> np.ndarray:
    """Full ``2^n``-dimensional exchange Hamiltonian of the spin network.

    ``H = -(1/2) sum_{i~j} (jx XiXj + jy YiYj + jz ZiZj)`` where the sum
    runs over the edges of ``g`` and the Pauli operators act on the two
    endpoint spins (site 0 is the leading tensor factor).
    """
    if g.n > MAX_SPIN_VERTICES:
        raise ValueError(
            f"full spin space for n={g.n} exceeds the cap of {MAX_SPIN_VERTICES}"
        )
    dim = 2**g.n
    h = np.zeros((dim, dim), dtype=complex)
    for u, v in sorted(g.edges):
        h += j.jx * _pair_operator(PAULI_X, g.n, u, v)
        h += j.jy * _pair_operator(PAULI_Y, g.n, u, v)
        h += j.jz * _pair_operator(PAULI_Z, g.n, u, v)
    h *= -0.5
    return h


def single_excitation_basis(n: int) -> list[int]:
    """Computational-basis indices of the one-excitation states.

    Entry ``k`` is the index of the state with the single flipped spin at
    vertex ``k``. Vertex 0 occupies the most significant bit, so the state
    with the excitation at vertex 0 is ``|100...0>``.
    """
    if n < 1:
        raise ValueError("vertex count must be positive")
    return [1 << (n - 1 - k) for k in range(n)]


def project_single_excitation(h: np.ndarray, n: int) -> np.ndarray:
    """Restrict a full spin Hamiltonian to the one-excitation sector.

    For equal transverse couplings the sector is invariant, so the
    restriction loses no amplitude and is the walk Hamiltonian on the
    graph's vertices.
    """
    h = np.asarray(h)
    if h.shape != (2**n, 2**n):
        raise ValueError(f"operator shape {h.shape} does not match 2^{n}")
    idx = single_excitation_basis(n)
    return h[np.ix_(idx, idx)]


def certify_walk_equivalence(
    g: Graph, j: CouplingConstants
) -> tuple[WalkKind | None, float]:
    """Classify which walk the spin network realizes on ``g``.

    Builds the full Hamiltonian, projects it onto the one-excitation
    sector, and compares against the three candidate identities:

    - adjacency:          ``-gamma A``
    - Laplacian:          ``-gamma L - (gamma m / 2) I``
    - signless Laplacian: ``-gamma Q + (gamma m / 2) I``

    with ``gamma = jx`` and ``m`` the edge count. Returns the matching kind
    and the max entrywise deviation, or ``(None, deviation)`` when no
    candidate matches within tolerance. Requires ``jx == jy``.
    """
    if j.jx != j.jy:
        raise ValueError("walk equivalence requires jx == jy")
    gamma = j.jx
    projected = project_single_excitation(heisenberg_hamiltonian(g, j), g.n)
    shift = 0.5 * gamma * g.m * np.eye(g.n)
    candidates = [
        (WalkKind.ADJACENCY, -gamma * adjacency_matrix(g)),
        (WalkKind.LAPLACIAN, -gamma * laplacian(g) - shift),
        (WalkKind.SIGNLESS_LAPLACIAN, -gamma * signless_laplacian(g) + shift),
    ]
    best_kind: WalkKind | None = None
    best_dev = np.inf
    for kind, target in candidates:
        dev = float(np.max(np.abs(projected - target)))
        if dev < best_dev:
            best_kind, best_dev = kind, dev
    if best_dev <= EQUIVALENCE_TOL:
        return best_kind, best_dev
    return None, best_dev


def demo_graph() -> Graph:
    """Five-vertex, four-edge graph with one isolated vertex.

    The stock example for the walk-equivalence checks: small enough for the
    full spin space, irregular enough that A, L, and Q all differ.
    """
    return Graph(5, frozenset({(0, 1), (1, 2), (1, 3), (2, 3)}))
