"""Four-class reduced model of spatial search on complete bipartite graphs.

By symmetry, search on a complete bipartite graph confines the dynamics to
the span of four uniform class states: left marked (a), right marked (b),
left unmarked (c), right unmarked (d). This module builds the reduced 4x4
operators, the three canonical initial states, the asymptotic eigensystems
at the two critical jumping rates ``1/n1`` and ``1/n2``, the closed-form
class probabilities, and the runtime comparison across the three walks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .evolve import (
    SearchInstance,
    WalkKind,
    eig_hermitian,
    propagate,
    search_hamiltonian,
)
from .graph import BipartiteSpec, complete_bipartite

__all__ = [
    "CLASS_NAMES",
    "InitialStateKind",
    "CriticalSide",
    "Target",
    "FastestWalk",
    "ClosedFormPeak",
    "RuntimeTable",
    "RegimeClassification",
    "DegenerateEigensystem",
    "class_sizes",
    "class_slices",
    "reduced_walk_matrix",
    "reduced_hamiltonian",
    "reduction_isometry",
    "initial_state",
    "reduced_to_full",
    "class_probabilities",
    "critical_gamma",
    "asymptotic_eigensystem_h0",
    "degenerate_correction",
    "energy_gap",
    "closed_form_runtime",
    "closed_form_probabilities",
    "closed_form_peaks",
    "runtime_table",
    "fastest_regime",
    "simulate_reduced",
    "simulate_full",
]

CLASS_NAMES = ("a", "b", "c", "d")


class InitialStateKind(enum.Enum):
    """The three canonical start states for bipartite search."""

    UNIFORM = "s"  # uniform over all vertices; eigenvector of L
    ADJACENCY_EIGENVECTOR = "sa"  # eigenvector of A with eigenvalue sqrt(n1 n2)
    SIGNLESS_EIGENVECTOR = "sq"  # eigenvector of Q with eigenvalue n


class CriticalSide(enum.Enum):
    """Which critical jumping rate: 1/n1 targets left, 1/n2 targets right."""

    LEFT = "left"
    RIGHT = "right"


class Target(enum.Enum):
    """Where a closed-form evolution deposits its success probability."""

    LEFT_MARKED = "left_marked"
    RIGHT_MARKED = "right_marked"
    MIXED = "mixed"


class FastestWalk(enum.Enum):
    LAPLACIAN_LEFT = "laplacian_left"
    LAPLACIAN_RIGHT = "laplacian_right"
    ADJACENCY = "adjacency"
    SIGNLESS_LEFT = "signless_left"
    SIGNLESS_RIGHT = "signless_right"


def class_sizes(spec: BipartiteSpec) -> tuple[int, int, int, int]:
    """Vertex counts of the classes (a, b, c, d)."""
    return (spec.k1, spec.k2, spec.unmarked1, spec.unmarked2)


def class_slices(spec: BipartiteSpec) -> tuple[range, range, range, range]:
    """Vertex index ranges of the classes in the canonical layout."""
    return (
        range(0, spec.k1),
        range(spec.n1, spec.n1 + spec.k2),
        range(spec.k1, spec.n1),
        range(spec.n1 + spec.k2, spec.n),
    )


def _zero_inactive(matrix: np.ndarray, spec: BipartiteSpec) -> np.ndarray:
    """Zero rows/columns of classes with no vertices (inert coordinates)."""
    for i, size in enumerate(class_sizes(spec)):
        if size == 0:
            matrix[i, :] = 0.0
            matrix[:, i] = 0.0
    return matrix


def reduced_walk_matrix(spec: BipartiteSpec, walk: WalkKind) -> np.ndarray:
    """The walk generator restricted to the (a, b, c, d) class basis.

    The adjacency block couples each left class to each right class with
    weight ``sqrt(size_i * size_j)``; the degree part is ``diag(n2, n1,
    n2, n1)``. Coordinates of empty classes are zeroed so the matrix keeps
    a fixed 4x4 shape for every layout.
    """
    k1, k2 = float(spec.k1), float(spec.k2)
    u1, u2 = float(spec.unmarked1), float(spec.unmarked2)
    adj = np.array(
        [
            [0.0, math.sqrt(k1 * k2), 0.0, math.sqrt(k1 * u2)],
            [math.sqrt(k1 * k2), 0.0, math.sqrt(k2 * u1), 0.0],
            [0.0, math.sqrt(k2 * u1), 0.0, math.sqrt(u1 * u2)],
            [math.sqrt(k1 * u2), 0.0, math.sqrt(u1 * u2), 0.0],
        ]
    )
    deg = np.diag([float(spec.n2), float(spec.n1), float(spec.n2), float(spec.n1)])
    if walk is WalkKind.ADJACENCY:
        out = adj
    elif walk is WalkKind.LAPLACIAN:
        out = adj - deg
    else:
        out = adj + deg
    return _zero_inactive(out, spec)


def reduced_hamiltonian(
    spec: BipartiteSpec, walk: WalkKind, gamma: float
) -> np.ndarray:
    """Reduced 4x4 search Hamiltonian ``-gamma W - diag(1, 1, 0, 0)``."""
    if not np.isfinite(gamma) or gamma < 0:
        raise ValueError("gamma must be finite and nonnegative")
    h = -gamma * reduced_walk_matrix(spec, walk)
    h[0, 0] -= 1.0
    h[1, 1] -= 1.0
    return _zero_inactive(h, spec)


def reduction_isometry(spec: BipartiteSpec) -> np.ndarray:
    """The ``n x 4`` isometry whose columns are the class states.

    Column ``i`` is the uniform superposition over the vertices of class
    ``i`` (zero column for an empty class). Conjugating the full search
    Hamiltonian by this isometry reproduces the reduced matrix.
    """
    iso = np.zeros((spec.n, 4))
    for col, (size, vertices) in enumerate(zip(class_sizes(spec), class_slices(spec))):
        if size:
            iso[list(vertices), col] = 1.0 / math.sqrt(size)
    return iso


def initial_state(spec: BipartiteSpec, kind: InitialStateKind) -> np.ndarray:
    """One of the three canonical start states, in the class basis.

    - uniform: every vertex carries ``1/sqrt(n)``.
    - adjacency eigenvector: left vertices carry ``1/sqrt(2 n1)`` and right
      vertices ``1/sqrt(2 n2)``; eigenvector of A with eigenvalue
      ``sqrt(n1 n2)``.
    - signless eigenvector: left vertices carry ``sqrt(n2/(n1 n))`` and
      right vertices ``sqrt(n1/(n2 n))``; eigenvector of Q with
      eigenvalue ``n``.
    """
    k1, k2 = float(spec.k1), float(spec.k2)
    u1, u2 = float(spec.unmarked1), float(spec.unmarked2)
    n1, n2, n = float(spec.n1), float(spec.n2), float(spec.n)
    if kind is InitialStateKind.UNIFORM:
        amps = np.array(
            [math.sqrt(k1), math.sqrt(k2), math.sqrt(u1), math.sqrt(u2)]
        ) / math.sqrt(n)
    elif kind is InitialStateKind.ADJACENCY_EIGENVECTOR:
        amps = np.array(
            [
                math.sqrt(k1 / (2.0 * n1)),
                math.sqrt(k2 / (2.0 * n2)),
                math.sqrt(u1 / (2.0 * n1)),
                math.sqrt(u2 / (2.0 * n2)),
            ]
        )
    else:
        amps = np.array(
            [
                math.sqrt(k1 * n2 / (n1 * n)),
                math.sqrt(k2 * n1 / (n2 * n)),
                math.sqrt(u1 * n2 / (n1 * n)),
                math.sqrt(u2 * n1 / (n2 * n)),
            ]
        )
    return amps.astype(complex)


def reduced_to_full(spec: BipartiteSpec, reduced: np.ndarray) -> np.ndarray:
    """Expand a class-basis state to the full vertex basis.

    Each class amplitude is spread uniformly over the class's vertices with
    ``1/sqrt(class size)`` weights, preserving the norm. Amplitude on an
    empty class is rejected.
    """
    reduced = np.asarray(reduced, dtype=complex)
    if reduced.shape != (4,):
        raise ValueError("reduced state must have four amplitudes")
    full = np.zeros(spec.n, dtype=complex)
    for amp, size, vertices in zip(reduced, class_sizes(spec), class_slices(spec)):
        if size == 0:
            if abs(amp) > 1e-12:
                raise ValueError("nonzero amplitude on an empty vertex class")
            continue
        full[list(vertices)] = amp / math.sqrt(size)
    return full


def class_probabilities(spec: BipartiteSpec, psi_full: np.ndarray) -> np.ndarray:
    """Probability mass of a full-space state on each of the four classes."""
    psi_full = np.asarray(psi_full)
    if psi_full.shape != (spec.n,):
        raise ValueError("state dimension does not match the layout")
    probs = np.abs(psi_full) ** 2
    return np.array([float(np.sum(probs[list(r)])) for r in class_slices(spec)])


def critical_gamma(spec: BipartiteSpec, side: CriticalSide) -> float:
    """The jumping rate that makes the dynamics target the given side."""
    return 1.0 / spec.n1 if side is CriticalSide.LEFT else 1.0 / spec.n2


def asymptotic_eigensystem_h0(
    spec: BipartiteSpec, gamma: float
) -> list[tuple[np.ndarray, float]]:
    """Leading-order eigenpairs of the reduced search Hamiltonian.

    For large partite sets the dominant part of the Hamiltonian is diagonal
    in the basis ``a``, ``b``, ``u = (sqrt(n2) c + sqrt(n1) d)/sqrt(n)``,
    ``v = (sqrt(n1) c - sqrt(n2) d)/sqrt(n)`` with eigenvalues
    ``-1 - gamma n2``, ``-1 - gamma n1``, ``-gamma n``, and ``0``.
    Pairs are returned in that fixed labeled order.
    """
    if not np.isfinite(gamma) or gamma <= 0:
        raise ValueError("gamma must be finite and positive")
    n1, n2, n = float(spec.n1), float(spec.n2), float(spec.n)
    e_a = np.array([1.0, 0.0, 0.0, 0.0], dtype=complex)
    e_b = np.array([0.0, 1.0, 0.0, 0.0], dtype=complex)
    u = np.array([0.0, 0.0, math.sqrt(n2), math.sqrt(n1)], dtype=complex) / math.sqrt(n)
    v = np.array([0.0, 0.0, math.sqrt(n1), -math.sqrt(n2)], dtype=complex) / math.sqrt(n)
    return [
        (e_a, -1.0 - gamma * n2),
        (e_b, -1.0 - gamma * n1),
        (u, -gamma * n),
        (v, 0.0),
    ]


@dataclass(frozen=True)
class DegenerateEigensystem:
    """Perturbation-lifted eigenpairs at a critical rate, plus the gap.

    ``pairs`` holds four (vector, eigenvalue) tuples sorted by eigenvalue
    ascending; ``delta_e`` is the splitting of the lifted doublet, which
    sets the runtime ``pi / delta_e``.
    """

    pairs: tuple[tuple[np.ndarray, float], ...]
    delta_e: float


def energy_gap(spec: BipartiteSpec, side: CriticalSide) -> float:
    """Splitting of the degenerate doublet at the critical rate."""
    if side is CriticalSide.RIGHT:
        return energy_gap(spec.swapped(), CriticalSide.LEFT)
    if spec.k1 < 1:
        raise ValueError("left-critical degeneracy needs k1 >= 1")
    n1, n2, n = float(spec.n1), float(spec.n2), float(spec.n)
    return 2.0 * math.sqrt(spec.k1 * n2 / (n1 * n))


def degenerate_correction(
    spec: BipartiteSpec, side: CriticalSide
) -> DegenerateEigensystem:
    """Asymptotic eigensystem at a critical rate, degeneracy lifted.

    At ``gamma = 1/n1`` the ``a`` and ``u`` leading-order eigenvectors are
    degenerate; first-order perturbation by the subleading couplings lifts
    them into ``(a +/- u)/sqrt(2)`` with eigenvalues
    ``-1 - n2/n1 -/+ sqrt(k1 n2 / (n1 n))``, while ``b`` (eigenvalue -2)
    and ``v`` (eigenvalue 0) are unchanged. The right-critical case is the
    partite-swapped mirror image.
    """
    if side is CriticalSide.RIGHT:
        mirrored = degenerate_correction(spec.swapped(), CriticalSide.LEFT)
        perm = [1, 0, 3, 2]
        pairs = tuple((vec[perm], val) for vec, val in mirrored.pairs)
        return DegenerateEigensystem(pairs=pairs, delta_e=mirrored.delta_e)
    if spec.k1 < 1:
        raise ValueError("left-critical degeneracy needs k1 >= 1")
    n1, n2, n = float(spec.n1), float(spec.n2), float(spec.n)
    half_gap = math.sqrt(spec.k1 * n2 / (n1 * n))
    base = -1.0 - n2 / n1
    e_a, e_b, u, v = (vec for vec, _ in asymptotic_eigensystem_h0(spec, 1.0 / n1))
    pairs = [
        ((e_a + u) / math.sqrt(2.0), base - half_gap),
        ((e_a - u) / math.sqrt(2.0), base + half_gap),
        (e_b, -2.0),
        (v, 0.0),
    ]
    pairs.sort(key=lambda pair: pair[1])
    return DegenerateEigensystem(pairs=tuple(pairs), delta_e=2.0 * half_gap)


def closed_form_runtime(spec: BipartiteSpec, side: CriticalSide) -> float:
    """Time of the first success-probability maximum, ``pi / delta_e``."""
    return math.pi / energy_gap(spec, side)


def closed_form_probabilities(
    spec: BipartiteSpec,
    start: InitialStateKind,
    side: CriticalSide,
    t: float | np.ndarray,
):
    """Asymptotic class probabilities of the signless-Laplacian search.

    Valid for large partite sets at the critical rate of ``side``. From the
    uniform start the left-critical probabilities are::

        p_a = (4 n1 n2 / n^2) sin^2(dE t / 2)
        p_b = 0
        p_c = (4 n1 n2^2 / n^3) cos^2(dE t / 2)
              + (4 n1 n2 (n1 - n2) / n^3) cos(dE t / 2) cos((1 + n2/n1) t)
              + n1 (n1 - n2)^2 / n^3
        p_d = same as p_c with the n1/n2 prefactors swapped and the
              cross term negated

    and from the signless eigenvector start::

        p_a = sin^2(dE t / 2),  p_b = 0,
        p_c = (n2 / n) cos^2(dE t / 2),  p_d = (n1 / n) cos^2(dE t / 2)

    with ``dE`` the critical-gap splitting. The right-critical case is the
    partite-swapped mirror. The four probabilities sum to one for every t.
    Only the uniform and signless starts have closed forms here.
    """
    if start is InitialStateKind.ADJACENCY_EIGENVECTOR:
        raise ValueError("no closed form for the adjacency eigenvector start")
    if side is CriticalSide.RIGHT:
        pa, pb, pc, pd = closed_form_probabilities(
            spec.swapped(), start, CriticalSide.LEFT, t
        )
        return pb, pa, pd, pc
    if spec.k1 < 1:
        raise ValueError("left-critical evolution needs k1 >= 1")
    n1, n2, n = float(spec.n1), float(spec.n2), float(spec.n)
    t = np.asarray(t, dtype=float)
    half = 0.5 * energy_gap(spec, CriticalSide.LEFT) * t
    sin2 = np.sin(half) ** 2
    cos2 = np.cos(half) ** 2
    if start is InitialStateKind.UNIFORM:
        cross = np.cos(half) * np.cos((1.0 + n2 / n1) * t)
        pa = (4.0 * n1 * n2 / n**2) * sin2
        pb = np.zeros_like(pa)
        pc = (
            (4.0 * n1 * n2**2 / n**3) * cos2
            + (4.0 * n1 * n2 * (n1 - n2) / n**3) * cross
            + n1 * (n1 - n2) ** 2 / n**3
        )
        pd = (
            (4.0 * n1**2 * n2 / n**3) * cos2
            - (4.0 * n1 * n2 * (n1 - n2) / n**3) * cross
            + n2 * (n1 - n2) ** 2 / n**3
        )
    else:
        pa = sin2
        pb = np.zeros_like(pa)
        pc = (n2 / n) * cos2
        pd = (n1 / n) * cos2
    if pa.ndim == 0:
        return float(pa), float(pb), float(pc), float(pd)
    return pa, pb, pc, pd


@dataclass(frozen=True)
class ClosedFormPeak:
    """One row of the search summary: who evolves where, how fast."""

    walk: WalkKind
    start: InitialStateKind
    gamma_critical: float
    runtime: float
    peak_success: float
    target: Target


def closed_form_peaks(spec: BipartiteSpec) -> list[ClosedFormPeak]:
    """Asymptotic runtime/success records for all walk and start pairings.

    Laplacian search from the uniform state is deterministic toward one
    partite set per critical rate; adjacency search has a single critical
    rate and reaches certainty only from its own eigenvector; the signless
    walk mirrors the Laplacian's two rates but reaches certainty only from
    the signless eigenvector. Rows whose runtime is undefined (no marked
    vertices on the targeted side) are omitted.
    """
    n1, n2, n = float(spec.n1), float(spec.n2), float(spec.n)
    k1, k2 = float(spec.k1), float(spec.k2)
    gamma_a = 1.0 / math.sqrt(n1 * n2)
    rows: list[ClosedFormPeak] = []
    if spec.k1 >= 1:
        rows.append(
            ClosedFormPeak(
                WalkKind.LAPLACIAN,
                InitialStateKind.UNIFORM,
                1.0 / n2,
                0.5 * math.pi * math.sqrt(n / k1),
                1.0,
                Target.LEFT_MARKED,
            )
        )
    if spec.k2 >= 1:
        rows.append(
            ClosedFormPeak(
                WalkKind.LAPLACIAN,
                InitialStateKind.UNIFORM,
                1.0 / n1,
                0.5 * math.pi * math.sqrt(n / k2),
                1.0,
                Target.RIGHT_MARKED,
            )
        )
    t_adjacency = (math.pi / math.sqrt(2.0)) * math.sqrt(
        n1 * n2 / (k2 * n1 + k1 * n2)
    )
    rows.append(
        ClosedFormPeak(
            WalkKind.ADJACENCY,
            InitialStateKind.UNIFORM,
            gamma_a,
            t_adjacency,
            0.5 + math.sqrt(n1 * n2) / n,
            Target.MIXED,
        )
    )
    rows.append(
        ClosedFormPeak(
            WalkKind.ADJACENCY,
            InitialStateKind.ADJACENCY_EIGENVECTOR,
            gamma_a,
            t_adjacency,
            1.0,
            Target.MIXED,
        )
    )
    if spec.k1 >= 1:
        t_left = 0.5 * math.pi * math.sqrt(n1 * n / (k1 * n2))
        rows.append(
            ClosedFormPeak(
                WalkKind.SIGNLESS_LAPLACIAN,
                InitialStateKind.UNIFORM,
                1.0 / n1,
                t_left,
                4.0 * n1 * n2 / n**2,
                Target.LEFT_MARKED,
            )
        )
        rows.append(
            ClosedFormPeak(
                WalkKind.SIGNLESS_LAPLACIAN,
                InitialStateKind.SIGNLESS_EIGENVECTOR,
                1.0 / n1,
                t_left,
                1.0,
                Target.LEFT_MARKED,
            )
        )
    if spec.k2 >= 1:
        t_right = 0.5 * math.pi * math.sqrt(n2 * n / (k2 * n1))
        rows.append(
            ClosedFormPeak(
                WalkKind.SIGNLESS_LAPLACIAN,
                InitialStateKind.UNIFORM,
                1.0 / n2,
                t_right,
                4.0 * n1 * n2 / n**2,
                Target.RIGHT_MARKED,
            )
        )
        rows.append(
            ClosedFormPeak(
                WalkKind.SIGNLESS_LAPLACIAN,
                InitialStateKind.SIGNLESS_EIGENVECTOR,
                1.0 / n2,
                t_right,
                1.0,
                Target.RIGHT_MARKED,
            )
        )
    return rows


@dataclass(frozen=True)
class RuntimeTable:
    """The five deterministic-search runtimes; ``None`` when undefined."""

    t_la: float | None
    t_lb: float | None
    t_a: float | None
    t_qa: float | None
    t_qb: float | None

    def as_ordered(self) -> list[tuple[FastestWalk, float | None]]:
        """Entries in the fixed tie-break order."""
        return [
            (FastestWalk.LAPLACIAN_LEFT, self.t_la),
            (FastestWalk.LAPLACIAN_RIGHT, self.t_lb),
            (FastestWalk.ADJACENCY, self.t_a),
            (FastestWalk.SIGNLESS_LEFT, self.t_qa),
            (FastestWalk.SIGNLESS_RIGHT, self.t_qb),
        ]


def runtime_table(spec: BipartiteSpec) -> RuntimeTable:
    """Runtimes of the five deterministic search algorithms.

    ``t_la``/``t_lb`` need a marked vertex on the targeted side, as do
    ``t_qa``/``t_qb``; missing entries are reported as ``None`` rather
    than infinity.
    """
    n1, n2, n = float(spec.n1), float(spec.n2), float(spec.n)
    k1, k2 = float(spec.k1), float(spec.k2)
    half_pi = 0.5 * math.pi
    t_la = half_pi * math.sqrt(n / k1) if spec.k1 >= 1 else None
    t_lb = half_pi * math.sqrt(n / k2) if spec.k2 >= 1 else None
    t_a = (math.pi / math.sqrt(2.0)) * math.sqrt(n1 * n2 / (k2 * n1 + k1 * n2))
    t_qa = half_pi * math.sqrt(n1 * n / (k1 * n2)) if spec.k1 >= 1 else None
    t_qb = half_pi * math.sqrt(n2 * n / (k2 * n1)) if spec.k2 >= 1 else None
    return RuntimeTable(t_la=t_la, t_lb=t_lb, t_a=t_a, t_qa=t_qa, t_qb=t_qb)


@dataclass(frozen=True)
class RegimeClassification:
    """Which walk searches fastest for a bipartite layout.

    ``thresholds`` carries the analytic transition points on the marked
    count of the larger side (``threshold_axis``), valid when the sides
    differ; ``near_regular`` flags layouts with ``|n1 - n2| < sqrt(n)``,
    where all three walks behave like the adjacency walk and the
    distinctions above lose meaning.
    """

    fastest: FastestWalk
    runtimes: RuntimeTable
    near_regular: bool
    threshold_axis: str | None
    thresholds: tuple[float, float] | None


RUNTIME_TIE_RTOL = 1e-12


def fastest_regime(spec: BipartiteSpec) -> RegimeClassification:
    """Classify the fastest walk; ties fall to the fixed order.

    The tie-break order is Laplacian-left, Laplacian-right, adjacency,
    signless-left, signless-right. Runtimes within a relative 1e-12 of the
    minimum count as tied, so algebraically exact ties that land one ulp
    apart in floating point still resolve by the fixed order.
    """
    table = runtime_table(spec)
    defined = [(label, value) for label, value in table.as_ordered() if value is not None]
    best = min(value for _, value in defined)
    fastest = next(
        label
        for label, value in defined
        if value <= best * (1.0 + RUNTIME_TIE_RTOL)
    )
    n1, n2, n = float(spec.n1), float(spec.n2), float(spec.n)
    if spec.n1 > spec.n2:
        axis = "k1"
        thresholds = (
            spec.k2 * n1 * (n1 - n2) / (n2 * n),
            spec.k2 * n1 * n / (n2 * (n1 - n2)),
        )
    elif spec.n2 > spec.n1:
        axis = "k2"
        thresholds = (
            spec.k1 * n2 * (n2 - n1) / (n1 * n),
            spec.k1 * n2 * n / (n1 * (n2 - n1)),
        )
    else:
        axis, thresholds = None, None
    near_regular = abs(spec.n1 - spec.n2) < math.sqrt(spec.n)
    return RegimeClassification(
        fastest=fastest,
        runtimes=table,
        near_regular=near_regular,
        threshold_axis=axis,
        thresholds=thresholds,
    )


def simulate_reduced(
    spec: BipartiteSpec,
    walk: WalkKind,
    start: InitialStateKind,
    gamma: float,
    times: np.ndarray,
) -> np.ndarray:
    """Numeric class probabilities from the 4x4 reduced dynamics.

    Returns shape ``(len(times), 4)``; rows sum to one.
    """
    h = reduced_hamiltonian(spec, walk, gamma)
    psi0 = initial_state(spec, start)
    states = propagate(eig_hermitian(h), psi0, times)
    return np.abs(states) ** 2


def simulate_full(
    spec: BipartiteSpec,
    walk: WalkKind,
    start: InitialStateKind,
    gamma: float,
    times: np.ndarray,
) -> np.ndarray:
    """Numeric class probabilities from the full vertex-space dynamics.

    The independent cross-check of :func:`simulate_reduced`: builds the
    whole complete bipartite graph and evolves all ``n`` amplitudes.
    """
    graph, marked = complete_bipartite(spec)
    inst = SearchInstance(walk=walk, graph=graph, marked=marked, gamma=gamma)
    h = search_hamiltonian(inst)
    psi0 = reduced_to_full(spec, initial_state(spec, start))
    states = propagate(eig_hermitian(h), psi0, times)
    slices = class_slices(spec)
    probs = np.abs(states) ** 2
    return np.stack([probs[:, list(r)].sum(axis=1) for r in slices], axis=1)
