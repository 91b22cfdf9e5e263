"""Complex linear algebra for a five-level qudit hosting two virtual qubits.

Levels 0..3 encode the qubit pair (A, B) with A as the high bit, so
level = 2a + b:

    |0> = |0>_A |0>_B    |1> = |0>_A |1>_B
    |2> = |1>_A |0>_B    |3> = |1>_A |1>_B

Level 4 is an ancilla with no qubit image; it exists so that logical
U(4) operations can be realized as SU(5) operations by parking a
compensating phase on it.

All matrices and states are plain complex numpy arrays.  Operator
comparisons are "phase-aware": two operators are considered equal when
they differ only by a global unit-modulus factor.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    AncillaLevelError,
    AncillaPopulatedError,
    DimensionMismatchError,
    LevelOutOfRangeError,
    NotNormalizedError,
    NotUnitaryError,
    NotUnitPhaseError,
)

DIM = 5
ANCILLA_LEVEL = 4
N_LOGICAL = 4  # levels 0..3 carry the two-qubit state

# Alignment phases with |trace| below this are treated as undefined.
_ZERO_TRACE_TOL = 1e-12


def map_level_to_qubits(idx: int) -> tuple[int, int]:
    """Return the qubit pair (a, b) encoded by energy level ``idx``.

    Only levels 0..3 have a qubit image; the ancilla level raises
    AncillaLevelError and anything above the qudit raises
    LevelOutOfRangeError.
    """
    if not isinstance(idx, (int, np.integer)) or isinstance(idx, bool):
        raise LevelOutOfRangeError(f"level index must be an integer, got {idx!r}")
    if idx == ANCILLA_LEVEL:
        raise AncillaLevelError("level 4 is the ancilla and has no qubit image")
    if not 0 <= idx < N_LOGICAL:
        raise LevelOutOfRangeError(f"level index {idx} outside 0..{DIM - 1}")
    return idx // 2, idx % 2


def map_qubits_to_level(a: int, b: int) -> int:
    """Return the energy level 2a + b encoding the qubit pair (a, b)."""
    if a not in (0, 1) or b not in (0, 1):
        raise LevelOutOfRangeError(f"qubit values must be bits, got ({a!r}, {b!r})")
    return 2 * a + b


def basis_state(idx: int, dim: int = DIM) -> np.ndarray:
    """Return the computational basis ket |idx> as a length-``dim`` vector."""
    if not 0 <= idx < dim:
        raise LevelOutOfRangeError(f"basis index {idx} outside 0..{dim - 1}")
    state = np.zeros(dim, dtype=complex)
    state[idx] = 1.0
    return state


def is_unitary(u: np.ndarray, tol: float = 1e-10) -> bool:
    """True when U @ U.conj().T is the identity within ``tol``."""
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))) <= tol)


def check_unitary(u: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Return ``u`` as a complex array, raising NotUnitaryError if it fails."""
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u, tol):
        raise NotUnitaryError("matrix is not unitary within tolerance")
    return u


def check_normalized(state: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Return ``state`` as a complex vector, raising if its norm is not 1."""
    state = np.asarray(state, dtype=complex)
    if state.ndim != 1:
        raise NotNormalizedError("state must be a one-dimensional amplitude vector")
    norm = np.linalg.norm(state)
    if abs(norm - 1.0) > tol:
        raise NotNormalizedError(f"state norm {norm} deviates from 1 by more than {tol}")
    return state


def check_density_matrix(rho: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Validate Hermiticity, unit trace, and positivity of a density matrix.

    Eigenvalues are allowed to dip to -tol to absorb roundoff.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionMismatchError("density matrix must be square")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise NotUnitaryError("density matrix is not Hermitian within tolerance")
    if abs(np.trace(rho) - 1.0) > tol:
        raise NotNormalizedError("density matrix trace deviates from 1")
    if np.min(np.linalg.eigvalsh((rho + rho.conj().T) / 2)) < -tol:
        raise NotNormalizedError("density matrix has a negative eigenvalue")
    return rho


def reduce_subsystem(rho: np.ndarray, which: str, ancilla_tol: float = 1e-10) -> np.ndarray:
    """Reduce a 5x5 two-qubit-carrying density matrix to one virtual qubit.

    With r = rho entries indexed by level, the reduced states are

        A: [[r00+r11, r02+r13], [(r02+r13)*, r22+r33]]
        B: [[r00+r22, r01+r23], [(r01+r23)*, r11+r33]]

    The ancilla population r44 must not exceed ``ancilla_tol``; the
    encoding only represents a two-qubit state when the fifth level is
    (numerically) empty.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (DIM, DIM):
        raise DimensionMismatchError(f"expected a {DIM}x{DIM} density matrix, got {rho.shape}")
    if which not in ("A", "B"):
        raise LevelOutOfRangeError(f"subsystem must be 'A' or 'B', got {which!r}")
    population = abs(rho[ANCILLA_LEVEL, ANCILLA_LEVEL])
    if population > ancilla_tol:
        raise AncillaPopulatedError(
            f"ancilla population {population:.3e} exceeds tolerance {ancilla_tol:.3e}"
        )
    if which == "A":
        off = rho[0, 2] + rho[1, 3]
        return np.array(
            [[rho[0, 0] + rho[1, 1], off], [np.conj(off), rho[2, 2] + rho[3, 3]]],
            dtype=complex,
        )
    off = rho[0, 1] + rho[2, 3]
    return np.array(
        [[rho[0, 0] + rho[2, 2], off], [np.conj(off), rho[1, 1] + rho[3, 3]]],
        dtype=complex,
    )


def global_phase_distance(u: np.ndarray, v: np.ndarray) -> tuple[complex, float]:
    """Best global-phase alignment of ``u`` onto ``v``.

    Returns (phase, residual) where phase is the unit scalar c maximizing
    |tr(U^dag V)| alignment, c = tr(U^dag V)/|tr(U^dag V)|, and residual is
    the max-entry-abs of (c*U - V).  When the trace is zero within 1e-12
    the phase defaults to 1 and the raw distance is reported.

    Accepts matrices (trace overlap) or vectors (inner-product overlap).
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise DimensionMismatchError(f"shape mismatch: {u.shape} vs {v.shape}")
    if u.ndim == 1:
        overlap = np.vdot(u, v)
    elif u.ndim == 2:
        overlap = np.trace(u.conj().T @ v)
    else:
        raise DimensionMismatchError("expected a vector or a square matrix")
    if abs(overlap) > _ZERO_TRACE_TOL:
        phase = overlap / abs(overlap)
    else:
        phase = 1.0 + 0.0j
    residual = float(np.max(np.abs(phase * u - v)))
    return complex(phase), residual


def embed_two_qubit(gate: np.ndarray, ancilla_phase: complex = 1.0) -> np.ndarray:
    """Embed a 4x4 two-qubit unitary into the qudit, phasing the ancilla.

    The result is block diagonal: ``gate`` acts on levels 0..3 (ordered
    by the 2a+b encoding) and the ancilla level picks up
    ``ancilla_phase``, which must have unit modulus.
    """
    gate = np.asarray(gate, dtype=complex)
    if gate.shape != (N_LOGICAL, N_LOGICAL):
        raise DimensionMismatchError(f"expected a 4x4 gate, got {gate.shape}")
    check_unitary(gate)
    if abs(abs(complex(ancilla_phase)) - 1.0) > 1e-10:
        raise NotUnitPhaseError(f"ancilla phase must have unit modulus, got {ancilla_phase!r}")
    out = np.zeros((DIM, DIM), dtype=complex)
    out[:N_LOGICAL, :N_LOGICAL] = gate
    out[ANCILLA_LEVEL, ANCILLA_LEVEL] = ancilla_phase
    return out


def determinant(u: np.ndarray) -> complex:
    """Complex determinant of a square matrix (LU-based at these sizes)."""
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatchError("determinant requires a square matrix")
    return complex(np.linalg.det(u))


def matrix_to_dict(m: np.ndarray) -> dict:
    """Serialize a square matrix to {"dim", "re", "im"} with row-major grids."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError("matrix serialization requires a square matrix")
    return {"dim": int(m.shape[0]), "re": m.real.tolist(), "im": m.imag.tolist()}


def matrix_from_dict(obj: dict) -> np.ndarray:
    """Rebuild a complex matrix from its {"dim", "re", "im"} form."""
    dim = int(obj["dim"])
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj["im"], dtype=float)
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise DimensionMismatchError("re/im grids do not match the declared dim")
    return re + 1j * im


def vector_to_dict(v: np.ndarray) -> dict:
    """Serialize an amplitude vector to {"dim", "re", "im"} lists."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatchError("vector serialization requires a 1-d array")
    return {"dim": int(v.shape[0]), "re": v.real.tolist(), "im": v.imag.tolist()}


def vector_from_dict(obj: dict) -> np.ndarray:
    """Rebuild a complex vector from its {"dim", "re", "im"} form."""
    dim = int(obj["dim"])
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj["im"], dtype=float)
    if re.shape != (dim,) or im.shape != (dim,):
        raise DimensionMismatchError("re/im lists do not match the declared dim")
    return re + 1j * im
