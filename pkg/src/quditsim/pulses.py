"""Theta-pulse primitives: two-level rotations on a qudit and their schedules.

A pulse drives one pair of levels (j, k) and acts as a rotation of that
two-dimensional subspace, leaving every other level untouched:

    x axis:  [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]
    y axis:  [[cos(t/2),   -sin(t/2)], [   sin(t/2), cos(t/2)]]

A Y rotation is not a native pulse; it is synthesized from three X
pulses via a spare level l outside {j, k}:

    Y_jk(t) = X_jl(pi) X_kl(t) X_jl(3pi)      (rightmost acts first)

and the product is independent of the choice of l.

Angles are stored as multiples of pi (``theta_over_pi``) so schedules
round-trip through JSON bit-exactly; radians are derived at evaluation
time.  The full period of a rotation is 4pi, so the canonical angle
range is [0, 4pi).  Sequences are stored chronologically: the first
pulse in the list is the first applied to the state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    DimensionMismatchError,
    FixedLevelClashError,
    InvalidLevelsError,
    NoSpareLevelError,
)

AXES = ("x", "y")

# Full period of a two-level rotation, in units of pi.
THETA_PERIOD = 4.0


@dataclass(frozen=True)
class Pulse:
    """One rotation on the level pair (j, k) by theta_over_pi * pi radians."""

    axis: str
    j: int
    k: int
    theta_over_pi: float

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}, got {self.axis!r}")
        if not isinstance(self.j, int) or not isinstance(self.k, int):
            raise InvalidLevelsError("pulse levels must be integers")
        if self.j < 0 or self.k < 0:
            raise InvalidLevelsError(f"pulse levels must be non-negative, got ({self.j}, {self.k})")
        if self.j == self.k:
            raise InvalidLevelsError(f"pulse levels must differ, got ({self.j}, {self.k})")
        if not math.isfinite(self.theta_over_pi):
            raise ValueError(f"pulse angle must be finite, got {self.theta_over_pi!r}")

    @property
    def theta(self) -> float:
        """Rotation angle in radians."""
        return self.theta_over_pi * math.pi

    def inverse(self) -> "Pulse":
        """Same pulse with the angle negated."""
        return replace(self, theta_over_pi=-self.theta_over_pi)

    def canonical(self) -> "Pulse":
        """Same pulse with the angle wrapped into [0, 4pi)."""
        return replace(self, theta_over_pi=self.theta_over_pi % THETA_PERIOD)


@dataclass(frozen=True)
class PulseSequence:
    """Chronologically ordered pulses on a ``dim``-level system."""

    dim: int
    pulses: tuple[Pulse, ...] = ()

    def __post_init__(self):
        if self.dim < 2:
            raise DimensionMismatchError(f"dim must be at least 2, got {self.dim}")
        object.__setattr__(self, "pulses", tuple(self.pulses))
        for p in self.pulses:
            if max(p.j, p.k) >= self.dim:
                raise InvalidLevelsError(
                    f"pulse levels ({p.j}, {p.k}) exceed dim {self.dim}"
                )

    def __len__(self) -> int:
        return len(self.pulses)

    def __iter__(self):
        return iter(self.pulses)

    def __add__(self, other: "PulseSequence") -> "PulseSequence":
        if not isinstance(other, PulseSequence):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatchError(f"cannot concatenate dims {self.dim} and {other.dim}")
        return PulseSequence(self.dim, self.pulses + other.pulses)


def pulse_unitary(pulse: Pulse, dim: int) -> np.ndarray:
    """Dense dim x dim unitary of one pulse: rotation block plus identity."""
    if max(pulse.j, pulse.k) >= dim:
        raise InvalidLevelsError(f"pulse levels ({pulse.j}, {pulse.k}) exceed dim {dim}")
    c = math.cos(pulse.theta / 2)
    s = math.sin(pulse.theta / 2)
    u = np.eye(dim, dtype=complex)
    u[pulse.j, pulse.j] = c
    u[pulse.k, pulse.k] = c
    if pulse.axis == "x":
        u[pulse.j, pulse.k] = -1j * s
        u[pulse.k, pulse.j] = -1j * s
    else:
        u[pulse.j, pulse.k] = -s
        u[pulse.k, pulse.j] = s
    return u


def expand_y(pulse: Pulse, dim: int, l: int | None = None) -> PulseSequence:
    """Lower one Y pulse to the three-X-pulse synthesis via spare level ``l``.

    ``l=None`` picks the smallest level outside {j, k}.  The returned
    sequence is chronological: X_jl(3pi), then X_kl(theta), then X_jl(pi).
    Its product equals the direct Y rotation for every legal l.
    """
    if pulse.axis != "y":
        raise ValueError(f"expected a y pulse, got axis {pulse.axis!r}")
    if max(pulse.j, pulse.k) >= dim:
        raise InvalidLevelsError(f"pulse levels ({pulse.j}, {pulse.k}) exceed dim {dim}")
    if dim < 3:
        raise NoSpareLevelError("a Y rotation needs a third level; dim 2 has none")
    if l is None:
        l = min(set(range(dim)) - {pulse.j, pulse.k})
    elif not 0 <= l < dim or l in (pulse.j, pulse.k):
        raise FixedLevelClashError(
            f"spare level {l} invalid for pair ({pulse.j}, {pulse.k}) in dim {dim}"
        )
    return PulseSequence(
        dim,
        (
            Pulse("x", pulse.j, l, 3.0),
            Pulse("x", pulse.k, l, pulse.theta_over_pi),
            Pulse("x", pulse.j, l, 1.0),
        ),
    )


def lower_to_x(seq: PulseSequence, l: int | None = None) -> PulseSequence:
    """Replace every Y pulse in a sequence with its three-X-pulse synthesis."""
    pulses: list[Pulse] = []
    for p in seq.pulses:
        if p.axis == "y":
            pulses.extend(expand_y(p, seq.dim, l).pulses)
        else:
            pulses.append(p)
    return PulseSequence(seq.dim, tuple(pulses))


def evaluate(seq: PulseSequence) -> np.ndarray:
    """Product unitary of a sequence: U = U_n ... U_1, first pulse rightmost."""
    u = np.eye(seq.dim, dtype=complex)
    for p in seq.pulses:
        u = pulse_unitary(p, seq.dim) @ u
    return u


def apply(seq: PulseSequence, state: np.ndarray) -> np.ndarray:
    """Apply a sequence to a state vector, pulse by pulse.

    Equivalent to evaluate(seq) @ state but touches only the two
    amplitudes each pulse acts on.
    """
    state = np.asarray(state, dtype=complex)
    if state.shape != (seq.dim,):
        raise DimensionMismatchError(f"state shape {state.shape} does not match dim {seq.dim}")
    out = state.copy()
    for p in seq.pulses:
        c = math.cos(p.theta / 2)
        s = math.sin(p.theta / 2)
        aj, ak = out[p.j], out[p.k]
        if p.axis == "x":
            out[p.j] = c * aj - 1j * s * ak
            out[p.k] = -1j * s * aj + c * ak
        else:
            out[p.j] = c * aj - s * ak
            out[p.k] = s * aj + c * ak
    return out


def adjoint(seq: PulseSequence) -> PulseSequence:
    """Inverse sequence: reversed order, every angle negated."""
    return PulseSequence(seq.dim, tuple(p.inverse() for p in reversed(seq.pulses)))


def canonicalize_theta(seq: PulseSequence) -> PulseSequence:
    """Wrap every angle into [0, 4pi); the product unitary is unchanged."""
    return PulseSequence(seq.dim, tuple(p.canonical() for p in seq.pulses))


def sequence_to_dict(seq: PulseSequence, canonical: bool = True) -> dict:
    """Serialize a sequence to the pulse-schedule JSON form.

    Writers emit canonical angles by default; pass canonical=False to
    keep angles verbatim.
    """
    if canonical:
        seq = canonicalize_theta(seq)
    return {
        "dim": seq.dim,
        "pulses": [
            {"axis": p.axis, "levels": [p.j, p.k], "theta_over_pi": p.theta_over_pi}
            for p in seq.pulses
        ],
    }


def sequence_from_dict(obj: dict) -> PulseSequence:
    """Rebuild a sequence from its JSON form; any finite angle is accepted."""
    pulses = tuple(
        Pulse(entry["axis"], int(entry["levels"][0]), int(entry["levels"][1]),
              float(entry["theta_over_pi"]))
        for entry in obj["pulses"]
    )
    return PulseSequence(int(obj["dim"]), pulses)
