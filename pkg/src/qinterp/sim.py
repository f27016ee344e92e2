"""Dense complex statevector simulator.

The gate set is deliberately small: Hadamard layers, phase ladders,
multi-controlled diagonal phases, the (inverse) quantum Fourier transform,
and an exact amplitude loader.  Every operation is a value-like description
with ``apply``, ``adjoint`` and ``shifted``; a :class:`Circuit` is a plain
sequence of them.  States are immutable; applying an operation returns a new
:class:`StateVector`.

Qubit convention: qubit 0 is the least significant bit of the basis index.
A :class:`RegisterLayout` places the value register on the low-order qubits,
so the value amplitudes of key ``k`` form the contiguous slice
``[k * M, (k + 1) * M)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import CapacityError, LayoutError, NormalizationError

MAX_QUBITS = 24

_SQRT1_2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class Register:
    """A contiguous block of qubits: ``offset`` is the least significant one."""

    offset: int
    width: int

    def __post_init__(self):
        if self.offset < 0 or self.width < 1:
            raise LayoutError(f"invalid register (offset={self.offset}, width={self.width})")

    @property
    def size(self) -> int:
        return 1 << self.width

    def qubits(self) -> range:
        return range(self.offset, self.offset + self.width)


@dataclass(frozen=True)
class RegisterLayout:
    """Partition of a state's qubits into a key and a value register."""

    key_width: int
    value_width: int

    def __post_init__(self):
        if self.key_width < 1 or self.value_width < 1:
            raise LayoutError("key and value registers need at least one qubit each")

    @property
    def num_qubits(self) -> int:
        return self.key_width + self.value_width

    @property
    def num_keys(self) -> int:
        return 1 << self.key_width

    @property
    def num_values(self) -> int:
        return 1 << self.value_width

    @property
    def value_register(self) -> Register:
        return Register(0, self.value_width)

    @property
    def key_register(self) -> Register:
        return Register(self.value_width, self.key_width)

    def split_index(self, index: int) -> tuple[int, int]:
        """Decompose a combined basis index into ``(key, value)``."""
        return index >> self.value_width, index & (self.num_values - 1)

    def combined_index(self, key: int, value: int) -> int:
        return (key << self.value_width) | value


@dataclass(frozen=True)
class BasisOutcome:
    index: int
    amplitude: complex

    @property
    def probability(self) -> float:
        return abs(self.amplitude) ** 2


@dataclass(frozen=True, eq=False)
class StateVector:
    """Immutable dense state: ``amplitudes[k]`` is the coefficient of basis ``k``."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.num_qubits,):
            raise LayoutError(
                f"amplitude vector of length {amps.shape} does not match {self.num_qubits} qubits"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits

    def amplitude(self, index: int) -> complex:
        if not 0 <= index < self.dim:
            raise IndexError(f"basis index {index} out of range for {self.num_qubits} qubits")
        return complex(self.amplitudes[index])

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def probability(self, index: int) -> float:
        return abs(self.amplitude(index)) ** 2

    def outcomes(self) -> list[BasisOutcome]:
        return [BasisOutcome(i, complex(a)) for i, a in enumerate(self.amplitudes)]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def whole_register(self) -> Register:
        return Register(0, self.num_qubits)


def zero_state(num_qubits: int) -> StateVector:
    """The all-zeros computational basis state."""
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise CapacityError(f"qubit count {num_qubits} outside supported range 1..{MAX_QUBITS}")
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(num_qubits, amps)


def _require_register(state: StateVector, register: Register):
    if register.offset + register.width > state.num_qubits:
        raise LayoutError(
            f"register {register} does not fit a {state.num_qubits}-qubit state"
        )


def _require_controls(state: StateVector, controls: tuple[int, ...], register: Register | None):
    for q in controls:
        if not 0 <= q < state.num_qubits:
            raise LayoutError(f"control qubit {q} out of range")
        if register is not None and q in register.qubits():
            raise LayoutError(f"control qubit {q} overlaps the target register")


def _control_mask(dim: int, controls: tuple[int, ...]) -> np.ndarray:
    bits = 0
    for q in controls:
        bits |= 1 << q
    idx = np.arange(dim)
    return (idx & bits) == bits


def _register_view(amps: np.ndarray, register: Register) -> np.ndarray:
    """Reshape to (high bits, register, low bits); middle axis is the register index."""
    post = 1 << register.offset
    return amps.reshape(-1, register.size, post)


class Operation:
    """Common interface of the gate set; subclasses are value-like descriptions."""

    def apply(self, state: StateVector) -> StateVector:
        raise NotImplementedError

    def adjoint(self) -> "Operation":
        raise NotImplementedError

    def shifted(self, offset: int) -> "Operation":
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class HadamardLayer(Operation):
    """H on every qubit of the register; self-inverse."""

    register: Register

    def apply(self, state: StateVector) -> StateVector:
        _require_register(state, self.register)
        amps = state.amplitudes.copy()
        for q in self.register.qubits():
            pairs = amps.reshape(-1, 2, 1 << q)
            lo = pairs[:, 0, :].copy()
            hi = pairs[:, 1, :]
            pairs[:, 0, :] = (lo + hi) * _SQRT1_2
            pairs[:, 1, :] = (lo - hi) * _SQRT1_2
        return StateVector(state.num_qubits, amps)

    def adjoint(self) -> "HadamardLayer":
        return self

    def shifted(self, offset: int) -> "HadamardLayer":
        return HadamardLayer(Register(self.register.offset + offset, self.register.width))


@dataclass(frozen=True, eq=False)
class PhaseLadder(Operation):
    """Multiply basis ``|k>`` of the register by ``exp(i k theta)``.

    Equivalent to one phase gate P(2^j * theta) per register qubit j.  With
    ``controls`` the phase fires only where every control bit is set; control
    qubits must lie outside the target register.
    """

    register: Register
    theta: float
    controls: tuple[int, ...] = ()

    def apply(self, state: StateVector) -> StateVector:
        _require_register(state, self.register)
        _require_controls(state, self.controls, self.register)
        ramp = np.exp(1j * self.theta * np.arange(self.register.size))
        if not self.controls:
            amps = state.amplitudes.copy()
            _register_view(amps, self.register)[:] *= ramp[None, :, None]
            return StateVector(state.num_qubits, amps)
        local = (np.arange(state.dim) >> self.register.offset) & (self.register.size - 1)
        phase = np.where(_control_mask(state.dim, self.controls), ramp[local], 1.0)
        return StateVector(state.num_qubits, state.amplitudes * phase)

    def adjoint(self) -> "PhaseLadder":
        return PhaseLadder(self.register, -self.theta, self.controls)

    def shifted(self, offset: int) -> "PhaseLadder":
        return PhaseLadder(
            Register(self.register.offset + offset, self.register.width),
            self.theta,
            tuple(q + offset for q in self.controls),
        )


@dataclass(frozen=True, eq=False)
class ControlledPhase(Operation):
    """Multiply by ``exp(i angle)`` where all control bits are set.

    With no controls this is a global phase.  Two controls and the symmetric
    angle give the controlled-phase gate used inside the Fourier transform.
    """

    controls: tuple[int, ...]
    angle: float

    def apply(self, state: StateVector) -> StateVector:
        _require_controls(state, self.controls, None)
        factor = np.exp(1j * self.angle)
        if not self.controls:
            return StateVector(state.num_qubits, state.amplitudes * factor)
        phase = np.where(_control_mask(state.dim, self.controls), factor, 1.0)
        return StateVector(state.num_qubits, state.amplitudes * phase)

    def adjoint(self) -> "ControlledPhase":
        return ControlledPhase(self.controls, -self.angle)

    def shifted(self, offset: int) -> "ControlledPhase":
        return ControlledPhase(tuple(q + offset for q in self.controls), self.angle)


@dataclass(frozen=True, eq=False)
class DiagonalPhase(Operation):
    """Multiply basis ``|k>`` of the register by ``exp(i phases[k])``."""

    register: Register
    phases: np.ndarray

    def __post_init__(self):
        phases = np.asarray(self.phases, dtype=np.float64)
        if phases.shape != (self.register.size,):
            raise LayoutError("phase table length must equal the register size")
        object.__setattr__(self, "phases", phases)

    def apply(self, state: StateVector) -> StateVector:
        _require_register(state, self.register)
        amps = state.amplitudes.copy()
        _register_view(amps, self.register)[:] *= np.exp(1j * self.phases)[None, :, None]
        return StateVector(state.num_qubits, amps)

    def adjoint(self) -> "DiagonalPhase":
        return DiagonalPhase(self.register, -self.phases)

    def shifted(self, offset: int) -> "DiagonalPhase":
        return DiagonalPhase(Register(self.register.offset + offset, self.register.width), self.phases)


@dataclass(frozen=True, eq=False)
class QftGate(Operation):
    """Quantum Fourier transform on one register, bit reversal included.

    The inverse direction realizes ``y_j = (1/sqrt(W)) sum_k x_k e^{-2 pi i jk / W}``
    on the register axis, i.e. the unitary DFT; the forward direction is its
    adjoint (positive sign).
    """

    register: Register
    inverse: bool = False

    def _steps(self) -> list[tuple]:
        # forward QFT: for each target from the top, H then conditioning phases
        reg = self.register
        steps: list[tuple] = []
        for i in reversed(range(reg.width)):
            steps.append(("h", reg.offset + i))
            for j in reversed(range(i)):
                steps.append(("cp", reg.offset + j, reg.offset + i, math.pi / (1 << (i - j))))
        steps.append(("rev",))
        return steps

    def apply(self, state: StateVector) -> StateVector:
        _require_register(state, self.register)
        steps = self._steps()
        if self.inverse:
            steps = [(s[0], *s[1:-1], -s[-1]) if s[0] == "cp" else s for s in reversed(steps)]
        amps = state.amplitudes.copy()
        for step in steps:
            if step[0] == "h":
                q = step[1]
                pairs = amps.reshape(-1, 2, 1 << q)
                lo = pairs[:, 0, :].copy()
                hi = pairs[:, 1, :]
                pairs[:, 0, :] = (lo + hi) * _SQRT1_2
                pairs[:, 1, :] = (lo - hi) * _SQRT1_2
            elif step[0] == "cp":
                amps *= np.where(
                    _control_mask(amps.size, (step[1], step[2])), np.exp(1j * step[3]), 1.0
                )
            else:  # bit reversal of the register index (an involution)
                w = self.register.width
                rev = np.zeros(self.register.size, dtype=np.intp)
                for k in range(self.register.size):
                    rev[k] = int(format(k, f"0{w}b")[::-1], 2)
                view = _register_view(amps, self.register)
                view[:] = view[:, rev, :]
        return StateVector(state.num_qubits, amps)

    def adjoint(self) -> "QftGate":
        return QftGate(self.register, not self.inverse)

    def shifted(self, offset: int) -> "QftGate":
        return QftGate(Register(self.register.offset + offset, self.register.width), self.inverse)


@dataclass(frozen=True, eq=False)
class StatePrep(Operation):
    """Exact loader: a unitary mapping the register's ``|0>`` to ``target``.

    Realized as a Householder reflection combined with a global phase, so the
    adjoint is available in closed form and round trips are exact to float
    precision.
    """

    register: Register
    target: np.ndarray
    dagger: bool = False

    def __post_init__(self):
        target = np.asarray(self.target, dtype=np.complex128)
        if target.shape != (self.register.size,):
            raise LayoutError("target length must equal the register size")
        norm = np.linalg.norm(target)
        if abs(norm - 1.0) > 1e-9:
            raise NormalizationError(f"target vector norm {norm} is not 1")
        object.__setattr__(self, "target", target)

    def apply(self, state: StateVector) -> StateVector:
        _require_register(state, self.register)
        first = self.target[0]
        alpha = float(np.angle(first)) if abs(first) > 0 else 0.0
        aligned = self.target * np.exp(-1j * alpha)  # real, non-negative first entry
        v = -aligned
        v[0] += 1.0
        vv = float(np.real(np.vdot(v, v)))
        amps = state.amplitudes.copy()
        view = _register_view(amps, self.register)
        if vv > 1e-24:
            proj = np.einsum("w,awb->ab", v.conj(), view)
            view -= (2.0 / vv) * v[None, :, None] * proj[:, None, :]
        amps *= np.exp(1j * (-alpha if self.dagger else alpha))
        return StateVector(state.num_qubits, amps)

    def adjoint(self) -> "StatePrep":
        return StatePrep(self.register, self.target, not self.dagger)

    def shifted(self, offset: int) -> "StatePrep":
        return StatePrep(
            Register(self.register.offset + offset, self.register.width), self.target, self.dagger
        )


@dataclass(frozen=True, eq=False)
class Circuit:
    """An ordered gate sequence over a fixed number of qubits."""

    num_qubits: int
    ops: tuple[Operation, ...]

    def apply(self, state: StateVector) -> StateVector:
        if state.num_qubits != self.num_qubits:
            raise LayoutError(
                f"{self.num_qubits}-qubit circuit applied to {state.num_qubits}-qubit state"
            )
        for op in self.ops:
            state = op.apply(state)
        return state

    def adjoint(self) -> "Circuit":
        return Circuit(self.num_qubits, tuple(op.adjoint() for op in reversed(self.ops)))

    def shifted(self, offset: int, num_qubits: int) -> "Circuit":
        """Embed into a wider state with the circuit's qubit 0 at ``offset``."""
        if offset + self.num_qubits > num_qubits:
            raise LayoutError("shifted circuit does not fit the requested qubit count")
        return Circuit(num_qubits, tuple(op.shifted(offset) for op in self.ops))

    def then(self, other: "Circuit") -> "Circuit":
        if other.num_qubits != self.num_qubits:
            raise LayoutError("cannot chain circuits of different widths")
        return Circuit(self.num_qubits, self.ops + other.ops)


def apply(state: StateVector, *operations: Operation | Circuit) -> StateVector:
    for op in operations:
        state = op.apply(state)
    return state


def apply_adjoint(state: StateVector, operation: Operation | Circuit) -> StateVector:
    """Apply the reversed, conjugate-transposed gate sequence."""
    return operation.adjoint().apply(state)


def apply_hadamard_layer(state: StateVector, register: Register) -> StateVector:
    return HadamardLayer(register).apply(state)


def apply_phase_ladder(
    state: StateVector, register: Register, theta: float, controls: Iterable[int] = ()
) -> StateVector:
    return PhaseLadder(register, theta, tuple(controls)).apply(state)


def apply_qft(state: StateVector, register: Register) -> StateVector:
    return QftGate(register, inverse=False).apply(state)


def apply_qft_inverse(state: StateVector, register: Register) -> StateVector:
    return QftGate(register, inverse=True).apply(state)


def apply_diagonal_phase(state: StateVector, phase_fn: Callable[[int], float]) -> StateVector:
    """Diagonal phase over the full basis: ``|x> -> e^{i phase_fn(x)} |x>``."""
    phases = np.array([phase_fn(x) for x in range(state.dim)], dtype=np.float64)
    return DiagonalPhase(state.whole_register(), phases).apply(state)
