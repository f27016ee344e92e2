"""Interpolated readout patterns.

Two readout schemes built on the encoders:

* scalar interpolation -- overlap of a function state with the real-amplitude
  kernel state, read as the all-zeros amplitude after undoing the function
  preparation;
* generalized inner products -- a weighted key register, the phase-corrected
  dictionary, and an undone value-register weight state; the all-zeros
  amplitude equals a kernel-weighted double sum, which rescales to weighted
  sums of hashed function values.

Every quantum number here has a classical companion computed directly from
the kernel rows.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .dictionary import BinaryPolynomial, dictionary_circuit
from .encoding import real_encoding_circuit
from .errors import DomainError, NormalizationError
from .kernels import EncodingDomain, fejer_kernel_row, normalize_to_domain
from .sim import Circuit, HadamardLayer, Register, RegisterLayout, StatePrep, zero_state

IMAG_WARNING_THRESHOLD = 1e-8


@dataclass(frozen=True, eq=False)
class WeightSpec:
    """A normalized weight state plus the factor linking it to raw weights.

    ``amplitudes[k] = common_factor * weight_k``; the amplitude vector itself
    is the unit-norm state loaded into a register.
    """

    amplitudes: np.ndarray
    common_factor: float

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.float64)
        n = amps.size
        if n < 2 or (n & (n - 1)) != 0:
            raise DomainError(f"weight vector length {n} is not a power of two >= 2")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-12:
            raise NormalizationError(f"weight state norm {norm} is not 1")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_weights(cls, weights) -> "WeightSpec":
        """Normalize raw weights; the common factor is 1 over their norm."""
        w = np.asarray(weights, dtype=np.float64)
        norm = np.linalg.norm(w)
        if norm == 0:
            raise NormalizationError("weight vector is all zeros")
        return cls(w / norm, 1.0 / norm)

    @property
    def num_qubits(self) -> int:
        return int(self.amplitudes.size).bit_length() - 1

    def raw_weights(self) -> np.ndarray:
        return self.amplitudes / self.common_factor


@dataclass(frozen=True)
class InterpolationResult:
    """Quantum readout next to its classical companions."""

    quantum_value: float
    classical_value: float
    exact_value: float | None = None

    @property
    def deviation(self) -> float:
        return abs(self.quantum_value - self.classical_value)


def _real_amplitude(amplitude: complex, label: str) -> float:
    if abs(amplitude.imag) > IMAG_WARNING_THRESHOLD:
        warnings.warn(
            f"{label} has imaginary part {amplitude.imag:.3e}; "
            "phase correction may be broken",
            stacklevel=3,
        )
    return float(amplitude.real)


def prepare_amplitudes(target) -> Circuit:
    """Exact loader for an arbitrary unit vector of power-of-two length."""
    amps = np.asarray(target, dtype=np.complex128)
    n = amps.size
    if n < 2 or (n & (n - 1)) != 0:
        raise DomainError(f"target length {n} is not a power of two >= 2")
    width = n.bit_length() - 1
    return Circuit(width, (StatePrep(Register(0, width), amps),))


def nu2_amplitudes(width: int) -> np.ndarray:
    """Squared-sine profile ``sqrt(8 / 3M) sin^2(k pi / M)``, normalized.

    The closed-form constant is exact for M >= 4; for M = 2 the profile is
    normalized explicitly.
    """
    modulus = 1 << width
    profile = np.sqrt(8.0 / (3.0 * modulus)) * np.sin(np.arange(modulus) * np.pi / modulus) ** 2
    return profile / np.linalg.norm(profile)


def lambda_amplitudes(width: int) -> np.ndarray:
    """Normalized identity profile ``k / sqrt(sum j^2)``."""
    modulus = 1 << width
    ks = np.arange(modulus, dtype=np.float64)
    return ks / np.linalg.norm(ks)


def prepare_nu2(width: int) -> Circuit:
    """Loader for the squared-sine (normal-approximation) state."""
    return prepare_amplitudes(nu2_amplitudes(width))


def prepare_lambda(width: int) -> Circuit:
    """Loader for the normalized identity-function state."""
    return prepare_amplitudes(lambda_amplitudes(width))


def quantum_interpolate(
    function_prep: Circuit,
    t: float,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
    exact_fn: Callable[[float], float] | None = None,
) -> InterpolationResult:
    """Interpolate the encoded function at ``t`` via a state overlap.

    The quantum value is the real part of the all-zeros amplitude after
    encoding ``t`` and undoing the function preparation; the classical value
    is the kernel-weighted sum of the function samples read from the
    preparation itself.
    """
    width = function_prep.num_qubits
    modulus = 1 << width
    target = normalize_to_domain(t, domain, modulus)

    samples = function_prep.apply(zero_state(width)).amplitudes
    if np.max(np.abs(samples.imag)) > IMAG_WARNING_THRESHOLD:
        warnings.warn("function preparation yields non-real amplitudes", stacklevel=2)
    classical = float(np.dot(samples.real, fejer_kernel_row(modulus, target)))

    state = real_encoding_circuit(width, t, domain).apply(zero_state(width))
    state = function_prep.adjoint().apply(state)
    quantum = _real_amplitude(state.amplitude(0), "interpolation amplitude")

    exact = float(exact_fn(t)) if exact_fn is not None else None
    return InterpolationResult(quantum, classical, exact)


def generalized_inner_product(
    key_weights: WeightSpec,
    poly: BinaryPolynomial,
    value_weights: WeightSpec,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
) -> float:
    """All-zeros amplitude of the weighted, phase-corrected dictionary pipeline.

    Simulates: load key weights, apply the phase-corrected dictionary, then
    Hadamards on the keys and the inverse value-weight loader.  The result
    equals ``(1/sqrt(N)) sum_k a_k sum_v b_v c(v)`` with ``c`` the kernel row
    of ``f(k)``.
    """
    layout = RegisterLayout(key_weights.num_qubits, value_weights.num_qubits)
    state = zero_state(layout.num_qubits)
    state = StatePrep(layout.key_register, key_weights.amplitudes).apply(state)
    circuit = dictionary_circuit(layout, poly, domain, phase_corrected=True, prepare_keys=False)
    state = circuit.apply(state)
    state = HadamardLayer(layout.key_register).apply(state)
    state = StatePrep(layout.value_register, value_weights.amplitudes).adjoint().apply(state)
    return _real_amplitude(state.amplitude(0), "inner-product amplitude")


def kernel_double_sum(
    key_amplitudes,
    poly: BinaryPolynomial,
    value_amplitudes,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
) -> float:
    """Classical oracle for :func:`generalized_inner_product`.

    Direct evaluation of ``(1/sqrt(N)) sum_k a_k sum_v b_v c_{M,f(k)}(v)``
    with the kernel row computed per key; no simulation involved.
    """
    a = np.asarray(key_amplitudes, dtype=np.float64)
    b = np.asarray(value_amplitudes, dtype=np.float64)
    modulus = b.size
    total = 0.0
    for k in range(a.size):
        target = normalize_to_domain(poly.evaluate(k), domain, modulus)
        total += a[k] * float(np.dot(b, fejer_kernel_row(modulus, target)))
    return total / math.sqrt(a.size)


def weighted_sum(
    weights,
    poly: BinaryPolynomial,
    hash_values,
    scale_a: float,
    scale_b: float,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
) -> float:
    """Weighted sum of hashed function values, ``sum_k w_k h(f(k))``.

    ``scale_a * weights`` and ``scale_b * hash_values`` must be unit vectors;
    the returned value rescales the all-zeros amplitude by
    ``sqrt(N) / (scale_a * scale_b)``.
    """
    w = np.asarray(weights, dtype=np.float64)
    h = np.asarray(hash_values, dtype=np.float64)
    key_spec = WeightSpec(w * scale_a, scale_a)
    value_spec = WeightSpec(h * scale_b, scale_b)
    amplitude = generalized_inner_product(key_spec, poly, value_spec, domain)
    return math.sqrt(w.size) / (scale_a * scale_b) * amplitude


def direct_weighted_sum(weights, poly: BinaryPolynomial, hash_values) -> float:
    """Straight classical evaluation of ``sum_k w_k h(f(k))``.

    Hash values are looked up at the rounded function value; intended for
    integer-valued or near-integer polynomials where the hash table is
    meaningful pointwise.
    """
    w = np.asarray(weights, dtype=np.float64)
    h = np.asarray(hash_values, dtype=np.float64)
    total = 0.0
    for k in range(w.size):
        value = poly.evaluate(k)
        index = int(round(value)) % h.size
        total += w[k] * h[index]
    return total


def direct_weighted_identity_sum(weights, poly: BinaryPolynomial) -> float:
    """Classical ``sum_k w_k f(k)`` for the identity hash (any real values)."""
    w = np.asarray(weights, dtype=np.float64)
    return float(np.dot(w, poly.values_table()))


def expected_value(
    weights,
    poly: BinaryPolynomial,
    key_width: int,
    value_width: int,
    scale: int = 1,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
) -> float:
    """Weighted sum specialized to the identity hash, with optional scaling.

    With ``scale > 1`` the polynomial coefficients are multiplied by ``scale``
    before encoding (buying precision from a wider value register) and the
    recovered sum is divided by ``scale`` again; this presumes the identity
    hash, which is linear.
    """
    w = np.asarray(weights, dtype=np.float64)
    if w.size != (1 << key_width):
        raise DomainError(f"expected {1 << key_width} weights, got {w.size}")
    if scale < 1 or int(scale) != scale:
        raise DomainError("scale must be a positive integer")
    modulus = 1 << value_width
    hash_values = np.arange(modulus, dtype=np.float64)
    scale_a = 1.0 / float(np.linalg.norm(w))
    scale_b = 1.0 / float(np.linalg.norm(hash_values))
    encoded_poly = poly.scaled(scale) if scale != 1 else poly
    total = weighted_sum(w, encoded_poly, hash_values, scale_a, scale_b, domain)
    return total / scale
