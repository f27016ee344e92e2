"""Quantum multi-value dictionaries.

A real-valued function on ``{0..N-1}`` is represented as a polynomial of
binary variables (one coefficient per subset of variables) and written into
an entangled key-value state: each key ``k`` carries the scalar encoding of
``f(k)`` in its value register.  The phase-corrected variant leaves every
value slice with real amplitudes.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ParseError, ValueRangeError
from .kernels import INTEGER_TOLERANCE, EncodingDomain, normalize_to_domain
from .sim import (
    Circuit,
    ControlledPhase,
    DiagonalPhase,
    HadamardLayer,
    PhaseLadder,
    QftGate,
    RegisterLayout,
    StateVector,
)

_TERM_RE = re.compile(r"^k(\d+)$")


@dataclass(frozen=True)
class BinaryPolynomial:
    """Sum of monomials ``c_J * prod_{j in J} k_j`` over binary variables.

    ``terms`` maps the variable subset J, stored as a bitmask (bit j set means
    variable ``k_j`` participates, and ``k_j`` is bit j of the key), to its
    real coefficient.
    """

    num_vars: int
    terms: dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.num_vars < 1:
            raise DomainError("polynomial needs at least one variable")
        for mask in self.terms:
            if not 0 <= mask < (1 << self.num_vars):
                raise DomainError(f"term mask {mask} outside {self.num_vars} variables")
        object.__setattr__(self, "terms", {int(m): float(c) for m, c in self.terms.items()})

    @property
    def num_keys(self) -> int:
        return 1 << self.num_vars

    def evaluate(self, k: int) -> float:
        """Sum of the coefficients whose variable subset is covered by ``k``'s bits."""
        if not 0 <= k < self.num_keys:
            raise DomainError(f"key {k} outside [0, {self.num_keys})")
        return float(sum(c for mask, c in self.terms.items() if mask & ~k == 0))

    def values_table(self) -> np.ndarray:
        return np.array([self.evaluate(k) for k in range(self.num_keys)])

    def scaled(self, factor: float) -> "BinaryPolynomial":
        return BinaryPolynomial(self.num_vars, {m: c * factor for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[int, float]]:
        return sorted(self.terms.items())


def polynomial_from_table(values) -> BinaryPolynomial:
    """Interpolating polynomial of a full value table (length a power of two).

    Inverts the subset-sum relation with the Moebius transform over the
    subset lattice, so ``evaluate`` reproduces the table entries.
    """
    table = np.asarray(values, dtype=np.float64)
    n = int(math.log2(table.size)) if table.size > 0 else 0
    if table.size < 2 or (1 << n) != table.size:
        raise DomainError(f"table length {table.size} is not a power of two >= 2")
    coeffs = table.copy()
    for j in range(n):
        bit = 1 << j
        for mask in range(table.size):
            if mask & bit:
                coeffs[mask] -= coeffs[mask ^ bit]
    terms = {mask: float(c) for mask, c in enumerate(coeffs) if c != 0.0}
    if not terms:
        terms = {0: 0.0}
    return BinaryPolynomial(n, terms)


def parse_polynomial(text: str, num_vars: int | None = None) -> BinaryPolynomial:
    """Parse the one-term-per-line format ``<coefficient>: <term>``.

    A term is ``1`` for the constant or ``*``-joined variables like
    ``k0*k2``; ``#`` starts a comment.  Repeated terms accumulate.
    """
    terms: dict[int, float] = {}
    max_var = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: expected '<coefficient>: <term>', got {raw!r}")
        coef_part, term_part = line.split(":", 1)
        try:
            coef = float(coef_part.strip())
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad coefficient {coef_part.strip()!r}") from exc
        term_part = term_part.strip()
        mask = 0
        if term_part != "1":
            for factor in term_part.split("*"):
                match = _TERM_RE.match(factor.strip())
                if not match:
                    raise ParseError(f"line {lineno}: bad term factor {factor.strip()!r}")
                var = int(match.group(1))
                mask |= 1 << var
                max_var = max(max_var, var)
        terms[mask] = terms.get(mask, 0.0) + coef
    if not terms:
        raise ParseError("no polynomial terms found")
    inferred = max(max_var + 1, 1)
    if num_vars is None:
        num_vars = inferred
    elif num_vars < inferred:
        raise ParseError(f"term uses variable k{max_var} but only {num_vars} variables declared")
    return BinaryPolynomial(num_vars, terms)


def format_polynomial(poly: BinaryPolynomial) -> str:
    """Inverse of :func:`parse_polynomial`, terms ordered by mask."""
    lines = []
    for mask, coef in poly.sorted_terms():
        if mask == 0:
            term = "1"
        else:
            term = "*".join(f"k{j}" for j in range(poly.num_vars) if mask & (1 << j))
        lines.append(f"{coef!r}: {term}")
    return "\n".join(lines) + "\n"


def validate_values(poly: BinaryPolynomial, value_width: int, domain: EncodingDomain):
    """Reject values whose encoding would alias across the domain boundary.

    Non-integer values must sit strictly inside the declared domain; integer
    values are exact and may use the full unsigned range either way.
    """
    modulus = 1 << value_width
    for k in range(poly.num_keys):
        value = poly.evaluate(k)
        is_integer = abs(value - round(value)) < INTEGER_TOLERANCE
        if is_integer and 0 <= value < modulus:
            continue
        try:
            normalize_to_domain(value, domain, modulus)
        except DomainError as exc:
            raise ValueRangeError(
                f"value {value} at key {k} would alias in a {value_width}-qubit register: {exc}"
            ) from exc


@dataclass(frozen=True, eq=False)
class DictionaryState:
    """Entangled key-value state together with its register layout."""

    layout: RegisterLayout
    state: StateVector

    def conditional_value_amplitudes(self, key: int) -> np.ndarray:
        """Raw value-register slice of one key (not renormalized)."""
        m = self.layout.num_values
        return self.state.amplitudes[key * m : (key + 1) * m].copy()

    def conditional_value_state(self, key: int) -> np.ndarray:
        """Renormalized value-register state conditioned on the key."""
        slice_ = self.conditional_value_amplitudes(key)
        norm = np.linalg.norm(slice_)
        if norm == 0:
            raise DomainError(f"key {key} has zero probability")
        return slice_ / norm

    def key_probabilities(self) -> np.ndarray:
        probs = self.state.probabilities()
        return probs.reshape(self.layout.num_keys, self.layout.num_values).sum(axis=1)


def _encoding_ladders(layout: RegisterLayout, poly: BinaryPolynomial) -> list[PhaseLadder]:
    modulus = layout.num_values
    value_reg = layout.value_register
    key_offset = layout.key_register.offset
    ladders = []
    for mask, coef in poly.sorted_terms():
        controls = tuple(key_offset + j for j in range(poly.num_vars) if mask & (1 << j))
        ladders.append(PhaseLadder(value_reg, 2.0 * math.pi * coef / modulus, controls))
    return ladders


def _wrap_compensation(layout: RegisterLayout, poly: BinaryPolynomial) -> DiagonalPhase | None:
    """Sign fix for values that the domain mapping shifts by M.

    The kernel is anti-periodic in its target (period M flips the sign), so
    keys whose raw value is negative would come out with flipped real
    amplitudes if the correction used the raw value alone.  A diagonal pi
    phase on those keys restores the normalized-kernel sign.
    """
    modulus = layout.num_values
    phases = np.zeros(layout.num_keys)
    for k in range(layout.num_keys):
        raw = poly.evaluate(k)
        wraps = round(((raw % modulus) - raw) / modulus)
        phases[k] = math.pi * wraps
    if not phases.any():
        return None
    return DiagonalPhase(layout.key_register, phases)


def dictionary_circuit(
    layout: RegisterLayout,
    poly: BinaryPolynomial,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
    phase_corrected: bool = False,
    prepare_keys: bool = True,
) -> Circuit:
    """The key-value encoder: controlled phase ladders between two registers.

    With ``prepare_keys`` the key register is brought into equal superposition
    first (the from-zero form); without it the caller supplies the key
    superposition and only the value register is prepared.  The
    phase-corrected form appends the correction: a value-register ladder, one
    controlled phase per monomial, and (two's complement only) the per-key
    wrap compensation.
    """
    if poly.num_vars != layout.key_width:
        raise DomainError(
            f"polynomial over {poly.num_vars} variables does not match key width {layout.key_width}"
        )
    validate_values(poly, layout.value_width, domain)
    modulus = layout.num_values
    ops: list = []
    if prepare_keys:
        ops.append(HadamardLayer(layout.key_register))
    ops.append(HadamardLayer(layout.value_register))
    ops.extend(_encoding_ladders(layout, poly))
    ops.append(QftGate(layout.value_register, inverse=True))
    if phase_corrected:
        m_minus_1 = modulus - 1
        ops.append(PhaseLadder(layout.value_register, math.pi * m_minus_1 / modulus))
        key_offset = layout.key_register.offset
        for mask, coef in poly.sorted_terms():
            controls = tuple(key_offset + j for j in range(poly.num_vars) if mask & (1 << j))
            ops.append(ControlledPhase(controls, -math.pi * m_minus_1 * coef / modulus))
        compensation = _wrap_compensation(layout, poly)
        if compensation is not None:
            ops.append(compensation)
    return Circuit(layout.num_qubits, tuple(ops))


def _from_zero(state: StateVector) -> bool:
    return abs(state.amplitude(0) - 1.0) < 1e-12


def apply_dictionary(
    state: StateVector,
    layout: RegisterLayout,
    poly: BinaryPolynomial,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
    phase_corrected: bool = False,
    prepare_keys: bool | None = None,
) -> DictionaryState:
    """Encode the polynomial into ``state``.

    ``state`` must be the all-zeros state or a key superposition with the
    value register zeroed.  When ``prepare_keys`` is not given, the key
    Hadamards are included exactly when the input is the all-zeros state.
    """
    if prepare_keys is None:
        prepare_keys = _from_zero(state)
    circuit = dictionary_circuit(layout, poly, domain, phase_corrected, prepare_keys)
    return DictionaryState(layout, circuit.apply(state))


def apply_f(
    state: StateVector,
    layout: RegisterLayout,
    poly: BinaryPolynomial,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
    prepare_keys: bool | None = None,
) -> DictionaryState:
    """Key-value encoding with residual phases left in place."""
    return apply_dictionary(state, layout, poly, domain, False, prepare_keys)


def apply_f_prime(
    state: StateVector,
    layout: RegisterLayout,
    poly: BinaryPolynomial,
    domain: EncodingDomain = EncodingDomain.UNSIGNED,
    prepare_keys: bool | None = None,
) -> DictionaryState:
    """Phase-corrected key-value encoding: every value slice has real amplitudes."""
    return apply_dictionary(state, layout, poly, domain, True, prepare_keys)
