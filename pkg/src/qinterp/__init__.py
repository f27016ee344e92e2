"""Fejér-kernel amplitude encoding and interpolated readout on a dense simulator."""

from .errors import (
    CapacityError,
    DomainError,
    LayoutError,
    NormalizationError,
    ParseError,
    QInterpError,
    UndersampledError,
    ValueRangeError,
)
from .kernels import (
    EncodingDomain,
    FejerKernelSpec,
    FourierSpectrum,
    SampledSignal,
    classical_interpolate,
    dft,
    dft_matrix,
    fejer_kernel,
    fejer_kernel_row,
    fourier_coefficients,
    normalize_to_domain,
)
from .sim import (
    MAX_QUBITS,
    BasisOutcome,
    Circuit,
    ControlledPhase,
    DiagonalPhase,
    HadamardLayer,
    PhaseLadder,
    QftGate,
    Register,
    RegisterLayout,
    StatePrep,
    StateVector,
    apply,
    apply_adjoint,
    apply_diagonal_phase,
    apply_hadamard_layer,
    apply_phase_ladder,
    apply_qft,
    apply_qft_inverse,
    zero_state,
)
from .encoding import (
    ValueEncoding,
    apply_phase_correction,
    encode_geometric,
    encode_value,
    encode_value_real,
    phase_correction_circuit,
    real_encoding_circuit,
    value_encoding_circuit,
)
from .dictionary import (
    BinaryPolynomial,
    DictionaryState,
    apply_f,
    apply_f_prime,
    dictionary_circuit,
    format_polynomial,
    parse_polynomial,
    polynomial_from_table,
    validate_values,
)
from .patterns import (
    InterpolationResult,
    WeightSpec,
    direct_weighted_identity_sum,
    direct_weighted_sum,
    expected_value,
    generalized_inner_product,
    kernel_double_sum,
    lambda_amplitudes,
    nu2_amplitudes,
    prepare_amplitudes,
    prepare_lambda,
    prepare_nu2,
    quantum_interpolate,
    weighted_sum,
)

__version__ = "0.1.0"
