"""Built-in reference cases and the regression runner behind ``qinterp repro``.

Each case recomputes one reference number and compares it against the
expected value at a fixed tolerance.  Cases tagged ``reported`` carry values
published for this method; ``derived`` cases are frozen outputs of the
classical oracles in this repository.  Informational rows (hardware
measurements, an ambiguous scaled-integer variant) are printed for reference
and never asserted.
"""

from __future__ import annotations

import fnmatch
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from . import patterns, stateio, svgchart
from .dictionary import BinaryPolynomial, apply_f, apply_f_prime
from .encoding import encode_value, encode_value_real
from .kernels import EncodingDomain, SampledSignal, classical_interpolate
from .patterns import (
    WeightSpec,
    direct_weighted_identity_sum,
    expected_value,
    generalized_inner_product,
    kernel_double_sum,
    prepare_lambda,
    prepare_nu2,
    quantum_interpolate,
)
from .sim import HadamardLayer, RegisterLayout, StatePrep, zero_state

# Three-variable demo polynomial of the reference weighted-sum cases.
# Variable bit assignment chosen so the published sums reproduce exactly.
DEMO_POLY = BinaryPolynomial(3, {0b000: 0.725, 0b010: 2.451, 0b100: 2.716, 0b101: 1.321})

# Same polynomial with coefficients scaled by 100 and rounded up to integers;
# the constant rounds ambiguously (72.5), the reference value matches 73.
DEMO_POLY_INT100 = BinaryPolynomial(3, {0b000: 73, 0b010: 245, 0b100: 272, 0b101: 132})


def _demo_weights() -> np.ndarray:
    return np.sin(np.arange(8) * np.pi / 8) ** 2


@dataclass(frozen=True)
class ReproCase:
    """One reference computation: recompute, compare, report."""

    case_id: str
    description: str
    run: Callable[[], float]
    expected: float
    tolerance: float | None
    provenance: str
    asserted: bool = True
    note: str = ""


@dataclass(frozen=True)
class ReproResult:
    case: ReproCase
    actual: float

    @property
    def delta(self) -> float:
        return abs(self.actual - self.case.expected)

    @property
    def status(self) -> str:
        if not self.case.asserted:
            return "REF"
        return "PASS" if self.delta <= (self.case.tolerance or 0.0) else "FAIL"


def _interp_nu2() -> patterns.InterpolationResult:
    return quantum_interpolate(prepare_nu2(6), 44.8)


def _interp_lambda() -> patterns.InterpolationResult:
    return quantum_interpolate(prepare_lambda(6), 44.8)


def _weighted_amplitude() -> float:
    w = _demo_weights()
    h = np.arange(16, dtype=np.float64)
    a = 1.0 / float(np.linalg.norm(w))
    b = 1.0 / float(np.linalg.norm(h))
    return generalized_inner_product(WeightSpec(w * a, a), DEMO_POLY, WeightSpec(h * b, b))


def _weighted_amplitude_oracle_gap() -> float:
    w = _demo_weights()
    h = np.arange(16, dtype=np.float64)
    a = 1.0 / float(np.linalg.norm(w))
    b = 1.0 / float(np.linalg.norm(h))
    quantum = _weighted_amplitude()
    classical = kernel_double_sum(w * a, DEMO_POLY, h * b)
    return abs(quantum - classical)


def _recon_sin_worst() -> float:
    xs = np.arange(8) * (2.0 * math.pi / 8)
    signal = SampledSignal(np.sin(xs), 2.0 * math.pi)
    grid = (np.arange(97) + 0.3) * (2.0 * math.pi / 98)
    return max(abs(classical_interpolate(signal, t) - math.sin(t)) for t in grid)


def build_cases() -> list[ReproCase]:
    lambda_norm = math.sqrt(sum(k * k for k in range(1, 64)))
    cases = [
        ReproCase(
            "encode-integer",
            "m=3, t=4: single certain outcome",
            lambda: encode_value(3, 4).probability(4),
            1.0,
            1e-12,
            "reported",
        ),
        ReproCase(
            "encode-negative",
            "m=3, t=-4 two's complement lands on outcome 4",
            lambda: encode_value(3, -4, EncodingDomain.TWOS_COMPLEMENT).probability(4),
            1.0,
            1e-12,
            "reported",
        ),
        ReproCase(
            "encode-half-split",
            "m=3, t=4.5: outcomes 4 and 5 equally likely",
            lambda: abs(encode_value(3, 4.5).probability(4) - encode_value(3, 4.5).probability(5)),
            0.0,
            1e-12,
            "reported",
        ),
        ReproCase(
            "encode-mass-2p7",
            "m=3, t=2.7: probability mass on the two nearest integers",
            lambda: encode_value(3, 2.7).probability(2) + encode_value(3, 2.7).probability(3),
            0.8790570616660788,
            1e-9,
            "derived",
        ),
        ReproCase(
            "interp-nu2",
            "squared-sine state, m=6, t=44.8: readout amplitude",
            lambda: _interp_nu2().quantum_value,
            0.1336,
            5e-4,
            "reported",
        ),
        ReproCase(
            "interp-nu2-vs-classical",
            "same readout against the kernel-sum oracle",
            lambda: _interp_nu2().deviation,
            0.0,
            1e-9,
            "derived",
        ),
        ReproCase(
            "interp-lambda-classical",
            "identity state, m=6, t=44.8: kernel-sum value",
            lambda: _interp_lambda().classical_value,
            0.1546,
            5e-4,
            "reported",
        ),
        ReproCase(
            "interp-lambda-vs-classical",
            "exact-loader readout equals the kernel sum",
            lambda: _interp_lambda().deviation,
            0.0,
            1e-9,
            "derived",
        ),
        ReproCase(
            "interp-lambda-heuristic-gap",
            "exact-loader readout near the published heuristic-loader 0.1533",
            lambda: _interp_lambda().quantum_value,
            0.1533,
            2e-3,
            "reported",
            note="tolerance widened: the published run used a heuristic state loader",
        ),
        ReproCase(
            "lambda-normalization",
            "normalization factor sqrt(sum k^2) for m=6",
            lambda: math.sqrt(sum(k * k for k in range(1, 64))),
            292.137,
            1e-3,
            "reported",
        ),
        ReproCase(
            "weighted-amplitude-m4",
            "n=3, m=4 weighted inner product: all-zeros amplitude",
            _weighted_amplitude,
            0.0879,
            1e-3,
            "reported",
        ),
        ReproCase(
            "weighted-amplitude-oracle",
            "same amplitude against the kernel double-sum oracle",
            _weighted_amplitude_oracle_gap,
            0.0,
            1e-9,
            "derived",
        ),
        ReproCase(
            "weighted-sum-m4",
            "n=3, m=4 rescaled weighted sum",
            lambda: expected_value(_demo_weights(), DEMO_POLY, 3, 4),
            15.1555,
            0.2,
            "reported",
        ),
        ReproCase(
            "weighted-sum-direct",
            "classical direct weighted sum of the demo polynomial",
            lambda: direct_weighted_identity_sum(_demo_weights(), DEMO_POLY),
            15.9130,
            1e-3,
            "reported",
        ),
        ReproCase(
            "weighted-sum-m10-scale64",
            "m=10 value register, coefficients scaled by 64",
            lambda: expected_value(_demo_weights(), DEMO_POLY, 3, 10, scale=64),
            15.9186,
            5e-2,
            "reported",
        ),
        ReproCase(
            "recon-sin-8-samples",
            "sine from 8 samples: worst reconstruction error on a grid",
            _recon_sin_worst,
            0.0,
            1e-9,
            "derived",
        ),
        ReproCase(
            "ref-denormalized-readout",
            "m=6, t=44.8 readout rescaled by the normalization factor",
            lambda: _interp_lambda().quantum_value * lambda_norm,
            44.79,
            None,
            "reported",
            asserted=False,
            note="reference only: published value stems from the heuristic loader (0.1533)",
        ),
        ReproCase(
            "ref-integer-scaled-sum",
            "integer coefficients x100 in a 10-qubit register, sum / 100",
            lambda: expected_value(_demo_weights(), DEMO_POLY_INT100, 3, 10) / 100.0,
            15.94,
            None,
            "reported",
            asserted=False,
            note="reference only: the x100 coefficient rounding is ambiguous (constant 72 vs 73)",
        ),
        ReproCase(
            "ref-hardware-7q-average",
            "published 7-qubit hardware average for the m=6 squared-sine readout",
            lambda: _interp_nu2().quantum_value,
            0.1369,
            None,
            "reported",
            asserted=False,
            note="reference only: hardware noise is out of scope for this simulator",
        ),
        ReproCase(
            "ref-hardware-7q-best",
            "published 7-qubit hardware best run",
            lambda: _interp_nu2().quantum_value,
            0.1342,
            None,
            "reported",
            asserted=False,
            note="reference only: hardware noise is out of scope for this simulator",
        ),
        ReproCase(
            "ref-hardware-16q-average",
            "published 16-qubit hardware average for the m=6 identity readout",
            lambda: _interp_lambda().quantum_value,
            0.1347,
            None,
            "reported",
            asserted=False,
            note="reference only: hardware noise is out of scope for this simulator",
        ),
        ReproCase(
            "ref-hardware-16q-best",
            "published 16-qubit hardware best run",
            lambda: _interp_lambda().quantum_value,
            0.1541,
            None,
            "reported",
            asserted=False,
            note="reference only: hardware noise is out of scope for this simulator",
        ),
    ]
    return cases


def run_cases(filter_glob: str | None = None) -> list[ReproResult]:
    cases = build_cases()
    if filter_glob:
        cases = [c for c in cases if fnmatch.fnmatch(c.case_id, filter_glob)]
    results = [ReproResult(case, float(case.run())) for case in cases]
    results.sort(key=lambda r: r.case.case_id)
    return results


def format_report(results: list[ReproResult]) -> str:
    header = f"{'case':34} {'expected':>14} {'actual':>14} {'|delta|':>12} {'tol':>9} {'status':>6}"
    lines = [header, "-" * len(header)]
    for r in results:
        tol = f"{r.case.tolerance:.1e}" if r.case.tolerance is not None else "-"
        lines.append(
            f"{r.case.case_id:34} {r.case.expected:>14.9g} {r.actual:>14.9g} "
            f"{r.delta:>12.3e} {tol:>9} {r.status:>6}"
        )
        if r.case.note:
            lines.append(f"{'':34}   {r.case.note}")
    counts = {"PASS": 0, "FAIL": 0, "REF": 0}
    for r in results:
        counts[r.status] += 1
    lines.append("-" * len(header))
    lines.append(f"{counts['PASS']} passed, {counts['FAIL']} failed, {counts['REF']} reference-only")
    return "\n".join(lines) + "\n"


def _interp_sweep(prep, exact_fn, width: int) -> list[tuple[float, float, float, float | None]]:
    modulus = 1 << width
    rows = []
    for i in range(4 * modulus):
        t = i / 4.0
        result = quantum_interpolate(prep, t, exact_fn=exact_fn)
        rows.append((t, result.quantum_value, result.classical_value, result.exact_value))
    return rows


def _reconstruction_table(fn, num_samples: int, period: float, grid: int):
    xs = np.arange(num_samples) * (period / num_samples)
    signal = SampledSignal(fn(xs), period)
    rows = []
    for i in range(grid):
        t = i * period / grid
        recon = classical_interpolate(signal, t)
        exact = float(fn(np.array([t]))[0])
        rows.append([t, exact, recon, abs(recon - exact)])
    return rows


def write_artifacts(directory: str | Path) -> list[Path]:
    """Regenerate the chart and sweep files for all showcase states."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, text: str):
        path = out / name
        path.write_text(text, encoding="utf-8")
        written.append(path)

    for tag, t in (("int", 4.0), ("frac", 2.7), ("half", 4.5)):
        emit(f"encode_{tag}.svg", svgchart.render_state_svg(encode_value(3, t)))
        emit(f"encode_{tag}_real.svg", svgchart.render_state_svg(encode_value_real(3, t)))

    linear_poly = BinaryPolynomial(2, {0: 1.2, 1: 0.4, 2: 0.8})
    layout = RegisterLayout(2, 3)
    emit(
        "dict_linear.svg",
        svgchart.render_state_svg(apply_f(zero_state(5), layout, linear_poly).state, layout),
    )
    emit(
        "dict_linear_real.svg",
        svgchart.render_state_svg(apply_f_prime(zero_state(5), layout, linear_poly).state, layout),
    )

    demo_layout = RegisterLayout(3, 4)
    state = zero_state(7)
    state = StatePrep(demo_layout.key_register, patterns.nu2_amplitudes(3)).apply(state)
    weighted = apply_f_prime(state, demo_layout, DEMO_POLY).state
    emit("dict_weighted_keys.svg", svgchart.render_state_svg(weighted, demo_layout))

    value_profile = zero_state(7)
    value_profile = HadamardLayer(demo_layout.key_register).apply(value_profile)
    value_profile = StatePrep(demo_layout.value_register, patterns.lambda_amplitudes(4)).apply(
        value_profile
    )
    emit("value_weight_profile.svg", svgchart.render_state_svg(value_profile, demo_layout))

    emit(
        "sweep_nu2.csv",
        stateio.sweep_to_csv(
            _interp_sweep(
                prepare_nu2(6),
                lambda t: math.sqrt(8.0 / (3.0 * 64)) * math.sin(t * math.pi / 64) ** 2,
                6,
            )
        ),
    )
    emit(
        "sweep_lambda.csv",
        stateio.sweep_to_csv(
            _interp_sweep(
                prepare_lambda(6),
                lambda t: t / math.sqrt(sum(k * k for k in range(1, 64))),
                6,
            )
        ),
    )

    header = ["t", "exact", "reconstructed", "abs_error"]
    emit(
        "recon_sin.csv",
        stateio.table_to_csv(header, _reconstruction_table(np.sin, 8, 2 * math.pi, 256)),
    )
    emit(
        "recon_sin2.csv",
        stateio.table_to_csv(
            header, _reconstruction_table(lambda x: np.sin(x) ** 2, 8, 2 * math.pi, 256)
        ),
    )
    emit(
        "recon_linear.csv",
        stateio.table_to_csv(header, _reconstruction_table(lambda x: x, 32, 1.0, 256)),
    )
    emit(
        "recon_exp.csv",
        stateio.table_to_csv(header, _reconstruction_table(np.exp, 32, 1.0, 256)),
    )
    return written
