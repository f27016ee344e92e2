"""Command-line front end.

Subcommands: ``encode`` (scalar encodings), ``interpolate`` (readout of a
function state at one point or along a sweep), ``dict`` (key-value
dictionaries from a polynomial file), ``sum`` (weighted sums from a config
file), ``repro`` (the built-in reference cases).

Exit codes: 0 success, 1 reference-case failure, 2 usage/config error,
3 domain/range error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import repro as repro_mod
from .dictionary import apply_f, apply_f_prime, parse_polynomial
from .encoding import encode_value, encode_value_real
from .errors import (
    CapacityError,
    DomainError,
    LayoutError,
    NormalizationError,
    ParseError,
    UndersampledError,
    ValueRangeError,
)
from .kernels import EncodingDomain
from .patterns import (
    WeightSpec,
    direct_weighted_identity_sum,
    direct_weighted_sum,
    generalized_inner_product,
    prepare_amplitudes,
    prepare_lambda,
    prepare_nu2,
    quantum_interpolate,
)
from .sim import RegisterLayout, zero_state
from .stateio import format_value, state_to_json, sweep_to_csv
from .svgchart import render_state_svg

EXIT_OK = 0
EXIT_REPRO_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_DOMAIN_NAMES = {
    "unsigned": EncodingDomain.UNSIGNED,
    "twos": EncodingDomain.TWOS_COMPLEMENT,
    "twos_complement": EncodingDomain.TWOS_COMPLEMENT,
}


def _parse_domain(name: str) -> EncodingDomain:
    return _DOMAIN_NAMES[name]


def _write_output(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_encode(args) -> int:
    domain = _parse_domain(args.domain)
    if args.phase_correct:
        state = encode_value_real(args.value_qubits, args.value, domain)
    else:
        state = encode_value(args.value_qubits, args.value, domain)
    if args.out == "svg":
        _write_output(render_state_svg(state), args.output)
    else:
        _write_output(state_to_json(state), args.output)
    return EXIT_OK


def _load_table_prep(path: str, width: int):
    values = []
    text = Path(path).read_text(encoding="utf-8")
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        values.extend(float(tok) for tok in line.split())
    if len(values) != (1 << width):
        raise ParseError(f"table holds {len(values)} values, expected {1 << width}")
    table = np.asarray(values, dtype=np.float64)
    norm = np.linalg.norm(table)
    if norm == 0:
        raise NormalizationError("table of all zeros cannot be loaded")
    return prepare_amplitudes(table / norm), None


def _interp_source(source: str, width: int):
    """Returns (preparation circuit, exact function or None)."""
    if source == "nu2":
        modulus = 1 << width
        return (
            prepare_nu2(width),
            lambda t: math.sqrt(8.0 / (3.0 * modulus)) * math.sin(t * math.pi / modulus) ** 2,
        )
    if source == "lambda":
        modulus = 1 << width
        norm = math.sqrt(sum(k * k for k in range(1, modulus)))
        return prepare_lambda(width), lambda t: t / norm
    return _load_table_prep(source, width)


def _cmd_interpolate(args) -> int:
    domain = _parse_domain(args.domain)
    prep, exact_fn = _interp_source(args.source, args.value_qubits)
    if args.value is not None:
        result = quantum_interpolate(prep, args.value, domain, exact_fn)
        print(f"t         {format_value(args.value)}")
        print(f"quantum   {format_value(result.quantum_value)}")
        print(f"classical {format_value(result.classical_value)}")
        if result.exact_value is not None:
            print(f"exact     {format_value(result.exact_value)}")
        return EXIT_OK
    if args.t_steps < 1:
        raise ParseError("sweep needs at least one step")
    rows = []
    for i in range(args.t_steps):
        t = args.t_start + i * (args.t_stop - args.t_start) / args.t_steps
        result = quantum_interpolate(prep, t, domain, exact_fn)
        rows.append((t, result.quantum_value, result.classical_value, result.exact_value))
    _write_output(sweep_to_csv(rows), args.csv)
    return EXIT_OK


def _cmd_dict(args) -> int:
    domain = _parse_domain(args.domain)
    poly = parse_polynomial(Path(args.poly_file).read_text(encoding="utf-8"), args.key_qubits)
    layout = RegisterLayout(args.key_qubits, args.value_qubits)
    encode = apply_f_prime if args.prime else apply_f
    result = encode(zero_state(layout.num_qubits), layout, poly, domain)
    if args.out == "svg":
        _write_output(render_state_svg(result.state, layout), args.output)
    else:
        _write_output(state_to_json(result.state, layout), args.output)
    return EXIT_OK


def _parse_config(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        entries[key.strip()] = value.strip()
    return entries


def _config_vector(source: str, length: int, builtins: dict[str, np.ndarray]) -> np.ndarray:
    if source in builtins:
        return builtins[source]
    values = np.array([float(tok) for tok in source.split()], dtype=np.float64)
    if values.size != length:
        raise ParseError(f"expected {length} values, got {values.size}")
    return values


def _load_sum_config(path: str):
    entries = _parse_config(Path(path).read_text(encoding="utf-8"))
    try:
        key_width = int(entries["n"])
        value_width = int(entries["m"])
    except KeyError as exc:
        raise ParseError(f"config is missing required key {exc}") from exc
    except ValueError as exc:
        raise ParseError(f"bad register width: {exc}") from exc
    scale = int(entries.get("scale", "1"))
    domain = _parse_domain(entries.get("domain", "unsigned"))
    n = 1 << key_width
    m = 1 << value_width

    if "poly" in entries and "poly_file" in entries:
        raise ParseError("config sets both 'poly' and 'poly_file'")
    if "poly" in entries:
        poly_text = entries["poly"].replace(";", "\n")
    elif "poly_file" in entries:
        poly_path = Path(entries["poly_file"])
        if not poly_path.is_absolute():
            poly_path = Path(path).parent / poly_path
        poly_text = poly_path.read_text(encoding="utf-8")
    else:
        raise ParseError("config needs 'poly' or 'poly_file'")
    poly = parse_polynomial(poly_text, key_width)

    weight_builtins = {
        "uniform": np.ones(n),
        "sin2": np.sin(np.arange(n) * np.pi / n) ** 2,
    }
    hash_builtins = {
        "identity": np.arange(m, dtype=np.float64),
        "uniform": np.ones(m),
    }
    weights = _config_vector(entries.get("weights", "uniform"), n, weight_builtins)
    hashes = _config_vector(entries.get("hash", "identity"), m, hash_builtins)
    if scale != 1 and entries.get("hash", "identity") != "identity":
        raise ParseError("coefficient scaling is only meaningful with the identity hash")
    return key_width, value_width, scale, domain, poly, weights, hashes


def _cmd_sum(args) -> int:
    key_width, value_width, scale, domain, poly, weights, hashes = _load_sum_config(args.config)
    weight_norm = float(np.linalg.norm(weights))
    hash_norm = float(np.linalg.norm(hashes))
    if weight_norm == 0:
        print("amplitude   0")
        print("sum         0")
        print("classical   0")
        print("abs-error   0")
        return EXIT_OK
    if hash_norm == 0:
        raise NormalizationError("hash table of all zeros cannot be loaded")
    scale_a = 1.0 / weight_norm
    scale_b = 1.0 / hash_norm
    encoded_poly = poly.scaled(scale) if scale != 1 else poly
    amplitude = generalized_inner_product(
        WeightSpec(weights * scale_a, scale_a),
        encoded_poly,
        WeightSpec(hashes * scale_b, scale_b),
        domain,
    )
    total = math.sqrt(weights.size) / (scale_a * scale_b) * amplitude / scale
    if _is_identity_hash(hashes):
        classical = direct_weighted_identity_sum(weights, poly)
    else:
        classical = direct_weighted_sum(weights, poly, hashes)
    print(f"amplitude   {format_value(amplitude)}")
    print(f"sum         {format_value(total)}")
    print(f"classical   {format_value(classical)}")
    print(f"abs-error   {format_value(abs(total - classical))}")
    return EXIT_OK


def _is_identity_hash(hashes: np.ndarray) -> bool:
    return bool(np.array_equal(hashes, np.arange(hashes.size, dtype=np.float64)))


def _cmd_repro(args) -> int:
    results = repro_mod.run_cases(args.filter)
    if not results:
        print(f"no reference cases match filter {args.filter!r}")
        return EXIT_USAGE
    sys.stdout.write(repro_mod.format_report(results))
    if args.artifacts:
        written = repro_mod.write_artifacts(args.artifacts)
        print(f"wrote {len(written)} artifact files to {args.artifacts}")
    if any(r.status == "FAIL" for r in results):
        return EXIT_REPRO_FAILURE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qinterp",
        description="Amplitude encoding, quantum dictionaries, and interpolated readout "
        "on a dense statevector simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    encode = sub.add_parser("encode", help="encode one real value into a register")
    encode.add_argument("-m", "--value-qubits", type=int, required=True)
    encode.add_argument("-t", "--value", type=float, required=True)
    encode.add_argument("--domain", choices=sorted(_DOMAIN_NAMES), default="unsigned")
    encode.add_argument("--phase-correct", action="store_true", help="produce real amplitudes")
    encode.add_argument("--out", choices=["json", "svg"], default="json")
    encode.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    encode.set_defaults(func=_cmd_encode)

    interp = sub.add_parser("interpolate", help="read an encoded function at any point")
    interp.add_argument(
        "--source",
        required=True,
        help="'nu2', 'lambda', or a file of 2^m table values",
    )
    interp.add_argument("-m", "--value-qubits", type=int, required=True)
    interp.add_argument("-t", "--value", type=float, default=None)
    interp.add_argument("--t-start", type=float, default=0.0)
    interp.add_argument("--t-stop", type=float, default=None)
    interp.add_argument("--t-steps", type=int, default=0)
    interp.add_argument("--domain", choices=sorted(_DOMAIN_NAMES), default="unsigned")
    interp.add_argument("--csv", default=None, help="sweep output file (default stdout)")
    interp.set_defaults(func=_cmd_interpolate)

    dict_cmd = sub.add_parser("dict", help="encode a polynomial as key-value pairs")
    dict_cmd.add_argument("poly_file")
    dict_cmd.add_argument("-n", "--key-qubits", type=int, required=True)
    dict_cmd.add_argument("-m", "--value-qubits", type=int, required=True)
    dict_cmd.add_argument("--domain", choices=sorted(_DOMAIN_NAMES), default="unsigned")
    dict_cmd.add_argument("--prime", action="store_true", help="apply the phase correction")
    dict_cmd.add_argument("--out", choices=["json", "svg"], default="json")
    dict_cmd.add_argument("-o", "--output", default=None)
    dict_cmd.set_defaults(func=_cmd_dict)

    sum_cmd = sub.add_parser("sum", help="weighted sum of hashed function values")
    sum_cmd.add_argument("config")
    sum_cmd.set_defaults(func=_cmd_sum)

    repro_cmd = sub.add_parser("repro", help="recompute the built-in reference cases")
    repro_cmd.add_argument("--filter", default=None, help="glob over case ids")
    repro_cmd.add_argument("--artifacts", default=None, help="directory for charts and sweeps")
    repro_cmd.set_defaults(func=_cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "interpolate" and args.value is None:
            if args.t_stop is None:
                parser.error("interpolate needs -t or a --t-start/--t-stop/--t-steps sweep")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        DomainError,
        ValueRangeError,
        CapacityError,
        UndersampledError,
        LayoutError,
        NormalizationError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
