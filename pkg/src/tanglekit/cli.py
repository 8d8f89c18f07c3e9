"""Command-line front end for state generation, measures, and identity checks.

    tanglekit gen KIND N [--seed S] [--out PATH]
    tanglekit measure STATE.json [--tangle3] [--tangle4] [--negativity P]
                                 [--kway P,K] [--fonts P] [--all]
    tanglekit check STATE.json [--decomposition] [--product-identity]
                               [--covariance Q,RE,IM] [--lu-sweep TRIALS,SEED]

Reports are a single JSON object on stdout, newline-terminated; diagnostics
go to stderr.  Exit codes: 0 success, 1 check failure, 2 usage error,
3 I/O error, 4 invalid state data.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .invariants import (
    covariance_check_3,
    covariance_check_4,
    four_invariant,
    four_tangle,
    lu_invariance_sweep,
    product_identity_residual,
    three_tangle,
)
from .reporting import render_json
from .spectra import enumerate_fonts, global_negativity, kway_negativity
from .states import (
    MAX_QUBITS,
    PureState,
    cluster4,
    density,
    ghz,
    product_state,
    random_state,
    state_from_payload,
    state_to_payload,
    w_state,
)
from .transpose import decomposition_residual

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_BAD_STATE = 4

CHECK_TOL = 1e-8

_GEN_KINDS = ("ghz", "w", "cluster4", "product", "random")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail_usage(message: str) -> CliError:
    return CliError(EXIT_USAGE, message)


def _parse_qubit(text: str, n: int) -> int:
    text = text.strip()
    if len(text) == 1 and text.upper().isalpha():
        p = ord(text.upper()) - ord("A") + 1
    else:
        try:
            p = int(text)
        except ValueError:
            raise _fail_usage(f"invalid qubit {text!r}") from None
    if not 1 <= p <= n:
        raise _fail_usage(f"qubit {text!r} out of range for an {n}-qubit state")
    return p


def _parse_complex_pair(re_text: str, im_text: str, what: str) -> complex:
    try:
        return complex(float(re_text), float(im_text))
    except ValueError:
        raise _fail_usage(f"invalid {what}: expected re,im floats") from None


def _load_state(path: str) -> PureState:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_BAD_STATE, f"{path} is not valid JSON: {exc}") from exc
    try:
        return state_from_payload(payload)
    except ValueError as exc:
        raise CliError(EXIT_BAD_STATE, f"{path}: {exc}") from exc


def _random_product_state(n: int, seed: int) -> PureState:
    rng = np.random.default_rng(seed)
    factors = []
    for _ in range(n):
        z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        factors.append((complex(z[0]), complex(z[1])))
    return product_state(factors)


def _cmd_gen(args: argparse.Namespace) -> int:
    kind, n = args.kind, args.n
    if args.seed < 0:
        raise _fail_usage("seed must be non-negative")
    if kind == "cluster4":
        if n not in (None, 4):
            raise _fail_usage("cluster4 is a 4-qubit state")
        state = cluster4()
    else:
        if n is None:
            raise _fail_usage(f"kind {kind!r} requires a qubit count")
        if kind in ("ghz", "w") and not 2 <= n <= MAX_QUBITS:
            raise _fail_usage(f"{kind} requires 2 <= n <= {MAX_QUBITS}, got {n}")
        if kind in ("random", "product") and not 1 <= n <= MAX_QUBITS:
            raise _fail_usage(f"{kind} requires 1 <= n <= {MAX_QUBITS}, got {n}")
        if kind == "ghz":
            state = ghz(n)
        elif kind == "w":
            state = w_state(n)
        elif kind == "random":
            state = random_state(n, args.seed)
        else:
            state = _random_product_state(n, args.seed)

    text = render_json(state_to_payload(state)) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot write {args.out}: {exc}") from exc
    return EXIT_OK


def _font_record(font) -> dict:
    return {
        "i": font.i.string,
        "j": font.j.string,
        "p": font.p,
        "k": font.k,
        "det_re": float(font.det.real),
        "det_im": float(font.det.imag),
        "lambda_minus": font.lambda_minus,
        "negligible": font.negligible,
    }


def _cmd_measure(args: argparse.Namespace) -> int:
    state = _load_state(args.state)
    n = state.n_qubits

    want_tangle3 = args.tangle3 or (args.all and n == 3)
    want_tangle4 = args.tangle4 or (args.all and n == 4)
    if args.tangle3 and n != 3:
        raise _fail_usage(f"--tangle3 requires a 3-qubit state, got n = {n}")
    if args.tangle4 and n != 4:
        raise _fail_usage(f"--tangle4 requires a 4-qubit state, got n = {n}")

    neg_qubits = sorted({_parse_qubit(t, n) for t in args.negativity})
    kway_pairs = set()
    for text in args.kway:
        parts = text.split(",")
        if len(parts) != 2:
            raise _fail_usage(f"--kway expects P,K, got {text!r}")
        p = _parse_qubit(parts[0], n)
        try:
            k = int(parts[1])
        except ValueError:
            raise _fail_usage(f"--kway expects an integer K, got {parts[1]!r}") from None
        if not 2 <= k <= n:
            raise _fail_usage(f"K must be in [2, {n}], got {k}")
        kway_pairs.add((p, k))
    font_qubits = sorted({_parse_qubit(t, n) for t in args.fonts})
    if args.all:
        neg_qubits = list(range(1, n + 1))
        kway_pairs = {(p, k) for p in range(1, n + 1) for k in range(2, n + 1)}

    if not (want_tangle3 or want_tangle4 or neg_qubits or kway_pairs or font_qubits):
        raise _fail_usage("no measures requested")

    report: dict = {}
    if want_tangle3:
        report["tangle3"] = three_tangle(state)
    if want_tangle4:
        report["tangle4"] = four_tangle(state)
        if args.all:
            report["four_invariant_abs"] = abs(four_invariant(state))
    for p in neg_qubits:
        report[f"negativity_q{p}"] = global_negativity(state, p)
    for p, k in sorted(kway_pairs):
        report[f"kway_q{p}_k{k}"] = kway_negativity(state, p, k)
    for p in font_qubits:
        report[f"fonts_q{p}"] = [_font_record(f) for f in enumerate_fonts(state, p)]

    sys.stdout.write(render_json(report) + "\n")
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    state = _load_state(args.state)
    n = state.n_qubits

    if not (args.decomposition or args.product_identity or args.covariance or args.lu_sweep):
        raise _fail_usage("no checks requested")

    report: dict = {}
    residuals: list[float] = []

    if args.decomposition:
        if n < 2:
            raise _fail_usage("--decomposition requires at least 2 qubits")
        rho = density(state)
        value = max(decomposition_residual(rho, p) for p in range(1, n + 1))
        report["decomposition"] = value
        residuals.append(value)

    if args.product_identity:
        if n != 3:
            raise _fail_usage(f"--product-identity requires a 3-qubit state, got n = {n}")
        value = product_identity_residual(state)
        report["product_identity"] = value
        residuals.append(value)

    if args.covariance:
        parts = args.covariance.split(",")
        if len(parts) != 3:
            raise _fail_usage(f"--covariance expects Q,RE,IM, got {args.covariance!r}")
        param = _parse_complex_pair(parts[1], parts[2], "--covariance parameter")
        if n == 3:
            qubit = _parse_qubit(parts[0], n)
            if qubit != 2:
                raise _fail_usage("three-qubit covariance relations are stated for qubit B")
            checks = covariance_check_3(state, param)
        elif n == 4:
            qubit = _parse_qubit(parts[0], n)
            checks = covariance_check_4(state, qubit, param)
        else:
            raise _fail_usage(f"--covariance requires a 3- or 4-qubit state, got n = {n}")
        report["covariance"] = [
            {"relation": c.relation, "residual": c.residual, "prefactor": c.prefactor_used}
            for c in checks
        ]
        residuals.extend(c.residual for c in checks)

    if args.lu_sweep:
        if n not in (3, 4):
            raise _fail_usage(f"--lu-sweep requires a 3- or 4-qubit state, got n = {n}")
        parts = args.lu_sweep.split(",")
        if len(parts) != 2:
            raise _fail_usage(f"--lu-sweep expects TRIALS,SEED, got {args.lu_sweep!r}")
        try:
            trials, seed = int(parts[0]), int(parts[1])
        except ValueError:
            raise _fail_usage("--lu-sweep expects integer TRIALS,SEED") from None
        if trials < 0 or seed < 0:
            raise _fail_usage("TRIALS and SEED must be non-negative")
        value = lu_invariance_sweep(state, trials, seed)
        report["lu_sweep"] = {"max_deviation": value, "trials": trials, "seed": seed}
        residuals.append(value)

    sys.stdout.write(render_json(report) + "\n")
    return EXIT_OK if all(r < CHECK_TOL for r in residuals) else EXIT_CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanglekit",
        description="Entanglement measures and identity checks for N-qubit pure states.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a state file")
    gen.add_argument("kind", choices=_GEN_KINDS)
    gen.add_argument("n", type=int, nargs="?", default=None, help="number of qubits")
    gen.add_argument("--seed", type=int, default=0, help="seed for random/product kinds")
    gen.add_argument("--out", "-o", default=None, help="output path (default: stdout)")
    gen.set_defaults(handler=_cmd_gen)

    measure = sub.add_parser("measure", help="compute measures of a state file")
    measure.add_argument("state", help="path to a state JSON file")
    measure.add_argument("--tangle3", action="store_true")
    measure.add_argument("--tangle4", action="store_true")
    measure.add_argument("--negativity", action="append", default=[], metavar="P")
    measure.add_argument("--kway", action="append", default=[], metavar="P,K")
    measure.add_argument("--fonts", action="append", default=[], metavar="P")
    measure.add_argument("--all", action="store_true", help="every measure valid for the state")
    measure.set_defaults(handler=_cmd_measure)

    check = sub.add_parser("check", help="run identity and invariance checks")
    check.add_argument("state", help="path to a state JSON file")
    check.add_argument("--decomposition", action="store_true")
    check.add_argument("--product-identity", action="store_true")
    check.add_argument("--covariance", default=None, metavar="Q,RE,IM")
    check.add_argument("--lu-sweep", default=None, metavar="TRIALS,SEED")
    check.set_defaults(handler=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"tanglekit: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
