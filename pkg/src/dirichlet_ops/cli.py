"""Command-line front end.

Series enter as JSON descriptors, inline or via @file indirection:

    {"kind": "poly", "terms": [{"n": 2, "re": 1, "im": 0}, ...]}
    {"kind": "rule", "name": "ones|eta|moebius|zeta_shift", "k": int?, "truncate": N?}

Rules must carry "truncate" except for `abscissa`, which consumes the rule
natively.  Complex flags are "re,im" pairs.  Output is JSON by default or
CSV with --format csv, written deterministically: fixed key order, floats
in shortest round-trip decimal form (integral values print as integers).

Exit status: 0 success, 1 usage/parse error, 2 domain or spectral error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import abscissa as _abscissa
from . import dynamics as _dynamics
from . import evaluation as _evaluation
from . import operators as _operators
from . import spectral as _spectral
from . import volterra as _volterra
from .errors import DomainError, SpectralError
from .series import (
    CoefficientRule,
    DirichletPolynomial,
    dirichlet_multiply,
    eta_rule,
    moebius_rule,
    ones_rule,
    table_rule,
    truncate,
    zeta_shift_rule,
)

__all__ = ["run", "main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract here is 1
    def error(self, message):
        raise UsageError(message)


def _diag(message: str) -> None:
    text = f"error: {message}"
    if sys.stderr.isatty() and not os.environ.get("NO_COLOR"):
        text = f"\x1b[31m{text}\x1b[0m"
    print(text, file=sys.stderr)


def _jnum(x: float):
    x = float(x)
    if math.isfinite(x) and x == int(x) and abs(x) < 1e15:
        return int(x)
    return x


def _jcomplex(z: complex) -> dict:
    return {"re": _jnum(z.real), "im": _jnum(z.imag)}


def _parse_complex_flag(text: str, flag: str) -> complex:
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise UsageError(f"{flag}: expected 're' or 're,im', got {text!r}")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise UsageError(f"{flag}: expected numeric 're,im', got {text!r}") from None
    return complex(re, im)


_RULES = {
    "ones": lambda k: ones_rule(),
    "eta": lambda k: eta_rule(),
    "moebius": lambda k: moebius_rule(),
    "zeta_shift": lambda k: zeta_shift_rule(k),
}


def _load_descriptor(text: str, flag: str):
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"{flag}: cannot read {text[1:]!r}: {exc}") from None
    try:
        desc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: invalid JSON ({exc})") from None
    if not isinstance(desc, (dict, list)):
        raise UsageError(f"{flag}: descriptor must be a JSON object or a terms list")
    return desc


def _parse_terms(terms, flag: str) -> DirichletPolynomial:
    if not isinstance(terms, list):
        raise UsageError(f"{flag}.terms: must be a list")
    coeffs = []
    for i, term in enumerate(terms):
        if not isinstance(term, dict):
            raise UsageError(f"{flag}.terms[{i}]: must be an object")
        n = term.get("n")
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise UsageError(f"{flag}.terms[{i}].n: must be an integer >= 1, got {n!r}")
        re = term.get("re", 0)
        im = term.get("im", 0)
        for key, val in (("re", re), ("im", im)):
            if isinstance(val, bool) or not isinstance(val, (int, float)):
                raise UsageError(f"{flag}.terms[{i}].{key}: must be a number, got {val!r}")
        coeffs.append((n, complex(re, im)))
    return DirichletPolynomial(coeffs)


def _parse_series(text: str, flag: str, allow_rule: bool = False):
    """Returns a DirichletPolynomial, or a CoefficientRule when allow_rule
    and the descriptor is an untruncated rule."""
    desc = _load_descriptor(text, flag)
    if isinstance(desc, list):
        # bare terms array, as emitted by poly-valued subcommands
        return _parse_terms(desc, flag)
    kind = desc.get("kind")
    if kind == "poly":
        return _parse_terms(desc.get("terms", []), flag)
    if kind == "rule":
        name = desc.get("name")
        if name not in _RULES:
            raise UsageError(f"{flag}.name: unknown rule {name!r}, expected one of {sorted(_RULES)}")
        k = desc.get("k")
        if name == "zeta_shift":
            if isinstance(k, bool) or not isinstance(k, int) or k < 0:
                raise UsageError(f"{flag}.k: zeta_shift needs an integer k >= 0, got {k!r}")
        rule = _RULES[name](k)
        trunc = desc.get("truncate")
        if trunc is None:
            if allow_rule:
                return rule
            raise UsageError(f"{flag}.truncate: required for rule descriptors here")
        if isinstance(trunc, bool) or not isinstance(trunc, int) or trunc < 1:
            raise UsageError(f"{flag}.truncate: must be an integer >= 1, got {trunc!r}")
        return truncate(rule, trunc)
    raise UsageError(f"{flag}.kind: must be 'poly' or 'rule', got {kind!r}")


def _require_poly(series, flag: str) -> DirichletPolynomial:
    if isinstance(series, CoefficientRule):
        raise UsageError(f"{flag}.truncate: required for rule descriptors here")
    return series


def _poly_payload(f: DirichletPolynomial) -> list:
    terms = []
    for n, a in f.items():
        term = {"n": n, "re": _jnum(a.real)}
        if a.imag != 0.0:
            term["im"] = _jnum(a.imag)
        terms.append(term)
    return terms


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit_csv_rows(header: list[str], rows: list[list]) -> None:
    out = [",".join(header)]
    out.extend(",".join(_csv_cell(v) for v in row) for row in rows)
    sys.stdout.write("\n".join(out) + "\n")


def _emit_poly(f: DirichletPolynomial, fmt: str) -> None:
    if fmt == "csv":
        rows = [[n, _jnum(a.real), _jnum(a.imag)] for n, a in f.items()]
        _emit_csv_rows(["n", "re", "im"], rows)
    else:
        _emit_json(_poly_payload(f))


def _emit_record(pairs: list[tuple[str, object]], fmt: str) -> None:
    if fmt == "csv":
        _emit_csv_rows([k for k, _ in pairs], [[v for _, v in pairs]])
    else:
        _emit_json(dict(pairs))


_SPACES = {"zero": _spectral.ZERO_SUBSPACE, "zero_subspace": _spectral.ZERO_SUBSPACE, "full": _spectral.FULL}

_MULTIPLIERS = {
    "derivative": _operators.derivative_multiplier,
    "d": _operators.derivative_multiplier,
    "integration": _operators.integration_multiplier,
    "j": _operators.integration_multiplier,
    "identity": _operators.identity_multiplier,
}


def _build_parser() -> _Parser:
    parser = _Parser(prog="dseries", description="Dirichlet series operator toolkit")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def cmd(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        return p

    p = cmd("eval", help="evaluate a series at a point")
    p.add_argument("--series", required=True)
    p.add_argument("--s", required=True, help="evaluation point 're,im'")

    for name, help_text in (
        ("diff", "termwise derivative"),
        ("integrate", "termwise antiderivative (needs zero constant term)"),
    ):
        p = cmd(name, help=help_text)
        p.add_argument("--series", required=True)

    p = cmd("mul", help="coefficient convolution of two series")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)

    p = cmd("seminorm", help="bracketed sup over a right half-plane")
    p.add_argument("--series", required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--t-max", type=float, default=None)
    p.add_argument("--step", type=float, default=1e-2)

    p = cmd("abscissa", help="convergence abscissa estimates for a rule")
    p.add_argument("--series", required=True)
    p.add_argument("--n", type=int, default=10**5, help="partial-sum window length")
    p.add_argument("--probe-eps", default="0.1,0.5", help="comma-separated epsilons")

    p = cmd("resolvent", help="apply (lambda I - D)^(-1)")
    p.add_argument("--series", required=True)
    p.add_argument("--lambda", dest="lmbda", required=True)
    p.add_argument("--space", choices=sorted(_SPACES), default="zero")

    p = cmd("classify", help="locate lambda relative to the spectrum")
    p.add_argument("--lambda", dest="lmbda", required=True)
    p.add_argument("--space", choices=sorted(_SPACES), default="zero")

    p = cmd("bv-check", help="bounded-variation check of the damped resolvent symbol")
    p.add_argument("--lambda", dest="lmbda", required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--n", type=int, default=10**4)

    p = cmd("reciprocal", help="inverse-pair spectral consistency at mu")
    p.add_argument("--mu", required=True)

    p = cmd("volterra", help="apply V_g(f) = integrate(g' * f)")
    p.add_argument("--g", required=True)
    p.add_argument("--f", default=None, help="defaults to the constant series 1")
    p.add_argument("--check", action="store_true", help="report the V_g(1) = g - a_1 identity")

    p = cmd("dynamics", help="iterate-growth diagnostic for a named multiplier")
    p.add_argument("--op", choices=sorted(_MULTIPLIERS), required=True)
    p.add_argument("--series", required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--k-max", type=int, default=40)

    return parser


def _dispatch(args, fmt: str) -> None:
    cmd = args.command
    if cmd == "eval":
        series = _parse_series(args.series, "--series")
        s = _parse_complex_flag(args.s, "--s")
        if isinstance(series, CoefficientRule):
            raise UsageError("--series.truncate: required for rule descriptors here")
        value = _evaluation.evaluate(series, s)
        _emit_record([("re", _jnum(value.real)), ("im", _jnum(value.imag))], fmt)
    elif cmd == "diff":
        f = _require_poly(_parse_series(args.series, "--series"), "--series")
        _emit_poly(_operators.differentiate(f), fmt)
    elif cmd == "integrate":
        f = _require_poly(_parse_series(args.series, "--series"), "--series")
        _emit_poly(_operators.integrate(f), fmt)
    elif cmd == "mul":
        f = _require_poly(_parse_series(args.f, "--f"), "--f")
        g = _require_poly(_parse_series(args.g, "--g"), "--g")
        _emit_poly(dirichlet_multiply(f, g), fmt)
    elif cmd == "seminorm":
        f = _require_poly(_parse_series(args.series, "--series"), "--series")
        est = _evaluation.seminorm(f, args.epsilon, t_max=args.t_max, step=args.step)
        _emit_record(
            [
                ("epsilon", _jnum(est.epsilon)),
                ("lower", _jnum(est.lower)),
                ("upper", _jnum(est.upper)),
                ("t_max", _jnum(est.grid.t_max)),
                ("step", _jnum(est.grid.step)),
                ("two_sided", est.grid.two_sided),
            ],
            fmt,
        )
    elif cmd == "abscissa":
        series = _parse_series(args.series, "--series", allow_rule=True)
        if isinstance(series, DirichletPolynomial):
            rule = table_rule(dict(series.items()))
        else:
            rule = series
        try:
            probe_eps = [float(tok) for tok in args.probe_eps.split(",") if tok.strip()]
        except ValueError:
            raise UsageError(f"--probe-eps: expected comma-separated numbers, got {args.probe_eps!r}") from None
        est = _abscissa.bracket_sigma_u(rule, args.n, probe_eps)
        if fmt == "csv":
            _emit_csv_rows(
                ["field", "value"],
                [
                    ["sigma_c", _jnum(est.sigma_c.value)],
                    ["sigma_c_uncertainty", _jnum(est.sigma_c.uncertainty)],
                    ["sigma_c_shift", est.sigma_c.shift],
                    ["sigma_a", _jnum(est.sigma_a.value)],
                    ["sigma_a_uncertainty", _jnum(est.sigma_a.uncertainty)],
                    ["sigma_a_shift", est.sigma_a.shift],
                    ["sigma_u_low", _jnum(est.sigma_u_bracket[0])],
                    ["sigma_u_high", _jnum(est.sigma_u_bracket[1])],
                ]
                + [[f"probe_sup_eps_{_jnum(p.epsilon)}", _jnum(p.sup_abs)] for p in est.probes],
            )
        else:
            _emit_json(
                {
                    "N": est.N,
                    "sigma_c": {
                        "value": _jnum(est.sigma_c.value),
                        "uncertainty": _jnum(est.sigma_c.uncertainty),
                        "shift": est.sigma_c.shift,
                    },
                    "sigma_a": {
                        "value": _jnum(est.sigma_a.value),
                        "uncertainty": _jnum(est.sigma_a.uncertainty),
                        "shift": est.sigma_a.shift,
                    },
                    "sigma_u_bracket": [_jnum(est.sigma_u_bracket[0]), _jnum(est.sigma_u_bracket[1])],
                    "sigma_u_note": est.note,
                    "probes": [
                        {"epsilon": _jnum(p.epsilon), "sup_abs": _jnum(p.sup_abs)} for p in est.probes
                    ],
                }
            )
    elif cmd == "resolvent":
        f = _require_poly(_parse_series(args.series, "--series"), "--series")
        lam = _parse_complex_flag(args.lmbda, "--lambda")
        _emit_poly(_spectral.resolvent_apply(lam, f, _SPACES[args.space]), fmt)
    elif cmd == "classify":
        lam = _parse_complex_flag(args.lmbda, "--lambda")
        cls = _spectral.classify_point(lam, _SPACES[args.space])
        pairs: list[tuple[str, object]] = [("verdict", cls.kind)]
        if cls.n is not None:
            pairs.append(("n", cls.n))
        _emit_record(pairs, fmt)
    elif cmd == "bv-check":
        lam = _parse_complex_flag(args.lmbda, "--lambda")
        report = _spectral.bv_check(lam, args.delta, args.n)
        _emit_record(
            [
                ("verdict", report.verdict),
                ("N", report.N),
                ("delta", _jnum(report.delta)),
                ("gap", _jnum(report.gap)),
                ("variation", _jnum(report.variation)),
                ("fitted_constant", _jnum(report.fitted_constant)),
                ("majorant_ratio", _jnum(report.majorant_ratio)),
            ],
            fmt,
        )
    elif cmd == "reciprocal":
        mu = _parse_complex_flag(args.mu, "--mu")
        report = _spectral.reciprocal_spectrum_check(mu)
        _emit_record(
            [
                ("in_rho_d", report.in_rho_d),
                ("in_rho_j_reciprocal", report.in_rho_j_reciprocal),
                ("consistent", report.consistent),
                ("gap_d", _jnum(report.gap_d)),
                ("gap_j", _jnum(report.gap_j)),
            ],
            fmt,
        )
    elif cmd == "volterra":
        g = _require_poly(_parse_series(args.g, "--g"), "--g")
        if args.check:
            report = _volterra.volterra_identity_check(g)
            if fmt == "csv":
                _emit_csv_rows(["field", "value"], [["match", report.match]])
            else:
                _emit_json(
                    {
                        "match": report.match,
                        "lhs": _poly_payload(report.lhs),
                        "rhs": _poly_payload(report.rhs),
                    }
                )
        else:
            from .series import monomial

            if args.f is None:
                f = monomial(1)
            else:
                f = _require_poly(_parse_series(args.f, "--f"), "--f")
            _emit_poly(_volterra.volterra_apply(g, f), fmt)
    elif cmd == "dynamics":
        f = _require_poly(_parse_series(args.series, "--series"), "--series")
        m = _MULTIPLIERS[args.op]()
        report = _dynamics.ergodicity_diagnostic(m, f, args.epsilon, args.k_max)
        if fmt == "csv":
            _emit_csv_rows(["k", "value"], [[k, float(v)] for k, v in report.samples])
        else:
            _emit_json(
                {
                    "verdict": report.verdict,
                    "fitted_rate": _jnum(report.fitted_rate),
                    "samples": [[k, _jnum(v)] for k, v in report.samples],
                }
            )
    else:
        raise UsageError("a subcommand is required (see --help)")


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _dispatch(args, args.format)
        return 0
    except UsageError as exc:
        _diag(str(exc))
        return 1
    except (DomainError, SpectralError) as exc:
        _diag(str(exc))
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
