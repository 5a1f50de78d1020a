"""Command-line front end.

Subcommands: recurrence, asymptotics, convergence, zeros, eval. A run is
described by a JSON config holding the weight plus command parameters;
flags override the corresponding config entries.

Exit codes: 0 ok, 1 a convergence or tolerance check failed, 2 bad
configuration, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from .asymptotics import (
    AsymCoeffs,
    bulk_prediction,
    edge_prediction,
    largest_zero_prediction,
    outer_prediction,
)
from .bessel import bessel_zero
from .convergence import QUANTITIES, run_study
from .errors import NumericalError, RHJacobiError
from .oracle import eval_monic, polynomial_zeros, stieltjes
from .szego import phi, szego_data
from .weight import WeightSpec, from_dict

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3
EDGE_DELTA = 0.1


class ConfigError(RHJacobiError, ValueError):
    pass


def _parse_complex(v) -> complex:
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, str):
        return complex(v.replace(" ", "").replace("i", "j"))
    raise ConfigError(f"cannot read {v!r} as a complex number")


def _int_list(v, name):
    vals = [int(t) for t in v]
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise ConfigError(f"{name} must be strictly increasing")
    if vals and vals[0] < 1:
        raise ConfigError(f"{name} entries must be positive")
    return vals


@dataclass
class RunConfig:
    weight: WeightSpec
    N: int = 60
    n: list | None = None
    z: list = field(default_factory=lambda: [1.5 + 0.5j])
    x: list = field(default_factory=list)
    k: list = field(default_factory=lambda: [1])
    order: int | None = None
    quantity: list = field(default_factory=lambda: ["outer"])
    tolerances: dict = field(default_factory=dict)
    out: str | None = None
    format: str = "json"

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        if not isinstance(d, dict):
            raise ConfigError("config must be a JSON object")
        wd = d.get("weight", d if "alpha" in d else None)
        if wd is None:
            raise ConfigError("config has no weight")
        cfg = cls(from_dict(wd))
        try:
            if "N" in d:
                cfg.N = int(d["N"])
            if "n" in d:
                cfg.n = _int_list(d["n"], "n")
            if "z" in d:
                cfg.z = [_parse_complex(v) for v in d["z"]]
            if "x" in d:
                cfg.x = [float(v) for v in d["x"]]
            if "k" in d:
                cfg.k = _int_list(d["k"], "k")
            if d.get("order") is not None:
                cfg.order = int(d["order"])
            if "quantity" in d:
                q = d["quantity"]
                cfg.quantity = [q] if isinstance(q, str) else list(q)
            if "tolerances" in d:
                cfg.tolerances = {str(k): float(v) for k, v in dict(d["tolerances"]).items()}
            cfg.out = d.get("out", cfg.out)
            cfg.format = d.get("format", cfg.format)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, RHJacobiError):
                raise
            raise ConfigError(f"malformed config: {exc}") from exc
        cfg.check()
        return cfg

    def check(self):
        if self.N < 1:
            raise ConfigError("N must be at least 1")
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        if any(not (v > 0 and math.isfinite(v)) for v in self.tolerances.values()):
            raise ConfigError("tolerances must be positive")
        for q in self.quantity:
            if q not in QUANTITIES:
                raise ConfigError(f"unknown quantity {q!r}")
        if any(not math.isfinite(v) for v in self.x):
            raise ConfigError("x values must be finite")


# --- output ---------------------------------------------------------------


def _finite(values):
    for v in values:
        if isinstance(v, (float, np.floating)) and not math.isfinite(v):
            raise NumericalError("non-finite value in output")


def _fmt(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return "" if v is None else str(v)


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        _finite(row)
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _check_json(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            _check_json(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _check_json(v)
    elif isinstance(obj, float) and not math.isfinite(obj):
        raise NumericalError("non-finite value in output")


def render_json(obj) -> str:
    _check_json(obj)
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def render_table(header, rows, fmt) -> str:
    if fmt == "csv":
        return render_csv(header, rows)
    return render_json([dict(zip(header, (_jsonable(v) for v in row))) for row in rows])


def _jsonable(v):
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, np.bool_):
        return bool(v)
    return v


# --- commands -------------------------------------------------------------


def cmd_recurrence(cfg: RunConfig):
    """Table of ``n, a_n, b_n, log gamma_n`` for ``n = 0..N`` (``a_0 = 0``)."""
    t = stieltjes(cfg.weight, cfg.N)
    rows = [(n, float(t.a[n]), float(t.b[n]), float(t.log_gamma[n])) for n in range(cfg.N + 1)]
    return render_table(["n", "a_n", "b_n", "log_gamma_n"], rows, cfg.format), True


COEFF_LABELS = {
    "Gamma1": "leading coefficient, 1/n term",
    "Gamma2": "leading coefficient, 1/n^2 term",
    "A2": "a_n, 1/n^2 term",
    "A3": "a_n, 1/n^3 term",
    "A4": "a_n, 1/n^4 term",
    "B2": "b_n, 1/n^2 term",
    "B3": "b_n, 1/n^3 term",
    "B4": "b_n, 1/n^4 term",
    "c0": "endpoint coefficient of log h at +1",
    "d0": "endpoint coefficient of log h at -1",
    "D_inf": "Szego function at infinity",
    "hankel_exponent": "power of n in the Hankel determinant",
}


def asymptotic_coefficients(spec: WeightSpec) -> dict:
    data = szego_data(spec)
    co = AsymCoeffs.from_data(data)
    vals = {
        "Gamma1": co.Gamma1,
        "Gamma2": co.Gamma2,
        "A2": co.A2,
        "A3": co.A3,
        "A4": co.A4,
        "B2": co.B2,
        "B3": co.B3,
        "B4": co.B4,
        "c0": data.c0,
        "d0": data.d0,
        "D_inf": data.D_inf,
        "hankel_exponent": co.hankel_exponent,
    }
    # + 0.0 folds negative zeros
    return {k: float(v) + 0.0 for k, v in vals.items()}


def cmd_asymptotics(cfg: RunConfig):
    vals = asymptotic_coefficients(cfg.weight)
    if cfg.format == "csv":
        rows = [(k, v, COEFF_LABELS[k]) for k, v in vals.items()]
        return render_csv(["name", "value", "label"], rows), True
    out = dict(vals)
    out["labels"] = COEFF_LABELS
    out["alpha"], out["beta"] = cfg.weight.alpha, cfg.weight.beta
    return render_json(out), True


def cmd_convergence(cfg: RunConfig):
    z = cfg.z[0] if cfg.z else 1.5 + 0.5j
    reports = [run_study(cfg.weight, q, cfg.order, cfg.n, z) for q in cfg.quantity]
    ok = all(r.passed for r in reports)
    if cfg.format == "csv":
        header = ["quantity", "n", "error", "fitted_slope", "target_slope", "constant_estimate", "pass"]
        rows = []
        for r in reports:
            for n, e in zip(r.n, r.error):
                rows.append((r.quantity, n, e, r.fitted_slope, r.target_slope, r.constant_estimate, r.passed))
        return render_csv(header, rows), ok
    dicts = [r.to_dict() for r in reports]
    return render_json(dicts[0] if len(dicts) == 1 else dicts), ok


def cmd_zeros(cfg: RunConfig):
    """Largest zeros from the oracle against ``1 - j_{alpha,k}^2 / (2 n^2)``."""
    ns = cfg.n or [50]
    tol = cfg.tolerances.get("zeros", 0.02)
    t = stieltjes(cfg.weight, max(ns))
    al = cfg.weight.alpha
    rows, ok = [], True
    for n in ns:
        xs = polynomial_zeros(t, n)
        for k in cfg.k:
            if k > n:
                continue
            xo = float(xs[k - 1])
            xp = largest_zero_prediction(al, n, k)
            so = n * n * (1 - xo)
            sp = bessel_zero(al, k) ** 2 / 2
            rel = abs(so - sp) / sp
            ok &= rel <= tol
            rows.append((n, k, xo, xp, so, sp, rel))
    header = ["n", "k", "oracle_zero", "predicted_zero", "scaled_oracle", "scaled_prediction", "relative_error"]
    return render_table(header, rows, cfg.format), ok


def cmd_eval(cfg: RunConfig):
    """Oracle against prediction at the configured points.

    Real ``x``: ``2^n pi_n(x)`` with the bulk formula for ``|x| <= 0.9`` and
    the edge formula on ``(0.9, 1)``. Complex ``z``: ``2^n pi_n(z) / phi(z)^n``
    with the exterior expansion of the configured order (default 2).
    """
    ns = cfg.n or [20]
    order = 2 if cfg.order is None else cfg.order
    data = szego_data(cfg.weight)
    t = stieltjes(cfg.weight, max(ns))
    rows = []
    for n in ns:
        for x in cfg.x:
            if abs(x) <= 1 - EDGE_DELTA:
                region, pred = "bulk", float(bulk_prediction(data, x, n, EDGE_DELTA, scaled=True))
            elif 1 - EDGE_DELTA < x < 1:
                region, pred = "edge", float(edge_prediction(data, x, n, EDGE_DELTA, scaled=True))
            else:
                raise ConfigError(f"x = {x} is outside the covered regions")
            lo, ph = eval_monic(t, n, x)
            ref = float(np.real(ph) * math.exp(lo + n * math.log(2.0)))
            rows.append((n, "x", x, 0.0, region, ref, 0.0, pred, 0.0, abs(ref - pred) / max(abs(ref), 1e-300)))
        for z in cfg.z:
            lo, ph = eval_monic(t, n, z)
            lp, pp = outer_prediction(data, z, n, order)
            scale = n * (math.log(2.0) - float(np.log(np.abs(phi(z)))))
            ref = complex(ph) * math.exp(lo + scale) / np.exp(1j * n * np.angle(phi(z)))
            pred = complex(pp) * math.exp(float(lp) + scale) / np.exp(1j * n * np.angle(phi(z)))
            rows.append((n, "z", z.real, z.imag, "outer", ref.real, ref.imag, pred.real, pred.imag,
                         abs(ref - pred) / abs(ref)))
    header = ["n", "kind", "re", "im", "region", "oracle_re", "oracle_im", "prediction_re", "prediction_im",
              "relative_error"]
    return render_table(header, rows, cfg.format), True


COMMANDS = {
    "recurrence": cmd_recurrence,
    "asymptotics": cmd_asymptotics,
    "convergence": cmd_convergence,
    "zeros": cmd_zeros,
    "eval": cmd_eval,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rhjacobi", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--config", required=True, help="JSON run configuration")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--quantity", action="append", choices=QUANTITIES,
                   help="convergence quantity; repeat for several")
    p.add_argument("--order", type=int)
    p.add_argument("--N", type=int, dest="N", help="largest degree for recurrence")
    p.add_argument("--seed", type=int, help="accepted for compatibility; nothing is random")
    return p


def load_config(args) -> RunConfig:
    try:
        with open(args.config) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    cfg = RunConfig.from_dict(raw)
    if args.out is not None:
        cfg.out = args.out
    if args.format is not None:
        cfg.format = args.format
    if args.quantity:
        cfg.quantity = list(args.quantity)
    if args.order is not None:
        cfg.order = args.order
    if args.N is not None:
        cfg.N = args.N
    cfg.check()
    return cfg


def _error(kind: str, exc: Exception) -> None:
    sys.stderr.write(json.dumps({"error": kind, "type": type(exc).__name__, "message": str(exc)}) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
        text, ok = COMMANDS[args.command](cfg)
    except NumericalError as exc:
        _error("numerical", exc)
        return EXIT_NUMERIC
    except (RHJacobiError, ValueError) as exc:
        _error("config", exc)
        return EXIT_CONFIG
    except (ArithmeticError, FloatingPointError) as exc:
        _error("numerical", exc)
        return EXIT_NUMERIC
    if cfg.out:
        with open(cfg.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
