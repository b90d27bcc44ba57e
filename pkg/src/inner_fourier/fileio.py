"""Deterministic JSON and CSV serialization.

Floats are written with 17 significant digits, enough to round-trip any
double exactly, and emission order is fixed, so identical inputs produce
byte-identical files.

Coefficient JSON carries the real triple as {"K", "alpha0", "alpha",
"beta"} and the complex sequence as {"K", "c_re", "c_im"}; one file may
hold both key groups. Sample CSV is two columns "theta,value" with a
required header, on the uniform grid starting at -pi.
"""

from __future__ import annotations

import csv
import io
import math

import numpy as np

from .coeffs import FourierCoefficients, PeriodicFunction, TaylorCoefficients


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non finite value {x!r}")
    s = f"{x:.17g}"
    if "e" not in s and "." not in s and "inf" not in s and "nan" not in s:
        s += ".0"
    return s


def _emit(obj, out: list[str]) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(f'"{k}": ')
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _emit(v, out)
        out.append("]")
    elif isinstance(obj, bool) or isinstance(obj, np.bool_):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(float(obj)))
    elif isinstance(obj, str):
        out.append('"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif obj is None:
        out.append("null")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(obj) -> str:
    """Serialize with fixed key order and 17-significant-digit floats."""
    out: list[str] = []
    _emit(obj, out)
    return "".join(out) + "\n"


def write_json(path, obj) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(dumps_json(obj))


def coefficients_payload(
    fc: FourierCoefficients | None, tc: TaylorCoefficients | None = None
) -> dict:
    if fc is None and tc is None:
        raise ValueError("nothing to serialize")
    payload: dict = {}
    if fc is not None:
        payload.update(
            {
                "K": fc.K,
                "alpha0": fc.alpha0,
                "alpha": list(fc.alpha),
                "beta": list(fc.beta),
            }
        )
    if tc is not None:
        payload.setdefault("K", tc.K)
        payload["c_re"] = list(tc.c.real)
        payload["c_im"] = list(tc.c.imag)
    return payload


def parse_coefficients(doc: dict) -> tuple[FourierCoefficients | None, TaylorCoefficients | None]:
    fc = tc = None
    if "alpha" in doc:
        fc = FourierCoefficients(
            float(doc["alpha0"]),
            np.asarray(doc["alpha"], dtype=float),
            np.asarray(doc["beta"], dtype=float),
        )
    if "c_re" in doc:
        tc = TaylorCoefficients(
            np.asarray(doc["c_re"], dtype=float) + 1j * np.asarray(doc["c_im"], dtype=float)
        )
    if fc is None and tc is None:
        raise ValueError("no coefficient keys found (expected alpha/beta or c_re/c_im)")
    return fc, tc


def read_coefficients_json(path) -> tuple[FourierCoefficients | None, TaylorCoefficients | None]:
    import json

    with open(path, "r", encoding="utf-8") as fp:
        return parse_coefficients(json.load(fp))


def read_samples_csv(path) -> PeriodicFunction:
    """Load "theta,value" rows into a uniform-grid sampled function."""
    with open(path, "r", encoding="utf-8", newline="") as fp:
        rows = list(csv.reader(fp))
    if not rows or [c.strip() for c in rows[0][:2]] != ["theta", "value"]:
        raise ValueError(f"{path}: expected header 'theta,value'")
    body = [r for r in rows[1:] if r]
    if len(body) < 2:
        raise ValueError(f"{path}: need at least 2 sample rows")
    theta = np.array([float(r[0]) for r in body])
    vals = np.array([float(r[1]) for r in body])
    m = theta.size
    expected = -math.pi + 2.0 * math.pi * np.arange(m) / m
    if np.max(np.abs(theta - expected)) > 1e-9:
        raise ValueError(f"{path}: samples are not on the uniform grid starting at -pi")
    return PeriodicFunction.from_samples(vals, name=str(path))


def write_curve_csv(path, header: list[str], rows) -> None:
    """Write rows of floats/strings with fixed float formatting."""
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        cells = [
            format_float(v) if isinstance(v, (float, np.floating)) else str(v) for v in row
        ]
        buf.write(",".join(cells) + "\n")
    with open(path, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(buf.getvalue())
