"""Scalar product and norm for analytic functions on circles inside the disk.

For functions w1, w2 analytic on the open unit disk and a radius
0 < rho0 <= 1,

    (w1|w2) = (1/(2*pi)) * integral conj(w1(rho0, theta)) * w2(rho0, theta) dtheta

is a scalar product for every fixed rho0, inducing the positive norm
||w||**2 = (1/(2*pi)) * integral (u**2 + v**2) dtheta. The monomials z**k
are orthogonal with (z**k1 | z**k2) = rho0**(k1+k2) * delta(k1, k2), so on
the unit circle they are orthonormal. In coefficient form the product is
the exponentially convergent series sum rho0**(2k) * conj(c1_k) * c2_k,
which may diverge at rho0 = 1 for non decaying coefficient products; that
case is flagged, not masked.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .basis import GramReport
from .classify import GrowthModel, classify_sequence
from .coeffs import TaylorCoefficients, _require_poles_off_circle
from .errors import DivergenceWarning
from .quadrature import circle_nodes, compensated_csum, phase_powers
from .series import InnerAnalytic


@dataclass(frozen=True)
class DiskProductConfig:
    """Integration circle radius and node count for the disk product."""

    rho0: float
    M: int = 2048

    def __post_init__(self):
        if not 0.0 < self.rho0 <= 1.0:
            raise ValueError(f"need 0 < rho0 <= 1, got {self.rho0}")
        if self.M < 64:
            raise ValueError(f"need M >= 64 quadrature points, got {self.M}")


@dataclass(frozen=True)
class SeriesProductResult:
    """Truncated series product with its tail bound; complex-valued."""

    value: complex
    tail_bound: float
    divergent: bool


def inner_product_disk(w1: InnerAnalytic, w2: InnerAnalytic, cfg: DiskProductConfig) -> complex:
    """Trapezoidal value of (1/(2*pi)) * integral conj(w1) * w2 on the circle rho0.

    rho0 = 1 is allowed only when neither function has a pole there.
    """
    _require_poles_off_circle(w1, cfg.rho0)
    _require_poles_off_circle(w2, cfg.rho0)
    nodes = circle_nodes(cfg.rho0, cfg.M)
    vals = np.conj(np.asarray(w1(nodes), dtype=complex)) * np.asarray(w2(nodes), dtype=complex)
    return compensated_csum(vals) / cfg.M


def series_tail_bound(tc1: TaylorCoefficients, tc2: TaylorCoefficients, rho0: float) -> float:
    """max_k |c1_k * c2_k| * rho0**(2(K+1)) / (1 - rho0**2); infinite at rho0 = 1."""
    peak = float(np.max(np.abs(tc1.c) * np.abs(tc2.c)))
    if rho0 >= 1.0:
        return math.inf if peak > 0.0 else 0.0
    K = min(tc1.K, tc2.K)
    return peak * rho0 ** (2 * (K + 1)) / (1.0 - rho0 * rho0)


def _products_diverge_at_one(products: np.ndarray) -> bool:
    """Summability screen for |c1_k*c2_k| at rho0 = 1.

    A trailing quarter of exact zeros means the visible series has
    terminated. Otherwise the product growth is fitted: a positive rate,
    or a flat rate with polynomial power >= -1, cannot be absolutely
    summable. Sequences too short to fit are flagged conservatively.
    """
    K = products.size - 1
    tail_start = max(1, (3 * (K + 1)) // 4)
    if not np.any(products[tail_start:] > 0.0):
        return False
    if K >= 32:
        try:
            report = classify_sequence(products, GrowthModel(window=(1, K)))
        except ValueError:
            return True
        if report.degenerate:
            return False
        if not report.bounded:
            return True
        return report.fitted_rate > -1e-9 and report.fitted_power >= -1.0 - 1e-9
    return True


def inner_product_series(
    tc1: TaylorCoefficients, tc2: TaylorCoefficients, rho0: float
) -> SeriesProductResult:
    """Coefficient form of the disk product: sum rho0**(2k) * conj(c1_k) * c2_k.

    For rho0 < 1 this matches the contour value up to the attached tail
    bound. At rho0 = 1 with non decaying coefficient products the partial
    value is returned with the divergent flag set and a warning emitted.
    """
    if not 0.0 < rho0 <= 1.0:
        raise ValueError(f"need 0 < rho0 <= 1, got {rho0}")
    n = min(tc1.K, tc2.K) + 1
    r2 = (rho0 * rho0) ** np.arange(n, dtype=float)
    terms = r2 * np.conj(tc1.c[:n]) * tc2.c[:n]
    value = compensated_csum(terms)
    divergent = False
    if rho0 >= 1.0:
        products = np.abs(tc1.c[:n]) * np.abs(tc2.c[:n])
        divergent = _products_diverge_at_one(products)
        if divergent:
            warnings.warn(
                "coefficient products do not decay; the rho0 = 1 product series diverges",
                DivergenceWarning,
                stacklevel=2,
            )
    return SeriesProductResult(value, series_tail_bound(tc1, tc2, rho0), divergent)


def norm_disk(w: InnerAnalytic, cfg: DiskProductConfig) -> float:
    """sqrt of (w|w) on the circle rho0; zero only for the zero function."""
    sq = inner_product_disk(w, w, cfg).real
    return math.sqrt(max(sq, 0.0))


def taylor_gram(Kmax: int, cfg: DiskProductConfig) -> GramReport:
    """Gram matrix of the monomials z**0..z**Kmax under the disk product.

    Expected: diagonal rho0**(2k), all off-diagonal entries zero, within
    1e-12 for M >= 4*Kmax + 2. Monomials on the circle are evaluated from
    the exact phase table, entry (k1, k2) reducing to the mean of
    exp(i*(k2 - k1)*theta) times rho0**(k1+k2).
    """
    if Kmax < 1:
        raise ValueError(f"Kmax must be >= 1, got {Kmax}")
    if cfg.M < 4 * Kmax + 2:
        raise ValueError(f"need M >= 4*Kmax + 2 = {4 * Kmax + 2}, got {cfg.M}")
    n = Kmax + 1
    g = np.empty((n, n))
    imag_leak = 0.0
    for k1 in range(n):
        for k2 in range(k1, n):
            s = compensated_csum(phase_powers(cfg.M, k2 - k1)) / cfg.M
            entry = cfg.rho0 ** (k1 + k2) * s
            g[k1, k2] = g[k2, k1] = entry.real
            imag_leak = max(imag_leak, abs(entry.imag))
    expected = cfg.rho0 ** (2.0 * np.arange(n))
    diag_err = max(float(np.max(np.abs(np.diag(g) - expected))), imag_leak)
    off = g - np.diag(np.diag(g))
    off_err = max(float(np.max(np.abs(off))), imag_leak)
    return GramReport(n, off_err, diag_err, g)
