"""Uniform grids and trapezoidal quadrature on the periodic interval.

All integrals in this package are taken over [-pi, pi) on uniform grids.
On a periodic domain the trapezoidal rule collapses to the plain average
of the node values times the period, and it is spectrally accurate for
integrands that are analytic in a strip around the real axis.

Accumulation contract: node values are summed in ascending node order
with compensated (exactly rounded) summation, so results are bitwise
reproducible for identical inputs.
"""

from __future__ import annotations

import math

import numpy as np

TWO_PI = 2.0 * math.pi


def theta_grid(m: int, *, half_offset: bool = False) -> np.ndarray:
    """Uniform angles on [-pi, pi): theta_j = -pi + 2*pi*(j + off)/m.

    With ``half_offset`` the grid is shifted by half a step, which keeps
    every node strictly between the standard nodes. Used by integrands
    with a singularity pinned on a standard node.
    """
    if m < 2:
        raise ValueError(f"need at least 2 grid points, got {m}")
    off = 0.5 if half_offset else 0.0
    return -math.pi + (TWO_PI / m) * (np.arange(m) + off)


def compensated_sum(values) -> float:
    """Exactly rounded sum of a real sequence, ascending index order."""
    return math.fsum(np.asarray(values, dtype=float))


def compensated_csum(values) -> complex:
    """Compensated sum of a complex sequence (real and imaginary parts)."""
    a = np.asarray(values, dtype=complex)
    return complex(math.fsum(a.real), math.fsum(a.imag))


def trapezoid_periodic(values) -> float:
    """(2*pi/M) times the compensated sum of real samples on the grid."""
    values = np.asarray(values, dtype=float)
    return (TWO_PI / values.size) * compensated_sum(values)


def ctrapezoid_periodic(values) -> complex:
    """(2*pi/M) times the compensated sum of complex samples on the grid."""
    values = np.asarray(values, dtype=complex)
    s = compensated_csum(values)
    return (TWO_PI / values.size) * s


def unit_phasors(m: int) -> np.ndarray:
    """The m-th roots of unity exp(2*pi*i*j/m), j = 0..m-1.

    When m is divisible by 4 the table is assembled from one quadrant by
    exact rotations (multiplication by i and -1), so the identity
    ``table[j + m//2] == -table[j]`` holds bitwise. Sums over full orbits
    of the table then cancel exactly, which keeps contour quadrature of
    pure powers exact even after scaling by large rho**(-k) factors.
    """
    if m % 4 == 0:
        quarter = np.exp(2j * math.pi * np.arange(m // 4) / m)
        return np.concatenate([quarter, 1j * quarter, -quarter, -1j * quarter])
    return np.exp(2j * math.pi * np.arange(m) / m)


def circle_phasors(m: int) -> np.ndarray:
    """exp(i*theta_j) on the standard grid, i.e. -unit_phasors(m)."""
    return -unit_phasors(m)


def circle_nodes(rho: float, m: int) -> np.ndarray:
    """Quadrature nodes rho*exp(i*theta_j) on the circle of radius rho."""
    if rho <= 0.0:
        raise ValueError(f"circle radius must be positive, got {rho}")
    return rho * circle_phasors(m)


def phase_powers(m: int, p: int) -> np.ndarray:
    """exp(i*p*theta_j) on the standard grid, by exact table lookup.

    Evaluating the power through the root-of-unity table avoids the noise
    of complex exponentiation and preserves the cancellation structure of
    the table.
    """
    tab = unit_phasors(m)
    idx = (p * np.arange(m)) % m
    sign = -1.0 if p % 2 else 1.0
    return sign * tab[idx]
